#ifndef WAVEBREAK_CSV_HPP
#define WAVEBREAK_CSV_HPP

#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace wavebreak {

// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double v);

// CSV assembled in memory; one header row, then data rows.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> columns);

    void begin_row();
    void add(double v);
    void add(const std::string& v);
    void add(long long v);

    std::string str() const;

  private:
    std::size_t n_cols_;
    std::size_t row_fill_ = 0;
    std::ostringstream out_;
};

// Writes `content` to `path` atomically: a temp file in the same directory is
// renamed over the target, so a crashed run leaves no partial file. Parent
// directories are created as needed.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace wavebreak

#endif
