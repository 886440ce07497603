#ifndef WAVEBREAK_SCENARIO_HPP
#define WAVEBREAK_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wavebreak/kernel.hpp"
#include "wavebreak/ode.hpp"
#include "wavebreak/profile.hpp"
#include "wavebreak/threshold.hpp"
#include "wavebreak/whitham.hpp"

namespace wavebreak::scenario {

// Serializable slack description; make() builds the callable form.
struct SlackSpec {
    enum class Kind { Zero, Constant, PiecewiseRandom, Sinusoid };
    Kind kind = Kind::Zero;
    double a = 0.0, b = 0.0;                      // Constant
    std::optional<std::uint64_t> seed;            // PiecewiseRandom; falls back to the scenario seed
    int pieces = 8;
    double span = 10.0;
    double max_value = 2.0;
    double amp_a = 1.0, amp_b = 1.0, omega = 1.0, phase = 0.0;  // Sinusoid

    ode::Slack make(std::uint64_t scenario_seed) const;
};

struct ClassifyParams {
    std::vector<PhasePoint> points;
    double k0 = 1.0;
};

struct SeparatrixParams {
    double x_min = -8.0;
    double x_max = -1.4715177646857693;  // -4/e
    int count = 500;
};

struct OdeRunParams {
    PhasePoint start{-2.0, 0.0};
    SlackSpec slack;
    double horizon = 100.0;
    double sample_dt = 0.0;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
};

struct OdeSweepParams {
    double x_min = -8.0, x_max = -0.05;
    double y_min = 0.05, y_max = 8.0;
    int nx = 200, ny = 200;
    double band = 0.05;
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
};

struct PdeRunParams {
    pde::ProfileSpec profile;
    pde::Kernel kernel;
    pde::SolverOptions solver;
};

struct PdeSweepParams {
    std::vector<pde::ProfileSpec> profiles;
    pde::Kernel kernel;
    pde::SolverOptions solver;
};

struct ReportParams {
    std::vector<std::string> inputs;  // artifact files from prior scenarios
};

struct Scenario {
    enum class Kind { Classify, Separatrix, OdeRun, OdeSweep, PdeRun, PdeSweep, Report };
    Kind kind = Kind::Classify;
    std::uint64_t seed = 0;
    std::string output_prefix;  // defaults to the kind name
    std::variant<ClassifyParams, SeparatrixParams, OdeRunParams, OdeSweepParams, PdeRunParams,
                 PdeSweepParams, ReportParams>
        params;
};

// Parses and validates a scenario. Unknown keys are rejected with the full
// field path; parse errors carry the line number. Throws ConfigError.
Scenario parse_scenario_text(const std::string& text, const std::string& origin = "<string>");
Scenario parse_scenario_file(const std::filesystem::path& path);

// Canonical JSON serialization; parse(serialize(s)) reproduces s.
std::string serialize_scenario(const Scenario& s);

struct RunOverrides {
    std::optional<std::uint64_t> seed;
    int threads = 0;
    std::optional<double> tol;  // kind-specific primary tolerance
};

struct RunResult {
    std::vector<std::filesystem::path> artifacts;
    std::string summary;  // one line per scenario
};

// Executes the scenario, writing artifacts atomically under out_dir.
// Identical scenario + seed produce byte-identical files.
RunResult run_scenario(const Scenario& s, const std::filesystem::path& out_dir,
                       const RunOverrides& overrides = {});

}  // namespace wavebreak::scenario

#endif
