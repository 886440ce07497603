#ifndef WAVEBREAK_FIGURES_HPP
#define WAVEBREAK_FIGURES_HPP

#include <filesystem>
#include <vector>

namespace wavebreak::figures {

enum class FigureKind {
    PhasePortrait,  // vector field arrows + saddle-level first-integral contour + separatrix
    RegionMap,      // outcome raster + separatrix + classical threshold line m1 + m2 = -2
};

struct FigureOptions {
    double x_min = -8.0, x_max = -0.05;
    double y_min = 0.05, y_max = 8.0;
    int raster_nx = 150, raster_ny = 150;  // RegionMap resolution
    int arrow_count = 24;                  // PhasePortrait arrows per axis
    int threads = 0;
};

// Writes plot-ready CSV files plus a gnuplot script under out_dir and
// returns the paths written.
std::vector<std::filesystem::path> emit_figure_data(FigureKind kind,
                                                    const std::filesystem::path& out_dir,
                                                    const FigureOptions& opts = {});

}  // namespace wavebreak::figures

#endif
