#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qgs {

// Nelder-Mead with the standard fixed coefficients. Every objective call
// counts against the budget; the search stops when the budget is exhausted
// or the simplex collapses.
struct NelderMeadOptions {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    double initial_step = 0.4;
    double f_tolerance = 1e-12; // simplex spread below this ends the run
};

struct NelderMeadResult {
    std::vector<double> best_x;
    double best_f = 0.0;
    int evaluations = 0;
};

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, int budget,
                             const NelderMeadOptions& options = {});

} // namespace qgs
