#include "qgs/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qgs {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, int budget,
                             const NelderMeadOptions& opt) {
    if (x0.empty()) throw std::invalid_argument("nelder_mead: empty start point");
    if (budget < 1) throw std::invalid_argument("nelder_mead: budget must be >= 1");

    const std::size_t n = x0.size();
    NelderMeadResult result;
    result.best_f = std::numeric_limits<double>::infinity();

    auto feval = [&](std::span<const double> x) {
        const double v = f(x);
        ++result.evaluations;
        if (v < result.best_f) {
            result.best_f = v;
            result.best_x.assign(x.begin(), x.end());
        }
        return v;
    };

    // initial simplex: x0 plus one step along each axis
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opt.initial_step;
    std::vector<double> fx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (result.evaluations >= budget) return result;
        fx[i] = feval(pts[i]);
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xk(n);

    while (result.evaluations < budget) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
        const std::size_t best = order[0], second_worst = order[n - 1], worst = order[n];
        if (std::abs(fx[worst] - fx[best]) <= opt.f_tolerance) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[order[i]][j];
        for (double& c : centroid) c /= static_cast<double>(n);

        for (std::size_t j = 0; j < n; ++j)
            xr[j] = centroid[j] + opt.reflection * (centroid[j] - pts[worst][j]);
        const double fr = feval(xr);
        if (result.evaluations >= budget) break;

        if (fr < fx[best]) {
            for (std::size_t j = 0; j < n; ++j)
                xe[j] = centroid[j] + opt.expansion * (xr[j] - centroid[j]);
            const double fe = feval(xe);
            if (fe < fr) {
                pts[worst] = xe;
                fx[worst] = fe;
            } else {
                pts[worst] = xr;
                fx[worst] = fr;
            }
            continue;
        }
        if (fr < fx[second_worst]) {
            pts[worst] = xr;
            fx[worst] = fr;
            continue;
        }

        const std::vector<double>& toward = fr < fx[worst] ? xr : pts[worst];
        for (std::size_t j = 0; j < n; ++j)
            xk[j] = centroid[j] + opt.contraction * (toward[j] - centroid[j]);
        const double fk = feval(xk);
        if (result.evaluations >= budget) break;
        if (fk < fx[worst]) {
            pts[worst] = xk;
            fx[worst] = fk;
            continue;
        }

        for (std::size_t i = 1; i <= n; ++i) {
            if (result.evaluations >= budget) return result;
            for (std::size_t j = 0; j < n; ++j)
                pts[order[i]][j] =
                    pts[best][j] + opt.shrink * (pts[order[i]][j] - pts[best][j]);
            fx[order[i]] = feval(pts[order[i]]);
        }
    }
    return result;
}

} // namespace qgs
