#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hypflex {

struct FdResult {
    double estimate = 0.0;
    double error = 0.0;  // last correction in the extrapolation tableau
};

/// Central difference at t0 refined by Richardson extrapolation over the
/// steps base_step, base_step/2, ..., base_step/2^(levels-1). Throws
/// std::domain_error if any sample is not finite.
inline FdResult fd_derivative(const std::function<double(double)>& f, double t0, double base_step = 1e-3,
                              int levels = 3)
{
    if (levels < 1) throw std::invalid_argument("fd_derivative: levels must be >= 1");
    std::vector<std::vector<double>> table(levels);
    double step = base_step;
    for (int i = 0; i < levels; ++i, step *= 0.5) {
        const double fp = f(t0 + step);
        const double fm = f(t0 - step);
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw std::domain_error("fd_derivative: non-finite sample");
        table[i].push_back((fp - fm) / (2.0 * step));
        double factor = 4.0;
        for (int j = 1; j <= i; ++j, factor *= 4.0)
            table[i].push_back(table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0));
    }
    const auto& last = table.back();
    FdResult r;
    r.estimate = last.back();
    r.error = last.size() > 1 ? std::abs(last.back() - last[last.size() - 2]) : 0.0;
    return r;
}

}  // namespace hypflex
