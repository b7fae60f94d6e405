#include "hypflex/tetra_metrics.hpp"

#include <cmath>
#include <string>

namespace hypflex {

SuspensionParams SuspensionParams::make(int n, double h, double p, double q)
{
    SuspensionParams s{n, h, p, q, n > 0 ? std::numbers::pi / n : 0.0};
    s.validate();
    return s;
}

void SuspensionParams::validate() const
{
    if (n < 3) throw InvalidParams("petal count n must be at least 3, got " + std::to_string(n));
    if (!(h > 0.0) || !std::isfinite(h)) throw InvalidParams("h must be positive and finite");
    if (!(p > 0.0) || !std::isfinite(p)) throw InvalidParams("p must be positive and finite");
    if (!(q > 0.0) || !std::isfinite(q)) throw InvalidParams("q must be positive and finite");
    if (alpha != std::numbers::pi / n) throw InvalidParams("alpha must equal pi / n");
}

SuspensionParams reference_params()
{
    return SuspensionParams::make(6, std::atanh(0.5), std::atanh(0.5), std::atanh(std::sqrt(3.0) / 2.0));
}

FlexVelocities reference_velocities()
{
    return {std::sqrt(3.0) / 4.0, -std::sqrt(3.0) / 4.0, -0.25};
}

}  // namespace hypflex
