#include "hypflex/flex.hpp"

#include <algorithm>
#include <cmath>

#include "hypflex/dual.hpp"

namespace hypflex {

const char* to_string(FlexBranch b)
{
    return b == FlexBranch::minus ? "minus" : "plus";
}

FlexBranch parse_branch(const std::string& s)
{
    if (s == "minus" || s == "-") return FlexBranch::minus;
    if (s == "plus" || s == "+") return FlexBranch::plus;
    throw std::invalid_argument("unknown branch '" + s + "' (expected minus or plus)");
}

FlexVelocities velocity_from_u(const SuspensionParams& params, double u)
{
    params.validate();
    const double th = std::tanh(params.h);
    return {u, -th / std::tanh(params.p) * u, -th / std::tanh(params.q) * u};
}

FlexResidual flex_residual(const SuspensionParams& params)
{
    params.validate();
    const double ratio = std::tanh(params.p) / std::tanh(params.q);
    const double s = std::sin(params.alpha);
    const double c = std::cos(params.alpha);
    return {ratio - (1.0 - s) / c, ratio - (1.0 + s) / c};
}

bool is_flexible(const SuspensionParams& params, double tol)
{
    const auto r = flex_residual(params);
    return std::min(std::abs(r.minus), std::abs(r.plus)) <= tol;
}

double solve_q_for_flex(double p, double alpha, FlexBranch branch)
{
    if (!(p > 0.0)) throw InvalidParams("solve_q_for_flex: p must be positive");
    const double s = std::sin(alpha);
    const double arg = std::tanh(p) * std::cos(alpha) / (branch == FlexBranch::minus ? 1.0 - s : 1.0 + s);
    if (!(arg > 0.0 && arg < 1.0))
        throw NoSolutionError("no q solves the flex relation on the " + std::string(to_string(branch)) +
                              " branch: tanh q would be " + detail::fmt_cos(arg));
    return std::atanh(arg);
}

EdgeRates edge_length_rates(const SuspensionParams& params, const FlexVelocities& vel)
{
    const auto e = edge_lengths(params, vel, variable(0.0));
    return {e.a.value.deriv, e.b.value.deriv, e.c.value.deriv};
}

double stationarity_report(const SuspensionParams& params, const FlexVelocities& vel)
{
    params.validate();
    const auto r = edge_length_rates(params, vel);
    return std::max({std::abs(r.a), std::abs(r.b), std::abs(r.c)});
}

double ns_distance_rate(const FlexVelocities& vel)
{
    return 2.0 * vel.u;
}

// Ceva ---------------------------------------------------------------------

void CevaConfig::validate() const
{
    for (const auto& tri : {initial, moved})
        for (const auto& x : tri)
            if (hyperboloid_residual(x) > 1e-9 || !(x[0] > 0.0))
                throw InvalidParams("CevaConfig: triangle vertex is not on the hyperboloid");
    if (const auto* e = std::get_if<EdgePointSpec>(&target)) {
        if (e->edge < 0 || e->edge > 2) throw InvalidParams("CevaConfig: edge index must be 0, 1 or 2");
        if (!(e->ratio >= 0.0) || !std::isfinite(e->ratio))
            throw InvalidParams("CevaConfig: edge ratio must be finite and nonnegative");
    } else {
        const auto& s = std::get<InteriorPointSpec>(target);
        for (double r : {s.ratio_bc, s.ratio_ca, s.ratio_ab})
            if (!(r > 0.0) || !std::isfinite(r))
                throw InvalidParams("CevaConfig: cevian feet must lie strictly inside their edges");
    }
}

MinkowskiPoint point_by_sinh_ratio(const MinkowskiPoint& x, const MinkowskiPoint& y, double ratio)
{
    // P = (sinh|Py| x + sinh|xP| y) / sinh|xy|, so P is proportional to x + ratio * y.
    return normalize_point(x + ratio * y);
}

double sinh_ratio(const MinkowskiPoint& x, const MinkowskiPoint& p, const MinkowskiPoint& y)
{
    return std::sinh(hyp_distance(x, p)) / std::sinh(hyp_distance(p, y));
}

MinkowskiPoint intersect_geodesics(const MinkowskiPoint& p1, const MinkowskiPoint& p2, const MinkowskiPoint& q1,
                                   const MinkowskiPoint& q2)
{
    // Each geodesic is the hyperboloid section of a 2-plane through the origin.
    // Coplanar geodesics span a 3-space, so [p1 p2 -q1 -q2] has a one-dimensional
    // kernel c and the meeting point is c0 p1 + c1 p2.
    Eigen::Matrix4d m;
    m << p1, p2, -q1, -q2;
    Eigen::JacobiSVD<Eigen::Matrix4d> svd(m, Eigen::ComputeFullV);
    const Eigen::Vector4d c = svd.matrixV().col(3);
    const Eigen::Vector4d x = c[0] * p1 + c[1] * p2;
    if (!(minkowski_dot(x, x) < 0.0)) throw GeometryError("geodesics do not meet inside hyperbolic space");
    return normalize_point(x);
}

namespace {

MinkowskiPoint locate(const std::array<MinkowskiPoint, 3>& tri, const EdgePointSpec& e)
{
    const auto& x = tri[static_cast<std::size_t>(e.edge)];
    const auto& y = tri[static_cast<std::size_t>((e.edge + 1) % 3)];
    return point_by_sinh_ratio(x, y, e.ratio);
}

CevaResult locate(const std::array<MinkowskiPoint, 3>& tri, const InteriorPointSpec& s, double tol)
{
    const auto& [a, b, c] = tri;
    const MinkowskiPoint foot_bc = point_by_sinh_ratio(b, c, s.ratio_bc);
    const MinkowskiPoint foot_ca = point_by_sinh_ratio(c, a, s.ratio_ca);
    const MinkowskiPoint foot_ab = point_by_sinh_ratio(a, b, s.ratio_ab);
    CevaResult r;
    r.point = intersect_geodesics(a, foot_bc, b, foot_ca);
    r.third_cevian_residual = distance_to_geodesic(r.point, c, foot_ab);
    if (r.third_cevian_residual > tol)
        throw GeometryError("cevians are not concurrent: third cevian misses by " +
                            detail::fmt_cos(r.third_cevian_residual));
    return r;
}

}  // namespace

CevaResult ceva_track_point(const CevaConfig& config)
{
    config.validate();
    if (const auto* e = std::get_if<EdgePointSpec>(&config.target)) return {locate(config.moved, *e), 0.0};
    const auto& s = std::get<InteriorPointSpec>(config.target);
    // The configuration must already be consistent at t = 0.
    locate(config.initial, s, config.tolerance);
    return locate(config.moved, s, config.tolerance);
}

}  // namespace hypflex
