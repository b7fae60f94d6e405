#include "hypflex/variation.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hypflex/format.hpp"

namespace hypflex {

const char* to_string(RateMethod m)
{
    return m == RateMethod::dual ? "dual" : "finite-difference";
}

const char* to_string(FootCase c)
{
    switch (c) {
    case FootCase::inside: return "inside";
    case FootCase::beyond_a: return "beyond_a";
    case FootCase::beyond_b: return "beyond_b";
    }
    return "?";
}

namespace {

double rate_from_cos(const Angle<Dual1>& a, const char* name)
{
    if (std::abs(a.sin.value) < kMinDihedralSine)
        throw ConditioningError(std::string("dihedral angle at ") + name + " is too close to 0 or pi");
    return -a.cos.deriv / a.sin.value;
}

}  // namespace

DihedralRates dihedral_rates(const SuspensionParams& params, const FlexVelocities& vel, RateMethod method)
{
    params.validate();
    if (method == RateMethod::dual) {
        const auto d = dihedral_angles(params, vel, variable(0.0));
        return {rate_from_cos(d.ab, "AB"), rate_from_cos(d.na, "NA"), rate_from_cos(d.nb, "NB")};
    }
    const auto d0 = dihedral_angles(params, vel, 0.0);
    for (const auto& [a, name] : {std::pair{d0.ab, "AB"}, std::pair{d0.na, "NA"}, std::pair{d0.nb, "NB"}})
        if (std::abs(a.sin) < kMinDihedralSine)
            throw ConditioningError(std::string("dihedral angle at ") + name + " is too close to 0 or pi");
    auto rate = [&](auto pick) {
        return fd_derivative([&](double t) { return pick(dihedral_angles(params, vel, t)).radians(); }, 0.0,
                             kDefaultFdStep)
            .estimate;
    };
    return {rate([](const auto& d) { return d.ab; }), rate([](const auto& d) { return d.na; }),
            rate([](const auto& d) { return d.nb; })};
}

double schlafli_rate(const SuspensionParams& params, const FlexVelocities& vel, RateMethod method)
{
    const auto r = dihedral_rates(params, vel, method);
    const auto e = edge_lengths(params, vel, 0.0);
    return -2.0 * params.n * (e.a.value * r.ab + e.b.value * r.na + e.c.value * r.nb);
}

double mean_curvature_rate(const SuspensionParams& params, const FlexVelocities& vel)
{
    const auto m = tetra_metrics(params, vel, variable(0.0));
    const auto r = dihedral_rates(params, vel, RateMethod::dual);
    constexpr double pi = std::numbers::pi;
    // Per class: 2n edges, total dihedral theta = 2 * angle, so
    // 1/2 * 2n * [l' (pi - 2 angle) - l * 2 angle'].
    auto term = [&](const HypLength<Dual1>& l, const Angle<Dual1>& a, double rate) {
        const double angle = std::atan2(a.sin.value, a.cos.value);
        return l.value.deriv * (pi - 2.0 * angle) - l.value.value * 2.0 * rate;
    };
    return params.n * (term(m.edges.a, m.dihedrals.ab, r.ab) + term(m.edges.b, m.dihedrals.na, r.na) +
                       term(m.edges.c, m.dihedrals.nb, r.nb));
}

// Volume oracle ------------------------------------------------------------

double orthoscheme_volume(double a1, double a2, double a3)
{
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double c1 = std::cos(a1);
    const double c3 = std::cos(a3);
    const double s1 = std::sin(a1);
    const double s3 = std::sin(a3);
    const double c2 = std::cos(a2);
    const double disc = c2 * c2 - s1 * s1 * s3 * s3;
    if (disc < 0.0) throw DomainError("orthoscheme has an ideal or hyperideal vertex", disc);
    const double d = std::atan2(std::sqrt(disc), c1 * c3);
    auto L = [](double x) { return lobachevsky_lambda(x); };
    return 0.25 * (L(a1 + d) - L(a1 - d) + L(a3 + d) - L(a3 - d) - L(half_pi - a2 + d) + L(half_pi - a2 - d) +
                   2.0 * L(half_pi - d));
}

double orthoscheme_volume_from_legs(double height, double foot, double run)
{
    if (height <= 0.0 || run <= 0.0) return 0.0;
    const double sf = std::sinh(foot);
    // Right triangles NCF (at C), CFX (at F) and their link at X.
    const double a1 = std::atan2(std::tanh(height), sf);      // angle NFC, dihedral at FX
    const double a3 = std::atan2(std::tanh(run), sf);         // angle FCX, dihedral at NC
    const double eps = std::atan2(std::tanh(foot), std::sinh(run));  // angle FXC
    const double a2 = std::acos(std::cos(eps) * std::sin(a1));  // dihedral at NX
    return orthoscheme_volume(a1, a2, a3);
}

TetraVolume tetra_volume(double h, double p, double q, double alpha)
{
    const auto legs = DeformedLegs<double>{HypLength<double>::from_value(h), HypLength<double>::from_value(p),
                                           HypLength<double>::from_value(q)};
    const auto e = detail::edge_lengths_from_legs(legs, alpha);
    const double sin_delta = std::sin(alpha) * legs.q.sinh / e.a.sinh;
    const double cos_delta = (legs.p.cosh * e.a.cosh - legs.q.cosh) / (legs.p.sinh * e.a.sinh);
    const double cos_psi = (legs.q.cosh * e.a.cosh - legs.p.cosh) / (legs.q.sinh * e.a.sinh);

    // Foot F of the perpendicular from C to AB: sinh|CF| = sinh p sin(delta),
    // and tanh|FA| = tanh p |cos delta|, tanh|FB| = tanh q |cos psi|.
    const double foot = std::asinh(legs.p.sinh * sin_delta);
    const double run_a = std::atanh(std::tanh(p) * std::abs(cos_delta));
    const double run_b = std::atanh(std::tanh(q) * std::abs(cos_psi));
    const double va = orthoscheme_volume_from_legs(h, foot, run_a);
    const double vb = orthoscheme_volume_from_legs(h, foot, run_b);

    if (cos_delta < 0.0) return {vb - va, FootCase::beyond_a};
    if (cos_psi < 0.0) return {va - vb, FootCase::beyond_b};
    return {va + vb, FootCase::inside};
}

VolumeOracle volume_oracle(const SuspensionParams& params, const FlexVelocities& vel, double t)
{
    params.validate();
    const auto legs = deformed_legs(params, vel, t);
    const auto tv = tetra_volume(legs.h.value, legs.p.value, legs.q.value, params.alpha);
    return {4.0 * params.n * tv.volume, tv.foot};
}

FdResult volume_oracle_rate(const SuspensionParams& params, const FlexVelocities& vel, double base_step)
{
    return fd_derivative([&](double t) { return volume_oracle(params, vel, t).volume; }, 0.0, base_step);
}

// Report -------------------------------------------------------------------

VariationReport variation_report(const SuspensionParams& params, const FlexVelocities& vel, RateMethod method,
                                 bool with_oracle)
{
    VariationReport r;
    r.params = params;
    r.velocities = vel;
    r.method = method;
    r.rates = dihedral_rates(params, vel, method);
    const auto e = edge_lengths(params, vel, 0.0);
    r.dV_dt = -2.0 * params.n * (e.a.value * r.rates.ab + e.b.value * r.rates.na + e.c.value * r.rates.nb);
    r.dM_dt = mean_curvature_rate(params, vel);
    r.max_edge_rate = stationarity_report(params, vel);
    if (with_oracle) r.oracle_dV_dt = volume_oracle_rate(params, vel).estimate;
    return r;
}

std::string to_json(const VariationReport& r)
{
    std::ostringstream os;
    os << "{\n";
    os << "  \"params\": {\"n\": " << r.params.n << ", \"h\": " << fmt17(r.params.h) << ", \"p\": "
       << fmt17(r.params.p) << ", \"q\": " << fmt17(r.params.q) << ", \"alpha\": " << fmt17(r.params.alpha)
       << "},\n";
    os << "  \"velocities\": {\"u\": " << fmt17(r.velocities.u) << ", \"v\": " << fmt17(r.velocities.v)
       << ", \"w\": " << fmt17(r.velocities.w) << "},\n";
    os << "  \"method\": \"" << to_string(r.method) << "\",\n";
    os << "  \"rate_AB\": " << fmt17(r.rates.ab) << ",\n";
    os << "  \"rate_NA\": " << fmt17(r.rates.na) << ",\n";
    os << "  \"rate_NB\": " << fmt17(r.rates.nb) << ",\n";
    os << "  \"dV_dt\": " << fmt17(r.dV_dt) << ",\n";
    os << "  \"dM_dt\": " << fmt17(r.dM_dt) << ",\n";
    os << "  \"max_edge_rate\": " << fmt17(r.max_edge_rate) << ",\n";
    os << "  \"oracle_dV_dt\": " << (r.oracle_dV_dt ? fmt17(*r.oracle_dV_dt) : std::string("null")) << "\n";
    os << "}\n";
    return os.str();
}

}  // namespace hypflex
