#pragma once

// Metric elements of the brick tetrahedron N A B C of the suspension, as
// functions of the deformation parameter t.
//
// C is the star center, N the upper pole with CN orthogonal to the base,
// A an inner (notch) vertex and B an outer (tip) vertex of the star, with
// angle ACB = pi/n. Along the deformation C stays fixed and
//   |CN| = h + t u,   |CA| = p + t v,   |CB| = q + t w.

#include <numbers>

#include "hypflex/hyp_kernel.hpp"

namespace hypflex {

/// Shape numbers of the suspension.
struct SuspensionParams {
    int n = 6;
    double h = 0.0;  // |CN|
    double p = 0.0;  // |CA|
    double q = 0.0;  // |CB|
    double alpha = 0.0;  // pi / n

    static SuspensionParams make(int n, double h, double p, double q);

    void validate() const;
};

/// Rates of change of h, p and q along the deformation.
struct FlexVelocities {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
};

/// The reference instance: n = 6, h = p = artanh(1/2), q = artanh(sqrt(3)/2).
SuspensionParams reference_params();

/// Flex velocities of the reference instance: u = sqrt(3)/4, v = -sqrt(3)/4, w = -1/4.
FlexVelocities reference_velocities();

template <typename S>
struct DeformedLegs {
    HypLength<S> h;  // CN
    HypLength<S> p;  // CA
    HypLength<S> q;  // CB
};

template <typename S>
struct EdgeLengths {
    HypLength<S> a;  // AB
    HypLength<S> b;  // NA
    HypLength<S> c;  // NB
};

template <typename S>
struct PlaneAngles {
    Angle<S> beta;    // CAN
    Angle<S> gamma;   // BAN
    Angle<S> delta;   // CAB
    Angle<S> phi;     // CBN
    Angle<S> psi;     // CBA
    Angle<S> theta;   // ABN
    Angle<S> lambda;  // ANB
    Angle<S> mu;      // CNA
    Angle<S> nu;      // CNB
};

/// Dihedral angles of the tetrahedron at its edges AB, NA and NB.
template <typename S>
struct DihedralAngles {
    Angle<S> ab;
    Angle<S> na;
    Angle<S> nb;
};

template <typename S>
struct TetraMetrics {
    S t{};
    DeformedLegs<S> legs;
    EdgeLengths<S> edges;
    PlaneAngles<S> angles;
    DihedralAngles<S> dihedrals;
};

template <typename S>
DeformedLegs<S> deformed_legs(const SuspensionParams& params, const FlexVelocities& vel, const S& t)
{
    const S h = params.h + t * vel.u;
    const S p = params.p + t * vel.v;
    const S q = params.q + t * vel.w;
    if (!(value_of(h) > 0.0)) throw DeformationRangeError("h", value_of(h));
    if (!(value_of(p) > 0.0)) throw DeformationRangeError("p", value_of(p));
    if (!(value_of(q) > 0.0)) throw DeformationRangeError("q", value_of(q));
    return {HypLength<S>::from_value(h), HypLength<S>::from_value(p), HypLength<S>::from_value(q)};
}

namespace detail {

template <typename S>
EdgeLengths<S> edge_lengths_from_legs(const DeformedLegs<S>& legs, double alpha)
{
    // NA and NB are hypotenuses of the right triangles NCA and NCB; AB comes
    // from the cosine law in ACB, where the angle at C stays pi/n.
    return {hyp_side_from_angle(legs.p.value, legs.q.value, S(alpha)),
            hyp_pythagoras(legs.h.value, legs.p.value),
            hyp_pythagoras(legs.h.value, legs.q.value)};
}

template <typename S>
PlaneAngles<S> plane_angles_from(const DeformedLegs<S>& L, const EdgeLengths<S>& E, double alpha)
{
    const auto& [H, P, Q] = L;
    const auto& [a, b, c] = E;
    const double sin_alpha = std::sin(alpha);

    PlaneAngles<S> out;
    // Right triangles NCA and NCB.
    out.beta = {H.sinh / b.sinh, P.sinh * H.cosh / b.sinh};
    out.mu = {P.sinh / b.sinh, H.sinh * P.cosh / b.sinh};
    out.phi = {H.sinh / c.sinh, Q.sinh * H.cosh / c.sinh};
    out.nu = {Q.sinh / c.sinh, H.sinh * Q.cosh / c.sinh};

    // Base triangle ACB: cosines from the cosine law, sines from the sine law.
    out.delta = {sin_alpha * Q.sinh / a.sinh, (P.cosh * a.cosh - Q.cosh) / (P.sinh * a.sinh)};
    out.psi = {sin_alpha * P.sinh / a.sinh, (Q.cosh * a.cosh - P.cosh) / (Q.sinh * a.sinh)};

    // Lateral face ANB.
    out.theta = hyp_angle_from_sides(b, a, c);
    out.gamma = hyp_angle_from_sides(c, a, b);
    out.lambda = hyp_angle_from_sides(a, b, c);
    return out;
}

template <typename S>
DihedralAngles<S> dihedrals_from(const PlaneAngles<S>& A, double alpha)
{
    // Link triangle at A on the unit sphere: sides beta (C_A N_A), gamma
    // (N_A B_A), delta (C_A B_A), right angle at C_A. The angle at B_A is the
    // dihedral at AB, the angle at N_A the dihedral at NA.
    DihedralAngles<S> out;
    out.ab = sph_angle_from_sides(A.gamma, A.delta, A.beta);
    out.na = sph_angle_from_sides(A.gamma, A.beta, A.delta);
    out.ab.sin = A.beta.sin / A.gamma.sin;
    out.na.sin = A.delta.sin / A.gamma.sin;

    // Link triangle at B: sides phi (C_B N_B), theta (N_B A_B), psi (C_B A_B).
    // The sine comes from the link at N, whose angle at C_N is alpha.
    out.nb = sph_angle_from_sides(A.phi, A.theta, A.psi);
    out.nb.sin = std::sin(alpha) * A.mu.sin / A.lambda.sin;
    return out;
}

}  // namespace detail

template <typename S>
EdgeLengths<S> edge_lengths(const SuspensionParams& params, const FlexVelocities& vel, const S& t)
{
    return detail::edge_lengths_from_legs(deformed_legs(params, vel, t), params.alpha);
}

template <typename S>
PlaneAngles<S> plane_angles(const SuspensionParams& params, const FlexVelocities& vel, const S& t)
{
    const auto legs = deformed_legs(params, vel, t);
    return detail::plane_angles_from(legs, detail::edge_lengths_from_legs(legs, params.alpha), params.alpha);
}

template <typename S>
DihedralAngles<S> dihedral_angles(const SuspensionParams& params, const FlexVelocities& vel, const S& t)
{
    return detail::dihedrals_from(plane_angles(params, vel, t), params.alpha);
}

/// Full snapshot of the deformed tetrahedron at parameter t.
template <typename S>
TetraMetrics<S> tetra_metrics(const SuspensionParams& params, const FlexVelocities& vel, const S& t)
{
    params.validate();
    TetraMetrics<S> m;
    m.t = t;
    m.legs = deformed_legs(params, vel, t);
    m.edges = detail::edge_lengths_from_legs(m.legs, params.alpha);
    m.angles = detail::plane_angles_from(m.legs, m.edges, params.alpha);
    m.dihedrals = detail::dihedrals_from(m.angles, params.alpha);
    return m;
}

}  // namespace hypflex
