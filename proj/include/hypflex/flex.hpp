#pragma once

// Infinitesimal flexes of the suspension.
//
// The deformation moves N, S, A_i, B_i radially from the fixed center C with
// rates u, v, w. Stationarity of |NA| and |NB| at t = 0 fixes v and w in terms
// of u; stationarity of |AB| then holds iff
//
//     tanh p / tanh q = (1 -+ sin alpha) / cos alpha.

#include <array>
#include <variant>

#include "hypflex/minkowski.hpp"
#include "hypflex/tetra_metrics.hpp"

namespace hypflex {

enum class FlexBranch { minus, plus };

const char* to_string(FlexBranch b);
FlexBranch parse_branch(const std::string& s);

inline constexpr double kDefaultFlexTolerance = 1e-10;

/// v = -(tanh h / tanh p) u,  w = -(tanh h / tanh q) u.
FlexVelocities velocity_from_u(const SuspensionParams& params, double u);

struct FlexResidual {
    double minus = 0.0;
    double plus = 0.0;

    double on(FlexBranch b) const { return b == FlexBranch::minus ? minus : plus; }
};

/// residual = tanh p / tanh q - (1 -+ sin alpha) / cos alpha on each branch.
FlexResidual flex_residual(const SuspensionParams& params);

bool is_flexible(const SuspensionParams& params, double tol = kDefaultFlexTolerance);

/// q = artanh(tanh p cos alpha / (1 -+ sin alpha)).
///
/// The plus branch always has a solution for p > 0, alpha in (0, pi/2). The
/// minus branch needs tanh p < tan(pi/4 - alpha/2); otherwise NoSolutionError.
double solve_q_for_flex(double p, double alpha, FlexBranch branch);

/// d/dt of the three edge lengths a = |AB|, b = |NA|, c = |NB| at t = 0.
struct EdgeRates {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

EdgeRates edge_length_rates(const SuspensionParams& params, const FlexVelocities& vel);

/// Largest |d(edge length)/dt| at t = 0 over the edge classes.
double stationarity_report(const SuspensionParams& params, const FlexVelocities& vel);

/// d/dt dist(N(t), S(t)) = 2u. A nonzero value makes the flex nontrivial.
double ns_distance_rate(const FlexVelocities& vel);

// Ceva tracking ------------------------------------------------------------

/// Point of an edge given by r = sinh|XP| / sinh|PY| for the edge X -> Y.
struct EdgePointSpec {
    int edge = 0;  // 0: A->B, 1: B->C, 2: C->A
    double ratio = 1.0;
};

/// Interior point given by its three cevian feet:
///   on BC: sinh|B A~| / sinh|A~ C|, on CA: sinh|C B~| / sinh|B~ A|,
///   on AB: sinh|A C~| / sinh|C~ B|.
/// Ceva requires the product of the three ratios to be 1.
struct InteriorPointSpec {
    double ratio_bc = 1.0;
    double ratio_ca = 1.0;
    double ratio_ab = 1.0;
};

struct CevaConfig {
    std::array<MinkowskiPoint, 3> initial;  // A, B, C at t = 0
    std::array<MinkowskiPoint, 3> moved;    // A(t), B(t), C(t)
    std::variant<EdgePointSpec, InteriorPointSpec> target;
    double tolerance = 1e-10;

    void validate() const;
};

struct CevaResult {
    MinkowskiPoint point;
    double third_cevian_residual = 0.0;  // distance from point to the unused cevian
};

/// Point on the geodesic segment x -> y with sinh|xP| / sinh|Py| = ratio.
MinkowskiPoint point_by_sinh_ratio(const MinkowskiPoint& x, const MinkowskiPoint& y, double ratio);

/// sinh|xP| / sinh|Py|.
double sinh_ratio(const MinkowskiPoint& x, const MinkowskiPoint& p, const MinkowskiPoint& y);

/// Intersection of the geodesics through (p1, p2) and (q1, q2), which must be
/// coplanar. Throws GeometryError if they do not meet inside the model.
MinkowskiPoint intersect_geodesics(const MinkowskiPoint& p1, const MinkowskiPoint& p2, const MinkowskiPoint& q1,
                                   const MinkowskiPoint& q2);

/// Position at time t of the point described by config.target, using the
/// moved triangle. Interior points intersect the cevians from A and B and
/// check the cevian from C against config.tolerance (GeometryError if off).
CevaResult ceva_track_point(const CevaConfig& config);

}  // namespace hypflex
