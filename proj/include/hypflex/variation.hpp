#pragma once

// First-order variations along a deformation of the suspension: dihedral
// angle rates, the volume rate through the Schlaefli formula
//     dV = -1/2 sum_e l_e d(theta_e),
// the integral mean curvature rate, and an independent closed-form volume
// used to cross-check the Schlaefli rate by finite differences.

#include <optional>
#include <string>

#include "hypflex/flex.hpp"
#include "hypflex/numdiff.hpp"
#include "hypflex/tetra_metrics.hpp"

namespace hypflex {

enum class RateMethod { dual, finite_difference };

const char* to_string(RateMethod m);

/// d/dt at t = 0 of the tetrahedron dihedral angles at AB, NA and NB.
struct DihedralRates {
    double ab = 0.0;
    double na = 0.0;
    double nb = 0.0;
};

inline constexpr double kMinDihedralSine = 1e-8;
inline constexpr double kDefaultFdStep = 1e-3;

/// Dual method: differentiates the cosine of each dihedral exactly and uses
/// d(angle)/dt = -(d cos/dt) / sin. Finite-difference method: Richardson
/// extrapolated central differences of the dihedral angles.
/// Throws ConditioningError if a dihedral sine falls below kMinDihedralSine.
DihedralRates dihedral_rates(const SuspensionParams& params, const FlexVelocities& vel,
                             RateMethod method = RateMethod::dual);

/// dV/dt at t = 0: -2n (a rate_ab + b rate_na + c rate_nb). Each edge class
/// has 2n edges whose dihedral is twice the tetrahedron's.
double schlafli_rate(const SuspensionParams& params, const FlexVelocities& vel,
                     RateMethod method = RateMethod::dual);

/// dM/dt at t = 0 for M = 1/2 sum_e l_e (pi - theta_e).
double mean_curvature_rate(const SuspensionParams& params, const FlexVelocities& vel);

// Volume oracle ------------------------------------------------------------

/// Where the foot F of the perpendicular from C to the line AB falls.
enum class FootCase { inside, beyond_a, beyond_b };

const char* to_string(FootCase c);

/// Volume of the hyperbolic orthoscheme with essential dihedral angles
/// a1, a2, a3 (the remaining three are right angles):
///
///   V = 1/4 [ L(a1 + d) - L(a1 - d) + L(a3 + d) - L(a3 - d)
///             - L(pi/2 - a2 + d) + L(pi/2 - a2 - d) + 2 L(pi/2 - d) ],
///   tan d = sqrt(cos^2 a2 - sin^2 a1 sin^2 a3) / (cos a1 cos a3),
///
/// with L the Lobachevsky function (Kellerhals; Vinberg, Geometry II).
double orthoscheme_volume(double a1, double a2, double a3);

/// Orthoscheme N C F X with |NC| = height, |CF| = foot, |FX| = run and right
/// angles NCF, CFX and NC orthogonal to the plane CFX.
double orthoscheme_volume_from_legs(double height, double foot, double run);

struct TetraVolume {
    double volume = 0.0;
    FootCase foot = FootCase::inside;
};

/// Volume of the brick N A B C, split along the perpendicular from C to AB
/// into two orthoschemes (signed when the foot leaves the segment).
TetraVolume tetra_volume(double h, double p, double q, double alpha);

struct VolumeOracle {
    double volume = 0.0;  // 4n * tetra volume
    FootCase foot = FootCase::inside;
};

VolumeOracle volume_oracle(const SuspensionParams& params, const FlexVelocities& vel, double t);

/// Central-difference derivative of the volume oracle at t = 0.
FdResult volume_oracle_rate(const SuspensionParams& params, const FlexVelocities& vel,
                            double base_step = kDefaultFdStep);

// Report -------------------------------------------------------------------

struct VariationReport {
    SuspensionParams params;
    FlexVelocities velocities;
    RateMethod method = RateMethod::dual;
    DihedralRates rates;
    double dV_dt = 0.0;
    double dM_dt = 0.0;
    double max_edge_rate = 0.0;
    std::optional<double> oracle_dV_dt;
};

VariationReport variation_report(const SuspensionParams& params, const FlexVelocities& vel,
                                 RateMethod method = RateMethod::dual, bool with_oracle = false);

/// JSON object with 17 significant digits per number.
std::string to_json(const VariationReport& report);

}  // namespace hypflex
