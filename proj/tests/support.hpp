#pragma once

// Shared generators and independent oracles for the test binaries.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hypflex/flex.hpp"
#include "hypflex/minkowski.hpp"
#include "hypflex/tetra_metrics.hpp"

namespace testsupport {

using namespace hypflex;

inline std::mt19937_64 make_rng(std::uint64_t salt = 0)
{
    return std::mt19937_64(0x5eed5eedULL ^ salt);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

struct Instance {
    SuspensionParams params;
    FlexVelocities vel;
    FlexBranch branch = FlexBranch::minus;
};

/// Random flexible instance: n in [n_lo, n_hi], q solved from p on a branch
/// that admits a solution, u drawn away from zero.
inline Instance random_flexible(std::mt19937_64& rng, int n_lo = 3, int n_hi = 8)
{
    for (;;) {
        const int n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
        const double alpha = std::numbers::pi / n;
        const double p = uniform(rng, 0.15, 1.3);
        const FlexBranch branch = rng() % 2 ? FlexBranch::plus : FlexBranch::minus;
        double q = 0.0;
        try {
            q = solve_q_for_flex(p, alpha, branch);
        } catch (const NoSolutionError&) {
            continue;
        }
        if (q < 0.05 || q > 3.0) continue;
        const double h = uniform(rng, 0.2, 1.5);
        const double u = uniform(rng, 0.2, 1.0) * (rng() % 2 ? 1.0 : -1.0);
        const auto params = SuspensionParams::make(n, h, p, q);
        const auto vel = velocity_from_u(params, u);
        // Keep every leg well clear of collapse for |t| <= 0.1.
        const double margin = std::min({h - 0.1 * std::abs(vel.u), p - 0.1 * std::abs(vel.v), q - 0.1 * std::abs(vel.w)});
        if (margin < 0.02) continue;
        return {params, vel, branch};
    }
}

/// Random hyperbolic triangle given by two sides and the included angle.
struct SideAngleSide {
    double b, c, angle;
};

inline SideAngleSide random_sas(std::mt19937_64& rng)
{
    return {uniform(rng, 0.05, 3.0), uniform(rng, 0.05, 3.0), uniform(rng, 0.05, std::numbers::pi - 0.05)};
}

/// Explicit hyperboloid points realizing a triangle with sides b = |XY|,
/// c = |XZ| and angle A at X.
inline std::array<MinkowskiPoint, 3> place_triangle(double b, double c, double angle)
{
    return {hyperboloid_origin(), point_at(b, Eigen::Vector3d(1, 0, 0)),
            point_at(c, Eigen::Vector3d(std::cos(angle), std::sin(angle), 0))};
}

// Klein-model volume -------------------------------------------------------

/// Hyperbolic volume of the geodesic tetrahedron with Klein vertices k[0..3]:
/// the integral of (1 - |x|^2)^-2 over the Euclidean tetrahedron, mapped
/// from the unit cube by a Duffy-type collapse and summed with Gauss-Legendre.
inline double klein_tetra_volume(const std::array<Eigen::Vector3d, 4>& k, int order = 40)
{
    // Gauss-Legendre nodes on [0, 1] by Newton iteration on P_order.
    std::vector<double> x(order), w(order);
    for (int i = 0; i < order; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int j = 2; j <= order; ++j) {
                const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double dp = order * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) {
                x[i] = 0.5 * (1.0 - z);
                w[i] = 1.0 / ((1.0 - z * z) * dp * dp);
                break;
            }
        }
    }
    const Eigen::Vector3d e1 = k[1] - k[0], e2 = k[2] - k[0], e3 = k[3] - k[0];
    const double jac = std::abs(e1.dot(e2.cross(e3)));
    double sum = 0.0;
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            for (int l = 0; l < order; ++l) {
                // Barycentric (s, t, r) with s + t + r <= 1 from the cube.
                const double s = x[i];
                const double t = (1.0 - s) * x[j];
                const double r = (1.0 - s - t) * x[l];
                const double weight = w[i] * w[j] * w[l] * (1.0 - s) * (1.0 - s) * (1.0 - x[j]);
                const Eigen::Vector3d pt = k[0] + s * e1 + t * e2 + r * e3;
                const double d = 1.0 - pt.squaredNorm();
                sum += weight / (d * d);
            }
    return jac * sum;
}

/// The brick tetrahedron N A B C of the suspension, built from explicit
/// points and integrated in the Klein model.
inline double klein_brick_volume(double h, double p, double q, double alpha)
{
    const std::array<Eigen::Vector3d, 4> k = {
        to_klein(hyperboloid_origin()),
        to_klein(point_at(h, Eigen::Vector3d(0, 0, 1))),
        to_klein(point_at(p, Eigen::Vector3d(1, 0, 0))),
        to_klein(point_at(q, Eigen::Vector3d(std::cos(alpha), std::sin(alpha), 0))),
    };
    return klein_tetra_volume(k);
}

}  // namespace testsupport
