#pragma once

// Hyperboloid model {x : <x, x> = -1, x0 > 0} in Minkowski space R^{3,1}
// with <x, y> = -x0 y0 + x1 y1 + x2 y2 + x3 y3.

#include <Eigen/Dense>

namespace hypflex {

using MinkowskiPoint = Eigen::Vector4d;
using KleinPoint = Eigen::Vector3d;

inline double minkowski_dot(const Eigen::Vector4d& a, const Eigen::Vector4d& b)
{
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

/// Basepoint (1, 0, 0, 0).
inline MinkowskiPoint hyperboloid_origin()
{
    return {1.0, 0.0, 0.0, 0.0};
}

/// Point at hyperbolic distance r from the basepoint along the Euclidean
/// unit direction dir.
MinkowskiPoint point_at(double r, const Eigen::Vector3d& dir);

/// Rescales a timelike vector onto the upper sheet of the hyperboloid.
MinkowskiPoint normalize_point(const Eigen::Vector4d& x);

/// Normalizes a spacelike vector to <x, x> = 1.
Eigen::Vector4d normalize_spacelike(const Eigen::Vector4d& x);

/// Hyperbolic distance, computed as 2 asinh(|a - b| / 2) for accuracy at
/// short range.
double hyp_distance(const MinkowskiPoint& a, const MinkowskiPoint& b);

/// Deviation of a point from the hyperboloid: |<x, x> + 1|.
double hyperboloid_residual(const MinkowskiPoint& x);

/// Klein (projective) model coordinates x_i / x0; geodesics become straight.
KleinPoint to_klein(const MinkowskiPoint& x);

MinkowskiPoint from_klein(const KleinPoint& k);

/// Vector n with <n, a> = <n, b> = <n, c> = 0, and <n, y> = det[a b c y].
/// For three points of a hyperbolic plane n is a spacelike normal of that plane.
Eigen::Vector4d lorentz_normal(const Eigen::Vector4d& a, const Eigen::Vector4d& b, const Eigen::Vector4d& c);

/// Unit tangent at p pointing along the geodesic toward q.
Eigen::Vector4d tangent_toward(const MinkowskiPoint& p, const MinkowskiPoint& q);

/// Hyperbolic distance from x to the full geodesic through p and q.
double distance_to_geodesic(const MinkowskiPoint& x, const MinkowskiPoint& p, const MinkowskiPoint& q);

}  // namespace hypflex
