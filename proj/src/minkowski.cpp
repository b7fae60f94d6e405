#include "hypflex/minkowski.hpp"

#include <cmath>

#include "hypflex/errors.hpp"

namespace hypflex {

MinkowskiPoint point_at(double r, const Eigen::Vector3d& dir)
{
    const Eigen::Vector3d d = dir.normalized();
    const double s = std::sinh(r);
    return {std::cosh(r), s * d[0], s * d[1], s * d[2]};
}

MinkowskiPoint normalize_point(const Eigen::Vector4d& x)
{
    const double n2 = -minkowski_dot(x, x);
    if (!(n2 > 0.0)) throw GeometryError("normalize_point: vector is not timelike");
    const double s = (x[0] > 0.0 ? 1.0 : -1.0) / std::sqrt(n2);
    return x * s;
}

Eigen::Vector4d normalize_spacelike(const Eigen::Vector4d& x)
{
    const double n2 = minkowski_dot(x, x);
    if (!(n2 > 0.0)) throw GeometryError("normalize_spacelike: vector is not spacelike");
    return x / std::sqrt(n2);
}

double hyp_distance(const MinkowskiPoint& a, const MinkowskiPoint& b)
{
    const Eigen::Vector4d d = a - b;
    const double chord2 = std::max(0.0, minkowski_dot(d, d));
    return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
}

double hyperboloid_residual(const MinkowskiPoint& x)
{
    return std::abs(minkowski_dot(x, x) + 1.0);
}

KleinPoint to_klein(const MinkowskiPoint& x)
{
    return x.tail<3>() / x[0];
}

MinkowskiPoint from_klein(const KleinPoint& k)
{
    const double r2 = k.squaredNorm();
    if (!(r2 < 1.0)) throw GeometryError("from_klein: point outside the unit ball");
    const double x0 = 1.0 / std::sqrt(1.0 - r2);
    return {x0, x0 * k[0], x0 * k[1], x0 * k[2]};
}

Eigen::Vector4d lorentz_normal(const Eigen::Vector4d& a, const Eigen::Vector4d& b, const Eigen::Vector4d& c)
{
    // Cofactor expansion of det[a b c y] along y gives the Euclidean
    // coefficients d; flipping d0 turns them into a Minkowski normal.
    Eigen::Matrix<double, 4, 3> m;
    m << a, b, c;
    Eigen::Vector4d d;
    for (int i = 0; i < 4; ++i) {
        Eigen::Matrix3d minor;
        for (int r = 0, rr = 0; r < 4; ++r) {
            if (r == i) continue;
            minor.row(rr++) = m.row(r);
        }
        d[i] = ((i + 3) % 2 == 0 ? 1.0 : -1.0) * minor.determinant();
    }
    d[0] = -d[0];
    return d;
}

Eigen::Vector4d tangent_toward(const MinkowskiPoint& p, const MinkowskiPoint& q)
{
    return normalize_spacelike(q + minkowski_dot(q, p) * p);
}

double distance_to_geodesic(const MinkowskiPoint& x, const MinkowskiPoint& p, const MinkowskiPoint& q)
{
    // Minkowski-orthogonal projection of x onto span(p, q); the normalized
    // projection is the foot of the perpendicular.
    Eigen::Matrix2d gram;
    gram << minkowski_dot(p, p), minkowski_dot(p, q), minkowski_dot(q, p), minkowski_dot(q, q);
    const Eigen::Vector2d rhs(minkowski_dot(x, p), minkowski_dot(x, q));
    const Eigen::Vector2d coef = gram.fullPivLu().solve(rhs);
    const MinkowskiPoint foot = normalize_point(coef[0] * p + coef[1] * q);
    return hyp_distance(x, foot);
}

}  // namespace hypflex
