#pragma once

// Hyperbolic (curvature -1) and spherical trigonometry over a generic scalar.
//
// Every function here is a template over S, where S is double or Dual<double>.
// Plain reals give values; duals give values plus exact first derivatives along
// whatever parameter the caller seeded.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "hypflex/dual.hpp"
#include "hypflex/errors.hpp"

namespace hypflex {

/// Inverse hyperbolic cosine, accurate for arguments close to 1.
template <typename S>
S acosh_stable(const S& c)
{
    using std::log1p;
    using std::sqrt;
    const S m = c - 1.0;
    return log1p(m + sqrt(m * (c + 1.0)));
}

/// A hyperbolic length with its hyperbolic sine and cosine.
template <typename S>
struct HypLength {
    S value{};
    S cosh{};
    S sinh{};

    static HypLength from_value(const S& x)
    {
        using std::cosh;
        using std::sinh;
        return {x, cosh(x), sinh(x)};
    }

    /// Nonnegative length whose cosh is c (c >= 1). The positive square root
    /// branch is taken for the sinh.
    static HypLength from_cosh(const S& c)
    {
        using std::sqrt;
        return {acosh_stable(c), c, sqrt((c - 1.0) * (c + 1.0))};
    }
};

/// An angle carried as a (sin, cos) pair. The principal value is recovered
/// with the two-argument arctangent, so angles in (pi, 2*pi) survive too.
template <typename S>
struct Angle {
    S sin{};
    S cos{};

    S radians() const
    {
        using std::atan2;
        S r = atan2(sin, cos);
        if (value_of(r) < 0.0) r = r + 2.0 * std::numbers::pi;
        return r;
    }

    static Angle from_radians(const S& x)
    {
        using std::cos;
        using std::sin;
        return {sin(x), cos(x)};
    }

    /// Angle in [0, pi] with the given cosine (nonnegative sine branch).
    static Angle from_cos(const S& c)
    {
        using std::sqrt;
        return {sqrt((1.0 - c) * (1.0 + c)), c};
    }
};

namespace detail {

inline std::string fmt_cos(double c)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", c);
    return buf;
}

}  // namespace detail

/// Hypotenuse of a right hyperbolic triangle: cosh c = cosh(leg1) cosh(leg2).
template <typename S>
HypLength<S> hyp_pythagoras(const S& leg1, const S& leg2)
{
    using std::cosh;
    if (value_of(leg1) < 0.0 || value_of(leg2) < 0.0)
        throw InvalidParams("hyp_pythagoras: negative leg");
    return HypLength<S>::from_cosh(cosh(leg1) * cosh(leg2));
}

/// Side opposite the angle A between sides b and c (hyperbolic cosine law).
///
/// Evaluated as cosh(b - c) + 2 sinh b sinh c sin^2(A/2), which equals
/// cosh b cosh c - sinh b sinh c cos A but keeps the small-A limit |b - c|
/// free of cancellation.
template <typename S>
HypLength<S> hyp_side_from_angle(const S& b, const S& c, const S& angle)
{
    using std::cosh;
    using std::sin;
    using std::sinh;
    if (!(value_of(b) > 0.0) || !(value_of(c) > 0.0))
        throw InvalidParams("hyp_side_from_angle: sides must be positive");
    if (value_of(angle) < 0.0 || value_of(angle) > std::numbers::pi)
        throw InvalidParams("hyp_side_from_angle: angle outside [0, pi]");
    const S half = sin(0.5 * angle);
    return HypLength<S>::from_cosh(cosh(b - c) + 2.0 * sinh(b) * sinh(c) * half * half);
}

/// Angle opposite side a in the hyperbolic triangle with sides a, b, c.
/// Throws DomainError (carrying the cosine) when the triangle is not realizable.
template <typename S>
Angle<S> hyp_angle_from_sides(const HypLength<S>& a, const HypLength<S>& b, const HypLength<S>& c)
{
    const S cos_a = (b.cosh * c.cosh - a.cosh) / (b.sinh * c.sinh);
    const double cv = value_of(cos_a);
    if (!(cv > -1.0 && cv < 1.0))
        throw DomainError("hyperbolic triangle not realizable, cos = " + detail::fmt_cos(cv), cv);
    return Angle<S>::from_cos(cos_a);
}

inline constexpr double kSphericalCosSlack = 1e-12;

/// Angle C opposite side c of the spherical triangle with sides a, b, c
/// (spherical cosine law). Sides are given as (sin, cos) pairs.
template <typename S>
Angle<S> sph_angle_from_sides(const Angle<S>& a, const Angle<S>& b, const Angle<S>& c)
{
    using std::sqrt;
    const double sa = value_of(a.sin);
    const double sb = value_of(b.sin);
    if (!(sa > 0.0) || !(sb > 0.0))
        throw InvalidParams("sph_angle_from_sides: sides must lie in (0, pi)");
    S cos_c = (c.cos - a.cos * b.cos) / (a.sin * b.sin);
    const double cv = value_of(cos_c);
    if (!(cv >= -1.0 - kSphericalCosSlack && cv <= 1.0 + kSphericalCosSlack))
        throw DomainError("spherical triangle not realizable, cos = " + detail::fmt_cos(cv), cv);
    if (cv > 1.0) cos_c = S(1.0);
    if (cv < -1.0) cos_c = S(-1.0);
    return Angle<S>::from_cos(cos_c);
}

/// sin(opposite_angle) / sin(side); equal for all three vertices of one
/// spherical triangle.
template <typename S>
S sph_sine_ratio(const Angle<S>& side, const Angle<S>& opposite_angle)
{
    if (!(value_of(side.sin) > 0.0))
        throw InvalidParams("sph_sine_ratio: side must lie in (0, pi)");
    return opposite_angle.sin / side.sin;
}

/// Lobachevsky function  L(x) = -int_0^x log|2 sin t| dt = 1/2 sum_k sin(2kx)/k^2.
///
/// Evaluated after reduction to [-pi/2, pi/2] from the expansion
///   L(x) = x (1 - log 2|x|) + x sum_{n>=1} zeta(2n) / (n (2n+1)) (x/pi)^{2n},
/// which converges like 4^{-n} on the reduced range. Absolute error below 1e-14.
double lobachevsky_lambda(double theta);

inline Dual1 lobachevsky_lambda(const Dual1& theta)
{
    const double s = std::abs(2.0 * std::sin(theta.value));
    // L'(x) = -log|2 sin x|, singular (log) at multiples of pi where L itself is flat.
    const double slope = s > 0.0 ? -std::log(s) : 0.0;
    return {lobachevsky_lambda(theta.value), slope * theta.deriv};
}

}  // namespace hypflex
