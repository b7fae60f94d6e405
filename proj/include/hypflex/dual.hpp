#pragma once

/*
    Forward-mode dual numbers.

    A Dual<T> carries a value and the coefficient of an infinitesimal e with
    e^2 = 0, so evaluating f(Dual{x, 1}) yields {f(x), f'(x)}. All geometry in
    this library is written against a generic scalar S so that the same code
    path produces values (S = double) and exact first derivatives
    (S = Dual<double>).
*/

#include <cmath>
#include <compare>
#include <ostream>
#include <type_traits>

namespace hypflex {

template <typename T>
struct Dual {
    T value{};
    T deriv{};

    constexpr Dual() = default;
    constexpr Dual(T v) : value(v) {}  // NOLINT: implicit lift of constants
    constexpr Dual(T v, T d) : value(v), deriv(d) {}

    constexpr Dual& operator+=(const Dual& o) { value += o.value; deriv += o.deriv; return *this; }
    constexpr Dual& operator-=(const Dual& o) { value -= o.value; deriv -= o.deriv; return *this; }
    constexpr Dual& operator*=(const Dual& o) { return *this = *this * o; }
    constexpr Dual& operator/=(const Dual& o) { return *this = *this / o; }

    friend constexpr Dual operator+(const Dual& a, const Dual& b) { return {a.value + b.value, a.deriv + b.deriv}; }
    friend constexpr Dual operator-(const Dual& a, const Dual& b) { return {a.value - b.value, a.deriv - b.deriv}; }
    friend constexpr Dual operator-(const Dual& a) { return {-a.value, -a.deriv}; }
    friend constexpr Dual operator+(const Dual& a) { return a; }
    friend constexpr Dual operator*(const Dual& a, const Dual& b)
    {
        return {a.value * b.value, a.deriv * b.value + a.value * b.deriv};
    }
    friend constexpr Dual operator/(const Dual& a, const Dual& b)
    {
        const T q = a.value / b.value;
        return {q, (a.deriv - q * b.deriv) / b.value};
    }

    // Ordering looks at the value only; the infinitesimal part never decides a branch.
    friend constexpr bool operator==(const Dual& a, const Dual& b) { return a.value == b.value; }
    friend constexpr auto operator<=>(const Dual& a, const Dual& b) { return a.value <=> b.value; }
};

using Dual1 = Dual<double>;

template <typename S>
struct is_dual : std::false_type {};
template <typename T>
struct is_dual<Dual<T>> : std::true_type {};

/// Value part of a scalar; identity for plain reals.
constexpr double value_of(double x) { return x; }
template <typename T>
constexpr double value_of(const Dual<T>& x) { return value_of(x.value); }

/// Infinitesimal part of a scalar; zero for plain reals.
constexpr double deriv_of(double) { return 0.0; }
constexpr double deriv_of(const Dual<double>& x) { return x.deriv; }

/// Seeds an independent variable: value x, derivative 1.
constexpr Dual1 variable(double x) { return {x, 1.0}; }

// Elementary functions. Each applies the chain rule f(a + be) = f(a) + f'(a) b e.

template <typename T>
Dual<T> sqrt(const Dual<T>& x)
{
    using std::sqrt;
    const T r = sqrt(x.value);
    return {r, x.deriv / (T(2) * r)};
}

template <typename T>
Dual<T> exp(const Dual<T>& x)
{
    using std::exp;
    const T e = exp(x.value);
    return {e, e * x.deriv};
}

template <typename T>
Dual<T> log(const Dual<T>& x)
{
    using std::log;
    return {log(x.value), x.deriv / x.value};
}

template <typename T>
Dual<T> log1p(const Dual<T>& x)
{
    using std::log1p;
    return {log1p(x.value), x.deriv / (T(1) + x.value)};
}

template <typename T>
Dual<T> sin(const Dual<T>& x)
{
    using std::cos;
    using std::sin;
    return {sin(x.value), cos(x.value) * x.deriv};
}

template <typename T>
Dual<T> cos(const Dual<T>& x)
{
    using std::cos;
    using std::sin;
    return {cos(x.value), -sin(x.value) * x.deriv};
}

template <typename T>
Dual<T> tan(const Dual<T>& x)
{
    using std::tan;
    const T t = tan(x.value);
    return {t, (T(1) + t * t) * x.deriv};
}

template <typename T>
Dual<T> sinh(const Dual<T>& x)
{
    using std::cosh;
    using std::sinh;
    return {sinh(x.value), cosh(x.value) * x.deriv};
}

template <typename T>
Dual<T> cosh(const Dual<T>& x)
{
    using std::cosh;
    using std::sinh;
    return {cosh(x.value), sinh(x.value) * x.deriv};
}

template <typename T>
Dual<T> tanh(const Dual<T>& x)
{
    using std::tanh;
    const T t = tanh(x.value);
    return {t, (T(1) - t * t) * x.deriv};
}

template <typename T>
Dual<T> asin(const Dual<T>& x)
{
    using std::asin;
    using std::sqrt;
    return {asin(x.value), x.deriv / sqrt((T(1) - x.value) * (T(1) + x.value))};
}

template <typename T>
Dual<T> acos(const Dual<T>& x)
{
    using std::acos;
    using std::sqrt;
    return {acos(x.value), -x.deriv / sqrt((T(1) - x.value) * (T(1) + x.value))};
}

template <typename T>
Dual<T> atan(const Dual<T>& x)
{
    using std::atan;
    return {atan(x.value), x.deriv / (T(1) + x.value * x.value)};
}

template <typename T>
Dual<T> atan2(const Dual<T>& y, const Dual<T>& x)
{
    using std::atan2;
    const T r2 = x.value * x.value + y.value * y.value;
    return {atan2(y.value, x.value), (x.value * y.deriv - y.value * x.deriv) / r2};
}

template <typename T>
Dual<T> asinh(const Dual<T>& x)
{
    using std::asinh;
    using std::sqrt;
    return {asinh(x.value), x.deriv / sqrt(x.value * x.value + T(1))};
}

template <typename T>
Dual<T> acosh(const Dual<T>& x)
{
    using std::acosh;
    using std::sqrt;
    return {acosh(x.value), x.deriv / sqrt((x.value - T(1)) * (x.value + T(1)))};
}

template <typename T>
Dual<T> atanh(const Dual<T>& x)
{
    using std::atanh;
    return {atanh(x.value), x.deriv / ((T(1) - x.value) * (T(1) + x.value))};
}

template <typename T>
Dual<T> abs(const Dual<T>& x)
{
    return x.value < T(0) ? -x : x;
}

template <typename T>
Dual<T> pow(const Dual<T>& x, int n)
{
    using std::pow;
    if (n == 0) return Dual<T>(T(1));
    const T pm1 = pow(x.value, n - 1);
    return {pm1 * x.value, T(n) * pm1 * x.deriv};
}

template <typename T>
bool isfinite(const Dual<T>& x)
{
    using std::isfinite;
    return isfinite(x.value) && isfinite(x.deriv);
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Dual<T>& x)
{
    return os << x.value << " + " << x.deriv << "e";
}

}  // namespace hypflex
