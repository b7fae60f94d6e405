#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypflex/dual.hpp"
#include "hypflex/hyp_kernel.hpp"
#include "hypflex/numdiff.hpp"
#include "support.hpp"

using namespace hypflex;
using testsupport::make_rng;
using testsupport::uniform;

namespace {

constexpr double pi = std::numbers::pi;

HypLength<double> len(double x)
{
    return HypLength<double>::from_value(x);
}

Angle<double> ang(double x)
{
    return Angle<double>::from_radians(x);
}

}  // namespace

TEST_CASE("dual numbers carry first derivatives")
{
    const Dual1 x = variable(0.7);
    const Dual1 y = sinh(x) * cos(x) / (1.0 + x * x);
    const double expect = ((std::cosh(0.7) * std::cos(0.7) - std::sinh(0.7) * std::sin(0.7)) * (1 + 0.49) -
                           std::sinh(0.7) * std::cos(0.7) * 1.4) /
                          ((1 + 0.49) * (1 + 0.49));
    CHECK(y.value == doctest::Approx(std::sinh(0.7) * std::cos(0.7) / 1.49).epsilon(1e-15));
    CHECK(y.deriv == doctest::Approx(expect).epsilon(1e-14));

    SUBCASE("inverse functions")
    {
        const Dual1 t = variable(0.3);
        CHECK(acosh(cosh(t + 1.0)).deriv == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(atanh(tanh(t)).deriv == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(asinh(sinh(t)).deriv == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(acos(cos(t)).deriv == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(asin(sin(t)).deriv == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(atan2(sin(t), cos(t)).deriv == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(log(exp(t)).deriv == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(sqrt(t * t).deriv == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("stable acosh agrees with std::acosh and stays accurate near 1")
{
    for (double x : {1.0, 1.0 + 1e-12, 1.5, 10.0, 1e6}) CHECK(acosh_stable(x) == doctest::Approx(std::acosh(x)));
    // cosh(1e-7) rounds to 1 + 5e-15; the log1p form keeps relative accuracy.
    const double c = std::cosh(1e-5);
    CHECK(acosh_stable(c) == doctest::Approx(1e-5).epsilon(1e-5));
}

TEST_CASE("hyp_pythagoras")
{
    // Reference legs: cosh b = cosh^2(atanh 1/2) = 4/3.
    const auto b = hyp_pythagoras(std::atanh(0.5), std::atanh(0.5));
    CHECK(std::abs(b.cosh - 4.0 / 3.0) <= 1e-15);
    CHECK(std::abs(b.value - std::acosh(4.0 / 3.0)) <= 1e-15);

    for (double x : {0.0, 0.3, 2.5}) CHECK(std::abs(hyp_pythagoras(x, 0.0).value - x) <= 1e-15);

    // Oracle: distance between explicitly placed points on orthogonal axes.
    const auto c = hyp_pythagoras(1.0, 1.0);
    CHECK(std::abs(c.value - std::acosh(std::cosh(1.0) * std::cosh(1.0))) <= 1e-14);
    const double d = hyp_distance(point_at(1.0, {1, 0, 0}), point_at(1.0, {0, 1, 0}));
    CHECK(std::abs(c.value - d) <= 1e-14);
}

TEST_CASE("hyp_side_from_angle")
{
    const double b = std::atanh(0.5);
    const double c = std::atanh(std::sqrt(3.0) / 2.0);
    const auto a = hyp_side_from_angle(b, c, pi / 6);
    CHECK(std::abs(a.cosh - 5.0 / (2.0 * std::sqrt(3.0))) <= 1e-14);

    SUBCASE("right angle reduces to Pythagoras")
    {
        auto rng = make_rng(1);
        for (int i = 0; i < 100; ++i) {
            const double x = uniform(rng, 0.01, 3), y = uniform(rng, 0.01, 3);
            CHECK(std::abs(hyp_side_from_angle(x, y, pi / 2).value - hyp_pythagoras(x, y).value) <= 1e-13);
        }
    }
    SUBCASE("collinear degeneration")
    {
        CHECK(std::abs(hyp_side_from_angle(1.3, 0.4, 1e-12).value - 0.9) <= 1e-10);
        CHECK(std::abs(hyp_side_from_angle(1.3, 0.4, 0.0).value - 0.9) <= 1e-14);
        CHECK(std::abs(hyp_side_from_angle(1.3, 0.4, pi).value - 1.7) <= 1e-14);
    }
    SUBCASE("agrees with explicitly placed points")
    {
        auto rng = make_rng(2);
        for (int i = 0; i < 200; ++i) {
            const auto t = testsupport::random_sas(rng);
            const auto pts = testsupport::place_triangle(t.b, t.c, t.angle);
            CHECK(std::abs(hyp_side_from_angle(t.b, t.c, t.angle).value - hyp_distance(pts[1], pts[2])) <= 1e-12);
        }
    }
}

TEST_CASE("hyp_angle_from_sides")
{
    const double b = std::atanh(0.5);
    const double c = std::atanh(std::sqrt(3.0) / 2.0);
    const auto a = hyp_side_from_angle(b, c, pi / 6);
    CHECK(std::abs(hyp_angle_from_sides(a, len(b), len(c)).radians() - pi / 6) <= 1e-14);

    // Small equilateral triangles approach the Euclidean pi/3 from below.
    const auto eq = hyp_angle_from_sides(len(1e-3), len(1e-3), len(1e-3));
    CHECK(std::abs(eq.radians() - pi / 3) <= 1e-6);
    CHECK(eq.radians() < pi / 3);

    SUBCASE("1000 random side-angle-side roundtrips")
    {
        auto rng = make_rng(3);
        for (int i = 0; i < 1000; ++i) {
            const auto t = testsupport::random_sas(rng);
            const auto side = hyp_side_from_angle(t.b, t.c, t.angle);
            const auto back = hyp_angle_from_sides(side, len(t.b), len(t.c));
            const auto again = hyp_side_from_angle(t.b, t.c, back.radians());
            REQUIRE(std::abs(again.value - side.value) <= 1e-12);
            CHECK(std::abs(back.radians() - t.angle) <= 1e-9);
        }
    }
    SUBCASE("angle sum below pi")
    {
        auto rng = make_rng(4);
        for (int i = 0; i < 200; ++i) {
            const auto t = testsupport::random_sas(rng);
            const auto a2 = hyp_side_from_angle(t.b, t.c, t.angle);
            const double A = hyp_angle_from_sides(a2, len(t.b), len(t.c)).radians();
            const double B = hyp_angle_from_sides(len(t.b), a2, len(t.c)).radians();
            const double C = hyp_angle_from_sides(len(t.c), a2, len(t.b)).radians();
            CHECK(A + B + C < pi);
        }
    }
    SUBCASE("violated triangle inequality is a domain error")
    {
        CHECK_THROWS_AS(hyp_angle_from_sides(len(3.0), len(1.0), len(1.0)), DomainError);
        try {
            hyp_angle_from_sides(len(3.0), len(1.0), len(1.0));
        } catch (const DomainError& e) {
            CHECK(e.offending_cosine() < -1.0);
        }
    }
    SUBCASE("dual derivative matches finite differences")
    {
        auto f = [](auto t) {
            using S = decltype(t);
            const auto a = HypLength<S>::from_value(S(1.1) + 0.3 * t);
            const auto b = HypLength<S>::from_value(S(0.8) - 0.2 * t);
            const auto c = HypLength<S>::from_value(S(0.9) + 0.5 * t);
            return hyp_angle_from_sides(a, b, c).radians();
        };
        const Dual1 d = f(variable(0.0));
        const auto fd = fd_derivative([&](double t) { return f(t); }, 0.0);
        CHECK(std::abs(d.deriv - fd.estimate) <= 1e-8);
    }
}

TEST_CASE("sph_angle_from_sides")
{
    // Birectangular triangle: two quarter sides enclose the third side.
    for (double x : {0.2, 1.0, 2.5}) CHECK(std::abs(sph_angle_from_sides(ang(pi / 2), ang(pi / 2), ang(x)).radians() - x) <= 1e-14);

    SUBCASE("sine law over random spherical triangles")
    {
        auto rng = make_rng(5);
        for (int i = 0; i < 500; ++i) {
            // Sample three unit vectors and read sides as their angles.
            Eigen::Vector3d v[3];
            for (auto& x : v) x = Eigen::Vector3d(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)).normalized();
            auto side = [&](int i, int j) { return ang(std::acos(std::clamp(v[i].dot(v[j]), -1.0, 1.0))); };
            const auto a = side(1, 2), b = side(0, 2), c = side(0, 1);
            if (a.sin < 0.05 || b.sin < 0.05 || c.sin < 0.05) continue;
            const auto C = sph_angle_from_sides(a, b, c);
            const auto A = sph_angle_from_sides(b, c, a);
            const auto B = sph_angle_from_sides(c, a, b);
            if (A.sin < 0.05 || B.sin < 0.05 || C.sin < 0.05) continue;
            const double r = sph_sine_ratio(c, C);
            CHECK(std::abs(sph_sine_ratio(a, A) - r) <= 1e-10 * r);
            CHECK(std::abs(sph_sine_ratio(b, B) - r) <= 1e-10 * r);
        }
    }
    SUBCASE("equilateral triangle has equal ratios")
    {
        const auto s = ang(1.0);
        const auto A = sph_angle_from_sides(s, s, s);
        CHECK(std::abs(sph_sine_ratio(s, A) - A.sin / s.sin) <= 1e-15);
    }
    SUBCASE("degenerate side rejected")
    {
        CHECK_THROWS(sph_sine_ratio(ang(0.0), ang(0.5)));
    }
}

TEST_CASE("lobachevsky_lambda")
{
    CHECK(lobachevsky_lambda(0.0) == 0.0);
    CHECK(std::abs(lobachevsky_lambda(pi / 2)) <= 1e-16);
    // Frozen from a 40-digit mpmath evaluation of -int_0^x log|2 sin t| dt.
    CHECK(std::abs(lobachevsky_lambda(pi / 6) - 0.50747080320482680) <= 1e-15);
    CHECK(std::abs(lobachevsky_lambda(pi / 4) - 0.45798279708860951) <= 1e-15);
    CHECK(std::abs(lobachevsky_lambda(1.0) - 0.36357302543163962) <= 1e-15);

    // One third of the ideal regular tetrahedron volume 1.0149416064096536.
    CHECK(std::abs(2.0 * lobachevsky_lambda(pi / 6) - 1.0149416064096536) <= 1e-15);

    auto rng = make_rng(6);
    for (int i = 0; i < 200; ++i) {
        const double x = uniform(rng, -3, 3);
        CHECK(std::abs(lobachevsky_lambda(-x) + lobachevsky_lambda(x)) <= 1e-15);
        CHECK(std::abs(lobachevsky_lambda(x + pi) - lobachevsky_lambda(x)) <= 1e-14);
        // Duplication: L(2x) = 2 L(x) + 2 L(x + pi/2).
        CHECK(std::abs(lobachevsky_lambda(2 * x) - 2 * lobachevsky_lambda(x) - 2 * lobachevsky_lambda(x + pi / 2)) <= 1e-14);
        if (std::abs(std::sin(x)) > 0.01) {
            const Dual1 d = lobachevsky_lambda(variable(x));
            const auto fd = fd_derivative([](double t) { return lobachevsky_lambda(t); }, x);
            CHECK(std::abs(d.deriv - fd.estimate) <= 1e-8);
        }
    }
}
