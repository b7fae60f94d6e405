#include <array>
#include <cmath>
#include <numbers>

#include "hypflex/hyp_kernel.hpp"

namespace hypflex {
namespace {

constexpr int kTerms = 30;

// zeta(2n) for n = 1..kTerms. The first two are closed forms; the rest come
// from a partial sum with an Euler-Maclaurin tail, exact to double precision
// for exponents >= 6.
std::array<double, kTerms + 1> make_even_zeta()
{
    using std::numbers::pi;
    std::array<double, kTerms + 1> z{};
    z[1] = pi * pi / 6.0;
    z[2] = std::pow(pi, 4) / 90.0;
    constexpr int kCut = 16;
    for (int n = 3; n <= kTerms; ++n) {
        const double s = 2.0 * n;
        double sum = 0.0;
        for (int k = kCut - 1; k >= 1; --k) sum += std::pow(k, -s);
        const double K = kCut;
        sum += std::pow(K, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(K, -s) +
               s * std::pow(K, -s - 1.0) / 12.0 -
               s * (s + 1.0) * (s + 2.0) * std::pow(K, -s - 3.0) / 720.0;
        z[n] = sum;
    }
    return z;
}

}  // namespace

double lobachevsky_lambda(double theta)
{
    using std::numbers::pi;
    static const auto zeta = make_even_zeta();

    // Odd and pi-periodic: fold into [-pi/2, pi/2].
    double x = std::remainder(theta, pi);
    if (x == 0.0) return 0.0;

    const double r2 = (x / pi) * (x / pi);
    double series = 0.0;
    double power = r2;
    for (int n = 1; n <= kTerms; ++n) {
        series += zeta[n] / (n * (2.0 * n + 1.0)) * power;
        power *= r2;
    }
    return x * (1.0 - std::log(2.0 * std::abs(x))) + x * series;
}

}  // namespace hypflex
