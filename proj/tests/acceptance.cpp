// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Criterion 11 runs the hypflex executable twice.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>

#include "hypflex/flex.hpp"
#include "hypflex/format.hpp"
#include "hypflex/suspension.hpp"
#include "hypflex/variation.hpp"
#include "support.hpp"

#ifndef HYPFLEX_CLI_PATH
#error "HYPFLEX_CLI_PATH must name the hypflex executable"
#endif

using namespace hypflex;

namespace {

const double s3 = std::sqrt(3.0);
const double s7 = std::sqrt(7.0);
const double s13 = std::sqrt(13.0);

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail)
{
    if (!pass) ++failures;
    std::cout << "criterion " << id << " (" << name << "): " << (pass ? "PASS" : "FAIL") << "  [" << detail
              << "]\n";
}

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

template <typename F>
void run(int id, const std::string& name, F&& body)
{
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& ex) {
        detail = std::string("exception: ") + ex.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "; %.0f ms", ms);
    report(id, name, pass, detail + buf);
}

std::vector<testsupport::Instance> random_instances(int count, std::uint64_t salt)
{
    auto rng = testsupport::make_rng(salt);
    std::vector<testsupport::Instance> out;
    for (int i = 0; i < count; ++i) out.push_back(testsupport::random_flexible(rng, 3, 8));
    return out;
}

std::pair<int, std::string> run_cli(const std::string& args)
{
    const std::string cmd = std::string(HYPFLEX_CLI_PATH) + " " + args + " 2>&1";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) throw std::runtime_error("cannot run " + cmd);
    std::string text;
    std::array<char, 4096> buf;
    for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0;) text.append(buf.data(), n);
    const int status = pclose(pipe.release());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}

}  // namespace

int main()
{
    const auto params = reference_params();
    const auto vel = reference_velocities();

    run(1, "velocity relations", [&](std::string& d) {
        const auto v = velocity_from_u(params, s3 / 4.0);
        const double ev = std::abs(v.v + s3 / 4.0);
        const double ew = std::abs(v.w + 0.25);
        d = "|v + sqrt3/4| = " + sci(ev) + ", |w + 1/4| = " + sci(ew) + ", tol 1e-14";
        return ev <= 1e-14 && ew <= 1e-14;
    });

    run(2, "flex criterion", [&](std::string& d) {
        const double r = std::abs(flex_residual(params).minus);
        const double eq =
            std::abs(solve_q_for_flex(std::atanh(0.5), std::numbers::pi / 6, FlexBranch::minus) - std::atanh(s3 / 2));
        d = "minus residual " + sci(r) + ", solved q error " + sci(eq) + ", tol 1e-14";
        return r <= 1e-14 && eq <= 1e-14;
    });

    run(3, "edge lengths", [&](std::string& d) {
        const auto e = edge_lengths(params, vel, 0.0);
        const double ea = std::abs(e.a.cosh - 5.0 / (2.0 * s3));
        const double eb = std::abs(e.b.cosh - 4.0 / 3.0);
        const double ec = std::abs(e.c.cosh - 4.0 / s3);
        d = "cosh errors " + sci(ea) + ", " + sci(eb) + ", " + sci(ec) + ", tol 1e-14";
        return ea <= 1e-14 && eb <= 1e-14 && ec <= 1e-14;
    });

    run(4, "dihedral rates", [&](std::string& d) {
        const auto r = dihedral_rates(params, vel, RateMethod::dual);
        const auto f = dihedral_rates(params, vel, RateMethod::finite_difference);
        const double printed = std::max({std::abs(r.ab - s13 / 4), std::abs(r.na - s7 / 4), std::abs(r.nb + s13 / 4)});
        const double internal = std::max({std::abs(f.ab - r.ab), std::abs(f.na - r.na), std::abs(f.nb - r.nb)});
        d = "dual vs printed " + sci(printed) + " (tol 1e-9), FD vs dual " + sci(internal) + " (tol 1e-8)";
        return printed <= 1e-9 && internal <= 1e-8;
    });

    run(5, "volume variation", [&](std::string& d) {
        constexpr double golden = -0.15165583408190940482;
        const double closed = -3.0 * (s7 * std::log((4.0 + s7) / 3.0) + s13 * std::log((7.0 - s13) / 6.0));
        const double dV = schlafli_rate(params, vel);
        d = "dV/dt = " + fmt17(dV) + ", closed form error " + sci(std::abs(dV - closed)) +
            ", golden error " + sci(std::abs(dV - golden)) + ", tol 1e-12";
        return std::abs(dV - closed) <= 1e-12 && std::abs(dV - golden) <= 1e-12 && dV < 0.0;
    });

    run(6, "mean curvature equals volume rate", [&](std::string& d) {
        double worst = std::abs(mean_curvature_rate(params, vel) - schlafli_rate(params, vel));
        for (const auto& inst : random_instances(10, 6))
            worst = std::max(worst, std::abs(mean_curvature_rate(inst.params, inst.vel) -
                                             schlafli_rate(inst.params, inst.vel)));
        d = "max |dM - dV| over 11 instances " + sci(worst) + ", tol 1e-12";
        return worst <= 1e-12;
    });

    run(7, "stationarity and nontriviality", [&](std::string& d) {
        const double s = stationarity_report(params, vel);
        const double ns = ns_distance_rate(vel);
        d = "max edge rate " + sci(s) + " (tol 1e-12), dist(N,S) rate - sqrt3/2 = " + sci(ns - s3 / 2);
        return s <= 1e-12 && ns == s3 / 2;
    });

    run(8, "volume oracle cross-validation", [&](std::string& d) {
        double worst = std::abs(volume_oracle_rate(params, vel).estimate - schlafli_rate(params, vel));
        for (const auto& inst : random_instances(10, 8))
            worst = std::max(worst, std::abs(volume_oracle_rate(inst.params, inst.vel).estimate -
                                             schlafli_rate(inst.params, inst.vel)));
        d = "max |FD oracle - Schlaefli| over 11 instances " + sci(worst) + ", tol 1e-5";
        return worst <= 1e-5;
    });

    run(9, "embedding", [&](std::string& d) {
        bool ok = true;
        for (double t : {-0.05, 0.0, 0.05}) ok &= check_embedding(build_mesh(params, vel, t)).embedded;
        const auto adv_params = SuspensionParams::make(6, 0.05, 0.2, 2.0);
        MeshOptions opt;
        opt.petal_twist = 3.0 * adv_params.alpha;
        const auto adv = check_embedding(build_mesh(adv_params, {0, 0, 0}, 0.0, opt));
        d = std::string("reference at t = -0.05, 0, 0.05 ") + (ok ? "embedded" : "NOT embedded") +
            "; folded instance " + (adv.embedded ? "embedded" : "rejected (" + adv.detail + ")");
        return ok && !adv.embedded && adv.violating_faces.has_value();
    });

    run(10, "geometry oracle coherence", [&](std::string& d) {
        auto rng = testsupport::make_rng(10);
        double worst_len = 0.0, worst_dih = 0.0;
        int count = 0;
        for (int i = 0; i < 5; ++i) {
            const int n = std::uniform_int_distribution<int>(3, 10)(rng);
            const double alpha = std::numbers::pi / n;
            for (int j = 0; j < 5; ++j) {
                const double p = testsupport::uniform(rng, 0.1, 1.2);
                FlexBranch branch = FlexBranch::minus;
                double q = 0.0;
                try {
                    q = solve_q_for_flex(p, alpha, branch);
                } catch (const NoSolutionError&) {
                    branch = FlexBranch::plus;
                    q = solve_q_for_flex(p, alpha, branch);
                }
                for (int k = 0; k < 5; ++k) {
                    const double h = testsupport::uniform(rng, 0.1, 1.5);
                    const auto ps = SuspensionParams::make(n, h, p, q);
                    const auto v = velocity_from_u(ps, testsupport::uniform(rng, -1, 1));
                    const double t = testsupport::uniform(rng, -0.05, 0.05);
                    const auto mesh = build_mesh(ps, v, t);
                    const auto m = tetra_metrics(ps, v, t);
                    for (const auto& e : mesh.edges) {
                        const auto [len, half] =
                            e.cls == EdgeClass::equator  ? std::pair{m.edges.a.value, m.dihedrals.ab.radians()}
                            : e.cls == EdgeClass::apex_a ? std::pair{m.edges.b.value, m.dihedrals.na.radians()}
                                                         : std::pair{m.edges.c.value, m.dihedrals.nb.radians()};
                        worst_len = std::max(worst_len, std::abs(e.length - len));
                        worst_dih = std::max(worst_dih, std::abs(e.dihedral - 2.0 * half));
                    }
                    ++count;
                }
            }
        }
        d = std::to_string(count) + " instances, max length error " + sci(worst_len) + ", max dihedral error " +
            sci(worst_dih) + ", tol 1e-10";
        return count == 125 && worst_len <= 1e-10 && worst_dih <= 1e-10;
    });

    run(11, "end-to-end reproduce", [&](std::string& d) {
        const auto first = run_cli("reproduce");
        const auto second = run_cli("reproduce");
        const bool same = first.second == second.second;
        d = "exit codes " + std::to_string(first.first) + ", " + std::to_string(second.first) + "; output " +
            (same ? "byte-identical" : "differs") + " (" + std::to_string(first.second.size()) + " bytes)";
        return first.first == 0 && second.first == 0 && same;
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
