#include "hypflex/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "hypflex/expr.hpp"
#include "hypflex/format.hpp"
#include "hypflex/variation.hpp"

namespace hypflex::cli {

SuspensionParams ParamInput::params() const
{
    return SuspensionParams::make(n, evaluate_expression(h), evaluate_expression(p), evaluate_expression(q));
}

double ParamInput::velocity() const
{
    return evaluate_expression(u);
}

double flex_tolerance()
{
    if (const char* env = std::getenv("HYPFLEX_TOL")) {
        const double tol = evaluate_expression(env);
        if (!(tol > 0.0)) throw std::invalid_argument("HYPFLEX_TOL must be positive");
        return tol;
    }
    return kDefaultFlexTolerance;
}

// reproduce ----------------------------------------------------------------

namespace {

std::size_t display_width(const std::string& s)
{
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width)
{
    const std::size_t w = display_width(s);
    return w >= width ? s + " " : s + std::string(width - w, ' ');
}

std::string fmt_err(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", x);
    return buf;
}

class CheckTable {
public:
    explicit CheckTable(std::ostream& out) : out_(out)
    {
        out_ << pad("check", 38) << pad("computed", 26) << pad("expected", 26) << pad("|error|", 10)
             << pad("tol", 9) << "status\n";
    }

    void value(const std::string& label, double computed, double expected, double tol)
    {
        const double err = std::abs(computed - expected);
        const bool pass = err <= tol;
        out_ << pad(label, 38) << pad(fmt17(computed), 26) << pad(fmt17(expected), 26) << pad(fmt_err(err), 10)
             << pad(fmt_err(tol), 9) << (pass ? "PASS" : "FAIL") << "\n";
        record(label, pass);
    }

    void claim(const std::string& label, bool pass)
    {
        out_ << label << ": " << (pass ? "PASS" : "FAIL") << "\n";
        record(label, pass);
    }

    void info(const std::string& label, const std::string& text) { out_ << pad(label, 38) << text << "\n"; }

    const std::string& first_failure() const { return first_failure_; }

private:
    void record(const std::string& label, bool pass)
    {
        if (!pass && first_failure_.empty()) first_failure_ = label;
    }

    std::ostream& out_;
    std::string first_failure_;
};

}  // namespace

int cmd_reproduce(std::ostream& out, std::ostream& err)
{
    const double s3 = std::sqrt(3.0);
    const double s7 = std::sqrt(7.0);
    const double s13 = std::sqrt(13.0);
    const ParamInput input;
    const SuspensionParams params = input.params();
    const double u = input.velocity();

    out << "hypflex reproduce\n";
    out << "instance: n = " << input.n << ", h = " << input.h << ", p = " << input.p << ", q = " << input.q
        << ", u = " << input.u << "\n\n";

    CheckTable table(out);
    try {
        const auto residual = flex_residual(params);
        table.value("minus-branch residual", residual.minus, 0.0, 1e-14);
        table.value("q solved (minus) = atanh(√3/2)", solve_q_for_flex(params.p, params.alpha, FlexBranch::minus),
                    std::atanh(s3 / 2.0), 1e-14);

        const FlexVelocities vel = velocity_from_u(params, u);
        table.value("v = -√3/4", vel.v, -s3 / 4.0, 1e-14);
        table.value("w = -1/4", vel.w, -0.25, 1e-14);

        const auto e = edge_lengths(params, vel, 0.0);
        table.value("cosh a(0) = 5/(2√3)", e.a.cosh, 5.0 / (2.0 * s3), 1e-14);
        table.value("cosh b(0) = 4/3", e.b.cosh, 4.0 / 3.0, 1e-14);
        table.value("cosh c(0) = 4/√3", e.c.cosh, 4.0 / s3, 1e-14);

        table.value("max |d edge/dt|", stationarity_report(params, vel), 0.0, 1e-12);
        table.value("d dist(N,S)/dt = √3/2", ns_distance_rate(vel), s3 / 2.0, 0.0);

        const auto dual = dihedral_rates(params, vel, RateMethod::dual);
        const auto fd = dihedral_rates(params, vel, RateMethod::finite_difference);
        table.value("d∠AB/dt = √13/4", dual.ab, s13 / 4.0, 1e-9);
        table.value("d∠NA/dt = √7/4", dual.na, s7 / 4.0, 1e-9);
        table.value("d∠NB/dt = -√13/4", dual.nb, -s13 / 4.0, 1e-9);
        table.value("d∠AB/dt finite-difference", fd.ab, dual.ab, 1e-8);
        table.value("d∠NA/dt finite-difference", fd.na, dual.na, 1e-8);
        table.value("d∠NB/dt finite-difference", fd.nb, dual.nb, 1e-8);

        const double closed = -3.0 * (s7 * std::log((4.0 + s7) / 3.0) + s13 * std::log((7.0 - s13) / 6.0));
        const double dV = schlafli_rate(params, vel);
        table.value("dV/dt (Schläfli, closed form)", dV, closed, 1e-12);
        table.value("dV/dt golden (50-digit)", dV, -0.15165583408190940482, 1e-12);
        table.value("dV/dt (Schläfli, finite-difference)", schlafli_rate(params, vel, RateMethod::finite_difference),
                    dV, 1e-8);
        table.value("dM/dt = dV/dt", mean_curvature_rate(params, vel), dV, 1e-12);
        const auto oracle = volume_oracle_rate(params, vel);
        table.value("dV/dt (volume oracle)", oracle.estimate, dV, 1e-5);
        table.info("volume V(0) (oracle)", fmt17(volume_oracle(params, vel, 0.0).volume));

        out << "\n";
        for (double t : {-0.05, 0.0, 0.05}) {
            const auto report = check_embedding(build_mesh(params, vel, t));
            std::ostringstream label;
            label << "embedded at t = " << fmt17(t);
            table.claim(label.str(), report.embedded);
        }
        table.claim("dV/dt < 0", dV < 0.0);
    } catch (const std::exception& ex) {
        err << "reproduce: " << ex.what() << "\n";
        return 2;
    }

    if (!table.first_failure().empty()) {
        out << "\nFAILED: " << table.first_failure() << "\n";
        return 1;
    }
    out << "\nall checks passed\n";
    return 0;
}

// flex-check ---------------------------------------------------------------

int cmd_flex_check(const FlexCheckConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        SuspensionParams params = config.input.params();
        const double tol = flex_tolerance();
        out << "n = " << params.n << ", alpha = " << fmt17(params.alpha) << "\n";
        out << "h = " << fmt17(params.h) << ", p = " << fmt17(params.p) << ", q = " << fmt17(params.q) << "\n";

        for (FlexBranch b : {FlexBranch::minus, FlexBranch::plus}) {
            out << "solved q (" << to_string(b) << "): ";
            try {
                out << fmt17(solve_q_for_flex(params.p, params.alpha, b)) << "\n";
            } catch (const NoSolutionError& ex) {
                out << "none (" << ex.what() << ")\n";
            }
        }
        if (config.solve_q) {
            params.q = solve_q_for_flex(params.p, params.alpha, config.branch);
            params.validate();
            out << "using q = " << fmt17(params.q) << " from the " << to_string(config.branch) << " branch\n";
        }

        const auto r = flex_residual(params);
        out << "minus-branch residual " << fmt17(r.minus) << "\n";
        out << "plus-branch residual " << fmt17(r.plus) << "\n";
        const bool flexible = is_flexible(params, tol);
        out << "flexible (tol " << fmt_err(tol) << "): " << (flexible ? "yes" : "no") << "\n";

        const FlexVelocities vel = velocity_from_u(params, config.input.velocity());
        out << "u = " << fmt17(vel.u) << ", v = " << fmt17(vel.v) << ", w = " << fmt17(vel.w) << "\n";
        const auto rates = edge_length_rates(params, vel);
        out << "edge rates: a " << fmt17(rates.a) << ", b " << fmt17(rates.b) << ", c " << fmt17(rates.c) << "\n";
        out << "max |d edge/dt| = " << fmt17(stationarity_report(params, vel)) << "\n";
        const double ns = ns_distance_rate(vel);
        out << "d dist(N,S)/dt = " << fmt17(ns) << (ns != 0.0 ? " (nontrivial)" : " (trivial)") << "\n";
        return 0;
    } catch (const std::exception& ex) {
        err << "flex-check: " << ex.what() << "\n";
        return 2;
    }
}

// sweep --------------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

std::string csv_escape(std::string s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

SweepRow evaluate_row(int n, double p, double h, FlexBranch branch, double u)
{
    SweepRow row;
    row.n = n;
    row.p = p;
    row.h = h;
    row.branch = branch;
    row.u = u;
    try {
        const double alpha = std::numbers::pi / n;
        row.q = solve_q_for_flex(p, alpha, branch);
        const SuspensionParams params = SuspensionParams::make(n, h, p, row.q);
        const FlexVelocities vel = velocity_from_u(params, u);
        row.v = vel.v;
        row.w = vel.w;
        const auto report = variation_report(params, vel);
        row.dV_dt = report.dV_dt;
        row.dM_dt = report.dM_dt;
        row.embedded = check_embedding(build_mesh(params, vel, 0.0)).embedded;
    } catch (const std::exception& ex) {
        row.error = ex.what();
    }
    return row;
}

}  // namespace

std::vector<double> parse_real_range(const std::string& spec)
{
    const auto parts = split(spec, ':');
    if (parts.size() == 1) return {evaluate_expression(parts[0])};
    if (parts.size() != 3) throw std::invalid_argument("range '" + spec + "' must be 'value' or 'lo:hi:count'");
    const double lo = evaluate_expression(parts[0]);
    const double hi = evaluate_expression(parts[1]);
    const double count = evaluate_expression(parts[2]);
    if (count < 1.0 || count != std::floor(count)) throw std::invalid_argument("range count must be a positive integer");
    const int k = static_cast<int>(count);
    std::vector<double> out;
    for (int i = 0; i < k; ++i) out.push_back(k == 1 ? lo : lo + (hi - lo) * i / (k - 1));
    return out;
}

std::vector<int> parse_int_range(const std::string& spec)
{
    const auto parts = split(spec, ':');
    auto as_int = [&](const std::string& s) {
        const double x = evaluate_expression(s);
        if (x != std::floor(x)) throw std::invalid_argument("'" + s + "' is not an integer");
        return static_cast<int>(x);
    };
    if (parts.size() == 1) return {as_int(parts[0])};
    if (parts.size() != 2) throw std::invalid_argument("integer range '" + spec + "' must be 'value' or 'lo:hi'");
    std::vector<int> out;
    for (int i = as_int(parts[0]); i <= as_int(parts[1]); ++i) out.push_back(i);
    return out;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config)
{
    const auto ns = parse_int_range(config.n_range);
    const auto ps = parse_real_range(config.p_range);
    const auto hs = parse_real_range(config.h_range);
    const double u = evaluate_expression(config.u);
    std::vector<FlexBranch> branches;
    if (config.branch == "both")
        branches = {FlexBranch::minus, FlexBranch::plus};
    else
        branches = {parse_branch(config.branch)};

    struct Job {
        int n;
        double p, h;
        FlexBranch b;
    };
    std::vector<Job> jobs;
    for (int n : ns)
        for (double p : ps)
            for (double h : hs)
                for (FlexBranch b : branches) jobs.push_back({n, p, h, b});

    std::vector<SweepRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++)
            rows[i] = evaluate_row(jobs[i].n, jobs[i].p, jobs[i].h, jobs[i].b, u);
    };
    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, jobs.size())));
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out)
{
    out << "n,p,h,branch,q,u,v,w,dV_dt,dM_dt,embedded,error\n";
    for (const auto& r : rows) {
        out << r.n << ',' << fmt17(r.p) << ',' << fmt17(r.h) << ',' << to_string(r.branch) << ',';
        if (r.error.empty())
            out << fmt17(r.q) << ',' << fmt17(r.u) << ',' << fmt17(r.v) << ',' << fmt17(r.w) << ','
                << fmt17(r.dV_dt) << ',' << fmt17(r.dM_dt) << ',' << (r.embedded ? "true" : "false") << ",\n";
        else
            out << ",,,,,,," << csv_escape(r.error) << "\n";
    }
}

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        write_sweep_csv(run_sweep(config), out);
        return 0;
    } catch (const std::exception& ex) {
        err << "sweep: " << ex.what() << "\n";
        return 2;
    }
}

// mesh ---------------------------------------------------------------------

int cmd_mesh(const MeshConfig& config, std::ostream& out, std::ostream& log)
{
    try {
        const SuspensionParams params = config.input.params();
        const FlexVelocities vel = velocity_from_u(params, config.input.velocity());
        const double t = evaluate_expression(config.t);
        const SuspensionMesh mesh = build_mesh(params, vel, t);
        export_mesh(mesh, config.format, out);

        // Census against the closed forms of the brick tetrahedron.
        const auto m = tetra_metrics(params, vel, t);
        double len_dev = 0.0;
        double dih_dev = 0.0;
        int count[3] = {0, 0, 0};
        for (const auto& e : mesh.edges) {
            double l = 0.0;
            double d = 0.0;
            switch (e.cls) {
            case EdgeClass::equator: l = m.edges.a.value; d = m.dihedrals.ab.radians(); break;
            case EdgeClass::apex_a: l = m.edges.b.value; d = m.dihedrals.na.radians(); break;
            case EdgeClass::apex_b: l = m.edges.c.value; d = m.dihedrals.nb.radians(); break;
            }
            ++count[static_cast<int>(e.cls)];
            len_dev = std::max(len_dev, std::abs(e.length - l));
            dih_dev = std::max(dih_dev, std::abs(e.dihedral - 2.0 * d));
        }
        log << "mesh census: " << mesh.vertices.size() << " vertices, " << mesh.edges.size() << " edges ("
            << count[0] << " equator, " << count[1] << " apex_a, " << count[2] << " apex_b), " << mesh.faces.size()
            << " faces\n";
        log << "max edge length deviation " << fmt_err(len_dev) << ", max dihedral deviation " << fmt_err(dih_dev)
            << "\n";
        if (len_dev > 1e-10 || dih_dev > 1e-10) {
            log << "mesh: census disagrees with the closed forms\n";
            return 1;
        }
        return 0;
    } catch (const std::exception& ex) {
        log << "mesh: " << ex.what() << "\n";
        return 2;
    }
}

}  // namespace hypflex::cli
