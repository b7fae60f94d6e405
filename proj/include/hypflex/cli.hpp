#pragma once

// Command implementations behind the hypflex executable. Each command writes
// to the given streams and returns a process exit code.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypflex/flex.hpp"
#include "hypflex/suspension.hpp"

namespace hypflex::cli {

/// Parameters as entered on the command line; every field is an expression.
struct ParamInput {
    int n = 6;
    std::string h = "atanh(1/2)";
    std::string p = "atanh(1/2)";
    std::string q = "atanh(sqrt(3)/2)";
    std::string u = "sqrt(3)/4";

    SuspensionParams params() const;
    double velocity() const;
};

/// Flexibility tolerance, overridable through HYPFLEX_TOL.
double flex_tolerance();

int cmd_reproduce(std::ostream& out, std::ostream& err);

struct FlexCheckConfig {
    ParamInput input;
    bool solve_q = false;
    FlexBranch branch = FlexBranch::minus;
};

int cmd_flex_check(const FlexCheckConfig& config, std::ostream& out, std::ostream& err);

struct SweepConfig {
    std::string n_range = "6";
    std::string p_range = "atanh(1/2)";
    std::string h_range = "atanh(1/2)";
    std::string u = "sqrt(3)/4";
    std::string branch = "minus";  // minus, plus or both
    unsigned threads = 0;          // 0: hardware concurrency
};

struct SweepRow {
    int n = 0;
    double p = 0.0;
    double h = 0.0;
    FlexBranch branch = FlexBranch::minus;
    double u = 0.0;
    double q = 0.0;
    double v = 0.0;
    double w = 0.0;
    double dV_dt = 0.0;
    double dM_dt = 0.0;
    bool embedded = false;
    std::string error;
};

/// Parses "lo:hi:count" (count evenly spaced values) or a single expression.
std::vector<double> parse_real_range(const std::string& spec);

/// Parses "lo:hi" (inclusive integers) or a single integer.
std::vector<int> parse_int_range(const std::string& spec);

/// Evaluates every grid point; row order is n, then p, then h, then branch.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

struct MeshConfig {
    ParamInput input;
    std::string t = "0";
    MeshFormat format = MeshFormat::json;
};

/// Writes the mesh to `out` and a census check (mesh against the closed
/// forms) to `log`. Fails if the census deviates by more than 1e-10.
int cmd_mesh(const MeshConfig& config, std::ostream& out, std::ostream& log);

}  // namespace hypflex::cli
