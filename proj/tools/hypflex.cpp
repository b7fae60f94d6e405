#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "hypflex/cli.hpp"

namespace {

using namespace hypflex;

void add_param_options(CLI::App* cmd, cli::ParamInput& in, bool with_u)
{
    // --h is the apex height, so help is reachable only as --help.
    cmd->set_help_flag("--help", "print this help message and exit");
    cmd->add_option("--n", in.n, "number of star petals")->capture_default_str()->check(CLI::Range(3, 1000));
    cmd->add_option("--h", in.h, "apex height (expression)")->capture_default_str();
    cmd->add_option("--p", in.p, "inner star radius (expression)")->capture_default_str();
    cmd->add_option("--q", in.q, "outer star radius (expression)")->capture_default_str();
    if (with_u) cmd->add_option("--u", in.u, "velocity of h (expression)")->capture_default_str();
}

// Returns the stream to write to: stdout for an empty path or "-".
std::ostream* open_output(const std::string& path, std::unique_ptr<std::ofstream>& holder)
{
    if (path.empty() || path == "-") return &std::cout;
    holder = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*holder) throw std::runtime_error("cannot open '" + path + "' for writing");
    return holder.get();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Infinitesimal flex of a hyperbolic suspension: reproduction, sweeps and meshes"};
    app.require_subcommand(1);

    auto* reproduce = app.add_subcommand("reproduce", "recompute the reference instance and check every value");

    cli::FlexCheckConfig flex_cfg;
    std::string flex_branch = "minus";
    auto* flex = app.add_subcommand("flex-check", "test the flex relation and report velocities");
    add_param_options(flex, flex_cfg.input, true);
    flex->add_flag("--solve-q", flex_cfg.solve_q, "replace q by the solution of the flex relation");
    flex->add_option("--branch", flex_branch, "branch used by --solve-q")
        ->check(CLI::IsMember({"minus", "plus"}))
        ->capture_default_str();

    cli::SweepConfig sweep_cfg;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "evaluate a grid of flexible instances to CSV");
    sweep->add_option("--n-range", sweep_cfg.n_range, "n or lo:hi")->capture_default_str();
    sweep->add_option("--p-range", sweep_cfg.p_range, "p or lo:hi:count")->capture_default_str();
    sweep->add_option("--h-range", sweep_cfg.h_range, "h or lo:hi:count")->capture_default_str();
    sweep->add_option("--u", sweep_cfg.u, "velocity of h")->capture_default_str();
    sweep->add_option("--branch", sweep_cfg.branch, "minus, plus or both")
        ->check(CLI::IsMember({"minus", "plus", "both"}))
        ->capture_default_str();
    sweep->add_option("--threads", sweep_cfg.threads, "worker threads (0: all cores)")->capture_default_str();
    sweep->add_option("--out", sweep_out, "CSV path (default stdout)");

    cli::MeshConfig mesh_cfg;
    std::string mesh_format = "json";
    std::string mesh_out;
    auto* mesh = app.add_subcommand("mesh", "export the deformed suspension");
    add_param_options(mesh, mesh_cfg.input, true);
    mesh->add_option("--t", mesh_cfg.t, "deformation parameter (expression)")->capture_default_str();
    mesh->add_option("--format", mesh_format, "json or obj")
        ->check(CLI::IsMember({"json", "obj"}))
        ->capture_default_str();
    mesh->add_option("--out", mesh_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (reproduce->parsed()) return cli::cmd_reproduce(std::cout, std::cerr);
        if (flex->parsed()) {
            flex_cfg.branch = parse_branch(flex_branch);
            return cli::cmd_flex_check(flex_cfg, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            std::unique_ptr<std::ofstream> file;
            std::ostream* out = open_output(sweep_out, file);
            const int rc = cli::cmd_sweep(sweep_cfg, *out, std::cerr);
            out->flush();
            if (!*out) throw std::runtime_error("write to '" + sweep_out + "' failed");
            return rc;
        }
        if (mesh->parsed()) {
            mesh_cfg.format = parse_mesh_format(mesh_format);
            std::unique_ptr<std::ofstream> file;
            std::ostream* out = open_output(mesh_out, file);
            const int rc = cli::cmd_mesh(mesh_cfg, *out, std::cerr);
            out->flush();
            if (!*out) throw std::runtime_error("write to '" + mesh_out + "' failed");
            return rc;
        }
    } catch (const std::exception& ex) {
        std::cerr << "hypflex: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
