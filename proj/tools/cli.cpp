#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "ssrr/serialize.hpp"

namespace ssrr::cli {

namespace {

struct Flags {
    std::string config;
    std::string out;
    std::string svg;
    std::string loci;
    std::string field;
    std::optional<int> samples;
    std::optional<double> epsilon;
    std::string beta;
    std::string grid;
    int jobs = 0;
    bool force_weak = false;
    std::string root;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open '" + path + "' for writing");
    f << text;
    if (!f.flush()) throw FormatError("write to '" + path + "' failed");
}

RunConfig load(const Flags& flags, bool required) {
    if (flags.config.empty()) {
        if (required) throw ConfigError("--config is required");
        return {};
    }
    RunConfig c = load_config(flags.config);
    if (flags.samples) c.samples = *flags.samples;
    if (flags.epsilon) c.epsilon = *flags.epsilon;
    if (!flags.beta.empty()) c.beta = parse_beta(flags.beta);
    if (flags.force_weak) c.force_weak = true;
    if (!flags.root.empty()) c.root = parse_root(flags.root);
    return c;
}

void cmd_polar(const Flags& flags, std::ostream& out) {
    const RunConfig c = load(flags, true);
    const UpstreamData up = c.require_upstream();
    const auto xi = c.polar_xi ? c.polar_xi : c.xi_r;
    if (!xi) throw ConfigError("config: missing field polar.xi (or xi_r)");
    const Polar polar = polar_trace(up, *xi, c.samples, flags.jobs);
    std::ostringstream csv;
    write_polar_csv(csv, polar);
    emit(flags.out, csv.str(), out);
    if (!flags.svg.empty()) {
        // Wall-parallel roots are marked only when the polar is the one at the reflection point.
        std::vector<ReflectionSolution> roots;
        if (c.wall_dir && c.xi_r && !c.polar_xi) roots = solve_reflection(c.require_reflection(), polar);
        emit(flags.svg, polar_svg(polar, roots), out);
    }
}

void cmd_reflect(const Flags& flags, std::ostream& out) {
    const RunConfig c = load(flags, true);
    const ReflectionConfig config = c.require_reflection();
    const auto sols = solve_reflection(config, c.samples, flags.jobs);
    emit(flags.out, dump_json(reflection_json(config, sols)), out);
}

void cmd_certify(const Flags& flags, std::ostream& out) {
    RunConfig c = load(flags, true);
    if (!flags.grid.empty()) std::tie(c.n_r, c.n_phi) = parse_grid(flags.grid);
    if (c.n_r < 2 || c.n_phi < 2) throw ConfigError("certify grid needs at least 2x2 nodes");
    if (!(c.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    const ReflectionConfig config = c.require_reflection();
    CertifyOptions o;
    o.epsilon = c.epsilon;
    o.beta = c.beta;
    o.n_r = c.n_r;
    o.n_phi = c.n_phi;
    o.polar_samples = c.samples;
    o.jobs = flags.jobs;
    o.force_weak = c.force_weak;
    o.root = c.root;
    emit(flags.out, dump_json(certificate_json(certify_nonexistence(config, o))), out);
}

void cmd_sweep(const Flags& flags, std::ostream& out) {
    RunConfig c = load(flags, true);
    if (!flags.grid.empty()) std::tie(c.sweep.n_tau, c.sweep.n_mach) = parse_grid(flags.grid);
    const SweepSpec& s = c.sweep;
    const SweepGrid grid = make_sweep_grid(s.tau_lo, s.tau_hi, s.n_tau, s.mach_lo, s.mach_hi, s.n_mach);
    const SweepResult r = sweep_transitions(c.scenario, c.require_gamma(), grid, c.samples, flags.jobs);
    std::ostringstream points;
    write_sweep_csv(points, r);
    std::ostringstream loci;
    write_loci_csv(loci, r);
    emit(flags.out, points.str(), out);
    if (!flags.loci.empty()) emit(flags.loci, loci.str(), out);
}

void cmd_diagnose(const Flags& flags, std::ostream& out) {
    const RunConfig c = load(flags, false);
    const std::string path = !flags.field.empty() ? flags.field : c.field.value_or("");
    if (path.empty()) throw ConfigError("diagnose needs --field or diagnose.field in the config");
    DiagnosticOptions o = c.diagnose;
    o.jobs = flags.jobs;
    const GridField field = read_field_file(path);
    emit(flags.out, dump_json(diagnostic_json(minimum_report(field, o))), out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regular shock reflection: polars, roots, non-existence certificates, sweeps, diagnostics", "ssrr"};
    app.require_subcommand(1);
    Flags flags;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", flags.config, "JSON configuration file");
        sub->add_option("--out", flags.out, "output file (default stdout)");
        sub->add_option("--jobs", flags.jobs, "worker threads, 0 = runtime default")->check(CLI::NonNegativeNumber);
    };
    auto* polar = app.add_subcommand("polar", "trace the shock polar at a point, CSV out");
    common(polar);
    polar->add_option("--samples", flags.samples, "samples per side")->check(CLI::Range(2, 1 << 20));
    polar->add_option("--svg", flags.svg, "also write an SVG plot");

    auto* reflect = app.add_subcommand("reflect", "solve the regular-reflection boundary condition, JSON out");
    common(reflect);
    reflect->add_option("--samples", flags.samples, "polar samples per side")->check(CLI::Range(2, 1 << 20));

    auto* certify = app.add_subcommand("certify", "certify non-existence of strong-type reflection, JSON out");
    common(certify);
    certify->add_option("--samples", flags.samples, "polar samples per side")->check(CLI::Range(2, 1 << 20));
    certify->add_option("--epsilon", flags.epsilon, "subsolution amplitude");
    certify->add_option("--beta", flags.beta, "auto or a value in (0, 1)");
    certify->add_option("--grid", flags.grid, "check grid n_r x n_phi, e.g. 256x256");
    certify->add_option("--root", flags.root, "root designated by the config: strong (default) or weak");
    certify->add_flag("--force-weak", flags.force_weak, "run the checks on the weak root");

    auto* sweep = app.add_subcommand("sweep", "sweep deflection and Mach number, CSV out");
    common(sweep);
    sweep->add_option("--samples", flags.samples, "polar samples per side")->check(CLI::Range(2, 1 << 20));
    sweep->add_option("--grid", flags.grid, "n_tau x n_mach, e.g. 90x5");
    sweep->add_option("--loci", flags.loci, "write the transition loci CSV here");

    auto* diagnose = app.add_subcommand("diagnose", "minimum-principle diagnostic of an SSRR-FIELD file, JSON out");
    common(diagnose);
    diagnose->add_option("--field", flags.field, "SSRR-FIELD file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (polar->parsed()) cmd_polar(flags, out);
        else if (reflect->parsed()) cmd_reflect(flags, out);
        else if (certify->parsed()) cmd_certify(flags, out);
        else if (sweep->parsed()) cmd_sweep(flags, out);
        else cmd_diagnose(flags, out);
    } catch (const ConfigError& e) {
        err << "ssrr: " << e.what() << "\n";
        return kConfig;
    } catch (const PreconditionError& e) {
        err << "ssrr: invalid configuration: " << e.what() << "\n";
        return kConfig;
    } catch (const DomainError& e) {
        err << "ssrr: invalid configuration: " << e.what() << "\n";
        return kConfig;
    } catch (const FormatError& e) {
        err << "ssrr: " << e.what() << "\n";
        return kIo;
    } catch (const Error& e) {
        err << "ssrr: " << e.what() << "\n";
        return kPhysics;
    }
    return kOk;
}

}  // namespace ssrr::cli
