// orbint: command-line driver for orbital integral evaluation and sweeps.

#include "orbint/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace orbint;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

struct SweepOptions {
    long p = 3;
    std::size_t n = 2;
    long bound = 2;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::uint64_t threshold = 0;
    int jobs = 0;
    std::string format = "json";
    std::string sampler = "mixed";
    bool grid = false;
};

void add_sweep_flags(CLI::App* sub, SweepOptions& o) {
    sub->add_option("--p", o.p, "odd prime")->capture_default_str();
    sub->add_option("--n", o.n, "dimension")->capture_default_str();
    sub->add_option("--bound", o.bound, "valuation bound")->capture_default_str();
    sub->add_option("--samples", o.samples, "number of samples")->capture_default_str();
    sub->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
    sub->add_option("--threshold", o.threshold, "enumeration threshold (default: env, else 3^10, 10^15 on n = 1 grids)");
    sub->add_option("--jobs", o.jobs, "worker threads, 0 = all")->capture_default_str();
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

std::uint64_t effective_threshold(std::uint64_t flag, std::uint64_t fallback = kDefaultEnumerationThreshold) {
    return flag ? flag : threshold_from_env(fallback);
}

int run_and_print(Mode mode, const SweepOptions& o) {
    SweepConfig cfg;
    cfg.p = o.p;
    cfg.n = mode == Mode::AflN1 ? 1 : o.n;
    cfg.bound = o.bound;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    const bool grid = mode == Mode::AflN1 || o.grid;
    cfg.threshold = effective_threshold(o.threshold, grid ? kGridEnumerationThreshold : kDefaultEnumerationThreshold);
    cfg.mode = mode;
    cfg.sampler = sampler_from_string(o.sampler);
    cfg.grid = o.grid;
    cfg.jobs = o.jobs;
    SweepReport rep = run_sweep(cfg);
    if (o.format == "csv")
        std::cout << rep.to_csv();
    else
        std::cout << rep.to_json().dump(2) << '\n';
    std::cerr << "pass " << rep.counts.pass << "  fail " << rep.counts.fail << "  skipped " << rep.counts.skipped
              << "  overflow " << rep.counts.overflow << "  (" << rep.wall_clock_seconds << " s)\n";
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact orbital integrals and verification sweeps"};
    app.require_subcommand(1);

    std::string input;
    long p = 3;
    std::uint64_t threshold = 0;
    auto add_single = [&](CLI::App* sub) {
        sub->add_option("--input", input, "datum JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("--p", p, "odd prime")->capture_default_str();
        sub->add_option("--threshold", threshold, "enumeration threshold");
    };
    auto* orb_gl_cmd = app.add_subcommand("orb-gl", "orbital integral of a GL datum");
    add_single(orb_gl_cmd);
    auto* orb_u_cmd = app.add_subcommand("orb-u", "self-dual lattice count of a unitary datum");
    add_single(orb_u_cmd);
    auto* match_cmd = app.add_subcommand("match", "invariants, side and matched unitary datum");
    add_single(match_cmd);

    SweepOptions fl, ind, inv, afl;
    ind.n = 2;
    ind.bound = 1;
    afl.n = 1;
    afl.bound = 7;
    auto* fl_cmd = app.add_subcommand("verify-fl", "fundamental lemma sweep");
    add_sweep_flags(fl_cmd, fl);
    fl_cmd->add_flag("--grid", fl.grid, "exhaustive n = 1 grid with valuations up to --bound");
    fl_cmd->add_option("--sampler", fl.sampler, "gamma sampler")
        ->check(CLI::IsMember({"uniform", "compact", "mixed"}))
        ->capture_default_str();
    auto* ind_cmd = app.add_subcommand("verify-induction", "Cayley reduction sweep");
    add_sweep_flags(ind_cmd, ind);
    auto* inv_cmd = app.add_subcommand("verify-invariance", "group-action covariance sweep");
    add_sweep_flags(inv_cmd, inv);
    auto* afl_cmd = app.add_subcommand("verify-afl-n1", "n = 1 derivative grid (valuations up to --bound)");
    add_sweep_flags(afl_cmd, afl);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*orb_gl_cmd || *orb_u_cmd || *match_cmd) {
            const FieldParams params = FieldParams::make(p);
            const std::uint64_t t = effective_threshold(threshold);
            const json datum = read_json_file(input);
            if (*orb_gl_cmd) {
                std::cout << run_orb(datum, params, t).dump(2) << '\n';
            } else if (*orb_u_cmd) {
                const UOrbitDatum y = u_datum_from_json(datum, params.epsilon);
                std::cout << json{{"count", orb_u(y, params, t)}}.dump(2) << '\n';
            } else {
                const GLOrbitDatum x = gl_datum_from_json(datum);
                const OrbitInvariants iv = invariants_gl(x);
                json out{{"invariants", to_json_value(iv)}, {"rs", is_rs(iv)}};
                if (is_rs(iv)) {
                    const Side side = match_side(iv, params);
                    out["side"] = side == Side::Split ? "split" : "non-split";
                    out["omega"] = transfer_factor(x, params);
                    if (side == Side::Split)
                        out["matched"] = to_json_value(build_matched_u_datum(x, params), params.epsilon);
                }
                std::cout << out.dump(2) << '\n';
            }
            return 0;
        }
        if (*fl_cmd) return run_and_print(Mode::Fl, fl);
        if (*ind_cmd) return run_and_print(Mode::Induction, ind);
        if (*inv_cmd) return run_and_print(Mode::Invariance, inv);
        if (*afl_cmd) return run_and_print(Mode::AflN1, afl);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
