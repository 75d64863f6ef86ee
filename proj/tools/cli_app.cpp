#include "cli_app.hpp"

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaprecover/blrecover.hpp"
#include "gaprecover/bounds.hpp"
#include "gaprecover/degrecover.hpp"
#include "gaprecover/errors.hpp"
#include "gaprecover/genlib.hpp"
#include "gaprecover/harness.hpp"
#include "gaprecover/sequence_io.hpp"

namespace gaprecover::cli {

namespace {

using json = nlohmann::json;

struct Common {
    std::string out_path;
    std::string format = "csv";
};

struct GapArgs {
    Index s = 0;
    int m = 0;
    GapSpec gap() const { return {s, m}; }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out_path, "Write results to this file instead of standard output");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_gap(CLI::App* cmd, GapArgs& g) {
    cmd->add_option("--gap", g.s, "First missing index s");
    cmd->add_option("--m", g.m, "Gap order; m+1 samples are missing")->check(CLI::NonNegativeNumber);
}

// Writes through --out when given.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InvalidArgument("cannot write " + path);
        }
    }
    std::ostream& stream(std::ostream& fallback) { return file_.is_open() ? file_ : fallback; }

private:
    std::ofstream file_;
};

Norm parse_norm(const std::string& s) {
    if (s == "1") return Norm::one;
    if (s == "2") return Norm::two;
    if (s == "inf") return Norm::inf;
    throw InvalidArgument("norm must be 1, 2 or inf");
}

double parse_cutoff(const std::string& text) {
    const double v = parse_angle(text);
    if (!(v > 0.0 && v < std::numbers::pi)) throw InvalidArgument("--cutoff must lie in (0, pi)");
    return v;
}

double parse_omega0(const std::string& text) {
    const double v = parse_angle(text);
    if (!(v > -std::numbers::pi && v <= std::numbers::pi)) throw InvalidArgument("--omega0 must lie in (-pi, pi]");
    return v;
}

void emit_recovered(std::ostream& os, const std::string& format, const GapSpec& gap, const std::vector<Complex>& values,
                    double condition) {
    std::vector<Complex> clean(values.size());
    // adding +0 turns -0 into 0
    for (std::size_t p = 0; p < values.size(); ++p) clean[p] = values[p] + Complex{};
    if (format == "csv") {
        write_values_csv(os, gap.s, clean);
        return;
    }
    json rows = json::array();
    for (std::size_t p = 0; p < values.size(); ++p) {
        rows.push_back({{"t", gap.s + static_cast<Index>(p)}, {"re", clean[p].real()}, {"im", clean[p].imag()}});
    }
    os << json{{"recovered", rows}, {"condition_estimate", condition}}.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Recovery of missing blocks in discrete-time sequences"};
    app.require_subcommand(1);

    // recover-bl
    Common bl_common;
    GapArgs bl_gap;
    std::string bl_in, bl_cutoff;
    bool bl_single = false;
    auto* recover_bl_cmd = app.add_subcommand("recover-bl", "Band-limited projection recovery");
    recover_bl_cmd->add_option("--in", bl_in, "Sequence CSV (t,re,im)")->required();
    recover_bl_cmd->add_option("--cutoff", bl_cutoff, "Cutoff Omega in (0,pi), e.g. 0.1pi")->required();
    recover_bl_cmd->add_flag("--single", bl_single, "Use the single-sample closed form (m = 0)");
    add_gap(recover_bl_cmd, bl_gap);
    add_common(recover_bl_cmd, bl_common);

    // recover-deg
    Common deg_common;
    GapArgs deg_gap;
    std::string deg_in, deg_omega0 = "pi";
    int deg_max_order = default_max_order;
    bool deg_single = false;
    auto* recover_deg_cmd = app.add_subcommand("recover-deg", "Recovery from Z-transform degeneracy");
    recover_deg_cmd->add_option("--in", deg_in, "Sequence CSV (t,re,im)")->required();
    recover_deg_cmd->add_option("--omega0", deg_omega0, "Probe frequency in (-pi,pi]");
    recover_deg_cmd->add_option("--max-order", deg_max_order, "Largest accepted m")->check(CLI::NonNegativeNumber);
    recover_deg_cmd->add_flag("--single", deg_single, "Use the single-sample closed form (m = 0)");
    add_gap(recover_deg_cmd, deg_gap);
    add_common(recover_deg_cmd, deg_common);

    // generate
    Common gen_common;
    GapArgs gen_gap;
    std::string gen_kind = "bl", gen_cutoff = "0.1pi", gen_omega0 = "pi";
    Index gen_q = 50;
    int gen_atoms = 5;
    double gen_spread = 10.0, gen_noise = 0.0;
    unsigned long long gen_seed = default_seed;
    bool gen_real = false;
    auto* generate_cmd = app.add_subcommand("generate", "Synthesize a test sequence on [-q, q]");
    generate_cmd->add_option("--kind", gen_kind, "Signal class")->check(CLI::IsMember({"bl", "ell1", "degenerate"}));
    generate_cmd->add_option("--q", gen_q, "Window radius")->check(CLI::PositiveNumber);
    generate_cmd->add_option("--cutoff", gen_cutoff, "Band of the bl generator");
    generate_cmd->add_option("--atoms", gen_atoms, "Number of sinc atoms")->check(CLI::PositiveNumber);
    generate_cmd->add_option("--spread", gen_spread, "Atom centers uniform in [-spread, spread]");
    generate_cmd->add_option("--omega0", gen_omega0, "Degeneracy frequency of the degenerate generator");
    generate_cmd->add_option("--noise", gen_noise, "Noise level ||eta||/||x||")->check(CLI::NonNegativeNumber);
    generate_cmd->add_option("--seed", gen_seed, "Random seed");
    generate_cmd->add_flag("--real", gen_real, "Real-valued samples");
    add_gap(generate_cmd, gen_gap);
    generate_cmd->add_option("--out", gen_common.out_path, "Write the sequence to this file");

    // experiment
    Common exp_common;
    std::string exp_config, exp_preset, exp_summary;
    unsigned long long exp_seed = 0;
    int exp_trials = 0, exp_threads = 0;
    auto* experiment_cmd = app.add_subcommand("experiment", "Run a seeded Monte-Carlo comparison");
    auto* config_opt = experiment_cmd->add_option("--config", exp_config, "Experiment JSON config");
    experiment_cmd->add_option("--preset", exp_preset, "Built-in configuration")
        ->check(CLI::IsMember({"fig1", "fig2"}))
        ->excludes(config_opt);
    auto* seed_opt = experiment_cmd->add_option("--seed", exp_seed, "Override the config seed");
    experiment_cmd->add_option("--trials", exp_trials, "Override the trial count")->check(CLI::PositiveNumber);
    experiment_cmd->add_option("--threads", exp_threads, "Worker threads")->check(CLI::PositiveNumber);
    experiment_cmd->add_option("--summary", exp_summary, "Also write the JSON summary to this file");
    add_common(experiment_cmd, exp_common);

    // bounds
    Common bounds_common;
    GapArgs bounds_gap;
    std::string bounds_scheme = "bl", bounds_cutoff = "0.1pi", bounds_omega0 = "pi", bounds_from = "2", bounds_to = "2";
    auto* bounds_cmd = app.add_subcommand("bounds", "Operator norm of a recovery map");
    bounds_cmd->add_option("--scheme", bounds_scheme, "bl: (I-A)^-1, deg: B(omega0)^-1")->check(CLI::IsMember({"bl", "deg"}));
    bounds_cmd->add_option("--cutoff", bounds_cutoff, "Cutoff for the bl scheme");
    bounds_cmd->add_option("--omega0", bounds_omega0, "Probe frequency for the deg scheme");
    bounds_cmd->add_option("--from", bounds_from, "Input norm")->check(CLI::IsMember({"1", "2", "inf"}));
    bounds_cmd->add_option("--to", bounds_to, "Output norm")->check(CLI::IsMember({"1", "2", "inf"}));
    add_gap(bounds_cmd, bounds_gap);
    add_common(bounds_cmd, bounds_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (recover_bl_cmd->parsed()) {
            const auto x = read_sequence_csv_file(bl_in);
            const Kernel k(parse_cutoff(bl_cutoff));
            const auto gap = bl_gap.gap();
            Sink sink(bl_common.out_path);
            if (bl_single) {
                if (gap.m != 0) throw InvalidGap("--single requires --m 0");
                emit_recovered(sink.stream(out), bl_common.format, gap, {recover_bl_single(x, gap.s, k)}, 1.0);
            } else {
                const auto r = recover_bl(x, gap, k);
                emit_recovered(sink.stream(out), bl_common.format, gap, r.recovered, r.condition_estimate);
            }
        } else if (recover_deg_cmd->parsed()) {
            const auto x = read_sequence_csv_file(deg_in);
            const double omega0 = parse_omega0(deg_omega0);
            const auto gap = deg_gap.gap();
            Sink sink(deg_common.out_path);
            if (deg_single) {
                if (gap.m != 0) throw InvalidGap("--single requires --m 0");
                emit_recovered(sink.stream(out), deg_common.format, gap, {recover_deg_single(x, gap.s, omega0)}, 1.0);
            } else {
                const auto r = recover_deg(x, gap, omega0, deg_max_order);
                emit_recovered(sink.stream(out), deg_common.format, gap, r.recovered, r.condition_estimate);
            }
        } else if (generate_cmd->parsed()) {
            const IndexRange window{-gen_q, gen_q};
            FiniteSequence x;
            if (gen_kind == "bl") {
                x = synth_bandlimited(random_atoms(parse_cutoff(gen_cutoff), gen_atoms, gen_spread, gen_seed, gen_real), window);
            } else {
                x = synth_ell1(window, gen_seed, gen_real);
                if (gen_kind == "degenerate") x = make_degenerate(x, gen_gap.gap(), parse_omega0(gen_omega0));
            }
            if (gen_noise > 0.0) x = add_noise(x, gen_noise, gen_seed + 1, gen_real).noisy;
            Sink sink(gen_common.out_path);
            write_sequence_csv(sink.stream(out), x);
        } else if (experiment_cmd->parsed()) {
            ExperimentConfig cfg;
            if (!exp_config.empty()) {
                std::ifstream in(exp_config);
                if (!in) throw InvalidArgument("cannot open " + exp_config);
                std::stringstream buf;
                buf << in.rdbuf();
                cfg = config_from_json(buf.str());
            } else if (exp_preset == "fig2") {
                cfg = figure2_config();
            } else if (exp_preset == "fig1") {
                cfg = figure1_config();
            } else {
                throw InvalidArgument("experiment needs --config or --preset");
            }
            if (seed_opt->count() > 0) cfg.seed = exp_seed;
            if (exp_trials > 0) cfg.trials = exp_trials;
            if (exp_threads > 0) cfg.threads = exp_threads;
            const auto records = run_experiment(cfg);
            const auto summary = summarize(records);
            Sink sink(exp_common.out_path);
            if (exp_common.format == "csv") {
                write_records_csv(sink.stream(out), records);
            } else {
                sink.stream(out) << summary_to_json(summary, cfg) << '\n';
            }
            if (!exp_summary.empty()) {
                std::ofstream s(exp_summary);
                if (!s) throw InvalidArgument("cannot write " + exp_summary);
                s << summary_to_json(summary, cfg) << '\n';
            }
        } else if (bounds_cmd->parsed()) {
            const auto gap = bounds_gap.gap();
            require_normalized(gap);
            const bool bl = bounds_scheme == "bl";
            OpNormOptions options;
            options.matrix_id = bl ? "(I-A)^-1" : "B^-1";
            const auto map = bl ? bl_recovery_map(Kernel(parse_cutoff(bounds_cutoff)), gap.m)
                                : deg_recovery_map(parse_omega0(bounds_omega0), gap);
            const auto report = op_norm(map, parse_norm(bounds_from), parse_norm(bounds_to), options);
            Sink sink(bounds_common.out_path);
            auto& os = sink.stream(out);
            if (bounds_common.format == "csv") {
                os << "matrix,from,to,value,upper,method\n"
                   << report.matrix_id << ',' << to_string(report.from) << ',' << to_string(report.to) << ','
                   << format_double(report.value) << ',' << format_double(report.upper) << ',' << to_string(report.method)
                   << '\n';
            } else {
                os << json{{"matrix", report.matrix_id},
                           {"from", to_string(report.from)},
                           {"to", to_string(report.to)},
                           {"value", report.value},
                           {"upper", report.upper},
                           {"method", to_string(report.method)}}
                          .dump(2)
                   << '\n';
            }
        }
    } catch (const SingularSystem& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const DimensionTooLarge& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const NonFiniteValue& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace gaprecover::cli
