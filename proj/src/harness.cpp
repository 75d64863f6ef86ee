#include "gaprecover/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "gaprecover/blrecover.hpp"
#include "gaprecover/bounds.hpp"
#include "gaprecover/degrecover.hpp"
#include "gaprecover/errors.hpp"
#include "gaprecover/genlib.hpp"
#include "gaprecover/sequence_io.hpp"

namespace gaprecover {

namespace {

using json = nlohmann::json;

std::string pi_multiple(double radians) {
    const double coef = radians / std::numbers::pi;
    if (coef == 1.0) return "pi";
    if (coef == -1.0) return "-pi";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%gpi", coef);
    return buf;
}

struct Path {
    FiniteSequence observed;  // gap removed, truncated to |t| <= q
    std::vector<Complex> truth;
};

Path generate_path(const ExperimentConfig& cfg, std::uint64_t trial_seed) {
    const IndexRange window = observation_window(cfg);
    FiniteSequence full;
    std::vector<Complex> truth(cfg.gap.size());
    switch (cfg.generator) {
        case Generator::bl:
        case Generator::noisy_bl: {
            const auto spec = random_atoms(cfg.cutoff_true, cfg.atoms, cfg.atom_spread, trial_seed);
            full = synth_bandlimited(spec, window);
            for (std::size_t p = 0; p < truth.size(); ++p) truth[p] = bandlimited_value(spec, cfg.gap.s + static_cast<Index>(p));
            break;
        }
        case Generator::ell1:
            full = synth_ell1(window, trial_seed);
            break;
        case Generator::degenerate:
            full = make_degenerate(synth_ell1(window, trial_seed), cfg.gap, cfg.omega0_gen);
            break;
    }
    if (cfg.noise_level > 0.0) full = add_noise(full, cfg.noise_level, trial_seed ^ 0x9E3779B97F4A7C15ull).noisy;
    if (cfg.generator != Generator::bl || cfg.noise_level > 0.0) {
        for (std::size_t p = 0; p < truth.size(); ++p) truth[p] = full[cfg.gap.s + static_cast<Index>(p)];
    }
    return {truncate(full, cfg.q).kept.without(cfg.gap), std::move(truth)};
}

MethodOutcome apply_method(const MethodSpec& method, const Path& path, const GapSpec& gap) {
    MethodOutcome out{method, {}, 0.0, 0.0, true, std::nullopt};
    try {
        const bool single = method.kind == MethodKind::wx1 || method.kind == MethodKind::wx2;
        if (single && gap.m != 0) throw InvalidGap("closed-form methods need a single missing sample");
        double map_norm = 0.0;
        double data_norm = 0.0;
        switch (method.kind) {
            case MethodKind::wx1:
            case MethodKind::thm1: {
                const Kernel k(method.param);
                out.recovered = method.kind == MethodKind::wx1
                                    ? std::vector<Complex>{recover_bl_single(path.observed, gap.s, k)}
                                    : recover_bl(path.observed, gap, k).recovered;
                map_norm = op_norm(bl_recovery_map(k, gap.m), Norm::two, Norm::inf).upper;
                data_norm = norm(path.observed, Norm::two);
                break;
            }
            case MethodKind::wx2:
            case MethodKind::thm2: {
                out.recovered = method.kind == MethodKind::wx2
                                    ? std::vector<Complex>{recover_deg_single(path.observed, gap.s, method.param)}
                                    : recover_deg(path.observed, gap, method.param).recovered;
                map_norm = op_norm(deg_recovery_map(method.param, gap), Norm::inf, Norm::inf).upper;
                data_norm = weighted_moment(path.observed, gap.m);
                break;
            }
        }
        double magnitude = 0.0;
        for (std::size_t p = 0; p < out.recovered.size(); ++p) {
            out.err_abs = std::max(out.err_abs, std::abs(out.recovered[p] - path.truth[p]));
            magnitude = std::max(magnitude, std::abs(out.recovered[p]));
        }
        out.bound = map_norm * data_norm;
        out.holds = magnitude <= out.bound * (1.0 + bound_slack);
    } catch (const Error& e) {
        out.failure = e.what();
        out.holds = true;
    }
    return out;
}

TrialRecord run_trial(const ExperimentConfig& cfg, int trial) {
    auto engine = make_engine(cfg.seed, static_cast<std::uint64_t>(trial));
    const auto path = generate_path(cfg, engine());
    TrialRecord record{trial, path.truth, {}};
    for (const auto& method : cfg.methods) record.outcomes.push_back(apply_method(method, path, cfg.gap));
    return record;
}

}  // namespace

const char* to_string(Generator g) {
    switch (g) {
        case Generator::bl: return "bl";
        case Generator::noisy_bl: return "noisy_bl";
        case Generator::ell1: return "ell1";
        case Generator::degenerate: return "degenerate";
    }
    return "?";
}

const char* to_string(MethodKind k) {
    switch (k) {
        case MethodKind::wx1: return "wx1";
        case MethodKind::wx2: return "wx2";
        case MethodKind::thm1: return "thm1";
        case MethodKind::thm2: return "thm2";
    }
    return "?";
}

std::string MethodSpec::label() const { return std::string(to_string(kind)) + "(" + pi_multiple(param) + ")"; }

void ExperimentConfig::validate() const {
    require_normalized(gap);
    if (trials < 1) throw InvalidArgument("trials must be at least 1");
    if (q < 1) throw InvalidArgument("q must be at least 1");
    if (n_obs < 2 * gap.m + 2) throw InvalidArgument("n_obs must be at least 2m+2");
    if (threads < 1) throw InvalidArgument("threads must be at least 1");
    if (!(noise_level >= 0.0) || !std::isfinite(noise_level)) throw InvalidArgument("noise_level must be non-negative");
    if (methods.empty()) throw InvalidArgument("at least one method is required");
    if (generator == Generator::bl || generator == Generator::noisy_bl) {
        if (!(cutoff_true > 0.0 && cutoff_true < std::numbers::pi)) throw InvalidArgument("cutoff_true must lie in (0, pi)");
        if (atoms < 1) throw InvalidArgument("atoms must be at least 1");
    }
    if (generator == Generator::noisy_bl && !(noise_level > 0.0)) throw InvalidArgument("noisy_bl needs noise_level > 0");
    if (generator == Generator::degenerate && !(omega0_gen > -std::numbers::pi && omega0_gen <= std::numbers::pi)) {
        throw InvalidArgument("omega0_gen must lie in (-pi, pi]");
    }
    for (const auto& m : methods) {
        const bool cutoff = m.kind == MethodKind::wx1 || m.kind == MethodKind::thm1;
        if (cutoff && !(m.param > 0.0 && m.param < std::numbers::pi)) throw InvalidArgument("cutoff must lie in (0, pi)");
        if (!cutoff && !(m.param > -std::numbers::pi && m.param <= std::numbers::pi)) {
            throw InvalidArgument("omega0 must lie in (-pi, pi]");
        }
    }
}

ExperimentConfig figure1_config() {
    ExperimentConfig cfg;
    cfg.generator = Generator::bl;
    cfg.cutoff_true = 0.1 * std::numbers::pi;
    cfg.methods = {{MethodKind::wx1, 0.1 * std::numbers::pi},
                   {MethodKind::wx1, 0.05 * std::numbers::pi},
                   {MethodKind::wx2, std::numbers::pi}};
    cfg.q = 50;
    cfg.n_obs = 100;
    cfg.trials = 50;
    return cfg;
}

ExperimentConfig figure2_config() {
    auto cfg = figure1_config();
    cfg.generator = Generator::noisy_bl;
    cfg.noise_level = 0.1;
    return cfg;
}

IndexRange observation_window(const ExperimentConfig& cfg) {
    const Index half = cfg.n_obs / 2;
    const IndexRange window{cfg.gap.s - half, cfg.gap.s + cfg.n_obs - half - 1};
    return {std::max(window.first, -cfg.q), std::min(window.last, cfg.q)};
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials));
    const int workers = std::min(cfg.threads, cfg.trials);
    if (workers <= 1) {
        for (int i = 0; i < cfg.trials; ++i) records[static_cast<std::size_t>(i)] = run_trial(cfg, i);
        return records;
    }
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < cfg.trials; i += workers) records[static_cast<std::size_t>(i)] = run_trial(cfg, i);
        });
    }
    pool.clear();
    return records;
}

const MethodSummary* Summary::find(const MethodSpec& m) const {
    for (const auto& s : methods) {
        if (s.method == m) return &s;
    }
    return nullptr;
}

Summary summarize(const std::vector<TrialRecord>& records) {
    if (records.empty()) throw EmptyInput("summarize: no trial records");
    Summary summary;
    summary.trials = records.size();
    const auto& first = records.front().outcomes;
    for (std::size_t j = 0; j < first.size(); ++j) {
        MethodSummary ms;
        ms.method = first[j].method;
        std::vector<double> errors;
        for (const auto& r : records) {
            const auto& o = r.outcomes.at(j);
            if (o.failure) {
                ++ms.failures;
                continue;
            }
            errors.push_back(o.err_abs);
            if (!o.holds) ++ms.violations;
        }
        ms.count = errors.size();
        if (!errors.empty()) {
            std::sort(errors.begin(), errors.end());
            double total = 0.0;
            for (double e : errors) total += e;
            ms.mean = total / static_cast<double>(errors.size());
            const std::size_t mid = errors.size() / 2;
            ms.median = errors.size() % 2 ? errors[mid] : 0.5 * (errors[mid - 1] + errors[mid]);
            ms.max = errors.back();
        }
        summary.methods.push_back(ms);
    }
    return summary;
}

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    out << "trial,method,param,err_abs,bound,holds\n";
    for (const auto& r : records) {
        for (const auto& o : r.outcomes) {
            out << r.trial << ',' << to_string(o.method.kind) << ',' << format_double(o.method.param) << ',';
            if (o.failure) {
                out << "nan,nan,error\n";
            } else {
                out << format_double(o.err_abs) << ',' << format_double(o.bound) << ',' << (o.holds ? "true" : "false") << '\n';
            }
        }
    }
}

namespace {

double angle_field(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_angle(v.get<std::string>());
    throw InvalidArgument(std::string("field '") + key + "' must be a number or an angle string");
}

Generator generator_from(const std::string& name) {
    for (auto g : {Generator::bl, Generator::noisy_bl, Generator::ell1, Generator::degenerate}) {
        if (name == to_string(g)) return g;
    }
    throw InvalidArgument("unknown generator '" + name + "'");
}

MethodKind method_from(const std::string& name) {
    for (auto k : {MethodKind::wx1, MethodKind::wx2, MethodKind::thm1, MethodKind::thm2}) {
        if (name == to_string(k)) return k;
    }
    throw InvalidArgument("unknown method '" + name + "'");
}

}  // namespace

ExperimentConfig config_from_json(std::string_view text) {
    ExperimentConfig cfg;
    try {
        const auto j = json::parse(text);
        if (!j.is_object()) throw InvalidArgument("experiment config must be a JSON object");
        cfg.generator = generator_from(j.value("generator", std::string("bl")));
        cfg.cutoff_true = angle_field(j, "cutoff_true", 0.1 * std::numbers::pi);
        cfg.atoms = j.value("atoms", cfg.atoms);
        cfg.atom_spread = j.value("atom_spread", cfg.atom_spread);
        cfg.omega0_gen = angle_field(j, "omega0_gen", std::numbers::pi);
        if (j.contains("gap")) {
            cfg.gap.s = j.at("gap").value("s", Index{0});
            cfg.gap.m = j.at("gap").value("m", 0);
        }
        if (!j.contains("methods") || !j.at("methods").is_array()) throw InvalidArgument("'methods' must be an array");
        for (const auto& m : j.at("methods")) {
            const auto kind = method_from(m.at("kind").get<std::string>());
            const double fallback = (kind == MethodKind::wx2 || kind == MethodKind::thm2) ? std::numbers::pi : 0.1 * std::numbers::pi;
            cfg.methods.push_back({kind, angle_field(m, "param", fallback)});
        }
        cfg.n_obs = j.value("n_obs", cfg.n_obs);
        cfg.q = j.value("q", Index{cfg.n_obs});
        cfg.noise_level = j.value("noise_level", cfg.noise_level);
        cfg.trials = j.value("trials", cfg.trials);
        cfg.seed = j.value("seed", cfg.seed);
        cfg.threads = j.value("threads", cfg.threads);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("experiment config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
    json methods = json::array();
    for (const auto& m : cfg.methods) methods.push_back({{"kind", to_string(m.kind)}, {"param", m.param}});
    const json j = {{"generator", to_string(cfg.generator)},
                    {"cutoff_true", cfg.cutoff_true},
                    {"atoms", cfg.atoms},
                    {"atom_spread", cfg.atom_spread},
                    {"omega0_gen", cfg.omega0_gen},
                    {"gap", {{"s", cfg.gap.s}, {"m", cfg.gap.m}}},
                    {"methods", methods},
                    {"q", cfg.q},
                    {"n_obs", cfg.n_obs},
                    {"noise_level", cfg.noise_level},
                    {"trials", cfg.trials},
                    {"seed", cfg.seed},
                    {"threads", cfg.threads}};
    return j.dump(2);
}

std::string summary_to_json(const Summary& summary, const ExperimentConfig& cfg) {
    json methods = json::array();
    for (const auto& m : summary.methods) {
        methods.push_back({{"method", to_string(m.method.kind)},
                           {"param", m.method.param},
                           {"label", m.method.label()},
                           {"count", m.count},
                           {"failures", m.failures},
                           {"mean", m.mean},
                           {"median", m.median},
                           {"max", m.max},
                           {"violations", m.violations}});
    }
    const json j = {{"trials", summary.trials}, {"config", json::parse(config_to_json(cfg))}, {"methods", methods}};
    return j.dump(2);
}

}  // namespace gaprecover
