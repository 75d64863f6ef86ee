#pragma once

// Seeded Monte-Carlo comparison of the recovery formulas on synthetic paths.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaprecover/sequence.hpp"

namespace gaprecover {

enum class Generator { bl, noisy_bl, ell1, degenerate };

enum class MethodKind {
    wx1,   ///< single-gap band-limited closed form, param = cutoff
    wx2,   ///< single-gap degenerate closed form, param = omega0
    thm1,  ///< band-limited linear system, param = cutoff
    thm2,  ///< degenerate linear system, param = omega0
};

struct MethodSpec {
    MethodKind kind = MethodKind::wx1;
    double param = 0.0;

    std::string label() const;  ///< e.g. "wx1(0.1pi)"
    friend bool operator==(const MethodSpec&, const MethodSpec&) = default;
};

struct ExperimentConfig {
    Generator generator = Generator::bl;
    double cutoff_true = 0.0;  ///< band of the bl / noisy_bl generators
    int atoms = 5;
    double atom_spread = 10.0; ///< atom centers uniform in [-spread, spread]
    double omega0_gen = 0.0;   ///< degeneracy frequency of the degenerate generator
    GapSpec gap;
    std::vector<MethodSpec> methods;
    Index q = 50;              ///< observations restricted to |t| <= q
    int n_obs = 100;           ///< window [s - n/2, s + n - n/2 - 1], gap removed
    double noise_level = 0.0;  ///< ||eta||_2 / ||x||_2 on the window
    int trials = 1;
    std::uint64_t seed = 20130517;
    int threads = 1;

    /// Throws InvalidArgument / InvalidGap for out-of-range fields.
    void validate() const;
};

/// Ready-made configurations for the two published comparisons.
ExperimentConfig figure1_config();  ///< band-limited truth, cutoff 0.1 pi
ExperimentConfig figure2_config();  ///< same paths with additive noise

IndexRange observation_window(const ExperimentConfig& cfg);

struct MethodOutcome {
    MethodSpec method;
    std::vector<Complex> recovered;
    double err_abs = 0.0;  ///< max over the gap of |recovered - truth|
    double bound = 0.0;    ///< a-priori bound on max |recovered|
    bool holds = true;
    std::optional<std::string> failure;  ///< solver error message, if any
};

struct TrialRecord {
    int trial = 0;
    std::vector<Complex> truth;
    std::vector<MethodOutcome> outcomes;
};

/// Deterministic given cfg (including seed); independent of cfg.threads.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg);

struct MethodSummary {
    MethodSpec method;
    std::size_t count = 0;     ///< trials without solver failure
    std::size_t failures = 0;
    double mean = 0.0;
    double median = 0.0;
    double max = 0.0;
    std::size_t violations = 0;
};

struct Summary {
    std::size_t trials = 0;
    std::vector<MethodSummary> methods;

    const MethodSummary* find(const MethodSpec& m) const;
};

/// Throws EmptyInput for an empty record list.
Summary summarize(const std::vector<TrialRecord>& records);

/// Rows `trial,method,param,err_abs,bound,holds`.
void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records);

std::string summary_to_json(const Summary& summary, const ExperimentConfig& cfg);

/// Throws InvalidArgument on schema errors. Angles accept "0.1pi" strings or radians.
ExperimentConfig config_from_json(std::string_view text);
std::string config_to_json(const ExperimentConfig& cfg);

const char* to_string(Generator g);
const char* to_string(MethodKind k);

}  // namespace gaprecover
