#include "gaprecover/genlib.hpp"

#include <cmath>
#include <numbers>

#include "gaprecover/degrecover.hpp"
#include "gaprecover/errors.hpp"
#include "gaprecover/lowpass.hpp"

namespace gaprecover {

namespace {

void require_valid(const BLAtomSpec& spec) {
    if (!(spec.cutoff > 0.0 && spec.cutoff < std::numbers::pi)) throw InvalidArgument("atom cutoff must lie in (0, pi)");
    if (spec.atoms.empty()) throw InvalidArgument("band-limited spec needs at least one atom");
}

Complex gaussian(std::mt19937_64& rng, bool real_only) {
    std::normal_distribution<double> normal;
    const double re = normal(rng);
    const double im = normal(rng);
    return real_only ? Complex{re, 0.0} : Complex{re, im};
}

}  // namespace

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

Complex bandlimited_value(const BLAtomSpec& spec, Index t) {
    Complex acc{};
    for (const auto& atom : spec.atoms) acc += atom.weight * sinc(spec.cutoff * (static_cast<double>(t) - atom.center));
    return acc;
}

FiniteSequence synth_bandlimited(const BLAtomSpec& spec, IndexRange window) {
    require_valid(spec);
    if (window.empty()) return {};
    std::vector<Complex> values(window.size());
    for (Index t = window.first; t <= window.last; ++t) values[static_cast<std::size_t>(t - window.first)] = bandlimited_value(spec, t);
    return FiniteSequence(window.first, std::move(values));
}

BLAtomSpec random_atoms(double cutoff, int count, double spread, std::uint64_t seed, bool real_only) {
    if (count < 1) throw InvalidArgument("random_atoms: count must be positive");
    auto rng = make_engine(seed, 0xA70Au);
    std::uniform_real_distribution<double> center(-spread, spread);
    BLAtomSpec spec{cutoff, {}};
    for (int j = 0; j < count; ++j) {
        const double c = center(rng);
        spec.atoms.push_back({c, gaussian(rng, real_only)});
    }
    require_valid(spec);
    return spec;
}

FiniteSequence synth_ell1(IndexRange window, std::uint64_t seed, bool real_only) {
    if (window.empty()) return {};
    auto rng = make_engine(seed, 0x11u);
    std::vector<Complex> values(window.size());
    for (Index t = window.first; t <= window.last; ++t) {
        const double envelope = 1.0 / std::pow(1.0 + std::abs(static_cast<double>(t)), 2);
        values[static_cast<std::size_t>(t - window.first)] = envelope * gaussian(rng, real_only);
    }
    return FiniteSequence(window.first, std::move(values));
}

FiniteSequence make_degenerate(const FiniteSequence& x, const GapSpec& gap, double omega0) {
    const auto result = recover_deg(x, gap, omega0);
    return overlay_gap(x, gap, result.recovered);
}

NoisySequence add_noise(const FiniteSequence& x, double level, std::uint64_t seed, bool real_only) {
    if (!(level >= 0.0) || !std::isfinite(level)) throw InvalidArgument("noise level must be a non-negative finite number");
    const double target = level * norm(x, Norm::two);
    if (x.empty() || target == 0.0) return {x, FiniteSequence::zeros(x.support())};
    auto rng = make_engine(seed, 0x4E01u);
    std::vector<Complex> eta(x.size());
    for (auto& v : eta) v = gaussian(rng, real_only);
    FiniteSequence raw(x.start(), std::move(eta));
    const double raw_norm = norm(raw, Norm::two);
    auto scaled = scale(raw, target / raw_norm);
    return {add(x, scaled), std::move(scaled)};
}

Truncation truncate(const FiniteSequence& x, Index q) {
    if (q < 1) throw InvalidArgument("truncation radius must be at least 1");
    Truncation out{x.restricted({-q, q}), {}};
    for (Index t = x.start(); t <= x.last(); ++t) {
        if ((t < -q || t > q) && x.stores(t)) out.tail.set(t, x[t]);
    }
    return out;
}

}  // namespace gaprecover
