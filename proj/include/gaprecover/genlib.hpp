#pragma once

// Test-signal synthesis: band-limited sinc-atom mixtures, decaying l_1
// sequences, degenerate completions, additive noise and truncation. All
// randomness flows from explicit seeds.

#include <cstdint>
#include <random>
#include <vector>

#include "gaprecover/sequence.hpp"

namespace gaprecover {

struct SincAtom {
    double center = 0.0;
    Complex weight{1.0, 0.0};
};

/// x(t) = sum_j c_j sinc(cutoff (t - tau_j)); band-limited to [-cutoff, cutoff].
struct BLAtomSpec {
    double cutoff = 0.0;
    std::vector<SincAtom> atoms;
};

/// Throws InvalidArgument unless 0 < cutoff < pi and atoms is non-empty.
FiniteSequence synth_bandlimited(const BLAtomSpec& spec, IndexRange window);

/// Value of the mixture at a single index (no window needed).
Complex bandlimited_value(const BLAtomSpec& spec, Index t);

/// `count` atoms with centers uniform in [-spread, spread] and standard complex
/// Gaussian weights (real weights when real_only).
BLAtomSpec random_atoms(double cutoff, int count, double spread, std::uint64_t seed, bool real_only = false);

/// White complex Gaussian samples shaped by the envelope (1 + |t|)^-2.
FiniteSequence synth_ell1(IndexRange window, std::uint64_t seed, bool real_only = false);

/// x with the gap overwritten so the Z-transform and its first m derivatives
/// vanish at omega0.
FiniteSequence make_degenerate(const FiniteSequence& x, const GapSpec& gap, double omega0);

struct NoisySequence {
    FiniteSequence noisy;  ///< x + eta
    FiniteSequence eta;
};

/// eta is i.i.d. circular complex Gaussian on the support of x, rescaled so
/// that ||eta||_2 = level ||x||_2. Real noise when real_only.
NoisySequence add_noise(const FiniteSequence& x, double level, std::uint64_t seed, bool real_only = false);

struct Truncation {
    FiniteSequence kept;  ///< x(t) for |t| <= q
    FiniteSequence tail;  ///< x(t) for |t| > q
};

/// Throws InvalidArgument when q < 1.
Truncation truncate(const FiniteSequence& x, Index q);

/// Engine seeded from (seed, stream) through std::seed_seq.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace gaprecover
