#pragma once

// Recovery of a missing block by projection onto band-limited sequences.
//
// The completed sequence is the unique band-limited x^ closest in l_2 to the
// observations. On the gap it satisfies the fixed point
//     x^(s+p) = sum_{t not in gap} h(s+p-t) x(t) + sum_k h(p-k) x^(s+k),
// i.e. (I - A) y = z with A the gap matrix and z the low-passed observations.

#include <vector>

#include "gaprecover/lowpass.hpp"
#include "gaprecover/sequence.hpp"

namespace gaprecover {

struct BLRecoveryResult {
    GapSpec gap;
    double omega_cap = 0.0;
    std::vector<Complex> recovered;  ///< recovered[p] estimates x(s+p)
    std::vector<Complex> rhs;        ///< z
    double condition_estimate = 0.0; ///< 2-norm condition number of I - A
};

/// z[p] = sum over stored t outside the gap of h(s+p-t) x(t).
std::vector<Complex> lowpass_rhs(const FiniteSequence& x_obs, const GapSpec& gap, const Kernel& k);

/// Solves (I - A) y = z. Values of x_obs on the gap are ignored.
/// Throws InvalidGap (m > 0 with s != 0) or SingularSystem.
BLRecoveryResult recover_bl(const FiniteSequence& x_obs, const GapSpec& gap, const Kernel& k);

/// Closed form for one missing sample:
///     x^(s) = Omega/(pi-Omega) * sum_{t != s} x(t) sinc(Omega (s-t)).
Complex recover_bl_single(const FiniteSequence& x_obs, Index s, const Kernel& k);

/// Weight Omega/(pi-Omega) sinc(Omega d) that the closed form puts on x(s+d).
double bl_single_weight(double omega_cap, Index d);

}  // namespace gaprecover
