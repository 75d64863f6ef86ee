#pragma once

// Recovery without smoothing for sequences whose Z-transform is degenerate of
// order m at omega0: X and its first m derivatives in omega vanish at
// e^{i omega0}. Filling the gap so that the completed sequence has this
// property is the linear system B(omega0) y = z(omega0) with
//     B[p][k] = (-i(s+k))^p e^{-i omega (s+k)},
//     z[p]    = -sum_{t not in gap} (-i t)^p e^{-i omega t} x(t).

#include <vector>

#include "gaprecover/linalg.hpp"
#include "gaprecover/sequence.hpp"

namespace gaprecover {

/// Default cap on m. B grows like k^p and is ill-conditioned beyond this.
inline constexpr int default_max_order = 16;

struct ConstraintMatrix {
    double omega = 0.0;
    CMatrix entries;
};

/// Throws InvalidGap unless the gap is normalized.
ConstraintMatrix constraint_matrix(double omega, const GapSpec& gap);

struct DegRecoveryResult {
    GapSpec gap;
    double omega0 = 0.0;
    std::vector<Complex> recovered;
    std::vector<Complex> rhs;  ///< z(omega0)
    SpectralProbe residual_probe; ///< derivatives of the completed sequence at omega0
    double condition_estimate = 0.0;
};

/// Throws InvalidGap (normalization, m > max_order), InvalidArgument (omega0
/// outside (-pi, pi]) or SingularSystem.
DegRecoveryResult recover_deg(const FiniteSequence& x_obs, const GapSpec& gap, double omega0,
                              int max_order = default_max_order);

/// x^(s) = -sum_{t != s} e^{i omega0 (s-t)} x(t); exact alternating sum at omega0 = pi.
Complex recover_deg_single(const FiniteSequence& x_obs, Index s, double omega0);

struct MinimaxErrorIdentity {
    Complex error;  ///< recover_deg_single(x without x(s)) - x(s)
    Complex probe;  ///< X(e^{i omega0}) of the full sequence
    /// -e^{i omega0 s} * probe; equals `error` up to rounding.
    Complex predicted_error() const;
    Index s = 0;
    double omega0 = 0.0;
};

/// Throws MissingGroundTruth when x_full does not store index s.
MinimaxErrorIdentity minimax_error_identity(const FiniteSequence& x_full, Index s, double omega0);

}  // namespace gaprecover
