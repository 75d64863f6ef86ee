#pragma once

// Mixed operator norms of the recovery maps and the noise-robustness checks
// built on them.

#include <cstdint>
#include <optional>
#include <string>

#include "gaprecover/blrecover.hpp"
#include "gaprecover/degrecover.hpp"
#include "gaprecover/linalg.hpp"
#include "gaprecover/sequence.hpp"

namespace gaprecover {

inline constexpr Eigen::Index max_op_norm_dimension = 17;

enum class NormMethod { exact, enumerated, sampled };

const char* to_string(Norm r);
const char* to_string(NormMethod m);

/// ||S||_{from,to} = sup ||S x||_to / ||x||_from over complex x.
///
/// `value` is exact for (1,*), (2,2), (2,inf) and (inf,inf). The remaining
/// pairs are maximized over unit-modulus inputs: `value` is then the best
/// value found (a lower bound; exact over real inputs when S is real and the
/// signs were enumerated) and `upper` a guaranteed upper bound.
struct NormReport {
    std::string matrix_id;
    Norm from = Norm::two;
    Norm to = Norm::two;
    double value = 0.0;
    double upper = 0.0;
    NormMethod method = NormMethod::exact;
};

struct OpNormOptions {
    int phases = 64;          ///< phase grid per coordinate for complex S, dimension <= 4
    int restarts = 4096;      ///< random unit-modulus starts above dimension 4
    std::uint64_t seed = 7;
    std::string matrix_id = "S";
};

/// Throws DimensionTooLarge above 17 and InvalidArgument for non-square S.
NormReport op_norm(const CMatrix& S, Norm from, Norm to, const OpNormOptions& options = {});

/// (I - A)^{-1} for cutoff k and order m.
CMatrix bl_recovery_map(const Kernel& k, int m);
/// B(omega0)^{-1}.
CMatrix deg_recovery_map(double omega0, const GapSpec& gap);

struct BoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = true;
};

inline constexpr double bound_slack = 1e-9;

struct R1Report {
    Norm theta = Norm::two;
    BoundCheck r1;  ///< ||dy||_theta <= ||(I-A)^{-1}||_{2,theta} ||eta||_2
    /// m = 0 only: |dy| <= Omega/(pi-Omega) ||eta||_2.
    std::optional<BoundCheck> r11;
    bool holds() const { return r1.holds && (!r11 || r11->holds); }
};

/// Compares the recovery from clean observations against the one from
/// observations perturbed by eta. Throws ScenarioMismatch when the two results
/// disagree on gap or cutoff.
R1Report check_r1_bound(const BLRecoveryResult& clean, const BLRecoveryResult& noisy, const FiniteSequence& eta,
                        Norm theta);

struct R2Report {
    Norm theta = Norm::two;
    /// ||dy||_theta <= ||B^{-1}||_{inf,theta} sum_{t not in gap} |t|^m |eta(t)|
    BoundCheck moment;
    /// ||dy||_theta <= ||B^{-1}||_{inf,theta} ||z_eta(omega0)||_inf
    BoundCheck probe;
    bool holds() const { return moment.holds && probe.holds; }
};

/// Throws ScenarioMismatch when the two results disagree on gap or omega0.
R2Report check_r2_bound(const DegRecoveryResult& clean, const DegRecoveryResult& noisy, const FiniteSequence& eta,
                        Norm theta);

/// theta-norm of a short vector.
double vector_norm(const CVector& v, Norm r);

}  // namespace gaprecover
