#include "gaprecover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gaprecover/errors.hpp"
#include "gaprecover/genlib.hpp"

namespace gaprecover {

namespace {

struct TorusMax {
    double value = 0.0;
    NormMethod method = NormMethod::enumerated;
};

bool is_real(const CMatrix& M) { return M.imag().cwiseAbs().maxCoeff() == 0.0; }

// max ||M u||_r over |u_k| = 1. The first coordinate is pinned to 1 since the
// objective is invariant under a global phase.
TorusMax torus_max(const CMatrix& M, Norm r, const OpNormOptions& options) {
    const auto n = M.cols();
    TorusMax best;
    CVector u = CVector::Ones(n);
    if (is_real(M)) {
        const std::uint64_t count = std::uint64_t{1} << (n - 1);
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            for (Eigen::Index k = 1; k < n; ++k) u(k) = (mask >> (k - 1)) & 1u ? -1.0 : 1.0;
            best.value = std::max(best.value, vector_norm(M * u, r));
        }
        best.method = NormMethod::enumerated;
        return best;
    }
    best.method = NormMethod::sampled;
    if (n <= 4) {
        const int phases = std::max(options.phases, 1);
        std::uint64_t count = 1;
        for (Eigen::Index k = 1; k < n; ++k) count *= static_cast<std::uint64_t>(phases);
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t rest = code;
            for (Eigen::Index k = 1; k < n; ++k) {
                const auto j = static_cast<double>(rest % static_cast<std::uint64_t>(phases));
                rest /= static_cast<std::uint64_t>(phases);
                u(k) = std::polar(1.0, 2.0 * std::numbers::pi * j / phases);
            }
            best.value = std::max(best.value, vector_norm(M * u, r));
        }
        return best;
    }
    auto rng = make_engine(options.seed, 0x0B5Eu);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    best.value = vector_norm(M * u, r);
    for (int i = 0; i < options.restarts; ++i) {
        for (Eigen::Index k = 1; k < n; ++k) u(k) = std::polar(1.0, angle(rng));
        best.value = std::max(best.value, vector_norm(M * u, r));
    }
    return best;
}

double max_row_norm(const CMatrix& S, Norm r) {
    double best = 0.0;
    for (Eigen::Index i = 0; i < S.rows(); ++i) best = std::max(best, vector_norm(S.row(i).transpose(), r));
    return best;
}

}  // namespace

const char* to_string(Norm r) {
    switch (r) {
        case Norm::one: return "1";
        case Norm::two: return "2";
        case Norm::inf: return "inf";
    }
    return "?";
}

const char* to_string(NormMethod m) {
    switch (m) {
        case NormMethod::exact: return "exact";
        case NormMethod::enumerated: return "enumerated";
        case NormMethod::sampled: return "sampled";
    }
    return "?";
}

double vector_norm(const CVector& v, Norm r) {
    switch (r) {
        case Norm::one: return v.cwiseAbs().sum();
        case Norm::two: return v.norm();
        case Norm::inf: return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
    }
    return 0.0;
}

NormReport op_norm(const CMatrix& S, Norm from, Norm to, const OpNormOptions& options) {
    if (S.rows() != S.cols() || S.rows() == 0) throw InvalidArgument("op_norm: matrix must be square and non-empty");
    if (S.rows() > max_op_norm_dimension) throw DimensionTooLarge("op_norm: dimension above 17");
    NormReport report{options.matrix_id, from, to, 0.0, 0.0, NormMethod::exact};
    auto exact = [&](double v) {
        report.value = v;
        report.upper = v;
        return report;
    };

    if (S.size() == 1) return exact(std::abs(S(0, 0)));
    if (from == Norm::one) {
        double best = 0.0;
        for (Eigen::Index j = 0; j < S.cols(); ++j) best = std::max(best, vector_norm(S.col(j), to));
        return exact(best);
    }
    if (from == Norm::two && to == Norm::two) return exact(spectral_norm(S));
    if (from == Norm::two && to == Norm::inf) return exact(max_row_norm(S, Norm::two));
    if (from == Norm::inf && to == Norm::inf) return exact(max_row_norm(S, Norm::one));

    if (from == Norm::two) {
        // ||S||_{2,1} = ||S^H||_{inf,2}; each |row . x| <= ||row||_2 ||x||_2.
        const auto found = torus_max(S.adjoint(), Norm::two, options);
        double upper = 0.0;
        for (Eigen::Index i = 0; i < S.rows(); ++i) upper += S.row(i).norm();
        report.value = found.value;
        report.upper = std::max(upper, found.value);
        report.method = found.method;
        return report;
    }
    // from = inf, to in {1, 2}: |S x| <= |S| 1 entrywise when ||x||_inf <= 1.
    const auto found = torus_max(S, to, options);
    const CVector row_abs_sums = S.cwiseAbs().rowwise().sum().cast<Complex>();
    report.value = found.value;
    report.upper = std::max(vector_norm(row_abs_sums, to), found.value);
    report.method = found.method;
    return report;
}

CMatrix bl_recovery_map(const Kernel& k, int m) {
    const auto n = static_cast<Eigen::Index>(m) + 1;
    return inverse_pivoted(CMatrix::Identity(n, n) - gap_matrix(k, m).entries.cast<Complex>());
}

CMatrix deg_recovery_map(double omega0, const GapSpec& gap) { return inverse_pivoted(constraint_matrix(omega0, gap).entries); }

namespace {

BoundCheck make_check(double lhs, double rhs) { return {lhs, rhs, lhs <= rhs * (1.0 + bound_slack)}; }

CVector difference(const std::vector<Complex>& a, const std::vector<Complex>& b) { return to_vector(a) - to_vector(b); }

void require_sizes(const std::vector<Complex>& a, const std::vector<Complex>& b, const GapSpec& gap) {
    if (a.size() != gap.size() || b.size() != gap.size()) throw ScenarioMismatch("recovered vectors do not match the gap");
}

}  // namespace

R1Report check_r1_bound(const BLRecoveryResult& clean, const BLRecoveryResult& noisy, const FiniteSequence& eta,
                        Norm theta) {
    if (!(clean.gap == noisy.gap) || clean.omega_cap != noisy.omega_cap) {
        throw ScenarioMismatch("clean and noisy recoveries use different gaps or cutoffs");
    }
    require_sizes(clean.recovered, noisy.recovered, clean.gap);
    const Kernel k(clean.omega_cap);
    const double eta_norm = norm(eta.without(clean.gap), Norm::two);
    const double lhs = vector_norm(difference(noisy.recovered, clean.recovered), theta);

    OpNormOptions options;
    options.matrix_id = "(I-A)^-1";
    const auto map_norm = op_norm(bl_recovery_map(k, clean.gap.m), Norm::two, theta, options);

    R1Report report;
    report.theta = theta;
    report.r1 = make_check(lhs, map_norm.upper * eta_norm);
    if (clean.gap.m == 0) {
        const double omega = clean.omega_cap;
        report.r11 = make_check(lhs, omega / (std::numbers::pi - omega) * eta_norm);
    }
    return report;
}

R2Report check_r2_bound(const DegRecoveryResult& clean, const DegRecoveryResult& noisy, const FiniteSequence& eta,
                        Norm theta) {
    if (!(clean.gap == noisy.gap) || clean.omega0 != noisy.omega0) {
        throw ScenarioMismatch("clean and noisy recoveries use different gaps or probe frequencies");
    }
    require_sizes(clean.recovered, noisy.recovered, clean.gap);
    const auto& gap = clean.gap;
    const double lhs = vector_norm(difference(noisy.recovered, clean.recovered), theta);

    OpNormOptions options;
    options.matrix_id = "B^-1";
    const auto map_norm = op_norm(deg_recovery_map(clean.omega0, gap), Norm::inf, theta, options);

    const auto z_eta = z_derivatives(eta, clean.omega0, gap.m, gap).derivs;
    R2Report report;
    report.theta = theta;
    report.moment = make_check(lhs, map_norm.upper * weighted_moment(eta.without(gap), gap.m));
    report.probe = make_check(lhs, map_norm.upper * vector_norm(to_vector(z_eta), Norm::inf));
    return report;
}

}  // namespace gaprecover
