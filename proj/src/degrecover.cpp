#include "gaprecover/degrecover.hpp"

#include <numbers>
#include <string>

#include "gaprecover/errors.hpp"

namespace gaprecover {

namespace {

void require_angle(double omega) {
    if (!(omega > -std::numbers::pi && omega <= std::numbers::pi)) throw InvalidArgument("omega0 must lie in (-pi, pi]");
}

}  // namespace

ConstraintMatrix constraint_matrix(double omega, const GapSpec& gap) {
    require_normalized(gap);
    const auto n = static_cast<Eigen::Index>(gap.size());
    CMatrix B(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Index t = gap.s + k;
        const Complex step{0.0, -static_cast<double>(t)};
        Complex entry = unit_phase(omega, t);
        for (Eigen::Index p = 0; p < n; ++p) {
            B(p, k) = entry;
            entry *= step;
        }
    }
    return {omega, std::move(B)};
}

DegRecoveryResult recover_deg(const FiniteSequence& x_obs, const GapSpec& gap, double omega0, int max_order) {
    require_normalized(gap);
    require_angle(omega0);
    if (gap.m > max_order) {
        throw InvalidGap("gap order " + std::to_string(gap.m) + " exceeds the cap " + std::to_string(max_order));
    }
    DegRecoveryResult result;
    result.gap = gap;
    result.omega0 = omega0;
    result.rhs = z_derivatives(x_obs, omega0, gap.m, gap).derivs;
    for (auto& v : result.rhs) v = -v;

    const auto B = constraint_matrix(omega0, gap);
    result.recovered = to_std(solve_pivoted(B.entries, to_vector(result.rhs)));
    result.condition_estimate = condition_2(B.entries);

    const auto completed = overlay_gap(x_obs, gap, result.recovered);
    result.residual_probe = z_derivatives(completed, omega0, gap.m);
    return result;
}

Complex recover_deg_single(const FiniteSequence& x_obs, Index s, double omega0) {
    require_angle(omega0);
    Complex acc{};
    Index t = x_obs.start();
    for (const auto& v : x_obs.values()) {
        // e^{i omega0 (s - t)} = e^{-i omega0 (t - s)}
        if (t != s) acc += unit_phase(omega0, t - s) * v;
        ++t;
    }
    return -acc;
}

Complex MinimaxErrorIdentity::predicted_error() const { return -std::conj(unit_phase(omega0, s)) * probe; }

MinimaxErrorIdentity minimax_error_identity(const FiniteSequence& x_full, Index s, double omega0) {
    if (!x_full.stores(s)) throw MissingGroundTruth("ground truth at index " + std::to_string(s) + " is not stored");
    MinimaxErrorIdentity out;
    out.s = s;
    out.omega0 = omega0;
    out.error = recover_deg_single(x_full.without(GapSpec{s, 0}), s, omega0) - x_full[s];
    out.probe = z_derivatives(x_full, omega0, 0).derivs[0];
    return out;
}

}  // namespace gaprecover
