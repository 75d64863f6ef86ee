#include "gaprecover/blrecover.hpp"

#include <numbers>

#include "gaprecover/linalg.hpp"

namespace gaprecover {

std::vector<Complex> lowpass_rhs(const FiniteSequence& x_obs, const GapSpec& gap, const Kernel& k) {
    std::vector<Complex> z(gap.size());
    for (std::size_t p = 0; p < z.size(); ++p) {
        const Index target = gap.s + static_cast<Index>(p);
        Complex acc{};
        Index t = x_obs.start();
        for (const auto& v : x_obs.values()) {
            if (!gap.contains(t)) acc += kernel_value(k, target - t) * v;
            ++t;
        }
        z[p] = acc;
    }
    return z;
}

BLRecoveryResult recover_bl(const FiniteSequence& x_obs, const GapSpec& gap, const Kernel& k) {
    require_normalized(gap);
    BLRecoveryResult result{gap, k.omega_cap(), {}, lowpass_rhs(x_obs, gap, k), 0.0};
    const auto n = static_cast<Eigen::Index>(gap.size());
    const CMatrix system = CMatrix::Identity(n, n) - gap_matrix(k, gap.m).entries.cast<Complex>();
    result.recovered = to_std(solve_pivoted(system, to_vector(result.rhs)));
    result.condition_estimate = condition_2(system);
    return result;
}

double bl_single_weight(double omega_cap, Index d) {
    return omega_cap / (std::numbers::pi - omega_cap) * sinc(omega_cap * static_cast<double>(d));
}

Complex recover_bl_single(const FiniteSequence& x_obs, Index s, const Kernel& k) {
    const double omega = k.omega_cap();
    Complex acc{};
    Index t = x_obs.start();
    for (const auto& v : x_obs.values()) {
        if (t != s) acc += sinc(omega * static_cast<double>(s - t)) * v;
        ++t;
    }
    return omega / (std::numbers::pi - omega) * acc;
}

}  // namespace gaprecover
