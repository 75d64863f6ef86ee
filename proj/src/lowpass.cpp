#include "gaprecover/lowpass.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "gaprecover/errors.hpp"

namespace gaprecover {

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

Kernel::Kernel(double omega_cap) : omega_cap_(omega_cap) {
    if (!(omega_cap > 0.0 && omega_cap < std::numbers::pi)) throw InvalidArgument("cutoff must lie in (0, pi)");
}

double kernel_value(const Kernel& k, Index t) {
    const double omega = k.omega_cap();
    if (t == 0) return omega / std::numbers::pi;
    const double a = std::abs(static_cast<double>(t));
    return std::sin(omega * a) / (std::numbers::pi * a);
}

FiniteSequence convolve_lowpass(const Kernel& k, const FiniteSequence& x, IndexRange out) {
    if (out.empty()) return {};
    // h(d) for every lag that can occur.
    const Index min_lag = out.first - x.last();
    const Index max_lag = out.last - x.start();
    std::vector<double> h(x.empty() ? 0 : static_cast<std::size_t>(max_lag - min_lag + 1));
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = kernel_value(k, min_lag + static_cast<Index>(i));

    std::vector<Complex> y(out.size());
    for (Index t = out.first; t <= out.last; ++t) {
        Complex acc{};
        Index u = x.start();
        for (const auto& v : x.values()) {
            acc += h[static_cast<std::size_t>(t - u - min_lag)] * v;
            ++u;
        }
        y[static_cast<std::size_t>(t - out.first)] = acc;
    }
    return FiniteSequence(out.first, std::move(y));
}

GapMatrix gap_matrix(const Kernel& k, int m) {
    if (m < 0) throw InvalidArgument("gap_matrix: m must be non-negative");
    const int n = m + 1;
    Eigen::MatrixXd A(n, n);
    for (int d = 0; d < n; ++d) {
        const double v = kernel_value(k, d);
        for (int i = 0; i + d < n; ++i) {
            A(i, i + d) = v;
            A(i + d, i) = v;
        }
    }
    return {std::move(A)};
}

}  // namespace gaprecover
