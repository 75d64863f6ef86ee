#pragma once

// Ideal discrete-time low-pass filter with cutoff Omega in (0, pi):
// impulse response h(t) = Omega sinc(Omega t) / pi.

#include <Eigen/Dense>

#include "gaprecover/sequence.hpp"

namespace gaprecover {

/// sin(x)/x with sinc(0) = 1.
double sinc(double x);

class Kernel {
public:
    /// Throws InvalidArgument unless 0 < omega_cap < pi.
    explicit Kernel(double omega_cap);

    double omega_cap() const noexcept { return omega_cap_; }

private:
    double omega_cap_;
};

/// h(t). Even in t bit-for-bit.
double kernel_value(const Kernel& k, Index t);

/// (h * x)(t) for every t in `out`, summing over the stored support of x.
FiniteSequence convolve_lowpass(const Kernel& k, const FiniteSequence& x, IndexRange out);

/// A[k][p] = h(k - p), a real symmetric Toeplitz matrix of size (m+1).
struct GapMatrix {
    Eigen::MatrixXd entries;
};

GapMatrix gap_matrix(const Kernel& k, int m);

}  // namespace gaprecover
