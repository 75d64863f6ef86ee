#include "gaprecover/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gaprecover/errors.hpp"

namespace gaprecover {

namespace {

struct Factored {
    Eigen::PartialPivLU<CMatrix> lu;
    Eigen::VectorXd row_scale;
};

Factored factor(const CMatrix& S) {
    if (S.rows() != S.cols() || S.rows() == 0) throw InvalidArgument("solve_pivoted: matrix must be square and non-empty");
    const auto n = S.rows();
    Eigen::VectorXd row_scale(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double big = S.row(i).cwiseAbs().maxCoeff();
        if (!(big > 0.0) || !std::isfinite(big)) throw SingularSystem("matrix has a zero or non-finite row");
        row_scale(i) = 1.0 / big;
    }
    Factored f{Eigen::PartialPivLU<CMatrix>(row_scale.asDiagonal() * S), row_scale};
    const double eps = std::numeric_limits<double>::epsilon();
    if (!(f.lu.rcond() > static_cast<double>(n) * eps)) throw SingularSystem("effective rank loss in pivoted elimination");
    return f;
}

void require_finite(const CMatrix& M) {
    if (!M.allFinite()) throw SingularSystem("non-finite solution");
}

}  // namespace

CVector solve_pivoted(const CMatrix& S, const CVector& b) {
    if (b.size() != S.rows()) throw InvalidArgument("solve_pivoted: size mismatch");
    const auto f = factor(S);
    CVector y = f.lu.solve(f.row_scale.asDiagonal() * b);
    require_finite(y);
    return y;
}

CMatrix inverse_pivoted(const CMatrix& S) {
    const auto f = factor(S);
    CMatrix inv = f.lu.solve(CMatrix(f.row_scale.asDiagonal()));
    require_finite(inv);
    return inv;
}

double spectral_norm(const CMatrix& S, double tol, int max_iter) {
    const auto n = S.cols();
    if (n == 0 || S.rows() == 0) return 0.0;
    if (S.size() == 1) return std::abs(S(0, 0));
    // Deterministic start with no special alignment to any coordinate.
    CVector v(n);
    for (Eigen::Index k = 0; k < n; ++k) v(k) = {1.0 + 0.37 * static_cast<double>(k), 0.11 * static_cast<double>(k % 3)};
    v.normalize();
    double sigma = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        const CVector w = S * v;
        const double next = w.norm();
        if (next == 0.0) {
            // v landed in the null space; restart from the column of largest norm.
            Eigen::Index col = 0;
            S.colwise().norm().maxCoeff(&col);
            if (S.col(col).norm() == 0.0) return 0.0;
            v = CVector::Unit(n, col);
            continue;
        }
        CVector u = S.adjoint() * w;
        const double un = u.norm();
        if (un == 0.0) return next;
        v = u / un;
        if (std::abs(next - sigma) <= tol * next) return std::max(next, sigma);
        sigma = next;
    }
    return sigma;
}

double condition_2(const CMatrix& S) { return spectral_norm(S) * spectral_norm(inverse_pivoted(S)); }

CVector to_vector(std::span<const std::complex<double>> v) {
    CVector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
    return out;
}

std::vector<std::complex<double>> to_std(const CVector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace gaprecover
