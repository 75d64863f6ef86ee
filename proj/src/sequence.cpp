#include "gaprecover/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gaprecover/errors.hpp"

namespace gaprecover {

namespace {

bool is_finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void require_finite(std::span<const Complex> values, const char* context) {
    for (const auto& v : values) {
        if (!is_finite(v)) throw NonFiniteValue(std::string(context) + ": non-finite sample");
    }
}

IndexRange hull(IndexRange a, IndexRange b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return {std::min(a.first, b.first), std::max(a.last, b.last)};
}

template <typename Op>
FiniteSequence pointwise(const FiniteSequence& x, const FiniteSequence& y, Op op, const char* context) {
    const IndexRange range = hull(x.support(), y.support());
    if (range.empty()) return {};
    std::vector<Complex> out(range.size());
    for (Index t = range.first; t <= range.last; ++t) out[static_cast<std::size_t>(t - range.first)] = op(x[t], y[t]);
    require_finite(out, context);
    return FiniteSequence(range.first, std::move(out));
}

}  // namespace

void require_normalized(const GapSpec& gap) {
    if (gap.m < 0) throw InvalidGap("gap order m must be non-negative");
    if (gap.m > 0 && gap.s != 0) throw InvalidGap("a gap with m > 0 must start at s = 0");
}

FiniteSequence::FiniteSequence(Index start, std::vector<Complex> values)
    : start_(values.empty() ? 0 : start), values_(std::move(values)) {
    require_finite(values_, "FiniteSequence");
}

FiniteSequence FiniteSequence::zeros(IndexRange range) {
    if (range.empty()) return {};
    return FiniteSequence(range.first, std::vector<Complex>(range.size()));
}

Complex FiniteSequence::operator[](Index t) const noexcept {
    if (!stores(t)) return {};
    return values_[static_cast<std::size_t>(t - start_)];
}

void FiniteSequence::set(Index t, Complex v) {
    if (!is_finite(v)) throw NonFiniteValue("FiniteSequence::set: non-finite sample");
    if (empty()) {
        start_ = t;
        values_.assign(1, v);
        return;
    }
    if (t < start_) {
        values_.insert(values_.begin(), static_cast<std::size_t>(start_ - t), Complex{});
        start_ = t;
    } else if (t > last()) {
        values_.resize(static_cast<std::size_t>(t - start_ + 1));
    }
    values_[static_cast<std::size_t>(t - start_)] = v;
}

FiniteSequence FiniteSequence::without(const GapSpec& gap) const {
    FiniteSequence out = *this;
    for (Index t = gap.s; t <= gap.s + gap.m; ++t) {
        if (out.stores(t)) out.values_[static_cast<std::size_t>(t - start_)] = Complex{};
    }
    return out;
}

FiniteSequence FiniteSequence::restricted(IndexRange range) const {
    const IndexRange keep{std::max(range.first, start_), std::min(range.last, last())};
    if (empty() || keep.empty()) return {};
    const auto offset = static_cast<std::ptrdiff_t>(keep.first - start_);
    return FiniteSequence(keep.first, std::vector<Complex>(values_.begin() + offset,
                                                           values_.begin() + offset + static_cast<std::ptrdiff_t>(keep.size())));
}

double norm(const FiniteSequence& x, Norm r) {
    double acc = 0.0;
    switch (r) {
        case Norm::one:
            for (const auto& v : x.values()) acc += std::abs(v);
            return acc;
        case Norm::two:
            for (const auto& v : x.values()) acc += std::norm(v);
            return std::sqrt(acc);
        case Norm::inf:
            for (const auto& v : x.values()) acc = std::max(acc, std::abs(v));
            return acc;
    }
    return acc;
}

double weighted_moment(const FiniteSequence& x, int m) {
    if (m < 0) throw InvalidArgument("weighted_moment: m must be non-negative");
    double acc = 0.0;
    Index t = x.start();
    for (const auto& v : x.values()) {
        const double weight = m == 0 ? 1.0 : std::pow(std::abs(static_cast<double>(t)), m);
        acc += weight * std::abs(v);
        ++t;
    }
    return acc;
}

Complex unit_phase(double omega, Index t) {
    if (omega == std::numbers::pi) return (t % 2 == 0) ? Complex{1.0, 0.0} : Complex{-1.0, 0.0};
    if (omega == 0.0 || t == 0) return {1.0, 0.0};
    return std::polar(1.0, -omega * static_cast<double>(t));
}

SpectralProbe z_derivatives(const FiniteSequence& x, double omega, int m, const std::optional<GapSpec>& exclude) {
    if (m < 0) throw InvalidArgument("z_derivatives: m must be non-negative");
    SpectralProbe probe{omega, std::vector<Complex>(static_cast<std::size_t>(m) + 1)};
    Index t = x.start();
    for (const auto& v : x.values()) {
        if (!(exclude && exclude->contains(t)) && v != Complex{}) {
            const Complex step{0.0, -static_cast<double>(t)};
            Complex term = unit_phase(omega, t) * v;
            for (auto& d : probe.derivs) {
                d += term;
                term *= step;
            }
        }
        ++t;
    }
    return probe;
}

FiniteSequence add(const FiniteSequence& x, const FiniteSequence& y) {
    return pointwise(x, y, [](Complex a, Complex b) { return a + b; }, "add");
}

FiniteSequence subtract(const FiniteSequence& x, const FiniteSequence& y) {
    return pointwise(x, y, [](Complex a, Complex b) { return a - b; }, "subtract");
}

FiniteSequence scale(const FiniteSequence& x, Complex c) {
    std::vector<Complex> out(x.values().begin(), x.values().end());
    for (auto& v : out) v *= c;
    require_finite(out, "scale");
    return FiniteSequence(x.start(), std::move(out));
}

FiniteSequence overlay_gap(const FiniteSequence& x, const GapSpec& gap, std::span<const Complex> fill) {
    if (gap.m < 0 || fill.size() != gap.size()) throw InvalidArgument("overlay_gap: fill must have m+1 entries");
    FiniteSequence out = x;
    for (std::size_t p = 0; p < fill.size(); ++p) out.set(gap.s + static_cast<Index>(p), fill[p]);
    return out;
}

}  // namespace gaprecover
