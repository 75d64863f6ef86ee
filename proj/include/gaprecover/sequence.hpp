#pragma once

// Finite-support complex sequences on the integers, the norms used by the
// recovery bounds, and Z-transform derivatives on the unit circle.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gaprecover {

using Index = std::int64_t;
using Complex = std::complex<double>;

/// Closed index interval [first, last]; empty when last < first.
struct IndexRange {
    Index first = 0;
    Index last = -1;

    bool empty() const noexcept { return last < first; }
    std::size_t size() const noexcept { return empty() ? 0 : static_cast<std::size_t>(last - first + 1); }
    bool contains(Index t) const noexcept { return t >= first && t <= last; }
};

/// The missing block {s, s+1, ..., s+m}.
struct GapSpec {
    Index s = 0;
    int m = 0;

    std::size_t size() const noexcept { return static_cast<std::size_t>(m) + 1; }
    bool contains(Index t) const noexcept { return t >= s && t <= s + m; }
    IndexRange range() const noexcept { return {s, s + m}; }

    friend bool operator==(const GapSpec&, const GapSpec&) = default;
};

/// Throws InvalidGap unless m >= 0 and (m == 0 or s == 0), the normalization
/// every multi-sample solver relies on.
void require_normalized(const GapSpec& gap);

/// Dense window of complex samples starting at index `start`. Samples outside
/// the window are zero. The canonical empty sequence has no samples and
/// start 0. Every stored sample is finite.
class FiniteSequence {
public:
    FiniteSequence() = default;

    /// Throws NonFiniteValue if any sample is NaN or infinite.
    FiniteSequence(Index start, std::vector<Complex> values);

    /// Zero-filled window covering `range`.
    static FiniteSequence zeros(IndexRange range);

    Index start() const noexcept { return start_; }
    /// Index of the last stored sample (start - 1 when empty).
    Index last() const noexcept { return start_ + static_cast<Index>(values_.size()) - 1; }
    IndexRange support() const noexcept { return {start_, last()}; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    std::span<const Complex> values() const noexcept { return values_; }

    /// Value at index t; zero outside the stored window.
    Complex operator[](Index t) const noexcept;
    bool stores(Index t) const noexcept { return !empty() && t >= start_ && t <= last(); }

    /// Writes x(t) = v, growing the window with zeros when t lies outside.
    void set(Index t, Complex v);

    /// Copy with the samples on the gap set to zero (the window is kept).
    FiniteSequence without(const GapSpec& gap) const;

    /// Copy restricted to `range` (intersection with the stored window).
    FiniteSequence restricted(IndexRange range) const;

    friend bool operator==(const FiniteSequence&, const FiniteSequence&) = default;

private:
    Index start_ = 0;
    std::vector<Complex> values_;
};

enum class Norm { one, two, inf };

/// l_r norm over the stored support.
double norm(const FiniteSequence& x, Norm r);

/// Sum of |t|^m |x(t)|.
double weighted_moment(const FiniteSequence& x, int m);

/// Values of d^p X / d omega^p at e^{i omega}, p = 0..m.
struct SpectralProbe {
    double omega = 0.0;
    std::vector<Complex> derivs;
};

/// derivs[p] = sum over stored t outside `exclude` of (-i t)^p e^{-i omega t} x(t).
SpectralProbe z_derivatives(const FiniteSequence& x, double omega, int m,
                            const std::optional<GapSpec>& exclude = std::nullopt);

/// e^{-i omega t}, with the exact values +-1 when omega is exactly pi.
Complex unit_phase(double omega, Index t);

FiniteSequence add(const FiniteSequence& x, const FiniteSequence& y);
FiniteSequence subtract(const FiniteSequence& x, const FiniteSequence& y);
FiniteSequence scale(const FiniteSequence& x, Complex c);

/// Copy of x with fill[p] written at s + p. Throws InvalidArgument when fill
/// does not have gap.size() entries.
FiniteSequence overlay_gap(const FiniteSequence& x, const GapSpec& gap, std::span<const Complex> fill);

}  // namespace gaprecover
