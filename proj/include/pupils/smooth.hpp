#pragma once

#include <span>
#include <vector>

namespace pupils {

/// One parallel branch: (b0 + b1 z^-1) / (1 + a1 z^-1 + a2 z^-2).
struct ParallelSection {
    double b0 = 0.0;
    double b1 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;

    double dc_gain() const noexcept { return (b0 + b1) / (1.0 + a1 + a2); }
};

/**
 * Butterworth low-pass discretized by impulse invariance.
 *
 * The analog prototype is expanded in partial fractions; each conjugate pole
 * pair becomes one second-order branch and the branches run in parallel.
 * The branch numerators are scaled so the DC gain is exactly one. Away from
 * Nyquist the digital magnitude follows the analog |H(f)| = (1 + (f/fc)^2n)^-1/2
 * up to aliasing of the analog tail, which at fs/fc = 50 is below 1e-3 relative.
 */
class ButterworthLowpass {
public:
    /// Throws Error{CutoffOutOfRange} unless 0 < cutoff < fs/2, and
    /// Error{InvalidValue} unless order >= 1.
    ButterworthLowpass(int order, double cutoff, double fs);

    int order() const noexcept { return order_; }
    const std::vector<ParallelSection>& sections() const noexcept { return sections_; }

    /// Samples for the slowest pole's envelope to decay to 1e-3.
    std::size_t settle_length() const noexcept { return settle_; }

    /// Single causal pass, with branch states initialised to the steady state
    /// of a constant input equal to the first sample.
    std::vector<double> filter(std::span<const double> x) const;

    /// Forward-backward pass over an odd-reflected extension of
    /// min(3 * settle_length(), n - 1) samples on each side.
    /// Throws Error{SeriesTooShort} unless x.size() > 3 * order.
    std::vector<double> filtfilt(std::span<const double> x) const;

private:
    int order_;
    std::vector<ParallelSection> sections_;
    std::size_t settle_ = 0;
};

inline constexpr int kSmoothingOrder = 4;

/// Zero-phase 4th-order Butterworth low-pass of a gap-free series.
/// Throws Error{CutoffOutOfRange}, Error{SeriesTooShort}, or
/// Error{InvalidValue} if the series contains a missing value.
std::vector<double> lowpass(std::span<const double> series, double fs, double cutoff);

}  // namespace pupils
