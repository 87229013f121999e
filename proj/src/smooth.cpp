#include "pupils/smooth.hpp"

#include "pupils/error.hpp"
#include "pupils/types.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace pupils {

namespace {

using cplx = std::complex<double>;

std::vector<cplx> analog_poles(int order, double omega) {
    std::vector<cplx> poles;
    poles.reserve(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k) {
        const double angle = std::numbers::pi * (2.0 * k + order + 1.0) / (2.0 * order);
        poles.push_back(std::polar(omega, angle));
    }
    return poles;
}

}  // namespace

ButterworthLowpass::ButterworthLowpass(int order, double cutoff, double fs) : order_(order) {
    if (order < 1) throw Error(ErrorKind::InvalidValue, "filter order must be >= 1");
    if (!(std::isfinite(fs) && fs > 0)) throw Error(ErrorKind::InvalidValue, "fs must be > 0");
    if (!(std::isfinite(cutoff) && cutoff > 0 && cutoff < fs / 2))
        throw Error(ErrorKind::CutoffOutOfRange,
                    "cutoff " + std::to_string(cutoff) + " Hz must lie in (0, fs/2 = " + std::to_string(fs / 2) + ")");

    const double omega = 2.0 * std::numbers::pi * cutoff;
    const double T = 1.0 / fs;
    const auto poles = analog_poles(order, omega);

    double max_radius = 0.0;
    for (int k = 0; k < order; ++k) {
        const cplx s = poles[static_cast<std::size_t>(k)];
        // One representative per conjugate pair (upper half plane) plus the real pole of odd orders.
        const bool real_pole = std::abs(s.imag()) < 1e-12 * omega;
        if (!real_pole && s.imag() < 0) continue;

        cplx denom = 1.0;
        for (int j = 0; j < order; ++j)
            if (j != k) denom *= s - poles[static_cast<std::size_t>(j)];
        const cplx residue = std::pow(omega, order) / denom;
        const cplx z = std::exp(s * T);
        max_radius = std::max(max_radius, std::abs(z));

        ParallelSection sec;
        if (real_pole) {
            sec.b0 = T * residue.real();
            sec.a1 = -z.real();
        } else {
            sec.b0 = 2.0 * T * residue.real();
            sec.b1 = -2.0 * T * (residue * std::conj(z)).real();
            sec.a1 = -2.0 * z.real();
            sec.a2 = std::norm(z);
        }
        sections_.push_back(sec);
    }

    double dc = 0.0;
    for (const auto& s : sections_) dc += s.dc_gain();
    for (auto& s : sections_) {
        s.b0 /= dc;
        s.b1 /= dc;
    }

    settle_ = static_cast<std::size_t>(std::ceil(std::log(1e-3) / std::log(max_radius)));
    settle_ = std::max<std::size_t>(settle_, 1);
}

std::vector<double> ButterworthLowpass::filter(std::span<const double> x) const {
    std::vector<double> y(x.size(), 0.0);
    if (x.empty()) return y;

    struct State {
        double s1, s2;
    };
    std::vector<State> state;
    state.reserve(sections_.size());
    for (const auto& sec : sections_) {
        const double g = sec.dc_gain();
        state.push_back({(g - sec.b0) * x[0], -sec.a2 * g * x[0]});
    }

    for (std::size_t n = 0; n < x.size(); ++n) {
        double acc = 0.0;
        for (std::size_t k = 0; k < sections_.size(); ++k) {
            const auto& c = sections_[k];
            auto& s = state[k];
            const double out = c.b0 * x[n] + s.s1;
            s.s1 = c.b1 * x[n] - c.a1 * out + s.s2;
            s.s2 = -c.a2 * out;
            acc += out;
        }
        y[n] = acc;
    }
    return y;
}

std::vector<double> ButterworthLowpass::filtfilt(std::span<const double> x) const {
    const std::size_t n = x.size();
    const auto min_len = 3 * static_cast<std::size_t>(order_);
    if (n <= min_len)
        throw Error(ErrorKind::SeriesTooShort,
                    "series of " + std::to_string(n) + " samples; more than " + std::to_string(min_len) + " required");

    const std::size_t pad = std::min(3 * settle_, n - 1);
    std::vector<double> ext;
    ext.reserve(n + 2 * pad);
    for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x[0] - x[i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (std::size_t i = 1; i <= pad; ++i) ext.push_back(2.0 * x[n - 1] - x[n - 1 - i]);

    auto forward = filter(ext);
    std::reverse(forward.begin(), forward.end());
    auto backward = filter(forward);
    std::reverse(backward.begin(), backward.end());

    return {backward.begin() + static_cast<std::ptrdiff_t>(pad),
            backward.begin() + static_cast<std::ptrdiff_t>(pad + n)};
}

std::vector<double> lowpass(std::span<const double> series, double fs, double cutoff) {
    if (std::any_of(series.begin(), series.end(), [](double v) { return !std::isfinite(v); }))
        throw Error(ErrorKind::InvalidValue, "low-pass input must not contain missing samples");
    const ButterworthLowpass filter(kSmoothingOrder, cutoff, fs);
    return filter.filtfilt(series);
}

}  // namespace pupils
