#ifndef QRAC_THRESHOLD_HPP
#define QRAC_THRESHOLD_HPP

// Threshold finder: scans Gamma t on a uniform grid until the quantum/classical
// ratio first drops below 1, then bisects the bracketing interval down to
// machine width. Supports the baseline strategy or a see-saw optimized one.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "channels.hpp"
#include "encoding.hpp"
#include "protocol.hpp"
#include "seesaw.hpp"

namespace qrac {

struct ThresholdResult {
    ChannelKind channel_kind;
    std::size_t dim;
    std::optional<double> gamma_t_star;
    std::optional<double> p_star;
    bool crossed = false;
};

inline ThresholdResult threshold_gamma_t(ChannelKind kind, std::size_t d,
                                         const std::optional<SeesawConfig>& optimizer = std::nullopt,
                                         double scan_max = 6.0) {
    detail::require_dim(d);
    if (!(scan_max > 0.0)) throw std::domain_error("threshold_gamma_t: scan_max must be positive");

    const double pc = classical_success(d);
    const Strategy baseline = optimizer ? Strategy{} : noiseless_strategy(d);
    const auto ratio_at = [&](double gamma_t) {
        const NoiseChannel channel = make_channel(kind, d, gamma_t_to_p(gamma_t));
        if (optimizer) return seesaw(channel, *optimizer).objective_trace.back() / pc;
        return ratio(baseline, channel);
    };

    ThresholdResult result{kind, d, std::nullopt, std::nullopt, false};
    const double step = 0.01;
    double lo = 0.0;
    double r_lo = ratio_at(lo);
    const long points = static_cast<long>(std::floor(scan_max / step + 1e-9));
    for (long k = 1; k <= points; ++k) {
        const double gt = static_cast<double>(k) * step;
        const double r = ratio_at(gt);
        if (r_lo - 1.0 > 0.0 && r - 1.0 <= 0.0) {
            // Bisect well past the |ratio - 1| <= 1e-6 guarantee: the ratio's
            // slope in Gamma t can be ~0.3, so stopping at the ratio tolerance
            // alone could leave Gamma t* off by several 1e-6.
            double a = lo, b = gt;
            for (int i = 0; i < 100 && (b - a) > 1e-13 * std::max(1.0, b); ++i) {
                const double mid = 0.5 * (a + b);
                if (ratio_at(mid) - 1.0 > 0.0) a = mid;
                else b = mid;
            }
            const double star = 0.5 * (a + b);
            result.gamma_t_star = star;
            result.p_star = gamma_t_to_p(star);
            result.crossed = true;
            return result;
        }
        lo = gt;
        r_lo = r;
    }
    return result;
}

} // namespace qrac

#endif
