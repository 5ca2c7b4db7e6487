#ifndef QRAC_PROTOCOL_HPP
#define QRAC_PROTOCOL_HPP

// Success probabilities of the 2^(d)->1 random access code: the classical
// bound, the quantum average success of a strategy under a noise channel, and
// their ratio (quantum advantage when > 1).

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "channels.hpp"
#include "encoding.hpp"
#include "matrix.hpp"

namespace qrac {

struct EvalPoint {
    ChannelKind channel_kind;
    std::size_t dim;
    double gamma_t;
    double p;
    double pq;
    double pc;
    double ratio;
    bool optimized;
    int iterations; // 0 when not optimized
};

// (1 + 1/d) / 2
inline double classical_success(std::size_t d) {
    detail::require_dim(d);
    return 0.5 * (1.0 + 1.0 / static_cast<double>(d));
}

// (1 + 1/sqrt(d)) / 2, attained by the baseline strategy at p = 0
inline double noiseless_quantum_success(std::size_t d) {
    detail::require_dim(d);
    return 0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(d)));
}

// (1 / 2d^2) sum_{x0,x1} Tr[ N(rho_{x0 x1}) (M_{x0} + M_{x1}) ]
inline double average_success(const Strategy& strategy, const NoiseChannel& channel) {
    const std::size_t d = strategy.dim;
    if (d != channel.dim)
        throw std::invalid_argument("average_success: strategy and channel dimensions differ");
    double total = 0.0;
    for (std::size_t x0 = 0; x0 < d; ++x0)
        for (std::size_t x1 = 0; x1 < d; ++x1) {
            const ComplexMatrix noisy = apply_channel(channel, strategy.states[x0 * d + x1]);
            total += (noisy * (strategy.effects_q0[x0] + strategy.effects_q1[x1])).trace().real();
        }
    return total / (2.0 * static_cast<double>(d) * static_cast<double>(d));
}

inline double ratio(const Strategy& strategy, const NoiseChannel& channel) {
    return average_success(strategy, channel) / classical_success(strategy.dim);
}

} // namespace qrac

#endif
