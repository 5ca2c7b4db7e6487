#ifndef QRAC_SEESAW_HPP
#define QRAC_SEESAW_HPP

// Alternating maximization of the average success probability: states are
// re-optimized with measurements fixed (top eigenvector of the adjoint-mapped
// effect sum), then measurements with states fixed. Both sub-problems are
// solved in closed form over the trace-1 PSD constraint set, so each half-step
// is an exact block optimum and the objective never decreases.

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "channels.hpp"
#include "eig.hpp"
#include "encoding.hpp"
#include "matrix.hpp"
#include "protocol.hpp"

namespace qrac {

struct SeesawConfig {
    double tol = 1e-10;     // stop when a full iteration improves less than this
    int max_iters = 500;
    int restarts = 1;       // first run starts from MUB effects, extras from random ones
    std::uint64_t seed = 0;
};

struct SeesawResult {
    Strategy strategy;
    std::vector<double> objective_trace; // objective after every half-step
    bool converged = false;
    int iterations = 0;                  // full iterations of the returned run
};

// || sum_b E_b - I ||_F : distance of an effect family from POVM completeness.
// Completeness is not a constraint of the optimization; this is diagnostic.
inline double povm_deviation(const std::vector<ComplexMatrix>& effects) {
    if (effects.empty()) throw std::invalid_argument("povm_deviation: no effects");
    ComplexMatrix sum(effects.front().rows(), effects.front().cols());
    for (const auto& e : effects) sum += e;
    return frobenius_distance(sum, ComplexMatrix::identity(sum.rows()));
}

// For each (x0, x1): the rank-1 projector onto the top eigenvector of
// adjoint(M_{x0} + M_{x1}), the maximizer of Tr[rho Lambda] over trace-1 PSD rho.
inline std::vector<ComplexMatrix> optimize_states(const NoiseChannel& channel,
                                                  const std::vector<ComplexMatrix>& effects_q0,
                                                  const std::vector<ComplexMatrix>& effects_q1) {
    const std::size_t d = channel.dim;
    if (effects_q0.size() != d || effects_q1.size() != d)
        throw std::invalid_argument("optimize_states: effect count does not match dimension");
    std::vector<ComplexMatrix> states;
    states.reserve(d * d);
    for (std::size_t x0 = 0; x0 < d; ++x0)
        for (std::size_t x1 = 0; x1 < d; ++x1) {
            const ComplexMatrix lambda =
                adjoint_apply(channel, effects_q0[x0] + effects_q1[x1]);
            states.push_back(projector(top_eigenvector(lambda).second));
        }
    return states;
}

// For each answer b: the rank-1 projector onto the top eigenvector of the
// summed noisy states consistent with that answer, per question.
inline std::pair<std::vector<ComplexMatrix>, std::vector<ComplexMatrix>>
optimize_measurements(const NoiseChannel& channel, const std::vector<ComplexMatrix>& states) {
    const std::size_t d = channel.dim;
    if (states.size() != d * d)
        throw std::invalid_argument("optimize_measurements: state count does not match dimension");
    std::vector<ComplexMatrix> noisy;
    noisy.reserve(d * d);
    for (const auto& rho : states) noisy.push_back(apply_channel(channel, rho));
    std::vector<ComplexMatrix> effects_q0, effects_q1;
    effects_q0.reserve(d);
    effects_q1.reserve(d);
    for (std::size_t b = 0; b < d; ++b) {
        ComplexMatrix a0(d, d), a1(d, d);
        for (std::size_t x = 0; x < d; ++x) {
            a0 += noisy[b * d + x];
            a1 += noisy[x * d + b];
        }
        effects_q0.push_back(projector(top_eigenvector(a0).second));
        effects_q1.push_back(projector(top_eigenvector(a1).second));
    }
    return {std::move(effects_q0), std::move(effects_q1)};
}

namespace detail {

inline double seesaw_objective(const NoiseChannel& channel,
                               const std::vector<ComplexMatrix>& states,
                               const std::vector<ComplexMatrix>& effects_q0,
                               const std::vector<ComplexMatrix>& effects_q1) {
    const std::size_t d = channel.dim;
    double total = 0.0;
    for (std::size_t x0 = 0; x0 < d; ++x0)
        for (std::size_t x1 = 0; x1 < d; ++x1) {
            const ComplexMatrix noisy = apply_channel(channel, states[x0 * d + x1]);
            total += (noisy * (effects_q0[x0] + effects_q1[x1])).trace().real();
        }
    return total / (2.0 * static_cast<double>(d) * static_cast<double>(d));
}

inline StateVector random_unit_vector(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector v(d);
    double nrm = 0.0;
    do {
        for (auto& x : v) x = cplx{gauss(rng), gauss(rng)};
        nrm = vector_norm(v);
    } while (nrm < 1e-12);
    for (auto& x : v) x /= nrm;
    return v;
}

} // namespace detail

inline SeesawResult seesaw(const NoiseChannel& channel, const SeesawConfig& config = {}) {
    if (!(config.tol > 0.0)) throw std::domain_error("seesaw: tol must be positive");
    if (config.max_iters < 1) throw std::domain_error("seesaw: max_iters must be at least 1");
    if (config.restarts < 1) throw std::domain_error("seesaw: restarts must be at least 1");

    const std::size_t d = channel.dim;
    std::mt19937_64 rng(config.seed);
    SeesawResult best;
    bool have_best = false;

    for (int restart = 0; restart < config.restarts; ++restart) {
        std::vector<ComplexMatrix> effects_q0, effects_q1;
        if (restart == 0) {
            for (const auto& e : computational_basis(d)) effects_q0.push_back(projector(e));
            for (const auto& f : fourier_basis(d)) effects_q1.push_back(projector(f));
        } else {
            for (std::size_t b = 0; b < d; ++b)
                effects_q0.push_back(projector(detail::random_unit_vector(d, rng)));
            for (std::size_t b = 0; b < d; ++b)
                effects_q1.push_back(projector(detail::random_unit_vector(d, rng)));
        }

        SeesawResult run;
        std::vector<ComplexMatrix> states;
        double previous = 0.0;
        bool first = true;
        for (int iter = 0; iter < config.max_iters; ++iter) {
            states = optimize_states(channel, effects_q0, effects_q1);
            run.objective_trace.push_back(
                detail::seesaw_objective(channel, states, effects_q0, effects_q1));
            std::tie(effects_q0, effects_q1) = optimize_measurements(channel, states);
            const double objective =
                detail::seesaw_objective(channel, states, effects_q0, effects_q1);
            run.objective_trace.push_back(objective);
            run.iterations = iter + 1;
            if (!first && objective - previous < config.tol) {
                run.converged = true;
                break;
            }
            first = false;
            previous = objective;
        }
        run.strategy =
            Strategy{d, std::move(states), std::move(effects_q0), std::move(effects_q1)};

        if (!have_best || run.objective_trace.back() > best.objective_trace.back()) {
            best = std::move(run);
            have_best = true;
        }
    }
    return best;
}

} // namespace qrac

#endif
