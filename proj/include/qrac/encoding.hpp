#ifndef QRAC_ENCODING_HPP
#define QRAC_ENCODING_HPP

// Mutually unbiased bases (computational and Fourier), the 2^(d)->1 encoding
// states, and the baseline strategy (encoding states + MUB measurements).

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace qrac {

struct Strategy {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> states;     // d*d density operators, index x0*d + x1
    std::vector<ComplexMatrix> effects_q0; // d trace-1 PSD effects
    std::vector<ComplexMatrix> effects_q1; // d trace-1 PSD effects
};

namespace detail {

inline void require_dim(std::size_t d) {
    if (d < 2) throw std::domain_error("dimension must be at least 2");
}

inline void require_digit(std::size_t d, std::size_t x, const char* what) {
    if (x >= d) throw std::domain_error(std::string(what) + " digit out of range");
}

} // namespace detail

inline std::vector<StateVector> computational_basis(std::size_t d) {
    detail::require_dim(d);
    std::vector<StateVector> basis(d, StateVector(d, cplx{}));
    for (std::size_t l = 0; l < d; ++l) basis[l][l] = 1.0;
    return basis;
}

// |f_l> with amplitudes omega^{l n} / sqrt(d), omega = exp(2 pi i / d)
inline std::vector<StateVector> fourier_basis(std::size_t d) {
    detail::require_dim(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<StateVector> basis(d, StateVector(d));
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t n = 0; n < d; ++n) {
            const double arg = 2.0 * std::numbers::pi * static_cast<double>(l * n) / static_cast<double>(d);
            basis[l][n] = scale * cplx{std::cos(arg), std::sin(arg)};
        }
    return basis;
}

// Superposition of |e_x0> and |f_x1| with the relative phase chosen so both
// overlaps have equal magnitude (1 + 1/sqrt(d)) / sqrt(2 + 2/sqrt(d)); the
// squared norm before renormalization is then 2 + 2/sqrt(d) for every string,
// which keeps both answer probabilities at (1 + 1/sqrt(d))/2.
inline StateVector encoding_state(std::size_t d, std::size_t x0, std::size_t x1) {
    detail::require_dim(d);
    detail::require_digit(d, x0, "x0");
    detail::require_digit(d, x1, "x1");
    const StateVector f = fourier_basis(d)[x1];
    const cplx overlap = f[x0];                 // <e_x0 | f_x1>, magnitude 1/sqrt(d)
    const cplx align = std::conj(overlap) / std::abs(overlap);
    StateVector v(d);
    for (std::size_t n = 0; n < d; ++n) v[n] = align * f[n];
    v[x0] += 1.0;
    const double nrm = vector_norm(v);
    for (auto& x : v) x /= nrm;
    return v;
}

inline Strategy noiseless_strategy(std::size_t d) {
    detail::require_dim(d);
    Strategy s;
    s.dim = d;
    s.states.reserve(d * d);
    for (std::size_t x0 = 0; x0 < d; ++x0)
        for (std::size_t x1 = 0; x1 < d; ++x1)
            s.states.push_back(projector(encoding_state(d, x0, x1)));
    for (const auto& e : computational_basis(d)) s.effects_q0.push_back(projector(e));
    for (const auto& f : fourier_basis(d)) s.effects_q1.push_back(projector(f));
    return s;
}

} // namespace qrac

#endif
