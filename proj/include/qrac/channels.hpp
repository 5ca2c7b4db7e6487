#ifndef QRAC_CHANNELS_HPP
#define QRAC_CHANNELS_HPP

// The five noise channels as maps on density operators: Weyl dit/phase flips,
// depolarizing, dephasing, amplitude damping. Flip and damping channels carry
// explicit Kraus sets; depolarizing and dephasing are applied as direct maps.
// Also provides the Heisenberg-picture adjoint and Choi-matrix construction.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace qrac {

enum class ChannelKind { DitFlip, DPhaseFlip, Depolarizing, Dephasing, AmplitudeDamping };

inline constexpr std::array<ChannelKind, 5> all_channel_kinds = {
    ChannelKind::DitFlip, ChannelKind::DPhaseFlip, ChannelKind::Dephasing,
    ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping,
};

struct NoiseChannel {
    ChannelKind kind;
    std::size_t dim;
    double p; // noise strength, p = 1 - exp(-Gamma t)
};

struct KrausSet {
    std::size_t dim;
    std::vector<ComplexMatrix> operators;
};

inline NoiseChannel make_channel(ChannelKind kind, std::size_t dim, double p) {
    if (dim < 2) throw std::domain_error("channel dimension must be at least 2");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("noise strength p must lie in [0, 1]");
    return NoiseChannel{kind, dim, p};
}

inline const char* channel_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::DitFlip: return "ditflip";
        case ChannelKind::DPhaseFlip: return "dphaseflip";
        case ChannelKind::Depolarizing: return "depolarizing";
        case ChannelKind::Dephasing: return "dephasing";
        case ChannelKind::AmplitudeDamping: return "amplitudedamping";
    }
    throw std::domain_error("unknown channel kind");
}

inline ChannelKind parse_channel(const std::string& token) {
    for (ChannelKind k : all_channel_kinds)
        if (token == channel_name(k)) return k;
    throw std::domain_error("unknown channel name: " + token);
}

inline double gamma_t_to_p(double gamma_t) {
    if (!(gamma_t >= 0.0)) throw std::domain_error("gamma_t must be non-negative");
    return 1.0 - std::exp(-gamma_t);
}

// W_{nu mu} = sum_k omega^{k nu} |k><k + mu mod d|, omega = exp(2 pi i / d)
inline ComplexMatrix weyl_operator(std::size_t d, std::size_t nu, std::size_t mu) {
    if (d < 2) throw std::domain_error("dimension must be at least 2");
    if (nu >= d || mu >= d) throw std::domain_error("Weyl indices out of range");
    ComplexMatrix w(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const double arg = 2.0 * std::numbers::pi * static_cast<double>(k * nu) / static_cast<double>(d);
        w(k, (k + mu) % d) = cplx{std::cos(arg), std::sin(arg)};
    }
    return w;
}

namespace detail {

inline double binomial(std::size_t n, std::size_t k) {
    double b = 1.0;
    for (std::size_t i = 0; i < k; ++i)
        b = b * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return b;
}

} // namespace detail

inline KrausSet kraus_set(const NoiseChannel& ch) {
    const std::size_t d = ch.dim;
    const double p = ch.p;
    KrausSet set{d, {}};
    switch (ch.kind) {
        case ChannelKind::DitFlip:
        case ChannelKind::DPhaseFlip: {
            set.operators.push_back(std::sqrt(1.0 - p) * weyl_operator(d, 0, 0));
            const double w = std::sqrt(p / static_cast<double>(d - 1));
            for (std::size_t i = 1; i < d; ++i)
                set.operators.push_back(
                    w * (ch.kind == ChannelKind::DitFlip ? weyl_operator(d, 0, i)
                                                         : weyl_operator(d, i, 0)));
            return set;
        }
        case ChannelKind::AmplitudeDamping: {
            // Cascade damping: each level n loses j quanta with binomial
            // probability, survival amplitude eta = 1 - p per quantum:
            //   K_j = sum_{n=j}^{d-1} sqrt( C(n,j) eta^{n-j} (1-eta)^j ) |n-j><n|
            // Completeness follows from the binomial theorem.
            const double eta = 1.0 - p;
            for (std::size_t j = 0; j < d; ++j) {
                ComplexMatrix k(d, d);
                for (std::size_t n = j; n < d; ++n)
                    k(n - j, n) = std::sqrt(detail::binomial(n, j) *
                                            std::pow(eta, static_cast<double>(n - j)) *
                                            std::pow(p, static_cast<double>(j)));
                set.operators.push_back(std::move(k));
            }
            return set;
        }
        default:
            throw std::domain_error("channel has no Kraus-set form; use apply_channel");
    }
}

namespace detail {

// Linear action of the channel on an arbitrary matrix (not necessarily a
// state); shared by apply_channel and choi_matrix.
inline ComplexMatrix apply_linear(const NoiseChannel& ch, const ComplexMatrix& x) {
    const std::size_t d = ch.dim;
    const double p = ch.p;
    switch (ch.kind) {
        case ChannelKind::Depolarizing: {
            ComplexMatrix out = (1.0 - p) * x;
            const cplx mix = p * x.trace() / static_cast<double>(d);
            for (std::size_t i = 0; i < d; ++i) out(i, i) += mix;
            return out;
        }
        case ChannelKind::Dephasing: {
            ComplexMatrix out(d, d);
            for (std::size_t n = 0; n < d; ++n)
                for (std::size_t m = 0; m < d; ++m) {
                    const double diff = static_cast<double>(n) - static_cast<double>(m);
                    out(n, m) = x(n, m) * std::pow(1.0 - p, diff * diff);
                }
            return out;
        }
        default: {
            ComplexMatrix out(d, d);
            for (const auto& k : kraus_set(ch).operators) out += k * x * k.dagger();
            return out;
        }
    }
}

inline void require_operator_dim(const NoiseChannel& ch, const ComplexMatrix& x, const char* op) {
    if (x.rows() != ch.dim || x.cols() != ch.dim)
        throw std::invalid_argument(std::string(op) + ": operator dimension does not match channel");
}

} // namespace detail

inline ComplexMatrix apply_channel(const NoiseChannel& ch, const ComplexMatrix& rho) {
    detail::require_operator_dim(ch, rho, "apply_channel");
    return detail::apply_linear(ch, rho);
}

// Heisenberg picture: Tr[apply_channel(rho) E] = Tr[rho adjoint_apply(E)].
inline ComplexMatrix adjoint_apply(const NoiseChannel& ch, const ComplexMatrix& e) {
    detail::require_operator_dim(ch, e, "adjoint_apply");
    const std::size_t d = ch.dim;
    const double p = ch.p;
    switch (ch.kind) {
        case ChannelKind::Depolarizing: {
            ComplexMatrix out = (1.0 - p) * e;
            const cplx mix = p * e.trace() / static_cast<double>(d);
            for (std::size_t i = 0; i < d; ++i) out(i, i) += mix;
            return out;
        }
        case ChannelKind::Dephasing:
            return detail::apply_linear(ch, e); // entrywise real factors: self-adjoint map
        default: {
            ComplexMatrix out(d, d);
            for (const auto& k : kraus_set(ch).operators) out += k.dagger() * e * k;
            return out;
        }
    }
}

// (N (x) id)(|Omega><Omega|), |Omega> = sum_k |kk> / sqrt(d); d^2 x d^2
inline ComplexMatrix choi_matrix(const NoiseChannel& ch) {
    const std::size_t d = ch.dim;
    ComplexMatrix choi(d * d, d * d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m) {
            ComplexMatrix unit(d, d);
            unit(k, m) = 1.0 / static_cast<double>(d);
            ComplexMatrix mapped = detail::apply_linear(ch, unit);
            ComplexMatrix basis(d, d);
            basis(k, m) = 1.0;
            choi += kron(mapped, basis);
        }
    return choi;
}

} // namespace qrac

#endif
