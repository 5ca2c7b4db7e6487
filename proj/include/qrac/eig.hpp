#ifndef QRAC_EIG_HPP
#define QRAC_EIG_HPP

// Hermitian eigendecomposition via cyclic Jacobi with complex 2x2 rotations.
// Deterministic: fixed sweep order, stable descending eigenvalue sort (ties
// keep pre-sort column order), and a fixed eigenvector phase convention (first
// component with magnitude > 1e-8 made real and non-negative).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace qrac {

struct HermitianEigenResult {
    std::vector<double> eigenvalues;       // sorted non-increasing
    std::vector<StateVector> eigenvectors; // unit norm, same order
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& h) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

} // namespace detail

inline HermitianEigenResult hermitian_eig(const ComplexMatrix& A) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("hermitian_eig: matrix not square");
    const std::size_t n = A.rows();
    const double anorm = A.frobenius_norm();
    if (hermiticity_defect(A) > 1e-9 * std::max(1.0, anorm))
        throw std::domain_error("hermitian_eig: matrix not Hermitian within tolerance");

    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (A(i, j) + std::conj(A(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double stop = 1e-12 * anorm;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (detail::off_diagonal_norm(h) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(h(p, q));
                if (r <= 1e-300) continue;
                // Factor the pivot's phase into the rotation so the remaining
                // 2x2 problem is real symmetric: with e^{i phi} = h_pq / r,
                // tau = (h_qq - h_pp) / 2r, t the smaller root of
                // t^2 + 2 tau t - 1 = 0, the plane rotation annihilates h_pq.
                const cplx phase = h(p, q) / r;
                const double tau = (h(q, q).real() - h(p, p).real()) / (2.0 * r);
                const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
                const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * phase;             // s e^{i phi}
                const cplx spc = s * std::conj(phase); // s e^{-i phi}
                for (std::size_t k = 0; k < n; ++k) {  // columns: h <- h J
                    const cplx hkp = h(k, p), hkq = h(k, q);
                    h(k, p) = c * hkp - spc * hkq;
                    h(k, q) = s * hkp + c * std::conj(phase) * hkq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // rows: h <- J† h
                    const cplx hpk = h(p, k), hqk = h(q, k);
                    h(p, k) = c * hpk - sp * hqk;
                    h(q, k) = s * hpk + c * phase * hqk;
                }
                for (std::size_t k = 0; k < n; ++k) {  // accumulate v <- v J
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - spc * vkq;
                    v(k, q) = s * vkp + c * std::conj(phase) * vkq;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = h(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return diag[a] > diag[b]; });

    HermitianEigenResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t col = order[k];
        res.eigenvalues[k] = diag[col];
        StateVector vec(n);
        for (std::size_t i = 0; i < n; ++i) vec[i] = v(i, col);
        const double nrm = vector_norm(vec);
        for (auto& x : vec) x /= nrm;
        for (std::size_t i = 0; i < n; ++i) {
            const double m = std::abs(vec[i]);
            if (m > 1e-8) {
                const cplx ph = std::conj(vec[i]) / m;
                for (auto& x : vec) x *= ph;
                break;
            }
        }
        res.eigenvectors[k] = std::move(vec);
    }
    return res;
}

inline std::pair<double, StateVector> top_eigenvector(const ComplexMatrix& A) {
    HermitianEigenResult r = hermitian_eig(A);
    return {r.eigenvalues.front(), std::move(r.eigenvectors.front())};
}

} // namespace qrac

#endif
