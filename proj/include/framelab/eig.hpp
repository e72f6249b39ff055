#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "framelab/errors.hpp"
#include "framelab/mat.hpp"

namespace framelab {

struct EigResult {
    std::vector<double> values;  // descending
    Mat vectors;                 // unitary; column k pairs with values[k]
};

namespace detail {

inline double off_diagonal_norm(const Mat& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations,
/// iterated until the off-diagonal Frobenius norm falls below 1e-13.
/// The sweep order and rotation choices are fixed, so the result is
/// deterministic; eigenvalues come back sorted descending.
///
/// The (p,q) rotation annihilates a(p,q): with a(p,q) = r*u (r = |a(p,q)|,
/// |u| = 1), tau = (a(q,q) - a(p,p)) / (2r) and t the smaller-magnitude root
/// of t^2 + 2*tau*t - 1 = 0, the plane rotation has J(p,p) = J(q,q) = c,
/// J(p,q) = -s*u, J(q,p) = s*conj(u) with c = 1/sqrt(1+t^2), s = t*c.
/// Real symmetric input keeps every intermediate exactly real because u is
/// computed as a(p,q)/r, which is +-1.0 for real entries.
inline EigResult hermitian_eig(Mat a) {
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n) throw validation_error("hermitian_eig: matrix must be square");

    Mat v = Mat::identity(n);
    constexpr int max_sweeps = 60;
    int sweep = 0;
    while (detail::off_diagonal_norm(a) > tol::jacobi_off) {
        if (++sweep > max_sweeps)
            throw numerical_error("hermitian_eig: Jacobi iteration did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble apq = a(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) continue;
                const cdouble u = apq / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                double t;
                if (std::abs(tau) > 1e150) {
                    t = 1.0 / (2.0 * tau);
                } else {
                    const double sign = tau >= 0.0 ? 1.0 : -1.0;
                    t = 1.0 / (tau + sign * std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t i = 0; i < n; ++i) {  // columns: A <- A J
                    const cdouble aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip + s * std::conj(u) * aiq;
                    a(i, q) = -s * u * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {  // rows: A <- J* A
                    const cdouble apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj + s * u * aqj;
                    a(q, j) = -s * std::conj(u) * apj + c * aqj;
                }
                a(p, q) = 0.0;  // annihilated exactly in exact arithmetic
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t i = 0; i < n; ++i) {  // V <- V J
                    const cdouble vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + s * std::conj(u) * viq;
                    v(i, q) = -s * u * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigResult out;
    out.values.resize(n);
    out.vectors = Mat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

/// In-place modified Gram-Schmidt on the columns. Throws if a column is
/// numerically dependent on its predecessors.
inline void orthonormalize_columns(Mat& a) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            const cdouble proj = column_inner(a, j, k);
            for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) -= proj * a(i, k);
        }
        const double norm = column_norm(a, j);
        if (norm < 1e-8) throw numerical_error("orthonormalize_columns: dependent column");
        for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) /= norm;
    }
}

/// Fix the unit-phase freedom of each column: the first component of
/// magnitude above 1e-10 is rotated to the positive real axis. Real input
/// stays real (the applied phase is then exactly +-1.0).
inline void phase_normalize_columns(Mat& a) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const double mag = std::abs(a(i, j));
            if (mag > 1e-10) {
                const cdouble phase = std::conj(a(i, j)) / mag;
                for (std::size_t k = 0; k < a.rows(); ++k) a(k, j) *= phase;
                break;
            }
        }
    }
}

}  // namespace framelab
