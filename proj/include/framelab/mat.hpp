#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace framelab {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix. Small and unclever on purpose: every
/// problem in this library is desk-scale (m, n well under a hundred).
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat eye(n, n);
        for (std::size_t i = 0; i < n; ++i) eye(i, i) = 1.0;
        return eye;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> a_;
};

inline Mat operator*(const Mat& a, const Mat& b) {
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cdouble aik = a(i, k);
            if (aik == cdouble{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline Mat operator-(const Mat& a, const Mat& b) {
    Mat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

/// Conjugate transpose.
inline Mat adjoint(const Mat& a) {
    Mat c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

inline double frobenius_norm(const Mat& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

/// Inner product of columns j and l of a, conjugating the second argument:
/// <a_j, a_l> = sum_i a(i,j) * conj(a(i,l)). This convention is fixed
/// repo-wide; coherence is insensitive to the choice.
inline cdouble column_inner(const Mat& a, std::size_t j, std::size_t l) {
    cdouble s{};
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, j) * std::conj(a(i, l));
    return s;
}

inline double column_norm(const Mat& a, std::size_t j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace framelab
