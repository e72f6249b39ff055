#pragma once

#include <stdexcept>
#include <string>

namespace framelab {

/// Precondition or input-contract violation (bad frame data, hypothesis
/// failures such as a non-tight input to the Naimark complement).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Numerical failure inside an otherwise well-posed computation
/// (eigensolver non-convergence, rank collapse during projection).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Default tolerances. Exact constructions are held to much tighter
/// tolerances than anything that comes out of an iterative solver.
namespace tol {
inline constexpr double unit_norm = 1e-12;
inline constexpr double tightness = 1e-10;
inline constexpr double rank = 1e-10;
inline constexpr double angle_dedup = 1e-8;
inline constexpr double certificate = 1e-6;
inline constexpr double unitary = 1e-10;
inline constexpr double jacobi_off = 1e-13;
}  // namespace tol

}  // namespace framelab
