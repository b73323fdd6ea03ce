// types.hpp — Scalar/matrix aliases, the pair-index convention, error types

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace memkernel {

using Complex    = std::complex<double>;
using Matrix     = Eigen::MatrixXcd;
using Vector     = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Forward/backward pair indices (x+, x-) are flattened row-major:
//   pair = x+ * d + x-
// Every superoperator in this library (half step, full step, Euler step,
// reduced propagator, memory kernel) is a d^2 x d^2 matrix acting on density
// vectors rho[pair] with rho[x+ * d + x-] = <x+|rho|x->. Units use hbar = 1.
inline int pair_index(int xp, int xm, int d) { return xp * d + xm; }
inline int pair_plus(int pair, int d) { return pair / d; }
inline int pair_minus(int pair, int d) { return pair % d; }

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConditioningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest singular value (the operator 2-norm used for all reported norms).
double operator_norm(const Matrix& m);

// Trace distance (1/2)||rho - sigma||_1 between two pair-space density vectors.
double trace_distance(const Vector& a, const Vector& b, int d);

Vector density_to_vector(const Matrix& rho);
Matrix vector_to_density(const Vector& v, int d);

// Trace of a pair-space density vector.
Complex vector_trace(const Vector& v, int d);

}  // namespace memkernel
