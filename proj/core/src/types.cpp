#include "memkernel/types.hpp"

#include <Eigen/SVD>
#include <Eigen/Eigenvalues>

namespace memkernel {

double operator_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double trace_distance(const Vector& a, const Vector& b, int d) {
    Matrix diff = vector_to_density(a, d) - vector_to_density(b, d);
    // Hermitize: inputs can carry tiny antihermitian numerical noise.
    Matrix herm = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

Vector density_to_vector(const Matrix& rho) {
    const int d = static_cast<int>(rho.rows());
    Vector v(d * d);
    for (int xp = 0; xp < d; ++xp)
        for (int xm = 0; xm < d; ++xm) v(pair_index(xp, xm, d)) = rho(xp, xm);
    return v;
}

Matrix vector_to_density(const Vector& v, int d) {
    Matrix rho(d, d);
    for (int xp = 0; xp < d; ++xp)
        for (int xm = 0; xm < d; ++xm) rho(xp, xm) = v(pair_index(xp, xm, d));
    return rho;
}

Complex vector_trace(const Vector& v, int d) {
    Complex tr = 0.0;
    for (int x = 0; x < d; ++x) tr += v(pair_index(x, x, d));
    return tr;
}

}  // namespace memkernel
