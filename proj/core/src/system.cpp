#include "memkernel/system.hpp"

#include <Eigen/Eigenvalues>

namespace memkernel {

void SystemHamiltonian::validate() const {
    if (d < 2) throw ValidationError("system: dimension must be at least 2");
    if (h.rows() != d || h.cols() != d)
        throw ValidationError("system: Hamiltonian shape does not match dimension");
    if (s_eigs.size() != d)
        throw ValidationError("system: coupling eigenvalue count does not match dimension");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
        throw ValidationError("system: Hamiltonian is not Hermitian");
}

bool SystemHamiltonian::diagonal_hamiltonian(double tol) const {
    Matrix off = h;
    off.diagonal().setZero();
    return off.cwiseAbs().maxCoeff() <= tol;
}

SystemHamiltonian spin_boson_system(double eps, double delta) {
    SystemHamiltonian sys;
    sys.d = 2;
    sys.h = Matrix::Zero(2, 2);
    sys.h(0, 0) = eps;
    sys.h(1, 1) = -eps;
    sys.h(0, 1) = delta;
    sys.h(1, 0) = delta;
    sys.s_eigs = RealVector(2);
    sys.s_eigs << 1.0, -1.0;
    return sys;
}

namespace {

// exp(-i H tau) for Hermitian H via eigendecomposition.
Matrix hermitian_phase(const Matrix& h, double tau) {
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
        throw ValidationError("system: Hamiltonian is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const auto& lam = es.eigenvalues();
    Vector phases(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        phases(i) = std::exp(Complex(0.0, -lam(i) * tau));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix half_step_from(const Matrix& h, int d, double dt) {
    const Matrix a = hermitian_phase(h, 0.5 * dt);   // exp(-i H dt/2)
    Matrix g(d * d, d * d);
    for (int xp = 0; xp < d; ++xp)
        for (int xm = 0; xm < d; ++xm)
            for (int yp = 0; yp < d; ++yp)
                for (int ym = 0; ym < d; ++ym)
                    g(pair_index(xp, xm, d), pair_index(yp, ym, d)) =
                        a(xp, yp) * std::conj(a(xm, ym));
    return g;
}

Matrix euler_step_from(const Matrix& h, int d, double dt) {
    Matrix l = Matrix::Identity(d * d, d * d);
    const Complex mi(0.0, -1.0);
    // [H, rho][x+,x-] = sum_k H(x+,k) rho(k,x-) - rho(x+,k) H(k,x-)
    for (int xp = 0; xp < d; ++xp)
        for (int xm = 0; xm < d; ++xm) {
            const int row = pair_index(xp, xm, d);
            for (int k = 0; k < d; ++k) {
                l(row, pair_index(k, xm, d)) += mi * dt * h(xp, k);
                l(row, pair_index(xp, k, d)) -= mi * dt * h(k, xm);
            }
        }
    return l;
}

}  // namespace

Matrix bare_half_step(const SystemHamiltonian& sys, double dt) {
    if (dt <= 0.0) throw ValidationError("system: time step must be positive");
    sys.validate();
    return half_step_from(sys.h, sys.d, dt);
}

Matrix bare_half_step_at(const SystemHamiltonian& sys, double t, double dt) {
    if (dt <= 0.0) throw ValidationError("system: time step must be positive");
    return half_step_from(sys.at(t), sys.d, dt);
}

Matrix bare_full_step(const Matrix& half) { return half * half; }

Matrix liouvillian_step(const SystemHamiltonian& sys, double dt) {
    if (dt <= 0.0) throw ValidationError("system: time step must be positive");
    sys.validate();
    return euler_step_from(sys.h, sys.d, dt);
}

Matrix liouvillian_step_at(const SystemHamiltonian& sys, double t, double dt) {
    if (dt <= 0.0) throw ValidationError("system: time step must be positive");
    return euler_step_from(sys.at(t), sys.d, dt);
}

}  // namespace memkernel
