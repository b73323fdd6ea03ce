// system.hpp — System Hamiltonian and the bare Liouville-space propagators

#pragma once

#include <functional>

#include "memkernel/types.hpp"

namespace memkernel {

// d-level system whose coupling operator is diagonal in the computational
// basis (eigenvalues s_eigs). An optional callback supplies H(t) for driven
// systems; when absent the Hamiltonian is time independent.
struct SystemHamiltonian {
    int d = 2;
    Matrix h;                            // d x d, Hermitian
    RealVector s_eigs;                   // coupling eigenvalues, length d
    std::function<Matrix(double)> h_t;   // optional drive

    bool driven() const { return static_cast<bool>(h_t); }
    Matrix at(double t) const { return driven() ? h_t(t) : h; }

    // Throws ValidationError on shape mismatch or a non-Hermitian Hamiltonian.
    void validate() const;

    bool diagonal_hamiltonian(double tol = 1e-12) const;
};

constexpr double kHermitianTol = 1e-12;

// Convenience spin-boson system: H = eps*sigma_z + delta*sigma_x, S = sigma_z.
SystemHamiltonian spin_boson_system(double eps, double delta);

// Half step G: G[(x+,x-),(y+,y-)] = <x+|exp(-i H dt/2)|y+> <y-|exp(+i H dt/2)|x->.
// The matrix exponential goes through a Hermitian eigendecomposition.
Matrix bare_half_step(const SystemHamiltonian& sys, double dt);

// Half step from H(t) sampled at time t (driven systems).
Matrix bare_half_step_at(const SystemHamiltonian& sys, double t, double dt);

// Full step F = G G.
Matrix bare_full_step(const Matrix& half);

// First-order Euler step L = 1 - i dt [H, .] in the pair-index convention.
Matrix liouvillian_step(const SystemHamiltonian& sys, double dt);
Matrix liouvillian_step_at(const SystemHamiltonian& sys, double t, double dt);

}  // namespace memkernel
