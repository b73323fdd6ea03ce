// bath.hpp — Spectral densities, discretized bath coefficients, influence tables

#pragma once

#include <vector>

#include "memkernel/quadrature.hpp"
#include "memkernel/types.hpp"

namespace memkernel {

enum class SpectralKind { OhmicFamily, BrownianPeak, LorentzianPeak, FermiFlatBand, Tabulated, Sum };

// How J extends to negative frequencies. Bosonic and effective-spin statistics
// use the odd extension J(-w) = -J(w); fermionic statistics the even one.
enum class Extension { Odd, Even };

struct SpectralDensity {
    SpectralKind kind = SpectralKind::OhmicFamily;
    Extension ext = Extension::Odd;

    // ohmic family: J(w) = (xi*pi/2) * w^s * wc^(1-s) * exp(-w/wc)
    double xi = 0.0, s = 1.0, omega_c = 1.0;
    // peaked forms: brownian  J(w) = gamma*w*w0^2 / ((w^2-w0^2)^2 + gamma^2 w^2)
    //               lorentzian J(w) = gamma / ((w-w0)^2 + gamma^2)
    double gamma = 0.0, omega0 = 0.0;
    // fermionic flat band: J(w) = gamma / ((1+e^{nu(w-wc)}) (1+e^{-nu(w+wc)}))
    double nu = 1.0;
    // tabulated (linear interpolation, queries outside the grid are range errors)
    std::vector<double> tab_w, tab_j;
    // sum of components
    std::vector<SpectralDensity> parts;

    static SpectralDensity ohmic(double xi, double s, double omega_c);
    static SpectralDensity brownian_peak(double gamma, double omega0);
    static SpectralDensity lorentzian_peak(double gamma, double omega0);
    static SpectralDensity fermi_flat_band(double gamma, double nu, double omega_c);
    static SpectralDensity tabulated(std::vector<double> w, std::vector<double> j);
    static SpectralDensity sum(std::vector<SpectralDensity> parts);

    void validate() const;
};

// Pointwise J(omega); negative arguments go through the extension flag.
double eval_spectral_density(const SpectralDensity& j, double omega);

struct BathStatistics {
    enum class Kind { Boson, Fermion, SpinEffective };
    Kind kind = Kind::Boson;
    double beta = 1.0;   // inverse temperature
    double mu = 0.0;     // chemical potential (fermionic only)

    static BathStatistics boson(double beta) { return {Kind::Boson, beta, 0.0}; }
    static BathStatistics fermion(double beta, double mu) { return {Kind::Fermion, beta, mu}; }
    static BathStatistics spin(double beta) { return {Kind::SpinEffective, beta, 0.0}; }
};

// Discretized two-point bath coefficients eta_dk for lags dk = 0..max_lag.
// Negative lags are the complex conjugates of the positive ones.
struct EtaTable {
    double dt = 0.0;
    std::vector<Complex> eta;   // eta[dk]
    std::vector<double> err;    // quadrature error estimate per entry

    int max_lag() const { return static_cast<int>(eta.size()) - 1; }
    Complex at(int dk) const {
        return dk >= 0 ? eta.at(static_cast<size_t>(dk)) : std::conj(eta.at(static_cast<size_t>(-dk)));
    }
};

// eta_dk = (2/pi) Int dw J(w)/w^2 * K_stat(w) * sin^2(w dt/2) e^{-i w dt dk}  (dk >= 1)
// eta_0  = (1/2pi) Int dw J(w)/w^2 * K_stat(w) * (1 - e^{-i w dt})
// where K_stat is exp(bw/2)/sinh(bw/2) for bosons, the cosh variant shifted by
// mu for fermions, and the bosonic kernel applied to tanh(bw/2) J(w) for
// effective spin baths. Integrals run over the extended (odd/even) J.
EtaTable eta_coefficients(const SpectralDensity& j, const BathStatistics& stats, double dt,
                          int dk_max, const QuadratureOptions& opt = {});

// Influence functions on the pair index. Entry convention:
//   ik[k](b, a) with b the later and a the earlier pair index,
//   I_k[b,a] = exp(-(s(b+) - s(b-)) * (eta_k s(a+) - conj(eta_k) s(a-)))
// and the single-index I_0[x] built from eta_0 the same way with a = b = x.
struct InfluenceTable {
    double dt = 0.0;
    int d = 0;
    RealVector s_eigs;
    Vector i0;                      // d^2 entries
    std::vector<Matrix> ik;         // k = 1..k_max, each d^2 x d^2
    std::vector<Matrix> ik_tilde;   // I_k - 1

    int k_max() const { return static_cast<int>(ik.size()); }
    const Matrix& influence(int k) const { return ik.at(static_cast<size_t>(k - 1)); }
    const Matrix& influence_tilde(int k) const { return ik_tilde.at(static_cast<size_t>(k - 1)); }
};

InfluenceTable influence_table(const EtaTable& eta, const RealVector& s_eigs, int k_max);

// Elementwise product of per-bath tables (additive baths multiply their
// influence functions).
InfluenceTable multiply_tables(const InfluenceTable& a, const InfluenceTable& b);

double pair_delta(int pair, const RealVector& s_eigs, int d);
Complex pair_phi(const Complex& eta, int pair, const RealVector& s_eigs, int d);

}  // namespace memkernel
