#include "memkernel/bath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace memkernel {

namespace {
constexpr double kPi = std::numbers::pi;
}

SpectralDensity SpectralDensity::ohmic(double xi, double s, double omega_c) {
    SpectralDensity j;
    j.kind = SpectralKind::OhmicFamily;
    j.xi = xi;
    j.s = s;
    j.omega_c = omega_c;
    return j;
}

SpectralDensity SpectralDensity::brownian_peak(double gamma, double omega0) {
    SpectralDensity j;
    j.kind = SpectralKind::BrownianPeak;
    j.gamma = gamma;
    j.omega0 = omega0;
    return j;
}

SpectralDensity SpectralDensity::lorentzian_peak(double gamma, double omega0) {
    SpectralDensity j;
    j.kind = SpectralKind::LorentzianPeak;
    j.gamma = gamma;
    j.omega0 = omega0;
    return j;
}

SpectralDensity SpectralDensity::fermi_flat_band(double gamma, double nu, double omega_c) {
    SpectralDensity j;
    j.kind = SpectralKind::FermiFlatBand;
    j.gamma = gamma;
    j.nu = nu;
    j.omega_c = omega_c;
    j.ext = Extension::Even;
    return j;
}

SpectralDensity SpectralDensity::tabulated(std::vector<double> w, std::vector<double> j) {
    SpectralDensity out;
    out.kind = SpectralKind::Tabulated;
    out.tab_w = std::move(w);
    out.tab_j = std::move(j);
    return out;
}

SpectralDensity SpectralDensity::sum(std::vector<SpectralDensity> parts) {
    SpectralDensity out;
    out.kind = SpectralKind::Sum;
    out.parts = std::move(parts);
    return out;
}

void SpectralDensity::validate() const {
    switch (kind) {
        case SpectralKind::OhmicFamily:
            if (xi < 0.0 || s <= 0.0 || omega_c <= 0.0)
                throw ValidationError("bath: ohmic family needs xi >= 0, s > 0, omega_c > 0");
            break;
        case SpectralKind::BrownianPeak:
        case SpectralKind::LorentzianPeak:
            if (gamma <= 0.0 || omega0 <= 0.0)
                throw ValidationError("bath: peaked form needs gamma > 0 and omega0 > 0");
            break;
        case SpectralKind::FermiFlatBand:
            if (gamma <= 0.0 || nu <= 0.0 || omega_c <= 0.0)
                throw ValidationError("bath: flat band needs gamma > 0, nu > 0, omega_c > 0");
            break;
        case SpectralKind::Tabulated:
            if (tab_w.size() < 2 || tab_w.size() != tab_j.size())
                throw ValidationError("bath: tabulated density needs matching grids of length >= 2");
            if (!std::is_sorted(tab_w.begin(), tab_w.end()))
                throw ValidationError("bath: tabulated frequency grid must be sorted");
            break;
        case SpectralKind::Sum:
            if (parts.empty()) throw ValidationError("bath: empty sum of spectral densities");
            for (const auto& p : parts) p.validate();
            break;
    }
}

namespace {

double eval_positive(const SpectralDensity& j, double w) {
    switch (j.kind) {
        case SpectralKind::OhmicFamily:
            return 0.5 * j.xi * kPi * std::pow(w, j.s) * std::pow(j.omega_c, 1.0 - j.s) *
                   std::exp(-w / j.omega_c);
        case SpectralKind::BrownianPeak: {
            const double a = w * w - j.omega0 * j.omega0;
            return j.gamma * w * j.omega0 * j.omega0 / (a * a + j.gamma * j.gamma * w * w);
        }
        case SpectralKind::LorentzianPeak: {
            const double a = w - j.omega0;
            return j.gamma / (a * a + j.gamma * j.gamma);
        }
        case SpectralKind::FermiFlatBand:
            return j.gamma /
                   ((1.0 + std::exp(j.nu * (w - j.omega_c))) * (1.0 + std::exp(-j.nu * (w + j.omega_c))));
        case SpectralKind::Tabulated: {
            if (w < j.tab_w.front() || w > j.tab_w.back())
                throw ValidationError("bath: tabulated spectral density queried outside its grid");
            auto hi = std::lower_bound(j.tab_w.begin(), j.tab_w.end(), w);
            if (hi == j.tab_w.begin()) return j.tab_j.front();
            const size_t i1 = static_cast<size_t>(hi - j.tab_w.begin());
            const size_t i0 = i1 - 1;
            if (i1 == j.tab_w.size()) return j.tab_j.back();
            const double t = (w - j.tab_w[i0]) / (j.tab_w[i1] - j.tab_w[i0]);
            return (1.0 - t) * j.tab_j[i0] + t * j.tab_j[i1];
        }
        case SpectralKind::Sum: {
            double total = 0.0;
            for (const auto& p : j.parts) total += eval_positive(p, w);
            return total;
        }
    }
    return 0.0;
}

// Quadrature window and feature points for one (non-sum) component.
struct WindowPlan {
    double w_max = 0.0;
    double w_low = 0.0;   // lower cutoff (> 0 only when the bosonic kernel diverges)
    std::vector<double> features;
};

WindowPlan plan_window(const SpectralDensity& j, const BathStatistics& stats) {
    WindowPlan plan;
    const double tail_tol = 1e-13;
    switch (j.kind) {
        case SpectralKind::OhmicFamily:
            plan.w_max = 40.0 * j.omega_c;
            plan.features = {j.omega_c, 5.0 * j.omega_c};
            break;
        case SpectralKind::BrownianPeak:
            plan.w_max = std::max(6.0 * j.omega0,
                                  std::pow(2.0 * j.gamma * j.omega0 * j.omega0 / (kPi * tail_tol), 0.25));
            plan.features = {j.omega0 - j.gamma, j.omega0, j.omega0 + j.gamma, 2.0 * j.omega0};
            break;
        case SpectralKind::LorentzianPeak:
            plan.w_max = std::max(6.0 * j.omega0, std::pow(3.0 * j.gamma / (kPi * tail_tol), 1.0 / 3.0));
            plan.features = {j.omega0 - j.gamma, j.omega0, j.omega0 + j.gamma};
            break;
        case SpectralKind::FermiFlatBand:
            plan.w_max = j.omega_c + 70.0 / j.nu;
            plan.features = {j.omega_c};
            break;
        case SpectralKind::Tabulated:
            plan.w_max = j.tab_w.back();
            break;
        case SpectralKind::Sum:
            break;
    }
    // A finite J(0+) under the bosonic kernel leaves a log-divergent 1/w factor;
    // such content never reaches the reduced dynamics at w -> 0, so it is cut at
    // a documented floor rather than integrated.
    if (stats.kind == BathStatistics::Kind::Boson) {
        const double probe = eval_positive(j, std::min(1e-9 * plan.w_max, 1e-9));
        if (probe > 1e-12) plan.w_low = 1e-8 * plan.w_max;
    }
    std::erase_if(plan.features, [&](double f) { return f <= plan.w_low || f >= plan.w_max; });
    return plan;
}

// Folded integrands on w > 0. theta = w dt dk for the off-diagonal entries,
// theta = w dt for the diagonal one. The sin^2(w dt/2)/w^2 factor is computed
// as (dt/2)^2 sinc^2 to stay finite at small w.
struct FoldedKernel {
    const SpectralDensity& j;
    BathStatistics stats;
    double dt;

    double sinc_sq(double w) const {
        const double x = 0.5 * w * dt;
        const double s = (std::abs(x) < 1e-8) ? 1.0 : std::sin(x) / x;
        return 0.25 * dt * dt * s * s;
    }

    Complex off_diagonal(double w, int dk) const {
        const double jw = eval_positive(j, w);
        const double theta = w * dt * dk;
        const double c = std::cos(theta), s = std::sin(theta);
        switch (stats.kind) {
            case BathStatistics::Kind::Boson: {
                const double x = 0.5 * stats.beta * w;
                const double coth = 1.0 / std::tanh(x);
                return (4.0 / kPi) * jw * sinc_sq(w) * Complex(coth * c, -s);
            }
            case BathStatistics::Kind::SpinEffective: {
                const double th = std::tanh(0.5 * stats.beta * w);
                return (4.0 / kPi) * jw * sinc_sq(w) * Complex(c, -th * s);
            }
            case BathStatistics::Kind::Fermion: {
                const double kp = 1.0 + std::tanh(0.5 * stats.beta * (w - stats.mu));
                const double km = 1.0 + std::tanh(0.5 * stats.beta * (-w - stats.mu));
                return (2.0 / kPi) * jw * sinc_sq(w) * Complex((kp + km) * c, -(kp - km) * s);
            }
        }
        return 0.0;
    }

    Complex diagonal(double w) const {
        const double jw = eval_positive(j, w);
        const double theta = w * dt;
        const double omc = 2.0 * sinc_sq(w) * w * w / (dt * dt) * (dt * dt / 2.0);  // (1-cos)/w^2 guard
        // (1 - cos theta)/w^2 written through sinc^2: 1-cos(w dt) = 2 sin^2(w dt/2)
        const double one_minus_cos_over_w2 = 2.0 * sinc_sq(w);
        (void)omc;
        const double sin_over_w2 = (std::abs(theta) < 1e-8)
                                       ? dt / std::max(w, 1e-300)
                                       : std::sin(theta) / (w * w);
        switch (stats.kind) {
            case BathStatistics::Kind::Boson: {
                const double coth = 1.0 / std::tanh(0.5 * stats.beta * w);
                return (1.0 / kPi) * jw * Complex(coth * one_minus_cos_over_w2, sin_over_w2);
            }
            case BathStatistics::Kind::SpinEffective: {
                const double th = std::tanh(0.5 * stats.beta * w);
                return (1.0 / kPi) * jw * Complex(one_minus_cos_over_w2, th * sin_over_w2);
            }
            case BathStatistics::Kind::Fermion: {
                const double kp = 1.0 + std::tanh(0.5 * stats.beta * (w - stats.mu));
                const double km = 1.0 + std::tanh(0.5 * stats.beta * (-w - stats.mu));
                return (0.5 / kPi) * jw *
                       Complex((kp + km) * one_minus_cos_over_w2, (kp - km) * sin_over_w2);
            }
        }
        return 0.0;
    }
};

std::vector<double> build_breakpoints(const WindowPlan& plan, double osc_scale) {
    // osc_scale: shortest oscillation wavelength present in the integrand.
    std::vector<double> pts;
    const double lo = std::max(plan.w_low, 0.0);
    pts.push_back(lo);
    for (double f : plan.features) pts.push_back(f);
    pts.push_back(plan.w_max);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<double> out;
    const double max_width = std::max(osc_scale, (plan.w_max - lo) / 20000.0);
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const double a = pts[i], b = pts[i + 1];
        const int n = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
        for (int k = 0; k < n; ++k) out.push_back(a + (b - a) * k / n);
    }
    out.push_back(pts.back());
    return out;
}

// Integral of f over [lo, hi] with a u^2 substitution on the leading panel so
// integrable w^(s-1) singularities (subohmic baths) become smooth.
QuadratureResult integrate_folded(const Integrand& f, const WindowPlan& plan, double osc_scale,
                                  const QuadratureOptions& opt) {
    std::vector<double> pts = build_breakpoints(plan, osc_scale);
    QuadratureResult total;
    double lo = pts.front();
    if (lo == 0.0) {
        // map w = u^2 on [0, w0]
        const double w0 = std::min(pts.back(), std::max(1e-4 * pts.back(), 1e-6));
        auto g = [&](double u) { return f(u * u) * (2.0 * u); };
        QuadratureResult head = integrate(g, {1e-30, std::sqrt(w0)}, opt);
        total.value += head.value;
        total.error += head.error;
        total.evals += head.evals;
        lo = w0;
    }
    std::vector<double> rest;
    rest.push_back(lo);
    for (double p : pts)
        if (p > lo) rest.push_back(p);
    if (rest.size() >= 2) {
        QuadratureResult tail = integrate(f, rest, opt);
        total.value += tail.value;
        total.error += tail.error;
        total.evals += tail.evals;
    }
    return total;
}

void accumulate_eta(const SpectralDensity& part, const BathStatistics& stats, double dt,
                    int dk_max, const QuadratureOptions& opt, EtaTable& table) {
    part.validate();
    if (part.kind == SpectralKind::Sum) {
        for (const auto& p : part.parts) accumulate_eta(p, stats, dt, dk_max, opt, table);
        return;
    }
    const WindowPlan plan = plan_window(part, stats);
    FoldedKernel kernel{part, stats, dt};

    {
        auto f = [&](double w) { return kernel.diagonal(w); };
        QuadratureResult r = integrate_folded(f, plan, 2.0 * kPi / dt, opt);
        table.eta[0] += r.value;
        table.err[0] += r.error;
    }
    for (int dk = 1; dk <= dk_max; ++dk) {
        auto f = [&](double w) { return kernel.off_diagonal(w, dk); };
        QuadratureResult r = integrate_folded(f, plan, 2.0 * kPi / (dt * dk), opt);
        table.eta[static_cast<size_t>(dk)] += r.value;
        table.err[static_cast<size_t>(dk)] += r.error;
    }
}

}  // namespace

double eval_spectral_density(const SpectralDensity& j, double omega) {
    j.validate();
    if (omega >= 0.0) return eval_positive(j, omega);
    const double v = eval_positive(j, -omega);
    return j.ext == Extension::Odd ? -v : v;
}

EtaTable eta_coefficients(const SpectralDensity& j, const BathStatistics& stats, double dt,
                          int dk_max, const QuadratureOptions& opt) {
    if (dt <= 0.0) throw ValidationError("bath: time step must be positive");
    if (dk_max < 0) throw ValidationError("bath: dk_max must be non-negative");
    if (stats.beta <= 0.0) throw ValidationError("bath: beta must be positive");
    EtaTable table;
    table.dt = dt;
    table.eta.assign(static_cast<size_t>(dk_max) + 1, Complex(0.0, 0.0));
    table.err.assign(static_cast<size_t>(dk_max) + 1, 0.0);
    accumulate_eta(j, stats, dt, dk_max, opt, table);
    return table;
}

double pair_delta(int pair, const RealVector& s_eigs, int d) {
    return s_eigs(pair_plus(pair, d)) - s_eigs(pair_minus(pair, d));
}

Complex pair_phi(const Complex& eta, int pair, const RealVector& s_eigs, int d) {
    return eta * s_eigs(pair_plus(pair, d)) - std::conj(eta) * s_eigs(pair_minus(pair, d));
}

InfluenceTable influence_table(const EtaTable& eta, const RealVector& s_eigs, int k_max) {
    if (k_max > eta.max_lag())
        throw ValidationError("bath: requested influence depth exceeds eta table");
    const int d = static_cast<int>(s_eigs.size());
    const int d2 = d * d;
    InfluenceTable table;
    table.dt = eta.dt;
    table.d = d;
    table.s_eigs = s_eigs;
    table.i0 = Vector(d2);
    for (int x = 0; x < d2; ++x)
        table.i0(x) = std::exp(-pair_delta(x, s_eigs, d) * pair_phi(eta.at(0), x, s_eigs, d));
    table.ik.reserve(static_cast<size_t>(k_max));
    table.ik_tilde.reserve(static_cast<size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        Matrix m(d2, d2);
        for (int b = 0; b < d2; ++b) {
            const double delta = pair_delta(b, s_eigs, d);
            for (int a = 0; a < d2; ++a)
                m(b, a) = std::exp(-delta * pair_phi(eta.at(k), a, s_eigs, d));
        }
        table.ik.push_back(m);
        table.ik_tilde.push_back(m - Matrix::Ones(d2, d2));
    }
    return table;
}

InfluenceTable multiply_tables(const InfluenceTable& a, const InfluenceTable& b) {
    if (a.d != b.d || a.dt != b.dt || a.k_max() != b.k_max())
        throw ValidationError("bath: influence tables must share step, dimension and depth");
    InfluenceTable out = a;
    out.i0 = a.i0.cwiseProduct(b.i0);
    for (int k = 1; k <= a.k_max(); ++k) {
        out.ik[static_cast<size_t>(k - 1)] =
            a.influence(k).cwiseProduct(b.influence(k));
        out.ik_tilde[static_cast<size_t>(k - 1)] =
            out.ik[static_cast<size_t>(k - 1)] - Matrix::Ones(a.d * a.d, a.d * a.d);
    }
    return out;
}

}  // namespace memkernel
