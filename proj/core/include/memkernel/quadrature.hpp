// quadrature.hpp — Globally adaptive Gauss–Kronrod panels for bath integrals

#pragma once

#include <functional>
#include <vector>

#include "memkernel/types.hpp"

namespace memkernel {

struct QuadratureOptions {
    double abs_tol = 1e-11;
    double rel_tol = 1e-9;
    int max_panels = 400000;
};

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double error = 0.0;
    long evals = 0;
};

using Integrand = std::function<Complex(double)>;

// Integrates f over the union of [breakpoints[i], breakpoints[i+1]] panels,
// refining the worst panel until the summed error estimate meets tolerance.
// Throws NumericalError with diagnostics when the panel budget is exhausted.
QuadratureResult integrate(const Integrand& f, const std::vector<double>& breakpoints,
                           const QuadratureOptions& opt = {});

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& opt = {});

}  // namespace memkernel
