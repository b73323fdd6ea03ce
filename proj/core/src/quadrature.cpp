#include "memkernel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace memkernel {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;
    Complex value;
    double error;
};

Panel evaluate_panel(const Integrand& f, double a, double b, long& evals) {
    const double center = 0.5 * (a + b);
    const double halflen = 0.5 * (b - a);
    Complex kronrod = kWgk[7] * f(center);
    Complex gauss = kWg[3] * f(center);
    ++evals;
    for (int i = 0; i < 7; ++i) {
        const double dx = halflen * kXgk[i];
        const Complex pair_sum = f(center - dx) + f(center + dx);
        evals += 2;
        kronrod += kWgk[i] * pair_sum;
        if (i % 2 == 1) gauss += kWg[i / 2] * pair_sum;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = kronrod * halflen;
    p.error = std::abs(kronrod - gauss) * halflen;
    return p;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, const std::vector<double>& breakpoints,
                           const QuadratureOptions& opt) {
    if (breakpoints.size() < 2)
        throw ValidationError("quadrature: need at least two breakpoints");

    auto worse = [](const Panel& lhs, const Panel& rhs) { return lhs.error < rhs.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);

    QuadratureResult result;
    Complex total = 0.0;
    double total_err = 0.0;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw ValidationError("quadrature: breakpoints must be strictly increasing");
        Panel p = evaluate_panel(f, breakpoints[i], breakpoints[i + 1], result.evals);
        total += p.value;
        total_err += p.error;
        heap.push(p);
    }

    int panels = static_cast<int>(breakpoints.size()) - 1;
    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (panels >= opt.max_panels || heap.empty()) {
            std::ostringstream msg;
            msg << "quadrature: no convergence after " << panels
                << " panels (error estimate " << total_err << ", value " << std::abs(total)
                << ", abs_tol " << opt.abs_tol << ", rel_tol " << opt.rel_tol << ")";
            throw NumericalError(msg.str());
        }
        Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Panel narrower than machine resolution; accept its estimate as is.
            total += worst.value;
            continue;
        }
        Panel left = evaluate_panel(f, worst.a, mid, result.evals);
        Panel right = evaluate_panel(f, mid, worst.b, result.evals);
        total += left.value + right.value;
        total_err += left.error + right.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }

    result.value = total;
    result.error = total_err;
    return result;
}

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& opt) {
    return integrate(f, std::vector<double>{a, b}, opt);
}

}  // namespace memkernel
