#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace shiftconv {

struct Interval {
    double lo;
    double hi;
};

struct QuadResult {
    std::complex<double> value;
    double error_estimate = 0.0;
    // Final subintervals, sorted by lo; reusable with integrate_on().
    std::vector<Interval> partition;
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

// Adaptive 15-point Gauss-Kronrod on [lo, hi]: bisects the interval with the
// largest |K15 - G7| until the summed estimate is below
// max(abs_tol, rel_tol * |value|). Throws convergence_error after
// max_intervals subintervals.
QuadResult integrate_adaptive(const ComplexIntegrand& f, double lo, double hi, double rel_tol,
                              double abs_tol = 0.0, std::size_t max_intervals = 4000);

// K15 on a fixed partition. Node evaluations run in parallel; the sum is
// taken in partition order so the result does not depend on thread count.
std::complex<double> integrate_on(const ComplexIntegrand& f, const std::vector<Interval>& partition);

}  // namespace shiftconv
