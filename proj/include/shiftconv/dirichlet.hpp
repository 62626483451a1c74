#pragma once

#include "shiftconv/forms.hpp"
#include "shiftconv/quadrature.hpp"
#include "shiftconv/relations.hpp"
#include "shiftconv/shifted.hpp"
#include "shiftconv/specfun.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace shiftconv {

enum class TailKind {
    rigorous,   // Re(s) > k + 1, from the stored growth constant
    heuristic,  // k < Re(s) <= k + 1, Deligne-type exponent estimated from data
    unbounded,  // plain truncated sum, no tail claim
};

struct SeriesEval {
    cplx value;
    double tail_bound = 0.0;  // +inf when unbounded
    TailKind kind = TailKind::unbounded;
    std::size_t trunc = 0;
};

enum class TailMode { require_bound, allow_unbounded };

// D(s, r) = sum_{n <= N} c_n (n + r/2)^{-s} for c_n = a(n) a(n+r).
// With TailMode::require_bound, Re(s) <= k throws domain_error.
SeriesEval d_series(const CuspForm& f, unsigned r, cplx s, std::size_t trunc,
                    TailMode mode = TailMode::require_bound);
// d/ds of the truncated sum, termwise: -sum c_n log(n + r/2) (n + r/2)^{-s}.
cplx d_series_derivative(const CuspForm& f, unsigned r, cplx s, std::size_t trunc);
// A finitely supported sequence as a Dirichlet polynomial; entire in s.
cplx dirichlet_polynomial(const SupportedSeq& c, cplx s);

struct UnfoldingJob {
    const CuspForm* form = nullptr;
    unsigned r = 1;
    cplx s;
    std::size_t trunc = 0;
    double quad_tol = 1e-10;
};

struct UnfoldingResult {
    cplx lhs;  // int_0^inf y^{s+k-2} A_r(y) dy by quadrature
    cplx rhs;  // Gamma(s+k-1) (4 pi)^{-(s+k-1)} D_N(s+k-1, r)
    double rel_err = 0.0;
    double quad_error = 0.0;
    double y_max = 0.0;
    std::vector<Interval> partition;
};

// A_r(y) = sum_{n<=N} a(n) a(n+r) exp(-2 pi (2n + r) y), the x-average of
// e(rx) |f(x+iy)|^2. The y-integral is split at 1 and cut at a Y where the
// exponential tail bound is below quad_tol relative to the integral.
UnfoldingResult unfolding_check(const UnfoldingJob& job);

struct Unfolding2dResult {
    cplx lhs_orthogonality;
    cplx lhs_grid;
    double rel_err = 0.0;
};

// Same y-integral, but the x-integral of e(rx) |f(x+iy)|^2 over [0,1] is taken
// by the trapezoid rule on x_nodes points (exact for band-limited truncations
// once x_nodes > 2(N + r)). Evaluated on the partition chosen by the
// orthogonality run so that only the x-step differs.
Unfolding2dResult unfolding_check_2d(const UnfoldingJob& job, std::size_t x_nodes);

// int_0^inf y^{a-1} exp(-lambda y) dy by quadrature, for comparison with
// Gamma(a) / lambda^a.
cplx gamma_integral_numeric(cplx a, double lambda, double rel_tol);

// form_id,r,s_re,s_im,N,lhs_re,lhs_im,rhs_re,rhs_im,rel_err
void write_unfolding_csv_header(std::ostream& out);
void write_unfolding_csv_row(std::ostream& out, const std::string& form_id, unsigned r, cplx s,
                             std::size_t trunc, const UnfoldingResult& res);

}  // namespace shiftconv
