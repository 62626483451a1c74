#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

namespace shiftconv {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Gamma(s) for complex s via a Lanczos sum (g = 607/128, 15 terms) evaluated
// in log form, with reflection for Re(s) < 1/2. Throws pole_error at
// non-positive integers.
cplx gamma_complex(cplx s);
cplx log_gamma_complex(cplx s);  // principal branch only for Re(s) >= 1/2

// Rising factorial a (a+1) ... (a+w-1) by direct product.
cplx pochhammer(cplx a, unsigned w);
mpq_class pochhammer(const mpq_class& a, unsigned w);

// Gauss 2F1(a, b; c; z) by its defining series. Terminating series (a or b a
// non-positive integer) are summed to the last non-zero term for any z;
// otherwise |z| < 1 is required. Stops once three consecutive terms fall
// below 1e-16 of the partial sum.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z);
// Exact terminating 2F1; a or b must be a non-positive integer.
mpq_class hyp2f1_exact(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                       const mpq_class& z);

// P_m(z) = 2F1(-m, -m + 1/2; 3/2 - k - 2m; z) = sum_w lambda_w z^w,
// together with alpha_nu = r^{2 nu} lambda_nu.
struct HypergeomPoly {
    unsigned m = 0;
    int k = 0;
    unsigned r = 1;
    std::vector<mpq_class> lambda;
    std::vector<mpq_class> alpha;

    mpq_class evaluate(const mpq_class& z) const;
    // (2n + r)^{2m} P_m((r / (2n + r))^2) = sum_w alpha_w (2n + r)^{2m - 2w}.
    mpq_class evaluate_at_node(const mpz_class& node) const;
};

HypergeomPoly pm_polynomial(unsigned m, int k, unsigned r);

// Distance below which delta_r refuses to evaluate near a Gamma-factor pole.
inline constexpr double pole_refusal_radius = 1e-6;

// The correction term
//   1 - F((k+s-1)/2, (k+s)/2; s+1/2; z0)
//     - Gamma(k-s) Gamma(s-1/2) / (Gamma(k+s-1) Gamma(1/2-s)) ((4n+2r)/r)^{2s-1}
//       [F((k-s)/2, (k-s+1)/2; 3/2-s; z0) - 1],    z0 = (r / (2n+r))^2,
// for -1 < Re(s) < 2 away from the Gamma-factor poles.
cplx delta_r(cplx s, unsigned long n, int k, unsigned r);

}  // namespace shiftconv
