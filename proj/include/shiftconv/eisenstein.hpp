#pragma once

#include "shiftconv/specfun.hpp"

#include <gmpxx.h>

#include <cstddef>

namespace shiftconv {

// sum_{d | m} d^s.
cplx divisor_sigma(unsigned long m, cplx s);
// Exact for integer exponents (negative ones give a rational).
mpq_class divisor_sigma_exact(unsigned long m, long e);

// Hurwitz zeta sum_{j>=0} (a + j)^{-s} by Euler-Maclaurin; a > 0, s != 1.
cplx hurwitz_zeta(cplx s, double a);
// Riemann zeta; Euler-Maclaurin for Re(s) >= 1/2 (and near 0), the
// functional equation elsewhere. pole_error at s = 1.
cplx riemann_zeta(cplx s);

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt by the trapezoid rule with
// step halving, cut where the integrand has dropped by e^-45 from its peak.
cplx bessel_k(cplx nu, double x);
// Rigorous majorant of |K_nu(x)|: sqrt(pi / (2x)) exp(-x + Re(nu)^2 / (2x)).
double bessel_k_majorant(double re_nu, double x);

// Level-one coefficient functions of E(z, s) = sum_{Gamma_inf \ Gamma} Im(gz)^s:
//   phi(s)    = sqrt(pi) Gamma(s - 1/2) zeta(2s - 1) / (Gamma(s) zeta(2s))
//   phi(m; s) = pi^s m^{s - 1/2} sigma_{1-2s}(m) / (Gamma(s) zeta(2s))
cplx eisenstein_constant_coefficient(cplx s);
cplx eisenstein_fourier_coefficient(unsigned long m, cplx s);

struct EisensteinParams {
    cplx s;
    std::size_t fourier_modes = 0;  // M
    double direct_bound = 0.0;      // B, max sqrt(c^2 + d^2)
};

struct FourierEval {
    cplx value;
    double tail_bound = 0.0;  // certified bound on the omitted modes |m| > M
    std::size_t modes = 0;
};

inline constexpr double fourier_tail_target = 1e-12;

// Fourier expansion with M modes; throws domain_error if the tail certificate
// exceeds 1e-12 (y too small for M).
FourierEval eisenstein_fourier(cplx z, cplx s, std::size_t modes);
// Smallest M whose certificate is below 1e-13.
FourierEval eisenstein_fourier(cplx z, cplx s);

struct DirectEval {
    cplx value;
    double tail_estimate = 0.0;  // heuristic, ~ B^{2 - 2 Re s}
    std::size_t pairs = 0;
};

// Coset sum y^s sum |cz + d|^{-2s} over coprime (c, d) up to sign with
// c^2 + d^2 <= B^2; rows c run in parallel, merged in order.
DirectEval eisenstein_direct(cplx z, cplx s, double bound);
DirectEval eisenstein_direct_serial(cplx z, cplx s, double bound);

// The same coset sum with every infinite piece summed analytically: rows
// R(c) = sum_d |cz + d|^{-2s} directly near the centre with Hurwitz-zeta
// tails in d, rows with 2 pi c y >= 45 replaced by their integral, coprimality
// restored by the factor 1/zeta(2s). Independent of the K-Bessel and divisor
// sum machinery. Needs Re(s) > 1.
cplx eisenstein_direct_accelerated(cplx z, cplx s);

// E*(z, s) = pi^{-s} Gamma(s) zeta(2s) E(z, s), from the Fourier expansion.
cplx completed_eisenstein(cplx z, cplx s);

// |E*(z,s) - E*(z,1-s)| / max(|E*(z,s)|, 1e-300). Refuses s within 1e-6 of
// 0, 1/2, 1.
double functional_eq_check(cplx z, cplx s);

}  // namespace shiftconv
