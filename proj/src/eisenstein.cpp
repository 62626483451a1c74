#include "shiftconv/eisenstein.hpp"

#include "shiftconv/errors.hpp"
#include "shiftconv/forms.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace shiftconv {

namespace {

// B_{2p} / (2p)! for p = 1..30
const std::array<double, 31>& bernoulli_factorial_table() {
    static const std::array<double, 31> table = [] {
        std::array<double, 31> t{};
        mpz_class fact = 1;
        for (unsigned p = 1; p <= 30; ++p) {
            fact *= (2 * p - 1) * (2 * p);
            const mpq_class ratio = bernoulli(2 * p) / mpq_class(fact);
            t[p] = ratio.get_d();
        }
        return t;
    }();
    return table;
}

}  // namespace

cplx divisor_sigma(unsigned long m, cplx s) {
    if (m == 0) throw domain_error("divisor_sigma needs m >= 1");
    cplx total = 0.0;
    for (unsigned long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        total += std::exp(s * std::log(static_cast<double>(d)));
        if (d != m / d) total += std::exp(s * std::log(static_cast<double>(m / d)));
    }
    return total;
}

mpq_class divisor_sigma_exact(unsigned long m, long e) {
    if (e >= 0) return mpq_class(divisor_power_sum(m, static_cast<unsigned>(e)));
    // sigma_{-e}(m) = sigma_e(m) / m^e
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), m, static_cast<unsigned long>(-e));
    mpq_class out(divisor_power_sum(m, static_cast<unsigned>(-e)), p);
    out.canonicalize();
    return out;
}

cplx hurwitz_zeta(cplx s, double a) {
    if (!(a > 0.0)) throw domain_error("hurwitz_zeta needs a > 0");
    if (std::abs(s - 1.0) == 0.0) throw pole_error("zeta has a pole at s = 1");
    // Direct terms until the Euler-Maclaurin point sits well beyond |s|.
    const double start = std::max(20.0, std::abs(s) + 20.0);
    cplx sum = 0.0;
    double x = a;
    while (x < start) {
        sum += std::exp(-s * std::log(x));
        x += 1.0;
    }
    const double lx = std::log(x);
    const cplx x_pow = std::exp(-s * lx);  // x^{-s}
    sum += x * x_pow / (s - 1.0) + 0.5 * x_pow;
    const auto& bf = bernoulli_factorial_table();
    // term_p = B_2p/(2p)! s (s+1) ... (s+2p-2) x^{-s-2p+1}
    cplx rising = s;          // s (s+1) ... (s + 2p - 2)
    cplx power = x_pow / x;   // x^{-s-1}
    for (unsigned p = 1; p <= 30; ++p) {
        const cplx term = bf[p] * rising * power;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        rising *= (s + static_cast<double>(2 * p - 1)) * (s + static_cast<double>(2 * p));
        power /= x * x;
    }
    return sum;
}

cplx riemann_zeta(cplx s) {
    if (s == cplx(1.0, 0.0)) throw pole_error("zeta has a pole at s = 1");
    if (s.real() >= 0.5 || std::abs(s) < 0.25) return hurwitz_zeta(s, 1.0);
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
    return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi)) * std::sin(0.5 * pi * s) *
           gamma_complex(1.0 - s) * hurwitz_zeta(1.0 - s, 1.0);
}

double bessel_k_majorant(double re_nu, double x) {
    return std::sqrt(pi / (2.0 * x)) * std::exp(-x + re_nu * re_nu / (2.0 * x));
}

cplx bessel_k(cplx nu, double x) {
    if (!(x > 0.0)) throw domain_error("bessel_k needs x > 0");
    const double mu = std::abs(nu.real());
    // log-magnitude of the integrand bound: -x cosh t + mu t
    auto log_mag = [x, mu](double t) { return -x * std::cosh(t) + mu * t; };
    const double t_peak = mu > 0.0 ? std::asinh(mu / x) : 0.0;
    const double peak = log_mag(t_peak);
    double t_end = t_peak + 1.0;
    while (log_mag(t_end) > peak - 45.0) t_end += 0.5;

    auto f = [x, nu](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
    // Trapezoid on [0, t_end] with an even integrand: endpoint weight 1/2 at 0,
    // the far end is negligible.
    std::size_t intervals = 32;
    double h = t_end / static_cast<double>(intervals);
    cplx sum = 0.5 * f(0.0);
    for (std::size_t j = 1; j <= intervals; ++j) sum += f(static_cast<double>(j) * h);
    cplx estimate = h * sum;
    for (int level = 0; level < 16; ++level) {
        // add midpoints
        cplx mids = 0.0;
        for (std::size_t j = 0; j < intervals; ++j) mids += f((static_cast<double>(j) + 0.5) * h);
        sum += mids;
        intervals *= 2;
        h *= 0.5;
        const cplx refined = h * sum;
        const double change = std::abs(refined - estimate);
        estimate = refined;
        if (level >= 2 && change <= 1e-15 * std::abs(estimate)) return estimate;
        if (level >= 2 && change <= 1e-17 * std::exp(peak) * t_end) return estimate;
    }
    throw convergence_error("bessel_k trapezoid did not settle");
}

cplx eisenstein_constant_coefficient(cplx s) {
    return std::sqrt(pi) * gamma_complex(s - 0.5) * riemann_zeta(2.0 * s - 1.0) /
           (gamma_complex(s) * riemann_zeta(2.0 * s));
}

cplx eisenstein_fourier_coefficient(unsigned long m, cplx s) {
    const double md = static_cast<double>(m);
    return std::exp(s * std::log(pi) + (s - 0.5) * std::log(md)) * divisor_sigma(m, 1.0 - 2.0 * s) /
           (gamma_complex(s) * riemann_zeta(2.0 * s));
}

namespace {

// Bound on sum_{|m| > M} |phi(m; s) 2 sqrt(y) K_{s-1/2}(2 pi |m| y) e(mx)|.
double fourier_tail(cplx s, double y, std::size_t modes) {
    const double sigma = s.real();
    const double prefactor =
        std::exp(sigma * std::log(pi)) / std::abs(gamma_complex(s) * riemann_zeta(2.0 * s));
    const double mu = std::abs(sigma - 0.5);
    double total = 0.0;
    double previous = 0.0;
    for (std::size_t m = modes + 1; m < modes + 100000; ++m) {
        const double md = static_cast<double>(m);
        // |sigma_{1-2s}(m)| <= d(m) max(1, m^{1-2 sigma}) <= 2 sqrt(m) max(1, m^{1-2 sigma})
        const double sigma_bound = 2.0 * std::sqrt(md) * std::max(1.0, std::pow(md, 1.0 - 2.0 * sigma));
        const double term = 2.0 * prefactor * std::pow(md, sigma - 0.5) * sigma_bound * 2.0 *
                            std::sqrt(y) * bessel_k_majorant(mu, 2.0 * pi * md * y);
        total += term;
        if (previous > 0.0) {
            const double ratio = term / previous;
            if (ratio < 0.9 && term < 1e-3 * total) {
                total += term * ratio / (1.0 - ratio);
                return total;
            }
        }
        if (term == 0.0) return total;
        previous = term;
    }
    return INFINITY;
}

void check_upper_half_plane(cplx z) {
    if (!(z.imag() > 0.0)) throw domain_error("z must lie in the upper half-plane");
}

FourierEval fourier_sum(cplx z, cplx s, std::size_t modes, double tail) {
    const double x = z.real();
    const double y = z.imag();
    FourierEval out;
    out.modes = modes;
    out.tail_bound = tail;
    cplx value = std::exp(s * std::log(y)) +
                 eisenstein_constant_coefficient(s) * std::exp((1.0 - s) * std::log(y));
    const cplx nu = s - 0.5;
    // Smallest modes last so the sum is not swamped early.
    for (std::size_t m = modes; m >= 1; --m) {
        const double md = static_cast<double>(m);
        value += eisenstein_fourier_coefficient(m, s) * 2.0 * std::sqrt(y) *
                 bessel_k(nu, 2.0 * pi * md * y) * (2.0 * std::cos(2.0 * pi * md * x));
    }
    out.value = value;
    return out;
}

}  // namespace

FourierEval eisenstein_fourier(cplx z, cplx s, std::size_t modes) {
    check_upper_half_plane(z);
    if (modes < 1) throw domain_error("eisenstein_fourier needs M >= 1");
    const double tail = fourier_tail(s, z.imag(), modes);
    if (!(tail <= fourier_tail_target)) {
        throw domain_error("Fourier tail beyond M = " + std::to_string(modes) +
                           " cannot be certified below 1e-12 at y = " + std::to_string(z.imag()));
    }
    return fourier_sum(z, s, modes, tail);
}

FourierEval eisenstein_fourier(cplx z, cplx s) {
    check_upper_half_plane(z);
    for (std::size_t m = 1; m <= 20000; m = m < 8 ? m + 1 : m + m / 4) {
        const double tail = fourier_tail(s, z.imag(), m);
        if (tail <= 0.1 * fourier_tail_target) return fourier_sum(z, s, m, tail);
    }
    throw domain_error("y too small to certify the Fourier tail");
}

namespace {

DirectEval direct_impl(cplx z, cplx s, double bound, bool parallel) {
    check_upper_half_plane(z);
    if (!(s.real() > 1.0)) throw domain_error("direct coset sum needs Re(s) > 1");
    if (!(bound >= 1.0)) throw domain_error("direct coset sum needs B >= 1");
    const long cmax = static_cast<long>(std::floor(bound));
    const double b2 = bound * bound;
    std::vector<cplx> rows(static_cast<std::size_t>(cmax) + 1);
    std::vector<std::size_t> counts(static_cast<std::size_t>(cmax) + 1);
    rows[0] = 1.0;  // (c, d) = (0, 1)
    counts[0] = 1;
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (long c = 1; c <= cmax; ++c) {
        const double cd = static_cast<double>(c);
        const long dmax = static_cast<long>(std::floor(std::sqrt(b2 - cd * cd)));
        cplx acc = 0.0;
        std::size_t count = 0;
        for (long d = -dmax; d <= dmax; ++d) {
            if (std::gcd(c, d) != 1) continue;
            const double re = cd * z.real() + static_cast<double>(d);
            const double im = cd * z.imag();
            acc += std::exp(-s * std::log(re * re + im * im));
            ++count;
        }
        rows[static_cast<std::size_t>(c)] = acc;
        counts[static_cast<std::size_t>(c)] = count;
    }
    DirectEval out;
    cplx total = 0.0;
    for (long c = cmax; c >= 0; --c) {
        total += rows[static_cast<std::size_t>(c)];
        out.pairs += counts[static_cast<std::size_t>(c)];
    }
    out.value = std::exp(s * std::log(z.imag())) * total;
    // (3 / pi^2) y^sigma B^{2 - 2 sigma} / (2 sigma - 2) int_0^{2 pi} |z cos t + sin t|^{-2 sigma} dt
    const double sigma = s.real();
    double angular = 0.0;
    constexpr int steps = 512;
    for (int j = 0; j < steps; ++j) {
        const double t = 2.0 * pi * j / steps;
        const double re = z.real() * std::cos(t) + std::sin(t);
        const double im = z.imag() * std::cos(t);
        angular += std::pow(re * re + im * im, -sigma);
    }
    angular *= 2.0 * pi / steps;
    out.tail_estimate = 3.0 / (pi * pi) * std::pow(z.imag(), sigma) *
                        std::pow(bound, 2.0 - 2.0 * sigma) / (2.0 * sigma - 2.0) * angular;
    return out;
}

// sum_{j >= 0} ((a + j)^2 + Y^2)^{-s} for a >= 10 Y via the binomial series in
// (Y / (a + j))^2 and Hurwitz zeta.
cplx shifted_square_tail(cplx s, double a, double big_y) {
    cplx sum = 0.0;
    cplx binom = 1.0;  // binom(-s, i)
    double y_pow = 1.0;
    int small = 0;
    for (int i = 0; i < 80; ++i) {
        if (i > 0) {
            binom *= (-s - static_cast<double>(i - 1)) / static_cast<double>(i);
            y_pow *= big_y * big_y;
        }
        const cplx term = binom * y_pow * hurwitz_zeta(2.0 * s + 2.0 * i, a);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            if (++small == 2) return sum;
        } else {
            small = 0;
        }
    }
    throw convergence_error("binomial tail series did not converge");
}

// R(c) = sum_{d in Z} ((cx + d)^2 + (cy)^2)^{-s}
cplx lattice_row(cplx z, cplx s, long c) {
    const double u0 = static_cast<double>(c) * z.real();
    const double big_y = static_cast<double>(c) * z.imag();
    const double cut = std::max(10.0 * big_y, 20.0);
    const long d_lo = static_cast<long>(std::ceil(-cut - u0));
    const long d_hi = static_cast<long>(std::floor(cut - u0));
    cplx sum = 0.0;
    for (long d = d_lo; d <= d_hi; ++d) {
        const double u = u0 + static_cast<double>(d);
        sum += std::exp(-s * std::log(u * u + big_y * big_y));
    }
    const double a_right = u0 + static_cast<double>(d_hi + 1);
    const double a_left = -(u0 + static_cast<double>(d_lo - 1));
    sum += shifted_square_tail(s, a_right, big_y);
    sum += shifted_square_tail(s, a_left, big_y);
    return sum;
}

}  // namespace

DirectEval eisenstein_direct(cplx z, cplx s, double bound) { return direct_impl(z, s, bound, true); }

DirectEval eisenstein_direct_serial(cplx z, cplx s, double bound) {
    return direct_impl(z, s, bound, false);
}

cplx eisenstein_direct_accelerated(cplx z, cplx s) {
    check_upper_half_plane(z);
    if (!(s.real() > 1.0)) throw domain_error("direct coset sum needs Re(s) > 1");
    const double y = z.imag();
    const long rows = static_cast<long>(std::ceil(45.0 / (2.0 * pi * y)));
    std::vector<cplx> row_values(static_cast<std::size_t>(rows));
#pragma omp parallel for schedule(dynamic, 1)
    for (long c = 1; c <= rows; ++c) row_values[static_cast<std::size_t>(c - 1)] = lattice_row(z, s, c);
    cplx lattice = 0.0;
    for (auto it = row_values.rbegin(); it != row_values.rend(); ++it) lattice += *it;
    // rows c > C0: sqrt(pi) Gamma(s - 1/2) / Gamma(s) (c y)^{1 - 2s}
    lattice += std::sqrt(pi) * gamma_complex(s - 0.5) / gamma_complex(s) *
               std::exp((1.0 - 2.0 * s) * std::log(y)) *
               hurwitz_zeta(2.0 * s - 1.0, static_cast<double>(rows + 1));
    return std::exp(s * std::log(y)) * (1.0 + lattice / riemann_zeta(2.0 * s));
}

cplx completed_eisenstein(cplx z, cplx s) {
    const FourierEval e = eisenstein_fourier(z, s);
    return std::exp(-s * std::log(pi)) * gamma_complex(s) * riemann_zeta(2.0 * s) * e.value;
}

double functional_eq_check(cplx z, cplx s) {
    for (double p : {0.0, 0.5, 1.0}) {
        if (std::abs(s - p) < 1e-6) {
            throw pole_error("functional equation check refuses s within 1e-6 of " + std::to_string(p));
        }
    }
    const cplx lhs = completed_eisenstein(z, s);
    const cplx rhs = completed_eisenstein(z, 1.0 - s);
    return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300);
}

}  // namespace shiftconv
