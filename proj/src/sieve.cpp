#include "shiftconv/sieve.hpp"

#include "shiftconv/errors.hpp"
#include "shiftconv/specfun.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

namespace shiftconv {

namespace {

using hp = boost::multiprecision::mpfr_float_50;

struct HpComplex {
    hp re = 0;
    hp im = 0;
};

HpComplex operator+(const HpComplex& a, const HpComplex& b) { return {a.re + b.re, a.im + b.im}; }
HpComplex operator-(const HpComplex& a, const HpComplex& b) { return {a.re - b.re, a.im - b.im}; }
HpComplex operator*(const HpComplex& a, const HpComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
hp magnitude(const HpComplex& a) { return sqrt(a.re * a.re + a.im * a.im); }

hp to_hp(const mpq_class& q) {
    hp x;
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

// e^{2 pi i (x + i y)}
HpComplex nome(const hp& x, const hp& y) {
    const hp tp = 2 * boost::math::constants::pi<hp>();
    const hp mod = exp(-tp * y);
    return {mod * cos(tp * x), mod * sin(tp * x)};
}

hp unit_angle(long num, unsigned long den) {
    return 2 * boost::math::constants::pi<hp>() * hp(num) / hp(den);
}

std::vector<hp> coefficients_hp(const CuspForm& f, std::size_t trunc) {
    std::vector<hp> a(trunc + 1);
    hp root = f.is_rational() ? hp(0) : sqrt(to_hp(mpq_class(f.radicand())));
    for (std::size_t n = 1; n <= trunc; ++n) {
        a[n] = to_hp(f.series()[n]);
        if (!f.is_rational()) a[n] += to_hp(f.surd()[n]) * root;
    }
    return a;
}

HpComplex horner(const std::vector<hp>& a, const HpComplex& q) {
    HpComplex acc;
    for (std::size_t n = a.size() - 1; n >= 1; --n) {
        acc.re += a[n];
        acc = acc * q;
    }
    return acc;
}

double sample_error(const std::vector<hp>& a, const std::vector<hp>& g, unsigned long n0,
                    unsigned long modulus, std::complex<double> z, const hp& norm) {
    const hp x = z.real();
    const hp y = z.imag();
    const HpComplex lhs = horner(g, nome(x, y));
    HpComplex rhs;
    for (unsigned long s = 0; s < modulus; ++s) {
        const hp shifted_x = x + hp(s) / hp(modulus);
        const hp angle = -unit_angle(static_cast<long>((n0 * s) % modulus), modulus);
        const HpComplex phase{cos(angle), sin(angle)};
        rhs = rhs + phase * horner(a, nome(shifted_x, y));
    }
    rhs.re *= norm;
    rhs.im *= norm;
    const hp scale = max(magnitude(lhs), magnitude(rhs));
    if (scale == 0) return 0.0;
    const hp err = magnitude(lhs - rhs) / scale;
    return err.convert_to<double>();
}

void check_samples(const CuspForm& f, const std::vector<std::complex<double>>& samples,
                   std::size_t trunc) {
    if (trunc > f.trunc_order()) {
        throw truncation_error("twist check needs the form to order " + std::to_string(trunc));
    }
    const double c = f.growth_const().get_d();
    const double half_k = 0.5 * f.weight();
    for (const auto& z : samples) {
        const double y = z.imag();
        if (y < 0.05) {
            throw domain_error("sample Im z = " + std::to_string(y) +
                               " too low to certify the truncation tail (need >= 0.05)");
        }
        // tail sum_{n > N} C n^{k/2} e^{-2 pi n y} by a geometric majorant
        const double n1 = static_cast<double>(trunc + 1);
        const double ratio = std::pow((n1 + 1.0) / n1, half_k) * std::exp(-2.0 * pi * y);
        const double first = c * std::exp(half_k * std::log(n1) - 2.0 * pi * n1 * y);
        if (ratio >= 1.0 || first / (1.0 - ratio) > 1e-12) {
            throw domain_error("truncation N = " + std::to_string(trunc) +
                               " leaves a tail above 1e-12 at Im z = " + std::to_string(y));
        }
    }
}

TwistReport twist_impl(const CuspForm& f, unsigned long n0, unsigned long modulus,
                       const std::vector<std::complex<double>>& samples, std::size_t trunc,
                       TwistNormalization norm_kind, bool parallel) {
    if (modulus == 0 || n0 == 0) throw domain_error("twist check needs n0 >= 1 and modulus >= 1");
    check_samples(f, samples, trunc);
    const CuspForm g_form = ap_extract(f.truncated(trunc), n0, modulus);
    const std::vector<hp> a = coefficients_hp(f, trunc);
    const std::vector<hp> g = coefficients_hp(g_form, trunc);
    const hp norm = norm_kind == TwistNormalization::full_residue_system
                        ? hp(1) / hp(modulus)
                        : hp(1) / hp(euler_phi(modulus));
    TwistReport report;
    report.per_sample.resize(samples.size());
    const auto count = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long i = 0; i < count; ++i) {
        report.per_sample[i] = sample_error(a, g, n0, modulus, samples[i], norm);
    }
    for (double e : report.per_sample) report.max_rel_err = std::max(report.max_rel_err, e);
    return report;
}

}  // namespace

QSeries ap_extract(const QSeries& f, unsigned long n0, unsigned long modulus) {
    if (modulus == 0) throw domain_error("modulus must be >= 1");
    if (n0 == 0) throw domain_error("n0 must be >= 1");
    std::vector<mpq_class> c(f.trunc_order() + 1);
    for (std::size_t n = 1; n <= f.trunc_order(); ++n) {
        if (n % modulus == n0 % modulus) c[n] = f[n];
    }
    return QSeries(std::move(c));
}

CuspForm ap_extract(const CuspForm& f, unsigned long n0, unsigned long modulus) {
    return CuspForm(f.weight(), f.level() * static_cast<int>(modulus * modulus),
                    ap_extract(f.series(), n0, modulus), ap_extract(f.surd(), n0, modulus),
                    f.radicand(),
                    f.id() + "_ap" + std::to_string(n0) + "mod" + std::to_string(modulus));
}

long twist_orthogonality(long n, long n0, unsigned long modulus) {
    if (modulus == 0) throw domain_error("modulus must be >= 1");
    const long m = static_cast<long>(modulus);
    // geometric series of the M-th root of unity w^{n - n0}
    return ((n - n0) % m == 0) ? m : 0;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

TwistReport twist_average_check(const CuspForm& f, unsigned long n0, unsigned long modulus,
                                const std::vector<std::complex<double>>& samples, std::size_t trunc,
                                TwistNormalization norm) {
    return twist_impl(f, n0, modulus, samples, trunc, norm, true);
}

TwistReport twist_average_check_serial(const CuspForm& f, unsigned long n0, unsigned long modulus,
                                       const std::vector<std::complex<double>>& samples,
                                       std::size_t trunc, TwistNormalization norm) {
    return twist_impl(f, n0, modulus, samples, trunc, norm, false);
}

}  // namespace shiftconv
