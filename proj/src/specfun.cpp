#include "shiftconv/specfun.hpp"

#include "shiftconv/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace shiftconv {

namespace {

constexpr double lanczos_g = 607.0 / 128.0;
constexpr std::array<double, 15> lanczos_coeffs = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

const double half_log_two_pi = 0.5 * std::log(2.0 * pi);

bool is_nonpositive_integer(cplx s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// Lanczos in log form for Re(s) >= 1/2.
cplx log_gamma_lanczos(cplx s) {
    const cplx z = s - 1.0;
    cplx sum = lanczos_coeffs[0];
    for (std::size_t i = 1; i < lanczos_coeffs.size(); ++i) {
        sum += lanczos_coeffs[i] / (z + static_cast<double>(i));
    }
    const cplx t = z + lanczos_g + 0.5;
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

cplx log_gamma_complex(cplx s) {
    if (s.real() < 0.5) throw domain_error("log_gamma_complex only covers Re(s) >= 1/2");
    return log_gamma_lanczos(s);
}

cplx gamma_complex(cplx s) {
    if (is_nonpositive_integer(s)) {
        throw pole_error("Gamma has a pole at s = " + std::to_string(s.real()));
    }
    if (s.real() < 0.5) {
        // Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return pi / (std::sin(pi * s) * std::exp(log_gamma_lanczos(1.0 - s)));
    }
    if (s.imag() == 0.0) return std::exp(log_gamma_lanczos(s).real());
    return std::exp(log_gamma_lanczos(s));
}

cplx pochhammer(cplx a, unsigned w) {
    cplx p = 1.0;
    for (unsigned i = 0; i < w; ++i) p *= a + static_cast<double>(i);
    return p;
}

mpq_class pochhammer(const mpq_class& a, unsigned w) {
    mpq_class p = 1;
    for (unsigned i = 0; i < w; ++i) p *= a + i;
    return p;
}

namespace {

// F(a, b; c; z) - 1, summed without the leading 1 so that small corrections
// keep their relative accuracy.
cplx hyp2f1_tail(cplx a, cplx b, cplx c, cplx z) {
    const bool a_term = is_nonpositive_integer(a);
    const bool b_term = is_nonpositive_integer(b);
    long last = -1;  // index of the last non-zero term when terminating
    if (a_term || b_term) {
        const double ma = a_term ? -a.real() : INFINITY;
        const double mb = b_term ? -b.real() : INFINITY;
        last = static_cast<long>(std::min(ma, mb));
    } else if (std::abs(z) >= 1.0) {
        throw domain_error("hyp2f1 series needs |z| < 1 unless it terminates");
    }
    if (is_nonpositive_integer(c)) {
        const long pole = static_cast<long>(-c.real());
        if (last < 0 || pole < last) {
            throw pole_error("hyp2f1: c is a non-positive integer reached before termination");
        }
    }
    cplx tail = 0.0;
    cplx term = 1.0;
    int small_run = 0;
    constexpr long max_terms = 200000;
    for (long w = 0; w < max_terms; ++w) {
        if (last >= 0 && w >= last) return tail;
        const double wd = static_cast<double>(w);
        term *= (a + wd) * (b + wd) / ((c + wd) * (wd + 1.0)) * z;
        tail += term;
        if (last < 0) {
            if (std::abs(term) <= 1e-16 * std::abs(1.0 + tail) &&
                std::abs(term) <= 1e-16 * std::abs(tail)) {
                if (++small_run == 3) return tail;
            } else {
                small_run = 0;
            }
        }
    }
    throw convergence_error("hyp2f1 series did not converge");
}

}  // namespace

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) { return 1.0 + hyp2f1_tail(a, b, c, z); }

mpq_class hyp2f1_exact(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                       const mpq_class& z) {
    auto nonpos_int = [](const mpq_class& x) { return x.get_den() == 1 && x <= 0; };
    long last;
    if (nonpos_int(a) && nonpos_int(b)) {
        last = std::min(-a.get_num().get_si(), -b.get_num().get_si());
    } else if (nonpos_int(a)) {
        last = -a.get_num().get_si();
    } else if (nonpos_int(b)) {
        last = -b.get_num().get_si();
    } else {
        throw domain_error("hyp2f1_exact needs a terminating series");
    }
    if (nonpos_int(c) && -c.get_num().get_si() < last) {
        throw pole_error("hyp2f1_exact: c pole reached before termination");
    }
    mpq_class sum = 1, term = 1;
    for (long w = 0; w < last; ++w) {
        term *= (a + w) * (b + w) / ((c + w) * (w + 1)) * z;
        sum += term;
    }
    return sum;
}

mpq_class HypergeomPoly::evaluate(const mpq_class& z) const {
    mpq_class acc = 0;
    for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) acc = acc * z + *it;
    return acc;
}

mpq_class HypergeomPoly::evaluate_at_node(const mpz_class& node) const {
    const mpz_class node_sq = node * node;
    mpq_class acc = 0;
    mpz_class pw = 1;  // node^{2(m - w)} built from w = m downwards
    for (long w = static_cast<long>(m); w >= 0; --w) {
        acc += alpha[static_cast<std::size_t>(w)] * mpq_class(pw);
        pw *= node_sq;
    }
    return acc;
}

HypergeomPoly pm_polynomial(unsigned m, int k, unsigned r) {
    if (k < 3) throw domain_error("pm_polynomial needs k >= 3");
    if (r == 0) throw domain_error("pm_polynomial needs r >= 1");
    HypergeomPoly p;
    p.m = m;
    p.k = k;
    p.r = r;
    const mpq_class a = -static_cast<long>(m);
    const mpq_class b = a + mpq_class(1, 2);
    const mpq_class c = mpq_class(3, 2) - k - 2 * static_cast<long>(m);
    mpq_class lam = 1;
    mpz_class r2 = static_cast<unsigned long>(r) * r;
    mpz_class rpow = 1;
    for (unsigned w = 0; w <= m; ++w) {
        if (w > 0) {
            lam *= (a + (w - 1)) * (b + (w - 1)) / ((c + (w - 1)) * w);
            rpow *= r2;
        }
        p.lambda.push_back(lam);
        p.alpha.push_back(lam * mpq_class(rpow));
    }
    for (unsigned w = 0; w <= m; ++w) {
        if (p.lambda[w] == 0) {
            throw error("P_m coefficient lambda_" + std::to_string(w) + " vanished (m = " +
                        std::to_string(m) + ", k = " + std::to_string(k) + ")");
        }
    }
    return p;
}

cplx delta_r(cplx s, unsigned long n, int k, unsigned r) {
    if (n == 0 || r == 0) throw domain_error("delta_r needs n >= 1 and r >= 1");
    if (!(s.real() > -1.0 && s.real() < 2.0)) throw domain_error("delta_r needs -1 < Re(s) < 2");
    // Poles of Gamma(k-s), Gamma(s-1/2), Gamma(1/2-s) and of the series
    // parameters s+1/2, 3/2-s inside the strip: s in {-1/2, 1/2, 3/2}, plus
    // s = k, k+1, ... (outside the strip for k >= 2).
    for (double p : {-0.5, 0.5, 1.5}) {
        if (std::abs(s - p) < pole_refusal_radius) {
            throw pole_error("delta_r is not evaluable within 1e-6 of s = " + std::to_string(p));
        }
    }
    const double kd = static_cast<double>(k);
    const double node = 2.0 * static_cast<double>(n) + static_cast<double>(r);
    const double z0 = (static_cast<double>(r) / node) * (static_cast<double>(r) / node);
    const cplx f1_tail = hyp2f1_tail((kd + s - 1.0) / 2.0, (kd + s) / 2.0, s + 0.5, z0);
    const cplx f2_tail = hyp2f1_tail((kd - s) / 2.0, (kd - s + 1.0) / 2.0, 1.5 - s, z0);
    const cplx gamma_ratio = gamma_complex(kd - s) * gamma_complex(s - 0.5) /
                             (gamma_complex(kd + s - 1.0) * gamma_complex(0.5 - s));
    const cplx scale = std::pow(2.0 * node / static_cast<double>(r), 2.0 * s - 1.0);
    return -f1_tail - gamma_ratio * scale * f2_tail;
}

}  // namespace shiftconv
