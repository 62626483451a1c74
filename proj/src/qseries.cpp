#include "shiftconv/qseries.hpp"

#include "shiftconv/errors.hpp"

#include <algorithm>
#include <string>

namespace shiftconv {

QSeries::QSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw domain_error("QSeries needs at least the constant coefficient");
    for (auto& c : coeffs_) c.canonicalize();
}

QSeries QSeries::zero(std::size_t trunc) {
    return QSeries(std::vector<mpq_class>(trunc + 1));
}

QSeries QSeries::one(std::size_t trunc) {
    std::vector<mpq_class> c(trunc + 1);
    c[0] = 1;
    return QSeries(std::move(c));
}

QSeries QSeries::geometric(std::size_t trunc) {
    return QSeries(std::vector<mpq_class>(trunc + 1, mpq_class(1)));
}

const mpq_class& QSeries::operator[](std::size_t n) const {
    if (n >= coeffs_.size()) {
        throw truncation_error("coefficient q^" + std::to_string(n) +
                               " requested beyond truncation order " +
                               std::to_string(trunc_order()));
    }
    return coeffs_[n];
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

QSeries QSeries::truncated(std::size_t trunc) const {
    if (trunc > trunc_order()) {
        throw truncation_error("cannot extend a series from order " + std::to_string(trunc_order()) +
                               " to " + std::to_string(trunc));
    }
    return QSeries(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + trunc + 1));
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.trunc_order(), b.trunc_order());
    std::vector<mpq_class> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
    return QSeries(std::move(c));
}

QSeries qs_sub(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.trunc_order(), b.trunc_order());
    std::vector<mpq_class> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] - b[i];
    return QSeries(std::move(c));
}

QSeries qs_scale(const QSeries& a, const mpq_class& factor) {
    std::vector<mpq_class> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : c) x *= factor;
    return QSeries(std::move(c));
}

QSeries qs_shift(const QSeries& a, std::size_t shift) {
    const std::size_t n = a.trunc_order();
    std::vector<mpq_class> c(n + 1);
    for (std::size_t i = shift; i <= n; ++i) c[i] = a[i - shift];
    return QSeries(std::move(c));
}

namespace {

// Clears denominators: a = ints / den with integer ints.
struct IntegerForm {
    std::vector<mpz_class> ints;
    std::vector<std::size_t> support;
    mpz_class den = 1;
};

IntegerForm to_integer_form(const QSeries& a, std::size_t n) {
    IntegerForm out;
    for (std::size_t i = 0; i <= n; ++i) {
        mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), a[i].get_den_mpz_t());
    }
    out.ints.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        out.ints[i] = a[i].get_num() * (out.den / a[i].get_den());
        out.support.push_back(i);
    }
    return out;
}

// Coefficient n of the product of two integer forms, summing over the sparser
// support.
void convolve_at(const IntegerForm& x, const IntegerForm& y, std::size_t n, mpz_class& acc) {
    acc = 0;
    const IntegerForm& sparse = x.support.size() <= y.support.size() ? x : y;
    const IntegerForm& dense = &sparse == &x ? y : x;
    for (std::size_t i : sparse.support) {
        if (i > n) break;
        const mpz_class& d = dense.ints[n - i];
        if (d == 0) continue;
        mpz_addmul(acc.get_mpz_t(), sparse.ints[i].get_mpz_t(), d.get_mpz_t());
    }
}

QSeries mul_impl(const QSeries& a, const QSeries& b, bool parallel) {
    const std::size_t n = std::min(a.trunc_order(), b.trunc_order());
    const IntegerForm x = to_integer_form(a, n);
    const IntegerForm y = to_integer_form(b, n);
    const mpz_class den = x.den * y.den;
    std::vector<mpq_class> c(n + 1);
    const auto len = static_cast<long>(n + 1);
#pragma omp parallel for schedule(dynamic, 32) if (parallel)
    for (long i = 0; i < len; ++i) {
        mpz_class acc;
        convolve_at(x, y, static_cast<std::size_t>(i), acc);
        c[i] = mpq_class(acc, den);
        c[i].canonicalize();
    }
    return QSeries(std::move(c));
}

}  // namespace

QSeries qs_mul(const QSeries& a, const QSeries& b) { return mul_impl(a, b, true); }

QSeries qs_mul_serial(const QSeries& a, const QSeries& b) { return mul_impl(a, b, false); }

QSeries qs_pow(const QSeries& a, unsigned e) {
    QSeries result = QSeries::one(a.trunc_order());
    if (e == 0) return result;
    QSeries base = a;
    bool first = true;
    while (e > 0) {
        if (e & 1u) {
            result = first ? base : qs_mul(result, base);
            first = false;
        }
        e >>= 1u;
        if (e > 0) base = qs_mul(base, base);
    }
    return result;
}

QSeries qs_pow_unit(const QSeries& a, unsigned e) {
    if (a[0] != 1) throw domain_error("qs_pow_unit requires constant coefficient 1");
    const std::size_t n = a.trunc_order();
    const IntegerForm x = to_integer_form(a, n);
    // Powers of the common denominator keep every step integral:
    // with a = A/d, b_m d^m = B_m where m B_m = sum ((e+1)j - m) A_j B_{m-j} d^{j-1}.
    std::vector<mpz_class> den_pow(n + 1);
    den_pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) den_pow[i] = den_pow[i - 1] * x.den;

    std::vector<mpz_class> big(n + 1);
    big[0] = 1;
    mpz_class acc, term;
    for (std::size_t m = 1; m <= n; ++m) {
        acc = 0;
        for (std::size_t j : x.support) {
            if (j == 0) continue;
            if (j > m) break;
            const long weight = static_cast<long>((e + 1) * j) - static_cast<long>(m);
            if (weight == 0) continue;
            term = x.ints[j] * big[m - j];
            if (j > 1) term *= den_pow[j - 1];
            term *= weight;
            acc += term;
        }
        mpz_divexact_ui(big[m].get_mpz_t(), acc.get_mpz_t(), m);
    }
    std::vector<mpq_class> c(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        c[m] = mpq_class(big[m], den_pow[m]);
        c[m].canonicalize();
    }
    return QSeries(std::move(c));
}

QSeries eta_expansion(std::size_t trunc) {
    std::vector<mpq_class> c(trunc + 1);
    c[0] = 1;
    // exponents k(3k-1)/2 and k(3k+1)/2 with sign (-1)^k
    for (std::size_t k = 1;; ++k) {
        const std::size_t p1 = k * (3 * k - 1) / 2;
        if (p1 > trunc) break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        c[p1] = sign;
        const std::size_t p2 = k * (3 * k + 1) / 2;
        if (p2 <= trunc) c[p2] = sign;
    }
    return QSeries(std::move(c));
}

}  // namespace shiftconv
