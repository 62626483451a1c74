#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace shiftconv {

// Truncated q-expansion sum_{n=0}^{N} a_n q^n with exact rational coefficients.
// N is the truncation order: coefficients past N are unknown, and asking for
// one is a truncation_error rather than a silent zero.
class QSeries {
public:
    QSeries() : coeffs_(1) {}
    explicit QSeries(std::vector<mpq_class> coeffs);

    static QSeries zero(std::size_t trunc);
    static QSeries one(std::size_t trunc);
    // sum_n q^n up to trunc.
    static QSeries geometric(std::size_t trunc);

    std::size_t trunc_order() const noexcept { return coeffs_.size() - 1; }
    const mpq_class& operator[](std::size_t n) const;
    std::span<const mpq_class> coefficients() const noexcept { return coeffs_; }
    bool is_zero() const;
    QSeries truncated(std::size_t trunc) const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<mpq_class> coeffs_;
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_scale(const QSeries& a, const mpq_class& factor);
// Multiplication by q^shift; the known range shrinks accordingly so the
// truncation order is unchanged.
QSeries qs_shift(const QSeries& a, std::size_t shift);

// Truncated Cauchy product. The OpenMP kernel parallelises over output
// coefficients; qs_mul_serial is the single-threaded reference used in tests.
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_mul_serial(const QSeries& a, const QSeries& b);

// Binary exponentiation over qs_mul; e == 0 gives the constant series 1.
QSeries qs_pow(const QSeries& a, unsigned e);

// a^e for a series with a_0 == 1 via the power recurrence
//   n b_n = sum_{j=1}^{n} ((e+1) j - n) a_j b_{n-j},
// which only touches the non-zero a_j. Cost O(N * nnz(a)).
QSeries qs_pow_unit(const QSeries& a, unsigned e);

// Euler product prod_{n>=1} (1 - q^n) truncated at N, built from the
// pentagonal number theorem.
QSeries eta_expansion(std::size_t trunc);

}  // namespace shiftconv
