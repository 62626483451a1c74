#pragma once

#include "shiftconv/qseries.hpp"
#include "shiftconv/quadratic.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace shiftconv {

// A cusp form of weight k with coefficients in Q or in a real quadratic field
// Q(sqrt D): a(n) = series[n] + surd[n] * sqrt(D). For rational forms the
// radicand is 0 and the surd series is identically zero.
class CuspForm {
public:
    CuspForm(int weight, int level, QSeries series, std::string id = {});
    CuspForm(int weight, int level, QSeries series, QSeries surd, mpz_class radicand,
             std::string id = {});

    int weight() const noexcept { return weight_; }
    int level() const noexcept { return level_; }
    std::size_t trunc_order() const noexcept { return series_.trunc_order(); }
    const std::string& id() const noexcept { return id_; }
    bool is_rational() const noexcept { return radicand_ == 0; }

    const QSeries& series() const noexcept { return series_; }
    const QSeries& surd() const noexcept { return surd_; }
    const mpz_class& radicand() const noexcept { return radicand_; }
    QuadraticNumber coefficient(std::size_t n) const;
    double coefficient_double(std::size_t n) const;

    // C with |a(n)| <= C n^{k/2} for every stored n: twice the observed maximum.
    const mpq_class& growth_const() const noexcept { return growth_const_; }

    CuspForm truncated(std::size_t trunc) const;
    CuspForm conjugate() const;

private:
    void validate_and_bound();

    int weight_;
    int level_;
    QSeries series_;
    QSeries surd_;
    mpz_class radicand_;
    mpq_class growth_const_;
    std::string id_;
};

// Exact Bernoulli number B_n (B_1 = -1/2).
mpq_class bernoulli(unsigned n);

// sigma_e(n) = sum_{d | n} d^e, exact.
mpz_class divisor_power_sum(unsigned long n, unsigned e);

// Ramanujan's Delta = q prod (1 - q^n)^24 up to q^trunc.
QSeries delta_series(std::size_t trunc);
CuspForm delta_form(std::size_t trunc);

// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n, k even and >= 4.
QSeries eisenstein_qexp(int k, std::size_t trunc);

// dim S_k(SL_2(Z)) for even k >= 0.
int cusp_dimension(int k);

// Echelonised basis of S_k: element i has coefficient 1 at q^{i+1} and 0 at
// q^{j+1} for the other j < dim.
std::vector<QSeries> miller_basis(int k, std::size_t trunc);

// T_m on a weight-k q-expansion: b(n) = sum_{d | gcd(m,n)} d^{k-1} a(mn/d^2).
// out_trunc defaults to floor(N/m); requesting more than the input supports
// throws truncation_error naming the required order.
QSeries hecke_operator(const QSeries& f, int weight, unsigned long m,
                       std::optional<std::size_t> out_trunc = std::nullopt);
// Rational cusp forms only.
QSeries hecke_operator(const CuspForm& f, unsigned long m,
                       std::optional<std::size_t> out_trunc = std::nullopt);

// Normalised Hecke eigenforms of S_k to order trunc. Exact for dim S_k <= 2
// (conjugate pairs over Q(sqrt D) in the two-dimensional case); larger
// spaces throw domain_error.
std::vector<CuspForm> eigenforms(int k, std::size_t trunc);

// Text format: header "weight k level N trunc T" (followed by " sqrt D" for
// quadratic forms), then one line per coefficient n = 0..T, either "a" or
// "a b" for a + b sqrt(D).
void write_form(std::ostream& out, const CuspForm& f);
CuspForm read_form(std::istream& in, std::string id = {});

}  // namespace shiftconv
