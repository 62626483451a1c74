#pragma once

#include <gmpxx.h>

#include <string>

namespace shiftconv {

// An element a + b*sqrt(D) of a real quadratic field, with exact rational a, b.
// radicand() == 0 marks a plain rational (b is then always 0). Mixing two
// different non-zero radicands in one operation throws domain_error.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(mpq_class a) : a_(std::move(a)) {}  // NOLINT: implicit from rationals
    QuadraticNumber(long a) : a_(a) {}                  // NOLINT
    QuadraticNumber(mpq_class a, mpq_class b, mpz_class radicand);

    const mpq_class& rational_part() const noexcept { return a_; }
    const mpq_class& surd_part() const noexcept { return b_; }
    const mpz_class& radicand() const noexcept { return radicand_; }
    bool is_rational() const noexcept { return b_ == 0; }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    // Exact sign in {-1, 0, 1}.
    int sign() const;
    double to_double() const;
    // A rational q with |value| <= q.
    mpq_class abs_upper_bound() const;
    QuadraticNumber conjugate() const;
    std::string to_string() const;

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
    QuadraticNumber operator-() const;
    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);

private:
    mpq_class a_{0};
    mpq_class b_{0};
    mpz_class radicand_{0};
};

// Rewrites sqrt(q) for a positive rational q as m*sqrt(D) with rational m and
// integer D free of square factors below 10^6; D == 1 when q is a square.
void extract_square_root(const mpq_class& q, mpq_class& multiplier, mpz_class& radicand);

}  // namespace shiftconv
