#include "shiftconv/quadratic.hpp"

#include "shiftconv/errors.hpp"

#include <cmath>

namespace shiftconv {

namespace {

mpz_class common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational()) return x.radicand();
    if (x.radicand() != y.radicand()) {
        throw domain_error("quadratic arithmetic across different radicands");
    }
    return x.radicand();
}

}  // namespace

QuadraticNumber::QuadraticNumber(mpq_class a, mpq_class b, mpz_class radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(std::move(radicand)) {
    if (radicand_ < 0) throw domain_error("negative radicand");
    if (b_ == 0) {
        radicand_ = 0;
    } else if (radicand_ == 0) {
        b_ = 0;
    } else if (mpz_perfect_square_p(radicand_.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), radicand_.get_mpz_t());
        a_ += b_ * mpq_class(root);
        b_ = 0;
        radicand_ = 0;
    }
}

int QuadraticNumber::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 D
    const mpq_class lhs = a_ * a_;
    const mpq_class rhs = b_ * b_ * mpq_class(radicand_);
    const int c = cmp(lhs, rhs);
    return c > 0 ? sa : (c < 0 ? sb : 0);
}

double QuadraticNumber::to_double() const {
    if (b_ == 0) return a_.get_d();
    return a_.get_d() + b_.get_d() * std::sqrt(radicand_.get_d());
}

mpq_class QuadraticNumber::abs_upper_bound() const {
    mpq_class bound = abs(a_);
    if (b_ != 0) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), radicand_.get_mpz_t());
        bound += abs(b_) * mpq_class(root + 1);
    }
    return bound;
}

QuadraticNumber QuadraticNumber::conjugate() const {
    return QuadraticNumber(a_, -b_, radicand_);
}

std::string QuadraticNumber::to_string() const {
    if (b_ == 0) return a_.get_str();
    return a_.get_str() + (b_ < 0 ? " - " : " + ") + mpq_class(abs(b_)).get_str() + "*sqrt(" +
           radicand_.get_str() + ")";
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    const mpz_class d = common_radicand(x, y);
    return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    const mpz_class d = common_radicand(x, y);
    return QuadraticNumber(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    const mpz_class d = common_radicand(x, y);
    mpq_class a = x.a_ * y.a_ + x.b_ * y.b_ * mpq_class(d);
    mpq_class b = x.a_ * y.b_ + x.b_ * y.a_;
    return QuadraticNumber(std::move(a), std::move(b), d);
}

QuadraticNumber QuadraticNumber::operator-() const {
    return QuadraticNumber(-a_, -b_, radicand_);
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.radicand_ == y.radicand_);
}

void extract_square_root(const mpq_class& q, mpq_class& multiplier, mpz_class& radicand) {
    if (q <= 0) throw domain_error("square root of a non-positive rational");
    // sqrt(p/d) = sqrt(p*d)/d
    mpz_class rest = q.get_num() * q.get_den();
    mpz_class outside = 1;
    for (unsigned long p = 2; p < 1000000 && mpz_class(p) * p <= rest; ++p) {
        const mpz_class p2 = mpz_class(p) * p;
        while (mpz_divisible_p(rest.get_mpz_t(), p2.get_mpz_t())) {
            rest /= p2;
            outside *= p;
        }
    }
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
        outside *= root;
        rest = 1;
    }
    multiplier = mpq_class(outside, q.get_den());
    multiplier.canonicalize();
    radicand = rest;
}

}  // namespace shiftconv
