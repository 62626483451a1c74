#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace shiftconv {

// Finitely supported sequence n -> c_n (n >= 1) with a fixed shift r. Zero
// values are dropped on insertion.
class SupportedSeq {
public:
    explicit SupportedSeq(unsigned r, const std::map<unsigned long, mpq_class>& entries = {});

    void set(unsigned long n, const mpq_class& value);
    unsigned shift() const noexcept { return r_; }
    const std::map<unsigned long, mpq_class>& entries() const noexcept { return entries_; }
    std::size_t support_size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

private:
    unsigned r_;
    std::map<unsigned long, mpq_class> entries_;
};

// S_nu = sum_n c_n (2n + r)^{2 nu} for nu = 0..nu_max.
std::vector<mpq_class> power_sums(const SupportedSeq& c, unsigned nu_max);

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Fraction-free (Bareiss) determinant with row pivoting. The parallel kernel
// updates the trailing rows of each step concurrently.
mpz_class bareiss_determinant(IntMatrix m);
mpz_class bareiss_determinant_serial(IntMatrix m);

// det [x_i^nu] with x_i = (2 n_i + r)^2, by elimination.
mpz_class vandermonde_det(const std::vector<unsigned long>& nodes, unsigned r);
// prod_{i<j} (x_j - x_i), the closed form.
mpz_class vandermonde_product(const std::vector<unsigned long>& nodes, unsigned r);

// True iff sum_{n=1}^{n_t} c_n (2n + r)^{2 nu} = 0 for nu = 0..n_t-1 forces
// c = 0. A false return means the arithmetic is broken.
bool only_zero_solution(unsigned long n_t, unsigned r);

struct ReductionResult {
    mpq_class lhs;       // sum_n c_n (2n+r)^{2m} F(-m, -m+1/2; 3/2-k-2m; (r/(2n+r))^2)
    mpq_class rhs;       // sum_w lambda_w r^{2w} S_{m-w}
    mpq_class residual;  // lhs - rhs, expected to be exactly 0
    // Per node: the terminating 2F1, P_m and its alpha-expansion agree.
    bool node_expansion_exact = true;
};

ReductionResult pm_relation_reduction(const SupportedSeq& c, unsigned m, int k);

struct TheoremBarVerdict {
    // c is zero, or some power-sum relation fails for it.
    bool consistent_only_with_zero = false;
    // Smallest nu with S_nu != 0 (searched over nu < support size).
    std::optional<unsigned> witness_nu;
};

TheoremBarVerdict theorem_bar_demo(const SupportedSeq& c);

}  // namespace shiftconv
