#include "shiftconv/relations.hpp"

#include "shiftconv/errors.hpp"
#include "shiftconv/specfun.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace shiftconv {

SupportedSeq::SupportedSeq(unsigned r, const std::map<unsigned long, mpq_class>& entries) : r_(r) {
    if (r_ == 0) throw domain_error("SupportedSeq needs r >= 1");
    for (const auto& [n, v] : entries) set(n, v);
}

void SupportedSeq::set(unsigned long n, const mpq_class& value) {
    if (n == 0) throw domain_error("SupportedSeq indices start at 1");
    if (value == 0) {
        entries_.erase(n);
    } else {
        entries_[n] = value;
    }
}

std::vector<mpq_class> power_sums(const SupportedSeq& c, unsigned nu_max) {
    std::vector<mpq_class> sums(nu_max + 1);
    for (const auto& [n, value] : c.entries()) {
        const mpz_class node = 2 * mpz_class(n) + c.shift();
        const mpz_class x = node * node;
        mpz_class pw = 1;
        for (unsigned nu = 0; nu <= nu_max; ++nu) {
            sums[nu] += value * mpq_class(pw);
            pw *= x;
        }
    }
    return sums;
}

namespace {

mpz_class bareiss_impl(IntMatrix m, bool parallel) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw domain_error("bareiss_determinant needs a square matrix");
    }
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        const auto rows = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
        for (long i = static_cast<long>(k) + 1; i < rows; ++i) {
            auto& row = m[static_cast<std::size_t>(i)];
            for (std::size_t j = k + 1; j < n; ++j) {
                row[j] = row[j] * m[k][k] - row[k] * m[k][j];
                mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
            }
            row[k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<mpz_class> squared_nodes(const std::vector<unsigned long>& nodes, unsigned r) {
    const std::set<unsigned long> distinct(nodes.begin(), nodes.end());
    if (distinct.size() != nodes.size()) throw domain_error("Vandermonde nodes must be distinct");
    std::vector<mpz_class> xs;
    for (unsigned long n : nodes) {
        if (n == 0) throw domain_error("Vandermonde nodes must be positive");
        const mpz_class node = 2 * mpz_class(n) + r;
        xs.push_back(node * node);
    }
    return xs;
}

}  // namespace

mpz_class bareiss_determinant(IntMatrix m) { return bareiss_impl(std::move(m), true); }

mpz_class bareiss_determinant_serial(IntMatrix m) { return bareiss_impl(std::move(m), false); }

mpz_class vandermonde_det(const std::vector<unsigned long>& nodes, unsigned r) {
    const std::vector<mpz_class> xs = squared_nodes(nodes, r);
    const std::size_t t = xs.size();
    IntMatrix m(t, std::vector<mpz_class>(t));
    for (std::size_t i = 0; i < t; ++i) {
        mpz_class pw = 1;
        for (std::size_t nu = 0; nu < t; ++nu) {
            m[i][nu] = pw;
            pw *= xs[i];
        }
    }
    return bareiss_determinant(std::move(m));
}

mpz_class vandermonde_product(const std::vector<unsigned long>& nodes, unsigned r) {
    const std::vector<mpz_class> xs = squared_nodes(nodes, r);
    mpz_class prod = 1;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) prod *= xs[j] - xs[i];
    }
    return prod;
}

bool only_zero_solution(unsigned long n_t, unsigned r) {
    if (n_t == 0) throw domain_error("only_zero_solution needs n_t >= 1");
    // rows nu = 0..n_t-1, columns n = 1..n_t
    IntMatrix m(n_t, std::vector<mpz_class>(n_t));
    for (unsigned long n = 1; n <= n_t; ++n) {
        const mpz_class node = 2 * mpz_class(n) + r;
        const mpz_class x = node * node;
        mpz_class pw = 1;
        for (unsigned long nu = 0; nu < n_t; ++nu) {
            m[nu][n - 1] = pw;
            pw *= x;
        }
    }
    return bareiss_determinant(std::move(m)) != 0;
}

ReductionResult pm_relation_reduction(const SupportedSeq& c, unsigned m, int k) {
    const unsigned r = c.shift();
    const HypergeomPoly poly = pm_polynomial(m, k, r);
    const mpq_class a = -static_cast<long>(m);
    const mpq_class b = a + mpq_class(1, 2);
    const mpq_class cc = mpq_class(3, 2) - k - 2 * static_cast<long>(m);

    ReductionResult out;
    for (const auto& [n, value] : c.entries()) {
        const mpz_class node = 2 * mpz_class(n) + r;
        mpq_class z(mpz_class(r) * r, node * node);
        z.canonicalize();
        mpz_class node_pow;
        mpz_pow_ui(node_pow.get_mpz_t(), node.get_mpz_t(), 2 * m);
        const mpq_class f = hyp2f1_exact(a, b, cc, z);
        const mpq_class weighted = mpq_class(node_pow) * f;
        out.lhs += value * weighted;
        if (f != poly.evaluate(z) || weighted != poly.evaluate_at_node(node)) {
            out.node_expansion_exact = false;
        }
    }
    const std::vector<mpq_class> sums = power_sums(c, m);
    mpz_class rpow = 1;
    const mpz_class r2 = mpz_class(r) * r;
    for (unsigned w = 0; w <= m; ++w) {
        out.rhs += poly.lambda[w] * mpq_class(rpow) * sums[m - w];
        rpow *= r2;
    }
    out.residual = out.lhs - out.rhs;
    return out;
}

TheoremBarVerdict theorem_bar_demo(const SupportedSeq& c) {
    TheoremBarVerdict verdict;
    if (c.empty()) {
        verdict.consistent_only_with_zero = true;
        return verdict;
    }
    const auto t = static_cast<unsigned>(c.support_size());
    const std::vector<mpq_class> sums = power_sums(c, t - 1);
    for (unsigned nu = 0; nu < t; ++nu) {
        if (sums[nu] != 0) {
            verdict.witness_nu = nu;
            break;
        }
    }
    verdict.consistent_only_with_zero = verdict.witness_nu.has_value();
    return verdict;
}

}  // namespace shiftconv
