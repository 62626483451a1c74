// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "shiftconv/dirichlet.hpp"
#include "shiftconv/eisenstein.hpp"
#include "shiftconv/errors.hpp"
#include "shiftconv/forms.hpp"
#include "shiftconv/relations.hpp"
#include "shiftconv/shifted.hpp"
#include "shiftconv/sieve.hpp"
#include "shiftconv/specfun.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace shiftconv;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(const char* id, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %s %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
}

SupportedSeq random_seq(std::mt19937_64& rng, unsigned r, int max_support, unsigned long max_index) {
    std::uniform_int_distribution<int> size(1, max_support);
    std::uniform_int_distribution<unsigned long> idx(1, max_index);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
    SupportedSeq c(r);
    const int t = size(rng);
    while (static_cast<int>(c.support_size()) < t) {
        long a = num(rng);
        if (a == 0) a = -1;
        mpq_class v(a, den(rng));
        v.canonicalize();
        c.set(idx(rng), v);
    }
    return c;
}

}  // namespace

int main() {
    // Shared Delta expansion for the coefficient and scan criteria.
    std::optional<CuspForm> delta;

    criterion("AC1", [&] {
        const auto t0 = Clock::now();
        delta = delta_form(20000);
        const double secs = since(t0);
        const QSeries& t = delta->series();
        const bool values = t[2] == -24 && t[3] == 252 && t[6] == -6048;
        std::mt19937_64 rng(1001);
        std::uniform_int_distribution<unsigned long> dist(2, 141);
        int pairs = 0, bad = 0;
        while (pairs < 200) {
            const unsigned long m = dist(rng), n = dist(rng);
            if (std::gcd(m, n) != 1) continue;
            if (t[m * n] != t[m] * t[n]) ++bad;
            ++pairs;
        }
        std::ostringstream d;
        d << "tau(n<=20000) in " << secs << " s (limit 10); tau(2,3,6) " << (values ? "exact" : "WRONG")
          << "; multiplicativity failures " << bad << "/200";
        return Outcome{secs <= 10.0 && values && bad == 0, d.str()};
    });

    std::vector<ScanRow> rows;
    criterion("AC2", [&] {
        if (!delta) delta = delta_form(20000);
        rows = scan_shifts(*delta, 1, 10, {1000, 10000});
        std::size_t worst = 10000;
        bool monotone = true;
        for (unsigned r = 1; r <= 10; ++r) {
            const ScanRow& small = rows[2 * (r - 1)];
            const ScanRow& big = rows[2 * (r - 1) + 1];
            if (small.length != 1000 || big.length != 10000 || big.r != r) throw error("unexpected row order");
            worst = std::min(worst, big.stats.count_nonzero);
            if (big.stats.count_nonzero < small.stats.count_nonzero) monotone = false;
        }
        std::ostringstream d;
        d << "min count_nonzero at M=1e4 over r=1..10: " << worst << " (need >= 9500); non-decreasing in M: "
          << (monotone ? "yes" : "no");
        return Outcome{worst >= 9500 && monotone, d.str()};
    });

    criterion("AC3", [&] {
        if (rows.empty()) throw error("scan rows unavailable");
        std::size_t min_pos = SIZE_MAX, min_neg = SIZE_MAX;
        for (const auto& row : rows) {
            if (row.length != 10000) continue;
            min_pos = std::min(min_pos, row.stats.count_positive);
            min_neg = std::min(min_neg, row.stats.count_negative);
        }
        std::ostringstream d;
        d << "min count_positive " << min_pos << ", min count_negative " << min_neg << " (need >= 1000 each)";
        return Outcome{min_pos >= 1000 && min_neg >= 1000, d.str()};
    });

    criterion("AC4", [&] {
        int zero_a2 = 0, forms = 0;
        for (int k : {12, 16, 18, 20, 22, 24, 26}) {
            for (const auto& f : eigenforms(k, 10)) {
                ++forms;
                if (f.coefficient(2).sign() == 0) ++zero_a2;
            }
        }
        const CuspForm d = delta ? delta->truncated(200) : delta_form(200);
        int failed_r = 0;
        for (unsigned r = 1; r <= 100; ++r) {
            if (!corollary_hypothesis(d, r)) ++failed_r;
        }
        std::ostringstream d_;
        d_ << forms << " eigenforms, a(2)=0 for " << zero_a2 << "; tau(r+1)=0 for " << failed_r << " of r<=100";
        return Outcome{forms == 8 && zero_a2 == 0 && failed_r == 0, d_.str()};
    });

    criterion("AC5", [&] {
        const CuspForm d = delta_form(202);
        double worst = 0.0, slowest = 0.0;
        for (cplx s : {cplx(2.5, 0.0), cplx(2.0, 1.3)}) {
            const auto t0 = Clock::now();
            const UnfoldingResult res = unfolding_check({&d, 1, s, 200, 1e-10});
            slowest = std::max(slowest, since(t0));
            worst = std::max(worst, res.rel_err);
        }
        const Unfolding2dResult two = unfolding_check_2d({&d, 1, cplx(2.5, 0.0), 200, 1e-10}, 403);
        std::ostringstream o;
        o << "max rel_err " << worst << " (tol 1e-6); slowest point " << slowest << " s (limit 5); 2D vs 1D "
          << two.rel_err << " (tol 1e-10)";
        return Outcome{worst <= 1e-6 && slowest <= 5.0 && two.rel_err <= 1e-10, o.str()};
    });

    criterion("AC6", [&] {
        int zero_lambda = 0;
        for (unsigned m = 0; m <= 20; ++m) {
            for (int k = 4; k <= 30; ++k) {
                try {
                    const HypergeomPoly p = pm_polynomial(m, k, 1);
                    for (const auto& l : p.lambda) {
                        if (l == 0) ++zero_lambda;
                    }
                } catch (const domain_error&) {
                    ++zero_lambda;
                }
            }
        }
        std::mt19937_64 rng(2002);
        std::uniform_int_distribution<unsigned> mdist(0, 8), rdist(1, 10);
        std::uniform_int_distribution<int> kdist(2, 15);
        int nonzero_residual = 0;
        for (int trial = 0; trial < 50; ++trial) {
            const SupportedSeq c = random_seq(rng, rdist(rng), 6, 80);
            const ReductionResult res = pm_relation_reduction(c, mdist(rng), 2 * kdist(rng));
            if (res.residual != 0) ++nonzero_residual;
        }
        std::ostringstream o;
        o << "vanishing lambda over m<=20, k=4..30: " << zero_lambda << "; nonzero residuals " << nonzero_residual
          << "/50";
        return Outcome{zero_lambda == 0 && nonzero_residual == 0, o.str()};
    });

    criterion("AC7", [&] {
        int bad_zero = 0, bad_det = 0;
        for (unsigned r = 1; r <= 10; ++r) {
            for (unsigned long nt = 1; nt <= 12; ++nt) {
                if (!only_zero_solution(nt, r)) ++bad_zero;
                std::vector<unsigned long> nodes(nt);
                std::iota(nodes.begin(), nodes.end(), 1UL);
                if (vandermonde_det(nodes, r) != vandermonde_product(nodes, r)) ++bad_det;
            }
        }
        std::ostringstream o;
        o << "only_zero failures " << bad_zero << "/120; determinant mismatches " << bad_det << "/120";
        return Outcome{bad_zero == 0 && bad_det == 0, o.str()};
    });

    criterion("AC8", [&] {
        std::mt19937_64 rng(3003);
        std::uniform_int_distribution<unsigned> rdist(1, 10);
        int missing = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const SupportedSeq c = random_seq(rng, rdist(rng), 10, 100);
            const TheoremBarVerdict v = theorem_bar_demo(c);
            if (!v.witness_nu || *v.witness_nu > c.support_size()) ++missing;
        }
        std::ostringstream o;
        o << "trials without a witness nu <= support size: " << missing << "/1000";
        return Outcome{missing == 0, o.str()};
    });

    criterion("AC9", [&] {
        const CuspForm d = delta_form(201);
        const std::vector<std::complex<double>> samples{{0.1, 0.5}, {0.37, 0.55}, {-0.23, 0.6}};
        double worst = 0.0;
        for (unsigned long modulus : {2UL, 4UL, 6UL, 10UL}) {
            for (unsigned long n0 = 1; n0 <= modulus; ++n0) {
                worst = std::max(worst, twist_average_check(d, n0, modulus, samples, 200).max_rel_err);
            }
        }
        double totient_best = INFINITY;
        for (unsigned long n0 = 1; n0 <= 4; ++n0) {
            totient_best = std::min(
                totient_best, twist_average_check(d, n0, 4, samples, 200, TwistNormalization::totient).max_rel_err);
        }
        const bool totient_fails = totient_best > 1e-8;
        std::ostringstream o;
        o << "max rel_err " << worst << " (tol 1e-8); totient normalization at modulus 4: min rel_err "
          << totient_best << (totient_fails ? " (fails as expected)" : " (UNEXPECTEDLY passes)");
        return Outcome{worst <= 1e-8 && totient_fails, o.str()};
    });

    criterion("AC10", [&] {
        std::mt19937_64 rng(4004);
        std::uniform_real_distribution<double> xs(-0.5, 0.5), ys(0.8, 2.0), sr(1.2, 3.0), si(-5.0, 5.0);
        double worst_direct = 0.0;
        for (int i = 0; i < 10; ++i) {
            double s_re = sr(rng);
            while (s_re <= 1.2) s_re = sr(rng);
            const cplx z(xs(rng), ys(rng));
            const cplx s(s_re, si(rng));
            const cplx fourier = eisenstein_fourier(z, s).value;
            const cplx direct = eisenstein_direct_accelerated(z, s);
            worst_direct = std::max(worst_direct, std::abs(fourier - direct) / std::abs(direct));
        }
        const std::vector<std::pair<cplx, cplx>> fe_points{
            {{0.0, 1.0}, {0.5, 3.0}}, {{0.1, 1.2}, {0.3, 2.0}}, {{0.0, 2.0}, {0.7, 0.0}},
            {{-0.35, 0.95}, {0.15, -4.0}}, {{0.27, 1.5}, {0.85, 7.5}},
        };
        double worst_fe = 0.0;
        for (const auto& [z, s] : fe_points) worst_fe = std::max(worst_fe, functional_eq_check(z, s));
        std::uniform_real_distribution<double> kx(0.05, 40.0);
        double worst_k = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double x = kx(rng);
            const cplx closed = std::sqrt(pi / (2.0 * x)) * std::exp(-x);
            worst_k = std::max(worst_k, std::abs(bessel_k(0.5, x) - closed) / std::abs(closed));
        }
        std::ostringstream o;
        o << "Fourier vs coset sum max rel " << worst_direct << " (tol 1e-6); functional equation max rel "
          << worst_fe << " (tol 1e-8); K_1/2 max rel " << worst_k << " (tol 1e-10)";
        return Outcome{worst_direct <= 1e-6 && worst_fe <= 1e-8 && worst_k <= 1e-10, o.str()};
    });

    criterion("AC11", [&] {
        const cplx s(0.4, 3.0);
        const double a = std::abs(delta_r(s, 10, 12, 1));
        const double b = std::abs(delta_r(s, 100, 12, 1));
        const double c = std::abs(delta_r(s, 1000, 12, 1));
        std::ostringstream o;
        o << "|Delta_1| at n=10,100,1000: " << a << ", " << b << ", " << c;
        return Outcome{a > b && b > c, o.str()};
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
    return failures == 0 ? 0 : 1;
}
