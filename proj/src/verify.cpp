#include "shiftconv/verify.hpp"

#include "shiftconv/dirichlet.hpp"
#include "shiftconv/eisenstein.hpp"
#include "shiftconv/errors.hpp"
#include "shiftconv/forms.hpp"
#include "shiftconv/relations.hpp"
#include "shiftconv/sieve.hpp"
#include "shiftconv/specfun.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace shiftconv {

namespace {

constexpr std::size_t unfolding_trunc = 200;

CheckResult check_unfolding(bool inject_bug) {
    CheckResult out{"unfolding",
                    "int_0^inf y^(s+k-2) A_r(y) dy = Gamma(s+k-1) (4 pi)^-(s+k-1) D(s+k-1, r) for the "
                    "truncated form",
                    false, 0.0, 1e-6, {}};
    const CuspForm delta = delta_form(unfolding_trunc + 2);
    std::ostringstream detail;
    for (cplx s : {cplx(2.5, 0.0), cplx(2.0, 1.3)}) {
        const UnfoldingResult res = unfolding_check({&delta, 1, s, unfolding_trunc, 1e-10});
        const cplx rhs = inject_bug ? -res.rhs : res.rhs;
        const double err = std::abs(res.lhs - rhs) / std::abs(rhs);
        out.metric = std::max(out.metric, err);
        detail << "s=" << s.real() << (s.imag() >= 0 ? "+" : "") << s.imag() << "i ";
    }
    out.passed = out.metric <= out.tolerance;
    out.detail = detail.str() + "r=1 N=200 form=delta";
    return out;
}

CheckResult check_unfolding_2d() {
    CheckResult out{"unfolding_2d",
                    "averaging y^k |f|^2 e(rx) over x reproduces the orthogonality-reduced strip "
                    "integrand",
                    false, 0.0, 1e-10, "s=2.5 r=1 N=200 form=delta"};
    const CuspForm delta = delta_form(unfolding_trunc + 2);
    const Unfolding2dResult res = unfolding_check_2d({&delta, 1, cplx(2.5, 0.0), unfolding_trunc, 1e-10},
                                                     2 * (unfolding_trunc + 1) + 1);
    out.metric = res.rel_err;
    out.passed = out.metric <= out.tolerance;
    return out;
}

CheckResult check_pm_coefficients() {
    CheckResult out{"pm_coefficients",
                    "coefficients lambda_w of F(-m, -m+1/2; 3/2-k-2m; z) never vanish; terminating "
                    "series agrees with the floating-point 2F1",
                    false, 0.0, 1e-12, {}};
    std::size_t zeros = 0;
    for (unsigned m = 0; m <= 20; ++m) {
        for (int k = 4; k <= 30; ++k) {
            try {
                (void)pm_polynomial(m, k, 1);
            } catch (const domain_error&) {
                ++zeros;
            }
        }
    }
    double worst = 0.0;
    for (unsigned m = 1; m <= 10; ++m) {
        for (int k : {12, 16, 24}) {
            for (unsigned long n : {1UL, 3UL, 10UL}) {
                const mpq_class z(1, (2 * n + 1) * (2 * n + 1));
                const mpq_class a = -static_cast<long>(m);
                const mpq_class b = a + mpq_class(1, 2);
                const mpq_class c = mpq_class(3, 2) - k - 2 * static_cast<long>(m);
                const double exact = hyp2f1_exact(a, b, c, z).get_d();
                const cplx num = hyp2f1(a.get_d(), b.get_d(), c.get_d(), z.get_d());
                worst = std::max(worst, std::abs(num - exact) / std::abs(exact));
            }
        }
    }
    out.metric = worst;
    out.passed = zeros == 0 && worst <= out.tolerance;
    out.detail = "vanishing coefficients: " + std::to_string(zeros) + " over m<=20, k=4..30";
    return out;
}

CheckResult check_only_zero() {
    CheckResult out{"only_zero",
                    "power sums of a sequence supported on n <= n_t vanish only for the zero "
                    "sequence (Vandermonde in the nodes 2n+r)",
                    false, 0.0, 0.0, "n_t<=12 r<=10"};
    std::size_t failures = 0;
    for (unsigned r = 1; r <= 10; ++r) {
        for (unsigned long nt = 1; nt <= 12; ++nt) {
            if (!only_zero_solution(nt, r)) ++failures;
            std::vector<unsigned long> nodes(nt);
            for (unsigned long i = 0; i < nt; ++i) nodes[i] = i + 1;
            if (vandermonde_det(nodes, r) != vandermonde_product(nodes, r)) ++failures;
        }
    }
    out.metric = static_cast<double>(failures);
    out.passed = failures == 0;
    return out;
}

CheckResult check_pm_reduction() {
    CheckResult out{"pm_reduction",
                    "sum_n c_n (2n+r)^(2m) P_m((r/(2n+r))^2) = sum_w lambda_w r^(2w) S_(m-w) exactly",
                    false, 0.0, 0.0, "50 seeded cases"};
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<int> support(1, 6);
    std::uniform_int_distribution<unsigned long> index(1, 60);
    std::uniform_int_distribution<long> numer(-30, 30);
    std::uniform_int_distribution<long> denom(1, 7);
    std::uniform_int_distribution<unsigned> mdist(0, 8);
    std::uniform_int_distribution<int> kdist(2, 15);
    std::uniform_int_distribution<unsigned> rdist(1, 6);
    std::size_t failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        SupportedSeq c(rdist(rng));
        const int t = support(rng);
        for (int i = 0; i < t; ++i) {
            mpq_class v(numer(rng), denom(rng));
            v.canonicalize();
            c.set(index(rng), v);
        }
        const unsigned m = mdist(rng);
        const int k = 2 * kdist(rng);
        const ReductionResult res = pm_relation_reduction(c, m, k);
        if (res.residual != 0 || !res.node_expansion_exact) ++failures;
    }
    out.metric = static_cast<double>(failures);
    out.passed = failures == 0;
    return out;
}

CheckResult check_twist() {
    CheckResult out{"twist",
                    "(1/M) sum_{s mod M} e(-n0 s/M) f(z + s/M) is the sub-series n = n0 mod M",
                    false, 0.0, 1e-8, "moduli 2,4,6,10; all n0; y in {0.5,0.55,0.6}; N=200"};
    const CuspForm delta = delta_form(201);
    const std::vector<std::complex<double>> samples{{0.1, 0.5}, {0.37, 0.55}, {-0.23, 0.6}};
    for (unsigned long modulus : {2UL, 4UL, 6UL, 10UL}) {
        for (unsigned long n0 = 1; n0 <= modulus; ++n0) {
            const TwistReport rep = twist_average_check(delta, n0, modulus, samples, 200);
            out.metric = std::max(out.metric, rep.max_rel_err);
        }
    }
    out.passed = out.metric <= out.tolerance;
    return out;
}

CheckResult check_functional_equation() {
    CheckResult out{"functional_equation",
                    "pi^-s Gamma(s) zeta(2s) E(z,s) is invariant under s -> 1-s",
                    false, 0.0, 1e-8, {}};
    const std::vector<std::pair<cplx, cplx>> points{
        {{0.2, 1.1}, {0.5, 3.0}},  {{-0.31, 0.9}, {0.3, 1.0}}, {{0.45, 1.6}, {0.7, -2.0}},
        {{0.0, 1.0}, {0.25, 0.5}}, {{0.12, 2.3}, {0.8, 6.0}},
    };
    for (const auto& [z, s] : points) out.metric = std::max(out.metric, functional_eq_check(z, s));
    out.passed = out.metric <= out.tolerance;
    out.detail = "5 points with 0 < Re(s) < 1";
    return out;
}

using CheckFn = CheckResult (*)(bool);

struct Registered {
    std::string name;
    CheckFn fn;
};

const std::vector<Registered>& registry() {
    static const std::vector<Registered> r{
        {"unfolding", [](bool bug) { return check_unfolding(bug); }},
        {"unfolding_2d", [](bool) { return check_unfolding_2d(); }},
        {"pm_coefficients", [](bool) { return check_pm_coefficients(); }},
        {"only_zero", [](bool) { return check_only_zero(); }},
        {"pm_reduction", [](bool) { return check_pm_reduction(); }},
        {"twist", [](bool) { return check_twist(); }},
        {"functional_equation", [](bool) { return check_functional_equation(); }},
    };
    return r;
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& r : registry()) n.push_back(r.name);
        return n;
    }();
    return names;
}

VerifyReport run_verify(const VerifyOptions& options) {
    std::vector<std::string> selected = options.checks.value_or(verify_check_names());
    for (const auto& name : selected) {
        const auto& names = verify_check_names();
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw config_error("unknown check '" + name + "'");
        }
    }
    VerifyReport report;
    // Registry order, regardless of the order requested.
    for (const auto& reg : registry()) {
        if (std::find(selected.begin(), selected.end(), reg.name) == selected.end()) continue;
        try {
            report.checks.push_back(reg.fn(options.inject_bug));
        } catch (const error& e) {
            CheckResult failed{reg.name, {}, false, INFINITY, 0.0, std::string("error: ") + e.what()};
            report.checks.push_back(failed);
        }
    }
    return report;
}

void write_verify_json(std::ostream& out, const VerifyReport& report) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["all_passed"] = report.all_passed();
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["anchor"] = c.anchor;
        j["passed"] = c.passed;
        if (std::isfinite(c.metric)) {
            j["metric"] = c.metric;
        } else {
            j["metric"] = nullptr;
        }
        j["tolerance"] = c.tolerance;
        j["detail"] = c.detail;
        doc["checks"].push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace shiftconv
