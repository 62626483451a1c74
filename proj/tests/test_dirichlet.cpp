#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftconv/dirichlet.hpp"
#include "shiftconv/errors.hpp"
#include "shiftconv/forms.hpp"
#include "shiftconv/quadrature.hpp"
#include "shiftconv/relations.hpp"

#include <chrono>
#include <sstream>

using namespace shiftconv;

namespace {

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

CuspForm toy_form(std::size_t trunc, std::initializer_list<std::pair<std::size_t, long>> entries) {
    std::vector<mpq_class> v(trunc + 1, 0);
    for (const auto& [n, a] : entries) v[n] = a;
    return CuspForm(12, 1, QSeries(v), "toy");
}

}  // namespace

TEST_CASE("Dirichlet series values") {
    const CuspForm d = delta_form(210);
    const SeriesEval a = d_series(d, 1, 14.0, 200);
    CHECK(a.kind == TailKind::rigorous);
    CHECK(rel(a.value, -0.115454894075290180866305400882) < 1e-12);
    const SeriesEval b = d_series(d, 2, cplx(13.5, 2.0), 200);
    CHECK(b.kind == TailKind::rigorous);
    CHECK(d_series(d, 2, cplx(12.5, 2.0), 200).kind == TailKind::heuristic);
    CHECK(rel(b.value, {-0.0134318209196904537768888466587, -0.040428591050485298476859216737}) < 1e-12);
    CHECK_THROWS_AS(d_series(d, 1, 12.0, 200), domain_error);
    const SeriesEval c = d_series(d, 1, cplx(3.0, 1.0), 200, TailMode::allow_unbounded);
    CHECK(c.kind == TailKind::unbounded);
    CHECK(std::isinf(c.tail_bound));
}

TEST_CASE("zero form and Dirichlet polynomials") {
    const CuspForm z(12, 1, QSeries::zero(50), "zero");
    const SeriesEval e = d_series(z, 1, 14.0, 40);
    CHECK(e.value == cplx(0.0));
    CHECK(e.tail_bound == 0.0);
    SupportedSeq c(2);
    c.set(1, 2);
    CHECK(dirichlet_polynomial(c, 0.0) == cplx(2.0));
    CHECK(rel(dirichlet_polynomial(c, 1.0), 1.0) < 1e-15);
}

TEST_CASE("truncations agree within their tail bounds") {
    const CuspForm d = delta_form(5010);
    const SeriesEval a = d_series(d, 1, 14.0, 500);
    const SeriesEval b = d_series(d, 1, 14.0, 5000);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound + b.tail_bound);
    CHECK(b.tail_bound < a.tail_bound);
    const SeriesEval h1 = d_series(d, 1, 12.8, 500);
    const SeriesEval h2 = d_series(d, 1, 12.8, 5000);
    CHECK(h1.kind == TailKind::heuristic);
    CHECK(std::abs(h1.value - h2.value) <= h1.tail_bound + h2.tail_bound);
}

TEST_CASE("derivative matches a central difference") {
    const CuspForm d = delta_form(210);
    const cplx s(14.5, 0.7);
    const double h = 1e-5;
    const cplx fd = (d_series(d, 1, s + h, 200).value - d_series(d, 1, s - h, 200).value) / (2.0 * h);
    CHECK(rel(d_series_derivative(d, 1, s, 200), fd) < 1e-7);
}

TEST_CASE("unfolding identity for delta") {
    const CuspForm d = delta_form(202);
    for (cplx s : {cplx(2.5, 0.0), cplx(2.0, 1.3)}) {
        const auto t0 = std::chrono::steady_clock::now();
        const UnfoldingResult res = unfolding_check({&d, 1, s, 200, 1e-10});
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        CHECK(res.rel_err <= 1e-6);
        CHECK(secs <= 5.0);
        CHECK(!res.partition.empty());
        CHECK(res.y_max > 0.0);
    }
}

TEST_CASE("unfolding strip integral against reference quadrature") {
    const CuspForm d = delta_form(10);
    const UnfoldingResult a = unfolding_check({&d, 1, cplx(2.5, 0.0), 5, 1e-12});
    CHECK(rel(a.lhs, -3.88479158324137104198918361523e-7) < 1e-9);
    const UnfoldingResult b = unfolding_check({&d, 1, cplx(2.0, 1.3), 5, 1e-12});
    CHECK(rel(b.lhs, {-2.44441142036720625302977664951e-7, 3.63675045586748384408935035925e-7}) < 1e-9);
}

TEST_CASE("unfolding edge cases") {
    const CuspForm z(12, 1, QSeries::zero(30), "zero");
    const UnfoldingResult res = unfolding_check({&z, 1, cplx(2.5, 0.0), 20, 1e-10});
    CHECK(res.lhs == cplx(0.0));
    CHECK(res.rhs == cplx(0.0));

    // a(1) = a(2) = 1: lhs = Gamma(s+k-1) / (6 pi)^{s+k-1}
    const CuspForm toy = toy_form(5, {{1, 1}, {2, 1}});
    const cplx s(2.0, 0.0);
    const UnfoldingResult t = unfolding_check({&toy, 1, s, 1, 1e-12});
    const cplx alpha = s + 11.0;
    CHECK(rel(t.lhs, gamma_complex(alpha) / std::pow(6.0 * pi, alpha)) < 1e-10);

    const CuspForm d = delta_form(50);
    CHECK_THROWS_AS(unfolding_check({&d, 1, cplx(1.0, 0.0), 20, 1e-10}), domain_error);
    CHECK_THROWS_AS(unfolding_check({nullptr, 1, cplx(2.0, 0.0), 20, 1e-10}), config_error);
}

TEST_CASE("two-dimensional mode") {
    const CuspForm d = delta_form(60);
    const Unfolding2dResult res = unfolding_check_2d({&d, 1, cplx(2.5, 0.0), 50, 1e-10}, 256);
    CHECK(res.rel_err <= 1e-10);
    CHECK_THROWS_AS(unfolding_check_2d({&d, 1, cplx(2.5, 0.0), 50, 1e-10}, 102), domain_error);
    // shift beyond the support: no coefficient pair survives
    const CuspForm toy = toy_form(20, {{1, 1}, {2, 3}, {3, -2}});
    const Unfolding2dResult empty = unfolding_check_2d({&toy, 10, cplx(2.5, 0.0), 3, 1e-10}, 64);
    CHECK(empty.lhs_orthogonality == cplx(0.0));
    CHECK(empty.lhs_grid == cplx(0.0));
}

TEST_CASE("Gamma integral by quadrature") {
    for (cplx a : {cplx(13.5, 0.0), cplx(3.0, 2.0), cplx(20.0, -5.0)}) {
        const double lambda = 6.0 * pi;
        CHECK(rel(gamma_integral_numeric(a, lambda, 1e-12), gamma_complex(a) / std::pow(lambda, a)) < 1e-10);
    }
}

TEST_CASE("adaptive quadrature") {
    const QuadResult r = integrate_adaptive([](double x) { return cplx(std::cos(x), std::sin(x)); }, 0.0, 10.0, 1e-13);
    CHECK(rel(r.value, cplx(std::sin(10.0), 1.0 - std::cos(10.0))) < 1e-12);
    CHECK(rel(integrate_on([](double x) { return cplx(std::cos(x), std::sin(x)); }, r.partition), r.value) < 1e-15);
    for (std::size_t i = 1; i < r.partition.size(); ++i) CHECK(r.partition[i].lo == r.partition[i - 1].hi);
}

TEST_CASE("unfolding CSV row") {
    const CuspForm d = delta_form(30);
    const UnfoldingResult res = unfolding_check({&d, 1, cplx(2.5, 0.0), 20, 1e-10});
    std::ostringstream out;
    write_unfolding_csv_header(out);
    write_unfolding_csv_row(out, "delta", 1, cplx(2.5, 0.0), 20, res);
    std::istringstream in(out.str());
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "form_id,r,s_re,s_im,N,lhs_re,lhs_im,rhs_re,rhs_im,rel_err");
    CHECK(std::count(row.begin(), row.end(), ',') == 9);
    CHECK(row.rfind("delta,1,2.5,0,20,", 0) == 0);
}
