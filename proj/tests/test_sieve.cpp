#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftconv/errors.hpp"
#include "shiftconv/forms.hpp"
#include "shiftconv/sieve.hpp"

using namespace shiftconv;

TEST_CASE("arithmetic-progression extraction") {
    const CuspForm d = delta_form(50);
    const CuspForm g = ap_extract(d, 1, 2);
    CHECK(g.series()[1] == 1);
    CHECK(g.series()[2] == 0);
    CHECK(g.series()[3] == 252);
    CHECK(g.level() == 4);
    CHECK(g.id() == "delta_ap1mod2");
    CHECK(ap_extract(QSeries::zero(20), 3, 4).is_zero());
    for (unsigned long modulus : {1UL, 2UL, 3UL, 6UL, 10UL}) {
        QSeries total = QSeries::zero(50);
        for (unsigned long n0 = 1; n0 <= modulus; ++n0) total = qs_add(total, ap_extract(d.series(), n0, modulus));
        CHECK(total == d.series());
    }
    CHECK(ap_extract(d.series(), 1, 1) == d.series());
    CHECK_THROWS_AS(ap_extract(d.series(), 1, 0), domain_error);
    CHECK_THROWS_AS(ap_extract(d.series(), 0, 3), domain_error);
}

TEST_CASE("root-of-unity orthogonality") {
    CHECK(twist_orthogonality(7, 3, 4) == 4);
    CHECK(twist_orthogonality(6, 3, 4) == 0);
    CHECK(twist_orthogonality(-1, 3, 4) == 4);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(10) == 4);
    CHECK(euler_phi(97) == 96);
}

TEST_CASE("twist average identity") {
    const CuspForm d = delta_form(200);
    const std::vector<std::complex<double>> samples{{0.0, 0.5}, {0.3, 0.7}};
    const TwistReport rep = twist_average_check(d, 1, 2, samples, 200);
    CHECK(rep.max_rel_err <= 1e-8);
    CHECK(rep.per_sample.size() == 2);
    for (unsigned long modulus : {2UL, 4UL, 6UL, 10UL}) {
        for (unsigned long n0 = 1; n0 <= modulus; ++n0) {
            CHECK(twist_average_check(d, n0, modulus, {{0.1, 0.5}, {-0.4, 0.6}}, 200).max_rel_err <= 1e-8);
        }
    }
    CHECK(twist_average_check(d, 1, 1, samples, 200).max_rel_err <= 1e-8);
    const TwistReport serial = twist_average_check_serial(d, 3, 10, samples, 200);
    CHECK(serial.per_sample == twist_average_check(d, 3, 10, samples, 200).per_sample);
}

TEST_CASE("totient normalization disagrees when phi(M) != M") {
    const CuspForm d = delta_form(200);
    const std::vector<std::complex<double>> samples{{0.1, 0.5}};
    CHECK(twist_average_check(d, 1, 4, samples, 200, TwistNormalization::totient).max_rel_err > 0.1);
    // phi(1) = 1, so the two agree for the trivial modulus
    CHECK(twist_average_check(d, 1, 1, samples, 200, TwistNormalization::totient).max_rel_err <= 1e-8);
}

TEST_CASE("zero form and guard rails") {
    const CuspForm z(12, 1, QSeries::zero(50), "zero");
    CHECK(twist_average_check(z, 1, 2, {{0.0, 0.5}}, 50).max_rel_err == 0.0);
    const CuspForm d = delta_form(200);
    CHECK_THROWS_AS(twist_average_check(d, 1, 2, {{0.0, 0.01}}, 200), domain_error);
    CHECK_THROWS_AS(twist_average_check(d, 1, 2, {{0.0, 0.06}}, 20), domain_error);
    CHECK_THROWS_AS(twist_average_check(d, 1, 2, {{0.0, 0.5}}, 300), truncation_error);
}
