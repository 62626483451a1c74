// Wall-clock comparison of the OpenMP kernels against their serial references.
#include "shiftconv/eisenstein.hpp"
#include "shiftconv/forms.hpp"
#include "shiftconv/qseries.hpp"
#include "shiftconv/relations.hpp"
#include "shiftconv/shifted.hpp"
#include "shiftconv/sieve.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

using namespace shiftconv;

namespace {

template <class F>
double seconds(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& name, double serial, double parallel, bool same) {
    std::printf("%-22s serial %9.4f s  parallel %9.4f s  speedup %6.2f  %s\n", name.c_str(), serial, parallel,
                serial / parallel, same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    {
        const QSeries eta = eta_expansion(8000);
        QSeries a = QSeries::zero(1), b = QSeries::zero(1);
        const double ts = seconds([&] { a = qs_mul_serial(eta, eta); });
        const double tp = seconds([&] { b = qs_mul(eta, eta); });
        report("qs_mul (N=8000)", ts, tp, a == b);
    }
    {
        const CuspForm delta = delta_form(20011);
        std::vector<ScanRow> a, b;
        const double ts = seconds([&] { a = scan_shifts_serial(delta, 1, 10, {1000, 10000}); });
        const double tp = seconds([&] { b = scan_shifts(delta, 1, 10, {1000, 10000}); });
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i) {
            same = a[i].stats.count_nonzero == b[i].stats.count_nonzero &&
                   a[i].stats.count_positive == b[i].stats.count_positive;
        }
        report("scan_shifts (M=1e4)", ts, tp, same);
    }
    {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> dist(-1000, 1000);
        IntMatrix m(60, std::vector<mpz_class>(60));
        for (auto& row : m) {
            for (auto& x : row) x = dist(rng);
        }
        mpz_class a, b;
        const double ts = seconds([&] { a = bareiss_determinant_serial(m); });
        const double tp = seconds([&] { b = bareiss_determinant(m); });
        report("bareiss (60x60)", ts, tp, a == b);
    }
    {
        const cplx z(0.13, 0.8);
        const cplx s(2.0, 1.0);
        DirectEval a, b;
        const double ts = seconds([&] { a = eisenstein_direct_serial(z, s, 1500.0); });
        const double tp = seconds([&] { b = eisenstein_direct(z, s, 1500.0); });
        report("eisenstein_direct", ts, tp, a.value == b.value);
    }
    {
        const CuspForm delta = delta_form(201);
        std::vector<std::complex<double>> samples;
        for (int i = 0; i < 8; ++i) samples.emplace_back(0.05 * i, 0.5 + 0.05 * i);
        TwistReport a, b;
        const double ts = seconds([&] { a = twist_average_check_serial(delta, 3, 10, samples, 200); });
        const double tp = seconds([&] { b = twist_average_check(delta, 3, 10, samples, 200); });
        report("twist samples", ts, tp, a.per_sample == b.per_sample);
    }
    return 0;
}
