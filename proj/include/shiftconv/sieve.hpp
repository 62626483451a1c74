#pragma once

#include "shiftconv/forms.hpp"
#include "shiftconv/qseries.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace shiftconv {

// Keeps a(n) for n >= 1 with n = n0 (mod modulus); every other coefficient
// becomes 0. Truncation order is unchanged.
QSeries ap_extract(const QSeries& f, unsigned long n0, unsigned long modulus);
// Same on both parts of a (possibly quadratic) form. The result is labelled
// with level N * modulus^2.
CuspForm ap_extract(const CuspForm& f, unsigned long n0, unsigned long modulus);

// sum_{s mod M} e^{2 pi i (n - n0) s / M}: M when n = n0 (mod M), else 0.
long twist_orthogonality(long n, long n0, unsigned long modulus);

enum class TwistNormalization {
    full_residue_system,  // 1 / M, the value forced by orthogonality
    totient,              // 1 / phi(M), the literal alternative; disagrees whenever phi(M) != M
};

struct TwistReport {
    double max_rel_err = 0.0;
    std::vector<double> per_sample;
};

// Compares g(z) = sum_{n = n0 (M)} a(n) q^n with
//   norm * sum_{s mod M} e^{-2 pi i n0 s / M} f(z + s / M)
// at each sample, both sides summed from the first N coefficients in 50-digit
// binary floating point. Samples need Im z >= 0.05 and a growth-constant tail
// bound below 1e-12. Error per sample is |lhs - rhs| / (|lhs| + |rhs| + 1e-300).
TwistReport twist_average_check(const CuspForm& f, unsigned long n0, unsigned long modulus,
                                const std::vector<std::complex<double>>& samples, std::size_t trunc,
                                TwistNormalization norm = TwistNormalization::full_residue_system);

// Serial reference for the sample loop above.
TwistReport twist_average_check_serial(const CuspForm& f, unsigned long n0, unsigned long modulus,
                                       const std::vector<std::complex<double>>& samples,
                                       std::size_t trunc,
                                       TwistNormalization norm = TwistNormalization::full_residue_system);

unsigned long euler_phi(unsigned long n);

}  // namespace shiftconv
