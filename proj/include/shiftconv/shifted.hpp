#pragma once

#include "shiftconv/forms.hpp"
#include "shiftconv/quadratic.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace shiftconv {

// c_n = a(n) a(n+r) for n = 1..M.
class ShiftedSeq {
public:
    ShiftedSeq(unsigned r, std::vector<QuadraticNumber> values, std::string source);

    unsigned shift() const noexcept { return r_; }
    std::size_t length() const noexcept { return c_.size(); }
    const std::string& source() const noexcept { return source_; }
    // 1-based: c(1) is the first product.
    const QuadraticNumber& c(std::size_t n) const;
    const std::vector<QuadraticNumber>& values() const noexcept { return c_; }
    ShiftedSeq prefix(std::size_t m) const;

private:
    unsigned r_;
    std::vector<QuadraticNumber> c_;
    std::string source_;
};

ShiftedSeq shifted_products(const CuspForm& f, unsigned r, std::size_t length);

struct NonvanishingStats {
    std::size_t count_zero = 0;
    std::size_t count_nonzero = 0;
    std::size_t count_positive = 0;
    std::size_t count_negative = 0;
    // Smallest n whose sign is opposite to some earlier non-zero term.
    std::optional<std::size_t> first_sign_change;
};

NonvanishingStats nonvanishing_stats(const ShiftedSeq& seq);

// a(r+1) != 0, the hypothesis that makes the shifted sequence non-trivial for
// a normalised eigenform.
bool corollary_hypothesis(const CuspForm& f, unsigned r);

struct ScanRow {
    std::string form_id;
    int weight = 0;
    unsigned r = 0;
    std::size_t length = 0;
    NonvanishingStats stats;
};

// Statistics for every r in [r_min, r_max] and every requested length, rows
// ordered by (r, length). The parallel version distributes shifts over
// threads; scan_shifts_serial is its reference.
std::vector<ScanRow> scan_shifts(const CuspForm& f, unsigned r_min, unsigned r_max,
                                 const std::vector<std::size_t>& lengths);
std::vector<ScanRow> scan_shifts_serial(const CuspForm& f, unsigned r_min, unsigned r_max,
                                        const std::vector<std::size_t>& lengths);

// form_id,k,r,M,count_zero,count_nonzero,count_positive,count_negative,first_sign_change
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

}  // namespace shiftconv
