#include "shiftconv/shifted.hpp"

#include "shiftconv/errors.hpp"

#include <algorithm>
#include <ostream>

namespace shiftconv {

ShiftedSeq::ShiftedSeq(unsigned r, std::vector<QuadraticNumber> values, std::string source)
    : r_(r), c_(std::move(values)), source_(std::move(source)) {
    if (r_ == 0) throw domain_error("shift r must be positive");
}

const QuadraticNumber& ShiftedSeq::c(std::size_t n) const {
    if (n == 0 || n > c_.size()) {
        throw truncation_error("shifted product index " + std::to_string(n) + " outside 1.." +
                               std::to_string(c_.size()));
    }
    return c_[n - 1];
}

ShiftedSeq ShiftedSeq::prefix(std::size_t m) const {
    if (m > c_.size()) throw truncation_error("prefix longer than the sequence");
    return ShiftedSeq(r_, std::vector<QuadraticNumber>(c_.begin(), c_.begin() + m), source_);
}

ShiftedSeq shifted_products(const CuspForm& f, unsigned r, std::size_t length) {
    if (r == 0) throw domain_error("shift r must be positive");
    if (length + r > f.trunc_order()) {
        throw truncation_error("shifted products up to M = " + std::to_string(length) +
                               " with r = " + std::to_string(r) + " need trunc >= " +
                               std::to_string(length + r) + ", have " +
                               std::to_string(f.trunc_order()));
    }
    std::vector<QuadraticNumber> c;
    c.reserve(length);
    for (std::size_t n = 1; n <= length; ++n) c.push_back(f.coefficient(n) * f.coefficient(n + r));
    return ShiftedSeq(r, std::move(c), f.id());
}

NonvanishingStats nonvanishing_stats(const ShiftedSeq& seq) {
    NonvanishingStats st;
    int first_sign = 0;
    for (std::size_t n = 1; n <= seq.length(); ++n) {
        const int s = seq.c(n).sign();
        if (s == 0) {
            ++st.count_zero;
            continue;
        }
        ++st.count_nonzero;
        if (s > 0) ++st.count_positive; else ++st.count_negative;
        if (first_sign == 0) {
            first_sign = s;
        } else if (s != first_sign && !st.first_sign_change) {
            st.first_sign_change = n;
        }
    }
    return st;
}

bool corollary_hypothesis(const CuspForm& f, unsigned r) {
    if (r + 1 > f.trunc_order()) {
        throw truncation_error("a(r+1) needs trunc >= " + std::to_string(r + 1));
    }
    return !f.coefficient(r + 1).is_zero();
}

namespace {

std::vector<ScanRow> rows_for_shift(const CuspForm& f, unsigned r,
                                    const std::vector<std::size_t>& lengths) {
    const std::size_t longest = *std::max_element(lengths.begin(), lengths.end());
    const ShiftedSeq full = shifted_products(f, r, longest);
    std::vector<ScanRow> rows;
    for (std::size_t m : lengths) {
        rows.push_back({f.id(), f.weight(), r, m, nonvanishing_stats(full.prefix(m))});
    }
    return rows;
}

std::vector<ScanRow> scan_impl(const CuspForm& f, unsigned r_min, unsigned r_max,
                               std::vector<std::size_t> lengths, bool parallel) {
    if (r_min == 0 || r_max < r_min) throw config_error("shift range must satisfy 1 <= r_min <= r_max");
    if (lengths.empty()) throw config_error("scan needs at least one length");
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    const long count = static_cast<long>(r_max - r_min + 1);
    std::vector<std::vector<ScanRow>> per_shift(static_cast<std::size_t>(count));
    // Exceptions must not escape an OpenMP region; check truncation up front.
    if (lengths.back() + r_max > f.trunc_order()) {
        throw truncation_error("scan up to M = " + std::to_string(lengths.back()) + ", r = " +
                               std::to_string(r_max) + " needs trunc >= " +
                               std::to_string(lengths.back() + r_max));
    }
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long i = 0; i < count; ++i) {
        per_shift[i] = rows_for_shift(f, r_min + static_cast<unsigned>(i), lengths);
    }
    std::vector<ScanRow> rows;
    for (auto& v : per_shift) rows.insert(rows.end(), v.begin(), v.end());
    return rows;
}

}  // namespace

std::vector<ScanRow> scan_shifts(const CuspForm& f, unsigned r_min, unsigned r_max,
                                 const std::vector<std::size_t>& lengths) {
    return scan_impl(f, r_min, r_max, lengths, true);
}

std::vector<ScanRow> scan_shifts_serial(const CuspForm& f, unsigned r_min, unsigned r_max,
                                        const std::vector<std::size_t>& lengths) {
    return scan_impl(f, r_min, r_max, lengths, false);
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
    out << "form_id,k,r,M,count_zero,count_nonzero,count_positive,count_negative,first_sign_change\n";
    for (const auto& row : rows) {
        out << row.form_id << ',' << row.weight << ',' << row.r << ',' << row.length << ','
            << row.stats.count_zero << ',' << row.stats.count_nonzero << ','
            << row.stats.count_positive << ',' << row.stats.count_negative << ',';
        if (row.stats.first_sign_change) out << *row.stats.first_sign_change;
        out << '\n';
    }
}

}  // namespace shiftconv
