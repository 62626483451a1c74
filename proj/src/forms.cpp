#include "shiftconv/forms.hpp"

#include "shiftconv/errors.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace shiftconv {

CuspForm::CuspForm(int weight, int level, QSeries series, std::string id)
    : CuspForm(weight, level, series, QSeries::zero(series.trunc_order()), 0, std::move(id)) {}

CuspForm::CuspForm(int weight, int level, QSeries series, QSeries surd, mpz_class radicand,
                   std::string id)
    : weight_(weight),
      level_(level),
      series_(std::move(series)),
      surd_(std::move(surd)),
      radicand_(std::move(radicand)),
      id_(std::move(id)) {
    validate_and_bound();
}

void CuspForm::validate_and_bound() {
    if (weight_ < 1) throw domain_error("cusp form weight must be positive");
    if (level_ < 1) throw domain_error("cusp form level must be positive");
    if (series_.trunc_order() != surd_.trunc_order()) {
        throw domain_error("rational and surd parts differ in truncation order");
    }
    if (series_.trunc_order() < 1) throw domain_error("cusp form needs trunc >= 1");
    if (radicand_ < 0) throw domain_error("negative radicand");
    if (radicand_ == 0 && !surd_.is_zero()) throw domain_error("surd part without radicand");
    if (series_[0] != 0 || surd_[0] != 0) throw domain_error("cusp form must have a(0) = 0");

    // growth_const = 2 max |a(n)| / n^{k/2}; for odd k compare squares.
    mpq_class best = 0;
    for (std::size_t n = 1; n <= trunc_order(); ++n) {
        const mpq_class a = coefficient(n).abs_upper_bound();
        if (a == 0) continue;
        mpq_class ratio;
        if (weight_ % 2 == 0) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), n, static_cast<unsigned long>(weight_ / 2));
            ratio = a / mpq_class(p);
        } else {
            // ceil(sqrt(n))^k >= n^{k/2}: bound stays valid with a small slack.
            mpz_class root;
            mpz_class nn = n;
            mpz_sqrt(root.get_mpz_t(), nn.get_mpz_t());
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(weight_));
            ratio = a / mpq_class(p);
        }
        if (ratio > best) best = ratio;
    }
    // An all-zero expansion past the Sturm bound k/12 is the zero form; otherwise
    // nothing is known beyond the truncation and 1 stands in.
    const bool provably_zero = best == 0 && level_ == 1 && trunc_order() > static_cast<std::size_t>(weight_ / 12);
    growth_const_ = best != 0 ? mpq_class(2 * best) : mpq_class(provably_zero ? 0 : 1);
    growth_const_.canonicalize();
}

QuadraticNumber CuspForm::coefficient(std::size_t n) const {
    if (radicand_ == 0) return QuadraticNumber(series_[n]);
    return QuadraticNumber(series_[n], surd_[n], radicand_);
}

double CuspForm::coefficient_double(std::size_t n) const { return coefficient(n).to_double(); }

CuspForm CuspForm::truncated(std::size_t trunc) const {
    return CuspForm(weight_, level_, series_.truncated(trunc), surd_.truncated(trunc), radicand_,
                    id_);
}

CuspForm CuspForm::conjugate() const {
    return CuspForm(weight_, level_, series_, qs_scale(surd_, -1), radicand_, id_);
}

mpq_class bernoulli(unsigned n) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    std::vector<mpq_class> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        mpq_class acc = 0;
        mpz_class binom = 1;  // C(m+1, j)
        for (unsigned j = 0; j < m; ++j) {
            acc += mpq_class(binom) * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -acc / mpq_class(m + 1);
    }
    return b[n];
}

mpz_class divisor_power_sum(unsigned long n, unsigned e) {
    if (n == 0) throw domain_error("divisor sum of 0");
    mpz_class total = 0, p;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(p.get_mpz_t(), d, e);
        total += p;
        if (d != n / d) {
            mpz_ui_pow_ui(p.get_mpz_t(), n / d, e);
            total += p;
        }
    }
    return total;
}

QSeries delta_series(std::size_t trunc) {
    if (trunc == 0) return QSeries::zero(0);
    const QSeries eta24 = qs_pow_unit(eta_expansion(trunc - 1), 24);
    std::vector<mpq_class> c(trunc + 1);
    for (std::size_t n = 1; n <= trunc; ++n) c[n] = eta24[n - 1];
    return QSeries(std::move(c));
}

CuspForm delta_form(std::size_t trunc) {
    if (trunc < 1) throw domain_error("delta_form needs trunc >= 1");
    return CuspForm(12, 1, delta_series(trunc), "delta");
}

QSeries eisenstein_qexp(int k, std::size_t trunc) {
    if (k < 4 || k % 2 != 0) throw domain_error("eisenstein_qexp needs even k >= 4");
    const mpq_class factor = mpq_class(-2 * k) / bernoulli(static_cast<unsigned>(k));
    // divisor sieve for sigma_{k-1}
    std::vector<mpz_class> sigma(trunc + 1);
    mpz_class p;
    for (std::size_t d = 1; d <= trunc; ++d) {
        mpz_ui_pow_ui(p.get_mpz_t(), d, static_cast<unsigned long>(k - 1));
        for (std::size_t m = d; m <= trunc; m += d) sigma[m] += p;
    }
    std::vector<mpq_class> c(trunc + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= trunc; ++n) c[n] = factor * mpq_class(sigma[n]);
    return QSeries(std::move(c));
}

int cusp_dimension(int k) {
    if (k < 0 || k % 2 != 0) throw domain_error("cusp_dimension needs even k >= 0");
    if (k == 2) return 0;
    const int modular = (k % 12 == 2) ? k / 12 : k / 12 + 1;
    return k == 0 ? 0 : modular - 1;
}

std::vector<QSeries> miller_basis(int k, std::size_t trunc) {
    if (k % 2 != 0) throw domain_error("miller_basis needs even k");
    const int dim = cusp_dimension(k);
    std::vector<QSeries> basis;
    if (dim == 0) return basis;
    if (trunc < static_cast<std::size_t>(dim)) {
        throw truncation_error("miller_basis needs trunc >= dim S_k = " + std::to_string(dim));
    }
    const QSeries delta = delta_series(trunc);
    const QSeries e4 = eisenstein_qexp(4, trunc);
    const QSeries e6 = eisenstein_qexp(6, trunc);
    for (int j = 1; j <= dim; ++j) {
        const int rest = k - 12 * j;
        // rest = 4 alpha + 6 beta with beta in {0, 1}
        const int beta = (rest % 4 == 0) ? 0 : 1;
        const int alpha = (rest - 6 * beta) / 4;
        QSeries g = qs_pow(delta, static_cast<unsigned>(j));
        if (alpha > 0) g = qs_mul(g, qs_pow(e4, static_cast<unsigned>(alpha)));
        if (beta > 0) g = qs_mul(g, e6);
        basis.push_back(std::move(g));
    }
    // Gauss-Jordan on the coefficients q^1 .. q^dim
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) {
            if (i == j) continue;
            const mpq_class c = basis[i][j + 1];
            if (c != 0) basis[i] = qs_sub(basis[i], qs_scale(basis[j], c));
        }
    }
    return basis;
}

QSeries hecke_operator(const QSeries& f, int weight, unsigned long m,
                       std::optional<std::size_t> out_trunc) {
    if (m == 0) throw domain_error("Hecke operator index must be positive");
    const std::size_t n_in = f.trunc_order();
    const std::size_t n_out = out_trunc.value_or(n_in / m);
    if (n_out * m > n_in || n_out < 1) {
        throw truncation_error("T_" + std::to_string(m) + " to order " +
                               std::to_string(std::max<std::size_t>(n_out, 1)) +
                               " requires input truncation >= " +
                               std::to_string(m * std::max<std::size_t>(n_out, 1)) + ", have " +
                               std::to_string(n_in));
    }
    std::vector<mpq_class> c(n_out + 1);
    mpz_class p;
    c[0] = mpq_class(divisor_power_sum(m, static_cast<unsigned>(weight - 1))) * f[0];
    for (std::size_t n = 1; n <= n_out; ++n) {
        const unsigned long g = std::gcd(static_cast<unsigned long>(n), m);
        mpq_class acc = 0;
        for (unsigned long d = 1; d <= g; ++d) {
            if (g % d != 0) continue;
            mpz_ui_pow_ui(p.get_mpz_t(), d, static_cast<unsigned long>(weight - 1));
            acc += mpq_class(p) * f[m * n / (d * d)];
        }
        c[n] = acc;
    }
    return QSeries(std::move(c));
}

QSeries hecke_operator(const CuspForm& f, unsigned long m, std::optional<std::size_t> out_trunc) {
    if (!f.is_rational()) throw domain_error("hecke_operator(CuspForm) needs rational coefficients");
    return hecke_operator(f.series(), f.weight(), m, out_trunc);
}

std::vector<CuspForm> eigenforms(int k, std::size_t trunc) {
    const int dim = cusp_dimension(k);
    std::vector<CuspForm> out;
    if (dim == 0) return out;
    if (dim > 2) {
        throw domain_error("exact eigenforms limited to dim S_k <= 2 (k = " + std::to_string(k) +
                           " has dim " + std::to_string(dim) + ")");
    }
    const std::string tag = "eigen_k" + std::to_string(k);
    const std::size_t work = std::max<std::size_t>(trunc, 2 * static_cast<std::size_t>(dim));
    const std::vector<QSeries> basis = miller_basis(k, work);
    if (dim == 1) {
        out.emplace_back(k, 1, basis[0].truncated(trunc), tag);
        return out;
    }
    // T_2 in the echelon basis: column j holds the q^1, q^2 coefficients of T_2 b_j.
    mpq_class m[2][2];
    for (int j = 0; j < 2; ++j) {
        const QSeries t = hecke_operator(basis[j], k, 2, 2);
        m[0][j] = t[1];
        m[1][j] = t[2];
    }
    const mpq_class trace = m[0][0] + m[1][1];
    const mpq_class det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const mpq_class disc = trace * trace - 4 * det;
    if (disc <= 0) throw domain_error("T_2 spectrum is not real and simple");
    mpq_class root_mult;
    mpz_class radicand;
    extract_square_root(disc, root_mult, radicand);
    if (radicand == 1) throw domain_error("rational split two-dimensional eigenspace not handled");
    // f = b_1 + lambda b_2 with lambda = (trace +/- root_mult sqrt D) / 2 = a(2)
    const mpq_class lam_a = trace / 2;
    const mpq_class lam_b = root_mult / 2;
    const QSeries b1 = basis[0].truncated(std::min(trunc, basis[0].trunc_order()));
    const QSeries b2 = basis[1].truncated(b1.trunc_order());
    for (int sign : {1, -1}) {
        const QSeries rational = qs_add(b1, qs_scale(b2, lam_a));
        const QSeries surd = qs_scale(b2, sign * lam_b);
        out.emplace_back(k, 1, rational, surd, radicand, tag + (sign > 0 ? "_plus" : "_minus"));
    }
    return out;
}

void write_form(std::ostream& out, const CuspForm& f) {
    out << "weight " << f.weight() << " level " << f.level() << " trunc " << f.trunc_order();
    if (!f.is_rational()) out << " sqrt " << f.radicand().get_str();
    out << '\n';
    for (std::size_t n = 0; n <= f.trunc_order(); ++n) {
        out << f.series()[n].get_str();
        if (!f.is_rational()) out << ' ' << f.surd()[n].get_str();
        out << '\n';
    }
}

CuspForm read_form(std::istream& in, std::string id) {
    std::string header;
    if (!std::getline(in, header)) throw config_error("empty form file");
    std::istringstream hs(header);
    std::string w, l, t, sq;
    int weight = 0, level = 0;
    std::size_t trunc = 0;
    if (!(hs >> w >> weight >> l >> level >> t >> trunc) || w != "weight" || l != "level" ||
        t != "trunc") {
        throw config_error("malformed form header: " + header);
    }
    mpz_class radicand = 0;
    if (hs >> sq) {
        std::string d;
        if (sq != "sqrt" || !(hs >> d)) throw config_error("malformed form header: " + header);
        radicand = mpz_class(d);
    }
    std::vector<mpq_class> a(trunc + 1), b(trunc + 1);
    std::string line;
    for (std::size_t n = 0; n <= trunc; ++n) {
        if (!std::getline(in, line)) throw config_error("form file ends before trunc");
        std::istringstream ls(line);
        std::string x, y;
        if (!(ls >> x)) throw config_error("missing coefficient at n = " + std::to_string(n));
        a[n] = mpq_class(x);
        if (radicand != 0) {
            if (!(ls >> y)) throw config_error("missing surd coefficient at n = " + std::to_string(n));
            b[n] = mpq_class(y);
        }
    }
    return CuspForm(weight, level, QSeries(std::move(a)), QSeries(std::move(b)), radicand,
                    std::move(id));
}

}  // namespace shiftconv
