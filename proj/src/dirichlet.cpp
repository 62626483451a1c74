#include "shiftconv/dirichlet.hpp"

#include "shiftconv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace shiftconv {

namespace {

std::vector<double> shifted_doubles(const CuspForm& f, unsigned r, std::size_t trunc) {
    const ShiftedSeq seq = shifted_products(f, r, trunc);
    std::vector<double> c(trunc);
    for (std::size_t n = 1; n <= trunc; ++n) c[n - 1] = seq.c(n).to_double();
    return c;
}

cplx truncated_sum(const std::vector<double>& c, unsigned r, cplx s) {
    cplx acc = 0.0;
    const double half_r = 0.5 * r;
    // summed from the small tail terms upwards
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0.0) continue;
        acc += c[i] * std::exp(-s * std::log(static_cast<double>(i + 1) + half_r));
    }
    return acc;
}

// C with |a(n)| <= C n^{e} over the stored range, doubled.
double empirical_constant(const CuspForm& f, double exponent) {
    double best = 0.0;
    for (std::size_t n = 1; n <= f.trunc_order(); ++n) {
        best = std::max(best, std::abs(f.coefficient_double(n)) / std::pow(double(n), exponent));
    }
    return best == 0.0 ? 1.0 : 2.0 * best;
}

}  // namespace

SeriesEval d_series(const CuspForm& f, unsigned r, cplx s, std::size_t trunc, TailMode mode) {
    const double k = f.weight();
    const double sigma = s.real();
    if (mode == TailMode::require_bound && sigma <= k) {
        throw domain_error("d_series with a tail bound needs Re(s) > k");
    }
    SeriesEval out;
    out.trunc = trunc;
    const std::vector<double> c = shifted_doubles(f, r, trunc);
    out.value = truncated_sum(c, r, s);

    const double n0 = static_cast<double>(trunc) + 0.5 * r;
    // (n + r)^k <= rho (n + r/2)^k for n > N
    const double rho = std::pow(1.0 + r / (2.0 * trunc + 2.0 + r), k);
    if (sigma > k + 1.0) {
        // |c_n| <= C^2 n^{k/2} (n+r)^{k/2} <= C^2 rho (n + r/2)^k, then an
        // integral comparison for the decreasing tail.
        const double cst = f.growth_const().get_d();
        out.tail_bound = cst * cst * rho * std::pow(n0, k - sigma + 1.0) / (sigma - k - 1.0);
        out.kind = TailKind::rigorous;
    } else if (sigma > k) {
        // |a(n)| <~ C' n^{(k-1)/2 + eps} with eps = (sigma - k) / 4.
        const double eps = 0.25 * (sigma - k);
        const double cst = empirical_constant(f, 0.5 * (k - 1.0) + eps);
        const double expo = k - 1.0 + 2.0 * eps - sigma;  // < -1
        const double rho_h = std::pow(1.0 + r / (2.0 * trunc + 2.0 + r), k - 1.0 + 2.0 * eps);
        out.tail_bound = cst * cst * rho_h * std::pow(n0, expo + 1.0) / (-(expo + 1.0));
        out.kind = TailKind::heuristic;
    } else {
        out.tail_bound = std::numeric_limits<double>::infinity();
        out.kind = TailKind::unbounded;
    }
    return out;
}

cplx d_series_derivative(const CuspForm& f, unsigned r, cplx s, std::size_t trunc) {
    const std::vector<double> c = shifted_doubles(f, r, trunc);
    cplx acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        const double lg = std::log(static_cast<double>(i + 1) + 0.5 * r);
        acc -= c[i] * lg * std::exp(-s * lg);
    }
    return acc;
}

cplx dirichlet_polynomial(const SupportedSeq& c, cplx s) {
    cplx acc = 0.0;
    for (const auto& [n, value] : c.entries()) {
        acc += value.get_d() * std::exp(-s * std::log(static_cast<double>(n) + 0.5 * c.shift()));
    }
    return acc;
}

namespace {

struct ShiftedKernel {
    std::vector<double> c;  // c_n for n = 1..N
    unsigned r;
    cplx exponent;          // s + k - 2

    cplx operator()(double y) const {
        if (y <= 0.0) return 0.0;
        // sum_n c_n e^{-2 pi (2n + r) y}, with ratio e^{-4 pi y}
        const double ratio = std::exp(-4.0 * pi * y);
        double wave = std::exp(-2.0 * pi * (2.0 + r) * y);
        double acc = 0.0;
        for (double cn : c) {
            if (wave == 0.0) break;
            acc += cn * wave;
            wave *= ratio;
        }
        return acc * std::exp(exponent * std::log(y));
    }
};

// Bound on int_Y^inf y^{a-1} |A_r(y)| dy with a = Re(s + k - 1).
double exponential_tail(const std::vector<double>& c, unsigned r, double a, double y_cut) {
    double bound = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0.0) continue;
        const double lambda = 2.0 * pi * (2.0 * (i + 1) + r);
        const double rate = lambda - std::max(0.0, a - 1.0) / y_cut;
        if (rate <= 0.0) return std::numeric_limits<double>::infinity();
        // y^{a-1} <= Y^{a-1} exp((a-1)(y-Y)/Y) for y >= Y
        bound += std::abs(c[i]) * std::pow(y_cut, a - 1.0) * std::exp(-lambda * y_cut) / rate;
    }
    return bound;
}

}  // namespace

UnfoldingResult unfolding_check(const UnfoldingJob& job) {
    if (job.form == nullptr) throw config_error("unfolding job without a form");
    const CuspForm& f = *job.form;
    if (!(job.s.real() > 1.0)) throw domain_error("unfolding needs Re(s) > 1");
    if (f.weight() <= 2) throw domain_error("unfolding needs k > 2");
    if (!(job.quad_tol > 0.0)) throw config_error("quadrature tolerance must be positive");

    const double k = f.weight();
    const ShiftedKernel kernel{shifted_doubles(f, job.r, job.trunc), job.r, job.s + k - 2.0};
    const cplx alpha = job.s + k - 1.0;

    UnfoldingResult out;
    out.rhs = gamma_complex(alpha) * std::exp(-alpha * std::log(4.0 * pi)) *
              truncated_sum(kernel.c, job.r, alpha);

    const bool all_zero =
        std::all_of(kernel.c.begin(), kernel.c.end(), [](double x) { return x == 0.0; });
    if (all_zero) {
        out.lhs = 0.0;
        out.rel_err = 0.0;
        return out;
    }

    const QuadResult inner = integrate_adaptive(kernel, 0.0, 1.0, 0.1 * job.quad_tol);
    // Doubling search for Y with tail <= quad_tol/10 of the integral estimate.
    double y_cut = 2.0;
    const double scale = std::abs(inner.value);
    while (exponential_tail(kernel.c, job.r, alpha.real(), y_cut) > 0.1 * job.quad_tol * scale) {
        y_cut *= 2.0;
        if (y_cut > 1e6) throw convergence_error("could not certify the exponential tail");
    }
    // [1, Y] in doubling blocks; each block is integrated adaptively.
    std::vector<Interval> partition = inner.partition;
    cplx outer_value = 0.0;
    double outer_err = 0.0;
    for (double lo = 1.0; lo < y_cut; lo *= 2.0) {
        const double hi = std::min(2.0 * lo, y_cut);
        const QuadResult block = integrate_adaptive(kernel, lo, hi, 0.1 * job.quad_tol,
                                                    1e-3 * job.quad_tol * scale);
        outer_value += block.value;
        outer_err += block.error_estimate;
        partition.insert(partition.end(), block.partition.begin(), block.partition.end());
    }
    out.lhs = inner.value + outer_value;
    out.quad_error = inner.error_estimate + outer_err +
                     exponential_tail(kernel.c, job.r, alpha.real(), y_cut);
    if (out.quad_error > job.quad_tol * std::abs(out.lhs)) {
        throw convergence_error("unfolding quadrature did not reach the requested tolerance");
    }
    out.y_max = y_cut;
    out.partition = std::move(partition);
    out.rel_err = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
    return out;
}

Unfolding2dResult unfolding_check_2d(const UnfoldingJob& job, std::size_t x_nodes) {
    if (job.form == nullptr) throw config_error("unfolding job without a form");
    const CuspForm& f = *job.form;
    if (x_nodes <= 2 * (job.trunc + job.r)) {
        throw domain_error("x grid undersampled: need x_nodes > 2(N + r) = " +
                           std::to_string(2 * (job.trunc + job.r)));
    }
    if (job.trunc + job.r > f.trunc_order()) {
        throw truncation_error("unfolding needs trunc >= N + r");
    }
    const UnfoldingResult base = unfolding_check(job);
    Unfolding2dResult out;
    out.lhs_orthogonality = base.lhs;
    if (base.lhs == 0.0) {
        out.lhs_grid = 0.0;
        return out;
    }
    const std::size_t top = job.trunc + job.r;
    std::vector<double> a(top + 1);
    for (std::size_t n = 1; n <= top; ++n) a[n] = f.coefficient_double(n);
    const double k = f.weight();
    const cplx exponent = job.s + k - 2.0;
    const unsigned r = job.r;

    // f truncated at N + r: the e(rx)-average of |f|^2 keeps exactly the pairs
    // (n, n + r) with n <= N.
    auto integrand = [&a, x_nodes, exponent, r, top](double y) -> cplx {
        if (y <= 0.0) return 0.0;
        const double decay = std::exp(-2.0 * pi * y);
        cplx avg = 0.0;
        for (std::size_t j = 0; j < x_nodes; ++j) {
            const double x = static_cast<double>(j) / static_cast<double>(x_nodes);
            const cplx q = std::polar(decay, 2.0 * pi * x);
            cplx value = 0.0;
            for (std::size_t n = top; n >= 1; --n) value = (value + a[n]) * q;
            avg += std::polar(1.0, 2.0 * pi * r * x) * std::norm(value);
        }
        avg /= static_cast<double>(x_nodes);
        return avg * std::exp(exponent * std::log(y));
    };
    out.lhs_grid = integrate_on(integrand, base.partition);
    out.rel_err = std::abs(out.lhs_grid - out.lhs_orthogonality) / std::abs(out.lhs_orthogonality);
    return out;
}

cplx gamma_integral_numeric(cplx a, double lambda, double rel_tol) {
    auto f = [a, lambda](double y) -> cplx {
        if (y <= 0.0) return 0.0;
        return std::exp((a - 1.0) * std::log(y) - lambda * y);
    };
    // The integrand peaks near (Re a - 1)/lambda; cut where it is negligible.
    const double peak = std::max(1.0, (a.real() - 1.0) / lambda);
    double hi = 2.0 * peak;
    while ((a.real() - 1.0) * std::log(hi) - lambda * hi >
           (a.real() - 1.0) * std::log(peak) - lambda * peak - 60.0) {
        hi *= 1.5;
    }
    cplx total = 0.0;
    double lo = 0.0;
    for (double edge : {0.25 * peak, peak, 2.0 * peak, hi}) {
        if (edge <= lo) continue;
        total += integrate_adaptive(f, lo, edge, rel_tol).value;
        lo = edge;
    }
    return total;
}

void write_unfolding_csv_header(std::ostream& out) {
    out << "form_id,r,s_re,s_im,N,lhs_re,lhs_im,rhs_re,rhs_im,rel_err\n";
}

void write_unfolding_csv_row(std::ostream& out, const std::string& form_id, unsigned r, cplx s,
                             std::size_t trunc, const UnfoldingResult& res) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s,%u,%.17g,%.17g,%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  form_id.c_str(), r, s.real(), s.imag(), trunc, res.lhs.real(), res.lhs.imag(),
                  res.rhs.real(), res.rhs.imag(), res.rel_err);
    out << buf;
}

}  // namespace shiftconv
