#include "shiftconv/quadrature.hpp"

#include "shiftconv/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace shiftconv {

namespace {

// Kronrod abscissae (descending, last is the centre) and weights; the Gauss
// 7-point rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    Interval iv;
    std::complex<double> kronrod;
    double error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

Piece kronrod15(const ComplexIntegrand& f, Interval iv) {
    const double centre = 0.5 * (iv.lo + iv.hi);
    const double half = 0.5 * (iv.hi - iv.lo);
    const std::complex<double> fc = f(centre);
    std::complex<double> k = wgk[7] * fc;
    std::complex<double> g = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const std::complex<double> sum = f(centre - dx) + f(centre + dx);
        k += wgk[j] * sum;
        if (j % 2 == 1) g += wg[j / 2] * sum;
    }
    k *= half;
    g *= half;
    return {iv, k, std::abs(k - g)};
}

}  // namespace

QuadResult integrate_adaptive(const ComplexIntegrand& f, double lo, double hi, double rel_tol,
                              double abs_tol, std::size_t max_intervals) {
    std::priority_queue<Piece> heap;
    Piece first = kronrod15(f, {lo, hi});
    std::complex<double> total = first.kronrod;
    double err = first.error;
    heap.push(first);
    while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (heap.size() >= max_intervals) {
            throw convergence_error("adaptive quadrature did not reach tolerance");
        }
        const Piece worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.iv.lo + worst.iv.hi);
        const Piece left = kronrod15(f, {worst.iv.lo, mid});
        const Piece right = kronrod15(f, {mid, worst.iv.hi});
        total += left.kronrod + right.kronrod - worst.kronrod;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    QuadResult out;
    std::vector<Piece> pieces;
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        heap.pop();
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.iv.lo < b.iv.lo; });
    // Re-sum in interval order; the running total above accumulates rounding.
    out.value = 0.0;
    out.error_estimate = 0.0;
    for (const auto& p : pieces) {
        out.value += p.kronrod;
        out.error_estimate += p.error;
        out.partition.push_back(p.iv);
    }
    return out;
}

std::complex<double> integrate_on(const ComplexIntegrand& f, const std::vector<Interval>& partition) {
    // 15 nodes per interval, index = 15 * interval + node
    const long total_nodes = static_cast<long>(partition.size()) * 15;
    std::vector<std::complex<double>> values(static_cast<std::size_t>(total_nodes));
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total_nodes; ++idx) {
        const Interval& iv = partition[static_cast<std::size_t>(idx / 15)];
        const int node = static_cast<int>(idx % 15);
        const double centre = 0.5 * (iv.lo + iv.hi);
        const double half = 0.5 * (iv.hi - iv.lo);
        double x = centre;
        if (node < 7) x = centre - half * xgk[node];
        else if (node < 14) x = centre + half * xgk[node - 7];
        values[static_cast<std::size_t>(idx)] = f(x);
    }
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        const double half = 0.5 * (partition[i].hi - partition[i].lo);
        std::complex<double> k = wgk[7] * values[15 * i + 14];
        for (int j = 0; j < 7; ++j) k += wgk[j] * (values[15 * i + j] + values[15 * i + 7 + j]);
        sum += half * k;
    }
    return sum;
}

}  // namespace shiftconv
