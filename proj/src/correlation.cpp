#include "corrseq/correlation.hpp"

#include <algorithm>
#include <cmath>

namespace corrseq {

GaussianRational block_corr_values(std::span<const GaussianRational> a,
                                   std::span<const GaussianRational> b) {
    if (a.size() != b.size()) throw PreconditionError("block_corr: length mismatch");
    if (a.empty()) throw PreconditionError("block_corr: empty blocks");
    const Rational n(static_cast<unsigned long>(a.size()));
    GaussianRational prod_sum, a_sum, b_conj_sum;
    for (std::size_t i = 0; i < a.size(); ++i) {
        prod_sum += a[i] * b[i].conj();
        a_sum += a[i];
        b_conj_sum += b[i].conj();
    }
    Rational inv = 1 / n;
    return prod_sum * inv - (a_sum * inv) * (b_conj_sum * inv);
}

GaussianRational block_corr(const Block& a, const Block& b) {
    if (a.size() != b.size()) throw PreconditionError("block_corr: length mismatch");
    if (a.empty()) throw PreconditionError("block_corr: empty blocks");
    // Accumulate per symbol-pair counts; alphabets are tiny, blocks are long.
    const Alphabet& A = a.alphabet();
    const Alphabet& B = b.alphabet();
    std::vector<long> pair_count(A.size() * B.size(), 0);
    for (std::size_t i = 1; i <= a.size(); ++i)
        ++pair_count[a.index_at(i) * B.size() + b.index_at(i)];
    GaussianRational prod_sum, a_sum, b_conj_sum;
    for (std::size_t ia = 0; ia < A.size(); ++ia) {
        for (std::size_t ib = 0; ib < B.size(); ++ib) {
            long c = pair_count[ia * B.size() + ib];
            if (!c) continue;
            Rational cc(c);
            const GaussianRational& va = A.value(static_cast<std::uint8_t>(ia));
            const GaussianRational& vb = B.value(static_cast<std::uint8_t>(ib));
            prod_sum += (va * vb.conj()) * cc;
            a_sum += va * cc;
            b_conj_sum += vb.conj() * cc;
        }
    }
    Rational inv = Rational(1) / Rational(static_cast<unsigned long>(a.size()));
    return prod_sum * inv - (a_sum * inv) * (b_conj_sum * inv);
}

std::vector<CorrPoint> corr_curve(const SymbolicSequence& x, const SymbolicSequence& y,
                                  const std::vector<std::size_t>& n_list) {
    if (n_list.empty()) throw PreconditionError("corr_curve: empty n grid");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i - 1] >= n_list[i])
            throw PreconditionError("corr_curve: n grid must be strictly increasing");
    if (n_list.front() < 1) throw PreconditionError("corr_curve: n must be >= 1");
    std::size_t n_max = n_list.back();
    if (n_max > x.limit() || n_max > y.limit())
        throw PreconditionError("corr_curve: n exceeds a sequence materialization limit");
    Block bx = x.prefix(n_max);
    Block by = y.prefix(n_max);
    const Alphabet& A = bx.alphabet();
    const Alphabet& B = by.alphabet();
    std::vector<long> pair_count(A.size() * B.size(), 0);
    std::vector<CorrPoint> out;
    out.reserve(n_list.size());
    std::size_t next = 0;
    for (std::size_t i = 1; i <= n_max; ++i) {
        ++pair_count[bx.index_at(i) * B.size() + by.index_at(i)];
        if (next < n_list.size() && n_list[next] == i) {
            GaussianRational prod_sum, a_sum, b_conj_sum;
            for (std::size_t ia = 0; ia < A.size(); ++ia) {
                for (std::size_t ib = 0; ib < B.size(); ++ib) {
                    long c = pair_count[ia * B.size() + ib];
                    if (!c) continue;
                    Rational cc(c);
                    const GaussianRational& va = A.value(static_cast<std::uint8_t>(ia));
                    const GaussianRational& vb = B.value(static_cast<std::uint8_t>(ib));
                    prod_sum += (va * vb.conj()) * cc;
                    a_sum += va * cc;
                    b_conj_sum += vb.conj() * cc;
                }
            }
            Rational inv = Rational(1) / Rational(static_cast<unsigned long>(i));
            out.push_back({i, prod_sum * inv - (a_sum * inv) * (b_conj_sum * inv)});
            ++next;
        }
    }
    return out;
}

std::vector<std::size_t> log_grid(std::size_t N, int points) {
    if (N < 1) throw PreconditionError("log_grid: N must be >= 1");
    if (points < 1) throw PreconditionError("log_grid: points must be >= 1");
    std::vector<std::size_t> grid;
    double logN = std::log(static_cast<double>(N));
    for (int j = 0; j < points; ++j) {
        double f = (points == 1) ? 1.0 : static_cast<double>(j) / (points - 1);
        auto n = static_cast<std::size_t>(std::llround(std::exp(f * logN)));
        n = std::max<std::size_t>(1, std::min(n, N));
        if (grid.empty() || n > grid.back()) grid.push_back(n);
    }
    if (grid.back() != N) grid.push_back(N);
    return grid;
}

double dbar_estimate(const SymbolicSequence& x, const SymbolicSequence& y, std::size_t N,
                     int grid_points) {
    if (N < 1) throw PreconditionError("dbar_estimate: N must be >= 1");
    N = std::min({N, x.limit(), y.limit()});
    Block bx = x.prefix(N);
    Block by = y.prefix(N);
    const Alphabet& A = bx.alphabet();
    const Alphabet& B = by.alphabet();
    // |a - b| per symbol pair, precomputed.
    std::vector<double> dist(A.size() * B.size());
    for (std::size_t ia = 0; ia < A.size(); ++ia)
        for (std::size_t ib = 0; ib < B.size(); ++ib) {
            GaussianRational d = A.value(static_cast<std::uint8_t>(ia)) -
                                 B.value(static_cast<std::uint8_t>(ib));
            dist[ia * B.size() + ib] = std::sqrt(rational_to_double(d.norm2()));
        }
    std::vector<std::size_t> grid = log_grid(N, grid_points);
    double best = 0;
    double sum = 0;
    std::size_t next = 0;
    for (std::size_t i = 1; i <= N; ++i) {
        sum += dist[bx.index_at(i) * B.size() + by.index_at(i)];
        if (next < grid.size() && grid[next] == i) {
            best = std::max(best, sum / static_cast<double>(i));
            ++next;
        }
    }
    return best;
}

std::string classify_corr_curve(const std::vector<CorrPoint>& curve, double tol) {
    if (curve.empty()) throw PreconditionError("classify_corr_curve: empty curve");
    std::size_t start = curve.size() - (curve.size() + 2) / 3;
    bool all_below = true, all_above = true;
    for (std::size_t i = start; i < curve.size(); ++i) {
        double mag = std::abs(curve[i].value.to_complex());
        if (mag >= tol) all_below = false;
        if (mag <= tol) all_above = false;
    }
    if (all_below) return "uncorrelated-evidence";
    if (all_above) return "strong-evidence";
    return "weak-evidence";
}

} // namespace corrseq
