#pragma once

#include <complex>
#include <span>
#include <vector>

#include "corrseq/alphabet.hpp"

namespace corrseq {

// corr(A, B) = (1/n) sum a_i conj(b_i) - ((1/n) sum a_i)((1/n) sum conj(b_i)),
// exact over Gaussian-rational symbols. Blocks must have equal nonzero length.
GaussianRational block_corr(const Block& a, const Block& b);

// Same formula on raw value spans (used by tests that shift alphabets).
GaussianRational block_corr_values(std::span<const GaussianRational> a,
                                   std::span<const GaussianRational> b);

struct CorrPoint {
    std::size_t n;
    GaussianRational value;
};

// corr(x_[1,n], y_[1,n]) for each n in n_list (strictly increasing, within
// both materialization limits). Single pass with prefix accumulators.
std::vector<CorrPoint> corr_curve(const SymbolicSequence& x, const SymbolicSequence& y,
                                  const std::vector<std::size_t>& n_list);

// Finite-scale proxy for the Besicovitch distance: max over a logarithmic
// grid of n <= N of (1/n) sum_{i<=n} |x_i - y_i|. A probe of the limsup, not
// the limit itself. Result in [0, 2].
double dbar_estimate(const SymbolicSequence& x, const SymbolicSequence& y, std::size_t N,
                     int grid_points = 50);

// Logarithmic grid of distinct integers in [1, N] (at most `points` values,
// always ending at N).
std::vector<std::size_t> log_grid(std::size_t N, int points);

// Evidence labels for a finite correlation curve: all of the last third below
// `tol` => "uncorrelated-evidence"; all above => "strong-evidence"; otherwise
// "weak-evidence". A heuristic over finite data, never a verdict about the
// asymptotic trichotomy.
std::string classify_corr_curve(const std::vector<CorrPoint>& curve, double tol);

} // namespace corrseq
