#pragma once

#include "corrseq/alphabet.hpp"
#include "corrseq/circle.hpp"
#include "corrseq/cocycle_fwd.hpp"

namespace corrseq {

// y_i = phi_t(s0 + (i-1) alpha), where phi_t is -1 on [0,t) and +1 elsewhere.
// With t = alpha this is the classical Sturmian coding of the rotation.
Block rotation_itinerary(const CircleNumber& alpha, const CircleNumber& t,
                         const CircleNumber& s0, std::size_t n);

// Z2-forward itinerary of (s0, kappa0) under the cocycle extension:
// x_m = kappa0 * prod_{i=0}^{m-2} phi(s0 + i alpha); the empty product for
// m = 1 is 1, so x_1 = kappa0.
Block cocycle_itinerary(const StepCocycle& phi, const CircleNumber& alpha,
                        const CircleNumber& s0, int kappa0, std::size_t n);

// mu(1..n) over {1, 0, -1}, by a linear sieve. n up to 10^9 (hard cap).
Block mobius_block(std::size_t n);

// Pairwise products: out_n = x_n * x_{n+1}; output length |x|-1. Requires
// |x| >= 2.
Block product_code(const Block& x);

// out_n = (3/4) x_n + (1/4) x_n x_{n+1} over {1, 1/2, -1/2, -1}; the sign of
// out_n recovers x_n. Requires |x| >= 2 and symbols in {-1, +1}.
Block signed_product_code(const Block& x);

// Sequence factories (deterministic producers).
SymbolicSequence sturmian_sequence(const CircleNumber& alpha, const CircleNumber& t,
                                   const CircleNumber& s0, std::size_t limit);
SymbolicSequence cocycle_sequence(const StepCocycle& phi, const CircleNumber& alpha,
                                  const CircleNumber& s0, int kappa0, std::size_t limit);
SymbolicSequence mobius_sequence(std::size_t limit);
SymbolicSequence periodic_sequence(const Block& word, std::size_t limit);
SymbolicSequence constant_sequence(const GaussianRational& value, std::size_t limit);
// Materialized block as a sequence; the limit is the block length.
SymbolicSequence block_sequence(const Block& b);

} // namespace corrseq
