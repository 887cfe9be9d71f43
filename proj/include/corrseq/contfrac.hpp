#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "corrseq/circle.hpp"
#include "corrseq/rng.hpp"

namespace corrseq {

struct Convergent {
    Integer p, q;
};

// Continued fraction data of alpha in (0,1): partial quotients a_1..a_K,
// convergents (p_k, q_k) for k = 0..K with p_0/q_0 = 0/1 and the usual
// recurrence q_k = a_k q_{k-1} + q_{k-2}, and zeta_k = q_k*alpha - p_k.
struct CFExpansion {
    CircleNumber alpha;
    std::vector<Integer> partial_quotients; // a_1..a_K
    std::vector<Convergent> convergents;    // index k = 0..K
    std::vector<BigFloat> zeta;             // index k = 0..K

    int depth() const { return static_cast<int>(partial_quotients.size()); }
    const Integer& q(int k) const { return convergents.at(static_cast<std::size_t>(k)).q; }
    const Integer& p(int k) const { return convergents.at(static_cast<std::size_t>(k)).p; }

    // Denominators q_1..q_K as a strictly increasing sequence.
    std::vector<Integer> q_sequence() const;
};

// Expands alpha to `depth` partial quotients.
//  - quadratic mode: exact integer PQa iteration, any depth;
//  - rational mode: Euclidean algorithm; throws ExpansionTerminated if the
//    expansion ends before `depth`;
//  - float mode: Euclidean algorithm on the exact dyadic value, valid as an
//    approximation of the underlying number while q_k^2 stays well below
//    2^precision.
CFExpansion cf_expand(const CircleNumber& alpha, int depth);

struct ConvergentBoundsRow {
    int k = 0;
    Integer q;
    bool recurrence_ok = true;
    bool zeta_bound_ok = true;   // |zeta_k| <= 1/q_{k+1}
    bool q_norm_bound_ok = true; // ||q_k alpha|| <= 1/q_{k+1}
    bool lower_bound_ok = true;  // ||q_{k-1} alpha|| >= 1/(2 q_k)
    bool minimality_ok = true;   // ||q_{k-1} alpha|| <= ||j alpha||, 0 < j < q_k
    bool exhaustive = false;     // minimality checked for every j (vs sampled)
    long checked_j = 0;
    double q_norm = 0;           // ||q_k alpha||
    double prev_norm = 0;        // ||q_{k-1} alpha||

    bool all_ok() const {
        return recurrence_ok && zeta_bound_ok && q_norm_bound_ok && lower_bound_ok &&
               minimality_ok;
    }
};

struct ConvergentBoundsReport {
    std::vector<ConvergentBoundsRow> rows;
    bool all_pass = true;
};

struct BoundsCheckOptions {
    Integer exhaustive_cap = 1000000; // check all j while q_k <= cap
    long samples_above_cap = 10000;   // random j per k above the cap
};

// Checks the standard convergent inequalities for each stored k. Requires
// depth >= 2. Comparisons are exact in exact mode and at mode precision in
// float mode. `rng` drives the sampled minimality checks above the cap.
ConvergentBoundsReport verify_convergent_bounds(const CFExpansion& cf, Rng& rng,
                                                const BoundsCheckOptions& opts = {});

// (1/N) sum_k exp(2*pi*i*(n*q_k*x + m*q_k*y)). Requires (n,m) != (0,0), a
// nonempty strictly increasing q_seq.
std::complex<double> weyl_pair_average(long n, long m, const CircleNumber& x,
                                       const CircleNumber& y,
                                       const std::vector<Integer>& q_seq);

// q*x mod 1 for each q, as doubles. Exact integer arithmetic for rational and
// float (dyadic) x; exact quadratic arithmetic otherwise.
std::vector<double> circle_multiples_mod1(const CircleNumber& x,
                                          const std::vector<Integer>& q_seq);

// Denominator helper: 1, 2, 3, 5, 8, ... (q_k of the golden mean).
std::vector<Integer> fibonacci_denominators(int count);

} // namespace corrseq
