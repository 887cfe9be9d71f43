#pragma once

#include <optional>
#include <vector>

#include "corrseq/circle.hpp"
#include "corrseq/contfrac.hpp"

namespace corrseq {

// Piecewise-constant Z2-valued circle function, represented by its sorted
// jump points and its value just after 0. Arcs are half-open [a, b), the
// value flips at every jump, and the jump count is even (the value returns
// to itself around the circle). Coincident jump points cancel in pairs.
class StepCocycle {
public:
    // Constant function (+1 or -1), no jumps.
    static StepCocycle constant(int value = 1);

    // -1 on [0, t), +1 elsewhere. t = 0 gives the constant +1 function.
    static StepCocycle two_jump(const CircleNumber& t);

    // -1 exactly on the symmetric difference [0,t) XOR [u, u+t') (positively
    // oriented arcs), +1 elsewhere. Coincident endpoints cancel, so the
    // result has 4, 2 or 0 jumps.
    static StepCocycle four_jump(const CircleNumber& t, const CircleNumber& t_prime,
                                 const CircleNumber& u);

    // Value at s (right-continuous).
    int eval(const CircleNumber& s) const;

    // phi(s + delta) as a new cocycle.
    StepCocycle shifted(const CircleNumber& delta) const;

    // Pointwise product.
    StepCocycle operator*(const StepCocycle& other) const;

    // n-step cocycle phi^(n)(s) = prod_{j=0}^{n-1} phi(s + j alpha), built
    // exactly from the jump multiset {x - j alpha} with cancellation.
    // Requires n >= 1; guards against jump counts above 10^7.
    StepCocycle n_step(const CircleNumber& alpha, long n) const;

    // L1 distance to the constant 1, i.e. 2 * Leb{phi = -1}. Exact when the
    // jumps are exact; `l1_distance_to_one` reports at float precision.
    BigFloat l1_distance_to_one() const;
    QuadValue l1_distance_to_one_exact() const; // throws if any jump is float

    const std::vector<CircleNumber>& jumps() const { return jumps_; }
    int value_after_zero() const { return value_after_zero_; }
    bool is_constant() const { return jumps_.empty(); }

    bool operator==(const StepCocycle& o) const;

private:
    StepCocycle(std::vector<CircleNumber> sorted_jumps, int value_after_zero);

    // Sorts a jump multiset, cancels coincident points in pairs, and attaches
    // the given value just after 0.
    static StepCocycle assemble(std::vector<CircleNumber> points, int value_after_zero);

    std::vector<CircleNumber> jumps_; // strictly sorted in [0,1), even count
    int value_after_zero_ = 1;
};

enum class ErgodicityStatus { ErgodicCertified, NonErgodicityConsistent, Inconclusive };

std::string to_string(ErgodicityStatus s);

struct ErgodicityEvidenceRow {
    int k = 0;                  // index along n_seq / convergents
    Integer n;                  // the step count (e.g. q_k)
    double rotation_norm = 0;   // ||n alpha||
    double l1 = 0;              // L1(phi^(n), 1)
    double min_seq[4] = {0, 0, 0, 0}; // four-jump minima (criterion only)
    double min_pair = 0;        // min(||q(t-t')||, ||q(t+t')||) (criterion only)
};

struct ErgodicityVerdict {
    ErgodicityStatus status = ErgodicityStatus::Inconclusive;
    std::vector<ErgodicityEvidenceRow> evidence;
    double gamma = 0; // observed lower bound on the certifying sequence
    int burn_in = 3;
    std::string detail;
};

// L1 criterion: if ||n alpha|| -> 0 along n_seq while L1(phi^(n), 1) stays
// >= threshold, the extension cannot be a coboundary -> ergodic-certified.
// If the L1 values themselves tend to 0, the evidence is consistent with
// non-ergodicity (not a proof); otherwise inconclusive.
ErgodicityVerdict ergodicity_l1_test(const StepCocycle& phi, const CircleNumber& alpha,
                                     const std::vector<Integer>& n_seq, double threshold);

// Four-jump necessary conditions: for the four discontinuities x_i of the
// symmetric-difference cocycle, non-ergodicity forces
// min_{i' != i} ||q_k (x_i - x_{i'})|| -> 0 for every i. If some i keeps its
// minimum >= gamma_tol for all k past the burn-in, the contrapositive
// certifies ergodicity; otherwise the test is inconclusive (the condition is
// necessary, not sufficient).
ErgodicityVerdict four_jump_criterion(const CircleNumber& t, const CircleNumber& t_prime,
                                      const CircleNumber& u, const CircleNumber& alpha,
                                      int depth, double gamma_tol = 1e-3);

struct DensityPairStats {
    struct WeylEntry {
        long n, m;
        double magnitude;
    };
    std::vector<WeylEntry> weyl;     // |weyl_pair_average(n, m, t-t', t+t')|
    double max_weyl_magnitude = 0;
    double box_discrepancy = 0;      // max_box |count/N - area| on a grid
    int grid = 0;
    long points = 0;
};

// Equirepartition statistics of {(q_k (t-t'), q_k (t+t'))}_{k<N} in the
// 2-torus: Weyl sums over a small frequency grid plus a box-count
// discrepancy estimate.
DensityPairStats density_pair_test(const CircleNumber& t, const CircleNumber& t_prime,
                                   const std::vector<Integer>& q_seq, long N);

} // namespace corrseq
