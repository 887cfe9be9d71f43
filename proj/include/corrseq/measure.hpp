#pragma once

#include <map>
#include <optional>
#include <unordered_map>

#include "corrseq/alphabet.hpp"
#include "corrseq/circle.hpp"

namespace corrseq {

// Keys of weight maps are byte strings of symbol indices; the key length is
// the order of the level it lives in.
using WeightMap = std::unordered_map<std::string, QuadValue>;
using CountMap = std::unordered_map<std::string, long>;

// Sub-probabilistic block frequencies of one finite word:
// mu_B(D) = #occurrences of D / |B|, so the total mass is (n-m+1)/n.
struct EmpiricalMeasure {
    int order = 1;
    std::size_t alphabet_size = 0;
    std::size_t source_length = 0;
    std::unordered_map<std::string, Rational> weights;

    Rational total() const;
};

EmpiricalMeasure empirical_measure(const Block& b, int m);

// Core used for segments and pair rows: counts length-m windows of
// idx[0..len), weights divided by `denominator` (usually len).
EmpiricalMeasure empirical_measure_indices(const std::uint8_t* idx, std::size_t len,
                                           std::size_t alphabet_size, int m,
                                           std::size_t denominator);

// Empirical measure of the two-row word ((x_i, y_i)) over the pair alphabet
// of size |Kx| * |Ky| (pair index = x_i * |Ky| + y_i). Lengths must agree.
EmpiricalMeasure empirical_measure_pair(const Block& x, const Block& y, int m);

// Shift-invariant measure given by one consistent cylinder family per order
// 1..max_order: each level sums to 1 and marginalizes both ways onto the
// previous level. Weights are exact (rational or quadratic-irrational).
class BlockMeasure {
public:
    BlockMeasure(std::size_t alphabet_size, std::optional<Alphabet> alphabet,
                 std::vector<WeightMap> levels);

    // Frequencies of the two-sided periodic sequence with the given period
    // word; exact rationals with denominator |word|.
    static BlockMeasure from_periodic_word(const Block& word, int max_order);

    // Convex combination; alphabets and orders must be compatible, the
    // weights positive with total 1.
    static BlockMeasure mixture(const std::vector<std::pair<Rational, BlockMeasure>>& parts);

    // Cylinder measure of the rotation coding: the probability of a +-1 word
    // is the length of the arc of starting points producing it. Exact for
    // exact alpha, t (weights then live in Q(sqrt(d))).
    static BlockMeasure rotation_coding_measure(const CircleNumber& alpha,
                                                const CircleNumber& t, int max_order);

    std::size_t alphabet_size() const { return alphabet_size_; }
    const std::optional<Alphabet>& alphabet() const { return alphabet_; }
    int max_order() const { return static_cast<int>(levels_.size()); }
    const WeightMap& level(int m) const;
    QuadValue prob(const std::string& key) const;

    // Integrals of the first-symbol value function (requires an alphabet).
    QuadComplex symbol_mean() const;     // int x_1
    QuadValue symbol_abs2_mean() const;  // int |x_1|^2

    // Checks positivity, per-level totals, and two-sided consistency; throws
    // PreconditionError describing the first violation.
    void validate() const;

private:
    std::size_t alphabet_size_;
    std::optional<Alphabet> alphabet_;
    std::vector<WeightMap> levels_; // levels_[m-1] holds order-m weights
};

// d^(m): total variation style sum over all free blocks of |mu(D) - nu(D)|.
// Missing keys count as zero. Orders and alphabet sizes must match.
QuadValue dm_distance(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu);
QuadValue dm_distance(const EmpiricalMeasure& mu, const BlockMeasure& nu);
QuadValue dm_distance(const BlockMeasure& mu, const BlockMeasure& nu, int m);

} // namespace corrseq
