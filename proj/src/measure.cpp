#include "corrseq/measure.hpp"

#include <algorithm>

namespace corrseq {

Rational EmpiricalMeasure::total() const {
    Rational t(0);
    for (const auto& [k, w] : weights) t += w;
    return t;
}

EmpiricalMeasure empirical_measure_indices(const std::uint8_t* idx, std::size_t len,
                                           std::size_t alphabet_size, int m,
                                           std::size_t denominator) {
    if (m < 1) throw PreconditionError("empirical_measure: order must be >= 1");
    if (static_cast<std::size_t>(m) > len)
        throw PreconditionError("empirical_measure: order exceeds the block length");
    CountMap counts;
    std::string key(static_cast<std::size_t>(m), '\0');
    for (std::size_t i = 0; i + static_cast<std::size_t>(m) <= len; ++i) {
        for (int j = 0; j < m; ++j)
            key[static_cast<std::size_t>(j)] = static_cast<char>(idx[i + static_cast<std::size_t>(j)]);
        ++counts[key];
    }
    EmpiricalMeasure mu;
    mu.order = m;
    mu.alphabet_size = alphabet_size;
    mu.source_length = len;
    for (const auto& [k, c] : counts)
        mu.weights.emplace(k, Rational(c, static_cast<unsigned long>(denominator)));
    return mu;
}

EmpiricalMeasure empirical_measure(const Block& b, int m) {
    return empirical_measure_indices(b.indices().data(), b.size(), b.alphabet().size(), m,
                                     b.size());
}

EmpiricalMeasure empirical_measure_pair(const Block& x, const Block& y, int m) {
    if (x.size() != y.size())
        throw PreconditionError("empirical_measure_pair: row length mismatch");
    std::size_t L = x.alphabet().size(), R = y.alphabet().size();
    if (L * R > 255)
        throw PreconditionError("empirical_measure_pair: pair alphabet exceeds 255 symbols");
    std::vector<std::uint8_t> pair_idx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        pair_idx[i] = static_cast<std::uint8_t>(x.indices()[i] * R + y.indices()[i]);
    return empirical_measure_indices(pair_idx.data(), pair_idx.size(), L * R, m,
                                     pair_idx.size());
}

BlockMeasure::BlockMeasure(std::size_t alphabet_size, std::optional<Alphabet> alphabet,
                           std::vector<WeightMap> levels)
    : alphabet_size_(alphabet_size), alphabet_(std::move(alphabet)), levels_(std::move(levels)) {
    if (alphabet_ && alphabet_->size() != alphabet_size_)
        throw PreconditionError("BlockMeasure: alphabet size mismatch");
    if (levels_.empty()) throw PreconditionError("BlockMeasure: needs at least order 1");
    validate();
}

const WeightMap& BlockMeasure::level(int m) const {
    if (m < 1 || m > max_order())
        throw PreconditionError("BlockMeasure: order " + std::to_string(m) +
                                " outside stored range");
    return levels_[static_cast<std::size_t>(m - 1)];
}

QuadValue BlockMeasure::prob(const std::string& key) const {
    const WeightMap& lvl = level(static_cast<int>(key.size()));
    auto it = lvl.find(key);
    return it == lvl.end() ? QuadValue() : it->second;
}

void BlockMeasure::validate() const {
    for (int m = 1; m <= max_order(); ++m) {
        const WeightMap& lvl = levels_[static_cast<std::size_t>(m - 1)];
        QuadValue total;
        for (const auto& [key, w] : lvl) {
            if (key.size() != static_cast<std::size_t>(m))
                throw PreconditionError("BlockMeasure: key length != level order");
            for (char c : key)
                if (static_cast<std::size_t>(static_cast<unsigned char>(c)) >= alphabet_size_)
                    throw PreconditionError("BlockMeasure: key symbol out of range");
            if (w.sign() < 0) throw PreconditionError("BlockMeasure: negative weight");
            total += w;
        }
        if (!(total == QuadValue(Rational(1))))
            throw PreconditionError("BlockMeasure: order-" + std::to_string(m) +
                                    " weights sum to " + total.to_string() + ", expected 1");
    }
    for (int m = 1; m < max_order(); ++m) {
        const WeightMap& lo = levels_[static_cast<std::size_t>(m - 1)];
        const WeightMap& hi = levels_[static_cast<std::size_t>(m)];
        WeightMap right, left;
        for (const auto& [key, w] : hi) {
            right[key.substr(0, key.size() - 1)] += w;
            left[key.substr(1)] += w;
        }
        auto matches = [&](const WeightMap& proj, const char* side) {
            for (const auto& [key, w] : proj) {
                auto it = lo.find(key);
                QuadValue base = (it == lo.end()) ? QuadValue() : it->second;
                if (!(base == w))
                    throw PreconditionError(std::string("BlockMeasure: ") + side +
                                            " consistency fails at order " + std::to_string(m));
            }
            for (const auto& [key, w] : lo) {
                if (w.sign() != 0 && proj.find(key) == proj.end())
                    throw PreconditionError(std::string("BlockMeasure: ") + side +
                                            " consistency fails at order " + std::to_string(m));
            }
        };
        matches(right, "right");
        matches(left, "left");
    }
}

BlockMeasure BlockMeasure::from_periodic_word(const Block& word, int max_order) {
    if (word.empty()) throw PreconditionError("from_periodic_word: empty word");
    if (max_order < 1) throw PreconditionError("from_periodic_word: order must be >= 1");
    const std::size_t p = word.size();
    std::vector<WeightMap> levels;
    for (int m = 1; m <= max_order; ++m) {
        CountMap counts;
        std::string key(static_cast<std::size_t>(m), '\0');
        for (std::size_t i = 0; i < p; ++i) {
            for (int j = 0; j < m; ++j)
                key[static_cast<std::size_t>(j)] =
                    static_cast<char>(word.indices()[(i + static_cast<std::size_t>(j)) % p]);
            ++counts[key];
        }
        WeightMap lvl;
        for (const auto& [k, c] : counts)
            lvl.emplace(k, QuadValue(Rational(c, static_cast<unsigned long>(p))));
        levels.push_back(std::move(lvl));
    }
    return BlockMeasure(word.alphabet().size(), word.alphabet(), std::move(levels));
}

BlockMeasure BlockMeasure::mixture(const std::vector<std::pair<Rational, BlockMeasure>>& parts) {
    if (parts.empty()) throw PreconditionError("mixture: no components");
    Rational total(0);
    int order = parts.front().second.max_order();
    std::size_t asize = parts.front().second.alphabet_size();
    for (const auto& [w, comp] : parts) {
        if (w <= 0) throw PreconditionError("mixture: weights must be positive");
        total += w;
        order = std::min(order, comp.max_order());
        if (comp.alphabet_size() != asize)
            throw PreconditionError("mixture: component alphabets differ");
    }
    if (total != 1) throw PreconditionError("mixture: weights must sum to 1");
    std::vector<WeightMap> levels(static_cast<std::size_t>(order));
    for (int m = 1; m <= order; ++m) {
        WeightMap& lvl = levels[static_cast<std::size_t>(m - 1)];
        for (const auto& [w, comp] : parts)
            for (const auto& [key, p] : comp.level(m)) lvl[key] += p.scaled(w);
    }
    return BlockMeasure(asize, parts.front().second.alphabet(), std::move(levels));
}

BlockMeasure BlockMeasure::rotation_coding_measure(const CircleNumber& alpha,
                                                   const CircleNumber& t, int max_order) {
    if (max_order < 1)
        throw PreconditionError("rotation_coding_measure: order must be >= 1");
    // Work exactly throughout: float inputs are replaced by the exact dyadic
    // rationals they represent, so all arc lengths below are exact and the
    // cylinder family is consistent to the last bit.
    CircleNumber a_ex =
        alpha.is_exact() ? alpha : CircleNumber::of_rational(bigfloat_to_rational(*alpha.flt()));
    CircleNumber t_ex =
        t.is_exact() ? t : CircleNumber::of_rational(bigfloat_to_rational(*t.flt()));
    Alphabet pm = Alphabet::plus_minus_one();
    std::vector<WeightMap> levels;
    for (int m = 1; m <= max_order; ++m) {
        // Cylinder atoms: the circle partitioned by {-i alpha} and {t - i alpha}.
        std::vector<CircleNumber> cuts;
        CircleNumber shift; // i * alpha
        for (int i = 0; i < m; ++i) {
            cuts.push_back(-shift);
            cuts.push_back(t_ex - shift);
            shift = shift + a_ex;
        }
        std::sort(cuts.begin(), cuts.end(),
                  [](const CircleNumber& x, const CircleNumber& y) { return x.compare(y) < 0; });
        cuts.erase(std::unique(cuts.begin(), cuts.end(),
                               [](const CircleNumber& x, const CircleNumber& y) {
                                   return x.compare(y) == 0;
                               }),
                   cuts.end());
        WeightMap lvl;
        for (std::size_t a = 0; a < cuts.size(); ++a) {
            const CircleNumber& begin = cuts[a];
            const CircleNumber& end = (a + 1 < cuts.size()) ? cuts[a + 1] : cuts[0];
            QuadValue span_len = (*end.exact() - *begin.exact());
            if (span_len.sign() <= 0) span_len += QuadValue(Rational(1)); // wrap (or single atom)
            CircleNumber mid = begin + CircleNumber::of_quad(span_len.scaled(Rational(1, 2)));
            // Word read from a point strictly inside the atom.
            std::string key(static_cast<std::size_t>(m), '\0');
            RotationOrbit orbit(mid, a_ex);
            for (int i = 0; i < m; ++i) {
                bool minus = orbit.value() < t_ex;
                key[static_cast<std::size_t>(i)] = static_cast<char>(minus ? 1 : 0);
                orbit.step();
            }
            lvl[key] += span_len;
        }
        levels.push_back(std::move(lvl));
    }
    return BlockMeasure(pm.size(), pm, std::move(levels));
}

QuadComplex BlockMeasure::symbol_mean() const {
    if (!alphabet_) throw PreconditionError("symbol_mean: measure carries no alphabet");
    QuadComplex sum;
    for (const auto& [key, w] : level(1)) {
        const GaussianRational& v = alphabet_->value(static_cast<std::uint8_t>(key[0]));
        sum += QuadComplex(w.scaled(v.re), w.scaled(v.im));
    }
    return sum;
}

QuadValue BlockMeasure::symbol_abs2_mean() const {
    if (!alphabet_) throw PreconditionError("symbol_abs2_mean: measure carries no alphabet");
    QuadValue sum;
    for (const auto& [key, w] : level(1)) {
        const GaussianRational& v = alphabet_->value(static_cast<std::uint8_t>(key[0]));
        sum += w.scaled(v.norm2());
    }
    return sum;
}

namespace {

template <class MapA, class MapB, class LiftA, class LiftB>
QuadValue map_l1(const MapA& a, const MapB& b, LiftA lift_a, LiftB lift_b) {
    QuadValue sum;
    for (const auto& [key, w] : a) {
        auto it = b.find(key);
        QuadValue diff = (it == b.end()) ? lift_a(w) : lift_a(w) - lift_b(it->second);
        sum += diff.abs();
    }
    for (const auto& [key, w] : b) {
        if (a.find(key) == a.end()) sum += lift_b(w).abs();
    }
    return sum;
}

QuadValue lift_rat(const Rational& r) { return QuadValue(r); }
const QuadValue& lift_quad(const QuadValue& q) { return q; }

} // namespace

QuadValue dm_distance(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu) {
    if (mu.order != nu.order) throw PreconditionError("dm_distance: order mismatch");
    if (mu.alphabet_size != nu.alphabet_size)
        throw PreconditionError("dm_distance: alphabet size mismatch");
    return map_l1(mu.weights, nu.weights, lift_rat, lift_rat);
}

QuadValue dm_distance(const EmpiricalMeasure& mu, const BlockMeasure& nu) {
    if (nu.max_order() < mu.order)
        throw PreconditionError("dm_distance: measure order below the empirical order");
    if (mu.alphabet_size != nu.alphabet_size())
        throw PreconditionError("dm_distance: alphabet size mismatch");
    return map_l1(mu.weights, nu.level(mu.order), lift_rat, lift_quad);
}

QuadValue dm_distance(const BlockMeasure& mu, const BlockMeasure& nu, int m) {
    if (mu.max_order() < m || nu.max_order() < m)
        throw PreconditionError("dm_distance: order exceeds a stored max_order");
    if (mu.alphabet_size() != nu.alphabet_size())
        throw PreconditionError("dm_distance: alphabet size mismatch");
    return map_l1(mu.level(m), nu.level(m), lift_quad, lift_quad);
}

} // namespace corrseq
