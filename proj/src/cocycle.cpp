#include "corrseq/cocycle.hpp"

#include <algorithm>
#include <cmath>

namespace corrseq {

namespace {
constexpr long kJumpCountGuard = 10000000;
constexpr double kTwoPi = 6.283185307179586476925286766559;

// s in [u, u+len) on the circle, arc of length len in [0,1).
bool in_arc(const CircleNumber& s, const CircleNumber& u, const CircleNumber& len) {
    if (len.is_zero()) return false;
    return (s - u) < len;
}
} // namespace

StepCocycle::StepCocycle(std::vector<CircleNumber> sorted_jumps, int value_after_zero)
    : jumps_(std::move(sorted_jumps)), value_after_zero_(value_after_zero) {}

StepCocycle StepCocycle::assemble(std::vector<CircleNumber> points, int value_after_zero) {
    std::sort(points.begin(), points.end(),
              [](const CircleNumber& a, const CircleNumber& b) { return a.compare(b) < 0; });
    std::vector<CircleNumber> jumps;
    std::size_t i = 0;
    while (i < points.size()) {
        std::size_t j = i + 1;
        while (j < points.size() && points[j].compare(points[i]) == 0) ++j;
        if ((j - i) % 2 == 1) jumps.push_back(points[i]);
        i = j;
    }
    return StepCocycle(std::move(jumps), value_after_zero);
}

StepCocycle StepCocycle::constant(int value) {
    if (value != 1 && value != -1) throw PreconditionError("cocycle values must be +1 or -1");
    return StepCocycle({}, value);
}

StepCocycle StepCocycle::two_jump(const CircleNumber& t) {
    if (t.is_zero()) return constant(1);
    return assemble({CircleNumber(), t}, -1);
}

StepCocycle StepCocycle::four_jump(const CircleNumber& t, const CircleNumber& t_prime,
                                   const CircleNumber& u) {
    std::vector<CircleNumber> pts;
    if (!t.is_zero()) {
        pts.push_back(CircleNumber());
        pts.push_back(t);
    }
    if (!t_prime.is_zero()) {
        pts.push_back(u);
        pts.push_back(u + t_prime);
    }
    CircleNumber zero;
    bool in1 = in_arc(zero, CircleNumber(), t);
    bool in2 = in_arc(zero, u, t_prime);
    return assemble(std::move(pts), (in1 != in2) ? -1 : 1);
}

int StepCocycle::eval(const CircleNumber& s) const {
    if (jumps_.empty()) return value_after_zero_;
    auto it = std::upper_bound(jumps_.begin(), jumps_.end(), s,
                               [](const CircleNumber& a, const CircleNumber& b) {
                                   return a.compare(b) < 0;
                               });
    std::size_t count = static_cast<std::size_t>(it - jumps_.begin());
    std::size_t count_at_zero = jumps_.front().is_zero() ? 1 : 0;
    bool flip = ((count - count_at_zero) % 2) != 0;
    return flip ? -value_after_zero_ : value_after_zero_;
}

StepCocycle StepCocycle::shifted(const CircleNumber& delta) const {
    std::vector<CircleNumber> pts;
    pts.reserve(jumps_.size());
    for (const CircleNumber& x : jumps_) pts.push_back(x - delta);
    return assemble(std::move(pts), eval(delta));
}

StepCocycle StepCocycle::operator*(const StepCocycle& other) const {
    std::vector<CircleNumber> pts(jumps_);
    pts.insert(pts.end(), other.jumps_.begin(), other.jumps_.end());
    return assemble(std::move(pts), value_after_zero_ * other.value_after_zero_);
}

StepCocycle StepCocycle::n_step(const CircleNumber& alpha, long n) const {
    if (n < 1) throw PreconditionError("n_step: n must be >= 1");
    if (static_cast<long>(jumps_.size()) * n > kJumpCountGuard)
        throw PreconditionError("n_step: jump count would exceed the 10^7 guard");
    std::vector<CircleNumber> pts;
    pts.reserve(jumps_.size() * static_cast<std::size_t>(n));
    RotationOrbit orbit(CircleNumber(), alpha); // j * alpha
    int value = 1;
    for (long j = 0; j < n; ++j) {
        for (const CircleNumber& x : jumps_) pts.push_back(x - orbit.value());
        value *= eval(orbit.value());
        orbit.step();
    }
    return assemble(std::move(pts), value);
}

QuadValue StepCocycle::l1_distance_to_one_exact() const {
    if (jumps_.empty()) return QuadValue(Rational(value_after_zero_ == 1 ? 0 : 2));
    std::vector<QuadValue> pts;
    pts.reserve(jumps_.size());
    for (const CircleNumber& x : jumps_) {
        if (!x.is_exact())
            throw PreconditionError("l1_distance_to_one_exact: float-mode jump present");
        pts.push_back(*x.exact());
    }
    QuadValue minus_measure(Rational(0));
    // Walk the arcs [j_i, j_{i+1}) plus the wrap arc, starting from the value
    // just after the first jump.
    int value = eval(jumps_.front());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        QuadValue end = (i + 1 < pts.size()) ? pts[i + 1] : (pts[0] + QuadValue(Rational(1)));
        if (value == -1) minus_measure += end - pts[i];
        value = -value;
    }
    return minus_measure.scaled(Rational(2));
}

BigFloat StepCocycle::l1_distance_to_one() const {
    if (jumps_.empty()) return BigFloat(value_after_zero_ == 1 ? 0 : 2);
    bool all_exact = true;
    unsigned bits = default_precision_bits();
    for (const CircleNumber& x : jumps_) {
        if (!x.is_exact()) {
            all_exact = false;
            bits = std::max(bits, precision_bits_of(*x.flt()));
        }
    }
    if (all_exact) return l1_distance_to_one_exact().to_bigfloat();
    BigFloat minus_measure(0);
    minus_measure.precision(static_cast<unsigned>(bits * 0.3010299956639812) + 2);
    int value = eval(jumps_.front());
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
        BigFloat begin = jumps_[i].to_bigfloat(bits);
        BigFloat end = (i + 1 < jumps_.size()) ? jumps_[i + 1].to_bigfloat(bits)
                                               : jumps_[0].to_bigfloat(bits) + 1;
        if (value == -1) minus_measure += end - begin;
        value = -value;
    }
    return 2 * minus_measure;
}

bool StepCocycle::operator==(const StepCocycle& o) const {
    if (value_after_zero_ != o.value_after_zero_ || jumps_.size() != o.jumps_.size())
        return false;
    for (std::size_t i = 0; i < jumps_.size(); ++i)
        if (jumps_[i].compare(o.jumps_[i]) != 0) return false;
    return true;
}

std::string to_string(ErgodicityStatus s) {
    switch (s) {
        case ErgodicityStatus::ErgodicCertified: return "ergodic-certified";
        case ErgodicityStatus::NonErgodicityConsistent: return "non-ergodicity-consistent";
        default: return "inconclusive";
    }
}

ErgodicityVerdict ergodicity_l1_test(const StepCocycle& phi, const CircleNumber& alpha,
                                     const std::vector<Integer>& n_seq, double threshold) {
    if (n_seq.empty()) throw PreconditionError("ergodicity_l1_test: empty n_seq");
    ErgodicityVerdict v;
    for (std::size_t i = 0; i < n_seq.size(); ++i) {
        ErgodicityEvidenceRow row;
        row.k = static_cast<int>(i + 1);
        row.n = n_seq[i];
        row.rotation_norm = circle_norm(alpha.times(n_seq[i])).to_double();
        if (!n_seq[i].fits_slong_p())
            throw PreconditionError("ergodicity_l1_test: step count too large");
        row.l1 = phi.n_step(alpha, n_seq[i].get_si()).l1_distance_to_one().convert_to<double>();
        v.evidence.push_back(row);
    }
    const std::size_t len = v.evidence.size();
    const std::size_t skip = std::min<std::size_t>(static_cast<std::size_t>(v.burn_in), len - 1);
    bool rotation_to_zero = true;
    double min_l1 = v.evidence[skip].l1;
    for (std::size_t i = skip; i < len; ++i) {
        if (i > skip && v.evidence[i].rotation_norm > v.evidence[i - 1].rotation_norm + 1e-12)
            rotation_to_zero = false;
        min_l1 = std::min(min_l1, v.evidence[i].l1);
    }
    if (v.evidence.back().rotation_norm > 0.05) rotation_to_zero = false;
    double max_l1_tail = 0;
    for (std::size_t i = len - (len + 2) / 3; i < len; ++i)
        max_l1_tail = std::max(max_l1_tail, v.evidence[i].l1);

    if (rotation_to_zero && min_l1 >= threshold) {
        v.status = ErgodicityStatus::ErgodicCertified;
        v.gamma = min_l1;
        v.detail = "L1(phi^(n),1) stays >= " + std::to_string(threshold) +
                   " while ||n alpha|| decreases to 0";
    } else if (max_l1_tail < threshold) {
        v.status = ErgodicityStatus::NonErgodicityConsistent;
        v.gamma = max_l1_tail;
        v.detail = "L1(phi^(n),1) tends below the threshold (evidence, not proof)";
    } else {
        v.status = ErgodicityStatus::Inconclusive;
        v.gamma = min_l1;
        v.detail = rotation_to_zero ? "L1 values dip below the threshold"
                                    : "||n alpha|| does not decrease to 0 along n_seq";
    }
    return v;
}

ErgodicityVerdict four_jump_criterion(const CircleNumber& t, const CircleNumber& t_prime,
                                      const CircleNumber& u, const CircleNumber& alpha,
                                      int depth, double gamma_tol) {
    if (depth < 3) throw PreconditionError("four_jump_criterion: depth must be >= 3");
    CFExpansion cf = cf_expand(alpha, depth);
    // Discontinuities x1..x4 = 0, t, u, u + t'. The four necessary
    // convergences are min over i' != i of ||q_k (x_i - x_{i'})|| -> 0.
    CircleNumber diffs[6] = {
        t,                     // x2 - x1
        u,                     // x3 - x1
        u + t_prime,           // x4 - x1
        t - u,                 // x2 - x3
        t - (u + t_prime),     // x2 - x4
        t_prime,               // x4 - x3
    };
    static const int seq_args[4][3] = {
        {0, 1, 2}, // around x1: t, u, t'+u
        {0, 3, 4}, // around x2: t, t-u, t-t'-u
        {1, 3, 5}, // around x3: u, t-u, t'
        {2, 4, 5}, // around x4: t'+u, t-t'-u, t'
    };
    ErgodicityVerdict v;
    CircleNumber t_minus = t - t_prime;
    CircleNumber t_plus = t + t_prime;
    for (int k = 1; k <= depth; ++k) {
        const Integer& q = cf.q(k);
        double norms[6];
        for (int j = 0; j < 6; ++j) norms[j] = circle_norm(diffs[j].times(q)).to_double();
        ErgodicityEvidenceRow row;
        row.k = k;
        row.n = q;
        row.rotation_norm = circle_norm(alpha.times(q)).to_double();
        for (int i = 0; i < 4; ++i) {
            double m = norms[seq_args[i][0]];
            m = std::min(m, norms[seq_args[i][1]]);
            m = std::min(m, norms[seq_args[i][2]]);
            row.min_seq[i] = m;
        }
        row.min_pair = std::min(circle_norm(t_minus.times(q)).to_double(),
                                circle_norm(t_plus.times(q)).to_double());
        v.evidence.push_back(row);
    }
    const int skip = std::min(v.burn_in, depth - 1);
    double gamma = -1;
    int witness = -1;
    for (int i = 0; i < 4; ++i) {
        double lo = 1;
        for (int k = skip; k < depth; ++k)
            lo = std::min(lo, v.evidence[static_cast<std::size_t>(k)].min_seq[i]);
        if (lo > gamma) {
            gamma = lo;
            witness = i;
        }
    }
    v.gamma = gamma;
    if (gamma >= gamma_tol) {
        v.status = ErgodicityStatus::ErgodicCertified;
        v.detail = "necessary convergence " + std::to_string(witness + 1) +
                   " stays >= gamma_tol past the burn-in";
    } else {
        v.status = ErgodicityStatus::Inconclusive;
        v.detail = "all four necessary minima dip below gamma_tol (condition is "
                   "necessary for non-ergodicity, not sufficient)";
    }
    return v;
}

DensityPairStats density_pair_test(const CircleNumber& t, const CircleNumber& t_prime,
                                   const std::vector<Integer>& q_seq, long N) {
    if (q_seq.empty()) throw PreconditionError("density_pair_test: empty q_seq");
    for (std::size_t i = 1; i < q_seq.size(); ++i)
        if (!(q_seq[i - 1] < q_seq[i]))
            throw PreconditionError("density_pair_test: q_seq must be strictly increasing");
    if (N < 1) throw PreconditionError("density_pair_test: N must be >= 1");
    std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(N), q_seq.size());
    std::vector<Integer> qs(q_seq.begin(), q_seq.begin() + static_cast<std::ptrdiff_t>(count));

    CircleNumber x = t - t_prime;
    CircleNumber y = t + t_prime;
    std::vector<double> u = circle_multiples_mod1(x, qs);
    std::vector<double> v = circle_multiples_mod1(y, qs);

    DensityPairStats stats;
    stats.points = static_cast<long>(count);
    static const long freq[8][2] = {{1, 0}, {0, 1}, {1, 1},  {1, -1},
                                    {2, 0}, {0, 2}, {2, 1}, {1, 2}};
    for (const auto& nm : freq) {
        std::complex<double> sum(0, 0);
        for (std::size_t k = 0; k < count; ++k) {
            double phase = static_cast<double>(nm[0]) * u[k] + static_cast<double>(nm[1]) * v[k];
            phase -= std::floor(phase);
            sum += std::complex<double>(std::cos(kTwoPi * phase), std::sin(kTwoPi * phase));
        }
        double mag = std::abs(sum) / static_cast<double>(count);
        stats.weyl.push_back({nm[0], nm[1], mag});
        stats.max_weyl_magnitude = std::max(stats.max_weyl_magnitude, mag);
    }
    const int G = 16;
    stats.grid = G;
    std::vector<long> boxes(static_cast<std::size_t>(G) * G, 0);
    for (std::size_t k = 0; k < count; ++k) {
        int bi = std::min(G - 1, static_cast<int>(u[k] * G));
        int bj = std::min(G - 1, static_cast<int>(v[k] * G));
        ++boxes[static_cast<std::size_t>(bi) * G + static_cast<std::size_t>(bj)];
    }
    double area = 1.0 / (G * G);
    for (long c : boxes)
        stats.box_discrepancy = std::max(
            stats.box_discrepancy,
            std::abs(static_cast<double>(c) / static_cast<double>(count) - area));
    return stats;
}

} // namespace corrseq
