#include "corrseq/sequence.hpp"

#include <algorithm>

#include "corrseq/cocycle.hpp"

namespace corrseq {

namespace {

// Evaluates a step cocycle along the orbit s0, s0+alpha, ... with in-place
// arithmetic: one add, at most one wrap subtraction and a few comparisons per
// step. Runs in float mode as soon as any ingredient is float.
class OrbitStepEvaluator {
public:
    OrbitStepEvaluator(const StepCocycle& phi, const CircleNumber& alpha,
                       const CircleNumber& s0) {
        float_mode_ = !alpha.is_exact() || !s0.is_exact();
        for (const CircleNumber& j : phi.jumps())
            if (!j.is_exact()) float_mode_ = true;
        value_after_zero_ = phi.value_after_zero();
        if (float_mode_) {
            unsigned bits = default_precision_bits();
            auto widen = [&bits](const CircleNumber& c) {
                if (c.flt()) bits = std::max(bits, precision_bits_of(*c.flt()));
            };
            widen(alpha);
            widen(s0);
            for (const CircleNumber& j : phi.jumps()) widen(j);
            s_f_ = s0.to_bigfloat(bits);
            alpha_f_ = alpha.to_bigfloat(bits);
            for (const CircleNumber& j : phi.jumps()) jumps_f_.push_back(j.to_bigfloat(bits));
            count_at_zero_ = !jumps_f_.empty() && jumps_f_.front() == 0;
        } else {
            s_q_ = *s0.exact();
            alpha_q_ = *alpha.exact();
            for (const CircleNumber& j : phi.jumps()) jumps_q_.push_back(*j.exact());
            count_at_zero_ = !jumps_q_.empty() && jumps_q_.front().sign() == 0;
        }
    }

    // phi at the current orbit point.
    int value() const {
        std::size_t count;
        if (float_mode_) {
            count = static_cast<std::size_t>(
                std::upper_bound(jumps_f_.begin(), jumps_f_.end(), s_f_) - jumps_f_.begin());
        } else {
            count = static_cast<std::size_t>(
                std::upper_bound(jumps_q_.begin(), jumps_q_.end(), s_q_) - jumps_q_.begin());
        }
        bool flip = ((count - count_at_zero_) % 2) != 0;
        return flip ? -value_after_zero_ : value_after_zero_;
    }

    void step() {
        if (float_mode_) {
            s_f_ += alpha_f_;
            if (s_f_ >= 1) s_f_ -= 1;
        } else {
            s_q_ += alpha_q_;
            if ((s_q_ - QuadValue(Rational(1))).sign() >= 0) s_q_ -= QuadValue(Rational(1));
        }
    }

private:
    bool float_mode_ = false;
    int value_after_zero_ = 1;
    std::size_t count_at_zero_ = 0;
    BigFloat s_f_, alpha_f_;
    std::vector<BigFloat> jumps_f_;
    QuadValue s_q_, alpha_q_;
    std::vector<QuadValue> jumps_q_;
};

std::vector<std::uint8_t> itinerary_indices(const StepCocycle& phi, const CircleNumber& alpha,
                                            const CircleNumber& s0, std::size_t n,
                                            bool cumulative, int kappa0) {
    std::vector<std::uint8_t> idx;
    idx.reserve(n);
    if (n == 0) return idx;
    OrbitStepEvaluator ev(phi, alpha, s0);
    if (cumulative) {
        int cur = kappa0;
        idx.push_back(cur == 1 ? 0 : 1);
        for (std::size_t m = 2; m <= n; ++m) {
            cur *= ev.value();
            ev.step();
            idx.push_back(cur == 1 ? 0 : 1);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            idx.push_back(ev.value() == 1 ? 0 : 1);
            ev.step();
        }
    }
    return idx;
}

void sieve_mobius(std::size_t n, std::vector<signed char>& mu) {
    mu.assign(n + 1, 0);
    if (n >= 1) mu[1] = 1;
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(n + 1, false);
    for (std::size_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            if (i * p > n) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = static_cast<signed char>(-mu[i]);
        }
    }
}

} // namespace

Block rotation_itinerary(const CircleNumber& alpha, const CircleNumber& t,
                         const CircleNumber& s0, std::size_t n) {
    StepCocycle phi = StepCocycle::two_jump(t);
    return Block(Alphabet::plus_minus_one(), itinerary_indices(phi, alpha, s0, n, false, 1));
}

Block cocycle_itinerary(const StepCocycle& phi, const CircleNumber& alpha,
                        const CircleNumber& s0, int kappa0, std::size_t n) {
    if (kappa0 != 1 && kappa0 != -1)
        throw PreconditionError("cocycle_itinerary: kappa0 must be +1 or -1");
    return Block(Alphabet::plus_minus_one(), itinerary_indices(phi, alpha, s0, n, true, kappa0));
}

Block mobius_block(std::size_t n) {
    if (n < 1) throw PreconditionError("mobius_block: n must be >= 1");
    if (n > 1000000000ull)
        throw PreconditionError("mobius_block: n exceeds the 10^9 sieve cap");
    std::vector<signed char> mu;
    sieve_mobius(n, mu);
    std::vector<std::uint8_t> idx;
    idx.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        idx.push_back(static_cast<std::uint8_t>(1 - mu[i])); // 1 -> 0, 0 -> 1, -1 -> 2
    return Block(Alphabet::mobius(), std::move(idx));
}

Block product_code(const Block& x) {
    if (x.size() < 2) throw PreconditionError("product_code: block must have length >= 2");
    const Alphabet& in = x.alphabet();
    // Output alphabet: distinct pairwise products, in first-appearance order
    // over ordered index pairs.
    std::vector<Symbol> out_syms;
    std::vector<std::vector<std::uint8_t>> pair_index(
        in.size(), std::vector<std::uint8_t>(in.size(), 0));
    for (std::size_t i = 0; i < in.size(); ++i) {
        for (std::size_t j = 0; j < in.size(); ++j) {
            GaussianRational prod = in.value(static_cast<std::uint8_t>(i)) *
                                    in.value(static_cast<std::uint8_t>(j));
            std::size_t found = out_syms.size();
            for (std::size_t k = 0; k < out_syms.size(); ++k)
                if (out_syms[k].value == prod) {
                    found = k;
                    break;
                }
            if (found == out_syms.size()) out_syms.push_back({prod, ""});
            pair_index[i][j] = static_cast<std::uint8_t>(found);
        }
    }
    Alphabet out(out_syms);
    std::vector<std::uint8_t> idx;
    idx.reserve(x.size() - 1);
    for (std::size_t n = 1; n + 1 <= x.size(); ++n)
        idx.push_back(pair_index[x.index_at(n)][x.index_at(n + 1)]);
    return Block(out, std::move(idx));
}

Block signed_product_code(const Block& x) {
    if (x.size() < 2)
        throw PreconditionError("signed_product_code: block must have length >= 2");
    const Alphabet& in = x.alphabet();
    std::vector<int> sign_of(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        const GaussianRational& v = in.value(static_cast<std::uint8_t>(i));
        if (v == GaussianRational(1))
            sign_of[i] = 1;
        else if (v == GaussianRational(-1))
            sign_of[i] = -1;
        else
            throw PreconditionError("signed_product_code: symbols must lie in {-1, +1}");
    }
    Alphabet out = Alphabet::signed_product(); // 1, 1/2, -1/2, -1
    std::vector<std::uint8_t> idx;
    idx.reserve(x.size() - 1);
    for (std::size_t n = 1; n + 1 <= x.size(); ++n) {
        int a = sign_of[x.index_at(n)];
        int b = sign_of[x.index_at(n + 1)];
        // (3/4)a + (1/4)ab: (1,1)->1, (1,-1)->1/2, (-1,1)->-1/2, (-1,-1)->-1
        std::uint8_t k;
        if (a == 1)
            k = (b == 1) ? 0 : 1;
        else
            k = (b == 1) ? 2 : 3;
        idx.push_back(k);
    }
    return Block(out, std::move(idx));
}

SymbolicSequence sturmian_sequence(const CircleNumber& alpha, const CircleNumber& t,
                                   const CircleNumber& s0, std::size_t limit) {
    return SymbolicSequence(
        Alphabet::plus_minus_one(), limit, "rotation itinerary",
        [alpha, t, s0](std::size_t n, std::vector<std::uint8_t>& out) {
            out = itinerary_indices(StepCocycle::two_jump(t), alpha, s0, n, false, 1);
        });
}

SymbolicSequence cocycle_sequence(const StepCocycle& phi, const CircleNumber& alpha,
                                  const CircleNumber& s0, int kappa0, std::size_t limit) {
    if (kappa0 != 1 && kappa0 != -1)
        throw PreconditionError("cocycle_sequence: kappa0 must be +1 or -1");
    return SymbolicSequence(
        Alphabet::plus_minus_one(), limit, "cocycle itinerary",
        [phi, alpha, s0, kappa0](std::size_t n, std::vector<std::uint8_t>& out) {
            out = itinerary_indices(phi, alpha, s0, n, true, kappa0);
        });
}

SymbolicSequence mobius_sequence(std::size_t limit) {
    return SymbolicSequence(Alphabet::mobius(), limit, "mobius function",
                            [](std::size_t n, std::vector<std::uint8_t>& out) {
                                if (n == 0) {
                                    out.clear();
                                    return;
                                }
                                out = mobius_block(n).indices();
                            });
}

SymbolicSequence periodic_sequence(const Block& word, std::size_t limit) {
    if (word.empty()) throw PreconditionError("periodic_sequence: empty word");
    return SymbolicSequence(word.alphabet(), limit, "periodic",
                            [word](std::size_t n, std::vector<std::uint8_t>& out) {
                                out.reserve(n);
                                for (std::size_t i = 0; i < n; ++i)
                                    out.push_back(word.indices()[i % word.size()]);
                            });
}

SymbolicSequence constant_sequence(const GaussianRational& value, std::size_t limit) {
    Alphabet a({{value, ""}});
    return SymbolicSequence(a, limit, "constant",
                            [](std::size_t n, std::vector<std::uint8_t>& out) {
                                out.assign(n, 0);
                            });
}

SymbolicSequence block_sequence(const Block& b) {
    if (b.empty()) throw PreconditionError("block_sequence: empty block");
    return SymbolicSequence(b.alphabet(), b.size(), "materialized block",
                            [b](std::size_t n, std::vector<std::uint8_t>& out) {
                                out.assign(b.indices().begin(),
                                           b.indices().begin() + static_cast<std::ptrdiff_t>(n));
                            });
}

} // namespace corrseq
