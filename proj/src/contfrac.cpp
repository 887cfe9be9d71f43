#include "corrseq/contfrac.hpp"

#include <cmath>

namespace corrseq {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct ConvergentBuilder {
    std::vector<Integer> a;
    std::vector<Convergent> conv{{Integer(0), Integer(1)}}; // k = 0
    Integer p_prev{1}, q_prev{0};                           // k = -1

    void push(const Integer& ak) {
        const Convergent& last = conv.back();
        Integer p = ak * last.p + p_prev;
        Integer q = ak * last.q + q_prev;
        p_prev = last.p;
        q_prev = last.q;
        a.push_back(ak);
        conv.push_back({p, q});
    }
};

// Euclidean expansion of an exact rational in [0,1).
void expand_rational(const Rational& alpha0, int depth, ConvergentBuilder& b, int& achieved) {
    Rational x = alpha0;
    achieved = 0;
    for (int k = 1; k <= depth; ++k) {
        if (x == 0) return;
        Rational y = 1 / x;
        Integer ak = rational_floor(y);
        x = y - Rational(ak);
        b.push(ak);
        achieved = k;
    }
}

// PQa iteration for an exact quadratic irrational in (0,1): value
// (P + sqrt(D)) / Q with Q | D - P^2 throughout; exhibits no termination.
void expand_quadratic(const QuadValue& v, int depth, ConvergentBuilder& b) {
    // a + (bn/bd) sqrt(d) with common positive denominator.
    Integer ad = v.rational_part().get_den();
    Integer an = v.rational_part().get_num();
    Integer bd = v.root_coeff().get_den();
    Integer bn = v.root_coeff().get_num();
    Integer R = ad * bd;
    Integer P0 = an * bd;
    Integer Qc = bn * ad;
    Integer D = Qc * Qc * Integer(static_cast<long>(v.discriminant()));
    Integer P, Q;
    if (Qc >= 0) {
        P = P0;
        Q = R;
    } else {
        P = -P0;
        Q = -R;
    }
    if ((D - P * P) % Q != 0) {
        Integer aq = abs(Q);
        P *= aq;
        D *= Q * Q;
        Q *= aq;
    }
    auto floor_step = [&]() -> Integer {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());
        Integer num = (Q > 0) ? Integer(P + s) : Integer(P - s - 1);
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
        return r;
    };
    // First step consumes a_0 = 0.
    for (int k = 0; k <= depth; ++k) {
        Integer ak = floor_step();
        if (k > 0) b.push(ak);
        Integer Pn = ak * Q - P;
        Integer Qn = (D - Pn * Pn) / Q;
        P = Pn;
        Q = Qn;
    }
}

} // namespace

std::vector<Integer> CFExpansion::q_sequence() const {
    std::vector<Integer> qs;
    for (std::size_t k = 1; k < convergents.size(); ++k) qs.push_back(convergents[k].q);
    return qs;
}

CFExpansion cf_expand(const CircleNumber& alpha, int depth) {
    if (depth < 1) throw PreconditionError("cf_expand: depth must be >= 1");
    ConvergentBuilder b;
    if (alpha.is_exact() && !alpha.is_rational()) {
        expand_quadratic(*alpha.exact(), depth, b);
    } else {
        Rational value = alpha.is_exact() ? alpha.exact()->rational_part()
                                          : bigfloat_to_rational(*alpha.flt());
        int achieved = 0;
        expand_rational(value, depth, b, achieved);
        if (achieved < depth && alpha.is_exact())
            throw ExpansionTerminated("cf_expand: expansion terminated at depth " +
                                          std::to_string(achieved),
                                      achieved);
        if (achieved < depth)
            throw ExpansionTerminated(
                "cf_expand: dyadic value exhausted at depth " + std::to_string(achieved) +
                    " (raise the precision)",
                achieved);
    }
    CFExpansion cf;
    cf.alpha = alpha;
    cf.partial_quotients = std::move(b.a);
    cf.convergents = std::move(b.conv);
    unsigned bits = alpha.flt() ? precision_bits_of(*alpha.flt()) : default_precision_bits();
    BigFloat af = alpha.to_bigfloat(bits);
    for (const Convergent& c : cf.convergents) {
        BigFloat z(af);
        mpfr_mul_z(z.backend().data(), af.backend().data(), c.q.get_mpz_t(), MPFR_RNDN);
        mpfr_t pz;
        mpfr_init2(pz, mpfr_get_prec(z.backend().data()));
        mpfr_set_z(pz, c.p.get_mpz_t(), MPFR_RNDN);
        mpfr_sub(z.backend().data(), z.backend().data(), pz, MPFR_RNDN);
        mpfr_clear(pz);
        cf.zeta.push_back(z);
    }
    return cf;
}

ConvergentBoundsReport verify_convergent_bounds(const CFExpansion& cf, Rng& rng,
                                                const BoundsCheckOptions& opts) {
    const int K = cf.depth();
    if (K < 2) throw PreconditionError("verify_convergent_bounds: depth must be >= 2");
    ConvergentBoundsReport rep;

    // One incremental pass of ||j alpha|| shared by the exhaustive minimality
    // checks of every k with q_k <= cap.
    std::vector<CircleNumber> q_alpha_norm(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k)
        q_alpha_norm[static_cast<std::size_t>(k)] = circle_norm(cf.alpha.times(cf.q(k)));

    int k_cap = 0;
    for (int k = 1; k <= K; ++k)
        if (cf.q(k) <= opts.exhaustive_cap) k_cap = k;

    // running_min[k] = min over 0 < j < q_k of ||j alpha||, for k <= k_cap.
    std::vector<std::optional<CircleNumber>> running_min(static_cast<std::size_t>(K) + 1);
    if (k_cap >= 1) {
        Integer j_end = cf.q(k_cap);
        RotationOrbit orbit(CircleNumber(), cf.alpha); // starts at 0
        std::optional<CircleNumber> best;
        int next_k = 1;
        for (Integer j(1); j < j_end; ++j) {
            orbit.step();
            CircleNumber nrm = circle_norm(orbit.value());
            while (next_k <= k_cap && Integer(cf.q(next_k)) == j) {
                running_min[static_cast<std::size_t>(next_k)] = best;
                ++next_k;
            }
            if (!best || nrm < *best) best = nrm;
        }
        while (next_k <= k_cap) {
            running_min[static_cast<std::size_t>(next_k)] = best;
            ++next_k;
        }
    }

    // |zeta_k| = |q_k alpha - p_k|, exact in exact mode. Note ||q_k alpha||
    // equals |zeta_k| for k >= 1 but not necessarily for k = 0 (the nearest
    // integer to alpha may be 1 while p_0 = 0), which matters for the lower
    // bound at k = 1.
    auto zeta_abs_vs = [&](int k, const Rational& bound) -> std::pair<bool, bool> {
        // returns {|zeta_k| <= bound, |zeta_k| >= bound}
        if (cf.alpha.is_exact()) {
            QuadValue z = cf.alpha.exact()->scaled(cf.q(k)) - QuadValue(Rational(cf.p(k)));
            QuadValue az = z.abs();
            QuadValue diff = az - QuadValue(bound);
            return {diff.sign() <= 0, diff.sign() >= 0};
        }
        BigFloat az = abs(cf.zeta[static_cast<std::size_t>(k)]);
        BigFloat b = bigfloat_of_rational(bound, precision_bits_of(az));
        return {az <= b, az >= b};
    };

    for (int k = 1; k <= K; ++k) {
        ConvergentBoundsRow row;
        row.k = k;
        row.q = cf.q(k);
        const Integer& qk = cf.q(k);
        const Integer& qk1 = cf.q(k - 1);
        const Integer& pk = cf.p(k);
        const Integer& pk1 = cf.p(k - 1);
        const Integer& ak = cf.partial_quotients[static_cast<std::size_t>(k - 1)];
        Integer q_before = (k >= 2) ? cf.q(k - 2) : Integer(0);
        Integer p_before = (k >= 2) ? cf.p(k - 2) : Integer(1);
        row.recurrence_ok = (qk == ak * qk1 + q_before) && (pk == ak * pk1 + p_before);

        const CircleNumber& nk = q_alpha_norm[static_cast<std::size_t>(k)];
        const CircleNumber& nk_prev = q_alpha_norm[static_cast<std::size_t>(k - 1)];
        row.q_norm = nk.to_double();
        row.prev_norm = nk_prev.to_double();

        if (k + 1 <= K) {
            CircleNumber bound = CircleNumber::of_rational(Rational(1, cf.q(k + 1)));
            row.q_norm_bound_ok = (nk <= bound);
            row.zeta_bound_ok = zeta_abs_vs(k, Rational(1, cf.q(k + 1))).first;
        }
        row.lower_bound_ok = zeta_abs_vs(k - 1, Rational(1, 2 * qk)).second;

        if (k <= k_cap) {
            row.exhaustive = true;
            row.checked_j = static_cast<long>(qk.get_d()) - 1;
            const auto& m = running_min[static_cast<std::size_t>(k)];
            row.minimality_ok = !m || (nk_prev <= *m);
        } else {
            row.exhaustive = false;
            row.checked_j = opts.samples_above_cap;
            bool ok = true;
            for (long s = 0; s < opts.samples_above_cap && ok; ++s) {
                // Random j in [1, q_k - 1].
                Integer j;
                std::size_t bits = mpz_sizeinbase(qk.get_mpz_t(), 2) + 64;
                Integer raw(0);
                for (std::size_t w = 0; w < (bits + 63) / 64; ++w) {
                    raw <<= 64;
                    raw += Integer(rng.u64());
                }
                j = raw % (qk - 1) + 1;
                if (circle_norm(cf.alpha.times(j)) < nk_prev) ok = false;
            }
            row.minimality_ok = ok;
        }
        rep.all_pass = rep.all_pass && row.all_ok();
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<double> circle_multiples_mod1(const CircleNumber& x,
                                          const std::vector<Integer>& q_seq) {
    std::vector<double> out;
    out.reserve(q_seq.size());
    Integer num, den;
    bool integer_path = false;
    if (x.is_rational()) {
        num = x.exact()->rational_part().get_num();
        den = x.exact()->rational_part().get_den();
        integer_path = true;
    } else if (x.flt()) {
        // Dyadic decomposition: x = num * 2^e with e < 0 for x in (0,1).
        Integer mant;
        mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x.flt()->backend().data());
        if (e >= 0) {
            num = mant << static_cast<unsigned long>(e);
            den = 1;
        } else {
            num = mant;
            den = Integer(1) << static_cast<unsigned long>(-e);
        }
        integer_path = true;
    }
    if (integer_path) {
        for (const Integer& q : q_seq) {
            Integer r = (q * num) % den;
            if (r < 0) r += den;
            out.push_back(Rational(r, den).get_d());
        }
    } else {
        for (const Integer& q : q_seq) out.push_back(x.times(q).to_double());
    }
    return out;
}

std::complex<double> weyl_pair_average(long n, long m, const CircleNumber& x,
                                       const CircleNumber& y,
                                       const std::vector<Integer>& q_seq) {
    if (n == 0 && m == 0) throw PreconditionError("weyl_pair_average: (n,m) must not be (0,0)");
    if (q_seq.empty()) throw PreconditionError("weyl_pair_average: empty q_seq");
    for (std::size_t i = 1; i < q_seq.size(); ++i)
        if (!(q_seq[i - 1] < q_seq[i]))
            throw PreconditionError("weyl_pair_average: q_seq must be strictly increasing");
    std::vector<double> u = circle_multiples_mod1(x, q_seq);
    std::vector<double> v = circle_multiples_mod1(y, q_seq);
    std::complex<double> sum(0, 0);
    for (std::size_t k = 0; k < q_seq.size(); ++k) {
        double phase = static_cast<double>(n) * u[k] + static_cast<double>(m) * v[k];
        phase -= std::floor(phase);
        sum += std::complex<double>(std::cos(kTwoPi * phase), std::sin(kTwoPi * phase));
    }
    return sum / static_cast<double>(q_seq.size());
}

std::vector<Integer> fibonacci_denominators(int count) {
    std::vector<Integer> qs;
    Integer a(1), b(2);
    for (int i = 0; i < count; ++i) {
        qs.push_back(a);
        Integer c = a + b;
        a = b;
        b = c;
    }
    return qs;
}

} // namespace corrseq
