#include "corrseq/bigfloat.hpp"

#include <cmath>

#include "corrseq/rng.hpp"

namespace corrseq {

namespace {
unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 1;
}
} // namespace

void set_default_precision_bits(unsigned bits) {
    if (bits < 24) bits = 24;
    BigFloat::default_precision(bits_to_digits10(bits));
}

unsigned default_precision_bits() {
    // Invert boost's digits10 -> bits mapping conservatively.
    unsigned digits10 = BigFloat::default_precision();
    return static_cast<unsigned>(digits10 / 0.3010299956639812);
}

unsigned precision_bits_of(const BigFloat& x) {
    return static_cast<unsigned>(mpfr_get_prec(x.backend().data()));
}

BigFloat bigfloat_of_rational(const Rational& q, unsigned bits) {
    BigFloat x;
    if (bits) x.precision(bits_to_digits10(bits));
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

BigFloat bigfloat_sqrt_ui(unsigned long d, unsigned bits) {
    BigFloat x;
    if (bits) x.precision(bits_to_digits10(bits));
    mpfr_sqrt_ui(x.backend().data(), d, MPFR_RNDN);
    return x;
}

Rational bigfloat_to_rational(const BigFloat& x) {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), x.backend().data());
    q.canonicalize();
    return q;
}

BigFloat bigfloat_frac(const BigFloat& x) {
    BigFloat r(x);
    mpfr_t fl;
    mpfr_init2(fl, mpfr_get_prec(x.backend().data()));
    mpfr_floor(fl, x.backend().data());
    mpfr_sub(r.backend().data(), x.backend().data(), fl, MPFR_RNDN);
    mpfr_clear(fl);
    if (r < 0) r += 1;       // guard against rounding at the seam
    if (r >= 1) r -= 1;
    return r;
}

BigFloat bigfloat_mul_int_frac(const BigFloat& x, const Integer& q) {
    BigFloat prod(x);
    mpfr_mul_z(prod.backend().data(), x.backend().data(), q.get_mpz_t(), MPFR_RNDN);
    return bigfloat_frac(prod);
}

BigFloat bigfloat_random_unit(Rng& rng, unsigned bits) {
    // Assemble ceil(bits/64) words into an integer N, return N / 2^(64*words).
    unsigned words = (bits + 63) / 64;
    Integer n(0);
    for (unsigned i = 0; i < words; ++i) {
        n <<= 64;
        n += Integer(rng.u64());
    }
    BigFloat x;
    x.precision(bits_to_digits10(bits));
    mpfr_set_z_2exp(x.backend().data(), n.get_mpz_t(),
                    -static_cast<mpfr_exp_t>(64 * words), MPFR_RNDN);
    return bigfloat_frac(x);
}

std::string bigfloat_to_string(const BigFloat& x) {
    unsigned digits = static_cast<unsigned>(precision_bits_of(x) * 0.3010299956639812) + 2;
    return x.str(digits);
}

} // namespace corrseq
