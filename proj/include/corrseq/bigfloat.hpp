#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "corrseq/rational.hpp"

namespace corrseq {

// Arbitrary-precision float. Precision is per-variable; fresh results pick up
// the thread-local default (set_default_precision_bits). 128 bits unless the
// caller asks otherwise.
using BigFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 128;

void set_default_precision_bits(unsigned bits);
unsigned default_precision_bits();

// RAII: set the thread's default precision, restore on exit.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits) : saved_(default_precision_bits()) {
        set_default_precision_bits(bits);
    }
    ~PrecisionGuard() { set_default_precision_bits(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

unsigned precision_bits_of(const BigFloat& x);

BigFloat bigfloat_of_rational(const Rational& q, unsigned bits = 0); // 0 = default
BigFloat bigfloat_sqrt_ui(unsigned long d, unsigned bits = 0);

// Exact conversion: every finite BigFloat is a dyadic rational.
Rational bigfloat_to_rational(const BigFloat& x);

// x - floor(x), in [0,1).
BigFloat bigfloat_frac(const BigFloat& x);

// frac(q * x) at the precision of x.
BigFloat bigfloat_mul_int_frac(const BigFloat& x, const Integer& q);

// Uniform in [0,1) with `bits` random bits, deterministic given the rng.
class Rng;
BigFloat bigfloat_random_unit(Rng& rng, unsigned bits);

// Decimal string with enough digits to round-trip the value's precision.
std::string bigfloat_to_string(const BigFloat& x);

} // namespace corrseq
