#include "corrseq/quadratic.hpp"

namespace corrseq {

namespace {

// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(unsigned long d, unsigned long& root) {
    Integer n(static_cast<long>(d));
    Integer r = isqrt(n);
    if (r * r == n) {
        root = r.get_ui();
        return true;
    }
    return false;
}

} // namespace

QuadValue::QuadValue(Rational a, Rational b, unsigned long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    unsigned long root = 0;
    if (d_ == 0 || is_perfect_square(d_, root)) {
        a_ += b_ * Rational(static_cast<long>(root));
        b_ = 0;
        d_ = 0;
    }
}

unsigned long QuadValue::merge_fields(const QuadValue& x, const QuadValue& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw PreconditionError("incompatible quadratic fields: sqrt(" + std::to_string(x.d_) +
                            ") vs sqrt(" + std::to_string(y.d_) + ")");
}

QuadValue QuadValue::operator+(const QuadValue& o) const {
    unsigned long d = merge_fields(*this, o);
    return QuadValue(a_ + o.a_, b_ + o.b_, d);
}

QuadValue QuadValue::operator-(const QuadValue& o) const {
    unsigned long d = merge_fields(*this, o);
    return QuadValue(a_ - o.a_, b_ - o.b_, d);
}

QuadValue QuadValue::operator*(const QuadValue& o) const {
    unsigned long d = merge_fields(*this, o);
    Rational dd(static_cast<long>(d));
    return QuadValue(a_ * o.a_ + b_ * o.b_ * dd, a_ * o.b_ + b_ * o.a_, d);
}

int QuadValue::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d; the winner in magnitude
    // decides. b^2 d != a^2 since sqrt(d) is irrational here.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(static_cast<long>(d_));
    return lhs > rhs ? sa : sb;
}

Integer QuadValue::floor() const {
    if (b_ == 0) return rational_floor(a_);
    // Put over one positive denominator: (P + Q*sqrt(d)) / R.
    Integer R = a_.get_den() * b_.get_den();
    Integer P = a_.get_num() * b_.get_den();
    Integer Q = b_.get_num() * a_.get_den();
    // floor((P + Q sqrt(d))/R) = floor((P + floor(Q sqrt(d)))/R) for R > 0.
    Integer qs;
    Integer q2d = Q * Q * Integer(static_cast<long>(d_));
    Integer s = isqrt(q2d);
    if (Q >= 0) {
        qs = s; // s <= Q sqrt(d) < s+1
    } else {
        qs = -s - 1; // Q sqrt(d) irrational, so floor = -(ceil) = -s-1
    }
    Integer num = P + qs;
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), R.get_mpz_t());
    return r;
}

double QuadValue::to_double() const { return to_bigfloat(64).convert_to<double>(); }

BigFloat QuadValue::to_bigfloat(unsigned bits) const {
    if (!bits) bits = default_precision_bits();
    BigFloat x = bigfloat_of_rational(a_, bits);
    if (b_ != 0) {
        BigFloat root = bigfloat_sqrt_ui(d_, bits);
        x += bigfloat_of_rational(b_, bits) * root;
    }
    return x;
}

GaussianRational QuadComplex::to_gaussian() const {
    if (!is_rational())
        throw PreconditionError("QuadComplex: value is not rational");
    return {re.rational_part(), im.rational_part()};
}

std::string QuadValue::to_string() const {
    if (b_ == 0) return rational_to_string(a_);
    std::string s = rational_to_string(a_);
    s += (b_ < 0) ? " - " : " + ";
    s += rational_to_string(rational_abs(b_));
    s += "*sqrt(" + std::to_string(d_) + ")";
    return s;
}

} // namespace corrseq
