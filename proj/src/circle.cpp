#include "corrseq/circle.hpp"

namespace corrseq {

namespace {

QuadValue quad_mod1(const QuadValue& v) {
    Integer fl = v.floor();
    if (fl == 0) return v;
    return v - QuadValue(Rational(fl));
}

} // namespace

CircleNumber CircleNumber::of_rational(const Rational& q) {
    return CircleNumber(quad_mod1(QuadValue(q)));
}

CircleNumber CircleNumber::of_quad(const QuadValue& v) { return CircleNumber(quad_mod1(v)); }

CircleNumber CircleNumber::of_bigfloat(const BigFloat& x) {
    return CircleNumber(bigfloat_frac(x));
}

CircleNumber CircleNumber::of_double(double x) {
    Rational q(x);
    q.canonicalize();
    return of_rational(q);
}

CircleNumber CircleNumber::golden_mean() {
    return CircleNumber(QuadValue(Rational(-1, 2), Rational(1, 2), 5));
}

CircleNumber CircleNumber::sqrt2_minus_1() {
    return CircleNumber(QuadValue(Rational(-1), Rational(1), 2));
}

bool CircleNumber::is_zero() const {
    if (auto* q = std::get_if<QuadValue>(&v_)) return q->sign() == 0;
    return std::get<BigFloat>(v_) == 0;
}

CircleNumber CircleNumber::operator+(const CircleNumber& o) const {
    if (is_exact() && o.is_exact()) {
        QuadValue s = *exact() + *o.exact();
        // Operands live in [0,1), so the sum is in [0,2): one compare beats a floor.
        if ((s - QuadValue(Rational(1))).sign() >= 0) s -= QuadValue(Rational(1));
        return CircleNumber(std::move(s));
    }
    unsigned bits = flt() ? precision_bits_of(*flt()) : precision_bits_of(*o.flt());
    BigFloat s = to_bigfloat(bits) + o.to_bigfloat(bits);
    if (s >= 1) s -= 1;
    if (s >= 1) s -= 1; // rounding guard
    return CircleNumber(std::move(s));
}

CircleNumber CircleNumber::operator-(const CircleNumber& o) const {
    if (is_exact() && o.is_exact()) {
        QuadValue s = *exact() - *o.exact();
        if (s.sign() < 0) s += QuadValue(Rational(1));
        return CircleNumber(std::move(s));
    }
    unsigned bits = flt() ? precision_bits_of(*flt()) : precision_bits_of(*o.flt());
    BigFloat s = to_bigfloat(bits) - o.to_bigfloat(bits);
    if (s < 0) s += 1;
    if (s < 0) s += 1;
    return CircleNumber(std::move(s));
}

CircleNumber CircleNumber::operator-() const {
    if (is_zero()) return CircleNumber();
    if (is_exact()) return CircleNumber(QuadValue(Rational(1)) - *exact());
    BigFloat s = 1 - *flt();
    return CircleNumber(std::move(s));
}

CircleNumber CircleNumber::times(const Integer& n) const {
    if (is_exact()) return CircleNumber(quad_mod1(exact()->scaled(n)));
    return CircleNumber(bigfloat_mul_int_frac(*flt(), n));
}

int CircleNumber::compare(const CircleNumber& o) const {
    if (is_exact() && o.is_exact()) return (*exact() - *o.exact()).sign();
    unsigned bits = flt() ? precision_bits_of(*flt()) : precision_bits_of(*o.flt());
    BigFloat a = to_bigfloat(bits);
    BigFloat b = o.to_bigfloat(bits);
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

double CircleNumber::to_double() const {
    if (is_exact()) return exact()->to_double();
    return flt()->convert_to<double>();
}

BigFloat CircleNumber::to_bigfloat(unsigned bits) const {
    if (is_exact()) return exact()->to_bigfloat(bits);
    return *flt();
}

std::string CircleNumber::to_string() const {
    if (is_exact()) return exact()->to_string();
    return bigfloat_to_string(*flt());
}

CircleNumber circle_norm(const CircleNumber& s) {
    CircleNumber anti = -s;
    return (s.compare(anti) <= 0) ? s : anti;
}

} // namespace corrseq
