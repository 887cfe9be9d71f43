#pragma once

#include <variant>

#include "corrseq/quadratic.hpp"

namespace corrseq {

// Point of the circle S1 = [0,1). Two storage modes:
//   - exact: QuadValue (rationals and quadratic irrationals), reduced mod 1;
//   - float: BigFloat at some precision, reduced mod 1.
// Every operation reduces mod 1. Exact op exact stays exact (same field);
// anything involving a float yields a float at the float operand's precision.
class CircleNumber {
public:
    CircleNumber() : v_(QuadValue(Rational(0))) {}

    static CircleNumber of_rational(const Rational& q);
    static CircleNumber of_quad(const QuadValue& v);
    static CircleNumber of_bigfloat(const BigFloat& x);
    static CircleNumber of_double(double x); // exact dyadic rational

    // (sqrt(5)-1)/2, exact.
    static CircleNumber golden_mean();
    // sqrt(2)-1, exact.
    static CircleNumber sqrt2_minus_1();

    bool is_exact() const { return std::holds_alternative<QuadValue>(v_); }
    bool is_rational() const {
        auto* q = std::get_if<QuadValue>(&v_);
        return q && q->is_rational();
    }
    const QuadValue* exact() const { return std::get_if<QuadValue>(&v_); }
    const BigFloat* flt() const { return std::get_if<BigFloat>(&v_); }

    bool is_zero() const;

    CircleNumber operator+(const CircleNumber& o) const;
    CircleNumber operator-(const CircleNumber& o) const;
    CircleNumber operator-() const; // 1 - s (and 0 -> 0)

    // n * s mod 1 (n may be negative).
    CircleNumber times(const Integer& n) const;
    CircleNumber times(long n) const { return times(Integer(n)); }

    // Total comparison of representatives in [0,1). Exact when both sides are
    // exact in compatible fields; otherwise at the float operand's precision.
    int compare(const CircleNumber& o) const;
    bool operator==(const CircleNumber& o) const { return compare(o) == 0; }
    bool operator<(const CircleNumber& o) const { return compare(o) < 0; }
    bool operator<=(const CircleNumber& o) const { return compare(o) <= 0; }
    bool operator>(const CircleNumber& o) const { return compare(o) > 0; }
    bool operator>=(const CircleNumber& o) const { return compare(o) >= 0; }

    double to_double() const;
    BigFloat to_bigfloat(unsigned bits = 0) const;
    std::string to_string() const;

private:
    std::variant<QuadValue, BigFloat> v_;

    explicit CircleNumber(QuadValue v) : v_(std::move(v)) {}
    explicit CircleNumber(BigFloat v) : v_(std::move(v)) {}
};

// ||s|| = min(s, 1-s), the distance of s to 0 in S1. Values in [0, 1/2];
// exactness follows the argument's mode. ||1/2|| = 1/2 (nothing to break).
CircleNumber circle_norm(const CircleNumber& s);

// Orbit s0, s0+alpha, s0+2*alpha, ... reduced mod 1, computed incrementally.
class RotationOrbit {
public:
    RotationOrbit(CircleNumber s0, CircleNumber alpha)
        : s_(std::move(s0)), alpha_(std::move(alpha)) {}

    const CircleNumber& value() const { return s_; }
    void step() { s_ = s_ + alpha_; }

private:
    CircleNumber s_;
    CircleNumber alpha_;
};

} // namespace corrseq
