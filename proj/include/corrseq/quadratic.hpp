#pragma once

#include <complex>

#include "corrseq/bigfloat.hpp"
#include "corrseq/rational.hpp"

namespace corrseq {

// Exact real number of the form a + b*sqrt(d) with rational a, b and a
// non-square integer d >= 0. Purely rational values are normalized to
// (a, 0, 0); a perfect-square d folds into the rational part. Elements of a
// common field Q(sqrt(d)) — and rationals, d == 0 — combine exactly; mixing
// two distinct irrational d is a PreconditionError (callers promote to
// BigFloat instead).
class QuadValue {
public:
    QuadValue() : a_(0), b_(0), d_(0) {}
    QuadValue(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
    QuadValue(long a) : a_(a), b_(0), d_(0) {}
    QuadValue(Rational a, Rational b, unsigned long d);

    static QuadValue sqrt_of(unsigned long d) { return QuadValue(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& root_coeff() const { return b_; }
    unsigned long discriminant() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    // Exact sign: -1, 0, +1.
    int sign() const;

    QuadValue operator+(const QuadValue& o) const;
    QuadValue operator-(const QuadValue& o) const;
    QuadValue operator-() const { return QuadValue(-a_, -b_, d_); }
    QuadValue operator*(const QuadValue& o) const;
    QuadValue& operator+=(const QuadValue& o) { return *this = *this + o; }
    QuadValue& operator-=(const QuadValue& o) { return *this = *this - o; }

    QuadValue scaled(const Rational& c) const { return QuadValue(a_ * c, b_ * c, d_); }
    QuadValue scaled(const Integer& n) const {
        return QuadValue(a_ * Rational(n), b_ * Rational(n), d_);
    }

    bool operator==(const QuadValue& o) const { return (*this - o).sign() == 0; }
    bool operator<(const QuadValue& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadValue& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadValue& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadValue& o) const { return (*this - o).sign() >= 0; }

    Integer floor() const;
    QuadValue abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const;
    BigFloat to_bigfloat(unsigned bits = 0) const;

    std::string to_string() const;

private:
    Rational a_, b_;
    unsigned long d_;

    static unsigned long merge_fields(const QuadValue& x, const QuadValue& y);
};

// Complex number with QuadValue parts; closes joining-correlation arithmetic
// over rotation measures.
struct QuadComplex {
    QuadValue re, im;

    QuadComplex() = default;
    QuadComplex(QuadValue r) : re(std::move(r)) {}
    QuadComplex(QuadValue r, QuadValue i) : re(std::move(r)), im(std::move(i)) {}
    explicit QuadComplex(const GaussianRational& g) : re(g.re), im(g.im) {}

    QuadComplex conj() const { return {re, -im}; }
    bool is_zero() const { return re.sign() == 0 && im.sign() == 0; }
    bool is_rational() const { return re.is_rational() && im.is_rational(); }
    GaussianRational to_gaussian() const; // throws unless rational

    QuadComplex operator+(const QuadComplex& o) const { return {re + o.re, im + o.im}; }
    QuadComplex operator-(const QuadComplex& o) const { return {re - o.re, im - o.im}; }
    QuadComplex operator*(const QuadComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    QuadComplex& operator+=(const QuadComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    bool operator==(const QuadComplex& o) const { return re == o.re && im == o.im; }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

} // namespace corrseq
