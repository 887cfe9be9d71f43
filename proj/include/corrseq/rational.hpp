#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "corrseq/common.hpp"

namespace corrseq {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q", an integer, or a decimal string ("-0.25", "1e-3") into an
// exact rational. Throws PreconditionError on malformed input.
Rational rational_from_string(const std::string& s);

// "p/q" when the denominator is not 1, otherwise just "p".
std::string rational_to_string(const Rational& q);

double rational_to_double(const Rational& q);

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Smallest integer >= p/q, exact.
Integer rational_ceil(const Rational& q);
Integer rational_floor(const Rational& q);

// Complex number with exact rational real and imaginary parts. Sequence
// symbols live here so that correlations over rational alphabets are exact.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator*(const Rational& c) const { return {re * c, im * c}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

    std::complex<double> to_complex() const {
        return {rational_to_double(re), rational_to_double(im)};
    }
};

std::string gaussian_to_string(const GaussianRational& z);

} // namespace corrseq
