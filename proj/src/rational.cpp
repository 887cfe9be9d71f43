#include "corrseq/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace corrseq {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw PreconditionError("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            Rational q(s);
            q.canonicalize();
            if (q.get_den() == 0) throw PreconditionError("zero denominator in '" + s + "'");
            return q;
        } catch (const std::invalid_argument&) {
            throw PreconditionError("malformed rational '" + s + "'");
        }
    }
    // Integer or decimal, possibly with exponent.
    std::string mant = s;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = s.substr(0, epos);
        const std::string exps = s.substr(epos + 1);
        if (exps.empty()) throw PreconditionError("malformed rational '" + s + "'");
        char* end = nullptr;
        exp10 = std::strtol(exps.c_str(), &end, 10);
        if (end == nullptr || *end != '\0')
            throw PreconditionError("malformed rational '" + s + "'");
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    std::size_t i = 0;
    if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) {
        if (mant[i] == '-') digits.push_back('-');
        ++i;
    }
    for (; i < mant.size(); ++i) {
        char c = mant[i];
        if (c == '.') {
            if (seen_dot) throw PreconditionError("malformed rational '" + s + "'");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw PreconditionError("malformed rational '" + s + "'");
        }
    }
    if (!seen_digit) throw PreconditionError("malformed rational '" + s + "'");
    Integer num(digits);
    Integer den(1);
    long net = exp10 - frac_digits;
    Integer ten(10);
    if (net >= 0) {
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(net));
        num *= scale;
    } else {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-net));
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rational_to_double(const Rational& q) { return q.get_d(); }

Integer rational_floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Integer rational_ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

std::string gaussian_to_string(const GaussianRational& z) {
    if (z.im == 0) return rational_to_string(z.re);
    std::string s = rational_to_string(z.re);
    s += (z.im < 0) ? "-" : "+";
    s += rational_to_string(rational_abs(z.im));
    s += "i";
    return s;
}

} // namespace corrseq
