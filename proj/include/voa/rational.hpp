#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace voa {

// Exact scalar field. mpq_class keeps values reduced with positive
// denominator as long as raw num/den constructors are canonicalized,
// which rat() below takes care of.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw std::invalid_argument("rational is not an integer");
    return r.get_num().get_si();
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// "p", "-p" or "p/q"
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    if (r.get_den() <= 0) throw std::invalid_argument("bad rational: " + s);
    return r;
}

inline Rational binomial(long n, long k) {
    if (k < 0) return 0;
    Rational b = 1;
    for (long i = 1; i <= k; ++i) b *= rat(n - k + i, i);
    return b;
}

inline Rational factorial(long n) {
    Rational f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

using QVec = std::vector<Rational>;

inline bool is_integer_vec(const QVec& v) {
    for (const auto& x : v)
        if (!is_integer(x)) return false;
    return true;
}

inline bool is_zero_vec(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace voa
