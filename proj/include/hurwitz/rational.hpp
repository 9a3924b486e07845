#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hurwitz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

// Exact binomial coefficient; the running product is always divisible by i+1.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// base^e for signed e; negative exponents invert exactly.
inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
        return rat_pow(Rat(denominator(base), numerator(base)), -e);
    }
    Rat r = 1, b = base;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) r *= b;
        b *= b;
        u >>= 1;
    }
    return r;
}

// "p/q" with q omitted when 1; matches cpp_rational's own formatting.
inline std::string rat_str(const Rat& r) { return r.str(); }

inline Rat parse_rational(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

}  // namespace hurwitz
