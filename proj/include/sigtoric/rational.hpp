#ifndef SIGTORIC_RATIONAL_HPP
#define SIGTORIC_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace sigtoric {

using Rational = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Canonical text form: "num" or "num/den", den > 0, fraction reduced.
inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational q(s);
        return q;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int b = 1;
    for (unsigned i = 0; i < k; ++i) { b *= (n - i); b /= (i + 1); }
    return b;
}

} // namespace sigtoric

#endif
