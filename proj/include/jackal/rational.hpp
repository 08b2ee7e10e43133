#pragma once

#include <gmpxx.h>

#include <string>

namespace jackal {

using Int = mpz_class;
using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize; every construction from a raw
// numerator/denominator pair must go through here.
inline Rational make_rational(Int num, Int den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace jackal
