#pragma once

#include <gmpxx.h>

#include <string>

#include "gradloci/common.hpp"

namespace gradloci {

// Exact rational scalar.  All coefficient arithmetic in the library is
// over this type or over rational functions built from it; there is no
// floating point anywhere.
using Rational = mpq_class;

inline Rational rat_from_long(long n) { return Rational(n); }

inline Rational rat_make(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool rat_is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

// Parses "123" or "-4/7".  Throws InputError on malformed text.
inline Rational rat_parse(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw InputError("malformed rational literal: " + s);
    q.canonicalize();
    return q;
}

}  // namespace gradloci
