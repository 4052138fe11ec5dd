#ifndef DRZ_RATIONAL_HPP
#define DRZ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace drz {

/// Exact rational scalar. GMP keeps the invariants we rely on everywhere:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace drz

#endif
