#ifndef WSI_RATIONAL_HPP
#define WSI_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace wsi {

using Integer  = mpz_class;
using Rational = mpq_class;

// Parse "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& s);

// mpq_class(num, den) does not canonicalize; this does.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

// q^e for e in Z (e < 0 requires q != 0).
Rational rat_pow(const Rational& q, long e);

// base^e for integer base >= 1 and e in Z, as an exact rational.
Rational int_pow(const Integer& base, long e);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// log2 of a positive rational, accurate to double rounding.
double rat_log2(const Rational& q);

// Exact conversion; throws if q is not an integer or does not fit in long.
long to_long_checked(const Rational& q);

std::string weight_to_string(const std::vector<long>& w);

}  // namespace wsi

#endif
