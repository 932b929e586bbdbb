#include "wsi/rational.hpp"

#include <cmath>
#include <sstream>

namespace wsi {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

Rational rat_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw std::domain_error("0 raised to negative power");
  Rational base = e > 0 ? q : Rational(1) / q;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  out.canonicalize();
  return out;
}

Rational int_pow(const Integer& base, long e) {
  if (base <= 0) throw std::domain_error("int_pow needs a positive base");
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(e > 0 ? e : -e));
  Rational out(p);
  if (e < 0) out = Rational(1) / out;
  return out;
}

double rat_log2(const Rational& q) {
  if (q <= 0) throw std::domain_error("rat_log2 needs a positive value");
  signed long ne = 0, de = 0;
  double nm = mpz_get_d_2exp(&ne, q.get_num().get_mpz_t());
  double dm = mpz_get_d_2exp(&de, q.get_den().get_mpz_t());
  return static_cast<double>(ne - de) + std::log2(nm / dm);
}

long to_long_checked(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational is not an integer");
  if (!q.get_num().fits_slong_p())
    throw std::overflow_error("integer does not fit in long");
  return q.get_num().get_si();
}

std::string weight_to_string(const std::vector<long>& w) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

}  // namespace wsi
