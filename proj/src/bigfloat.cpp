#include "wsi/bigfloat.hpp"

#include <cmath>
#include <stdexcept>

namespace wsi {

double Real::log2_approx() const {
  if (sign() <= 0) throw std::domain_error("log2 of non-positive value");
  // m * 2^e with m in [1/2, 1): log2 = e + log2(m)
  mpfr_exp_t e = mpfr_get_exp(x_);
  mpfr_t m;
  mpfr_init2(m, 64);
  mpfr_div_2si(m, x_, e, MPFR_RNDN);
  double lm = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return static_cast<double>(e) + std::log2(lm);
}

Rational Real::to_rational() const {
  if (mpfr_nan_p(x_) || mpfr_inf_p(x_))
    throw std::domain_error("non-finite float");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x_);
  return q;
}

std::string Real::str(size_t digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), x_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace wsi
