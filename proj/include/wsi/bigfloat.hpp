#ifndef WSI_BIGFLOAT_HPP
#define WSI_BIGFLOAT_HPP

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "wsi/rational.hpp"

namespace wsi {

// Thin RAII wrapper over mpfr_t. Every value carries its own precision;
// binary operations round to the larger precision of the two operands.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(x_, 2); mpfr_swap(x_, o.x_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
  ~Real() { mpfr_clear(x_); }

  static Real from_rational(const Rational& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static Real from_long(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

  // log2 as a double; valid for positive values (exponent range of mpfr
  // covers everything this library produces).
  double log2_approx() const;

  // Exact dyadic value of this float.
  Rational to_rational() const;

  std::string str(size_t digits = 20) const;

  friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
  }
  Real abs() const {
    Real r(prec());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
  }
  Real mul_2si(long e) const {
    Real r(prec());
    mpfr_mul_2si(r.x_, x_, e, MPFR_RNDN);
    return r;
  }

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_); }
  friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
  friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

 private:
  using mpfr_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real bin(const Real& a, const Real& b, mpfr_fn f) {
    Real r(std::max(mpfr_get_prec(a.x_), mpfr_get_prec(b.x_)));
    f(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  mpfr_t x_;
};

}  // namespace wsi

#endif
