#ifndef WSI_LAURENT_HPP
#define WSI_LAURENT_HPP

#include <map>
#include <vector>

#include "wsi/rational.hpp"
#include "wsi/rootsys.hpp"

namespace wsi {

// Sparse Laurent polynomial: exponent vectors in Z^n mapped to nonzero
// rational coefficients.
struct LaurentPoly {
  size_t n = 0;
  std::map<std::vector<long>, Rational> terms;

  explicit LaurentPoly(size_t nvars = 0) : n(nvars) {}

  void add_term(const std::vector<long>& e, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const LaurentPoly& o) const { return n == o.n && terms == o.terms; }
};

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_scale(const LaurentPoly& a, const Rational& c);

// Weyl action A . x^alpha = x^{A alpha}, extended linearly.
LaurentPoly laurent_apply(const WeylElement& A, const LaurentPoly& p);

// Exact evaluation; a zero coordinate is rejected when a negative
// exponent needs it.
Rational laurent_eval(const LaurentPoly& p, const std::vector<Rational>& point);

// Dense polynomial in X_1..X_n: exponents in N^n.
struct DensePoly {
  size_t n = 0;
  std::map<std::vector<long>, Rational> terms;

  explicit DensePoly(size_t nvars = 0) : n(nvars) {}

  void add_term(const std::vector<long>& e, const Rational& c);
  bool operator==(const DensePoly& o) const { return n == o.n && terms == o.terms; }
};

DensePoly dense_add(const DensePoly& a, const DensePoly& b);
DensePoly dense_sub(const DensePoly& a, const DensePoly& b);
DensePoly dense_scale(const DensePoly& a, const Rational& c);
// a * X_i
DensePoly dense_mul_var(const DensePoly& a, size_t i);

Rational eval_dense(const DensePoly& p, const std::vector<Rational>& point);

enum class ComboKind { plain, skew };

// Finite combination of orbit polynomials (plain: keys dominant) or of
// skew orbit polynomials (skew: keys strongly dominant).
struct OrbitCombo {
  ComboKind kind = ComboKind::plain;
  std::map<Weight, Rational> terms;

  void add(const Weight& w, const Rational& c);
  bool operator==(const OrbitCombo& o) const { return kind == o.kind && terms == o.terms; }
};

}  // namespace wsi

#endif
