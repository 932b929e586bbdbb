#include "wsi/laurent.hpp"

#include <stdexcept>

namespace wsi {

void LaurentPoly::add_term(const std::vector<long>& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

LaurentPoly laurent_sub(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, -c);
  return r;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.n);
  std::vector<long> e(a.n);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (size_t i = 0; i < a.n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly laurent_scale(const LaurentPoly& a, const Rational& c) {
  LaurentPoly r(a.n);
  if (c == 0) return r;
  for (const auto& [e, k] : a.terms) r.terms.emplace(e, k * c);
  return r;
}

LaurentPoly laurent_apply(const WeylElement& A, const LaurentPoly& p) {
  LaurentPoly r(p.n);
  for (const auto& [e, c] : p.terms) r.add_term(A.apply(e), c);
  return r;
}

Rational laurent_eval(const LaurentPoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.n) throw std::invalid_argument("point dimension mismatch");
  // power cache per coordinate
  std::vector<std::map<long, Rational>> pows(p.n);
  auto coord_pow = [&](size_t j, long e) -> const Rational& {
    auto it = pows[j].find(e);
    if (it != pows[j].end()) return it->second;
    if (point[j] == 0 && e < 0)
      throw std::domain_error("zero coordinate with negative exponent");
    return pows[j].emplace(e, rat_pow(point[j], e)).first->second;
  };
  Rational acc(0);
  for (const auto& [e, c] : p.terms) {
    Rational t = c;
    for (size_t j = 0; j < p.n; ++j)
      if (e[j] != 0) t *= coord_pow(j, e[j]);
    acc += t;
  }
  return acc;
}

void DensePoly::add_term(const std::vector<long>& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

DensePoly dense_add(const DensePoly& a, const DensePoly& b) {
  DensePoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

DensePoly dense_sub(const DensePoly& a, const DensePoly& b) {
  DensePoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, -c);
  return r;
}

DensePoly dense_scale(const DensePoly& a, const Rational& c) {
  DensePoly r(a.n);
  if (c == 0) return r;
  for (const auto& [e, k] : a.terms) r.terms.emplace(e, k * c);
  return r;
}

DensePoly dense_mul_var(const DensePoly& a, size_t i) {
  DensePoly r(a.n);
  for (const auto& [e, c] : a.terms) {
    std::vector<long> e2 = e;
    e2[i] += 1;
    r.terms.emplace(std::move(e2), c);
  }
  return r;
}

Rational eval_dense(const DensePoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.n) throw std::invalid_argument("point dimension mismatch");
  std::vector<std::map<long, Rational>> pows(p.n);
  auto coord_pow = [&](size_t j, long e) -> const Rational& {
    auto it = pows[j].find(e);
    if (it != pows[j].end()) return it->second;
    return pows[j].emplace(e, rat_pow(point[j], e)).first->second;
  };
  Rational acc(0);
  for (const auto& [e, c] : p.terms) {
    Rational t = c;
    for (size_t j = 0; j < p.n; ++j)
      if (e[j] != 0) t *= coord_pow(j, e[j]);
    acc += t;
  }
  return acc;
}

void OrbitCombo::add(const Weight& w, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace wsi
