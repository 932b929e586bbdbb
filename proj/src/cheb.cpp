#include "wsi/cheb.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wsi/caches.hpp"

namespace wsi {

namespace {

std::vector<long> leading_exponent(const RootSystem& rs, const LaurentPoly& p) {
  auto it = p.terms.begin();
  std::vector<long> best = it->first;
  for (++it; it != p.terms.end(); ++it)
    if (rs.admissible_less(best, it->first)) best = it->first;
  return best;
}

// Coordinate bounds of the convex hull of an orbit; the exponents of
// cha_alpha and of the quotient in the Weyl character formula stay inside.
void orbit_box(const RootSystem& rs, const Weight& alpha,
               std::vector<long>& lo, std::vector<long>& hi) {
  lo.assign(rs.rank(), 0);
  hi.assign(rs.rank(), 0);
  bool first = true;
  for (const auto& w : rs.orbit(alpha)) {
    for (size_t i = 0; i < rs.rank(); ++i) {
      if (first || w[i] < lo[i]) lo[i] = w[i];
      if (first || w[i] > hi[i]) hi[i] = w[i];
    }
    first = false;
  }
}

}  // namespace

LaurentPoly character_poly(const RootSystem& rs, const Weight& alpha) {
  if (!is_dominant(alpha))
    throw std::invalid_argument("character_poly needs a dominant weight");
  LaurentPoly denom = skew_orbit_poly(rs, rs.delta());
  LaurentPoly rem = skew_orbit_poly(rs, weight_add(rs.delta(), alpha));
  std::vector<long> lt_d = leading_exponent(rs, denom);
  Rational c_d = denom.terms.at(lt_d);

  std::vector<long> lo, hi;
  orbit_box(rs, alpha, lo, hi);
  long cap = 16;
  for (size_t i = 0; i < rs.rank(); ++i) cap *= (hi[i] - lo[i] + 2);

  LaurentPoly q(rs.rank());
  while (!rem.is_zero()) {
    std::vector<long> lt_r = leading_exponent(rs, rem);
    std::vector<long> e(rs.rank());
    for (size_t i = 0; i < rs.rank(); ++i) {
      e[i] = lt_r[i] - lt_d[i];
      if (e[i] < lo[i] || e[i] > hi[i])
        throw std::logic_error("inexact division by ThetaHat_delta");
    }
    Rational c = rem.terms.at(lt_r) / c_d;
    q.add_term(e, c);
    for (const auto& [ed, cd] : denom.terms)
      rem.add_term(weight_add(e, ed), -c * cd);
    if (--cap < 0) throw std::logic_error("inexact division by ThetaHat_delta");
  }
  return q;
}

OrbitCombo orbit_decompose(const RootSystem& rs, const LaurentPoly& p) {
  OrbitCombo out;
  out.kind = ComboKind::plain;
  LaurentPoly rem = p;
  size_t guard = 4 * p.terms.size() + 16;
  while (!rem.is_zero()) {
    std::vector<long> lt = leading_exponent(rs, rem);
    if (!is_dominant(lt))
      throw std::invalid_argument("orbit_decompose: input is not W-invariant");
    Rational c = rem.terms.at(lt) / Rational(static_cast<long>(rs.stabilizer_order(lt)));
    out.add(lt, c);
    rem = laurent_sub(rem, laurent_scale(orbit_poly(rs, lt), c));
    if (--guard == 0)
      throw std::invalid_argument("orbit_decompose: reduction stalled");
  }
  return out;
}

DensePoly chebyshev_T(const RootSystem& rs, const Weight& alpha) {
  if (!is_dominant(alpha))
    throw std::invalid_argument("chebyshev_T needs a dominant weight");
  {
    std::lock_guard<std::mutex> lk(rs.cache().mu);
    auto it = rs.cache().cheb_t.find(alpha);
    if (it != rs.cache().cheb_t.end()) return it->second;
  }
  size_t n = rs.rank();
  DensePoly t(n);
  bool zero = std::all_of(alpha.begin(), alpha.end(), [](long c) { return c == 0; });
  if (zero) {
    t.add_term(std::vector<long>(n, 0), Rational(static_cast<long>(rs.group_order())));
  } else {
    size_t i = 0;
    while (alpha[i] == 0) ++i;
    Weight prev = alpha;
    prev[i] -= 1;
    OrbitCombo expand =
        orbit_product_expand(rs, rs.fundamental_weight(i), prev, ComboKind::plain);
    Rational lead = expand.terms.at(alpha);
    t = dense_mul_var(chebyshev_T(rs, prev), i);
    for (const auto& [nu, c] : expand.terms) {
      if (nu == alpha) continue;
      t = dense_sub(t, dense_scale(chebyshev_T(rs, nu), c));
    }
    t = dense_scale(t, Rational(1) / lead);
  }
  std::lock_guard<std::mutex> lk(rs.cache().mu);
  rs.cache().cheb_t.emplace(alpha, t);
  return t;
}

DensePoly chebyshev_U(const RootSystem& rs, const Weight& alpha) {
  if (!is_dominant(alpha))
    throw std::invalid_argument("chebyshev_U needs a dominant weight");
  {
    std::lock_guard<std::mutex> lk(rs.cache().mu);
    auto it = rs.cache().cheb_u.find(alpha);
    if (it != rs.cache().cheb_u.end()) return it->second;
  }
  OrbitCombo decomp = orbit_decompose(rs, character_poly(rs, alpha));
  DensePoly u(rs.rank());
  for (const auto& [beta, c] : decomp.terms)
    u = dense_add(u, dense_scale(chebyshev_T(rs, beta), c));
  std::lock_guard<std::mutex> lk(rs.cache().mu);
  rs.cache().cheb_u.emplace(alpha, u);
  return u;
}

std::string dense_to_string(const RootSystem& rs, const DensePoly& p) {
  if (p.terms.empty()) return "0";
  std::vector<std::vector<long>> exps;
  exps.reserve(p.terms.size());
  for (const auto& [e, c] : p.terms) exps.push_back(e);
  std::sort(exps.begin(), exps.end(),
            [&](const auto& a, const auto& b) { return rs.admissible_less(b, a); });

  std::ostringstream os;
  bool first = true;
  for (const auto& e : exps) {
    Rational c = p.terms.at(e);
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool constant = std::all_of(e.begin(), e.end(), [](long k) { return k == 0; });
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "X" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (constant) {
      os << rational_to_string(a);
    } else if (a == 1) {
      os << mono;
    } else {
      os << rational_to_string(a) << '*' << mono;
    }
  }
  return os.str();
}

}  // namespace wsi
