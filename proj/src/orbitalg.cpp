#include "wsi/orbitalg.hpp"

#include <stdexcept>

#include "wsi/caches.hpp"

namespace wsi {

LaurentPoly orbit_poly(const RootSystem& rs, const Weight& alpha) {
  {
    std::lock_guard<std::mutex> lk(rs.cache().mu);
    auto it = rs.cache().orbit_poly.find(alpha);
    if (it != rs.cache().orbit_poly.end()) return it->second;
  }
  LaurentPoly p(rs.rank());
  for (const auto& A : rs.group()) p.add_term(A.apply(alpha), Rational(1));
  std::lock_guard<std::mutex> lk(rs.cache().mu);
  rs.cache().orbit_poly.emplace(alpha, p);
  return p;
}

LaurentPoly skew_orbit_poly(const RootSystem& rs, const Weight& alpha) {
  {
    std::lock_guard<std::mutex> lk(rs.cache().mu);
    auto it = rs.cache().skew_orbit_poly.find(alpha);
    if (it != rs.cache().skew_orbit_poly.end()) return it->second;
  }
  LaurentPoly p(rs.rank());
  for (const auto& A : rs.group()) p.add_term(A.apply(alpha), Rational(A.det));
  std::lock_guard<std::mutex> lk(rs.cache().mu);
  rs.cache().skew_orbit_poly.emplace(alpha, p);
  return p;
}

OrbitCombo orbit_product_expand(const RootSystem& rs, const Weight& alpha,
                                const Weight& beta, ComboKind kind) {
  if (!is_dominant(alpha) || !is_dominant(beta))
    throw std::invalid_argument("orbit_product_expand needs dominant weights");
  if (kind == ComboKind::skew && !is_strongly_dominant(alpha))
    throw std::invalid_argument("skew expansion needs a strongly dominant left index");

  // Theta_a Theta_b is symmetric; normalize the memo key.
  Weight ka = alpha, kb = beta;
  if (kind == ComboKind::plain && kb < ka) std::swap(ka, kb);
  auto& table = kind == ComboKind::plain ? rs.cache().pair_plain : rs.cache().pair_skew;
  {
    std::lock_guard<std::mutex> lk(rs.cache().mu);
    auto it = table.find({ka, kb});
    if (it != table.end()) return it->second;
  }

  // Theta_a Theta_b = sum_B Theta_{a + B b}; each summand folds onto the
  // dominant representative of its orbit (with a sign in the skew case,
  // dropping wall terms).
  OrbitCombo out;
  out.kind = kind;
  for (const auto& B : rs.group()) {
    Weight m = weight_add(ka, B.apply(kb));
    if (kind == ComboKind::plain) {
      out.add(rs.dominant_rep(m).first, Rational(1));
    } else {
      auto rep = rs.signed_dominant_rep(m);
      if (rep) out.add(rep->first, Rational(rep->second));
    }
  }
  std::lock_guard<std::mutex> lk(rs.cache().mu);
  table.emplace(std::make_pair(ka, kb), out);
  return out;
}

OrbitCombo triple_expand(const RootSystem& rs, const Weight& alpha,
                         const Weight& beta, const Weight& gamma,
                         ComboKind kind) {
  Weight lead = kind == ComboKind::skew ? weight_add(rs.delta(), alpha) : alpha;
  OrbitCombo first = orbit_product_expand(rs, lead, beta, kind);
  OrbitCombo out;
  out.kind = kind;
  for (const auto& [nu, c] : first.terms) {
    OrbitCombo second = orbit_product_expand(rs, nu, gamma, kind);
    for (const auto& [mu, d] : second.terms) out.add(mu, c * d);
  }
  return out;
}

bool is_lower_set(const IndexSet& s) {
  for (const auto& p : s.points)
    for (size_t i = 0; i < s.n; ++i) {
      if (p[i] == 0) continue;
      std::vector<long> q = p;
      q[i] -= 1;
      if (!s.contains(q)) return false;
    }
  return true;
}

namespace {

void hypercross_rec(size_t n, size_t r, size_t i, long budget,
                    std::vector<long>& cur, std::set<std::vector<long>>& out) {
  if (i == n) {
    out.insert(cur);
    return;
  }
  for (long a = 0; (a + 1) <= budget; ++a) {
    cur[i] = a;
    hypercross_rec(n, r, i + 1, budget / (a + 1), cur, out);
  }
  cur[i] = 0;
}

}  // namespace

IndexSet hypercross(size_t n, size_t r) {
  if (n < 1 || r < 1) throw std::invalid_argument("hypercross needs n,r >= 1");
  IndexSet s;
  s.n = n;
  s.r = r;
  std::vector<long> cur(n, 0);
  hypercross_rec(n, r, 0, static_cast<long>(r), cur, s.points);
  return s;
}

IndexSet minkowski_sum(const IndexSet& a, const IndexSet& b) {
  IndexSet s;
  s.n = a.n;
  s.r = a.r;
  std::vector<long> e(a.n);
  for (const auto& p : a.points)
    for (const auto& q : b.points) {
      for (size_t i = 0; i < a.n; ++i) e[i] = p[i] + q[i];
      s.points.insert(e);
    }
  return s;
}

IndexSet wcross(const RootSystem& rs, size_t r, ComboKind kind) {
  if (r < 1) throw std::invalid_argument("wcross needs r >= 1");
  size_t n = rs.rank();
  IndexSet h = hypercross(n, r);
  std::vector<Weight> gammas;
  gammas.push_back(Weight(n, 0));
  for (size_t j = 0; j < n; ++j) gammas.push_back(rs.fundamental_weight(j));

  IndexSet out;
  out.n = n;
  out.r = r;
  for (const auto& a : h.points)
    for (const auto& b : h.points)
      for (const auto& g : gammas) {
        OrbitCombo t = triple_expand(rs, a, b, g, kind);
        for (const auto& [nu, c] : t.terms) out.points.insert(nu);
      }
  return out;
}

}  // namespace wsi
