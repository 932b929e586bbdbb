#include "wsi/selftest.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "wsi/cheb.hpp"
#include "wsi/interp.hpp"

namespace wsi {

namespace {

// X_i -> Theta_{omega_i}
LaurentPoly substitute_orbit_gens(const RootSystem& rs, const DensePoly& p) {
  size_t n = rs.rank();
  std::vector<LaurentPoly> gens;
  for (size_t j = 0; j < n; ++j) gens.push_back(orbit_poly(rs, rs.fundamental_weight(j)));
  std::vector<std::map<long, LaurentPoly>> pows(n);
  std::function<const LaurentPoly&(size_t, long)> gen_pow =
      [&](size_t j, long e) -> const LaurentPoly& {
    auto it = pows[j].find(e);
    if (it != pows[j].end()) return it->second;
    LaurentPoly v = e == 1 ? gens[j] : laurent_mul(gen_pow(j, e - 1), gens[j]);
    return pows[j].emplace(e, std::move(v)).first->second;
  };
  LaurentPoly acc(n);
  for (const auto& [e, c] : p.terms) {
    LaurentPoly m(n);
    m.add_term(std::vector<long>(n, 0), c);
    for (size_t j = 0; j < n; ++j)
      if (e[j] != 0) m = laurent_mul(m, gen_pow(j, e[j]));
    acc = laurent_add(acc, m);
  }
  return acc;
}

std::vector<Weight> dominant_box(size_t n, long cap) {
  std::vector<Weight> out;
  Weight w(n, 0);
  while (true) {
    out.push_back(w);
    size_t i = 0;
    while (i < n && w[i] == cap) w[i++] = 0;
    if (i == n) break;
    w[i] += 1;
  }
  return out;
}

struct RelationFixture {
  Weight lhs_a, lhs_b;
  ComboKind kind;
  std::vector<std::pair<long, Weight>> rhs;
};

// Pairwise products of the A2 orbit polynomials over the order-2
// hypercross neighbourhood, plain and skew.
const std::vector<RelationFixture>& a2_relations() {
  static const std::vector<RelationFixture> rel = {
      {{0, 0}, {0, 0}, ComboKind::plain, {{6, {0, 0}}}},
      {{0, 0}, {0, 1}, ComboKind::plain, {{6, {0, 1}}}},
      {{0, 0}, {1, 0}, ComboKind::plain, {{6, {1, 0}}}},
      {{0, 1}, {0, 1}, ComboKind::plain, {{2, {0, 2}}, {4, {1, 0}}}},
      {{0, 1}, {1, 0}, ComboKind::plain, {{4, {1, 1}}, {2, {0, 0}}}},
      {{1, 0}, {1, 0}, ComboKind::plain, {{2, {2, 0}}, {4, {0, 1}}}},
      {{2, 0}, {0, 0}, ComboKind::plain, {{6, {2, 0}}}},
      {{2, 0}, {1, 0}, ComboKind::plain, {{2, {3, 0}}, {4, {1, 1}}}},
      {{2, 0}, {0, 1}, ComboKind::plain, {{4, {2, 1}}, {2, {1, 0}}}},
      {{1, 1}, {0, 0}, ComboKind::plain, {{6, {1, 1}}}},
      {{1, 1}, {1, 0}, ComboKind::plain, {{2, {2, 1}}, {2, {0, 2}}, {2, {1, 0}}}},
      {{1, 1}, {0, 1}, ComboKind::plain, {{2, {1, 2}}, {2, {2, 0}}, {2, {0, 1}}}},
      {{0, 2}, {0, 0}, ComboKind::plain, {{6, {0, 2}}}},
      {{0, 2}, {1, 0}, ComboKind::plain, {{4, {1, 2}}, {2, {0, 1}}}},
      {{0, 2}, {0, 1}, ComboKind::plain, {{2, {0, 3}}, {4, {1, 1}}}},
      {{1, 1}, {0, 0}, ComboKind::skew, {{6, {1, 1}}}},
      {{1, 1}, {1, 0}, ComboKind::skew, {{2, {2, 1}}}},
      {{1, 1}, {0, 1}, ComboKind::skew, {{2, {1, 2}}}},
      {{2, 1}, {0, 0}, ComboKind::skew, {{6, {2, 1}}}},
      {{2, 1}, {1, 0}, ComboKind::skew, {{2, {3, 1}}, {2, {1, 2}}}},
      {{2, 1}, {0, 1}, ComboKind::skew, {{2, {2, 2}}, {2, {1, 1}}}},
      {{1, 2}, {0, 0}, ComboKind::skew, {{6, {1, 2}}}},
      {{1, 2}, {1, 0}, ComboKind::skew, {{2, {2, 2}}, {2, {1, 1}}}},
      {{1, 2}, {0, 1}, ComboKind::skew, {{2, {1, 3}}, {2, {2, 1}}}},
      {{3, 1}, {0, 0}, ComboKind::skew, {{6, {3, 1}}}},
      {{3, 1}, {1, 0}, ComboKind::skew, {{2, {4, 1}}, {2, {2, 2}}}},
      {{3, 1}, {0, 1}, ComboKind::skew, {{2, {3, 2}}, {2, {2, 1}}}},
      {{2, 2}, {0, 0}, ComboKind::skew, {{6, {2, 2}}}},
      {{2, 2}, {1, 0}, ComboKind::skew, {{2, {3, 2}}, {2, {1, 3}}, {2, {2, 1}}}},
      {{2, 2}, {0, 1}, ComboKind::skew, {{2, {2, 3}}, {2, {3, 1}}, {2, {1, 2}}}},
      {{1, 3}, {0, 0}, ComboKind::skew, {{6, {1, 3}}}},
      {{1, 3}, {1, 0}, ComboKind::skew, {{2, {2, 3}}, {2, {1, 2}}}},
      {{1, 3}, {0, 1}, ComboKind::skew, {{2, {1, 4}}, {2, {2, 2}}}},
  };
  return rel;
}

struct TableEntry {
  Weight w;
  const char* expect;
};

const std::vector<TableEntry>& a2_t_table() {
  static const std::vector<TableEntry> t = {
      {{0, 0}, "6"},
      {{1, 0}, "X1"},
      {{0, 1}, "X2"},
      {{2, 0}, "1/2*X1^2 - 2*X2"},
      {{1, 1}, "1/4*X1*X2 - 3"},
      {{0, 2}, "1/2*X2^2 - 2*X1"},
      {{3, 0}, "1/4*X1^3 - 3/2*X1*X2 + 6"},
      {{2, 1}, "1/8*X1^2*X2 - 1/2*X2^2 - 1/2*X1"},
      {{1, 2}, "1/8*X1*X2^2 - 1/2*X1^2 - 1/2*X2"},
      {{0, 3}, "1/4*X2^3 - 3/2*X1*X2 + 6"},
      {{4, 0}, "1/8*X1^4 - X1^2*X2 + X2^2 + 4*X1"},
      {{3, 1}, "1/16*X1^3*X2 - 3/8*X1*X2^2 - 1/4*X1^2 + 5/2*X2"},
      {{2, 2}, "1/16*X1^2*X2^2 - 1/4*X2^3 - 1/4*X1^3 + X1*X2 - 3"},
      {{1, 3}, "1/16*X1*X2^3 - 3/8*X1^2*X2 - 1/4*X2^2 + 5/2*X1"},
      {{0, 4}, "1/8*X2^4 - X1*X2^2 + X1^2 + 4*X2"},
  };
  return t;
}

const std::vector<TableEntry>& a2_u_table() {
  static const std::vector<TableEntry> t = {
      {{0, 0}, "1"},
      {{1, 0}, "1/2*X1"},
      {{0, 1}, "1/2*X2"},
      {{2, 0}, "1/4*X1^2 - 1/2*X2"},
      {{1, 1}, "1/4*X1*X2 - 1"},
      {{0, 2}, "1/4*X2^2 - 1/2*X1"},
      {{3, 0}, "1/8*X1^3 - 1/2*X1*X2 + 1"},
      {{2, 1}, "1/8*X1^2*X2 - 1/4*X2^2 - 1/2*X1"},
      {{1, 2}, "1/8*X1*X2^2 - 1/4*X1^2 - 1/2*X2"},
      {{0, 3}, "1/8*X2^3 - 1/2*X1*X2 + 1"},
      {{4, 0}, "1/16*X1^4 - 3/8*X1^2*X2 + 1/4*X2^2 + X1"},
      {{3, 1}, "1/16*X1^3*X2 - 1/4*X1*X2^2 - 1/4*X1^2 + X2"},
      {{2, 2}, "1/16*X1^2*X2^2 - 1/8*X2^3 - 1/8*X1^3"},
      {{1, 3}, "1/16*X1*X2^3 - 1/4*X1^2*X2 - 1/4*X2^2 + X1"},
      {{0, 4}, "1/16*X2^4 - 3/8*X1*X2^2 + 1/4*X1^2 + X2"},
  };
  return t;
}

const std::vector<TableEntry>& b2_t_table() {
  static const std::vector<TableEntry> t = {
      {{0, 0}, "8"},
      {{1, 0}, "X1"},
      {{0, 1}, "X2"},
      {{2, 0}, "1/2*X1^2 - X2^2 + 4*X1 + 8"},
      {{1, 1}, "1/4*X1*X2 - X2"},
      {{0, 2}, "1/2*X2^2 - 2*X1 - 8"},
      {{3, 0}, "1/4*X1^3 - 3/4*X1*X2^2 + 3*X1^2 + 9*X1"},
      {{2, 1}, "1/8*X1^2*X2 - 1/4*X2^3 + 3/4*X1*X2 + 3*X2"},
      {{1, 2}, "1/8*X1*X2^2 - 1/2*X1^2 - 3*X1"},
      {{0, 3}, "1/4*X2^3 - 3/2*X1*X2 - 3*X2"},
      {{4, 0},
       "1/8*X1^4 - 1/2*X1^2*X2^2 + 2*X1^3 + 1/4*X2^4 - 2*X1*X2^2 + 10*X1^2 - "
       "4*X2^2 + 16*X1 + 8"},
      {{3, 1},
       "1/16*X1^3*X2 - 3/16*X1*X2^3 + 5/8*X1^2*X2 + 1/4*X2^3 + 3/2*X1*X2 - 3*X2"},
      {{2, 2},
       "1/16*X1^2*X2^2 - 1/4*X1^3 - 1/8*X2^4 + X1*X2^2 - 3*X1^2 + 5/2*X2^2 - "
       "10*X1 - 8"},
      {{1, 3}, "1/16*X1*X2^3 - 3/8*X1^2*X2 - X1*X2 + X2"},
      {{0, 4}, "1/8*X2^4 - X1*X2^2 + X1^2 - 2*X2^2 + 8*X1 + 8"},
  };
  return t;
}

const std::vector<TableEntry>& b2_u_table() {
  static const std::vector<TableEntry> t = {
      {{0, 0}, "1"},
      {{1, 0}, "1/2*X1 + 1"},
      {{0, 1}, "1/2*X2"},
      {{2, 0}, "1/4*X1^2 - 1/4*X2^2 + 3/2*X1 + 2"},
      {{1, 1}, "1/4*X1*X2"},
      {{0, 2}, "1/4*X2^2 - 1/2*X1 - 2"},
      {{3, 0}, "1/8*X1^3 - 1/4*X1*X2^2 + 5/4*X1^2 - 1/4*X2^2 + 7/2*X1 + 2"},
      {{2, 1}, "1/8*X1^2*X2 - 1/8*X2^3 + 1/2*X1*X2 + X2"},
      {{1, 2}, "1/8*X1*X2^2 - 1/4*X1^2 - 3/2*X1 - 1"},
      {{0, 3}, "1/8*X2^3 - 1/2*X1*X2 - 3/2*X2"},
      {{4, 0},
       "1/16*X1^4 - 3/16*X1^2*X2^2 + 7/8*X1^3 + 1/16*X2^4 - 3/4*X1*X2^2 + "
       "4*X1^2 - X2^2 + 13/2*X1 + 3"},
      {{3, 1}, "1/16*X1^3*X2 - 1/8*X1*X2^3 + 1/2*X1^2*X2 + 5/4*X1*X2"},
      {{2, 2},
       "1/16*X1^2*X2^2 - 1/8*X1^3 - 1/16*X2^4 + 3/8*X1*X2^2 - 5/4*X1^2 + X2^2 "
       "- 7/2*X1 - 3"},
      {{1, 3}, "1/16*X1*X2^3 - 1/4*X1^2*X2 - X1*X2"},
      {{0, 4}, "1/16*X2^4 - 3/8*X1*X2^2 + 1/4*X1^2 - X2^2 + 2*X1 + 3"},
  };
  return t;
}

std::set<std::vector<long>> points_from(std::initializer_list<std::pair<long, long>> l) {
  std::set<std::vector<long>> s;
  for (auto& [a, b] : l) s.insert({a, b});
  return s;
}

}  // namespace

bool check_group_catalog(std::string& msg) {
  struct Want {
    const char* type;
    size_t rank, order;
    long den;
  } wants[] = {{"A", 1, 2, 2}, {"A", 2, 6, 3}, {"B", 2, 8, 2}, {"A", 3, 24, 4}};
  for (const auto& w : wants) {
    auto rs = RootSystem::make_named(w.type, w.rank);
    if (rs->group_order() != w.order || rs->denominator() != w.den) {
      msg = std::string(w.type) + std::to_string(w.rank) + ": got order " +
            std::to_string(rs->group_order()) + ", D " + std::to_string(rs->denominator());
      return false;
    }
  }
  auto a2 = RootSystem::make_A(2);
  if (a2->gram()[0][0] != make_rational(2, 3) || a2->gram()[0][1] != make_rational(1, 3) ||
      a2->gram()[1][0] != make_rational(1, 3) || a2->gram()[1][1] != make_rational(2, 3)) {
    msg = "A2 Gram matrix mismatch";
    return false;
  }
  auto b2 = RootSystem::make_B2();
  if (b2->gram()[0][0] != 1 || b2->gram()[0][1] != make_rational(1, 2) ||
      b2->gram()[1][1] != make_rational(1, 2)) {
    msg = "B2 Gram matrix mismatch";
    return false;
  }
  return true;
}

bool check_product_relations(std::string& msg) {
  auto a2 = RootSystem::make_A(2);
  for (const auto& rel : a2_relations()) {
    OrbitCombo got = orbit_product_expand(*a2, rel.lhs_a, rel.lhs_b, rel.kind);
    OrbitCombo want;
    want.kind = rel.kind;
    for (const auto& [c, w] : rel.rhs) want.add(w, Rational(c));
    if (!(got == want)) {
      msg = "product expansion mismatch at " + weight_to_string(rel.lhs_a) + "*" +
            weight_to_string(rel.lhs_b);
      return false;
    }
  }
  OrbitCombo triple = triple_expand(*a2, {1, 0}, {0, 1}, {0, 1}, ComboKind::plain);
  OrbitCombo want;
  want.add({1, 2}, Rational(8));
  want.add({0, 1}, Rational(20));
  want.add({2, 0}, Rational(8));
  if (!(triple == want)) {
    msg = "triple product expansion mismatch";
    return false;
  }
  return true;
}

bool check_cheb_tables(std::string& msg) {
  struct Suite {
    RootSystemPtr rs;
    const std::vector<TableEntry>* table;
    bool second;
  };
  auto a2 = RootSystem::make_A(2);
  auto b2 = RootSystem::make_B2();
  Suite suites[] = {{a2, &a2_t_table(), false},
                    {a2, &a2_u_table(), true},
                    {b2, &b2_t_table(), false},
                    {b2, &b2_u_table(), true}};
  for (const auto& s : suites) {
    for (const auto& entry : *s.table) {
      DensePoly p = s.second ? chebyshev_U(*s.rs, entry.w) : chebyshev_T(*s.rs, entry.w);
      std::string got = dense_to_string(*s.rs, p);
      if (got != entry.expect) {
        msg = s.rs->name() + (s.second ? " U" : " T") + weight_to_string(entry.w) +
              ": got " + got;
        return false;
      }
      // the defining identity certifies each entry independently
      LaurentPoly lhs = substitute_orbit_gens(*s.rs, p);
      LaurentPoly rhs =
          s.second ? character_poly(*s.rs, entry.w) : orbit_poly(*s.rs, entry.w);
      if (!(lhs == rhs)) {
        msg = s.rs->name() + (s.second ? " U" : " T") + weight_to_string(entry.w) +
              " fails its defining identity";
        return false;
      }
    }
  }
  return true;
}

bool check_character_formula(long entry_cap, std::string& msg) {
  for (auto rs : {RootSystem::make_A(2), RootSystem::make_B2()}) {
    LaurentPoly denom = skew_orbit_poly(*rs, rs->delta());
    for (const auto& alpha : dominant_box(rs->rank(), entry_cap)) {
      LaurentPoly lhs = laurent_mul(denom, character_poly(*rs, alpha));
      LaurentPoly rhs = skew_orbit_poly(*rs, weight_add(rs->delta(), alpha));
      if (!(lhs == rhs)) {
        msg = rs->name() + " character formula fails at " + weight_to_string(alpha);
        return false;
      }
    }
  }
  return true;
}

bool check_defining_identity(long entry_cap, std::string& msg) {
  for (auto rs : {RootSystem::make_A(1), RootSystem::make_A(2), RootSystem::make_B2()}) {
    for (const auto& alpha : dominant_box(rs->rank(), entry_cap)) {
      if (!(substitute_orbit_gens(*rs, chebyshev_T(*rs, alpha)) == orbit_poly(*rs, alpha))) {
        msg = rs->name() + " T identity fails at " + weight_to_string(alpha);
        return false;
      }
      if (!(substitute_orbit_gens(*rs, chebyshev_U(*rs, alpha)) ==
            character_poly(*rs, alpha))) {
        msg = rs->name() + " U identity fails at " + weight_to_string(alpha);
        return false;
      }
    }
  }
  return true;
}

bool check_log_recovery(size_t trials, unsigned seed, std::string& msg) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> entry(0, 10);
  std::uniform_int_distribution<long> strong_entry(1, 10);
  for (auto rs : {RootSystem::make_A(2), RootSystem::make_B2()}) {
    XiConfig xi = make_xi_config(*rs, default_xi0(*rs));
    auto mus = rs->strongly_dominant_basis();
    for (size_t t = 0; t < trials; ++t) {
      Weight omega(rs->rank());
      for (auto& c : omega) c = entry(rng);
      for (const auto& mu : mus) {
        long want = to_long_checked(Rational(rs->denominator()) * rs->inner(mu, omega));
        if (floor_log_exp(orbit_value_at(*rs, xi, omega, mu, false), xi.xi0) != want) {
          msg = rs->name() + " floor recovery fails at " + weight_to_string(omega);
          return false;
        }
      }
      Weight strong(rs->rank());
      for (auto& c : strong) c = strong_entry(rng);
      for (const auto& mu : mus) {
        long want = to_long_checked(Rational(rs->denominator()) * rs->inner(mu, strong));
        if (nint_log_exp(orbit_value_at(*rs, xi, strong, mu, true), xi.xi0) != want) {
          msg = rs->name() + " nint recovery fails at " + weight_to_string(strong);
          return false;
        }
      }
    }
  }
  return true;
}

bool check_eval_sets(std::string& msg) {
  auto a2 = RootSystem::make_A(2);
  auto ten = points_from({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0},
                          {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}});
  {
    IndexSet h = hypercross(2, 2);
    std::set<std::vector<long>> sums;
    for (const auto& a : h.points)
      for (const auto& b : h.points)
        for (long g = 0; g <= 2; ++g)
          sums.insert({a[0] + b[0] + (g == 1 ? 1 : 0), a[1] + b[1] + (g == 2 ? 1 : 0)});
    if (sums != ten) {
      msg = "monomial evaluation exponents differ";
      return false;
    }
  }
  {
    IndexSet wc = wcross(*a2, 2, ComboKind::plain);
    if (wc.points != ten) {
      msg = "first-kind evaluation index set differs";
      return false;
    }
    XiConfig xi = make_xi_config(*a2, 82);
    auto expect = points_from(
        {{0, 0}, {1, 2}, {2, 4}, {3, 6}, {2, 1}, {3, 3}, {4, 5}, {4, 2}, {5, 4}, {6, 3}});
    std::set<std::vector<long>> got;
    for (const auto& nu : wc.points) {
      auto pt = eval_point(*a2, xi, nu);
      got.insert({floor_log_exp(pt[0], 82), floor_log_exp(pt[1], 82)});
    }
    if (got != expect) {
      msg = "first-kind evaluation points differ";
      return false;
    }
  }
  {
    IndexSet wc = wcross(*a2, 2, ComboKind::skew);
    auto expect_idx = points_from(
        {{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {1, 3}, {4, 1}, {3, 2}, {2, 3}, {1, 4}});
    if (wc.points != expect_idx) {
      msg = "second-kind evaluation index set differs";
      return false;
    }
    XiConfig xi = make_xi_config(*a2, 82);
    auto expect = points_from(
        {{3, 3}, {4, 5}, {5, 7}, {6, 9}, {5, 4}, {6, 6}, {7, 8}, {7, 5}, {8, 7}, {9, 6}});
    std::set<std::vector<long>> got;
    for (const auto& nu : wc.points) {
      auto pt = eval_point(*a2, xi, nu);
      got.insert({floor_log_exp(pt[0], 82), floor_log_exp(pt[1], 82)});
    }
    if (got != expect) {
      msg = "second-kind evaluation points differ";
      return false;
    }
  }
  return true;
}

bool check_wcross_structure(std::string& msg) {
  auto a2 = RootSystem::make_A(2);
  auto b2 = RootSystem::make_B2();
  auto sum3 = [](size_t n, size_t r) {
    IndexSet h = hypercross(n, r);
    return minkowski_sum(minkowski_sum(h, h), hypercross(n, 2));
  };
  for (size_t r : {6, 13, 20}) {
    IndexSet wc = wcross(*b2, r, ComboKind::plain);
    IndexSet s3 = sum3(2, r);
    bool outlier = false;
    for (const auto& p : wc.points)
      if (!s3.contains(p)) {
        outlier = true;
        break;
      }
    if (!outlier) {
      msg = "B2 wcross(" + std::to_string(r) + ") has no points outside the triple sum";
      return false;
    }
  }
  for (size_t r = 1; r <= 20; ++r) {
    IndexSet wc = wcross(*a2, r, ComboKind::plain);
    IndexSet s3 = sum3(2, r);
    for (const auto& p : wc.points)
      if (!s3.contains(p)) {
        msg = "A2 wcross(" + std::to_string(r) + ") escapes the triple sum at " +
              weight_to_string(p);
        return false;
      }
  }
  for (auto rs : {a2, b2}) {
    double order = static_cast<double>(rs->group_order());
    for (size_t r : {4, 8, 16}) {
      double bound = 2.0 * order * order * r * r *
                     std::pow(std::log(static_cast<double>(r)), 2.0 * rs->rank() - 2.0);
      size_t card = wcross(*rs, r, ComboKind::plain).size();
      if (static_cast<double>(card) > bound) {
        msg = rs->name() + " wcross(" + std::to_string(r) + ") cardinality " +
              std::to_string(card) + " exceeds the bound";
        return false;
      }
    }
  }
  return true;
}

bool check_roundtrip_smoke(std::string& msg) {
  auto a2 = RootSystem::make_A(2);
  {
    SparseRepresentation f{Basis::monomial, nullptr,
                           {{Rational(5), {2, -1}}, {Rational(-3), {-1, 3}}}};
    BlackBox bb = blackbox_from(f);
    auto res = laurent_interpolate(2, Rational(2), bb, 2);
    if (!res.rep.same_terms(f) || res.evaluations > 10) {
      msg = "monomial round trip failed";
      return false;
    }
  }
  {
    SparseRepresentation f{Basis::cheb1, a2, {{Rational(2), {2, 1}}, {Rational(5), {1, 3}}}};
    BlackBox bb = blackbox_from(f);
    auto res = first_kind_interpolate(a2, 2, 82, bb);
    if (!res.rep.same_terms(f) || res.evaluations > 10) {
      msg = "first-kind round trip failed";
      return false;
    }
  }
  {
    SparseRepresentation f{Basis::cheb2, a2, {{Rational(1), {1, 1}}, {Rational(-4), {0, 2}}}};
    BlackBox bb = blackbox_from(f);
    auto res = second_kind_interpolate(a2, 2, 82, bb);
    if (!res.rep.same_terms(f) || res.evaluations > 10) {
      msg = "second-kind round trip failed";
      return false;
    }
  }
  return true;
}

int run_selftest(std::ostream& os) {
  struct Suite {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  Suite suites[] = {
      {"group-catalog", check_group_catalog},
      {"product-relations", check_product_relations},
      {"chebyshev-tables", check_cheb_tables},
      {"weyl-character-formula", [](std::string& m) { return check_character_formula(3, m); }},
      {"defining-identity", [](std::string& m) { return check_defining_identity(2, m); }},
      {"log-recovery", [](std::string& m) { return check_log_recovery(10, 2024, m); }},
      {"evaluation-sets", check_eval_sets},
      {"wcross-structure", check_wcross_structure},
      {"round-trip", check_roundtrip_smoke},
  };
  int bad = 0;
  for (const auto& s : suites) {
    std::string detail;
    bool ok = false;
    try {
      ok = s.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (ok) {
      os << "[ok]   " << s.name << "\n";
    } else {
      os << "[FAIL] " << s.name << ": " << detail << "\n";
      ++bad;
    }
  }
  return bad == 0 ? 0 : 1;
}

}  // namespace wsi
