#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <functional>
#include <thread>

#include "wsi/orbitalg.hpp"

using namespace wsi;

namespace {

LaurentPoly from_terms(size_t n, std::initializer_list<std::pair<std::vector<long>, long>> l) {
  LaurentPoly p(n);
  for (const auto& [e, c] : l) p.add_term(e, Rational(c));
  return p;
}

// brute-force rebuild of a combo as a Laurent polynomial
LaurentPoly combo_to_laurent(const RootSystem& rs, const OrbitCombo& c) {
  LaurentPoly acc(rs.rank());
  for (const auto& [w, q] : c.terms) {
    LaurentPoly part = c.kind == ComboKind::skew ? skew_orbit_poly(rs, w) : orbit_poly(rs, w);
    acc = laurent_add(acc, laurent_scale(part, q));
  }
  return acc;
}

}  // namespace

TEST_CASE("orbit polynomials") {
  auto a2 = RootSystem::make_A(2);
  auto a1 = RootSystem::make_A(1);

  CHECK(orbit_poly(*a2, {0, 0}) == from_terms(2, {{{0, 0}, 6}}));
  CHECK(orbit_poly(*a1, {4}) == from_terms(1, {{{4}, 1}, {{-4}, 1}}));
  CHECK(orbit_poly(*a2, {1, 0}) ==
        from_terms(2, {{{1, 0}, 2}, {{-1, 1}, 2}, {{0, -1}, 2}}));
}

TEST_CASE("skew orbit polynomials") {
  auto a2 = RootSystem::make_A(2);
  auto a1 = RootSystem::make_A(1);

  CHECK(skew_orbit_poly(*a2, {1, 1}) ==
        from_terms(2, {{{1, 1}, 1},
                       {{-1, 2}, -1},
                       {{2, -1}, -1},
                       {{1, -2}, 1},
                       {{-2, 1}, 1},
                       {{-1, -1}, -1}}));
  CHECK(skew_orbit_poly(*a2, {1, 0}).is_zero());
  CHECK(skew_orbit_poly(*a1, {3}) == from_terms(1, {{{3}, 1}, {{-3}, -1}}));
}

TEST_CASE("pairwise product expansion") {
  auto a2 = RootSystem::make_A(2);
  OrbitCombo c = orbit_product_expand(*a2, {0, 1}, {1, 0}, ComboKind::plain);
  CHECK(c.terms == std::map<Weight, Rational>{{{1, 1}, 4}, {{0, 0}, 2}});

  c = orbit_product_expand(*a2, {1, 0}, {1, 0}, ComboKind::plain);
  CHECK(c.terms == std::map<Weight, Rational>{{{2, 0}, 2}, {{0, 1}, 4}});

  c = orbit_product_expand(*a2, {1, 1}, {1, 0}, ComboKind::skew);
  CHECK(c.terms == std::map<Weight, Rational>{{{2, 1}, 2}});

  CHECK_THROWS_AS(orbit_product_expand(*a2, {1, 0}, {1, 0}, ComboKind::skew),
                  std::invalid_argument);
}

TEST_CASE("triple product expansion") {
  auto a2 = RootSystem::make_A(2);
  OrbitCombo t = triple_expand(*a2, {1, 0}, {0, 1}, {0, 1}, ComboKind::plain);
  CHECK(t.terms ==
        std::map<Weight, Rational>{{{1, 2}, 8}, {{0, 1}, 20}, {{2, 0}, 8}});

  // gamma = 0 scales the pair expansion by |W|
  OrbitCombo pair = orbit_product_expand(*a2, {2, 1}, {1, 1}, ComboKind::plain);
  OrbitCombo t0 = triple_expand(*a2, {2, 1}, {1, 1}, {0, 0}, ComboKind::plain);
  for (const auto& [w, q] : pair.terms) CHECK(t0.terms.at(w) == q * 6);

  // chained skew expansion: ThetaHat_delta Theta_{1,0}^2
  OrbitCombo ts = triple_expand(*a2, {0, 0}, {1, 0}, {1, 0}, ComboKind::skew);
  CHECK(ts.terms == std::map<Weight, Rational>{{{3, 1}, 4}, {{1, 2}, 4}});
}

TEST_CASE("expansion against the literal Laurent product") {
  for (auto rs : {RootSystem::make_A(2), RootSystem::make_B2()}) {
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= 3; ++b)
        for (long c = 0; c <= 3; ++c)
          for (long d = 0; d <= 3; d += 3) {
            Weight alpha{a, b}, beta{c, d};
            OrbitCombo plain = orbit_product_expand(*rs, alpha, beta, ComboKind::plain);
            CHECK(combo_to_laurent(*rs, plain) ==
                  laurent_mul(orbit_poly(*rs, alpha), orbit_poly(*rs, beta)));
            CHECK(plain.terms.size() <= rs->group_order());
            Weight sum = weight_add(alpha, beta);
            for (const auto& [nu, q] : plain.terms) {
              CHECK(rs->dominance_leq(nu, sum));
              CHECK(q != 0);
            }
            CHECK(plain.terms.at(sum) != 0);

            if (is_strongly_dominant(alpha)) {
              OrbitCombo skew = orbit_product_expand(*rs, alpha, beta, ComboKind::skew);
              CHECK(combo_to_laurent(*rs, skew) ==
                    laurent_mul(skew_orbit_poly(*rs, alpha), orbit_poly(*rs, beta)));
            }
          }
  }
}

TEST_CASE("Weyl action fixes orbit polynomials") {
  for (auto rs : {RootSystem::make_A(2), RootSystem::make_B2()}) {
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= 3; ++b) {
        LaurentPoly plain = orbit_poly(*rs, {a, b});
        LaurentPoly skew = skew_orbit_poly(*rs, {a, b});
        for (const auto& g : rs->group()) {
          CHECK(laurent_apply(g, plain) == plain);
          LaurentPoly moved = laurent_apply(g, skew);
          CHECK(moved == laurent_scale(skew, Rational(g.det)));
        }
      }
  }
}

TEST_CASE("hypercross") {
  IndexSet h = hypercross(2, 2);
  CHECK(h.points ==
        std::set<std::vector<long>>{{0, 0}, {1, 0}, {0, 1}});
  IndexSet h1 = hypercross(1, 5);
  CHECK(h1.points == std::set<std::vector<long>>{{0}, {1}, {2}, {3}, {4}});

  // brute-force count over a box for n=2, r=13
  size_t count = 0;
  for (long a = 0; a <= 13; ++a)
    for (long b = 0; b <= 13; ++b)
      if ((a + 1) * (b + 1) <= 13) ++count;
  CHECK(hypercross(2, 13).size() == count);
  CHECK(hypercross(2, 13).size() == 37);
  CHECK(is_lower_set(hypercross(2, 13)));
  CHECK(is_lower_set(hypercross(3, 9)));
}

TEST_CASE("every small lower set sits inside the hypercross") {
  // lower sets in N^2 of size r correspond to partitions of r
  for (long r = 1; r <= 8; ++r) {
    std::vector<std::vector<long>> parts;  // weakly decreasing column heights
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long left, long maxpart) {
      if (left == 0) {
        parts.push_back(cur);
        return;
      }
      for (long p = std::min(left, maxpart); p >= 1; --p) {
        cur.push_back(p);
        rec(left - p, p);
        cur.pop_back();
      }
    };
    rec(r, r);
    IndexSet h = hypercross(2, r);
    for (const auto& part : parts) {
      IndexSet s;
      s.n = 2;
      s.r = r;
      for (size_t col = 0; col < part.size(); ++col)
        for (long row = 0; row < part[col]; ++row)
          s.points.insert({static_cast<long>(col), row});
      CHECK(is_lower_set(s));
      for (const auto& p : s.points) CHECK(h.contains(p));
    }
  }
}

TEST_CASE("wcross index sets") {
  auto a2 = RootSystem::make_A(2);
  IndexSet wc = wcross(*a2, 2, ComboKind::plain);
  CHECK(wc.points == std::set<std::vector<long>>{{0, 0},
                                                 {0, 1},
                                                 {0, 2},
                                                 {0, 3},
                                                 {1, 0},
                                                 {1, 1},
                                                 {1, 2},
                                                 {2, 0},
                                                 {2, 1},
                                                 {3, 0}});
  IndexSet wcs = wcross(*a2, 2, ComboKind::skew);
  CHECK(wcs.points == std::set<std::vector<long>>{{1, 1},
                                                  {2, 1},
                                                  {1, 2},
                                                  {3, 1},
                                                  {2, 2},
                                                  {1, 3},
                                                  {4, 1},
                                                  {3, 2},
                                                  {2, 3},
                                                  {1, 4}});

  // wcross contains the Minkowski triple sum for the plain kind
  for (auto rs : {a2, RootSystem::make_B2()}) {
    for (size_t r : {2, 4, 6}) {
      IndexSet h = hypercross(2, r);
      IndexSet s3 = minkowski_sum(minkowski_sum(h, h), hypercross(2, 2));
      IndexSet w = wcross(*rs, r, ComboKind::plain);
      for (const auto& p : s3.points) CHECK(w.contains(p));
    }
  }

  // and strictly more for B2
  auto b2 = RootSystem::make_B2();
  IndexSet w6 = wcross(*b2, 6, ComboKind::plain);
  IndexSet h6 = hypercross(2, 6);
  IndexSet s36 = minkowski_sum(minkowski_sum(h6, h6), hypercross(2, 2));
  bool outlier = false;
  for (const auto& p : w6.points)
    if (!s36.contains(p)) outlier = true;
  CHECK(outlier);
}

TEST_CASE("memo tables are safe to share across threads") {
  auto b2 = RootSystem::make_B2();
  OrbitCombo want = orbit_product_expand(*b2, {2, 1}, {1, 2}, ComboKind::plain);
  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&] {
      for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b) {
          OrbitCombo c = orbit_product_expand(*b2, {2, 1}, {1, 2}, ComboKind::plain);
          if (!(c == want)) ++mismatches;
          orbit_product_expand(*b2, {a, b}, {b, a}, ComboKind::plain);
          orbit_poly(*b2, {a, b});
        }
    });
  for (auto& w : workers) w.join();
  CHECK(mismatches == 0);
}

TEST_CASE("laurent evaluation") {
  auto a2 = RootSystem::make_A(2);
  CHECK(laurent_eval(orbit_poly(*a2, {1, 1}), {Rational(1), Rational(1)}) == 6);

  LaurentPoly p(1);
  p.add_term({1}, Rational(1));
  p.add_term({-1}, Rational(1));
  CHECK(laurent_eval(p, {Rational(2)}) == make_rational(5, 2));
  CHECK_THROWS_AS(laurent_eval(p, {Rational(0)}), std::domain_error);

  // term-by-term oracle for the skew orbit polynomial at (4, 4)
  LaurentPoly sd = skew_orbit_poly(*a2, {1, 1});
  Rational xi(4);
  Rational direct(0);
  for (const auto& [e, c] : sd.terms)
    direct += c * rat_pow(xi, e[0]) * rat_pow(xi, e[1]);
  CHECK(laurent_eval(sd, {xi, xi}) == direct);
}
