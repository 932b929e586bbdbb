#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wsi/linalg.hpp"
#include "wsi/rootsys.hpp"

using namespace wsi;

TEST_CASE("catalog data for the named systems") {
  auto a1 = RootSystem::make_A(1);
  CHECK(a1->group_order() == 2);
  CHECK(a1->denominator() == 2);
  CHECK(a1->gram()[0][0] == make_rational(1, 2));
  std::set<std::vector<std::vector<long>>> mats;
  for (const auto& g : a1->group()) mats.insert(g.mat);
  CHECK(mats == std::set<std::vector<std::vector<long>>>{{{1}}, {{-1}}});

  auto a2 = RootSystem::make_A(2);
  CHECK(a2->group_order() == 6);
  CHECK(a2->denominator() == 3);
  CHECK(a2->gram()[0][0] == make_rational(2, 3));
  CHECK(a2->gram()[0][1] == make_rational(1, 3));
  CHECK(a2->gram()[1][1] == make_rational(2, 3));
  CHECK(a2->base_roots()[0] == Weight{2, -1});
  CHECK(a2->base_roots()[1] == Weight{-1, 2});

  auto b2 = RootSystem::make_B2();
  CHECK(b2->group_order() == 8);
  CHECK(b2->denominator() == 2);
  CHECK(b2->gram()[0][0] == 1);
  CHECK(b2->gram()[0][1] == make_rational(1, 2));
  CHECK(b2->gram()[1][1] == make_rational(1, 2));

  CHECK(RootSystem::make_A(3)->group_order() == 24);
  CHECK(RootSystem::make_A(3)->denominator() == 4);
}

TEST_CASE("inner product") {
  auto a2 = RootSystem::make_A(2);
  CHECK(a2->inner(a2->base_roots()[0], a2->base_roots()[0]) == 2);
  CHECK(a2->inner({0, 0}, {3, -7}) == 0);
  CHECK(a2->inner({1, 0}, {1, 0}) == make_rational(2, 3));
  CHECK_THROWS_AS((void)a2->inner({1}, {1, 0}), std::invalid_argument);
  // symmetry and bilinearity on a few vectors
  Weight u{2, -3}, v{1, 4}, w{-5, 1};
  CHECK(a2->inner(u, v) == a2->inner(v, u));
  CHECK(a2->inner(weight_add(u, w), v) == a2->inner(u, v) + a2->inner(w, v));
}

TEST_CASE("orbits") {
  auto a2 = RootSystem::make_A(2);
  std::set<Weight> got;
  for (const auto& w : a2->orbit({1, 1})) got.insert(w);
  std::set<Weight> want = {{1, 1}, {-1, 2}, {2, -1}, {1, -2}, {-2, 1}, {-1, -1}};
  CHECK(got == want);
  CHECK(a2->orbit({0, 0}) == std::vector<Weight>{{0, 0}});
  CHECK(a2->orbit({1, 0}).size() == 3);
  // |orbit| * |stabilizer| = |W|
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y)
      CHECK(a2->orbit({x, y}).size() * a2->stabilizer_order({x, y}) == a2->group_order());
}

TEST_CASE("dominant representatives") {
  auto a2 = RootSystem::make_A(2);
  auto [rep, witness] = a2->dominant_rep({-1, 2});
  CHECK(rep == Weight{1, 1});
  CHECK(witness.apply({-1, 2}) == Weight{1, 1});

  auto [rep2, w2] = a2->dominant_rep({2, 1});
  CHECK(rep2 == Weight{2, 1});
  CHECK(w2.apply({2, 1}) == Weight{2, 1});

  auto a1 = RootSystem::make_A(1);
  auto [rep3, w3] = a1->dominant_rep({-5});
  CHECK(rep3 == Weight{5});
  CHECK(w3.mat == std::vector<std::vector<long>>{{-1}});

  // exhaustively: exactly one dominant weight per orbit, |w_i| <= 5
  for (auto rs : {a2, RootSystem::make_B2()}) {
    for (long x = -5; x <= 5; ++x)
      for (long y = -5; y <= 5; ++y) {
        size_t dominant = 0;
        for (const auto& o : rs->orbit({x, y}))
          if (is_dominant(o)) ++dominant;
        CHECK(dominant == 1);
        auto [r, a] = rs->dominant_rep({x, y});
        CHECK(is_dominant(r));
        CHECK(a.apply({x, y}) == r);
      }
  }
}

TEST_CASE("signed dominant representatives") {
  auto a2 = RootSystem::make_A(2);
  auto strong = a2->signed_dominant_rep({2, 1});
  REQUIRE(strong.has_value());
  CHECK(strong->first == Weight{2, 1});
  CHECK(strong->second == 1);

  CHECK_FALSE(a2->signed_dominant_rep({1, 0}).has_value());

  // image of delta under the first simple reflection
  Weight image = a2->generators()[0].apply({1, 1});
  CHECK(image == Weight{-1, 2});
  auto back = a2->signed_dominant_rep(image);
  REQUIRE(back.has_value());
  CHECK(back->first == Weight{1, 1});
  CHECK(back->second == -1);

  // empty exactly when the stabilizer is nontrivial
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y) {
      bool empty = !a2->signed_dominant_rep({x, y}).has_value();
      CHECK(empty == (a2->stabilizer_order({x, y}) > 1));
    }
}

TEST_CASE("strongly dominant basis") {
  CHECK(RootSystem::make_A(1)->strongly_dominant_basis() == std::vector<Weight>{{1}});
  CHECK(RootSystem::make_A(2)->strongly_dominant_basis() ==
        std::vector<Weight>{{1, 1}, {1, 2}});
  auto mus = RootSystem::make_A(3)->strongly_dominant_basis();
  CHECK(mus == std::vector<Weight>{{1, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  RationalMatrix m(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m.at(i, j) = mus[i][j];
  CHECK(det(m) != 0);
}

TEST_CASE("group closure and invariance") {
  for (auto rs : {RootSystem::make_A(2), RootSystem::make_B2()}) {
    std::set<std::vector<std::vector<long>>> members;
    for (const auto& g : rs->group()) members.insert(g.mat);
    CHECK(members.count(weyl_identity(rs->rank()).mat) == 1);
    for (const auto& a : rs->group())
      for (const auto& b : rs->group())
        CHECK(members.count(weyl_mul(a, b).mat) == 1);
    // inverses: every element's inverse shows up in the multiplication table
    for (const auto& a : rs->group()) {
      bool has_inverse = false;
      for (const auto& b : rs->group())
        if (weyl_mul(a, b).mat == weyl_identity(rs->rank()).mat) has_inverse = true;
      CHECK(has_inverse);
    }
    // <Au, Av> = <u, v>
    for (const auto& a : rs->group())
      for (long x = -5; x <= 5; x += 2)
        for (long y = -5; y <= 5; y += 3) {
          Weight u{x, y}, v{y, -x};
          CHECK(rs->inner(a.apply(u), a.apply(v)) == rs->inner(u, v));
        }
  }
}

TEST_CASE("dominant weights have nonnegative pairings") {
  for (auto rs : {RootSystem::make_A(2), RootSystem::make_B2()}) {
    for (long a = 0; a <= 5; ++a)
      for (long b = 0; b <= 5; ++b)
        for (long c = 0; c <= 5; ++c)
          for (long d = 0; d <= 5; ++d)
            CHECK(rs->inner({a, b}, {c, d}) >= 0);
  }
}

TEST_CASE("custom systems") {
  // the A2 data through the custom route
  CustomSystemData data;
  data.rank = 2;
  data.base_roots = {{2, -1}, {-1, 2}};
  data.S = {{make_rational(2, 3), make_rational(1, 3)},
            {make_rational(1, 3), make_rational(2, 3)}};
  auto rs = RootSystem::make_custom(data);
  CHECK(rs->group_order() == 6);
  CHECK(rs->denominator() == 3);

  // inconsistent data: base root not integrally paired
  CustomSystemData bad;
  bad.rank = 1;
  bad.base_roots = {{3}};
  bad.S = {{make_rational(1, 2)}};
  CHECK_THROWS_AS(RootSystem::make_custom(bad), std::invalid_argument);

  // closure cap reached
  CHECK_THROWS_WITH_AS(RootSystem::make_custom(data, 3),
                       "Weyl group closure exceeds cap (non-finite input?)",
                       std::runtime_error);

  CustomSystemData notsym;
  notsym.rank = 2;
  notsym.base_roots = {{2, -1}, {-1, 2}};
  notsym.S = {{make_rational(2, 3), make_rational(1, 3)},
              {make_rational(1, 2), make_rational(2, 3)}};
  CHECK_THROWS_AS(RootSystem::make_custom(notsym), std::invalid_argument);
}

TEST_CASE("admissible order and dominance") {
  auto a2 = RootSystem::make_A(2);
  // refines dominance
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      for (long c = 0; c <= 3; ++c)
        for (long d = 0; d <= 3; ++d) {
          Weight u{a, b}, v{c, d};
          if (u != v && a2->dominance_leq(u, v)) CHECK(a2->admissible_less(u, v));
        }
  // translation invariant, zero minimal
  CHECK_FALSE(a2->admissible_less({0, 0}, {0, 0}));
  CHECK(a2->admissible_less({0, 0}, {1, 2}));
  CHECK(a2->admissible_less({1, 0}, {0, 1}));  // rho_2 tiebreak
}
