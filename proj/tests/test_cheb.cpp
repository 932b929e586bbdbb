#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wsi/cheb.hpp"
#include "wsi/selftest.hpp"

using namespace wsi;

namespace {

DensePoly from_terms(size_t n, std::initializer_list<std::pair<std::vector<long>, Rational>> l) {
  DensePoly p(n);
  for (const auto& [e, c] : l) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("first kind examples") {
  auto a2 = RootSystem::make_A(2);
  CHECK(chebyshev_T(*a2, {1, 1}) ==
        from_terms(2, {{{1, 1}, make_rational(1, 4)}, {{0, 0}, Rational(-3)}}));
  CHECK(chebyshev_T(*a2, {0, 0}) == from_terms(2, {{{0, 0}, Rational(6)}}));

  auto b2 = RootSystem::make_B2();
  CHECK(chebyshev_T(*b2, {2, 0}) == from_terms(2, {{{2, 0}, make_rational(1, 2)},
                                                   {{0, 2}, Rational(-1)},
                                                   {{1, 0}, Rational(4)},
                                                   {{0, 0}, Rational(8)}}));
  CHECK_THROWS_AS(chebyshev_T(*a2, {-1, 0}), std::invalid_argument);
}

TEST_CASE("character polynomials") {
  auto a1 = RootSystem::make_A(1);
  auto a2 = RootSystem::make_A(2);

  LaurentPoly one(2);
  one.add_term({0, 0}, Rational(1));
  CHECK(character_poly(*a2, {0, 0}) == one);

  // A1: x^n + x^{n-2} + ... + x^{-n}
  for (long n = 0; n <= 6; ++n) {
    LaurentPoly want(1);
    for (long k = -n; k <= n; k += 2) want.add_term({k}, Rational(1));
    CHECK(character_poly(*a1, {n}) == want);
  }

  // cha_(1,1) equals (1/4) Theta_w1 Theta_w2 - 1 expanded
  LaurentPoly prod = laurent_mul(orbit_poly(*a2, {1, 0}), orbit_poly(*a2, {0, 1}));
  LaurentPoly expect = laurent_scale(prod, make_rational(1, 4));
  expect.add_term({0, 0}, Rational(-1));
  CHECK(character_poly(*a2, {1, 1}) == expect);

  // invariance and nonnegative integer coefficients
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      LaurentPoly cha = character_poly(*a2, {a, b});
      for (const auto& g : a2->group()) CHECK(laurent_apply(g, cha) == cha);
      for (const auto& [e, c] : cha.terms) {
        CHECK(is_integer(c));
        CHECK(c > 0);
      }
    }
}

TEST_CASE("second kind examples") {
  auto a2 = RootSystem::make_A(2);
  CHECK(chebyshev_U(*a2, {1, 1}) ==
        from_terms(2, {{{1, 1}, make_rational(1, 4)}, {{0, 0}, Rational(-1)}}));
  CHECK(chebyshev_U(*a2, {2, 2}) == from_terms(2, {{{2, 2}, make_rational(1, 16)},
                                                   {{3, 0}, make_rational(-1, 8)},
                                                   {{0, 3}, make_rational(-1, 8)}}));
  // B2 (0,2): the adjoint of so(5); fixed by the defining identity
  auto b2 = RootSystem::make_B2();
  CHECK(chebyshev_U(*b2, {0, 2}) == from_terms(2, {{{0, 2}, make_rational(1, 4)},
                                                   {{1, 0}, make_rational(-1, 2)},
                                                   {{0, 0}, Rational(-2)}}));
}

TEST_CASE("orbit decomposition") {
  auto a2 = RootSystem::make_A(2);
  OrbitCombo c = orbit_decompose(*a2, orbit_poly(*a2, {1, 1}));
  CHECK(c.terms == std::map<Weight, Rational>{{{1, 1}, 1}});

  LaurentPoly constant(2);
  constant.add_term({0, 0}, Rational(42));
  c = orbit_decompose(*a2, constant);
  CHECK(c.terms == std::map<Weight, Rational>{{{0, 0}, Rational(7)}});

  // adjoint of sl3: one regular orbit plus the zero weight twice
  c = orbit_decompose(*a2, character_poly(*a2, {1, 1}));
  CHECK(c.terms ==
        std::map<Weight, Rational>{{{1, 1}, 1}, {{0, 0}, make_rational(1, 3)}});

  LaurentPoly not_invariant(2);
  not_invariant.add_term({1, 0}, Rational(1));
  CHECK_THROWS_AS(orbit_decompose(*a2, not_invariant), std::invalid_argument);
}

TEST_CASE("dense evaluation") {
  auto a2 = RootSystem::make_A(2);
  CHECK(eval_dense(chebyshev_T(*a2, {1, 1}), {Rational(6), Rational(6)}) == 6);
  DensePoly p = from_terms(2, {{{0, 0}, Rational(5)}, {{2, 1}, Rational(7)}});
  CHECK(eval_dense(p, {Rational(0), Rational(0)}) == 5);

  // T_{2,0} at the orbit coordinates of q equals Theta_{2,0}(q)
  std::vector<Rational> q = {Rational(2), Rational(3)};
  std::vector<Rational> coords = {laurent_eval(orbit_poly(*a2, {1, 0}), q),
                                  laurent_eval(orbit_poly(*a2, {0, 1}), q)};
  CHECK(eval_dense(chebyshev_T(*a2, {2, 0}), coords) ==
        laurent_eval(orbit_poly(*a2, {2, 0}), q));
}

TEST_CASE("defining identities and character formula") {
  std::string msg;
  CHECK_MESSAGE(check_defining_identity(4, msg), msg);
  CHECK_MESSAGE(check_character_formula(4, msg), msg);
}

TEST_CASE("triangularity") {
  for (auto rs : {RootSystem::make_A(2), RootSystem::make_B2()}) {
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= 3; ++b) {
        Weight alpha{a, b};
        for (bool second : {false, true}) {
          DensePoly p = second ? chebyshev_U(*rs, alpha) : chebyshev_T(*rs, alpha);
          CHECK(p.terms.count(alpha) == 1);
          for (const auto& [e, c] : p.terms) CHECK(rs->dominance_leq(e, alpha));
        }
      }
  }
}

TEST_CASE("classical Chebyshev reduction for A1") {
  auto a1 = RootSystem::make_A(1);
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(1, 40), den(1, 9);
  for (long n = 0; n <= 10; ++n) {
    DensePoly t = chebyshev_T(*a1, {n});
    // T_n(x + 1/x) = x^n + x^-n at random rational x
    for (int trial = 0; trial < 20; ++trial) {
      Rational x = make_rational(num(rng), den(rng));
      Rational arg = x + Rational(1) / x;
      CHECK(eval_dense(t, {arg}) == rat_pow(x, n) + rat_pow(x, -n));
    }
    // monic classical recurrence against (1/2) T_n(2X)
    std::vector<Rational> classic_prev = {Rational(1)};       // Ttilde_0
    std::vector<Rational> classic = {Rational(0), Rational(1)};  // Ttilde_1
    if (n >= 2) {
      for (long k = 2; k <= n; ++k) {
        std::vector<Rational> next(k + 1, Rational(0));
        for (size_t i = 0; i < classic.size(); ++i) next[i + 1] += 2 * classic[i];
        for (size_t i = 0; i < classic_prev.size(); ++i) next[i] -= classic_prev[i];
        classic_prev = classic;
        classic = next;
      }
    }
    const std::vector<Rational>& want = n == 0 ? classic_prev : classic;
    std::vector<Rational> got(n + 1, Rational(0));
    for (const auto& [e, c] : t.terms) got[e[0]] = c * rat_pow(Rational(2), e[0] - 1);
    for (long i = 0; i <= n; ++i) CHECK(got[i] == want[i]);
  }
}

TEST_CASE("canonical printing") {
  auto a2 = RootSystem::make_A(2);
  CHECK(dense_to_string(*a2, chebyshev_T(*a2, {1, 1})) == "1/4*X1*X2 - 3");
  CHECK(dense_to_string(*a2, chebyshev_T(*a2, {0, 0})) == "6");
  CHECK(dense_to_string(*a2, chebyshev_U(*a2, {1, 1})) == "1/4*X1*X2 - 1");
  CHECK(dense_to_string(*a2, DensePoly(2)) == "0");
}

TEST_CASE("printed table fixtures") {
  std::string msg;
  CHECK_MESSAGE(check_cheb_tables(msg), msg);
}
