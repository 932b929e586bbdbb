// Acceptance harness: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "wsi/interp.hpp"
#include "wsi/selftest.hpp"

using namespace wsi;

namespace {

struct Criterion {
  std::string name;
  double limit_s;
  std::function<bool(std::string&)> run;
};

std::vector<std::pair<Rational, Weight>> random_terms(std::mt19937& rng, size_t n, size_t r,
                                                      long lo, long hi) {
  std::uniform_int_distribution<long> dw(lo, hi), dc(-20, 20), dq(1, 9);
  std::set<Weight> seen;
  std::vector<std::pair<Rational, Weight>> terms;
  while (terms.size() < r) {
    Weight w(n);
    for (auto& x : w) x = dw(rng);
    if (!seen.insert(w).second) continue;
    long c = 0;
    while (c == 0) c = dc(rng);
    terms.emplace_back(make_rational(c, dq(rng)), w);
  }
  return terms;
}

bool roundtrip_block(std::mt19937& rng, const RootSystemPtr& rs, Basis basis, size_t n,
                     size_t rmax, size_t count, std::string& msg) {
  std::uniform_int_distribution<size_t> dr(1, rmax);
  for (size_t i = 0; i < count; ++i) {
    size_t r = dr(rng);
    SparseRepresentation f{basis, basis == Basis::monomial ? RootSystemPtr() : rs,
                           random_terms(rng, n, r, basis == Basis::monomial ? -8 : 0, 8)};
    BlackBox bb = blackbox_from(f);
    InterpResult res;
    try {
      if (basis == Basis::monomial)
        res = laurent_interpolate(r, Rational(2), bb, n);
      else if (basis == Basis::cheb1)
        res = first_kind_interpolate(rs, r, default_xi0(*rs), bb);
      else
        res = second_kind_interpolate(rs, r, default_xi0(*rs), bb);
    } catch (const std::exception& e) {
      msg = "instance " + std::to_string(i) + " failed: " + e.what();
      return false;
    }
    if (!res.rep.same_terms(f)) {
      msg = "instance " + std::to_string(i) + " recovered a different representation";
      return false;
    }
  }
  return true;
}

bool criterion_roundtrips(std::string& msg) {
  std::mt19937 rng(20240817);
  auto a2 = RootSystem::make_A(2);
  if (!roundtrip_block(rng, a2, Basis::monomial, 2, 5, 50, msg)) return false;
  if (!roundtrip_block(rng, a2, Basis::cheb1, 2, 5, 50, msg)) return false;
  if (!roundtrip_block(rng, a2, Basis::cheb2, 2, 5, 50, msg)) return false;
  if (!roundtrip_block(rng, RootSystem::make_A(1), Basis::cheb1, 1, 3, 10, msg)) return false;
  if (!roundtrip_block(rng, RootSystem::make_B2(), Basis::cheb1, 2, 3, 10, msg)) return false;
  if (!roundtrip_block(rng, RootSystem::make_A(3), Basis::cheb1, 3, 3, 10, msg)) return false;
  return true;
}

bool criterion_certification(std::string& msg) {
  std::mt19937 rng(97531);
  auto a2 = RootSystem::make_A(2);
  std::uniform_int_distribution<size_t> dr(2, 4);
  std::uniform_int_distribution<int> what(0, 1);
  for (int i = 0; i < 20; ++i) {
    size_t r = dr(rng);
    Basis basis = i % 3 == 0 ? Basis::monomial : (i % 3 == 1 ? Basis::cheb1 : Basis::cheb2);
    SparseRepresentation f{basis, basis == Basis::monomial ? RootSystemPtr() : a2,
                           random_terms(rng, 2, r, basis == Basis::monomial ? -6 : 0, 6)};
    BlackBox bb = blackbox_from(f);
    InterpResult res;
    if (basis == Basis::monomial)
      res = laurent_interpolate(r, Rational(2), bb, 2);
    else if (basis == Basis::cheb1)
      res = first_kind_interpolate(a2, r, 82, bb);
    else
      res = second_kind_interpolate(a2, r, 82, bb);

    if (!verify_interpolant(res.rep, res.collected)) {
      msg = "unperturbed candidate " + std::to_string(i) + " rejected";
      return false;
    }
    SparseRepresentation bad = res.rep;
    if (what(rng) == 0) {
      bad.terms[i % r].first += 1;
    } else {
      bad.terms[i % r].second[i % 2] += 1;
    }
    if (verify_interpolant(bad, res.collected)) {
      msg = "perturbed candidate " + std::to_string(i) + " accepted";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 group catalog (orders 2/6/8/24, S and D)", 1.0, check_group_catalog},
      {"2 product relations (plain, skew, triple)", 1.0, check_product_relations},
      {"3 Chebyshev tables (A2/B2 through degree 4)", 5.0, check_cheb_tables},
      {"4 Weyl character formula (entries <= 4)", 30.0,
       [](std::string& m) { return check_character_formula(4, m); }},
      {"5 floor/nint log recovery (100 random weights)", 60.0,
       [](std::string& m) { return check_log_recovery(100, 424242, m); }},
      {"6 round-trip interpolation (150 + 30 instances)", 600.0, criterion_roundtrips},
      {"7 evaluation sets match the worked examples", 5.0, check_eval_sets},
      {"8 wcross structure and cardinality bounds", 60.0, check_wcross_structure},
      {"9 certification accepts/rejects correctly", 120.0, criterion_certification},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string msg;
    bool ok = false;
    try {
      ok = c.run(msg);
    } catch (const std::exception& e) {
      msg = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= c.limit_s;
    if (ok && in_time) {
      std::printf("[PASS] criterion %s  (%.2fs)\n", c.name.c_str(), secs);
    } else {
      ++failures;
      std::printf("[FAIL] criterion %s  (%.2fs%s)%s%s\n", c.name.c_str(), secs,
                  in_time ? "" : ", over time budget", msg.empty() ? "" : ": ",
                  msg.c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
