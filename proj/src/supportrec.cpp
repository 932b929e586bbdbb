#include "wsi/supportrec.hpp"

#include <algorithm>
#include <cmath>

namespace wsi {

Rational assemble_omega_values(
    const RootSystem& rs, ComboKind kind,
    const std::function<Rational(const Weight&)>& f_on_points,
    const Weight& alpha, const Weight& beta, const Weight& gamma) {
  OrbitCombo t = triple_expand(rs, alpha, beta, gamma, kind);
  Rational acc(0);
  for (const auto& [nu, c] : t.terms) acc += c * f_on_points(nu);
  return acc;
}

namespace {

bool predecessors_present(const std::vector<long>& e,
                          const std::set<std::vector<long>>& chosen) {
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    std::vector<long> q = e;
    q[i] -= 1;
    if (chosen.find(q) == chosen.end()) return false;
  }
  return true;
}

using H0Fn = std::function<Rational(const std::vector<long>&, const std::vector<long>&)>;

bool lower_set_dfs(const H0Fn& h0, const std::vector<std::vector<long>>& universe,
                   size_t r, size_t next_candidate,
                   std::vector<std::vector<long>>& chosen,
                   std::set<std::vector<long>>& chosen_set) {
  if (chosen.size() == r) {
    RationalMatrix sub(r, r);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) sub.at(i, j) = h0(chosen[i], chosen[j]);
    return det(sub) != 0;
  }
  for (size_t k = next_candidate; k < universe.size(); ++k) {
    const auto& e = universe[k];
    if (universe.size() - k < r - chosen.size()) break;
    if (!predecessors_present(e, chosen_set)) continue;
    chosen.push_back(e);
    chosen_set.insert(e);
    if (lower_set_dfs(h0, universe, r, k + 1, chosen, chosen_set)) return true;
    chosen_set.erase(e);
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<std::vector<long>> select_lower_set(
    const H0Fn& h0, const IndexSet& universe, size_t r,
    const std::function<bool(const std::vector<long>&, const std::vector<long>&)>& less) {
  std::vector<std::vector<long>> sorted(universe.points.begin(), universe.points.end());
  std::sort(sorted.begin(), sorted.end(), less);

  // full-rank hypothesis first: report the effective rank when it fails
  RationalMatrix full(sorted.size(), sorted.size());
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = 0; j < sorted.size(); ++j) full.at(i, j) = h0(sorted[i], sorted[j]);
  size_t rk = rank(full);
  if (rk < r) throw RankDeficiencyError(rk);

  std::vector<std::vector<long>> chosen;
  std::set<std::vector<long>> chosen_set;
  if (!lower_set_dfs(h0, sorted, r, 0, chosen, chosen_set))
    throw RecoveryError("no lower set with nonsingular principal submatrix");
  return chosen;
}

namespace {

constexpr long kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                            31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
constexpr mpfr_prec_t kMaxBits = 4096;

std::vector<Rational> generic_weights(size_t n, size_t shift) {
  // ell_j = p_{j+s} / p_{n+s}
  std::vector<Rational> ell(n);
  for (size_t j = 0; j < n; ++j)
    ell[j] = make_rational(kPrimes[j + shift], kPrimes[n - 1 + shift]);
  return ell;
}

EigenResult eigen_with_retries(const std::vector<RationalMatrix>& Ms,
                               const Rational& norm_const, mpfr_prec_t bits,
                               size_t& retries) {
  for (size_t s = 0; s <= 8; ++s) {
    try {
      return generic_eigen(Ms, generic_weights(Ms.size(), s), norm_const, bits);
    } catch (const EigenCollisionError&) {
      ++retries;
    }
  }
  throw EigenCollisionError();
}

// simplest rational in [lo, hi], 0 < lo <= hi (Stern-Brocot descent)
Rational simplest_in(const Rational& lo, const Rational& hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  if (Rational(fl) == lo) return lo;
  Rational c = Rational(fl) + 1;
  if (c <= hi) return c;
  Rational f(fl);
  return f + Rational(1) / simplest_in(Rational(1) / (hi - f), Rational(1) / (lo - f));
}

// Exact support coordinate from its floating estimate: a power of xi when
// an evaluation grid is attached, otherwise the simplest rational within
// the working accuracy (certified downstream either way).
Rational snap_support_coordinate(const Real& v, const Rational& xi, mpfr_prec_t bits) {
  if (xi > 1) {
    if (v.sign() <= 0) throw SnapError("support coordinate is not positive");
    double lx = rat_log2(xi);
    return rat_pow(xi, static_cast<long>(std::llround(v.log2_approx() / lx)));
  }
  if (v.sign() == 0) throw SnapError("support coordinate vanished");
  Rational q = v.to_rational();
  bool neg = q < 0;
  if (neg) q = -q;
  Rational tol = q * int_pow(Integer(2), -static_cast<long>(bits / 2));
  Rational lo = q - tol;
  if (lo <= 0) throw SnapError("support coordinate too close to zero");
  Rational s = simplest_in(lo, q + tol);
  return neg ? Rational(-s) : s;
}

struct PreparedHankel {
  std::vector<std::vector<long>> gamma;
  RationalMatrix h0;                  // on gamma
  std::vector<RationalMatrix> mult;   // M_j = H0^-1 Hj
  std::vector<Rational> first_row;    // of H0 on gamma
};

PreparedHankel prepare(const OmegaTable& table, size_t r,
                       const H0Fn& h0_full,
                       const std::function<Rational(const std::vector<long>&,
                                                    const std::vector<long>&, size_t)>& hj,
                       const std::function<bool(const std::vector<long>&,
                                                const std::vector<long>&)>& less) {
  IndexSet universe = hypercross(table.n, r);
  PreparedHankel ph;
  ph.gamma = select_lower_set(h0_full, universe, r, less);

  ph.h0 = RationalMatrix(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) ph.h0.at(i, j) = h0_full(ph.gamma[i], ph.gamma[j]);
  RationalMatrix h0inv = inverse(ph.h0);
  for (size_t v = 0; v < table.n; ++v) {
    RationalMatrix hjm(r, r);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) hjm.at(i, j) = hj(ph.gamma[i], ph.gamma[j], v);
    ph.mult.push_back(mat_mul(h0inv, hjm));
  }
  for (size_t j = 0; j < r; ++j) ph.first_row.push_back(ph.h0.at(0, j));
  return ph;
}

}  // namespace

SupportResult support_and_coeffs(const OmegaTable& table, size_t r, mpfr_prec_t bits) {
  if (table.kind != OmegaKind::monomial)
    throw std::invalid_argument("support_and_coeffs expects a monomial table");
  if (r < 1) throw std::invalid_argument("sparsity must be >= 1");
  size_t n = table.n;

  auto value = [&](const std::vector<long>& s) -> const Rational& {
    auto it = table.mono.find(s);
    if (it == table.mono.end())
      throw std::invalid_argument("missing point value " + weight_to_string(s));
    return it->second;
  };
  H0Fn h0 = [&](const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> s(n);
    for (size_t i = 0; i < n; ++i) s[i] = a[i] + b[i];
    return value(s);
  };
  auto hj = [&](const std::vector<long>& a, const std::vector<long>& b, size_t v) {
    std::vector<long> s(n);
    for (size_t i = 0; i < n; ++i) s[i] = a[i] + b[i] + (i == v ? 1 : 0);
    return value(s);
  };
  // graded lexicographic order keeps the search deterministic
  auto less = [](const std::vector<long>& a, const std::vector<long>& b) {
    long da = 0, db = 0;
    for (long x : a) da += x;
    for (long x : b) db += x;
    if (da != db) return da < db;
    return a > b;  // x before y at equal degree
  };

  PreparedHankel ph = prepare(table, r, h0, hj, less);

  SupportDiagnostics diag;
  std::string last_error = "recovery failed";
  for (mpfr_prec_t cur = bits; cur <= kMaxBits; cur *= 2) {
    diag.precision_used = cur;
    try {
      EigenResult eg = eigen_with_retries(ph.mult, Rational(1), cur, diag.eigen_retries);

      std::vector<std::vector<Rational>> pts(r, std::vector<Rational>(n));
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j)
          pts[i][j] =
              snap_support_coordinate(eg.per_matrix_eigenvalues[j][i], table.xi, cur);
      for (size_t i = 0; i < r; ++i)
        for (size_t k = i + 1; k < r; ++k)
          if (pts[i] == pts[k]) throw SnapError("support points collide after snapping");

      // exact coefficients from the first Hankel row: sum_i a_i zeta_i^g = h_g
      RationalMatrix w(r, r);
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
          Rational m(1);
          for (size_t v = 0; v < n; ++v) m *= rat_pow(pts[i][v], ph.gamma[j][v]);
          w.at(i, j) = m;
        }
      std::vector<Rational> coeffs = solve_left(w, ph.first_row);
      for (const auto& c : coeffs)
        if (c == 0) throw SnapError("vanishing coefficient after reconstruction");

      // certify against every table value
      for (const auto& [s, val] : table.mono) {
        Rational acc(0);
        for (size_t i = 0; i < r; ++i) {
          Rational m = coeffs[i];
          for (size_t v = 0; v < n; ++v) m *= rat_pow(pts[i][v], s[v]);
          acc += m;
        }
        if (acc != val) throw SnapError("exact recheck failed");
      }

      SupportResult out;
      out.points = std::move(pts);
      out.coeffs = std::move(coeffs);
      out.gamma = ph.gamma;
      out.diagnostics = diag;
      return out;
    } catch (const SnapError& e) {
      last_error = e.what();
    } catch (const EigenFailure& e) {
      last_error = e.what();
    } catch (const SingularMatrixError& e) {
      last_error = e.what();
    } catch (const EigenCollisionError& e) {
      last_error = e.what();
    }
  }
  throw RecoveryError(std::string("monomial support recovery failed: ") + last_error);
}

SupportResult invariant_support_and_coeffs(const OmegaTable& table, size_t r,
                                           const InvariantSnapper& snapper,
                                           mpfr_prec_t bits) {
  if (table.kind == OmegaKind::monomial)
    throw std::invalid_argument("invariant_support_and_coeffs expects an invariant table");
  if (!table.rs) throw std::invalid_argument("invariant table needs its root system");
  if (r < 1) throw std::invalid_argument("sparsity must be >= 1");
  const RootSystem& rs = *table.rs;
  size_t n = table.n;
  bool skew = table.kind == OmegaKind::skew_invariant;
  ComboKind kind = skew ? ComboKind::skew : ComboKind::plain;
  Rational order(static_cast<long>(rs.group_order()));

  auto tval = [&](const Weight& a, const Weight& b, const Weight& g) -> const Rational& {
    auto it = table.triple.find(std::make_tuple(a, b, g));
    if (it == table.triple.end())
      throw std::invalid_argument("missing triple value");
    return it->second;
  };
  Weight zero(n, 0);
  // the gamma = 0 slot carries Theta_0 = |W|; divide it back out for H0
  H0Fn h0 = [&](const std::vector<long>& a, const std::vector<long>& b) {
    return tval(a, b, zero) / order;
  };
  auto hj = [&](const std::vector<long>& a, const std::vector<long>& b, size_t v) {
    return tval(a, b, rs.fundamental_weight(v));
  };
  auto less = [&](const std::vector<long>& a, const std::vector<long>& b) {
    return rs.admissible_less(a, b);
  };

  PreparedHankel ph = prepare(table, r, h0, hj, less);

  // For the exact verification below: reconstruct every triple value from
  // a candidate support through the same expansion path.
  auto candidate_single = [&](const std::vector<Weight>& ws,
                              const std::vector<Rational>& as, const Weight& nu) {
    Rational acc(0);
    for (size_t i = 0; i < ws.size(); ++i)
      acc += as[i] * (skew ? snapper.skew_orbit_at(nu, ws[i]) : snapper.orbit_at(nu, ws[i]));
    return acc;
  };

  SupportDiagnostics diag;
  std::string last_error = "recovery failed";
  for (mpfr_prec_t cur = bits; cur <= kMaxBits; cur *= 2) {
    diag.precision_used = cur;
    try {
      EigenResult eg = eigen_with_retries(ph.mult, order, cur, diag.eigen_retries);

      std::vector<Weight> ws(r);
      for (size_t i = 0; i < r; ++i) {
        std::vector<Real> row(n, Real(cur));
        for (size_t j = 0; j < n; ++j) row[j] = eg.per_matrix_eigenvalues[j][i];
        ws[i] = snapper.recover(row);
      }
      for (size_t i = 0; i < r; ++i)
        for (size_t k = i + 1; k < r; ++k)
          if (ws[i] == ws[k]) throw SnapError("recovered orbits collide");

      // exact W on the lower set and the first-row system for the weights
      RationalMatrix w(r, r);
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) w.at(i, j) = snapper.orbit_at(ph.gamma[j], ws[i]);
      std::vector<Rational> x = solve_left(w, ph.first_row);

      // x_i = a_i Theta_{gamma_1}(zeta_i) (plain) or a_i ThetaHat_{delta+gamma_1}(zeta_i);
      // gamma_1 = 0 because every lower set contains the origin.
      std::vector<Rational> as(r), tilde(r);
      for (size_t i = 0; i < r; ++i) {
        Rational denom = skew ? snapper.skew_orbit_at(rs.delta(), ws[i]) : order;
        if (denom == 0) throw SnapError("skew normalizer vanishes at recovered point");
        as[i] = x[i] / denom;
        if (as[i] == 0) throw SnapError("vanishing coefficient after reconstruction");
        tilde[i] = skew ? x[i] : order * as[i];
        if (skew && tilde[i] == 0)
          throw SnapError("skew weighted coefficient vanished (internal inconsistency)");
      }

      // certify every triple value exactly
      std::map<Weight, Rational> single_cache;
      auto single = [&](const Weight& nu) {
        auto it = single_cache.find(nu);
        if (it != single_cache.end()) return it->second;
        Rational v = candidate_single(ws, as, nu);
        single_cache.emplace(nu, v);
        return v;
      };
      for (const auto& [key, val] : table.triple) {
        const auto& [a, b, g] = key;
        OrbitCombo t = triple_expand(rs, a, b, g, kind);
        Rational acc(0);
        for (const auto& [nu, c] : t.terms) acc += c * single(nu);
        if (acc != val) throw SnapError("exact recheck failed");
      }

      SupportResult out;
      out.points.assign(r, std::vector<Rational>(n));
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j)
          out.points[i][j] = snapper.orbit_at(rs.fundamental_weight(j), ws[i]);
      out.coeffs = std::move(tilde);
      out.gamma = ph.gamma;
      out.diagnostics = diag;
      return out;
    } catch (const SnapError& e) {
      last_error = e.what();
    } catch (const EigenFailure& e) {
      last_error = e.what();
    } catch (const SingularMatrixError& e) {
      last_error = e.what();
    } catch (const EigenCollisionError& e) {
      last_error = e.what();
    }
  }
  throw RecoveryError(std::string("invariant support recovery failed: ") + last_error);
}

}  // namespace wsi
