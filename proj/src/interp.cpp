#include "wsi/interp.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wsi {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::monomial: return "monomial";
    case Basis::cheb1: return "cheb1";
    case Basis::cheb2: return "cheb2";
  }
  return "?";
}

Basis basis_from_name(const std::string& s) {
  if (s == "monomial") return Basis::monomial;
  if (s == "cheb1") return Basis::cheb1;
  if (s == "cheb2") return Basis::cheb2;
  throw std::invalid_argument("unknown basis: " + s);
}

void SparseRepresentation::validate() const {
  std::set<Weight> seen;
  for (const auto& [c, w] : terms) {
    if (c == 0) throw std::invalid_argument("zero coefficient in representation");
    if (!seen.insert(w).second)
      throw std::invalid_argument("duplicate weight " + weight_to_string(w));
    if (basis != Basis::monomial && !is_dominant(w))
      throw std::invalid_argument("Chebyshev bases need dominant weights");
  }
  if (basis != Basis::monomial && !rs)
    throw std::invalid_argument("Chebyshev bases need a root system");
}

void SparseRepresentation::canonicalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
}

bool SparseRepresentation::same_terms(const SparseRepresentation& o) const {
  if (basis != o.basis || terms.size() != o.terms.size()) return false;
  std::map<Weight, Rational> a, b;
  for (const auto& [c, w] : terms) a[w] = c;
  for (const auto& [c, w] : o.terms) b[w] = c;
  return a == b;
}

BlackBox blackbox_from(const SparseRepresentation& rep) {
  rep.validate();
  BlackBox bb;
  if (rep.basis == Basis::monomial) {
    auto terms = rep.terms;
    bb.eval = [terms](const std::vector<Rational>& pt) {
      Rational acc(0);
      for (const auto& [c, w] : terms) {
        Rational m = c;
        for (size_t j = 0; j < w.size(); ++j)
          if (w[j] != 0) m *= rat_pow(pt[j], w[j]);
        acc += m;
      }
      return acc;
    };
    return bb;
  }
  auto rs = rep.rs;
  bool second = rep.basis == Basis::cheb2;
  std::vector<std::pair<Rational, DensePoly>> polys;
  for (const auto& [c, w] : rep.terms)
    polys.emplace_back(c, second ? chebyshev_U(*rs, w) : chebyshev_T(*rs, w));
  bb.eval = [polys](const std::vector<Rational>& pt) {
    Rational acc(0);
    for (const auto& [c, p] : polys) acc += c * eval_dense(p, pt);
    return acc;
  };
  return bb;
}

long default_xi0(const RootSystem& rs) {
  long w = static_cast<long>(rs.group_order());
  return (9 * w * w) / 4 + 1;
}

XiConfig make_xi_config(const RootSystem& rs, long xi0) {
  long w = static_cast<long>(rs.group_order());
  if (Rational(4 * xi0) <= Rational(9 * w * w))
    throw std::invalid_argument("xi0 must exceed (3|W|/2)^2");
  XiConfig xi;
  xi.xi0 = xi0;
  xi.xi = int_pow(Integer(xi0), rs.denominator());
  return xi;
}

XiConfig monomial_xi_default() {
  XiConfig xi;
  xi.xi0 = 2;
  xi.xi = Rational(2);
  return xi;
}

std::vector<Rational> eval_point(const RootSystem& rs, const XiConfig& xi,
                                 const Weight& alpha) {
  std::vector<Rational> pt(rs.rank());
  for (size_t j = 0; j < rs.rank(); ++j) {
    Rational e = Rational(rs.denominator()) * rs.inner(alpha, rs.fundamental_weight(j));
    pt[j] = int_pow(Integer(xi.xi0), to_long_checked(e));
  }
  return pt;
}

Rational orbit_value_at(const RootSystem& rs, const XiConfig& xi,
                        const Weight& gamma, const Weight& w, bool skew) {
  size_t n = rs.rank();
  // D * w^T S once; exponent of xi0 for each group element is its dot
  // product with B gamma
  std::vector<long> row(n);
  for (size_t j = 0; j < n; ++j) {
    Rational e = Rational(rs.denominator()) * rs.inner(w, rs.fundamental_weight(j));
    row[j] = to_long_checked(e);
  }
  std::vector<std::pair<long, int>> expo;
  expo.reserve(rs.group_order());
  long emin = 0;
  bool first = true;
  for (const auto& B : rs.group()) {
    Weight bg = B.apply(gamma);
    long e = 0;
    for (size_t j = 0; j < n; ++j) e += row[j] * bg[j];
    expo.emplace_back(e, skew ? B.det : 1);
    if (first || e < emin) emin = e;
    first = false;
  }
  Integer base(xi.xi0), num(0), p;
  for (const auto& [e, s] : expo) {
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e - emin));
    if (s > 0)
      num += p;
    else
      num -= p;
  }
  return Rational(num) * int_pow(base, emin);
}

long floor_log_exp(const Rational& value, long xi0) {
  if (value <= 0) throw std::domain_error("floor_log_exp needs a positive value");
  if (xi0 < 2) throw std::domain_error("floor_log_exp needs xi0 >= 2");
  long k = static_cast<long>(
      std::floor(rat_log2(value) / std::log2(static_cast<double>(xi0))));
  // settle by exact comparison: xi0^k <= value < xi0^{k+1}
  while (value < int_pow(Integer(xi0), k)) --k;
  while (value >= int_pow(Integer(xi0), k + 1)) ++k;
  return k;
}

long nint_log_exp(const Rational& value, long xi0) {
  if (value <= 0) throw std::domain_error("nint_log_exp needs a positive value");
  if (xi0 < 2) throw std::domain_error("nint_log_exp needs xi0 >= 2");
  Rational v4 = rat_pow(value, 4);
  long k = floor_log_exp(value, xi0);
  for (long c : {k, k + 1, k - 1}) {
    // xi0^{4c-1} < value^4 < xi0^{4c+1}
    if (int_pow(Integer(xi0), 4 * c - 1) < v4 && v4 < int_pow(Integer(xi0), 4 * c + 1))
      return c;
  }
  throw std::domain_error("value is not within xi0^(1/4) of an integer power");
}

namespace {

Weight weight_from_log_integers(const RootSystem& rs, const std::vector<long>& m) {
  size_t n = rs.rank();
  auto mus = rs.strongly_dominant_basis();
  RationalMatrix R(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      R.at(i, j) = Rational(rs.denominator()) * rs.inner(mus[i], rs.fundamental_weight(j));
  std::vector<Rational> b(n);
  for (size_t i = 0; i < n; ++i) b[i] = Rational(m[i]);
  std::vector<Rational> x = solve(R, b);
  Weight w(n);
  for (size_t i = 0; i < n; ++i) {
    if (!is_integer(x[i]))
      throw SnapError("weight recovery produced a non-integer solution");
    w[i] = to_long_checked(x[i]);
  }
  return w;
}

// floor-of-log from a floating estimate: the exact value satisfies
// log_{xi0} in [k, k+1/2), so pick the band nearest the estimate.
long band_floor_snap(const Real& v, long xi0) {
  if (v.sign() <= 0) throw SnapError("orbit value estimate is not positive");
  double t = v.log2_approx() / std::log2(static_cast<double>(xi0));
  long k0 = static_cast<long>(std::floor(t));
  long best = k0;
  double bestd = 1e300;
  for (long k : {k0 - 1, k0, k0 + 1}) {
    double d = 0.0;
    if (t < static_cast<double>(k))
      d = static_cast<double>(k) - t;
    else if (t > static_cast<double>(k) + 0.5)
      d = t - (static_cast<double>(k) + 0.5);
    if (d < bestd) {
      bestd = d;
      best = k;
    }
  }
  return best;
}

Real eval_dense_real(const DensePoly& p, const std::vector<Real>& x, mpfr_prec_t prec) {
  std::vector<std::map<long, Real>> pows(x.size());
  std::function<const Real&(size_t, long)> coord_pow = [&](size_t j, long e) -> const Real& {
    auto it = pows[j].find(e);
    if (it != pows[j].end()) return it->second;
    Real v = e == 1 ? x[j] : coord_pow(j, e - 1) * x[j];
    return pows[j].emplace(e, std::move(v)).first->second;
  };
  Real acc(prec);
  for (const auto& [e, c] : p.terms) {
    Real t = Real::from_rational(c, prec);
    for (size_t j = 0; j < x.size(); ++j)
      if (e[j] != 0) t = t * coord_pow(j, e[j]);
    acc = acc + t;
  }
  return acc;
}

}  // namespace

Weight recover_weight(const RootSystem& rs, const XiConfig& xi,
                      const std::vector<Rational>& orbit_values, ComboKind mode) {
  if (orbit_values.size() != rs.rank())
    throw std::invalid_argument("recover_weight needs one value per basis weight");
  std::vector<long> m(rs.rank());
  for (size_t i = 0; i < rs.rank(); ++i)
    m[i] = mode == ComboKind::plain ? floor_log_exp(orbit_values[i], xi.xi0)
                                    : nint_log_exp(orbit_values[i], xi.xi0);
  return weight_from_log_integers(rs, m);
}

bool verify_interpolant(const SparseRepresentation& candidate,
                        const CollectedEvaluations& collected) {
  if (candidate.basis != collected.basis) return false;
  try {
    if (candidate.basis == Basis::monomial) {
      for (const auto& [s, val] : collected.values) {
        Rational acc(0);
        for (const auto& [c, w] : candidate.terms) {
          long dot = 0;
          for (size_t j = 0; j < s.size(); ++j) dot += w[j] * s[j];
          acc += c * rat_pow(collected.xi.xi, dot);
        }
        if (acc != val) return false;
      }
      return true;
    }
    const RootSystem& rs = *collected.rs;
    bool second = candidate.basis == Basis::cheb2;
    for (const auto& [nu, val] : collected.values) {
      Rational acc(0);
      for (const auto& [c, w] : candidate.terms) {
        Weight point_w = second ? weight_add(rs.delta(), w) : w;
        acc += c * orbit_value_at(rs, collected.xi, nu, point_w, second);
      }
      if (acc != val) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

InterpResult laurent_interpolate(size_t r, const Rational& xi, BlackBox& f,
                                 size_t n, mpfr_prec_t bits) {
  if (r < 1) throw std::invalid_argument("sparsity must be >= 1");
  if (!(xi > 1)) throw std::invalid_argument("xi must exceed 1");

  std::map<std::vector<long>, Rational> cache;
  auto value_at = [&](const std::vector<long>& s) -> const Rational& {
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
    std::vector<Rational> pt(n);
    for (size_t j = 0; j < n; ++j) pt[j] = rat_pow(xi, s[j]);
    return cache.emplace(s, f(pt)).first->second;
  };

  auto attempt = [&](size_t rr) {
    IndexSet h = hypercross(n, rr);
    OmegaTable table;
    table.kind = OmegaKind::monomial;
    table.n = n;
    table.r = rr;
    table.xi = xi;
    std::vector<long> s(n);
    for (const auto& a : h.points)
      for (const auto& b : h.points) {
        for (size_t g = 0; g <= n; ++g) {
          for (size_t j = 0; j < n; ++j)
            s[j] = a[j] + b[j] + (g > 0 && j == g - 1 ? 1 : 0);
          if (table.mono.find(s) == table.mono.end()) table.mono.emplace(s, value_at(s));
        }
      }
    SupportResult res = support_and_coeffs(table, rr, bits);

    InterpResult out;
    out.rep.basis = Basis::monomial;
    for (size_t i = 0; i < rr; ++i) {
      Weight beta(n);
      for (size_t j = 0; j < n; ++j) {
        // zeta is an exact power of xi by construction; read the exponent
        long k = static_cast<long>(std::llround(rat_log2(res.points[i][j]) / rat_log2(xi)));
        bool ok = false;
        for (long c : {k, k - 1, k + 1})
          if (rat_pow(xi, c) == res.points[i][j]) {
            beta[j] = c;
            ok = true;
            break;
          }
        if (!ok) throw SnapError("support coordinate is not a power of xi");
      }
      out.rep.terms.emplace_back(res.coeffs[i], beta);
    }
    out.rep.canonicalize();
    out.rep.validate();
    out.collected.basis = Basis::monomial;
    out.collected.xi.xi = xi;
    out.collected.values = table.mono;
    out.gamma = res.gamma;
    out.precision_used = res.diagnostics.precision_used;
    return out;
  };

  InterpResult out;
  try {
    out = attempt(r);
  } catch (const RankDeficiencyError& e) {
    if (e.effective_rank < 1 || e.effective_rank >= r) throw;
    out = attempt(e.effective_rank);
    out.rank_retry = true;
  }
  out.evaluations = f.counter;
  if (!verify_interpolant(out.rep, out.collected))
    throw RecoveryError("certification failed after reconstruction");
  return out;
}

namespace {

struct InvariantRun {
  RootSystemPtr rs;
  XiConfig xi;
  bool second = false;
  std::vector<Weight> mus;
  std::vector<DensePoly> t_mu;
  std::map<Weight, Rational> fvals;  // single-orbit values seen so far
};

InterpResult run_invariant(InvariantRun& ctx, size_t r, BlackBox& F, mpfr_prec_t bits) {
  const RootSystem& rs = *ctx.rs;
  size_t n = rs.rank();
  ComboKind kind = ctx.second ? ComboKind::skew : ComboKind::plain;
  Rational order(static_cast<long>(rs.group_order()));

  auto value_at = [&](const Weight& nu) -> const Rational& {
    auto it = ctx.fvals.find(nu);
    if (it != ctx.fvals.end()) return it->second;
    std::vector<Rational> theta(n);
    for (size_t j = 0; j < n; ++j)
      theta[j] = orbit_value_at(rs, ctx.xi, rs.fundamental_weight(j), nu, false);
    Rational v = F(theta);
    if (ctx.second) v *= orbit_value_at(rs, ctx.xi, rs.delta(), nu, true);
    return ctx.fvals.emplace(nu, v).first->second;
  };

  auto attempt = [&](size_t rr) {
    IndexSet wc = wcross(rs, rr, kind);
    for (const auto& nu : wc.points) value_at(nu);
    auto f_on = [&](const Weight& nu) { return ctx.fvals.at(nu); };

    OmegaTable table;
    table.kind = ctx.second ? OmegaKind::skew_invariant : OmegaKind::plain_invariant;
    table.n = n;
    table.r = rr;
    table.rs = ctx.rs;
    IndexSet h = hypercross(n, rr);
    std::vector<Weight> gammas;
    gammas.push_back(Weight(n, 0));
    for (size_t j = 0; j < n; ++j) gammas.push_back(rs.fundamental_weight(j));
    for (const auto& a : h.points)
      for (const auto& b : h.points)
        for (const auto& g : gammas)
          table.triple.emplace(std::make_tuple(a, b, g),
                               assemble_omega_values(rs, kind, f_on, a, b, g));

    InvariantSnapper snapper;
    snapper.recover = [&](const std::vector<Real>& theta) {
      std::vector<long> m(n);
      for (size_t j = 0; j < n; ++j) {
        Real v = eval_dense_real(ctx.t_mu[j], theta, theta[0].prec());
        m[j] = band_floor_snap(v, ctx.xi.xi0);
      }
      Weight w = weight_from_log_integers(rs, m);
      if (ctx.second ? !is_strongly_dominant(w) : !is_dominant(w))
        throw SnapError("recovered weight outside the expected cone");
      return w;
    };
    snapper.orbit_at = [&](const Weight& g, const Weight& w) {
      return orbit_value_at(rs, ctx.xi, g, w, false);
    };
    snapper.skew_orbit_at = [&](const Weight& g, const Weight& w) {
      return orbit_value_at(rs, ctx.xi, g, w, true);
    };

    SupportResult res = invariant_support_and_coeffs(table, rr, snapper, bits);

    InterpResult out;
    out.rep.basis = ctx.second ? Basis::cheb2 : Basis::cheb1;
    out.rep.rs = ctx.rs;
    for (size_t i = 0; i < rr; ++i) {
      // official weight recovery from the exact theta rows
      std::vector<Rational> vals(n);
      for (size_t j = 0; j < n; ++j) vals[j] = eval_dense(ctx.t_mu[j], res.points[i]);
      Weight w = recover_weight(rs, ctx.xi, vals, ComboKind::plain);
      Rational a;
      if (ctx.second) {
        Weight beta = weight_sub(w, rs.delta());
        if (!is_dominant(beta))
          throw RecoveryError("recovered weight is not delta + dominant");
        Rational norm = orbit_value_at(rs, ctx.xi, rs.delta(), w, true);
        a = res.coeffs[i] / norm;  // nonzero by the xi0 hypothesis
        w = beta;
      } else {
        a = res.coeffs[i] / order;
      }
      out.rep.terms.emplace_back(a, w);
    }
    out.rep.canonicalize();
    out.rep.validate();
    out.collected.basis = out.rep.basis;
    out.collected.xi = ctx.xi;
    out.collected.rs = ctx.rs;
    for (const auto& nu : wc.points) out.collected.values.emplace(nu, ctx.fvals.at(nu));
    out.gamma = res.gamma;
    out.precision_used = res.diagnostics.precision_used;
    return out;
  };

  InterpResult out;
  try {
    out = attempt(r);
  } catch (const RankDeficiencyError& e) {
    if (e.effective_rank < 1 || e.effective_rank >= r) throw;
    out = attempt(e.effective_rank);
    out.rank_retry = true;
  }
  out.evaluations = F.counter;
  if (!verify_interpolant(out.rep, out.collected))
    throw RecoveryError("certification failed after reconstruction");
  return out;
}

}  // namespace

InterpResult first_kind_interpolate(const RootSystemPtr& rs, size_t r, long xi0,
                                    BlackBox& F, mpfr_prec_t bits) {
  if (!rs) throw std::invalid_argument("first_kind_interpolate needs a root system");
  InvariantRun ctx;
  ctx.rs = rs;
  ctx.xi = make_xi_config(*rs, xi0);
  ctx.second = false;
  ctx.mus = rs->strongly_dominant_basis();
  for (const auto& mu : ctx.mus) ctx.t_mu.push_back(chebyshev_T(*rs, mu));
  return run_invariant(ctx, r, F, bits);
}

InterpResult second_kind_interpolate(const RootSystemPtr& rs, size_t r, long xi0,
                                     BlackBox& F, mpfr_prec_t bits) {
  if (!rs) throw std::invalid_argument("second_kind_interpolate needs a root system");
  InvariantRun ctx;
  ctx.rs = rs;
  ctx.xi = make_xi_config(*rs, xi0);
  ctx.second = true;
  ctx.mus = rs->strongly_dominant_basis();
  for (const auto& mu : ctx.mus) ctx.t_mu.push_back(chebyshev_T(*rs, mu));
  return run_invariant(ctx, r, F, bits);
}

}  // namespace wsi
