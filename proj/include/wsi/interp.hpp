#ifndef WSI_INTERP_HPP
#define WSI_INTERP_HPP

#include <functional>
#include <map>
#include <string>

#include "wsi/cheb.hpp"
#include "wsi/supportrec.hpp"

namespace wsi {

enum class Basis { monomial, cheb1, cheb2 };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

// f = sum a_i x^{beta_i} (monomial, beta in Z^n), or
// F = sum a_i T_{beta_i} / sum a_i U_{beta_i} (dominant beta in N^n).
struct SparseRepresentation {
  Basis basis = Basis::monomial;
  RootSystemPtr rs;  // empty for monomial
  std::vector<std::pair<Rational, Weight>> terms;

  void validate() const;  // distinct weights, nonzero coeffs, dominance
  void canonicalize();    // deterministic term order
  bool same_terms(const SparseRepresentation& o) const;
};

// Counted evaluation oracle. Callers deduplicate points, so the counter
// reflects distinct evaluations.
struct BlackBox {
  std::function<Rational(const std::vector<Rational>&)> eval;
  long counter = 0;

  Rational operator()(const std::vector<Rational>& pt) {
    ++counter;
    return eval(pt);
  }
};

// Builds the obvious black box for a representation (used by the CLI and
// the round-trip tests).
BlackBox blackbox_from(const SparseRepresentation& rep);

struct XiConfig {
  long xi0 = 0;  // integer base, Chebyshev grids use xi = xi0^D
  Rational xi;   // grid ratio; equals xi0^D for the Chebyshev cases
};

// Smallest integer exceeding (3/2 |W|)^2, the bound weight recovery needs.
long default_xi0(const RootSystem& rs);
XiConfig make_xi_config(const RootSystem& rs, long xi0);
XiConfig monomial_xi_default();

// xi^{t(alpha) S}: coordinate j is xi^{<alpha, omega_j>}; integer entries
// when xi = xi0^D.
std::vector<Rational> eval_point(const RootSystem& rs, const XiConfig& xi,
                                 const Weight& alpha);

// Theta_gamma (resp. ThetaHat_gamma) at xi^{t(w) S}, exact:
// sum over the group of (det) xi0^{D <w, B gamma>}.
Rational orbit_value_at(const RootSystem& rs, const XiConfig& xi,
                        const Weight& gamma, const Weight& w, bool skew);

// floor(log_{xi0} value) by exact integer comparisons; value > 0.
long floor_log_exp(const Rational& value, long xi0);

// nearest integer k with xi0^{4k-1} < value^4 < xi0^{4k+1}; throws when no
// integer satisfies the band.
long nint_log_exp(const Rational& value, long xi0);

// Dominant weight omega from the n exact values Theta_omega(xi^{t(mu_i) S})
// (plain) or ThetaHat_omega(...) (skew), mu_i the strongly dominant basis.
Weight recover_weight(const RootSystem& rs, const XiConfig& xi,
                      const std::vector<Rational>& orbit_values, ComboKind mode);

// Everything a run collected, for certification and reporting.
struct CollectedEvaluations {
  Basis basis = Basis::monomial;
  XiConfig xi;
  RootSystemPtr rs;
  // monomial: exponent -> f(xi^s); cheb1: nu -> F(theta coords at nu);
  // cheb2: nu -> ThetaHat_delta(grid) * F(theta coords at nu).
  std::map<std::vector<long>, Rational> values;
};

// True iff the candidate reproduces every collected value exactly.
bool verify_interpolant(const SparseRepresentation& candidate,
                        const CollectedEvaluations& collected);

struct InterpResult {
  SparseRepresentation rep;
  CollectedEvaluations collected;
  long evaluations = 0;
  std::vector<std::vector<long>> gamma;
  mpfr_prec_t precision_used = 0;
  bool rank_retry = false;  // true when the sparsity estimate was lowered
};

InterpResult laurent_interpolate(size_t r, const Rational& xi, BlackBox& f,
                                 size_t n, mpfr_prec_t bits = 256);
InterpResult first_kind_interpolate(const RootSystemPtr& rs, size_t r, long xi0,
                                    BlackBox& F, mpfr_prec_t bits = 256);
InterpResult second_kind_interpolate(const RootSystemPtr& rs, size_t r, long xi0,
                                     BlackBox& F, mpfr_prec_t bits = 256);

}  // namespace wsi

#endif
