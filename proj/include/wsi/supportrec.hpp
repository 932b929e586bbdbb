#ifndef WSI_SUPPORTREC_HPP
#define WSI_SUPPORTREC_HPP

#include <functional>
#include <map>
#include <tuple>

#include "wsi/linalg.hpp"
#include "wsi/orbitalg.hpp"

namespace wsi {

enum class OmegaKind { monomial, plain_invariant, skew_invariant };

// Values of the linear form on the products the Hankel construction
// needs. Monomial kind: Omega(x^s) keyed by the exponent s = a+b+g.
// Invariant kinds: Omega(Theta_a Theta_b Theta_g), respectively
// Omega(ThetaHat_{delta+a} Theta_b Theta_g), keyed by the triple (a,b,g)
// with a,b in the hypercross and g in {0, omega_1..omega_n}.
struct OmegaTable {
  OmegaKind kind = OmegaKind::monomial;
  size_t n = 0;
  size_t r = 0;
  RootSystemPtr rs;  // empty for monomial
  Rational xi;       // evaluation grid ratio (monomial kind only)
  std::map<std::vector<long>, Rational> mono;
  std::map<std::tuple<Weight, Weight, Weight>, Rational> triple;
};

struct SupportDiagnostics {
  mpfr_prec_t precision_used = 0;
  size_t eigen_retries = 0;
};

struct SupportResult {
  // zeta_i for the monomial kind; theta_i = (Theta_{omega_1}(zeta_i),...)
  // for the invariant kinds. Exact rationals, certified downstream.
  std::vector<std::vector<Rational>> points;
  // a_i, |W| a_i, or ThetaHat_delta(zeta_i) a_i depending on the kind.
  std::vector<Rational> coeffs;
  std::vector<std::vector<long>> gamma;  // chosen lower set, ascending
  SupportDiagnostics diagnostics;
};

struct RankDeficiencyError : std::runtime_error {
  size_t effective_rank;
  explicit RankDeficiencyError(size_t rk)
      : std::runtime_error("Hankel matrix rank " + std::to_string(rk) +
                           " is below the requested sparsity"),
        effective_rank(rk) {}
};
struct SnapError : std::runtime_error {
  explicit SnapError(const std::string& w) : std::runtime_error(w) {}
};
struct RecoveryError : std::runtime_error {
  explicit RecoveryError(const std::string& w) : std::runtime_error(w) {}
};

// Omega(Theta_a Theta_b Theta_g) (plain) or
// Omega(ThetaHat_{delta+a} Theta_b Theta_g) (skew) from single-orbit
// values; f_on_points must cover the support of the triple expansion.
Rational assemble_omega_values(
    const RootSystem& rs, ComboKind kind,
    const std::function<Rational(const Weight&)>& f_on_points,
    const Weight& alpha, const Weight& beta, const Weight& gamma);

// Smallest (in the given order) lower set Gamma of cardinality r inside
// `universe` whose principal submatrix of the H0 oracle is exactly
// nonsingular. Throws RankDeficiencyError when the full matrix has rank
// below r, RecoveryError when no qualifying lower set exists.
std::vector<std::vector<long>> select_lower_set(
    const std::function<Rational(const std::vector<long>&, const std::vector<long>&)>& h0,
    const IndexSet& universe, size_t r,
    const std::function<bool(const std::vector<long>&, const std::vector<long>&)>& less);

// Exact reconstruction hooks for the invariant recovery: `recover` turns
// a floating theta-row into the integer weight behind it (the support
// point is then xi^{t(w) S}); the *_at hooks evaluate (skew) orbit
// polynomials exactly at that point.
struct InvariantSnapper {
  std::function<Weight(const std::vector<Real>&)> recover;
  std::function<Rational(const Weight& gamma, const Weight& w)> orbit_at;
  std::function<Rational(const Weight& gamma, const Weight& w)> skew_orbit_at;
};

// Algorithm "Support & Coefficients": monomial-basis support recovery
// with exact certification against every table value.
SupportResult support_and_coeffs(const OmegaTable& table, size_t r,
                                 mpfr_prec_t bits = 256);

// Algorithm "Invariant Support & Coefficients" for both characters.
SupportResult invariant_support_and_coeffs(const OmegaTable& table, size_t r,
                                           const InvariantSnapper& snapper,
                                           mpfr_prec_t bits = 256);

}  // namespace wsi

#endif
