#ifndef WSI_CHEB_HPP
#define WSI_CHEB_HPP

#include <string>

#include "wsi/laurent.hpp"
#include "wsi/orbitalg.hpp"
#include "wsi/rootsys.hpp"

namespace wsi {

// T_alpha in K[X_1..X_n] with T_alpha(Theta_{omega_1},...) = Theta_alpha.
// Built by induction on <delta, alpha> from the pairwise expansion
// Theta_{omega_i} Theta_{alpha - omega_i}; memoized per system.
DensePoly chebyshev_T(const RootSystem& rs, const Weight& alpha);

// cha_alpha = ThetaHat_{delta+alpha} / ThetaHat_delta, exact quotient.
LaurentPoly character_poly(const RootSystem& rs, const Weight& alpha);

// U_alpha with U_alpha(Theta_{omega_1},...) = cha_alpha, obtained from the
// orbit decomposition of the character polynomial.
DensePoly chebyshev_U(const RootSystem& rs, const Weight& alpha);

// Writes an invariant Laurent polynomial over the basis {Theta_beta}.
OrbitCombo orbit_decompose(const RootSystem& rs, const LaurentPoly& p);

// Canonical text: terms sorted by descending admissible order,
// coefficients as p/q ("1/4*X1*X2 - 3").
std::string dense_to_string(const RootSystem& rs, const DensePoly& p);

}  // namespace wsi

#endif
