#ifndef WSI_ORBITALG_HPP
#define WSI_ORBITALG_HPP

#include <set>
#include <vector>

#include "wsi/laurent.hpp"
#include "wsi/rootsys.hpp"

namespace wsi {

// Theta_alpha = sum over the group of x^{B alpha}; invariant.
LaurentPoly orbit_poly(const RootSystem& rs, const Weight& alpha);

// Skew version with det(B) signs; vanishes when the orbit meets a wall.
LaurentPoly skew_orbit_poly(const RootSystem& rs, const Weight& alpha);

// Theta_alpha Theta_beta (plain) or ThetaHat_alpha Theta_beta (skew)
// rewritten over the (strongly) dominant basis. Memoized per system.
OrbitCombo orbit_product_expand(const RootSystem& rs, const Weight& alpha,
                                const Weight& beta, ComboKind kind);

// Theta_alpha Theta_beta Theta_gamma (plain) or
// ThetaHat_{delta+alpha} Theta_beta Theta_gamma (skew).
OrbitCombo triple_expand(const RootSystem& rs, const Weight& alpha,
                         const Weight& beta, const Weight& gamma,
                         ComboKind kind);

// Finite point set in N^n (or delta + N^n for the skew index sets).
struct IndexSet {
  size_t n = 0;
  size_t r = 0;
  std::set<std::vector<long>> points;

  bool contains(const std::vector<long>& p) const { return points.count(p) != 0; }
  size_t size() const { return points.size(); }
};

bool is_lower_set(const IndexSet& s);

// {alpha in N^n : prod_i (alpha_i + 1) <= r}.
IndexSet hypercross(size_t n, size_t r);

IndexSet minkowski_sum(const IndexSet& a, const IndexSet& b);

// Union of the supports S(alpha,beta,gamma) of the triple expansions over
// alpha, beta in the hypercross and gamma in {0, omega_1..omega_n}; these
// weights index the evaluations the interpolation algorithms need.
IndexSet wcross(const RootSystem& rs, size_t r, ComboKind kind);

}  // namespace wsi

#endif
