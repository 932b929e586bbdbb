#ifndef WSI_CACHES_HPP
#define WSI_CACHES_HPP

#include <map>
#include <mutex>
#include <utility>

#include "wsi/laurent.hpp"
#include "wsi/rootsys.hpp"

namespace wsi {

// Per-system memo tables. Inserts are idempotent; a single mutex keeps
// concurrent lookups safe.
struct RootSystem::Cache {
  std::mutex mu;
  std::map<std::pair<Weight, Weight>, OrbitCombo> pair_plain;
  std::map<std::pair<Weight, Weight>, OrbitCombo> pair_skew;
  std::map<Weight, LaurentPoly> orbit_poly;
  std::map<Weight, LaurentPoly> skew_orbit_poly;
  std::map<Weight, DensePoly> cheb_t;
  std::map<Weight, DensePoly> cheb_u;
};

}  // namespace wsi

#endif
