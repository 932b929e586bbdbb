#ifndef WSI_ROOTSYS_HPP
#define WSI_ROOTSYS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wsi/rational.hpp"

namespace wsi {

// A weight is a lattice point written in fundamental-weight coordinates,
// so the weight lattice is exactly Z^n. Dominant means all entries >= 0,
// strongly dominant all entries >= 1.
using Weight = std::vector<long>;

inline bool is_dominant(const Weight& w) {
  for (long c : w)
    if (c < 0) return false;
  return true;
}
inline bool is_strongly_dominant(const Weight& w) {
  for (long c : w)
    if (c < 1) return false;
  return true;
}
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);

// An element of the Weyl group as an integer matrix acting on weight
// coordinates (column convention: (A w)_i = sum_j A[i][j] w[j]).
struct WeylElement {
  std::vector<std::vector<long>> mat;
  int det = 1;

  Weight apply(const Weight& w) const;
  bool operator<(const WeylElement& o) const { return mat < o.mat; }
  bool operator==(const WeylElement& o) const { return mat == o.mat; }
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement weyl_identity(size_t n);

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

struct CustomSystemData {
  size_t rank;
  std::vector<Weight> base_roots;          // rows of the Cartan matrix
  std::vector<std::vector<Rational>> S;    // Gram matrix of the inner product
};

class RootSystem {
 public:
  // Named constructors. "A" is supported for every rank >= 1, "B" for
  // rank 2; anything else goes through the custom constructor.
  static RootSystemPtr make_A(size_t rank);
  static RootSystemPtr make_B2();
  static RootSystemPtr make_custom(const CustomSystemData& data,
                                   size_t group_cap = 100000);
  static RootSystemPtr make_named(const std::string& type, size_t rank);

  ~RootSystem();

  const std::string& name() const { return name_; }
  size_t rank() const { return n_; }
  const std::vector<Weight>& base_roots() const { return base_; }
  const std::vector<std::vector<Rational>>& gram() const { return S_; }
  long denominator() const { return D_; }  // least common denominator of S
  const std::vector<WeylElement>& group() const { return group_; }
  const std::vector<WeylElement>& generators() const { return gens_; }
  size_t group_order() const { return group_.size(); }
  Weight delta() const { return Weight(n_, 1); }
  Weight fundamental_weight(size_t i) const;

  // <u, v> = u^T S v, exact.
  Rational inner(const Weight& u, const Weight& v) const;

  // The distinct images {A w : A in W}.
  std::vector<Weight> orbit(const Weight& w) const;
  size_t stabilizer_order(const Weight& w) const;

  // Unique dominant representative of the orbit of w, with a witness A
  // such that A w equals the representative. Computed by repeatedly
  // reflecting at a negative coordinate, not by orbit scan.
  std::pair<Weight, WeylElement> dominant_rep(const Weight& w) const;

  // Strongly dominant representative and det of the witness, or nullopt
  // when the orbit meets a wall (some image has a zero coordinate), in
  // which case the skew orbit polynomial of w vanishes identically.
  std::optional<std::pair<Weight, int>> signed_dominant_rep(const Weight& w) const;

  // n strongly dominant weights, linearly independent over Q:
  // delta, delta + omega_2, ..., delta + omega_n.
  std::vector<Weight> strongly_dominant_basis() const;

  // Dominance order: nu <= mu iff mu - nu is a nonnegative integer
  // combination of the base roots.
  bool dominance_leq(const Weight& nu, const Weight& mu) const;

  // Admissible (total) order refining dominance: compare <delta, .>,
  // then <rho_2, .>, ..., <rho_n, .>.
  bool admissible_less(const Weight& a, const Weight& b) const;

  struct AdmissibleCmp {
    const RootSystem* rs;
    bool operator()(const Weight& a, const Weight& b) const {
      return rs->admissible_less(a, b);
    }
  };
  AdmissibleCmp admissible_cmp() const { return AdmissibleCmp{this}; }

  // Shared caches for expansion tables and Chebyshev polynomials; the
  // maps live here so every consumer of the same system reuses them.
  struct Cache;
  Cache& cache() const { return *cache_; }

 private:
  RootSystem() = default;
  void finalize(size_t group_cap);

  std::string name_;
  size_t n_ = 0;
  std::vector<Weight> base_;
  std::vector<std::vector<Rational>> S_;
  long D_ = 1;
  std::vector<WeylElement> gens_;
  std::vector<WeylElement> group_;
  std::vector<std::vector<Rational>> base_in_rho_;  // (C^T)^-1 for dominance tests
  std::unique_ptr<Cache> cache_;
};

}  // namespace wsi

#endif
