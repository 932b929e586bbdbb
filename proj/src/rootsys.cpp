#include "wsi/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wsi/caches.hpp"

namespace wsi {

RootSystem::~RootSystem() = default;

Weight weight_add(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight WeylElement::apply(const Weight& w) const {
  size_t n = mat.size();
  Weight r(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r[i] += mat[i][j] * w[j];
  return r;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  size_t n = a.mat.size();
  WeylElement r;
  r.mat.assign(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (a.mat[i][k] != 0)
        for (size_t j = 0; j < n; ++j) r.mat[i][j] += a.mat[i][k] * b.mat[k][j];
  r.det = a.det * b.det;
  return r;
}

WeylElement weyl_identity(size_t n) {
  WeylElement e;
  e.mat.assign(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i) e.mat[i][i] = 1;
  e.det = 1;
  return e;
}

namespace {

// Exact determinant of a small integer matrix (Bareiss).
Integer int_det(std::vector<std::vector<Integer>> m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Integer prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

long lcm_long(long a, long b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), Integer(a).get_mpz_t(), Integer(b).get_mpz_t());
  return a / g.get_si() * b;
}

}  // namespace

Weight RootSystem::fundamental_weight(size_t i) const {
  Weight w(n_, 0);
  w[i] = 1;
  return w;
}

Rational RootSystem::inner(const Weight& u, const Weight& v) const {
  if (u.size() != n_ || v.size() != n_)
    throw std::invalid_argument("inner: dimension mismatch");
  Rational acc(0);
  for (size_t i = 0; i < n_; ++i) {
    if (u[i] == 0) continue;
    Rational row(0);
    for (size_t j = 0; j < n_; ++j)
      if (v[j] != 0) row += S_[i][j] * v[j];
    acc += Rational(u[i]) * row;
  }
  return acc;
}

std::vector<Weight> RootSystem::orbit(const Weight& w) const {
  std::set<Weight> seen;
  for (const auto& A : group_) seen.insert(A.apply(w));
  return std::vector<Weight>(seen.begin(), seen.end());
}

size_t RootSystem::stabilizer_order(const Weight& w) const {
  size_t s = 0;
  for (const auto& A : group_)
    if (A.apply(w) == w) ++s;
  return s;
}

std::pair<Weight, WeylElement> RootSystem::dominant_rep(const Weight& w) const {
  Weight cur = w;
  WeylElement acc = weyl_identity(n_);
  size_t guard = 16 * group_.size() + 16;
  while (true) {
    size_t neg = n_;
    for (size_t i = 0; i < n_; ++i)
      if (cur[i] < 0) {
        neg = i;
        break;
      }
    if (neg == n_) return {cur, acc};
    // s_i(w) = w - w_i rho_i raises <delta, w>; terminates at the
    // unique dominant representative.
    long wi = cur[neg];
    for (size_t j = 0; j < n_; ++j) cur[j] -= wi * base_[neg][j];
    acc = weyl_mul(gens_[neg], acc);
    if (--guard == 0) throw std::logic_error("dominant_rep did not terminate");
  }
}

std::optional<std::pair<Weight, int>> RootSystem::signed_dominant_rep(
    const Weight& w) const {
  auto [rep, witness] = dominant_rep(w);
  for (long c : rep)
    if (c == 0) return std::nullopt;  // orbit meets a wall
  return std::make_pair(rep, witness.det);
}

std::vector<Weight> RootSystem::strongly_dominant_basis() const {
  std::vector<Weight> mus;
  mus.push_back(delta());
  for (size_t i = 1; i < n_; ++i) {
    Weight m = delta();
    m[i] += 1;
    mus.push_back(m);
  }
  return mus;
}

bool RootSystem::dominance_leq(const Weight& nu, const Weight& mu) const {
  // mu - nu = sum m_i rho_i with m_i in N; base_in_rho_ holds (C^T)^-1.
  for (size_t i = 0; i < n_; ++i) {
    Rational mi(0);
    for (size_t j = 0; j < n_; ++j)
      mi += base_in_rho_[i][j] * Rational(mu[j] - nu[j]);
    if (!is_integer(mi) || mi < 0) return false;
  }
  return true;
}

bool RootSystem::admissible_less(const Weight& a, const Weight& b) const {
  Weight d = delta();
  Rational ka = inner(d, a), kb = inner(d, b);
  if (ka != kb) return ka < kb;
  for (size_t i = 1; i < n_; ++i) {
    ka = inner(base_[i], a);
    kb = inner(base_[i], b);
    if (ka != kb) return ka < kb;
  }
  return false;
}

void RootSystem::finalize(size_t group_cap) {
  // Simple reflections from the base: s_i(e_j) = e_j - <e_j, rho_i^v> rho_i,
  // where <e_j, rho_i^v> = 2 <e_j, rho_i> / <rho_i, rho_i> must be an integer.
  gens_.clear();
  for (size_t i = 0; i < n_; ++i) {
    Rational norm = inner(base_[i], base_[i]);
    if (norm <= 0) throw std::invalid_argument("base root with nonpositive norm");
    WeylElement s;
    s.mat.assign(n_, std::vector<long>(n_, 0));
    for (size_t j = 0; j < n_; ++j) {
      Weight ej(n_, 0);
      ej[j] = 1;
      Rational pairing = 2 * inner(ej, base_[i]) / norm;
      if (!is_integer(pairing))
        throw std::invalid_argument("non-integer reflection matrix entries");
      long p = to_long_checked(pairing);
      for (size_t k = 0; k < n_; ++k)
        s.mat[k][j] = (k == j ? 1 : 0) - p * base_[i][k];
    }
    std::vector<std::vector<Integer>> mi(n_, std::vector<Integer>(n_));
    for (size_t a = 0; a < n_; ++a)
      for (size_t b = 0; b < n_; ++b) mi[a][b] = s.mat[a][b];
    Integer d = int_det(mi);
    if (d != -1)
      throw std::invalid_argument("simple reflection must have determinant -1");
    s.det = -1;
    gens_.push_back(std::move(s));
  }

  // Breadth-first closure of the generators.
  std::set<WeylElement> seen;
  std::vector<WeylElement> frontier{weyl_identity(n_)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& A : frontier)
      for (const auto& g : gens_) {
        WeylElement B = weyl_mul(g, A);
        if (seen.insert(B).second) {
          if (seen.size() > group_cap)
            throw std::runtime_error("Weyl group closure exceeds cap (non-finite input?)");
          next.push_back(std::move(B));
        }
      }
    frontier = std::move(next);
  }
  group_.assign(seen.begin(), seen.end());

  // A^T S A = S for every generator; closure then gives it for the group.
  for (const auto& g : gens_) {
    for (size_t a = 0; a < n_; ++a)
      for (size_t b = 0; b < n_; ++b) {
        Rational acc(0);
        for (size_t i = 0; i < n_; ++i)
          for (size_t j = 0; j < n_; ++j)
            if (g.mat[i][a] != 0 && g.mat[j][b] != 0)
              acc += Rational(g.mat[i][a]) * S_[i][j] * Rational(g.mat[j][b]);
        if (acc != S_[a][b])
          throw std::invalid_argument("base data inconsistent: A^T S A != S");
      }
  }

  // D = least common denominator of the entries of S.
  long d = 1;
  for (const auto& row : S_)
    for (const auto& q : row) {
      if (!q.get_den().fits_slong_p())
        throw std::invalid_argument("S denominator too large");
      d = lcm_long(d, q.get_den().get_si());
    }
  D_ = d;

  // (C^T)^-1 where C rows are the base roots, for dominance tests.
  // Gauss-Jordan over Q on [C^T | I].
  std::vector<std::vector<Rational>> aug(n_, std::vector<Rational>(2 * n_, Rational(0)));
  for (size_t i = 0; i < n_; ++i) {
    for (size_t j = 0; j < n_; ++j) aug[i][j] = Rational(base_[j][i]);
    aug[i][n_ + i] = 1;
  }
  for (size_t c = 0; c < n_; ++c) {
    size_t p = c;
    while (p < n_ && aug[p][c] == 0) ++p;
    if (p == n_) throw std::invalid_argument("base roots are not a basis");
    std::swap(aug[c], aug[p]);
    Rational piv = aug[c][c];
    for (size_t j = 0; j < 2 * n_; ++j) aug[c][j] /= piv;
    for (size_t i = 0; i < n_; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (size_t j = 0; j < 2 * n_; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  base_in_rho_.assign(n_, std::vector<Rational>(n_));
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) base_in_rho_[i][j] = aug[i][n_ + j];

  cache_ = std::make_unique<Cache>();
}

RootSystemPtr RootSystem::make_A(size_t rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->name_ = "A" + std::to_string(rank);
  rs->n_ = rank;
  // Base roots in weight coordinates are the Cartan matrix rows.
  rs->base_.assign(rank, Weight(rank, 0));
  for (size_t i = 0; i < rank; ++i) {
    rs->base_[i][i] = 2;
    if (i > 0) rs->base_[i][i - 1] = -1;
    if (i + 1 < rank) rs->base_[i][i + 1] = -1;
  }
  // <omega_i, omega_j> = min(i,j) - i j/(rank+1), long roots of norm 2.
  rs->S_.assign(rank, std::vector<Rational>(rank));
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < rank; ++j) {
      long a = static_cast<long>(i) + 1, b = static_cast<long>(j) + 1;
      rs->S_[i][j] = Rational(std::min(a, b)) -
                     make_rational(a * b, static_cast<long>(rank) + 1);
    }
  rs->finalize(100000);
  return rs;
}

RootSystemPtr RootSystem::make_B2() {
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->name_ = "B2";
  rs->n_ = 2;
  rs->base_ = {Weight{2, -2}, Weight{-1, 2}};
  rs->S_ = {{Rational(1), make_rational(1, 2)}, {make_rational(1, 2), make_rational(1, 2)}};
  rs->finalize(100000);
  return rs;
}

RootSystemPtr RootSystem::make_custom(const CustomSystemData& data, size_t group_cap) {
  if (data.rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (data.base_roots.size() != data.rank || data.S.size() != data.rank)
    throw std::invalid_argument("custom system: inconsistent dimensions");
  for (const auto& r : data.base_roots)
    if (r.size() != data.rank) throw std::invalid_argument("bad base root length");
  // S symmetric positive definite (leading principal minors positive).
  for (size_t i = 0; i < data.rank; ++i) {
    if (data.S[i].size() != data.rank) throw std::invalid_argument("bad S row");
    for (size_t j = 0; j < data.rank; ++j)
      if (data.S[i][j] != data.S[j][i])
        throw std::invalid_argument("S must be symmetric");
  }
  for (size_t k = 1; k <= data.rank; ++k) {
    std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub[i][j] = data.S[i][j];
    // determinant by Gaussian elimination over Q
    Rational det(1);
    for (size_t c = 0; c < k; ++c) {
      size_t p = c;
      while (p < k && sub[p][c] == 0) ++p;
      if (p == k) {
        det = 0;
        break;
      }
      if (p != c) {
        std::swap(sub[c], sub[p]);
        det = -det;
      }
      det *= sub[c][c];
      for (size_t i = c + 1; i < k; ++i) {
        Rational f = sub[i][c] / sub[c][c];
        for (size_t j = c; j < k; ++j) sub[i][j] -= f * sub[c][j];
      }
    }
    if (det <= 0) throw std::invalid_argument("S must be positive definite");
  }
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->name_ = "custom";
  rs->n_ = data.rank;
  rs->base_ = data.base_roots;
  rs->S_ = data.S;
  rs->finalize(group_cap);
  return rs;
}

RootSystemPtr RootSystem::make_named(const std::string& type, size_t rank) {
  if (type == "A") return make_A(rank);
  if (type == "B") {
    if (rank != 2) throw std::invalid_argument("B is only tabulated for rank 2");
    return make_B2();
  }
  throw std::invalid_argument("unknown named system: " + type);
}

}  // namespace wsi
