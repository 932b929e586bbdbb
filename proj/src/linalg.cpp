#include "wsi/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace wsi {

RationalMatrix RationalMatrix::identity(size_t n) {
  RationalMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix mat_mul(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul shape mismatch");
  RationalMatrix r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const Rational& v = x.at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

bool mat_equal(const RationalMatrix& x, const RationalMatrix& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

namespace {

double rat_log2_approx(const Rational& q) {
  // valid for q > 0; good to within ~1 bit, which is all callers need
  long np = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
  long nd = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
  return static_cast<double>(np - nd);
}

// Clears denominators row by row; scales the determinant but not the rank
// or the solution set.
std::vector<std::vector<Integer>> cleared_rows(const RationalMatrix& m,
                                               std::vector<Integer>* scales) {
  std::vector<std::vector<Integer>> out(m.rows, std::vector<Integer>(m.cols));
  for (size_t i = 0; i < m.rows; ++i) {
    Integer l(1);
    for (size_t j = 0; j < m.cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (size_t j = 0; j < m.cols; ++j) {
      Rational v = m.at(i, j) * Rational(l);
      out[i][j] = v.get_num();
    }
    if (scales) scales->push_back(l);
  }
  return out;
}

Integer exact_div(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
  return q;
}

// Fraction-free (Bareiss) forward elimination with row pivoting; pivots
// are restricted to the first pivot_cols columns. Returns the permutation
// sign; rank_out gets the number of pivot rows.
int bareiss(std::vector<std::vector<Integer>>& m, size_t pivot_cols, size_t& rank_out) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  int sign = 1;
  Integer prev(1);
  size_t row = 0;
  for (size_t col = 0; col < pivot_cols && row < rows; ++col) {
    size_t p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    if (p != row) {
      std::swap(m[p], m[row]);
      sign = -sign;
    }
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j)
        m[i][j] = exact_div(m[i][j] * m[row][col] - m[i][col] * m[row][j], prev);
      m[i][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  rank_out = row;
  return sign;
}

}  // namespace

Rational det(const RationalMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
  if (m.rows == 0) return Rational(1);
  std::vector<Integer> scales;
  auto w = cleared_rows(m, &scales);
  size_t rk = 0;
  int sign = bareiss(w, m.cols, rk);
  if (rk < m.rows) return Rational(0);
  Rational d(w[m.rows - 1][m.rows - 1]);
  if (sign < 0) d = -d;
  for (const auto& s : scales) d /= Rational(s);
  return d;
}

size_t rank(const RationalMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  auto w = cleared_rows(m, nullptr);
  size_t rk = 0;
  bareiss(w, m.cols, rk);
  return rk;
}

std::vector<Rational> solve(const RationalMatrix& A, const std::vector<Rational>& b) {
  if (A.rows != A.cols || b.size() != A.rows)
    throw std::invalid_argument("solve shape mismatch");
  size_t n = A.rows;
  RationalMatrix aug(n, n + 1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n) = b[i];
  }
  auto w = cleared_rows(aug, nullptr);
  size_t rk = 0;
  bareiss(w, n, rk);
  if (rk < n) throw SingularMatrixError();
  std::vector<Rational> x(n);
  for (size_t ii = n; ii-- > 0;) {
    Rational acc(w[ii][n]);
    for (size_t j = ii + 1; j < n; ++j) acc -= Rational(w[ii][j]) * x[j];
    if (w[ii][ii] == 0) throw SingularMatrixError();
    x[ii] = acc / Rational(w[ii][ii]);
  }
  return x;
}

std::vector<Rational> solve_left(const RationalMatrix& A, const std::vector<Rational>& b) {
  RationalMatrix t(A.cols, A.rows);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < A.cols; ++j) t.at(j, i) = A.at(i, j);
  return solve(t, b);
}

RationalMatrix inverse(const RationalMatrix& A) {
  if (A.rows != A.cols) throw std::invalid_argument("inverse of non-square matrix");
  size_t n = A.rows;
  RationalMatrix inv(n, n);
  for (size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n, Rational(0));
    e[c] = 1;
    auto col = solve(A, e);
    for (size_t i = 0; i < n; ++i) inv.at(i, c) = col[i];
  }
  return inv;
}

bool principal_minor_nonsingular(const RationalMatrix& H, const std::vector<size_t>& idx) {
  for (size_t i : idx)
    if (i >= H.rows || i >= H.cols) throw std::out_of_range("index out of bounds");
  if (idx.empty()) return true;  // det of the empty matrix is 1
  RationalMatrix sub(idx.size(), idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) sub.at(i, j) = H.at(idx[i], idx[j]);
  return det(sub) != 0;
}

std::vector<Rational> char_poly(const RationalMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("char_poly of non-square matrix");
  size_t n = m.rows;
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix N = RationalMatrix::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    RationalMatrix M = mat_mul(m, N);
    Rational tr(0);
    for (size_t i = 0; i < n; ++i) tr += M.at(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
    N = M;
    for (size_t i = 0; i < n; ++i) N.at(i, i) += c[n - k];
  }
  return c;
}

// ---------------------------------------------------------------------
// Real-root isolation for the eigen backend.

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients

size_t degree(const Poly& p) {
  size_t d = p.size();
  while (d > 1 && p[d - 1] == 0) --d;
  return d - 1;
}

bool is_zero_poly(const Poly& p) { return degree(p) == 0 && p[0] == 0; }

Poly trim(Poly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {Rational(0)};
  Poly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(static_cast<long>(i));
  return trim(d);
}

Rational eval_poly(const Poly& p, const Rational& x) {
  Rational acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Integer content out, leading coefficient positive; positive scaling
// preserves Sturm sign sequences.
Poly normalize_content(Poly p) {
  p = trim(p);
  if (is_zero_poly(p)) return p;
  Integer den(1), num(0);
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& c : p) {
    Integer t = c.get_num() * (den / c.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.get_mpz_t());
  }
  Rational scale = Rational(den) / Rational(num);
  if (p.back() < 0) scale = -scale;
  for (auto& c : p) c *= scale;
  return p;
}

Poly poly_rem(const Poly& u, const Poly& v) {
  Poly r = trim(u);
  size_t dv = degree(v);
  while (!is_zero_poly(r) && degree(r) >= dv) {
    size_t dr = degree(r);
    Rational q = r[dr] / v[dv];
    for (size_t i = 0; i <= dv; ++i) r[dr - dv + i] -= q * v[i];
    r = trim(r);
    if (degree(r) == dr && !is_zero_poly(r))
      throw std::logic_error("polynomial division failed to reduce degree");
  }
  return r;
}

bool poly_squarefree(const Poly& p) {
  Poly a = normalize_content(p);
  Poly b = normalize_content(derivative(p));
  while (!is_zero_poly(b) && degree(b) > 0) {
    Poly r = poly_rem(a, b);
    a = b;
    b = normalize_content(r);
  }
  if (is_zero_poly(b)) return degree(a) == 0;  // gcd = a
  return true;                                 // gcd is a nonzero constant
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(normalize_content(p));
  Poly d = normalize_content(derivative(p));
  if (is_zero_poly(d)) return chain;
  chain.push_back(d);
  while (degree(chain.back()) > 0) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (is_zero_poly(r)) break;
    for (auto& c : r) c = -c;
    chain.push_back(normalize_content(r));
  }
  return chain;
}

size_t sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  size_t v = 0;
  int prev = 0;
  for (const auto& p : chain) {
    Rational val = eval_poly(p, x);
    int s = val == 0 ? 0 : (val > 0 ? 1 : -1);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// number of distinct roots in (a, b]
size_t roots_in(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

// A point strictly between lo and hi; geometric when the interval spans
// many binary orders of magnitude (only applies to positive endpoints).
Rational split_point(const Rational& lo, const Rational& hi) {
  if (lo > 0) {
    double llo = rat_log2_approx(lo);
    double lhi = rat_log2_approx(hi);
    if (lhi - llo > 8.0) {
      long e = static_cast<long>(std::floor((llo + lhi) / 2.0));
      Rational g = int_pow(Integer(2), e);
      if (lo < g && g < hi) return g;
    }
  }
  return (lo + hi) / 2;
}

void isolate_positive(const std::vector<Poly>& chain, const Poly& p,
                      const Rational& lo, const Rational& hi,
                      std::vector<std::pair<Rational, Rational>>& out) {
  size_t k = roots_in(chain, lo, hi);
  if (k == 0) return;
  if (k == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational m = split_point(lo, hi);
  int tries = 0;
  while (eval_poly(p, m) == 0 && tries++ < 64)
    m += (hi - lo) / Rational(1000000 + tries);
  isolate_positive(chain, p, lo, m, out);
  isolate_positive(chain, p, m, hi, out);
}

// Refines a sign-change bracket to relative width 2^-bits.
Real refine_root(const Poly& p, Rational lo, Rational hi, mpfr_prec_t bits) {
  Rational plo = eval_poly(p, lo);
  if (plo == 0) return Real::from_rational(lo, bits + 64);
  Rational phi = eval_poly(p, hi);
  if (phi == 0) return Real::from_rational(hi, bits + 64);
  if ((plo > 0) == (phi > 0))
    throw EigenFailure("root refinement lost its bracket");
  bool lo_pos = plo > 0;
  Rational tol = int_pow(Integer(2), -static_cast<long>(bits));
  while (true) {
    Rational alo = abs(lo), ahi = abs(hi);
    Rational scale = alo > ahi ? alo : ahi;
    if (hi - lo <= tol * scale) break;
    Rational m = split_point(lo, hi);
    Rational pm = eval_poly(p, m);
    if (pm == 0) return Real::from_rational(m, bits + 64);
    if ((pm > 0) == lo_pos)
      lo = m;
    else
      hi = m;
  }
  return Real::from_rational((lo + hi) / 2, bits + 64);
}

}  // namespace

std::vector<Real> isolate_real_roots(const std::vector<Rational>& coeffs, mpfr_prec_t bits) {
  Poly p = trim(coeffs);
  if (degree(p) == 0) return {};
  std::vector<Real> roots;
  // a squarefree polynomial has at most one root at the origin
  if (p[0] == 0) {
    roots.push_back(Real::from_long(0, bits));
    Poly q(p.begin() + 1, p.end());
    p = trim(q);
    if (degree(p) == 0 && p[0] != 0) return roots;
  }
  Rational maxc(0);
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Rational v = abs(p[i] / p.back());
    if (v > maxc) maxc = v;
  }
  Rational bound = maxc + 1;

  auto chain = sturm_chain(p);
  std::vector<std::pair<Rational, Rational>> brackets;
  isolate_positive(chain, p, Rational(0), bound, brackets);

  Poly pn = p;  // p(-x) for the negative axis
  for (size_t i = 1; i < pn.size(); i += 2) pn[i] = -pn[i];
  auto chain_n = sturm_chain(pn);
  std::vector<std::pair<Rational, Rational>> brackets_n;
  isolate_positive(chain_n, pn, Rational(0), bound, brackets_n);

  for (const auto& [lo, hi] : brackets_n) roots.push_back(-refine_root(pn, lo, hi, bits));
  for (const auto& [lo, hi] : brackets) roots.push_back(refine_root(p, lo, hi, bits));
  std::sort(roots.begin(), roots.end(), [](const Real& a, const Real& b) { return a < b; });
  return roots;
}

// ---------------------------------------------------------------------

namespace {

struct MpfrMatrix {
  size_t n = 0;
  std::vector<Real> a;
  MpfrMatrix(size_t nn, mpfr_prec_t prec) : n(nn), a(nn * nn, Real(prec)) {}
  Real& at(size_t i, size_t j) { return a[i * n + j]; }
  const Real& at(size_t i, size_t j) const { return a[i * n + j]; }
};

// Null vector of a numerically rank-deficient matrix by full-pivot
// elimination; the weakest pivot position becomes the free variable.
std::vector<Real> kernel_vector(MpfrMatrix m, mpfr_prec_t prec) {
  size_t n = m.n;
  std::vector<size_t> colperm(n);
  for (size_t i = 0; i < n; ++i) colperm[i] = i;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pi = k, pj = k;
    Real best = m.at(k, k).abs();
    for (size_t i = k; i < n; ++i)
      for (size_t j = k; j < n; ++j) {
        Real v = m.at(i, j).abs();
        if (best < v) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best.is_zero()) break;
    if (pi != k)
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pi, j));
    if (pj != k) {
      for (size_t i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, pj));
      std::swap(colperm[k], colperm[pj]);
    }
    for (size_t i = k + 1; i < n; ++i) {
      Real f = m.at(i, k) / m.at(k, k);
      for (size_t j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
    }
  }
  std::vector<Real> y(n, Real(prec));
  y[n - 1] = Real::from_long(1, prec);
  for (size_t ii = n - 1; ii-- > 0;) {
    Real acc(prec);
    for (size_t j = ii + 1; j < n; ++j) acc = acc + m.at(ii, j) * y[j];
    if (m.at(ii, ii).is_zero())
      throw EigenFailure("kernel extraction hit a zero pivot");
    y[ii] = -acc / m.at(ii, ii);
  }
  std::vector<Real> x(n, Real(prec));
  for (size_t i = 0; i < n; ++i) x[colperm[i]] = y[i];
  return x;
}

}  // namespace

EigenResult generic_eigen(const std::vector<RationalMatrix>& Ms,
                          const std::vector<Rational>& ell,
                          const Rational& norm_const, mpfr_prec_t bits) {
  if (Ms.empty()) throw std::invalid_argument("generic_eigen: no matrices");
  size_t r = Ms[0].rows;
  for (const auto& m : Ms)
    if (m.rows != r || m.cols != r)
      throw std::invalid_argument("generic_eigen: shape mismatch");
  if (ell.size() != Ms.size())
    throw std::invalid_argument("generic_eigen: weight count mismatch");
  for (size_t i = 0; i < Ms.size(); ++i)
    for (size_t j = i + 1; j < Ms.size(); ++j)
      if (!mat_equal(mat_mul(Ms[i], Ms[j]), mat_mul(Ms[j], Ms[i])))
        throw EigenFailure("matrices do not commute");

  RationalMatrix L(r, r);
  for (size_t k = 0; k < Ms.size(); ++k)
    for (size_t i = 0; i < r * r; ++i) L.a[i] += ell[k] * Ms[k].a[i];

  std::vector<Rational> p = char_poly(L);
  if (!poly_squarefree(p)) throw EigenCollisionError();

  std::vector<Real> lambdas = isolate_real_roots(p, bits);
  if (lambdas.size() != r) throw EigenFailure("expected all-real eigenvalues");

  Real maxmag(bits);
  for (const auto& l : lambdas)
    if (maxmag < l.abs()) maxmag = l.abs();
  Real sep_tol = maxmag.mul_2si(-static_cast<long>(bits / 2));
  for (size_t i = 0; i + 1 < lambdas.size(); ++i)
    if ((lambdas[i + 1] - lambdas[i]).abs() < sep_tol) throw EigenCollisionError();

  std::vector<MpfrMatrix> Mf;
  Mf.reserve(Ms.size());
  for (const auto& m : Ms) {
    MpfrMatrix f(r, bits);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) f.at(i, j) = Real::from_rational(m.at(i, j), bits);
    Mf.push_back(std::move(f));
  }

  EigenResult out;
  out.precision_bits = bits;
  Real nc = Real::from_rational(norm_const, bits);
  for (size_t i = 0; i < r; ++i) {
    std::vector<Real> v;
    if (r == 1) {
      v.assign(1, Real::from_long(1, bits));
    } else {
      MpfrMatrix A(r, bits);
      for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < r; ++b) {
          A.at(a, b) = Real::from_rational(L.at(b, a), bits);  // transpose
          if (a == b) A.at(a, b) = A.at(a, b) - lambdas[i];
        }
      v = kernel_vector(std::move(A), bits);
    }
    // normalize on the leading entry (exactly norm_const in the Hankel
    // use, where it is the value of the constant basis element); fall
    // back to the largest entry when the leading one is negligible
    Real vmax(bits);
    for (const auto& c : v)
      if (vmax < c.abs()) vmax = c.abs();
    if (vmax.is_zero()) throw EigenFailure("zero eigenvector");
    if (vmax.mul_2si(-static_cast<long>(bits / 2)) < v[0].abs()) {
      Real scale = nc / v[0];
      for (auto& c : v) c = c * scale;
      v[0] = nc;
    } else {
      size_t pivot = 0;
      for (size_t k = 0; k < v.size(); ++k)
        if (v[pivot].abs() < v[k].abs()) pivot = k;
      Real scale = Real::from_long(1, bits) / v[pivot];
      for (auto& c : v) c = c * scale;
    }
    out.eigen_rows.push_back(std::move(v));
  }

  // D^(j) entries as componentwise-quotient medians; everything stays in
  // mpfr because the entries can dwarf double range.
  Real worst(bits);
  out.per_matrix_eigenvalues.assign(Ms.size(), {});
  Real one = Real::from_long(1, bits);
  for (size_t j = 0; j < Ms.size(); ++j) {
    Real m_norm(bits);
    for (const auto& e : Mf[j].a)
      if (m_norm < e.abs()) m_norm = e.abs();
    for (size_t i = 0; i < r; ++i) {
      const auto& w = out.eigen_rows[i];
      Real w_norm(bits);
      for (const auto& e : w)
        if (w_norm < e.abs()) w_norm = e.abs();
      std::vector<Real> wm(r, Real(bits));
      for (size_t c = 0; c < r; ++c) {
        Real acc(bits);
        for (size_t k = 0; k < r; ++k) acc = acc + w[k] * Mf[j].at(k, c);
        wm[c] = acc;
      }
      Real comp_tol = w_norm.mul_2si(-static_cast<long>(bits / 2));
      std::vector<Real> quots;
      for (size_t c = 0; c < r; ++c)
        if (comp_tol < w[c].abs()) quots.push_back(wm[c] / w[c]);
      if (quots.empty()) throw EigenFailure("eigenvector has no usable component");
      std::sort(quots.begin(), quots.end(),
                [](const Real& a, const Real& b) { return a < b; });
      Real d = quots[quots.size() / 2];
      out.per_matrix_eigenvalues[j].push_back(d);
      Real denom = one;
      Real wn = w_norm * m_norm;
      if (denom < wn) denom = wn;
      for (size_t c = 0; c < r; ++c) {
        Real resid = (wm[c] - d * w[c]).abs() / denom;
        if (worst < resid) worst = resid;
      }
    }
  }
  out.residual = worst.to_double();
  Real accept = one.mul_2si(-static_cast<long>(bits / 4));
  if (accept < worst) throw EigenFailure("residual above acceptance threshold");
  return out;
}

}  // namespace wsi
