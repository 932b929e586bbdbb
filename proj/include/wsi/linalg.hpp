#ifndef WSI_LINALG_HPP
#define WSI_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "wsi/bigfloat.hpp"
#include "wsi/rational.hpp"

namespace wsi {

struct RationalMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Rational> a;  // row major

  RationalMatrix() = default;
  RationalMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

  Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }

  static RationalMatrix identity(size_t n);
};

RationalMatrix mat_mul(const RationalMatrix& x, const RationalMatrix& y);
bool mat_equal(const RationalMatrix& x, const RationalMatrix& y);

// Exact determinant and rank (fraction-free elimination after clearing
// denominators).
Rational det(const RationalMatrix& m);
size_t rank(const RationalMatrix& m);

struct SingularMatrixError : std::runtime_error {
  SingularMatrixError() : std::runtime_error("singular matrix") {}
};

// Solves A x = b exactly; throws SingularMatrixError.
std::vector<Rational> solve(const RationalMatrix& A, const std::vector<Rational>& b);

// Solves x^T A = b^T exactly.
std::vector<Rational> solve_left(const RationalMatrix& A, const std::vector<Rational>& b);

RationalMatrix inverse(const RationalMatrix& A);

// det of the principal submatrix indexed by idx is nonzero (exact).
bool principal_minor_nonsingular(const RationalMatrix& H, const std::vector<size_t>& idx);

// Characteristic polynomial coefficients, p(x) = x^n + c[n-1] x^{n-1} + ... + c[0],
// returned as c[0..n] with c[n] = 1 (Faddeev-LeVerrier).
std::vector<Rational> char_poly(const RationalMatrix& m);

struct EigenCollisionError : std::runtime_error {
  EigenCollisionError() : std::runtime_error("eigenvalue collision for this linear combination") {}
};
struct EigenFailure : std::runtime_error {
  explicit EigenFailure(const std::string& w) : std::runtime_error(w) {}
};

struct EigenResult {
  std::vector<std::vector<Real>> eigen_rows;          // r normalized left eigenvectors
  std::vector<std::vector<Real>> per_matrix_eigenvalues;  // n lists of r values
  mpfr_prec_t precision_bits = 0;
  double residual = 0.0;  // max_j relative max-norm of W M_j - D_j W
};

// Left eigen data of L = sum ell_j Ms[j] for pairwise-commuting rational
// matrices with real distinct eigenvalues. Eigenvalues come from exact
// isolation of the characteristic polynomial refined to `bits`; rows are
// rescaled so the first entry equals norm_const.
EigenResult generic_eigen(const std::vector<RationalMatrix>& Ms,
                          const std::vector<Rational>& ell,
                          const Rational& norm_const, mpfr_prec_t bits);

// All real roots of a squarefree rational polynomial, each to relative
// precision 2^-bits (exposed for tests).
std::vector<Real> isolate_real_roots(const std::vector<Rational>& coeffs, mpfr_prec_t bits);

}  // namespace wsi

#endif
