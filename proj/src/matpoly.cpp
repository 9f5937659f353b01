#include "blockroots/matpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace blockroots {

MatrixPolynomial::MatrixPolynomial(std::vector<Matrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::DimensionMismatch, "polynomial needs at least one coefficient");
  m_ = coeffs_.front().rows();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Matrix& c = coeffs_[i];
    if (c.empty() || c.rows() != m_ || c.cols() != m_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "coefficient " + std::to_string(i) + " is " + c.shape_string() + ", expected " +
                      std::to_string(m_) + "x" + std::to_string(m_),
                  i);
    }
    if (!c.all_finite()) {
      throw Error(ErrorCode::NonFiniteEntry, "coefficient " + std::to_string(i) + " is not finite", i);
    }
  }
  monic_ = coeffs_.front() == Matrix::identity(m_);
}

MatrixPolynomial MatrixPolynomial::monic(const std::vector<Matrix>& tail) {
  if (tail.empty()) throw Error(ErrorCode::DimensionMismatch, "monic polynomial needs degree >= 1");
  std::vector<Matrix> c;
  c.reserve(tail.size() + 1);
  c.push_back(Matrix::identity(tail.front().rows()));
  c.insert(c.end(), tail.begin(), tail.end());
  return MatrixPolynomial(std::move(c));
}

Matrix MatrixPolynomial::at(double lambda) const {
  Matrix r = coeffs_.front();
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r = r * lambda + coeffs_[i];
  return r;
}

CMatrix MatrixPolynomial::at(std::complex<double> lambda) const {
  CMatrix r = to_complex(coeffs_.front());
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r = r * lambda + to_complex(coeffs_[i]);
  return r;
}

double MatrixPolynomial::residual_scale() const { return std::max(1.0, frob_norm(trailing())); }

void require_monic(const MatrixPolynomial& p) {
  if (!p.is_monic()) throw Error(ErrorCode::NotMonic, "leading coefficient is not the identity");
}

bool CompletenessReport::complete() const {
  return spectrum_union_matches && pairwise_disjoint && std::isfinite(vandermonde_cond);
}

namespace {

void require_square_of(const MatrixPolynomial& p, const Matrix& x) {
  if (x.rows() != p.order() || x.cols() != p.order()) {
    throw Error(ErrorCode::DimensionMismatch,
                "argument is " + x.shape_string() + " for a polynomial of order " + std::to_string(p.order()));
  }
}

}  // namespace

Matrix eval_right(const MatrixPolynomial& p, const Matrix& x) {
  require_square_of(p, x);
  Matrix b = p.coeff(0);
  for (std::size_t k = 1; k <= p.degree(); ++k) b = p.coeff(k) + b * x;
  return b;
}

Matrix eval_left(const MatrixPolynomial& p, const Matrix& x) {
  require_square_of(p, x);
  Matrix b = p.coeff(0);
  for (std::size_t k = 1; k <= p.degree(); ++k) b = p.coeff(k) + x * b;
  return b;
}

DivisionResult synthetic_div_right(const MatrixPolynomial& p, const Matrix& x) {
  require_square_of(p, x);
  if (p.degree() == 0) throw Error(ErrorCode::InvalidArgument, "cannot divide a constant polynomial");
  std::vector<Matrix> b{p.coeff(0)};
  for (std::size_t k = 1; k < p.degree(); ++k) b.push_back(p.coeff(k) + b.back() * x);
  Matrix rem = p.trailing() + b.back() * x;
  return {MatrixPolynomial(std::move(b)), std::move(rem)};
}

DivisionResult synthetic_div_left(const MatrixPolynomial& p, const Matrix& x) {
  require_square_of(p, x);
  if (p.degree() == 0) throw Error(ErrorCode::InvalidArgument, "cannot divide a constant polynomial");
  std::vector<Matrix> b{p.coeff(0)};
  for (std::size_t k = 1; k < p.degree(); ++k) b.push_back(p.coeff(k) + x * b.back());
  Matrix rem = p.trailing() + x * b.back();
  return {MatrixPolynomial(std::move(b)), std::move(rem)};
}

Matrix companion_right(const MatrixPolynomial& p) {
  require_monic(p);
  const std::size_t m = p.order(), l = p.degree();
  Matrix c(m * l, m * l);
  const Matrix eye = Matrix::identity(m);
  for (std::size_t i = 0; i + 1 < l; ++i) c.set_block(i * m, (i + 1) * m, eye);
  for (std::size_t j = 0; j < l; ++j) c.set_block((l - 1) * m, j * m, -p.coeff(l - j));
  return c;
}

Matrix companion_left(const MatrixPolynomial& p) {
  require_monic(p);
  const std::size_t m = p.order(), l = p.degree();
  Matrix c(m * l, m * l);
  const Matrix eye = Matrix::identity(m);
  for (std::size_t i = 0; i + 1 < l; ++i) c.set_block((i + 1) * m, i * m, eye);
  for (std::size_t i = 0; i < l; ++i) c.set_block(i * m, (l - 1) * m, -p.coeff(l - i));
  return c;
}

Matrix companion_c3(const MatrixPolynomial& p) {
  require_monic(p);
  const std::size_t m = p.order(), l = p.degree();
  Matrix c(m * l, m * l);
  const Matrix eye = Matrix::identity(m);
  for (std::size_t i = 0; i + 1 < l; ++i) c.set_block(i * m, (i + 1) * m, eye);
  for (std::size_t i = 0; i < l; ++i) c.set_block(i * m, 0, -p.coeff(i + 1));
  return c;
}

Matrix block_vandermonde(const SolventSet& s) {
  if (s.solvents.empty()) throw Error(ErrorCode::DimensionMismatch, "empty solvent set");
  const std::size_t m = s.solvents.front().rows();
  const std::size_t l = s.solvents.size();
  Matrix v(m * l, m * l);
  for (std::size_t i = 0; i < l; ++i) {
    const Matrix& x = s.solvents[i];
    if (x.rows() != m || x.cols() != m) {
      throw Error(ErrorCode::DimensionMismatch, "solvent " + std::to_string(i) + " has shape " + x.shape_string(), i);
    }
    Matrix pw = Matrix::identity(m);
    for (std::size_t k = 0; k < l; ++k) {
      // Right: block column i holds I, R_i, ..., R_i^{l-1} downwards.
      // Left: block row i holds I, L_i, ..., L_i^{l-1} across.
      if (s.side == Side::Right) {
        v.set_block(k * m, i * m, pw);
      } else {
        v.set_block(i * m, k * m, pw);
      }
      pw = pw * x;
    }
  }
  return v;
}

CompletenessReport is_complete_set(const MatrixPolynomial& p, const SolventSet& s, double tol) {
  CompletenessReport r;
  if (s.solvents.size() != p.degree()) return r;
  const ComplexScalarList roots = latent_roots(p);
  std::vector<ComplexScalarList> spectra;
  ComplexScalarList all;
  for (const auto& x : s.solvents) {
    spectra.push_back(eigvals(x));
    all.insert(all.end(), spectra.back().begin(), spectra.back().end());
  }
  const double scale = std::max(1.0, max_modulus(roots));
  const SpectrumMatch match = match_spectra(roots, all);
  r.spectrum_match_distance = match.max_distance;
  r.spectrum_union_matches = match.same_size && match.max_distance <= tol * scale;
  r.min_spectral_separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < spectra.size(); ++i)
    for (std::size_t j = i + 1; j < spectra.size(); ++j)
      r.min_spectral_separation = std::min(r.min_spectral_separation, min_cross_distance(spectra[i], spectra[j]));
  r.pairwise_disjoint = r.min_spectral_separation > tol * scale;
  const Matrix v = block_vandermonde(s);
  r.vandermonde_det = det(v);
  r.vandermonde_cond = cond_frob(v);
  return r;
}

MatrixPolynomial multiply(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::DimensionMismatch, "polynomial orders differ");
  const std::size_t da = a.degree(), db = b.degree(), m = a.order();
  std::vector<Matrix> c(da + db + 1, Matrix(m, m));
  for (std::size_t i = 0; i <= da; ++i)
    for (std::size_t j = 0; j <= db; ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  return MatrixPolynomial(std::move(c));
}

MatrixPolynomial reconstruct(const SpectralFactorChain& chain) {
  if (chain.factors.empty()) throw Error(ErrorCode::DimensionMismatch, "empty factor chain");
  const std::size_t m = chain.factors.front().rows();
  std::vector<Matrix> c{Matrix::identity(m)};
  for (std::size_t k = 0; k < chain.factors.size(); ++k) {
    const Matrix& q = chain.factors[k];
    if (q.rows() != m || q.cols() != m) {
      throw Error(ErrorCode::DimensionMismatch, "factor " + std::to_string(k) + " has shape " + q.shape_string(), k);
    }
    // (λI - Q) P(λ): shift P up one degree and subtract Q P.
    std::vector<Matrix> next(c.size() + 1, Matrix(m, m));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j];
      next[j + 1] -= q * c[j];
    }
    c = std::move(next);
  }
  return MatrixPolynomial(std::move(c));
}

ComplexScalarList latent_roots(const MatrixPolynomial& p) { return eigvals(companion_right(p)); }

double coefficient_error(const MatrixPolynomial& reference, const MatrixPolynomial& other) {
  if (reference.degree() != other.degree() || reference.order() != other.order()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (std::size_t i = 0; i <= reference.degree(); ++i) {
    const double d = frob_norm(reference.coeff(i) - other.coeff(i));
    worst = std::max(worst, d / std::max(1.0, frob_norm(reference.coeff(i))));
  }
  return worst;
}

}  // namespace blockroots
