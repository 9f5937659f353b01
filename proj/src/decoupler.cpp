#include "blockroots/decoupler.hpp"

#include <string>

namespace blockroots {

void validate_mfd(const MFDSystem& sys) {
  if (sys.numerator.order() != sys.denominator.order()) {
    throw Error(ErrorCode::DimensionMismatch, "numerator and denominator orders differ");
  }
  if (sys.numerator.degree() >= sys.denominator.degree()) {
    throw Error(ErrorCode::InvalidArgument, "numerator degree must be below the denominator degree");
  }
  require_monic(sys.denominator);
}

namespace {

bool is_diagonal(const Matrix& j) {
  for (std::size_t r = 0; r < j.rows(); ++r)
    for (std::size_t c = 0; c < j.cols(); ++c)
      if (r != c && j(r, c) != 0.0) return false;
  return true;
}

CMatrix solve_at(const CMatrix& a, const CMatrix& b, std::complex<double> lambda) {
  try {
    return solve(a, b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::SingularAtLambda,
                "singular at lambda = " + std::to_string(lambda.real()) + "+" + std::to_string(lambda.imag()) + "i");
  }
}

}  // namespace

DecouplingResult design_decoupling(const MFDSystem& sys, const std::vector<Matrix>& modes,
                                   const DecouplingOptions& opts) {
  validate_mfd(sys);
  const std::size_t m = sys.denominator.order();
  const std::size_t l = sys.denominator.degree();
  const std::size_t k = sys.numerator.degree();
  if (modes.size() != l - k) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(l - k) + " mode blocks, got " +
                                                std::to_string(modes.size()));
  }
  DecouplingResult out{Matrix(), {}, {}, {}, MatrixPolynomial({Matrix::identity(m)}), {}, Matrix(), {}, modes, {}, {}};
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i].rows() != m || modes[i].cols() != m || !is_diagonal(modes[i])) {
      throw Error(ErrorCode::InvalidArgument, "mode block " + std::to_string(i) + " must be an m x m diagonal matrix", i);
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (modes[i](r, r) >= 0.0) {
        out.warnings.push_back("mode block " + std::to_string(i) + " entry " + std::to_string(r) +
                               " is not in the open left half-plane");
      }
    }
  }

  const Matrix& nk = sys.numerator.coeff(0);
  try {
    out.f = invert(nk);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::SingularLeadingCoefficient, "leading numerator coefficient N_k is singular");
  }

  if (k > 0) {
    std::vector<Matrix> tail;
    for (std::size_t i = 1; i <= k; ++i) tail.push_back(out.f * sys.numerator.coeff(i));
    const MatrixPolynomial normalized = MatrixPolynomial::monic(tail);
    try {
      FactorizeResult fr = full_factorize(normalized, opts.pipeline);
      out.numerator_chain = std::move(fr.chain);
      out.numerator_report = std::move(fr.report);
    } catch (const Error& e) {
      throw Error(ErrorCode::NumeratorFactorizationFailed, std::string(to_string(e.code())) + ": " + e.detail(), e.index());
    }
    for (const auto& w : out.numerator_report.warnings) out.warnings.push_back("numerator: " + w);
  }

  for (const auto& j : modes) out.qd.push_back(out.f * j * nk);
  out.desired_chain.factors = out.numerator_chain.factors;
  for (std::size_t i = out.qd.size(); i-- > 0;) out.desired_chain.factors.push_back(out.qd[i]);
  out.dd = reconstruct(out.desired_chain);

  out.kc = Matrix(m, m * l);
  for (std::size_t i = 0; i < l; ++i) {
    Matrix block = out.dd.coeff(l - i) - sys.denominator.coeff(l - i);
    out.kc.set_block(0, i * m, block);
    out.kc_blocks.push_back(std::move(block));
  }
  if (opts.tc) {
    if (opts.tc->rows() != m * l || opts.tc->cols() != m * l) {
      throw Error(ErrorCode::DimensionMismatch, "T_c must be " + std::to_string(m * l) + "x" + std::to_string(m * l));
    }
    out.k = out.kc * *opts.tc;
  }
  return out;
}

CMatrix mfd_transfer(const MFDSystem& sys, std::complex<double> lambda) {
  return sys.numerator.at(lambda) * solve_at(sys.denominator.at(lambda), CMatrix::identity(sys.denominator.order()), lambda);
}

ClosedLoopPoint closed_loop_eval(const MFDSystem& sys, const DecouplingResult& res, std::complex<double> lambda) {
  const std::size_t m = sys.denominator.order();
  ClosedLoopPoint pt;
  pt.lambda = lambda;
  pt.closed = sys.numerator.at(lambda) * solve_at(res.dd.at(lambda), to_complex(res.f), lambda);
  pt.target = CMatrix::identity(m);
  for (const auto& j : res.j_blocks) {
    CMatrix factor = CMatrix::identity(m) * lambda - to_complex(j);
    pt.target = pt.target * solve_at(factor, CMatrix::identity(m), lambda);
  }
  pt.error = frob_norm(pt.closed - pt.target);
  return pt;
}

ControllerForm controller_form(const MFDSystem& sys) {
  require_monic(sys.denominator);
  const std::size_t m = sys.denominator.order();
  const std::size_t l = sys.denominator.degree();
  const std::size_t k = sys.numerator.degree();
  if (sys.numerator.order() != m) throw Error(ErrorCode::DimensionMismatch, "numerator and denominator orders differ");
  if (k >= l) throw Error(ErrorCode::InvalidArgument, "numerator degree must be below the denominator degree");
  ControllerForm f{companion_right(sys.denominator), Matrix(m * l, m), Matrix(m, m * l)};
  f.bc.set_block((l - 1) * m, 0, Matrix::identity(m));
  for (std::size_t i = 0; i <= k; ++i) f.cc.set_block(0, i * m, sys.numerator.coeff(k - i));
  return f;
}

CMatrix realization_transfer(const ControllerForm& form, std::complex<double> lambda) {
  const std::size_t n = form.ac.rows();
  const CMatrix shifted = CMatrix::identity(n) * lambda - to_complex(form.ac);
  return to_complex(form.cc) * solve_at(shifted, to_complex(form.bc), lambda);
}

}  // namespace blockroots
