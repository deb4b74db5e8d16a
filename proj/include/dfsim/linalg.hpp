// Dense complex linear algebra for few-qubit states and operators (dim <= 16).
// Thin layer over Eigen: tensor products, adjoints, Hermitian eigensystems and
// PSD matrix square roots, plus the tolerance constants shared by the library.
#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace dfsim {

using Cx = std::complex<double>;
using Vec = Eigen::VectorXcd;  // state vector (ket)
using Mat = Eigen::MatrixXcd;  // operator

inline constexpr Cx kImag{0.0, 1.0};

// Tolerance tiers: construction-level roundoff, unitarity/hermiticity checks,
// and PSD eigenvalue clipping.
inline constexpr double kConstructTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kPsdClipTol = 1e-9;

inline Mat identity(Eigen::Index dim) { return Mat::Identity(dim, dim); }

inline Mat sigma_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Mat sigma_y() {
  Mat m(2, 2);
  m << 0, -kImag, kImag, 0;
  return m;
}

inline Mat sigma_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Vec basis_ket(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) throw std::invalid_argument("basis_ket: index out of range");
  Vec v = Vec::Zero(dim);
  v[index] = 1.0;
  return v;
}

// Kronecker product; the left operand owns the most significant index.
inline Mat tensor(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Vec tensor(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

inline Mat adjoint(const Mat& m) { return m.adjoint(); }

// <a|b>, conjugate-linear in the first argument.
inline Cx inner(const Vec& a, const Vec& b) { return a.dot(b); }

inline Mat projector(const Vec& v) { return v * v.adjoint(); }

inline bool is_finite(const Mat& m) { return m.allFinite(); }
inline bool is_finite(const Vec& v) { return v.allFinite(); }

inline bool is_hermitian(const Mat& m, double tol = kConstructTol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_unitary(const Mat& m, double tol = kUnitaryTol) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - identity(m.rows())).cwiseAbs().maxCoeff() <= tol;
}

struct EigenSystem {
  Eigen::VectorXd values;  // ascending
  Mat vectors;             // column k is the eigenvector of values[k], orthonormal
};

inline EigenSystem herm_eig(const Mat& m) {
  if (!is_hermitian(m, kUnitaryTol)) throw std::invalid_argument("herm_eig: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("herm_eig: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// Hermitian PSD square root; eigenvalues in [-kPsdClipTol, 0) are clipped to zero.
inline Mat matrix_sqrt_psd(const Mat& m) {
  EigenSystem es = herm_eig(m);
  Eigen::VectorXd roots(es.values.size());
  // eigenvalues below the spectrum's noise floor are indistinguishable from
  // zero, and the root would amplify them; clip before rooting
  const double floor = es.values.cwiseAbs().maxCoeff() * 1e-13;
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    double lambda = es.values[i];
    if (lambda < -kPsdClipTol) throw std::invalid_argument("matrix_sqrt_psd: matrix not PSD");
    roots[i] = lambda <= floor ? 0.0 : std::sqrt(lambda);
  }
  Mat s = es.vectors * roots.asDiagonal() * es.vectors.adjoint();
  return (s + Mat(s.adjoint())) / 2.0;
}

}  // namespace dfsim
