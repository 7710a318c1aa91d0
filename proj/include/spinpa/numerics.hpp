#pragma once

// Dense complex linear algebra used by the certificates and the kernel
// solver. Backed by Eigen; one deterministic SVD (two-sided Jacobi with a
// column-pivoting QR preconditioner) is used everywhere.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinpa/error.hpp"

namespace spinpa {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
  using Storage = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols) : m_(Storage::Zero(rows, cols)) {}

  /// Takes ownership of dense storage; rejects NaN/Inf entries.
  explicit ComplexMatrix(Storage m) : m_(std::move(m)) { check_finite(); }

  /// Row-major nested initialisation; every row must have the same length.
  static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Storage m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw ValidationError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return ComplexMatrix(std::move(m));
  }

  static ComplexMatrix identity(std::size_t n) { return ComplexMatrix(Storage::Identity(n, n)); }

  std::size_t rows() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(m_.cols()); }

  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  Complex& operator()(std::size_t i, std::size_t j) { return m_(i, j); }

  const Storage& eigen() const { return m_; }
  Storage& eigen() { return m_; }

  std::vector<Complex> column(std::size_t j) const {
    std::vector<Complex> out(rows());
    for (std::size_t i = 0; i < rows(); ++i) out[i] = m_(i, j);
    return out;
  }

  void set_column(std::size_t j, const std::vector<Complex>& v) {
    if (v.size() != rows()) throw ValidationError("column length mismatch");
    for (std::size_t i = 0; i < rows(); ++i) m_(i, j) = v[i];
  }

private:
  void check_finite() const {
    for (Eigen::Index i = 0; i < m_.rows(); ++i)
      for (Eigen::Index j = 0; j < m_.cols(); ++j)
        if (!std::isfinite(m_(i, j).real()) || !std::isfinite(m_(i, j).imag()))
          throw ValidationError("non-finite matrix entry at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
  }

  Storage m_;
};

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw ValidationError("matmul shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  return ComplexMatrix(ComplexMatrix::Storage(a.eigen() * b.eigen()));
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  return ComplexMatrix(ComplexMatrix::Storage(a.eigen().adjoint()));
}

inline ComplexMatrix subtract_identity(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("subtract_identity needs a square matrix");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) -= 1.0;
  return out;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("shape mismatch");
  return ComplexMatrix(ComplexMatrix::Storage(a.eigen() - b.eigen()));
}

inline ComplexMatrix scaled(const ComplexMatrix& a, Complex c) {
  return ComplexMatrix(ComplexMatrix::Storage(a.eigen() * c));
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.eigen().block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.eigen();
  return out;
}

namespace detail {

using Svd = Eigen::JacobiSVD<Eigen::MatrixXcd, Eigen::ColPivHouseholderQRPreconditioner>;

inline void check_svd(const Svd& svd) {
  if (svd.info() != Eigen::Success) throw NumericalError("SVD did not converge");
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (!std::isfinite(svd.singularValues()(i))) throw NumericalError("SVD produced non-finite values");
}

} // namespace detail

/// Singular values in nonincreasing order; length min(rows, cols).
inline std::vector<double> singular_values(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  detail::Svd svd(Eigen::MatrixXcd(a.eigen()));
  detail::check_svd(svd);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

/// Largest singular value (spectral norm).
inline double operator_norm(const ComplexMatrix& a) {
  const auto s = singular_values(a);
  return s.empty() ? 0.0 : s.front();
}

/// Largest singular value of a - I.
inline double operator_norm_defect(const ComplexMatrix& a) { return operator_norm(subtract_identity(a)); }

/// Result of a thresholded kernel extraction.
struct KernelResult {
  ComplexMatrix basis;                  ///< orthonormal columns spanning the numerical kernel
  std::vector<double> singular_values;  ///< all singular values (padded with zeros to cols), nonincreasing
  double threshold = 0.0;               ///< absolute cutoff actually applied
  double largest_null = 0.0;           ///< largest singular value counted as kernel
  double smallest_nonnull = 0.0;       ///< smallest singular value counted as rank (0 if none)
  /// smallest_nonnull / largest_null, with the denominator floored at
  /// machine epsilon times the matrix scale. When nothing is kept the
  /// numerator is taken as the scale itself.
  double gap = 0.0;

  std::size_t dimension() const { return basis.cols(); }
};

/// Right singular vectors whose singular value is <= rel_tol * max(sigma_max, scale_hint).
/// A caller that knows the natural size of the operator passes it as
/// scale_hint, so that an operator which is zero up to rounding is not given
/// full rank. Works for any shape; wide matrices are padded with zero
/// singular values.
inline KernelResult kernel(const ComplexMatrix& a, double rel_tol, double scale_hint = 0.0) {
  const std::size_t n = a.cols();
  KernelResult out;
  if (n == 0) return out;
  if (a.rows() == 0) {
    out.basis = ComplexMatrix::identity(n);
    out.singular_values.assign(n, 0.0);
    out.gap = 1.0 / std::numeric_limits<double>::epsilon();
    return out;
  }
  detail::Svd svd(Eigen::MatrixXcd(a.eigen()), Eigen::ComputeFullV);
  detail::check_svd(svd);
  std::vector<double> s(n, 0.0);
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i) s[static_cast<std::size_t>(i)] = sv(i);
  const double smax = s.front();
  const double ref = std::max(smax, scale_hint);
  const double cutoff = rel_tol * ref;
  std::size_t rank = 0;
  while (rank < n && s[rank] > cutoff) ++rank;

  const Eigen::MatrixXcd& v = svd.matrixV();
  ComplexMatrix basis(n, n - rank);
  for (std::size_t j = rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j - rank) = v(i, j);

  const double scale = ref > 0.0 ? ref : 1.0;
  const double floor = std::numeric_limits<double>::epsilon() * scale;
  out.basis = std::move(basis);
  out.threshold = cutoff;
  out.largest_null = rank < n ? s[rank] : 0.0;
  out.smallest_nonnull = rank > 0 ? s[rank - 1] : 0.0;
  const double num = rank > 0 ? out.smallest_nonnull : scale;
  out.gap = num / std::max(out.largest_null, floor);
  out.singular_values = std::move(s);
  return out;
}

/// Orthonormal kernel basis only.
inline ComplexMatrix kernel_basis(const ComplexMatrix& a, double rel_tol, double scale_hint = 0.0) {
  return kernel(a, rel_tol, scale_hint).basis;
}

/// Minimum-norm least-squares solution of a x = b and its residual norm.
struct LeastSquares {
  std::vector<Complex> x;
  double residual = 0.0;
};

inline LeastSquares least_squares(const ComplexMatrix& a, const std::vector<Complex>& b) {
  if (b.size() != a.rows()) throw ValidationError("least_squares: rhs length mismatch");
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = b[i];
  LeastSquares out;
  if (a.cols() == 0) {
    out.residual = rhs.norm();
    return out;
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(Eigen::MatrixXcd(a.eigen()));
  const Eigen::VectorXcd x = cod.solve(rhs);
  out.x.assign(x.data(), x.data() + x.size());
  out.residual = (a.eigen() * x - rhs).norm();
  return out;
}

inline double vector_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

} // namespace spinpa
