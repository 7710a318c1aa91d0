#pragma once

// Quantum-information objects and their biunitary elements in the spin
// planar algebra.
//
//   Hadamard matrix H (n x n)        <->  {0,1}-biunitary u in P_(2,+)
//   quantum Latin square Q (n x n)   <->  {0,1}-biunitary u in P_(3,+)
//   biunitary matrix U (n^2 x n^2)   <->  {0,2}-biunitary u in P_(4,+)
//   unitary error basis {B(j,l)}     <->  {A,R(4,+)}-biunitary u in P_(4,+)
//
// Coefficient placements (load-bearing, see tests):
//   Hadamard:  u = sum_ij (h_ij / sqrt n) e^i_j
//   QLS:       u = sum a_{ij}^k e^i_k(j], where a_{ij}^k is component i of
//              the vector in row k, column j
//   biunitary: u = sum u^{ij}_{kl} e^{ij}_{lk}   (note l,k swapped)
//   UEB:       a^{ij}_{kl} = B(j,l)_{ik} / sqrt n, placed as for biunitary

#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "spinpa/error.hpp"
#include "spinpa/numerics.hpp"
#include "spinpa/spin_core.hpp"
#include "spinpa/tangle_ops.hpp"

namespace spinpa {

inline constexpr double kDefaultTolerance = 1e-9;

struct HadamardMatrix {
  int n = 0;
  ComplexMatrix entries;
};

/// Symbols are 0-based in memory, 1-based in files.
struct LatinSquare {
  int n = 0;
  std::vector<std::vector<int>> rows;
};

/// vectors[row][column][component]
struct QuantumLatinSquare {
  int n = 0;
  std::vector<std::vector<std::vector<Complex>>> vectors;
};

/// entries[(i,j)][(k,l)] = u^{ij}_{kl}, pair (i,j) stored at i*n + j.
struct BiunitaryMatrix {
  int n = 0;
  ComplexMatrix entries;
};

/// matrices[j*n + l] = B(j,l).
struct UnitaryErrorBasis {
  int n = 0;
  std::vector<ComplexMatrix> matrices;
};

using QitObject = std::variant<HadamardMatrix, LatinSquare, QuantumLatinSquare, BiunitaryMatrix, UnitaryErrorBasis>;

inline std::string kind_name(const QitObject& obj) {
  static const char* names[] = {"hadamard", "latin", "qls", "biunitary", "ueb"};
  return names[obj.index()];
}

/// A violated object invariant.
struct Defect {
  std::string name;
  double residual = 0.0;
  std::string detail;
};

inline std::string describe(const std::vector<Defect>& defects) {
  std::ostringstream os;
  for (std::size_t i = 0; i < defects.size(); ++i) {
    if (i) os << "; ";
    os << defects[i].name << " violated (residual " << defects[i].residual << ")";
    if (!defects[i].detail.empty()) os << ": " << defects[i].detail;
  }
  return os.str();
}

namespace detail {

inline void require_square(const ComplexMatrix& m, std::size_t side, const char* what) {
  if (m.rows() != side || m.cols() != side)
    throw ValidationError(std::string(what) + " must be " + std::to_string(side) + "x" + std::to_string(side) + ", got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

inline double unitarity_defect(const ComplexMatrix& m) {
  return std::max(operator_norm_defect(matmul(m, adjoint(m))), operator_norm_defect(matmul(adjoint(m), m)));
}

inline ComplexMatrix block_transpose(const BiunitaryMatrix& u) {
  const auto n = static_cast<std::size_t>(u.n);
  ComplexMatrix v(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) v(i * n + j, k * n + l) = u.entries(k * n + j, i * n + l);
  return v;
}

} // namespace detail

inline ComplexMatrix block_transpose(const BiunitaryMatrix& u) { return detail::block_transpose(u); }

// ---------------------------------------------------------------------------
// Object invariants

inline std::vector<Defect> check_invariants(const HadamardMatrix& h, double tol = kDefaultTolerance) {
  detail::require_square(h.entries, static_cast<std::size_t>(h.n), "Hadamard matrix");
  std::vector<Defect> out;
  const auto n = static_cast<std::size_t>(h.n);
  ComplexMatrix g = matmul(h.entries, adjoint(h.entries));
  for (std::size_t i = 0; i < n; ++i) g(i, i) -= static_cast<double>(h.n);
  const double r = operator_norm(g);
  if (r > tol) out.push_back({"HH* = nI", r, ""});
  double worst = 0.0;
  std::ostringstream bad;
  int listed = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::abs(std::abs(h.entries(i, j)) - 1.0);
      worst = std::max(worst, d);
      if (d > tol && listed++ < 8) bad << (listed > 1 ? ", " : "") << "h(" << i + 1 << "," << j + 1 << ")";
    }
  if (worst > tol) out.push_back({"|h_ij| = 1", worst, bad.str()});
  return out;
}

inline std::vector<Defect> check_invariants(const LatinSquare& l, double /*tol*/ = kDefaultTolerance) {
  std::vector<Defect> out;
  const auto n = static_cast<std::size_t>(l.n);
  if (l.n < 1 || l.rows.size() != n) return {{"shape", 1.0, "expected " + std::to_string(l.n) + " rows"}};
  for (const auto& row : l.rows)
    if (row.size() != n) return {{"shape", 1.0, "ragged rows"}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (l.rows[i][j] < 0 || l.rows[i][j] >= l.n)
        return {{"symbol range", 1.0, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") outside 1.." + std::to_string(n)}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> seen_row(n, 0), seen_col(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      ++seen_row[static_cast<std::size_t>(l.rows[i][j])];
      ++seen_col[static_cast<std::size_t>(l.rows[j][i])];
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (seen_row[s] != 1)
        out.push_back({"each symbol once per row", 1.0, "row " + std::to_string(i + 1) + ", symbol " + std::to_string(s + 1)});
      if (seen_col[s] != 1)
        out.push_back({"each symbol once per column", 1.0, "column " + std::to_string(i + 1) + ", symbol " + std::to_string(s + 1)});
    }
  }
  return out;
}

inline std::vector<Defect> check_invariants(const QuantumLatinSquare& q, double tol = kDefaultTolerance) {
  const auto n = static_cast<std::size_t>(q.n);
  if (q.n < 1 || q.vectors.size() != n) return {{"shape", 1.0, "expected " + std::to_string(q.n) + " rows"}};
  for (const auto& row : q.vectors) {
    if (row.size() != n) return {{"shape", 1.0, "ragged rows"}};
    for (const auto& v : row)
      if (v.size() != n) return {{"shape", 1.0, "vector of wrong length"}};
  }
  std::vector<Defect> out;
  // Gram defect of the n vectors picked by `at(t)`.
  auto gram_defect = [&](auto at) {
    ComplexMatrix m(n, n);
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t c = 0; c < n; ++c) m(t, c) = at(t)[c];
    return operator_norm_defect(matmul(m, adjoint(m)));
  };
  double worst_col = 0.0, worst_row = 0.0;
  std::string col_detail, row_detail;
  for (std::size_t j = 0; j < n; ++j) {
    const double c = gram_defect([&](std::size_t t) -> const std::vector<Complex>& { return q.vectors[t][j]; });
    if (c > worst_col) {
      worst_col = c;
      col_detail = "column " + std::to_string(j + 1);
    }
    const double r = gram_defect([&](std::size_t t) -> const std::vector<Complex>& { return q.vectors[j][t]; });
    if (r > worst_row) {
      worst_row = r;
      row_detail = "row " + std::to_string(j + 1);
    }
  }
  if (worst_col > tol) out.push_back({"columns orthonormal", worst_col, col_detail});
  if (worst_row > tol) out.push_back({"rows orthonormal", worst_row, row_detail});
  return out;
}

inline std::vector<Defect> check_invariants(const BiunitaryMatrix& u, double tol = kDefaultTolerance) {
  detail::require_square(u.entries, static_cast<std::size_t>(u.n * u.n), "biunitary matrix");
  std::vector<Defect> out;
  const double a = detail::unitarity_defect(u.entries);
  if (a > tol) out.push_back({"U unitary", a, ""});
  const double b = detail::unitarity_defect(detail::block_transpose(u));
  if (b > tol) out.push_back({"block transpose unitary", b, ""});
  return out;
}

inline std::vector<Defect> check_invariants(const UnitaryErrorBasis& e, double tol = kDefaultTolerance) {
  const auto n = static_cast<std::size_t>(e.n);
  if (e.n < 1 || e.matrices.size() != n * n)
    return {{"shape", 1.0, "expected " + std::to_string(n * n) + " matrices, got " + std::to_string(e.matrices.size())}};
  for (const auto& b : e.matrices) detail::require_square(b, n, "error basis matrix");
  std::vector<Defect> out;
  double worst_u = 0.0;
  std::string which;
  for (std::size_t t = 0; t < e.matrices.size(); ++t) {
    const double d = detail::unitarity_defect(e.matrices[t]);
    if (d > worst_u) {
      worst_u = d;
      which = "B(" + std::to_string(t / n + 1) + "," + std::to_string(t % n + 1) + ")";
    }
  }
  if (worst_u > tol) out.push_back({"each B(j,l) unitary", worst_u, which});
  // Gram matrix under <A|B> = Tr(B* A) / n.
  const std::size_t m = n * n;
  ComplexMatrix gram(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      gram(a, b) = (e.matrices[b].eigen().adjoint() * e.matrices[a].eigen()).trace() / static_cast<double>(n);
  const double g = operator_norm_defect(gram);
  if (g > tol) out.push_back({"{B(j,l)} orthonormal under Tr(B*A)/n", g, ""});
  return out;
}

inline std::vector<Defect> check_invariants(const QitObject& obj, double tol = kDefaultTolerance) {
  return std::visit([tol](const auto& o) { return check_invariants(o, tol); }, obj);
}

template <class Obj>
void validate(const Obj& obj, double tol, const char* what) {
  const auto defects = check_invariants(obj, tol);
  if (!defects.empty()) throw ValidationError(std::string(what) + ": " + describe(defects));
}

// ---------------------------------------------------------------------------
// Certificates

enum class CertificateKind { zero_ell, ueb };

struct Residual {
  std::string name;
  double value = 0.0;
  bool ok = true;
};

struct BiunitaryCertificate {
  CertificateKind kind = CertificateKind::zero_ell;
  int width = 0;
  int ell = 0;
  SpinColor color;
  double tolerance = kDefaultTolerance;
  std::vector<Residual> residuals;
  bool verdict = false;

  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& r : residuals)
      if (!r.ok) out.push_back(r.name);
    return out;
  }

  double residual(const std::string& name) const {
    for (const auto& r : residuals)
      if (r.name == name) return r.value;
    throw Error("no residual named " + name);
  }

  std::string label() const {
    if (kind == CertificateKind::ueb) return "{A,R(4,+)}-biunitary in P_" + color.str();
    return "{0," + std::to_string(ell) + "}-biunitary in P_" + color.str();
  }
};

namespace detail {

inline void push_unitarity(BiunitaryCertificate& cert, const SpinElement& v, const std::string& name) {
  const SpinElement one = unit(v.context(), v.color());
  const double a = operator_norm(mult(v, star(v)) - one);
  const double b = operator_norm(mult(star(v), v) - one);
  cert.residuals.push_back({name + " " + name + "* = 1", a, a <= cert.tolerance});
  cert.residuals.push_back({name + "* " + name + " = 1", b, b <= cert.tolerance});
}

inline void finish(BiunitaryCertificate& cert) {
  cert.verdict = true;
  for (const auto& r : cert.residuals) cert.verdict = cert.verdict && r.ok;
}

} // namespace detail

/// Residual names for the rotated element: "R^l(u)".
inline std::string rotated_name(int ell) { return "R^" + std::to_string(ell) + "(u)"; }

/// {0,l}-biunitarity: u and R(k,e,l)(u) both unitary. Residuals are operator
/// norms of the defects and are always reported, also on rejection.
inline BiunitaryCertificate is_biunitary(const SpinElement& u, int ell, double tol = kDefaultTolerance) {
  const int k = u.color().width;
  if (!(0 < ell && ell < k))
    throw ValidationError("biunitarity needs 0 < l < k, got l = " + std::to_string(ell) + ", k = " + std::to_string(k));
  BiunitaryCertificate cert;
  cert.kind = CertificateKind::zero_ell;
  cert.width = k;
  cert.ell = ell;
  cert.color = u.color();
  cert.tolerance = tol;
  detail::push_unitarity(cert, u, "u");
  detail::push_unitarity(cert, rotate_pow(u, ell), rotated_name(ell));
  detail::finish(cert);
  return cert;
}

/// {A,R(4,+)}-biunitarity: Z_A(u) and R(u) both unitary.
inline BiunitaryCertificate is_AB_biunitary_ueb(const SpinElement& u, double tol = kDefaultTolerance) {
  if (!(u.color() == SpinColor{4, Shading::plus}))
    throw ColorMismatch("unitary error basis elements live in P(4,+), got " + u.color().str());
  BiunitaryCertificate cert;
  cert.kind = CertificateKind::ueb;
  cert.width = 4;
  cert.ell = 1;
  cert.color = u.color();
  cert.tolerance = tol;
  detail::push_unitarity(cert, partial_swap_A(u), "A(u)");
  detail::push_unitarity(cert, rotate(u), "R(u)");
  detail::finish(cert);
  return cert;
}

// ---------------------------------------------------------------------------
// Converters

inline SpinElement from_hadamard(const HadamardMatrix& h, double tol = kDefaultTolerance) {
  validate(h, tol, "not a complex Hadamard matrix");
  const SpinContext ctx(h.n);
  SpinElement u(ctx, {2, Shading::plus});
  const double s = 1.0 / ctx.delta();
  for (int i = 0; i < h.n; ++i)
    for (int j = 0; j < h.n; ++j)
      u.add_term({std::nullopt, {i}, {j}, std::nullopt}, s * h.entries(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return u;
}

namespace detail {

inline void require_certificate(const BiunitaryCertificate& cert, const char* what) {
  if (!cert.verdict) {
    std::ostringstream os;
    os << what << ": element is not " << cert.label() << "; failed:";
    for (const auto& r : cert.residuals)
      if (!r.ok) os << " [" << r.name << " residual " << r.value << "]";
    throw ValidationError(os.str());
  }
}

inline void require_color(const SpinElement& u, SpinColor c, const char* what) {
  if (!(u.color() == c)) throw ColorMismatch(std::string(what) + " expects P" + c.str() + ", got " + u.color().str());
}

} // namespace detail

inline HadamardMatrix to_hadamard(const SpinElement& u, double tol = kDefaultTolerance) {
  detail::require_color(u, {2, Shading::plus}, "to_hadamard");
  detail::require_certificate(is_biunitary(u, 1, tol), "to_hadamard");
  const int n = u.context().spins();
  HadamardMatrix h{n, ComplexMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n))};
  for (const auto& [idx, v] : u.terms())
    h.entries(static_cast<std::size_t>(idx.top[0]), static_cast<std::size_t>(idx.bottom[0])) = u.context().delta() * v;
  return h;
}

inline QuantumLatinSquare latin_to_qls(const LatinSquare& l) {
  validate(l, 0.0, "not a Latin square");
  const auto n = static_cast<std::size_t>(l.n);
  QuantumLatinSquare q{l.n, std::vector(n, std::vector(n, std::vector<Complex>(n)))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q.vectors[i][j][static_cast<std::size_t>(l.rows[i][j])] = 1.0;
  return q;
}

inline SpinElement from_qls(const QuantumLatinSquare& q, double tol = kDefaultTolerance) {
  validate(q, tol, "not a quantum Latin square");
  const SpinContext ctx(q.n);
  SpinElement u(ctx, {3, Shading::plus});
  const auto n = static_cast<std::size_t>(q.n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        u.add_term({std::nullopt, {static_cast<Spin>(i)}, {static_cast<Spin>(k)}, static_cast<Spin>(j)}, q.vectors[k][j][i]);
  return u;
}

inline QuantumLatinSquare to_qls(const SpinElement& u, double tol = kDefaultTolerance) {
  detail::require_color(u, {3, Shading::plus}, "to_qls");
  detail::require_certificate(is_biunitary(u, 1, tol), "to_qls");
  const auto n = static_cast<std::size_t>(u.context().spins());
  QuantumLatinSquare q{u.context().spins(), std::vector(n, std::vector(n, std::vector<Complex>(n)))};
  for (const auto& [idx, v] : u.terms())
    q.vectors[static_cast<std::size_t>(idx.bottom[0])][static_cast<std::size_t>(*idx.right)][static_cast<std::size_t>(idx.top[0])] = v;
  return q;
}

namespace detail {

// u = sum a^{ij}_{kl} e^{ij}_{lk} with a supplied by `coeff(i,j,k,l)`.
template <class Coeff>
SpinElement assemble_four_box(const SpinContext& ctx, Coeff coeff) {
  SpinElement u(ctx, {4, Shading::plus});
  const int n = ctx.spins();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) u.add_term({std::nullopt, {i, j}, {l, k}, std::nullopt}, coeff(i, j, k, l));
  return u;
}

} // namespace detail

inline SpinElement from_biunitary_matrix(const BiunitaryMatrix& m, double tol = kDefaultTolerance) {
  validate(m, tol, "not a biunitary matrix");
  const auto n = static_cast<std::size_t>(m.n);
  return detail::assemble_four_box(SpinContext(m.n), [&](int i, int j, int k, int l) {
    return m.entries(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j), static_cast<std::size_t>(k) * n + static_cast<std::size_t>(l));
  });
}

inline BiunitaryMatrix to_biunitary_matrix(const SpinElement& u, double tol = kDefaultTolerance) {
  detail::require_color(u, {4, Shading::plus}, "to_biunitary_matrix");
  detail::require_certificate(is_biunitary(u, 2, tol), "to_biunitary_matrix");
  const auto n = static_cast<std::size_t>(u.context().spins());
  BiunitaryMatrix m{u.context().spins(), ComplexMatrix(n * n, n * n)};
  for (const auto& [idx, v] : u.terms()) {
    const auto i = static_cast<std::size_t>(idx.top[0]), j = static_cast<std::size_t>(idx.top[1]);
    const auto l = static_cast<std::size_t>(idx.bottom[0]), k = static_cast<std::size_t>(idx.bottom[1]);
    m.entries(i * n + j, k * n + l) = v;
  }
  return m;
}

inline SpinElement from_ueb(const UnitaryErrorBasis& e, double tol = kDefaultTolerance) {
  validate(e, tol, "not a unitary error basis");
  const SpinContext ctx(e.n);
  const auto n = static_cast<std::size_t>(e.n);
  const double s = 1.0 / ctx.delta();
  return detail::assemble_four_box(ctx, [&](int i, int j, int k, int l) {
    return s * e.matrices[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(l)](static_cast<std::size_t>(i), static_cast<std::size_t>(k));
  });
}

inline UnitaryErrorBasis to_ueb(const SpinElement& u, double tol = kDefaultTolerance) {
  detail::require_color(u, {4, Shading::plus}, "to_ueb");
  detail::require_certificate(is_AB_biunitary_ueb(u, tol), "to_ueb");
  const auto n = static_cast<std::size_t>(u.context().spins());
  UnitaryErrorBasis e{u.context().spins(), std::vector<ComplexMatrix>(n * n, ComplexMatrix(n, n))};
  for (const auto& [idx, v] : u.terms()) {
    const auto i = static_cast<std::size_t>(idx.top[0]), j = static_cast<std::size_t>(idx.top[1]);
    const auto l = static_cast<std::size_t>(idx.bottom[0]), k = static_cast<std::size_t>(idx.bottom[1]);
    e.matrices[j * n + l](i, k) = u.context().delta() * v;
  }
  return e;
}

/// The planar element of an object together with the biunitarity type it
/// should have.
struct PlanarImage {
  SpinElement element;
  int ell = 1;
  bool is_ueb = false;
};

inline PlanarImage to_planar(const QitObject& obj, double tol = kDefaultTolerance) {
  struct Visitor {
    double tol;
    PlanarImage operator()(const HadamardMatrix& h) const { return {from_hadamard(h, tol), 1, false}; }
    PlanarImage operator()(const LatinSquare& l) const { return {from_qls(latin_to_qls(l), tol), 1, false}; }
    PlanarImage operator()(const QuantumLatinSquare& q) const { return {from_qls(q, tol), 1, false}; }
    PlanarImage operator()(const BiunitaryMatrix& m) const { return {from_biunitary_matrix(m, tol), 2, false}; }
    PlanarImage operator()(const UnitaryErrorBasis& e) const { return {from_ueb(e, tol), 1, true}; }
  };
  return std::visit(Visitor{tol}, obj);
}

inline BiunitaryCertificate certify(const PlanarImage& img, double tol = kDefaultTolerance) {
  return img.is_ueb ? is_AB_biunitary_ueb(img.element, tol) : is_biunitary(img.element, img.ell, tol);
}

// ---------------------------------------------------------------------------
// Example families

/// H_ij = w^(ij) with w = exp(2 pi i / n).
inline HadamardMatrix fourier_hadamard(int n) {
  HadamardMatrix h{n, ComplexMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n))};
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h.entries(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = std::polar(1.0, two_pi * ((i * j) % n) / n);
  return h;
}

/// Shift X (cyclic permutation) and clock Z = diag(w^0..w^(n-1)); B(j,l) = X^j Z^l.
/// At n = 2 this is the Pauli basis up to phases.
inline UnitaryErrorBasis shift_clock_ueb(int n) {
  const auto sz = static_cast<std::size_t>(n);
  ComplexMatrix x(sz, sz), z(sz, sz);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t i = 0; i < sz; ++i) {
    x((i + 1) % sz, i) = 1.0;
    z(i, i) = std::polar(1.0, two_pi * static_cast<double>(i) / n);
  }
  UnitaryErrorBasis e{n, {}};
  ComplexMatrix xj = ComplexMatrix::identity(sz);
  for (int j = 0; j < n; ++j) {
    ComplexMatrix zl = ComplexMatrix::identity(sz);
    for (int l = 0; l < n; ++l) {
      e.matrices.push_back(matmul(xj, zl));
      zl = matmul(zl, z);
    }
    xj = matmul(xj, x);
  }
  return e;
}

/// The 5x5 Latin square that is not isotopic to a group table (0-based).
inline LatinSquare non_group_latin_square_5() {
  return {5, {{0, 1, 2, 3, 4}, {1, 3, 0, 4, 2}, {2, 4, 3, 1, 0}, {3, 0, 4, 2, 1}, {4, 2, 1, 0, 3}}};
}

/// U = A (x) B; its block transpose is A^T (x) B.
inline BiunitaryMatrix kron_biunitary(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("kron_biunitary: factors must have equal size");
  return {static_cast<int>(a.rows()), kron(a, b)};
}

} // namespace spinpa
