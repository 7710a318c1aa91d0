#pragma once

// The planar subalgebra Q of the (l,e)-cabled spin planar algebra attached to
// a {0,l}-biunitary u in P_(k,e).
//
// Level m of Q sits inside P_(ml, e). With e' = k - l extra strands,
//
//   sigma~(x) = u_m . I^e'(x) . u_m*          u_m the staircase at level m
//   F(z)      = delta^-e' . IL^e'(EL^e'(z))  (IL, EL: left inclusion / cap)
//
// and Q_(m,+) = ker(sigma~ - F sigma~). sigma~ is an isometry for the
// normalised trace and F is the orthogonal projection onto the range of IL^e'.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "spinpa/error.hpp"
#include "spinpa/numerics.hpp"
#include "spinpa/qit_bridge.hpp"
#include "spinpa/spin_core.hpp"
#include "spinpa/tangle_ops.hpp"

namespace spinpa {

inline constexpr double kDefaultKernelThreshold = 1e-8;

/// Color bookkeeping of the (l,e)-cabling: (m,eta) -> (ml, e eta^l).
struct CablingData {
  int k = 0;
  int ell = 0;
  Shading eps = Shading::plus;

  int extra() const { return k - ell; }

  Shading level_shading(Shading eta) const {
    return (eta == Shading::minus && ell % 2 == 1) ? flip(eps) : eps;
  }
  SpinColor ambient(int m, Shading eta = Shading::plus) const { return {m * ell, level_shading(eta)}; }
  SpinColor staircase_color(int m, Shading eta = Shading::plus) const {
    return {m * ell + extra(), level_shading(eta)};
  }
  /// Color of y in sigma~(x) = IL^e'(y).
  SpinColor partner_color(int m, Shading eta = Shading::plus) const {
    return {m * ell, flip_n(level_shading(eta), extra())};
  }
  double modulus(const SpinContext& ctx) const { return std::pow(ctx.delta(), ell); }
};

class Staircase {
public:
  Staircase(SpinElement u, CablingData cabling, std::vector<SpinElement> levels)
      : u_(std::move(u)), cabling_(cabling), levels_(std::move(levels)) {}

  const SpinContext& context() const { return u_.context(); }
  const CablingData& cabling() const { return cabling_; }
  const SpinElement& element() const { return u_; }
  int max_level() const { return static_cast<int>(levels_.size()) - 1; }

  const SpinElement& at(int m) const {
    if (m < 0 || m > max_level())
      throw ValidationError("level " + std::to_string(m) + " exceeds staircase (built to " + std::to_string(max_level()) + ")");
    return levels_[static_cast<std::size_t>(m)];
  }

private:
  SpinElement u_;
  CablingData cabling_;
  std::vector<SpinElement> levels_;
};

/// u_0 = 1, u_1 = u, u_(m+1) = I^l(u_m) . IL^(ml)(v) with v = u at odd
/// levels and v = R^-l(u*) at even levels.
inline Staircase build_staircase(const SpinElement& u, int ell, int max_level, double tol = kDefaultTolerance) {
  if (max_level < 0) throw ValidationError("max level must be >= 0");
  const auto cert = is_biunitary(u, ell, tol);
  if (!cert.verdict) {
    std::string failed;
    for (const auto& n : cert.failed()) failed += " [" + n + "]";
    throw ValidationError("staircase needs a {0," + std::to_string(ell) + "}-biunitary element; failed:" + failed);
  }
  const CablingData cab{u.color().width, ell, u.color().shading};
  const SpinElement odd = u;
  const SpinElement even = rotate_pow(star(u), -ell);
  std::vector<SpinElement> levels;
  levels.push_back(unit(u.context(), {cab.extra(), cab.eps}));
  for (int m = 0; m < max_level; ++m) {
    const SpinElement& v = (m + 1) % 2 == 1 ? odd : even;
    levels.push_back(mult(incl_right_pow(levels.back(), ell), incl_left_pow(v, m * ell)));
  }
  return Staircase(u, cab, std::move(levels));
}

/// Largest of ||u_m u_m* - 1|| and ||u_m* u_m - 1||.
inline double staircase_unitarity_defect(const Staircase& s, int m) {
  const SpinElement& v = s.at(m);
  const SpinElement one = unit(v.context(), v.color());
  return std::max(operator_norm(mult(v, star(v)) - one), operator_norm(mult(star(v), v) - one));
}

// ---------------------------------------------------------------------------
// The maps, for an explicit staircase element. `extra` is k - l.

inline SpinElement sigma_tilde(const SpinElement& stair, const SpinElement& x, int extra) {
  return mult(stair, mult(incl_right_pow(x, extra), star(stair)));
}

/// Adjoint of sigma_tilde for the normalised trace.
inline SpinElement sigma_tilde_adjoint(const SpinElement& stair, const SpinElement& z, int extra) {
  const double s = std::pow(z.context().delta(), -extra);
  return scale(cond_right_pow(mult(star(stair), mult(z, stair)), extra), s);
}

inline SpinElement projection_F(const SpinElement& z, int extra) {
  const double s = std::pow(z.context().delta(), -extra);
  return scale(incl_left_pow(cond_left_pow(z, extra), extra), s);
}

/// L(x) = sigma~(x) - F(sigma~(x)).
inline SpinElement membership_apply(const SpinElement& stair, const SpinElement& x, int extra) {
  const SpinElement z = sigma_tilde(stair, x, extra);
  return z - projection_F(z, extra);
}

struct MembershipOperator {
  int m = 0;
  Shading eta = Shading::plus;
  SpinColor ambient;
  SpinColor target;
  ComplexMatrix matrix;  ///< rows: target basis, columns: ambient basis
};

namespace detail {

// Upper bound on dense operator entries; beyond this assembly is refused.
inline constexpr std::uint64_t kMaxDenseEntries = 100'000'000;

inline MembershipOperator assemble_membership(const SpinElement& stair, SpinColor ambient, int extra, int threads) {
  const SpinContext& ctx = stair.context();
  const std::uint64_t cols = basis_dimension(ctx, ambient);
  const std::uint64_t rows = basis_dimension(ctx, stair.color());
  if (rows * cols > kMaxDenseEntries)
    throw ResourceError("membership operator " + std::to_string(rows) + "x" + std::to_string(cols) + " is too large to assemble");
  MembershipOperator op;
  op.ambient = ambient;
  op.target = stair.color();
  op.matrix = ComplexMatrix(rows, cols);
  // Each column is written by exactly one worker, so the result does not
  // depend on the thread count.
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t c = begin; c < end; ++c) {
      SpinElement e(ctx, ambient);
      e.add_term(basis_from_ordinal(ctx, ambient, c), 1.0);
      const SpinElement col = membership_apply(stair, e, extra);
      for (const auto& [idx, v] : col.terms()) op.matrix(basis_ordinal(ctx, idx), c) = v;
    }
  };
  const auto nt = static_cast<std::uint64_t>(std::max(1, threads));
  if (nt == 1 || cols < 2 * nt) {
    work(0, cols);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (cols + nt - 1) / nt;
    for (std::uint64_t t = 0; t < nt; ++t) {
      const std::uint64_t b = t * chunk, e = std::min(cols, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  return op;
}

} // namespace detail

inline MembershipOperator membership_operator(const Staircase& s, int m, int threads = 1) {
  MembershipOperator op = detail::assemble_membership(s.at(m), s.cabling().ambient(m), s.cabling().extra(), threads);
  op.m = m;
  return op;
}

// ---------------------------------------------------------------------------
// Kernel solving

struct QSpace {
  SpinColor color;
  std::vector<SpinElement> basis;  ///< orthonormal for the normalised trace
  double residual = 0.0;           ///< max ||L(b)|| over the basis
  double gap = 0.0;
  double threshold = 0.0;
  std::vector<double> singular_values;

  std::size_t dimension() const { return basis.size(); }
};

/// Kernel of L for an explicit staircase element and ambient color.
inline QSpace solve_q_space(const SpinElement& stair, SpinColor ambient, int extra, double rel_tol = kDefaultKernelThreshold,
                            int threads = 1) {
  const SpinContext& ctx = stair.context();
  const MembershipOperator op = detail::assemble_membership(stair, ambient, extra, threads);
  // ||L|| <= 1 for the trace norms; in coefficient coordinates that bound
  // becomes sqrt(w_ambient / w_target).
  const double natural = std::sqrt(basis_trace_weight(ctx, ambient) / basis_trace_weight(ctx, stair.color()));
  const KernelResult ker = kernel(op.matrix, rel_tol, natural);
  QSpace out;
  out.color = ambient;
  out.gap = ker.gap;
  out.threshold = ker.threshold;
  out.singular_values = ker.singular_values;
  // Unit coefficient vectors have trace norm sqrt(weight).
  const double rescale = 1.0 / std::sqrt(basis_trace_weight(ctx, ambient));
  for (std::size_t j = 0; j < ker.dimension(); ++j) {
    SpinElement b = from_vector(ctx, ambient, ker.basis.column(j));
    b = scale(b, rescale);
    out.residual = std::max(out.residual, norm(membership_apply(stair, b, extra)));
    out.basis.push_back(std::move(b));
  }
  return out;
}

struct QLevelResult {
  int m = 0;
  std::size_t dimension = 0;
  QSpace plus;
  /// Q_(m,-): solved directly at m = 0, rotated from Q_(m,+) otherwise.
  QSpace minus;
  double residual = 0.0;
  double gap = 0.0;

  const std::vector<SpinElement>& basis() const { return plus.basis; }
};

/// Q_(0,-) uses the unit staircase of the flipped color.
inline QSpace solve_q_zero_minus(const Staircase& s, double rel_tol = kDefaultKernelThreshold) {
  const CablingData& cab = s.cabling();
  const SpinColor stair_color{cab.extra(), cab.level_shading(Shading::minus)};
  return solve_q_space(unit(s.context(), stair_color), cab.ambient(0, Shading::minus), cab.extra(), rel_tol);
}

inline QLevelResult q_level(const Staircase& s, int m, double rel_tol = kDefaultKernelThreshold, int threads = 1) {
  const CablingData& cab = s.cabling();
  QLevelResult r;
  r.m = m;
  r.plus = solve_q_space(s.at(m), cab.ambient(m), cab.extra(), rel_tol, threads);
  r.dimension = r.plus.dimension();
  r.residual = r.plus.residual;
  r.gap = r.plus.gap;
  if (m == 0) {
    r.minus = solve_q_zero_minus(s, rel_tol);
  } else {
    r.minus.color = cab.ambient(m, Shading::minus);
    for (const auto& b : r.plus.basis) r.minus.basis.push_back(rotate_pow(b, cab.ell));
  }
  return r;
}

inline std::vector<QLevelResult> q_levels(const Staircase& s, int max_level, double rel_tol = kDefaultKernelThreshold,
                                          int threads = 1) {
  std::vector<QLevelResult> out;
  for (int m = 0; m <= max_level; ++m) out.push_back(q_level(s, m, rel_tol, threads));
  return out;
}

// ---------------------------------------------------------------------------
// Partner elements and the equivalent membership conditions

namespace detail {

inline double relative(double defect, double scale_norm) { return scale_norm > 0.0 ? defect / scale_norm : defect; }

} // namespace detail

/// y with IL^e'(y) = sigma~(x). Throws if x is not in Q_(m,+).
inline SpinElement extract_partner_y(const Staircase& s, int m, const SpinElement& x, double tol = kDefaultTolerance) {
  const int e = s.cabling().extra();
  const SpinElement z = sigma_tilde(s.at(m), x, e);
  const double r = detail::relative(norm(z - projection_F(z, e)), norm(x));
  if (r > tol) throw ValidationError("element is not in Q at level " + std::to_string(m) + ": residual " + std::to_string(r));
  return scale(cond_left_pow(z, e), std::pow(s.context().delta(), -e));
}

/// Inverse of extract_partner_y: x = sigma~*(IL^e'(y)).
inline SpinElement reconstruct_from_partner(const Staircase& s, int m, const SpinElement& y) {
  const int e = s.cabling().extra();
  return sigma_tilde_adjoint(s.at(m), incl_left_pow(y, e), e);
}

struct MembershipProbe {
  bool accepted = false;
  double residual = 0.0;
};

/// Condition (1): sigma~(x) = IL^e'(y) has a solution y (least squares).
inline MembershipProbe condition_partner_exists(const Staircase& s, int m, const SpinElement& x, double tol = kDefaultTolerance) {
  const CablingData& cab = s.cabling();
  const int e = cab.extra();
  const SpinContext& ctx = s.context();
  const SpinColor pc = cab.partner_color(m);
  const SpinColor big = cab.staircase_color(m);
  const std::uint64_t cols = basis_dimension(ctx, pc);
  ComplexMatrix a(basis_dimension(ctx, big), cols);
  for (std::uint64_t c = 0; c < cols; ++c) {
    SpinElement b(ctx, pc);
    b.add_term(basis_from_ordinal(ctx, pc, c), 1.0);
    const SpinElement lifted = incl_left_pow(b, e);
    for (const auto& [idx, v] : lifted.terms()) a(basis_ordinal(ctx, idx), c) = v;
  }
  const auto rhs = to_vector(sigma_tilde(s.at(m), x, e));
  const auto ls = least_squares(a, rhs);
  MembershipProbe p;
  p.residual = detail::relative(ls.residual, vector_norm(rhs));
  p.accepted = p.residual <= tol;
  return p;
}

/// Condition (3): sigma~* F sigma~ (x) = x.
inline MembershipProbe condition_double_circle(const Staircase& s, int m, const SpinElement& x, double tol = kDefaultTolerance) {
  const int e = s.cabling().extra();
  const SpinElement& st = s.at(m);
  const SpinElement back = sigma_tilde_adjoint(st, projection_F(sigma_tilde(st, x, e), e), e);
  MembershipProbe p;
  p.residual = detail::relative(norm(back - x), norm(x));
  p.accepted = p.residual <= tol;
  return p;
}

// ---------------------------------------------------------------------------
// Closure of the computed levels under the generating tangles

/// Orthogonal projection residual of w onto span(basis); basis orthonormal.
inline double projection_residual(const SpinElement& w, const std::vector<SpinElement>& basis) {
  SpinElement r = w;
  for (const auto& b : basis) r = linear_combination(r, b, -inner_product(w, b));
  return norm(r);
}

struct ClosureReport {
  double multiplication = 0.0;  ///< Q_m . Q_m in Q_m
  double inclusion = 0.0;       ///< I^l(Q_m) in Q_(m+1)
  double expectation = 0.0;     ///< E^l(Q_(m+1)) in Q_m
  double rotation = 0.0;        ///< R^(2l)(Q_m) in Q_m
  double star = 0.0;            ///< Q_m* in Q_m
  double unit = 0.0;            ///< 1 in Q_m
  double modulus = 0.0;         ///< E^l(1_(m+1)) = delta^l 1_m

  double max() const { return std::max({multiplication, inclusion, expectation, rotation, star, unit, modulus}); }
  bool ok(double tol) const { return max() <= tol; }
};

inline ClosureReport verify_planar_closure(const Staircase& s, const std::vector<QLevelResult>& levels) {
  if (levels.size() < 2) throw ValidationError("closure check needs at least two consecutive levels");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (levels[i].m != levels[i - 1].m + 1) throw ValidationError("closure check needs consecutive levels");
  const CablingData& cab = s.cabling();
  const SpinContext& ctx = s.context();
  ClosureReport rep;
  auto bump = [](double& slot, double v) { slot = std::max(slot, v); };
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& q = levels[i].plus.basis;
    const int m = levels[i].m;
    const SpinColor c = cab.ambient(m);
    bump(rep.unit, projection_residual(unit(ctx, c), q));
    for (const auto& a : q) {
      bump(rep.star, projection_residual(star(a), q));
      for (const auto& b : q) bump(rep.multiplication, projection_residual(mult(a, b), q));
      if (c.width > 0) bump(rep.rotation, projection_residual(rotate_pow(a, 2 * cab.ell), q));
    }
    if (i + 1 < levels.size()) {
      const auto& next = levels[i + 1].plus.basis;
      for (const auto& a : q) bump(rep.inclusion, projection_residual(incl_right_pow(a, cab.ell), next));
      for (const auto& b : next) bump(rep.expectation, projection_residual(cond_right_pow(b, cab.ell), q));
      const SpinElement capped = cond_right_pow(unit(ctx, cab.ambient(m + 1)), cab.ell);
      bump(rep.modulus, norm(capped - scale(unit(ctx, c), cab.modulus(ctx))));
    }
  }
  return rep;
}

} // namespace spinpa
