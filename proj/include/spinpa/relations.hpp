#pragma once

// Randomised identity checks for the spin planar algebra operations. Shared
// by the CLI selftest and the acceptance suite.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spinpa/spin_core.hpp"
#include "spinpa/tangle_ops.hpp"

namespace spinpa {

/// Dense element with independent real and imaginary parts uniform in [-1,1].
inline SpinElement random_element(const SpinContext& ctx, const SpinColor& color, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const std::uint64_t dim = basis_dimension(ctx, color);
  SpinElement x(ctx, color);
  for (std::uint64_t i = 0; i < dim; ++i) {
    const double re = d(rng);
    const double im = d(rng);
    x.add_term(basis_from_ordinal(ctx, color, i), {re, im});
  }
  return x;
}

struct RelationResult {
  std::string name;
  double residual = 0.0;
  std::size_t checks = 0;
};

struct RelationSuiteConfig {
  int spins = 2;
  int max_width = 5;
  int samples = 100;  ///< random draws per color
  std::uint64_t seed = 0;
};

struct RelationSuiteReport {
  std::vector<RelationResult> results;
  std::size_t samples = 0;

  double max_residual() const {
    double r = 0.0;
    for (const auto& x : results) r = std::max(r, x.residual);
    return r;
  }
  bool passed(double tol) const { return max_residual() <= tol; }
};

namespace detail {

inline double complex_gap(Complex a, Complex b) { return std::abs(a - b); }

} // namespace detail

/// Associativity, units, star, trace symmetry, spherical trace, cap after
/// inclusion, adjunctions, rotation periodicity and star/rotation
/// compatibility, over every color of width <= max_width.
inline RelationSuiteReport run_relation_suite(const RelationSuiteConfig& cfg) {
  const SpinContext ctx(cfg.spins);
  const double d = ctx.delta();
  std::mt19937_64 rng(cfg.seed);
  std::vector<RelationResult> res = {
      {"(xy)z = x(yz)", 0, 0},
      {"1x = x1 = x", 0, 0},
      {"(xy)* = y*x*", 0, 0},
      {"x** = x", 0, 0},
      {"tau(xy) = tau(yx)", 0, 0},
      {"tau(x*) = conj tau(x)", 0, 0},
      {"tau(x*x) >= 0", 0, 0},
      {"left trace = right trace", 0, 0},
      {"E(I(x)) = delta x", 0, 0},
      {"EL(IL(x)) = delta x", 0, 0},
      {"tau(a E(w)) = delta tau(I(a) w)", 0, 0},
      {"tau(a EL(w)) = delta tau(IL(a) w)", 0, 0},
      {"Tr(a E(w)) = Tr(I(a) w)", 0, 0},
      {"I(xy) = I(x) I(y)", 0, 0},
      {"R^(2k)(x) = x", 0, 0},
      {"R^-1(R(x)) = x", 0, 0},
      {"R(x)* = R^-1(x*)", 0, 0},
      {"<x,y> = tau(y*x)", 0, 0},
  };
  enum {
    kAssoc, kUnit, kStarMult, kStarInv, kTraceSym, kTraceStar, kPositive, kSpherical, kCondIncl, kCondInclLeft,
    kAdjRight, kAdjLeft, kAdjPicture, kInclMult, kFullTurn, kInverse, kStarRot, kInner
  };
  auto bump = [&](int which, double v) {
    auto& r = res[static_cast<std::size_t>(which)];
    r.residual = std::max(r.residual, v);
    ++r.checks;
  };

  RelationSuiteReport rep;
  for (int k = 0; k <= cfg.max_width; ++k) {
    for (Shading s : {Shading::plus, Shading::minus}) {
      const SpinColor c{k, s};
      const SpinElement one = unit(ctx, c);
      for (int t = 0; t < cfg.samples; ++t) {
        const SpinElement x = random_element(ctx, c, rng);
        const SpinElement y = random_element(ctx, c, rng);
        const SpinElement z = random_element(ctx, c, rng);
        ++rep.samples;
        const SpinElement xy = mult(x, y);
        bump(kAssoc, max_abs_diff(mult(xy, z), mult(x, mult(y, z))));
        bump(kUnit, std::max(max_abs_diff(mult(one, x), x), max_abs_diff(mult(x, one), x)));
        bump(kStarMult, max_abs_diff(star(xy), mult(star(y), star(x))));
        bump(kStarInv, max_abs_diff(star(star(x)), x));
        bump(kTraceSym, detail::complex_gap(normalized_trace(xy), normalized_trace(mult(y, x))));
        bump(kTraceStar, detail::complex_gap(normalized_trace(star(x)), std::conj(normalized_trace(x))));
        const Complex pos = normalized_trace(mult(star(x), x));
        bump(kPositive, std::max(std::abs(pos.imag()), std::max(0.0, -pos.real())));
        bump(kInner, detail::complex_gap(inner_product(x, y), normalized_trace(mult(star(y), x))));
        if (k >= 1) {
          bump(kSpherical, detail::complex_gap(picture_trace_left(x), picture_trace_right(x)));
          bump(kFullTurn, max_abs_diff(rotate_pow(x, 2 * k), x));
          bump(kInverse, std::max(max_abs_diff(rotate_inverse(rotate(x)), x), max_abs_diff(rotate(rotate_inverse(x)), x)));
          bump(kStarRot, max_abs_diff(star(rotate(x)), rotate_inverse(star(x))));
        }
        if (k < cfg.max_width) {
          bump(kCondIncl, max_abs_diff(cond_right(incl_right(x)), scale(x, d)));
          bump(kCondInclLeft, max_abs_diff(cond_left(incl_left(x)), scale(x, d)));
          bump(kInclMult, std::max(max_abs_diff(incl_right(xy), mult(incl_right(x), incl_right(y))),
                                   max_abs_diff(incl_left(xy), mult(incl_left(x), incl_left(y)))));
          const SpinElement w = random_element(ctx, {k + 1, s}, rng);
          bump(kAdjRight, detail::complex_gap(normalized_trace(mult(x, cond_right(w))), d * normalized_trace(mult(incl_right(x), w))));
          bump(kAdjPicture, detail::complex_gap(picture_trace(mult(x, cond_right(w))), picture_trace(mult(incl_right(x), w))));
          const SpinElement wl = random_element(ctx, {k + 1, flip(s)}, rng);
          bump(kAdjLeft, detail::complex_gap(normalized_trace(mult(x, cond_left(wl))), d * normalized_trace(mult(incl_left(x), wl))));
        }
      }
    }
  }
  rep.results = std::move(res);
  return rep;
}

} // namespace spinpa
