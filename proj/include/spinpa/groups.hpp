#pragma once

// Finite groups given by multiplication tables, and the predictions for the
// planar algebra built from the group's Latin square.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spinpa/error.hpp"
#include "spinpa/qit_bridge.hpp"
#include "spinpa/spin_core.hpp"
#include "spinpa/tangle_ops.hpp"

namespace spinpa {

/// table[a][b] = a.b, elements 0..n-1.
class GroupTable {
public:
  /// Validates closure, associativity, identity and inverses.
  explicit GroupTable(std::vector<std::vector<int>> table, std::string name = "") : t_(std::move(table)), name_(std::move(name)) {
    const int n = static_cast<int>(t_.size());
    if (n < 1) throw ValidationError("group table is empty");
    for (const auto& row : t_) {
      if (static_cast<int>(row.size()) != n) throw ValidationError("group table is not square");
      for (int v : row)
        if (v < 0 || v >= n) throw ValidationError("group axiom violated: closure (entry " + std::to_string(v + 1) + " out of range)");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (op(op(a, b), c) != op(a, op(b, c)))
            throw ValidationError("group axiom violated: associativity at (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                                  std::to_string(c + 1) + ")");
    e_ = -1;
    for (int a = 0; a < n && e_ < 0; ++a) {
      bool ok = true;
      for (int b = 0; b < n; ++b) ok = ok && op(a, b) == b && op(b, a) == b;
      if (ok) e_ = a;
    }
    if (e_ < 0) throw ValidationError("group axiom violated: identity");
    inv_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (op(a, b) == e_ && op(b, a) == e_) inv_[static_cast<std::size_t>(a)] = b;
      if (inv_[static_cast<std::size_t>(a)] < 0) throw ValidationError("group axiom violated: inverse of " + std::to_string(a + 1));
    }
  }

  int order() const { return static_cast<int>(t_.size()); }
  int op(int a, int b) const { return t_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int identity() const { return e_; }
  int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& table() const { return t_; }

private:
  std::vector<std::vector<int>> t_;
  std::string name_;
  int e_ = 0;
  std::vector<int> inv_;
};

inline GroupTable cyclic_group(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be >= 1");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return GroupTable(std::move(t), "Z" + std::to_string(n));
}

/// S3 as permutations of {0,1,2}, listed in lexicographic order.
inline GroupTable symmetric_group_3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const auto find = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);  // (a.b)(x) = a(b(x))
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      t[a][b] = find(c);
    }
  return GroupTable(std::move(t), "S3");
}

/// Z2..Z6 and S3.
inline GroupTable builtin_group(const std::string& name) {
  if (name == "S3") return symmetric_group_3();
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '2' && name[1] <= '6') return cyclic_group(name[1] - '0');
  throw ValidationError("unknown builtin group '" + name + "' (expected Z2..Z6 or S3)");
}

inline LatinSquare multiplication_table(const GroupTable& g) { return {g.order(), g.table()}; }

/// u = sum_{k,h} e^{kh}_k(h]; equals from_qls(latin_to_qls(table)).
inline SpinElement group_biunitary(const GroupTable& g) {
  const SpinContext ctx(g.order());
  SpinElement u(ctx, {3, Shading::plus});
  for (int k = 0; k < g.order(); ++k)
    for (int h = 0; h < g.order(); ++h) u.add_term({std::nullopt, {g.op(k, h)}, {k}, h}, 1.0);
  return u;
}

/// X_g = sum_q e^q_{qg} in P_(2,+).
inline SpinElement group_element_X(const GroupTable& g, int a) {
  SpinElement x(SpinContext(g.order()), {2, Shading::plus});
  for (int q = 0; q < g.order(); ++q) x.add_term({std::nullopt, {q}, {g.op(q, a)}, std::nullopt}, 1.0);
  return x;
}

/// 1, 1, n, n^2, ...: n^(L-1) at level L >= 1.
inline std::vector<std::uint64_t> predicted_dimensions(int order, int max_level) {
  std::vector<std::uint64_t> out;
  std::uint64_t p = 1;
  for (int m = 0; m <= max_level; ++m) {
    out.push_back(p);
    if (m >= 1) p *= static_cast<std::uint64_t>(order);
  }
  return out;
}

/// Orbit sums sum_g e^{gK}_{gL} over representatives (K,L) of the diagonal
/// left action of G on G^(2j), as elements of P_(2j,+).
inline std::vector<SpinElement> orbit_sum_basis(const GroupTable& g, int j) {
  const SpinContext ctx(g.order());
  const SpinColor c{2 * j, Shading::plus};
  const auto n = static_cast<std::uint64_t>(g.order());
  std::uint64_t total = 1;
  for (int i = 0; i < 2 * j; ++i) total *= n;
  std::set<std::vector<int>> seen;
  std::vector<SpinElement> out;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::vector<int> word(static_cast<std::size_t>(2 * j));
    std::uint64_t r = t;
    for (int i = 2 * j - 1; i >= 0; --i) {
      word[static_cast<std::size_t>(i)] = static_cast<int>(r % n);
      r /= n;
    }
    if (seen.contains(word)) continue;
    SpinElement e(ctx, c);
    for (int a = 0; a < g.order(); ++a) {
      std::vector<int> moved(word.size());
      for (std::size_t i = 0; i < word.size(); ++i) moved[i] = g.op(a, word[i]);
      seen.insert(moved);
      SpinBasisIndex idx;
      idx.top.assign(moved.begin(), moved.begin() + j);
      idx.bottom.assign(moved.begin() + j, moved.end());
      e.add_term(idx, 1.0);
    }
    out.push_back(std::move(e));
  }
  return out;
}

struct GroupPrediction {
  std::vector<std::uint64_t> dimensions;
  std::map<int, std::vector<SpinElement>> orbit_sums;  ///< keyed by even level 2j
  std::vector<SpinElement> X;                          ///< X_g for each g
  double multiplicativity_defect = 0.0;                ///< max |X_g X_h - X_gh|
};

inline GroupPrediction group_oracle(const GroupTable& g, int max_level) {
  GroupPrediction p;
  p.dimensions = predicted_dimensions(g.order(), max_level);
  for (int lvl = 2; lvl <= max_level; lvl += 2) p.orbit_sums[lvl] = orbit_sum_basis(g, lvl / 2);
  for (int a = 0; a < g.order(); ++a) p.X.push_back(group_element_X(g, a));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      p.multiplicativity_defect = std::max(
          p.multiplicativity_defect, max_abs_diff(mult(p.X[static_cast<std::size_t>(a)], p.X[static_cast<std::size_t>(b)]),
                                                  p.X[static_cast<std::size_t>(g.op(a, b))]));
  return p;
}

} // namespace spinpa
