#pragma once

// Generating tangle actions on the spin planar algebra: multiplication,
// one-click rotation, left/right inclusion, left/right conditional
// expectation (caps) and the partial swap tangle A on P_(4,+).
//
// Rotation is implemented on the cyclic sequence of boundary spins
//   [p] i_1 .. i_m [q] j_m .. j_1
// read clockwise from the *-arc. One click moves the *-arc across one
// boundary point: from a white region the sequence starts one spin earlier,
// from a black region it keeps its start. The coefficient is
// N^((m_source - m_target)/2), which is the rescaling between the
// normalised bases of the two colors.

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "spinpa/spin_core.hpp"

namespace spinpa {

inline SpinElement mult(const SpinElement& x, const SpinElement& y) {
  require_same_space(x, y, "mult");
  using RowKey = std::tuple<std::optional<Spin>, const std::vector<Spin>*, std::optional<Spin>>;
  struct RowLess {
    bool operator()(const RowKey& a, const RowKey& b) const {
      return std::tie(std::get<0>(a), *std::get<1>(a), std::get<2>(a)) <
             std::tie(std::get<0>(b), *std::get<1>(b), std::get<2>(b));
    }
  };
  std::map<RowKey, std::vector<std::pair<const std::vector<Spin>*, Complex>>, RowLess> rows;
  for (const auto& [idx, v] : y.terms()) rows[{idx.left, &idx.top, idx.right}].emplace_back(&idx.bottom, v);

  SpinElement out(x.context(), x.color());
  for (const auto& [idx, v] : x.terms()) {
    auto it = rows.find({idx.left, &idx.bottom, idx.right});
    if (it == rows.end()) continue;
    for (const auto& [bottom, w] : it->second) {
      SpinBasisIndex r{idx.left, idx.top, *bottom, idx.right};
      out.add_term(r, v * w);
    }
  }
  out.prune();
  return out;
}

namespace detail {

inline std::vector<Spin> boundary_sequence(const SpinBasisIndex& idx) {
  std::vector<Spin> seq;
  if (idx.left) seq.push_back(*idx.left);
  seq.insert(seq.end(), idx.top.begin(), idx.top.end());
  if (idx.right) seq.push_back(*idx.right);
  seq.insert(seq.end(), idx.bottom.rbegin(), idx.bottom.rend());
  return seq;
}

inline SpinBasisIndex from_boundary_sequence(const std::vector<Spin>& seq, const SpinColor& color) {
  SpinBasisIndex idx;
  std::size_t pos = 0;
  if (color.has_left()) idx.left = seq[pos++];
  const auto m = static_cast<std::size_t>(color.pairs());
  idx.top.assign(seq.begin() + static_cast<std::ptrdiff_t>(pos), seq.begin() + static_cast<std::ptrdiff_t>(pos + m));
  pos += m;
  if (color.has_right()) idx.right = seq[pos++];
  idx.bottom.assign(seq.rbegin(), seq.rbegin() + static_cast<std::ptrdiff_t>(m));
  return idx;
}

inline void require_width(const SpinElement& x, int min_width, const char* op) {
  if (x.color().width < min_width)
    throw ValidationError(std::string(op) + " needs width >= " + std::to_string(min_width) + ", got " + x.color().str());
}

// forward == true: one click. forward == false: the inverse click.
inline SpinElement click(const SpinElement& x, bool forward) {
  const SpinColor src = x.color();
  const SpinColor dst{src.width, flip(src.shading)};
  // The shading that decides whether the sequence start moves is that of the
  // element before the forward click.
  const Shading before = forward ? src.shading : dst.shading;
  const double w = std::pow(x.context().delta(), src.pairs() - dst.pairs());
  SpinElement out(x.context(), dst);
  for (const auto& [idx, v] : x.terms()) {
    auto seq = boundary_sequence(idx);
    if (before == Shading::plus) {
      if (forward)
        std::rotate(seq.rbegin(), seq.rbegin() + 1, seq.rend());
      else
        std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    }
    out.add_term(from_boundary_sequence(seq, dst), w * v);
  }
  return out;
}

} // namespace detail

/// One click of the rotation tangle R(k,e): P_(k,e) -> P_(k,-e).
inline SpinElement rotate(const SpinElement& x) {
  detail::require_width(x, 1, "rotate");
  return detail::click(x, true);
}

/// Inverse of rotate: P_(k,e) -> P_(k,-e).
inline SpinElement rotate_inverse(const SpinElement& x) {
  detail::require_width(x, 1, "rotate_inverse");
  return detail::click(x, false);
}

/// R(k,e,l); negative l applies the inverse rotation |l| times.
inline SpinElement rotate_pow(const SpinElement& x, int clicks) {
  detail::require_width(x, 1, "rotate_pow");
  SpinElement out = x;
  for (int i = 0; i < std::abs(clicks); ++i) out = detail::click(out, clicks > 0);
  return out;
}

/// Inclusion I: P_(k,e) -> P_(k+1,e), a through strand added on the right.
inline SpinElement incl_right(const SpinElement& x) {
  const SpinColor src = x.color();
  const SpinColor dst{src.width + 1, src.shading};
  const int n = x.context().spins();
  SpinElement out(x.context(), dst);
  for (const auto& [idx, v] : x.terms()) {
    if (src.width == 0 && src.shading == Shading::minus) {
      out.add_term(SpinBasisIndex{idx.left, {}, {}, std::nullopt}, v);
    } else if (idx.right) {
      SpinBasisIndex r{idx.left, idx.top, idx.bottom, std::nullopt};
      r.top.push_back(*idx.right);
      r.bottom.push_back(*idx.right);
      out.add_term(r, v);
    } else {
      for (Spin q = 0; q < n; ++q) out.add_term(SpinBasisIndex{idx.left, idx.top, idx.bottom, q}, v);
    }
  }
  return out;
}

/// Left inclusion: P_(k,e) -> P_(k+1,-e), a through strand added on the left.
inline SpinElement incl_left(const SpinElement& x) {
  const SpinColor src = x.color();
  const SpinColor dst{src.width + 1, flip(src.shading)};
  const int n = x.context().spins();
  SpinElement out(x.context(), dst);
  for (const auto& [idx, v] : x.terms()) {
    if (src.width == 0 && src.shading == Shading::minus) {
      // S(p) -> e(p]: the black region becomes the right boundary region.
      out.add_term(SpinBasisIndex{std::nullopt, {}, {}, idx.left}, v);
    } else if (idx.left) {
      SpinBasisIndex r{std::nullopt, idx.top, idx.bottom, idx.right};
      r.top.insert(r.top.begin(), *idx.left);
      r.bottom.insert(r.bottom.begin(), *idx.left);
      out.add_term(r, v);
    } else {
      for (Spin p = 0; p < n; ++p) out.add_term(SpinBasisIndex{p, idx.top, idx.bottom, idx.right}, v);
    }
  }
  return out;
}

/// Conditional expectation tangle E (cap on the right): P_(k,e) -> P_(k-1,e).
inline SpinElement cond_right(const SpinElement& x) {
  detail::require_width(x, 1, "cond_right");
  const SpinColor src = x.color();
  const SpinColor dst{src.width - 1, src.shading};
  const double d = x.context().delta();
  SpinElement out(x.context(), dst);
  for (const auto& [idx, v] : x.terms()) {
    if (idx.right) {
      out.add_term(SpinBasisIndex{idx.left, idx.top, idx.bottom, std::nullopt}, v / d);
    } else if (src.width == 1) {
      // (1,-): e[p) -> sqrt(N) S(p)
      out.add_term(SpinBasisIndex{idx.left, {}, {}, std::nullopt}, v * d);
    } else {
      if (idx.top.back() != idx.bottom.back()) continue;
      SpinBasisIndex r{idx.left, idx.top, idx.bottom, idx.top.back()};
      r.top.pop_back();
      r.bottom.pop_back();
      out.add_term(r, v * d);
    }
  }
  return out;
}

/// Cap on the left: P_(k,e) -> P_(k-1,-e).
inline SpinElement cond_left(const SpinElement& x) {
  detail::require_width(x, 1, "cond_left");
  const SpinColor src = x.color();
  const SpinColor dst{src.width - 1, flip(src.shading)};
  const double d = x.context().delta();
  SpinElement out(x.context(), dst);
  for (const auto& [idx, v] : x.terms()) {
    if (idx.left) {
      out.add_term(SpinBasisIndex{std::nullopt, idx.top, idx.bottom, idx.right}, v / d);
    } else if (src.width == 1) {
      // (1,+): e(q] -> sqrt(N) S(q)
      out.add_term(SpinBasisIndex{idx.right, {}, {}, std::nullopt}, v * d);
    } else {
      if (idx.top.front() != idx.bottom.front()) continue;
      SpinBasisIndex r{idx.top.front(), idx.top, idx.bottom, idx.right};
      r.top.erase(r.top.begin());
      r.bottom.erase(r.bottom.begin());
      out.add_term(r, v * d);
    }
  }
  return out;
}

/// The modified annular tangle A on P_(4,+): e^{ij}_{kl} -> e^{il}_{kj}.
inline SpinElement partial_swap_A(const SpinElement& x) {
  if (!(x.color() == SpinColor{4, Shading::plus}))
    throw ColorMismatch("partial_swap_A acts on P(4,+), got " + x.color().str());
  SpinElement out(x.context(), x.color());
  for (const auto& [idx, v] : x.terms()) {
    SpinBasisIndex r = idx;
    std::swap(r.top[1], r.bottom[1]);
    out.add_term(r, v);
  }
  return out;
}

template <class Op>
SpinElement apply_n(const SpinElement& x, int times, Op op) {
  SpinElement out = x;
  for (int i = 0; i < times; ++i) out = op(out);
  return out;
}

inline SpinElement incl_right_pow(const SpinElement& x, int t) { return apply_n(x, t, incl_right); }
inline SpinElement incl_left_pow(const SpinElement& x, int t) { return apply_n(x, t, incl_left); }
inline SpinElement cond_right_pow(const SpinElement& x, int t) { return apply_n(x, t, cond_right); }
inline SpinElement cond_left_pow(const SpinElement& x, int t) { return apply_n(x, t, cond_left); }

/// Closes all strands by capping on the right, then applies tau.
inline Complex picture_trace_right(const SpinElement& x) {
  return normalized_trace(cond_right_pow(x, x.color().width));
}

/// Closes all strands by capping on the left, then applies tau.
inline Complex picture_trace_left(const SpinElement& x) {
  return normalized_trace(cond_left_pow(x, x.color().width));
}

inline Complex picture_trace(const SpinElement& x) { return picture_trace_right(x); }

/// Picture-trace inner product: picture_trace(y* x) = delta^k <x, y>.
inline Complex picture_inner_product(const SpinElement& x, const SpinElement& y) {
  return picture_trace(mult(star(y), x));
}

} // namespace spinpa
