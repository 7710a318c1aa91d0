#pragma once

// Value types of the spin planar algebra on N spins.
//
// A basis vector of P_(k,e) is written e[p)^{i_1..i_m}_{j_1..j_m}(q]: an
// optional left spin p, top and bottom tuples of equal length m, and an
// optional right spin q. Which slots exist is a pure function of the color
// (k,e). The (0,-) basis S(s) keeps its spin in the left slot, and the
// (0,+) space is spanned by the empty index (the scalar 1).
//
// All basis vectors are the normalised ones, i.e. (sqrt N)^m times the
// pictorial basis. Spins are 0-based here; text and JSON output is 1-based.

#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spinpa/error.hpp"
#include "spinpa/numerics.hpp"

namespace spinpa {

using Spin = int;

enum class Shading { plus, minus };

constexpr Shading flip(Shading s) { return s == Shading::plus ? Shading::minus : Shading::plus; }

/// Shading after `times` flips.
constexpr Shading flip_n(Shading s, int times) { return (times % 2 == 0) ? s : flip(s); }

inline char shading_char(Shading s) { return s == Shading::plus ? '+' : '-'; }

struct SpinColor {
  int width = 0;
  Shading shading = Shading::plus;

  bool has_left() const { return shading == Shading::minus; }
  bool has_right() const {
    return width >= 1 && (width + (shading == Shading::minus ? 1 : 0)) % 2 == 1;
  }
  int slot_count() const { return (has_left() ? 1 : 0) + (has_right() ? 1 : 0); }
  int pairs() const { return width == 0 ? 0 : (width - slot_count()) / 2; }
  /// Number of spin digits in a basis index (= width, except 1 for (0,-)).
  int digits() const { return slot_count() + 2 * pairs(); }

  friend bool operator==(const SpinColor&, const SpinColor&) = default;

  std::string str() const {
    return "(" + std::to_string(width) + "," + std::string(1, shading_char(shading)) + ")";
  }
};

/// Holds N and the derived modulus delta = sqrt(N).
class SpinContext {
public:
  explicit SpinContext(int spins, double prune_threshold = 0.0, double tolerance = 1e-10)
      : n_(spins), delta_(std::sqrt(static_cast<double>(spins))), prune_(prune_threshold), tol_(tolerance) {
    if (spins < 1) throw ValidationError("number of spins must be >= 1, got " + std::to_string(spins));
    if (prune_threshold < 0.0) throw ValidationError("prune threshold must be >= 0");
    if (!(tolerance > 0.0)) throw ValidationError("comparison tolerance must be > 0");
  }

  int spins() const { return n_; }
  double delta() const { return delta_; }
  double prune_threshold() const { return prune_; }
  double tolerance() const { return tol_; }

  friend bool operator==(const SpinContext& a, const SpinContext& b) { return a.n_ == b.n_; }

private:
  int n_;
  double delta_;
  double prune_;
  double tol_;
};

struct SpinBasisIndex {
  std::optional<Spin> left;
  std::vector<Spin> top;
  std::vector<Spin> bottom;
  std::optional<Spin> right;

  auto operator<=>(const SpinBasisIndex&) const = default;
  bool operator==(const SpinBasisIndex&) const = default;
};

/// Human-readable 1-based form, e.g. e[2)^{1}_{3}(1] or S(2) or 1.
inline std::string to_string(const SpinBasisIndex& idx, const SpinColor& color) {
  std::ostringstream os;
  if (color.width == 0) {
    if (color.shading == Shading::plus) return "1";
    os << "S(" << (idx.left ? *idx.left + 1 : 0) << ")";
    return os.str();
  }
  auto tuple = [&](const std::vector<Spin>& t) {
    os << "{";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i] + 1;
    os << "}";
  };
  os << "e";
  if (idx.left) os << "[" << *idx.left + 1 << ")";
  if (!idx.top.empty()) {
    os << "^";
    tuple(idx.top);
    os << "_";
    tuple(idx.bottom);
  }
  if (idx.right) os << "(" << *idx.right + 1 << "]";
  return os.str();
}

inline void validate_index(const SpinContext& ctx, const SpinColor& color, const SpinBasisIndex& idx) {
  if (color.width < 0) throw ValidationError("negative width");
  auto fail = [&](const std::string& why) {
    throw ValidationError("malformed basis index for color " + color.str() + ": " + why);
  };
  const bool want_left = color.has_left();
  const bool want_right = color.has_right();
  if (idx.left.has_value() != want_left) fail(want_left ? "missing left spin" : "unexpected left spin");
  if (idx.right.has_value() != want_right) fail(want_right ? "missing right spin" : "unexpected right spin");
  const auto m = static_cast<std::size_t>(color.pairs());
  if (idx.top.size() != m) fail("top tuple has length " + std::to_string(idx.top.size()) + ", expected " + std::to_string(m));
  if (idx.bottom.size() != m)
    fail("bottom tuple has length " + std::to_string(idx.bottom.size()) + ", expected " + std::to_string(m));
  auto check_spin = [&](Spin s) {
    if (s < 0 || s >= ctx.spins()) fail("spin " + std::to_string(s + 1) + " outside 1.." + std::to_string(ctx.spins()));
  };
  if (idx.left) check_spin(*idx.left);
  if (idx.right) check_spin(*idx.right);
  for (Spin s : idx.top) check_spin(s);
  for (Spin s : idx.bottom) check_spin(s);
}

/// N^k for k >= 1, N for (0,-), 1 for (0,+).
inline std::uint64_t basis_dimension(const SpinContext& ctx, const SpinColor& color) {
  std::uint64_t d = 1;
  const auto n = static_cast<std::uint64_t>(ctx.spins());
  for (int i = 0; i < color.digits(); ++i) {
    if (d > (std::uint64_t{1} << 62) / n) throw ResourceError("dimension of P" + color.str() + " overflows");
    d *= n;
  }
  return d;
}

/// Position of a basis index in the canonical (lexicographic) enumeration.
/// Digit order: left, top..., bottom..., right.
inline std::uint64_t basis_ordinal(const SpinContext& ctx, const SpinBasisIndex& idx) {
  const auto n = static_cast<std::uint64_t>(ctx.spins());
  std::uint64_t r = 0;
  auto push = [&](Spin s) { r = r * n + static_cast<std::uint64_t>(s); };
  if (idx.left) push(*idx.left);
  for (Spin s : idx.top) push(s);
  for (Spin s : idx.bottom) push(s);
  if (idx.right) push(*idx.right);
  return r;
}

inline SpinBasisIndex basis_from_ordinal(const SpinContext& ctx, const SpinColor& color, std::uint64_t ord) {
  const auto n = static_cast<std::uint64_t>(ctx.spins());
  const int d = color.digits();
  std::vector<Spin> digits(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<Spin>(ord % n);
    ord /= n;
  }
  SpinBasisIndex idx;
  std::size_t pos = 0;
  if (color.has_left()) idx.left = digits[pos++];
  const auto m = static_cast<std::size_t>(color.pairs());
  idx.top.assign(digits.begin() + static_cast<std::ptrdiff_t>(pos), digits.begin() + static_cast<std::ptrdiff_t>(pos + m));
  pos += m;
  idx.bottom.assign(digits.begin() + static_cast<std::ptrdiff_t>(pos), digits.begin() + static_cast<std::ptrdiff_t>(pos + m));
  pos += m;
  if (color.has_right()) idx.right = digits[pos++];
  return idx;
}

inline std::vector<SpinBasisIndex> enumerate_basis(const SpinContext& ctx, const SpinColor& color) {
  const std::uint64_t dim = basis_dimension(ctx, color);
  std::vector<SpinBasisIndex> out;
  out.reserve(dim);
  for (std::uint64_t i = 0; i < dim; ++i) out.push_back(basis_from_ordinal(ctx, color, i));
  return out;
}

/// Sparse complex combination of basis vectors of one color.
class SpinElement {
public:
  using Terms = std::map<SpinBasisIndex, Complex>;

  SpinElement(SpinContext ctx, SpinColor color) : ctx_(ctx), color_(color) {}

  const SpinContext& context() const { return ctx_; }
  const SpinColor& color() const { return color_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Complex coeff(const SpinBasisIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Complex{} : it->second;
  }

  /// Accumulates c into the coefficient of idx. The index is trusted;
  /// use make_basis for validated construction.
  void add_term(const SpinBasisIndex& idx, Complex c) {
    if (c == Complex{}) return;
    auto [it, fresh] = terms_.try_emplace(idx, c);
    if (!fresh) {
      it->second += c;
      if (std::abs(it->second) <= ctx_.prune_threshold()) terms_.erase(it);
    }
  }

  /// Drops entries with |c| <= threshold (the context's prune threshold by default).
  void prune(std::optional<double> threshold = std::nullopt) {
    const double t = threshold.value_or(ctx_.prune_threshold());
    std::erase_if(terms_, [t](const auto& kv) { return std::abs(kv.second) <= t; });
  }

private:
  SpinContext ctx_;
  SpinColor color_;
  Terms terms_;
};

inline void require_same_space(const SpinElement& x, const SpinElement& y, const char* op) {
  if (!(x.context() == y.context()))
    throw ColorMismatch(std::string(op) + ": elements over different spin counts");
  if (!(x.color() == y.color()))
    throw ColorMismatch(std::string(op) + ": color " + x.color().str() + " vs " + y.color().str());
}

inline SpinElement make_basis(const SpinContext& ctx, const SpinColor& color, const SpinBasisIndex& idx) {
  validate_index(ctx, color, idx);
  SpinElement e(ctx, color);
  e.add_term(idx, 1.0);
  return e;
}

inline SpinElement zero(const SpinContext& ctx, const SpinColor& color) { return SpinElement(ctx, color); }

/// x + c*y
inline SpinElement linear_combination(const SpinElement& x, const SpinElement& y, Complex c) {
  require_same_space(x, y, "linear_combination");
  SpinElement out = x;
  for (const auto& [idx, v] : y.terms()) out.add_term(idx, c * v);
  out.prune();
  return out;
}

inline SpinElement add(const SpinElement& x, const SpinElement& y) { return linear_combination(x, y, 1.0); }

inline SpinElement scale(const SpinElement& x, Complex c) {
  SpinElement out(x.context(), x.color());
  if (c == Complex{}) return out;
  for (const auto& [idx, v] : x.terms()) out.add_term(idx, c * v);
  out.prune();
  return out;
}

inline SpinElement operator+(const SpinElement& x, const SpinElement& y) { return add(x, y); }
inline SpinElement operator-(const SpinElement& x, const SpinElement& y) { return linear_combination(x, y, -1.0); }
inline SpinElement operator*(Complex c, const SpinElement& x) { return scale(x, c); }

/// Conjugate-linear involution: conjugates coefficients and swaps top with bottom.
inline SpinElement star(const SpinElement& x) {
  SpinElement out(x.context(), x.color());
  for (const auto& [idx, v] : x.terms()) {
    SpinBasisIndex j = idx;
    std::swap(j.top, j.bottom);
    out.add_term(j, std::conj(v));
  }
  return out;
}

/// (0,+): 1. (0,-): sum of S(s). Otherwise the sum of all diagonal indices.
inline SpinElement unit(const SpinContext& ctx, const SpinColor& color) {
  SpinElement out(ctx, color);
  const auto n = static_cast<std::uint64_t>(ctx.spins());
  const int m = color.pairs();
  const int slots = color.slot_count();
  std::uint64_t count = 1;
  for (int i = 0; i < m + slots; ++i) count *= n;
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<Spin> d(static_cast<std::size_t>(m + slots));
    std::uint64_t r = c;
    for (int i = m + slots - 1; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = static_cast<Spin>(r % n);
      r /= n;
    }
    SpinBasisIndex idx;
    std::size_t pos = 0;
    if (color.has_left()) idx.left = d[pos++];
    idx.top.assign(d.begin() + static_cast<std::ptrdiff_t>(pos), d.begin() + static_cast<std::ptrdiff_t>(pos) + m);
    idx.bottom = idx.top;
    pos += static_cast<std::size_t>(m);
    if (color.has_right()) idx.right = d[pos];
    out.add_term(idx, 1.0);
  }
  return out;
}

/// tau(basis) = [top == bottom] * N^-(pairs + slots); tau(1) = 1 on every color.
inline double basis_trace_weight(const SpinContext& ctx, const SpinColor& color) {
  return std::pow(static_cast<double>(ctx.spins()), -(color.pairs() + color.slot_count()));
}

inline Complex normalized_trace(const SpinElement& x) {
  Complex s{};
  for (const auto& [idx, v] : x.terms())
    if (idx.top == idx.bottom) s += v;
  return s * basis_trace_weight(x.context(), x.color());
}

/// <x, y> = tau(y* x). The basis is orthogonal with equal norms inside one
/// color, so this is a weighted coefficient dot product.
inline Complex inner_product(const SpinElement& x, const SpinElement& y) {
  require_same_space(x, y, "inner_product");
  Complex s{};
  const auto& small = x.size() <= y.size() ? x.terms() : y.terms();
  for (const auto& [idx, _] : small) s += x.coeff(idx) * std::conj(y.coeff(idx));
  return s * basis_trace_weight(x.context(), x.color());
}

inline double norm(const SpinElement& x) { return std::sqrt(std::max(0.0, inner_product(x, x).real())); }

/// Largest coefficientwise |x - y|.
inline double max_abs_diff(const SpinElement& x, const SpinElement& y) {
  require_same_space(x, y, "max_abs_diff");
  double d = 0.0;
  for (const auto& [idx, v] : x.terms()) d = std::max(d, std::abs(v - y.coeff(idx)));
  for (const auto& [idx, v] : y.terms())
    if (!x.terms().contains(idx)) d = std::max(d, std::abs(v));
  return d;
}

inline bool approx_equal(const SpinElement& x, const SpinElement& y, std::optional<double> tol = std::nullopt) {
  if (!(x.context() == y.context()) || !(x.color() == y.color())) return false;
  return max_abs_diff(x, y) <= tol.value_or(x.context().tolerance());
}

/// Dense coefficient vector in canonical basis order.
inline std::vector<Complex> to_vector(const SpinElement& x) {
  std::vector<Complex> v(basis_dimension(x.context(), x.color()));
  for (const auto& [idx, c] : x.terms()) v[basis_ordinal(x.context(), idx)] = c;
  return v;
}

inline SpinElement from_vector(const SpinContext& ctx, const SpinColor& color, const std::vector<Complex>& v) {
  if (v.size() != basis_dimension(ctx, color)) throw ValidationError("coefficient vector length mismatch for " + color.str());
  SpinElement out(ctx, color);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > ctx.prune_threshold()) out.add_term(basis_from_ordinal(ctx, color, i), v[i]);
  return out;
}

/// C*-norm in P_(k,e): the algebra is a direct sum over slot values of full
/// matrix algebras M_{N^m}, so this is the largest spectral norm over blocks.
inline double operator_norm(const SpinElement& x) {
  const int m = x.color().pairs();
  const auto n = static_cast<std::uint64_t>(x.context().spins());
  std::uint64_t side = 1;
  for (int i = 0; i < m; ++i) side *= n;
  std::map<std::pair<std::optional<Spin>, std::optional<Spin>>, ComplexMatrix> blocks;
  auto tuple_ord = [n](const std::vector<Spin>& t) {
    std::uint64_t r = 0;
    for (Spin s : t) r = r * n + static_cast<std::uint64_t>(s);
    return r;
  };
  for (const auto& [idx, v] : x.terms()) {
    auto [it, fresh] = blocks.try_emplace({idx.left, idx.right}, side, side);
    it->second(tuple_ord(idx.top), tuple_ord(idx.bottom)) += v;
  }
  double best = 0.0;
  for (const auto& [_, b] : blocks) best = std::max(best, spinpa::operator_norm(b));
  return best;
}

inline std::string to_string(const SpinElement& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, v] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)" << to_string(idx, x.color());
  }
  return os.str();
}

} // namespace spinpa
