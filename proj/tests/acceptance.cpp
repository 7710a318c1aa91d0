// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spinpa/groups.hpp"
#include "spinpa/relations.hpp"
#include "spinpa/spinpa.hpp"
#include "support/dense_oracle.hpp"

using namespace spinpa;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
public:
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      if (failures_.size() < 8) failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome outcome() const {
    Outcome o{ok_, notes_};
    for (const auto& f : failures_) o.detail += (o.detail.empty() ? "" : "; ") + std::string("FAILED ") + f;
    return o;
  }

private:
  bool ok_ = true;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(m(i, j)));
  return best;
}

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Complex(g(rng), g(rng));
  const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
  return ComplexMatrix(ComplexMatrix::Storage(q));
}

// ---------------------------------------------------------------------------
// Direct matrix checks used to decide which defects a perturbed object has.

bool unitary(const Eigen::MatrixXcd& m) {
  return (m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).norm() < 1e-9;
}

Eigen::MatrixXcd dense(const ComplexMatrix& m) { return Eigen::MatrixXcd(m.eigen()); }

std::set<std::string> expected_defects(const HadamardMatrix& h) {
  std::set<std::string> out;
  const Eigen::MatrixXcd m = dense(h.entries);
  if ((m * m.adjoint() - h.n * Eigen::MatrixXcd::Identity(h.n, h.n)).norm() > 1e-9) out.insert("HH* = nI");
  if ((m.cwiseAbs().array() - 1.0).abs().maxCoeff() > 1e-9) out.insert("|h_ij| = 1");
  return out;
}

std::set<std::string> expected_defects(const LatinSquare& l) {
  std::set<std::string> out;
  for (int i = 0; i < l.n; ++i) {
    std::set<int> row(l.rows[i].begin(), l.rows[i].end()), col;
    for (int j = 0; j < l.n; ++j) col.insert(l.rows[j][i]);
    if (static_cast<int>(row.size()) != l.n) out.insert("each symbol once per row");
    if (static_cast<int>(col.size()) != l.n) out.insert("each symbol once per column");
  }
  return out;
}

std::set<std::string> expected_defects(const QuantumLatinSquare& q) {
  std::set<std::string> out;
  const int n = q.n;
  for (int a = 0; a < n; ++a) {
    Eigen::MatrixXcd row(n, n), col(n, n);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        row(b, c) = q.vectors[a][b][c];
        col(b, c) = q.vectors[b][a][c];
      }
    if (!unitary(row)) out.insert("rows orthonormal");
    if (!unitary(col)) out.insert("columns orthonormal");
  }
  return out;
}

std::set<std::string> expected_defects(const BiunitaryMatrix& u) {
  std::set<std::string> out;
  const int n = u.n;
  const Eigen::MatrixXcd m = dense(u.entries);
  Eigen::MatrixXcd v(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) v(i * n + j, k * n + l) = m(k * n + j, i * n + l);
  if (!unitary(m)) out.insert("U unitary");
  if (!unitary(v)) out.insert("block transpose unitary");
  return out;
}

std::set<std::string> expected_defects(const UnitaryErrorBasis& e) {
  std::set<std::string> out;
  const int n = e.n;
  for (const auto& b : e.matrices)
    if (!unitary(dense(b))) out.insert("each B(j,l) unitary");
  Eigen::MatrixXcd gram(n * n, n * n);
  for (int a = 0; a < n * n; ++a)
    for (int b = 0; b < n * n; ++b) gram(a, b) = (dense(e.matrices[b]).adjoint() * dense(e.matrices[a])).trace() / double(n);
  if ((gram - Eigen::MatrixXcd::Identity(n * n, n * n)).norm() > 1e-9) out.insert("{B(j,l)} orthonormal under Tr(B*A)/n");
  return out;
}

template <class Obj>
void check_perturbation(Check& c, const std::string& family, const Obj& bad, int& rejected) {
  const auto want = expected_defects(bad);
  std::set<std::string> got;
  for (const auto& d : check_invariants(bad)) got.insert(d.name);
  c.expect(!want.empty(), family + ": perturbation left the object valid");
  c.expect(got == want, family + ": defect names differ from the direct check");
  bool threw = false;
  try {
    (void)to_planar(QitObject{bad});
  } catch (const ValidationError&) {
    threw = true;
  }
  c.expect(threw, family + ": perturbed object converted without error");
  rejected += (!want.empty() && got == want && threw) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Accepted inputs shared by several criteria.

struct Accepted {
  std::string name;
  QitObject object;
};

std::vector<Accepted> zero_ell_inputs() {
  std::vector<Accepted> out;
  for (int n = 2; n <= 6; ++n) out.push_back({"Fourier " + std::to_string(n), fourier_hadamard(n)});
  for (const char* g : {"Z2", "Z3", "Z4", "Z5", "S3"}) out.push_back({std::string(g) + " table", multiplication_table(builtin_group(g))});
  out.push_back({"5x5 Latin square", non_group_latin_square_5()});
  std::mt19937_64 rng(2024);
  for (std::size_t n : {2u, 3u}) {
    const auto a = random_unitary(n, rng), b = random_unitary(n, rng);
    out.push_back({"A(x)B n=" + std::to_string(n), kron_biunitary(a, b)});
  }
  return out;
}

std::vector<std::uint64_t> dims_of(const std::vector<QLevelResult>& ls) {
  std::vector<std::uint64_t> out;
  for (const auto& l : ls) out.push_back(l.dimension);
  return out;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

SpinElement combo(const std::vector<SpinElement>& basis, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  SpinElement x = zero(basis.front().context(), basis.front().color());
  for (const auto& b : basis) x = linear_combination(x, b, Complex(g(rng), g(rng)));
  return x;
}

// ---------------------------------------------------------------------------
// Criteria

Outcome relation_suite() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n : {2, 3}) {
    const auto rep = run_relation_suite({n, 5, 100, 20240 + static_cast<std::uint64_t>(n)});
    for (const auto& r : rep.results) c.expect(r.residual <= 1e-10, "N=" + std::to_string(n) + " " + r.name + " " + sci(r.residual));
    worst = std::max(worst, rep.max_residual());
  }
  const double t = seconds_since(t0);
  c.expect(t <= 60.0, "runtime " + std::to_string(t) + " s");
  c.note("max residual " + sci(worst) + ", " + std::to_string(static_cast<int>(t + 0.5)) + " s");
  return c.outcome();
}

Outcome rotation_formulas() {
  Check c;
  std::size_t count = 0;
  double worst = 0.0;
  for (int n : {2, 3}) {
    const SpinContext ctx(n);
    for (int k = 1; k <= 5; ++k)
      for (Shading s : {Shading::plus, Shading::minus}) {
        const SpinColor col{k, s};
        for (const auto& b : enumerate_basis(ctx, col)) {
          const auto [w, img] = oracle::rotate_basis(n, col, b);
          const auto r = rotate(make_basis(ctx, col, b));
          SpinElement want(ctx, {k, flip(s)});
          want.add_term(img, w);
          const double d = r.size() == 1 ? max_abs_diff(r, want) : 1.0;
          worst = std::max(worst, d);
          c.expect(d <= 1e-14, to_string(b, col) + " at N=" + std::to_string(n));
          ++count;
        }
      }
  }
  c.note(std::to_string(count) + " basis vectors, max deviation " + sci(worst));
  return c.outcome();
}

Outcome correspondences() {
  Check c;
  double worst_trip = 0.0;
  int accepted = 0, rejected = 0;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ph(0.3, 2.8);

  for (int n = 2; n <= 6; ++n) {
    const auto h = fourier_hadamard(n);
    const auto u = from_hadamard(h);
    c.expect(is_biunitary(u, 1).verdict, "Fourier " + std::to_string(n));
    worst_trip = std::max(worst_trip, max_abs(to_hadamard(u).entries - h.entries));
    ++accepted;
    for (int t = 0; t < 6; ++t) {
      HadamardMatrix bad = h;
      const auto i = static_cast<std::size_t>(t % n), j = static_cast<std::size_t>((t / 2) % n);
      bad.entries(i, j) *= (t % 2 == 0) ? std::polar(1.0, ph(rng)) : Complex(1.25);
      check_perturbation(c, "Fourier " + std::to_string(n), bad, rejected);
    }
  }

  std::vector<LatinSquare> squares;
  for (const char* g : {"Z2", "Z3", "Z4", "Z5", "S3"}) squares.push_back(multiplication_table(builtin_group(g)));
  squares.push_back(non_group_latin_square_5());
  for (const auto& l : squares) {
    const auto q = latin_to_qls(l);
    const auto u = from_qls(q);
    c.expect(is_biunitary(u, 1).verdict, "Latin square n=" + std::to_string(l.n));
    const auto back = to_qls(u);
    for (int a = 0; a < l.n; ++a)
      for (int b = 0; b < l.n; ++b)
        for (int k = 0; k < l.n; ++k) worst_trip = std::max(worst_trip, std::abs(back.vectors[a][b][k] - q.vectors[a][b][k]));
    ++accepted;
    for (int t = 0; t < 5; ++t) {
      LatinSquare bad = l;
      const auto i = static_cast<std::size_t>(t % l.n), j = static_cast<std::size_t>((2 * t + 1) % l.n);
      bad.rows[i][j] = (bad.rows[i][j] + 1 + t % (l.n - 1)) % l.n;
      check_perturbation(c, "Latin n=" + std::to_string(l.n), bad, rejected);
      QuantumLatinSquare qb = q;
      qb.vectors[i][j][static_cast<std::size_t>(t % l.n)] += Complex(0.0, 0.2);
      check_perturbation(c, "QLS n=" + std::to_string(l.n), qb, rejected);
    }
  }

  for (std::size_t n : {2u, 3u}) {
    for (int rep = 0; rep < 2; ++rep) {
      const auto m = kron_biunitary(random_unitary(n, rng), random_unitary(n, rng));
      const auto u = from_biunitary_matrix(m);
      c.expect(is_biunitary(u, 2).verdict, "A(x)B n=" + std::to_string(n));
      worst_trip = std::max(worst_trip, max_abs(to_biunitary_matrix(u).entries - m.entries));
      ++accepted;
      for (int t = 0; t < 5; ++t) {
        BiunitaryMatrix bad = m;
        bad.entries(static_cast<std::size_t>(t) % (n * n), static_cast<std::size_t>(3 * t + rep) % (n * n)) += 0.2;
        check_perturbation(c, "A(x)B n=" + std::to_string(n), bad, rejected);
      }
    }
  }

  for (int n : {2, 3}) {
    const auto e = shift_clock_ueb(n);
    const auto u = from_ueb(e);
    c.expect(is_AB_biunitary_ueb(u).verdict, "shift/clock n=" + std::to_string(n));
    const auto back = to_ueb(u);
    for (std::size_t t = 0; t < e.matrices.size(); ++t) worst_trip = std::max(worst_trip, max_abs(back.matrices[t] - e.matrices[t]));
    ++accepted;
    for (int t = 0; t < 6; ++t) {
      UnitaryErrorBasis bad = e;
      auto& mat = bad.matrices[static_cast<std::size_t>(t) % bad.matrices.size()];
      const auto i = static_cast<std::size_t>(t % n), j = static_cast<std::size_t>((t + 1) % n);
      if (t % 2 == 0)
        mat(i, j) += 0.2;
      else
        bad.matrices[static_cast<std::size_t>(t) % bad.matrices.size()] = bad.matrices[(static_cast<std::size_t>(t) + 1) % bad.matrices.size()];
      check_perturbation(c, "shift/clock n=" + std::to_string(n), bad, rejected);
    }
  }
  c.expect(worst_trip <= 1e-12, "round trip deviation " + sci(worst_trip));
  c.note(std::to_string(accepted) + " objects accepted, " + std::to_string(rejected) + " perturbations rejected, round trip " +
         sci(worst_trip));
  return c.outcome();
}

Outcome rotated_biunitaries() {
  Check c;
  int count = 0;
  for (const auto& in : zero_ell_inputs()) {
    const auto img = to_planar(in.object);
    const int k = img.element.color().width;
    c.expect(is_biunitary(rotate_pow(img.element, k), img.ell).verdict, in.name + ": R^k(u)");
    c.expect(is_biunitary(rotate_pow(star(img.element), -img.ell), img.ell).verdict, in.name + ": R^-l(u*)");
    count += 2;
  }
  c.note(std::to_string(count) + " rotated elements certified");
  return c.outcome();
}

struct Case {
  std::string name;
  SpinElement u;
  int ell;
  int levels;
};

std::vector<Case> structure_cases() {
  std::vector<Case> out;
  out.push_back({"Fourier 2", from_hadamard(fourier_hadamard(2)), 1, 3});
  out.push_back({"Fourier 3", from_hadamard(fourier_hadamard(3)), 1, 3});
  out.push_back({"Z2", group_biunitary(cyclic_group(2)), 1, 3});
  out.push_back({"Z3", group_biunitary(cyclic_group(3)), 1, 3});
  out.push_back({"S3", group_biunitary(symmetric_group_3()), 1, 2});
  out.push_back({"5x5 square", from_qls(latin_to_qls(non_group_latin_square_5())), 1, 2});
  std::mt19937_64 rng(5);
  out.push_back({"A(x)B n=2", from_biunitary_matrix(kron_biunitary(random_unitary(2, rng), random_unitary(2, rng))), 2, 2});
  return out;
}

Outcome sigma_and_f() {
  Check c;
  std::mt19937_64 rng(321);
  double worst_iso = 0.0, worst_f = 0.0;
  int probes = 0, disagreements = 0;
  for (const auto& cs : structure_cases()) {
    const auto st = build_staircase(cs.u, cs.ell, cs.levels);
    const int e = st.cabling().extra();
    const double d = st.context().delta();
    const double w = std::pow(d, -e);
    for (int m = 0; m <= cs.levels; ++m) {
      const SpinElement& s = st.at(m);
      const SpinColor amb = st.cabling().ambient(m);
      for (int t = 0; t < 3; ++t) {
        const auto x = random_element(st.context(), amb, rng), y = random_element(st.context(), amb, rng);
        const auto sx = sigma_tilde(s, x, e), sy = sigma_tilde(s, y, e);
        // sigma = delta^(-e/2) sigma~ for the picture inner product
        worst_iso = std::max(worst_iso, std::abs(w * picture_inner_product(sx, sy) - picture_inner_product(x, y)) / (norm(x) * norm(y)));
        const auto a = random_element(st.context(), s.color(), rng), b = random_element(st.context(), s.color(), rng);
        const auto fa = projection_F(a, e);
        worst_f = std::max(worst_f, max_abs_diff(projection_F(fa, e), fa) / norm(a));
        worst_f = std::max(worst_f, std::abs(inner_product(fa, b) - inner_product(a, projection_F(b, e))) / (norm(a) * norm(b)));
      }
      const auto lvl = q_level(st, m);
      for (int t = 0; t < 50; ++t) {
        const SpinElement x = (t % 2 == 0 && lvl.dimension > 0) ? combo(lvl.basis(), rng) : random_element(st.context(), amb, rng);
        const bool one = condition_partner_exists(st, m, x).accepted;
        const bool three = condition_double_circle(st, m, x).accepted;
        ++probes;
        if (one != three) ++disagreements;
        if (t % 2 == 0) c.expect(one && three, cs.name + " level " + std::to_string(m) + ": member rejected");
        if (one) {
          const auto y = extract_partner_y(st, m, x);
          c.expect(max_abs_diff(reconstruct_from_partner(st, m, y), x) <= 1e-9 * std::max(1.0, norm(x)),
                   cs.name + " level " + std::to_string(m) + ": partner round trip");
        }
      }
    }
  }
  c.expect(worst_iso <= 1e-9, "isometry defect " + sci(worst_iso));
  c.expect(worst_f <= 1e-9, "projection defect " + sci(worst_f));
  c.expect(disagreements == 0, std::to_string(disagreements) + " probe disagreements");
  c.note("isometry " + sci(worst_iso) + ", F " + sci(worst_f) + ", " + std::to_string(probes) + " probes, " +
         std::to_string(disagreements) + " disagreements");
  return c.outcome();
}

Outcome group_dimensions() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  struct Row {
    GroupTable g;
    std::vector<std::uint64_t> want;
  };
  const std::vector<Row> rows{{cyclic_group(2), {1, 1, 2, 4, 8}}, {cyclic_group(3), {1, 1, 3, 9, 27}}, {symmetric_group_3(), {1, 1, 6, 36}}};
  double min_gap = 1e300;
  std::string got;
  for (const auto& r : rows) {
    const int max = static_cast<int>(r.want.size()) - 1;
    const auto st = build_staircase(group_biunitary(r.g), 1, max);
    const auto levels = q_levels(st, max);
    const auto dims = dims_of(levels);
    c.expect(dims == r.want, r.g.name() + " gives " + join(dims));
    for (const auto& l : levels) min_gap = std::min(min_gap, l.gap);
    got += (got.empty() ? "" : " ") + r.g.name() + ":" + join(dims);
  }
  c.expect(min_gap >= 1e4, "spectral gap " + sci(min_gap));
  const double t = seconds_since(t0);
  c.expect(t <= 300.0, "runtime " + std::to_string(t) + " s");
  c.note(got + ", min gap " + sci(min_gap) + ", " + std::to_string(static_cast<int>(t + 0.5)) + " s");
  return c.outcome();
}

Outcome irreducibility() {
  Check c;
  std::vector<QitObject> objs;
  for (int n = 2; n <= 5; ++n) objs.push_back(fourier_hadamard(n));
  for (const char* g : {"Z2", "Z3", "Z4", "Z5", "Z6", "S3"}) objs.push_back(multiplication_table(builtin_group(g)));
  objs.push_back(non_group_latin_square_5());
  for (const auto& o : objs) {
    const auto img = to_planar(o);
    const auto st = build_staircase(img.element, img.ell, 1);
    const auto d = q_level(st, 1).dimension;
    c.expect(d == 1, kind_name(o) + " n=" + std::to_string(img.element.context().spins()) + " gives " + std::to_string(d));
  }
  c.note(std::to_string(objs.size()) + " inputs with dim Q_(1,+) = 1");
  return c.outcome();
}

Outcome connectedness() {
  Check c;
  const auto inputs = zero_ell_inputs();
  for (const auto& in : inputs) {
    const auto img = to_planar(in.object);
    const auto st = build_staircase(img.element, img.ell, 0);
    const auto l = q_level(st, 0);
    c.expect(l.dimension == 1, in.name + ": dim Q_(0,+) = " + std::to_string(l.dimension));
    c.expect(l.minus.dimension() == 1, in.name + ": dim Q_(0,-) = " + std::to_string(l.minus.dimension()));
  }
  c.note(std::to_string(inputs.size()) + " inputs including the (4,2) case");
  return c.outcome();
}

Outcome group_structure() {
  Check c;
  double worst_mult = 0.0, worst_res = 0.0;
  struct Row {
    GroupTable g;
    int max;
  };
  for (const auto& r : std::vector<Row>{{cyclic_group(2), 4}, {cyclic_group(3), 4}, {cyclic_group(4), 2}, {symmetric_group_3(), 2}}) {
    const auto pred = group_oracle(r.g, r.max);
    worst_mult = std::max(worst_mult, pred.multiplicativity_defect);
    const auto st = build_staircase(group_biunitary(r.g), 1, r.max);
    const auto levels = q_levels(st, r.max);
    auto residual = [&](const SpinElement& x, int lvl) {
      const double a = norm(membership_apply(st.at(lvl), x, st.cabling().extra())) / norm(x);
      const double b = projection_residual(x, levels[static_cast<std::size_t>(lvl)].basis()) / norm(x);
      return std::max(a, b);
    };
    for (const auto& x : pred.X) worst_res = std::max(worst_res, residual(x, 2));
    for (const auto& [lvl, sums] : pred.orbit_sums) {
      std::uint64_t count = 1;
      for (int i = 0; i < lvl - 1; ++i) count *= static_cast<std::uint64_t>(r.g.order());
      c.expect(sums.size() == count, r.g.name() + ": orbit count " + std::to_string(sums.size()));
      c.expect(sums.size() == levels[static_cast<std::size_t>(lvl)].dimension,
               r.g.name() + ": orbit count vs computed dimension at level " + std::to_string(lvl));
      for (const auto& s : sums) worst_res = std::max(worst_res, residual(s, lvl));
    }
  }
  c.expect(worst_mult == 0.0, "X_g X_h - X_gh = " + sci(worst_mult));
  c.expect(worst_res <= 1e-9, "membership residual " + sci(worst_res));
  c.note("X defect " + sci(worst_mult) + ", membership residual " + sci(worst_res));
  return c.outcome();
}

Outcome closure() {
  Check c;
  double worst = 0.0;
  const std::vector<std::pair<std::string, SpinElement>> us{{"Z2", group_biunitary(cyclic_group(2))},
                                                            {"Z3", group_biunitary(cyclic_group(3))},
                                                            {"Fourier 2", from_hadamard(fourier_hadamard(2))}};
  for (const auto& [name, u] : us) {
    const auto st = build_staircase(u, 1, 3);
    std::vector<QLevelResult> levels;
    for (int m = 1; m <= 3; ++m) levels.push_back(q_level(st, m));
    const auto rep = verify_planar_closure(st, levels);
    c.expect(rep.ok(1e-9), name + ": " + sci(rep.max()));
    worst = std::max(worst, rep.max());
  }
  c.note("max residual " + sci(worst));
  return c.outcome();
}

Outcome dense_oracle() {
  Check c;
  std::string got;
  const std::vector<std::pair<std::string, SpinElement>> us{{"Fourier 2", from_hadamard(fourier_hadamard(2))},
                                                            {"Z2", group_biunitary(cyclic_group(2))}};
  for (const auto& [name, u] : us) {
    const auto st = build_staircase(u, 1, 3);
    const auto stairs = oracle::staircase(oracle::from_element(u), 1, 3);
    std::vector<std::uint64_t> fast, slow;
    for (int m = 0; m <= 3; ++m) {
      fast.push_back(q_level(st, m).dimension);
      slow.push_back(static_cast<std::uint64_t>(
          oracle::kernel_dimension(stairs[static_cast<std::size_t>(m)], st.cabling().ambient(m), st.cabling().extra())));
    }
    c.expect(fast == slow, name + ": " + join(fast) + " vs dense " + join(slow));
    got += (got.empty() ? "" : " ") + name + ":" + join(fast);
  }
  c.note(got);
  return c.outcome();
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"relation suite", relation_suite},
      {"rotation on basis vectors", rotation_formulas},
      {"object correspondences", correspondences},
      {"rotated biunitaries", rotated_biunitaries},
      {"sigma and F structure", sigma_and_f},
      {"group dimension tables", group_dimensions},
      {"irreducibility", irreducibility},
      {"connectedness", connectedness},
      {"group structure checks", group_structure},
      {"closure", closure},
      {"dense oracle equivalence", dense_oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
