// spinpa: verify biunitary objects and compute the planar algebras they
// generate.
//
//   spinpa check    --input obj.json
//   spinpa convert  --input obj.json           (object -> element, element -> object)
//   spinpa qdims    --input obj.json --max-level 3
//   spinpa group    --name S3 --max-level 3
//   spinpa selftest --spins 3 --seed 7
//
// Exit codes: 0 ok, 1 verdict false, 2 input error, 3 resource refusal.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinpa/groups.hpp"
#include "spinpa/json_io.hpp"
#include "spinpa/relations.hpp"
#include "spinpa/spinpa.hpp"

namespace {

using namespace spinpa;

enum Exit { kOk = 0, kVerdictFalse = 1, kInputError = 2, kResourceRefusal = 3 };

struct RunConfig {
  std::string input;
  std::optional<double> tol;
  double kernel_tol = kDefaultKernelThreshold;
  int max_level = 2;
  std::string format = "text";
  std::uint64_t seed = 0;
  double cap = 5e4;
  int threads = 1;
  bool closure = false;
  std::string group_name;
  int spins = 2;
  int samples = 100;
  int max_width = 5;

  double tolerance() const { return tol.value_or(kDefaultTolerance); }
  bool json() const { return format == "json"; }
};

void emit(const RunConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

std::string object_title(const QitObject& obj) {
  static const char* titles[] = {"complex Hadamard matrix", "quantum Latin square", "quantum Latin square", "biunitary matrix",
                                 "unitary error basis"};
  return titles[obj.index()];
}

std::string residual_table(const BiunitaryCertificate& cert) {
  std::ostringstream os;
  os << "  " << std::left << std::setw(28) << "relation" << std::setw(12) << "residual" << "ok\n";
  for (const auto& r : cert.residuals)
    os << "  " << std::left << std::setw(28) << r.name << std::setw(12) << sci(r.value) << (r.ok ? "yes" : "NO") << "\n";
  return os.str();
}

QitObject load_object(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
  return qit_object_from_json(read_json_file(cfg.input));
}

int cmd_check(const RunConfig& cfg) {
  const QitObject obj = load_object(cfg);
  const double tol = cfg.tolerance();
  const auto defects = check_invariants(obj, tol);
  Json j = {{"command", "check"}, {"object", kind_name(obj)}, {"n", std::visit([](const auto& o) { return o.n; }, obj)}};
  std::ostringstream text;
  text << "object: " << kind_name(obj) << " (" << object_title(obj) << ")\n";
  if (!defects.empty()) {
    j["verdict"] = false;
    j["defects"] = defects_to_json(defects);
    text << "object invariants violated:\n";
    for (const auto& d : defects)
      text << "  " << d.name << "  residual " << sci(d.residual) << (d.detail.empty() ? "" : "  (" + d.detail + ")") << "\n";
    text << "verdict: rejected\n";
    emit(cfg, j, text.str());
    return kVerdictFalse;
  }
  const PlanarImage img = to_planar(obj, tol);
  const BiunitaryCertificate cert = certify(img, tol);
  j["verdict"] = cert.verdict;
  j["certificate"] = certificate_to_json(cert);
  j["element"] = {{"color", img.element.color().str()}, {"terms", img.element.size()}};
  text << "element: P_" << img.element.color().str() << ", " << img.element.size() << " nonzero terms\n";
  text << "certificate: " << cert.label() << " (tolerance " << sci(tol) << ")\n" << residual_table(cert);
  if (cert.verdict) {
    text << "verdict: " << object_title(obj) << "; " << cert.label() << "\n";
  } else {
    text << "verdict: rejected; failed:";
    for (const auto& n : cert.failed()) text << " [" << n << "]";
    text << "\n";
  }
  emit(cfg, j, text.str());
  return cert.verdict ? kOk : kVerdictFalse;
}

QitObject object_from_element(const ElementRecord& rec, double tol) {
  const std::string& s = rec.source;
  if (s == "hadamard") return to_hadamard(rec.element, tol);
  if (s == "qls" || s == "latin") return to_qls(rec.element, tol);
  if (s == "biunitary") return to_biunitary_matrix(rec.element, tol);
  if (s == "ueb") return to_ueb(rec.element, tol);
  throw InputError("element has no usable \"source\" field (expected hadamard, qls, biunitary or ueb)");
}

int cmd_convert(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
  const Json in = read_json_file(cfg.input);
  const double tol = cfg.tolerance();
  Json out;
  if (in.is_object() && in.value("type", "") == "element") {
    out = to_json(object_from_element(element_from_json(in), tol));
  } else {
    const QitObject obj = qit_object_from_json(in);
    const PlanarImage img = to_planar(obj, tol);
    const std::string source = kind_name(obj) == "latin" ? "qls" : kind_name(obj);
    out = element_to_json(img.element, source);
  }
  // convert always writes JSON; text mode only drops the indentation.
  std::cout << (cfg.json() ? out.dump(2) : out.dump()) << "\n";
  return kOk;
}

std::string level_table(const std::vector<QLevelResult>& levels, const std::vector<std::uint64_t>* predicted = nullptr) {
  std::ostringstream os;
  os << "  " << std::left << std::setw(4) << "m" << std::setw(8) << "dim";
  if (predicted) os << std::setw(10) << "expected";
  os << std::setw(12) << "residual" << "gap\n";
  for (const auto& l : levels) {
    os << "  " << std::left << std::setw(4) << l.m << std::setw(8) << l.dimension;
    if (predicted) os << std::setw(10) << (*predicted)[static_cast<std::size_t>(l.m)];
    os << std::setw(12) << sci(l.residual) << sci(l.gap) << "\n";
  }
  return os.str();
}

/// Refuses levels whose staircase space P_(ml+k-l) exceeds the cap.
void check_cap(const RunConfig& cfg, int n, int k, int ell) {
  if (cfg.max_level < 0) throw InputError("--max-level must be >= 0");
  const int width = cfg.max_level * ell + k - ell;
  const double dim = std::pow(static_cast<double>(n), width);
  if (dim > cfg.cap) {
    std::ostringstream os;
    os << "refusing: level " << cfg.max_level << " needs the space P_(" << width << ",+) of dimension " << n << "^" << width << " = "
       << std::setprecision(6) << dim << ", above the cap " << cfg.cap << " (raise --cap or lower --max-level)";
    throw ResourceError(os.str());
  }
}

struct LevelRun {
  Staircase staircase;
  std::vector<QLevelResult> levels;
  std::optional<ClosureReport> closure;
};

LevelRun run_levels(const RunConfig& cfg, const SpinElement& u, int ell) {
  check_cap(cfg, u.context().spins(), u.color().width, ell);
  LevelRun run{build_staircase(u, ell, cfg.max_level, cfg.tolerance()), {}, {}};
  const Staircase& st = run.staircase;
  run.levels = q_levels(st, cfg.max_level, cfg.kernel_tol, cfg.threads);
  if (cfg.closure && run.levels.size() >= 2) run.closure = verify_planar_closure(st, run.levels);
  return run;
}

std::string closure_text(const ClosureReport& c) {
  std::ostringstream os;
  os << "closure residuals:\n"
     << "  multiplication " << sci(c.multiplication) << "\n  inclusion      " << sci(c.inclusion) << "\n  expectation    "
     << sci(c.expectation) << "\n  rotation       " << sci(c.rotation) << "\n  star           " << sci(c.star) << "\n  unit           "
     << sci(c.unit) << "\n  modulus        " << sci(c.modulus) << "\n";
  return os.str();
}

int cmd_qdims(const RunConfig& cfg) {
  const QitObject obj = load_object(cfg);
  if (std::holds_alternative<UnitaryErrorBasis>(obj))
    throw InputError("qdims does not apply to unitary error bases: they are {A,R(4,+)}-biunitary, and no construction of a "
                     "subfactor planar algebra from such elements is available (use check instead)");
  const double tol = cfg.tolerance();
  const auto defects = check_invariants(obj, tol);
  if (!defects.empty()) {
    std::cerr << "spinpa: object invariants violated: " << describe(defects) << "\n";
    return kVerdictFalse;
  }
  const PlanarImage img = to_planar(obj, tol);
  const auto cert = certify(img, tol);
  if (!cert.verdict) {
    std::cerr << "spinpa: element is not " << cert.label() << "\n" << residual_table(cert);
    return kVerdictFalse;
  }
  const LevelRun run = run_levels(cfg, img.element, img.ell);
  Json j = levels_to_json(run.levels);
  j["command"] = "qdims";
  j["object"] = kind_name(obj);
  j["k"] = img.element.color().width;
  j["ell"] = img.ell;
  j["modulus"] = std::pow(img.element.context().delta(), img.ell);
  std::ostringstream text;
  text << "object: " << object_title(obj) << ", " << cert.label() << "\n";
  text << "Q_(m,+) dimensions (cabling l = " << img.ell << ", modulus " << std::pow(img.element.context().delta(), img.ell) << "):\n"
       << level_table(run.levels);
  if (run.closure) {
    j["closure"] = closure_to_json(*run.closure);
    text << closure_text(*run.closure);
  }
  emit(cfg, j, text.str());
  return kOk;
}

GroupTable load_group(const RunConfig& cfg) {
  if (!cfg.group_name.empty()) return builtin_group(cfg.group_name);
  if (cfg.input.empty()) throw InputError("group needs --name or --input");
  const Json j = read_json_file(cfg.input);
  // Accepts {"type":"latin",...} or {"type":"group","n":..,"table":[[..]]}, 1-based.
  Json as_latin = j;
  if (j.is_object() && j.value("type", "") == "group") {
    as_latin["type"] = "latin";
    if (j.contains("table")) as_latin["rows"] = j["table"];
  }
  const QitObject obj = qit_object_from_json(as_latin);
  if (!std::holds_alternative<LatinSquare>(obj)) throw InputError("group input must be a multiplication table");
  return GroupTable(std::get<LatinSquare>(obj).rows, cfg.input);
}

int cmd_group(const RunConfig& cfg) {
  const GroupTable g = load_group(cfg);
  const SpinElement u = group_biunitary(g);
  const double tol = cfg.tolerance();
  const LevelRun run = run_levels(cfg, u, 1);
  const GroupPrediction pred = group_oracle(g, cfg.max_level);
  bool ok = pred.multiplicativity_defect <= tol;
  bool dims_ok = true;
  for (const auto& l : run.levels) dims_ok = dims_ok && l.dimension == pred.dimensions[static_cast<std::size_t>(l.m)];
  ok = ok && dims_ok;

  // Membership of X_g (level 2) and of the orbit sums (even levels).
  const Staircase& st = run.staircase;
  double x_res = 0.0, orbit_res = 0.0;
  bool orbit_count_ok = true;
  if (cfg.max_level >= 2)
    for (const auto& x : pred.X) x_res = std::max(x_res, norm(membership_apply(st.at(2), x, 2)) / norm(x));
  for (const auto& [lvl, sums] : pred.orbit_sums) {
    for (const auto& s : sums) orbit_res = std::max(orbit_res, norm(membership_apply(st.at(lvl), s, 2)) / norm(s));
    orbit_count_ok = orbit_count_ok && sums.size() == run.levels[static_cast<std::size_t>(lvl)].dimension;
  }
  ok = ok && x_res <= tol && orbit_res <= tol && orbit_count_ok;
  if (run.closure) ok = ok && run.closure->ok(tol);

  Json j = levels_to_json(run.levels);
  j["command"] = "group";
  j["group"] = g.name();
  j["order"] = g.order();
  j["predicted"] = pred.dimensions;
  j["dimensions_match"] = dims_ok;
  j["X_multiplicativity_defect"] = pred.multiplicativity_defect;
  j["X_membership_residual"] = x_res;
  j["orbit_sum_residual"] = orbit_res;
  j["orbit_counts_match"] = orbit_count_ok;
  j["ok"] = ok;
  std::ostringstream text;
  text << "group " << g.name() << " (order " << g.order() << "), u = sum e^{kh}_k(h] in P_(3,+)\n"
       << level_table(run.levels, &pred.dimensions) << "predicted vs computed dimensions: " << (dims_ok ? "equal" : "DIFFER") << "\n"
       << "X_g X_h = X_gh defect: " << sci(pred.multiplicativity_defect) << "\n";
  if (cfg.max_level >= 2) text << "X_g membership residual: " << sci(x_res) << "\n";
  if (!pred.orbit_sums.empty())
    text << "orbit sums: residual " << sci(orbit_res) << ", counts " << (orbit_count_ok ? "match" : "DIFFER") << "\n";
  if (run.closure) {
    j["closure"] = closure_to_json(*run.closure);
    text << closure_text(*run.closure);
  }
  text << (ok ? "all group checks passed\n" : "group checks FAILED\n");
  emit(cfg, j, text.str());
  return ok ? kOk : kVerdictFalse;
}

int cmd_selftest(const RunConfig& cfg) {
  const double tol = cfg.tol.value_or(1e-10);
  const auto rep = run_relation_suite({cfg.spins, cfg.max_width, cfg.samples, cfg.seed});
  Json j = {{"command", "selftest"}, {"spins", cfg.spins}, {"seed", cfg.seed}, {"samples", rep.samples}, {"tolerance", tol}};
  Json rel = Json::array();
  std::ostringstream text;
  text << "relation suite: N = " << cfg.spins << ", widths <= " << cfg.max_width << ", seed " << cfg.seed << ", " << cfg.samples
       << " samples per color\n";
  int failed = 0;
  for (const auto& r : rep.results) {
    const bool pass = r.residual <= tol;
    failed += pass ? 0 : 1;
    rel.push_back({{"name", r.name}, {"residual", r.residual}, {"checks", r.checks}, {"ok", pass}});
    text << "  " << (pass ? "pass " : "FAIL ") << std::left << std::setw(36) << r.name << sci(r.residual) << "\n";
  }
  j["relations"] = rel;
  j["ok"] = failed == 0;
  text << (failed == 0 ? "all relations hold\n" : std::to_string(failed) + " relation(s) failed\n");
  emit(cfg, j, text.str());
  return failed == 0 ? kOk : kVerdictFalse;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin planar algebra toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("--input", cfg.input, "input JSON file");
    if (input_required) in->required();
    sub->add_option("--tol", cfg.tol, "absolute tolerance on residual norms (default 1e-9)")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized suites");
  };
  auto levels = [&](CLI::App* sub) {
    sub->add_option("--max-level", cfg.max_level, "highest level m")->check(CLI::NonNegativeNumber);
    sub->add_option("--cap", cfg.cap, "largest allowed staircase space dimension N^(ml+k-l)")->check(CLI::PositiveNumber);
    sub->add_option("--kernel-tol", cfg.kernel_tol, "relative singular value threshold")->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "threads for operator assembly")->check(CLI::Range(1, 256));
    sub->add_flag("--closure", cfg.closure, "also verify closure under the generating tangles");
  };

  auto* check = app.add_subcommand("check", "validate an object and certify its biunitary element");
  common(check, true);
  auto* convert = app.add_subcommand("convert", "object JSON -> element JSON, or element JSON -> object JSON");
  common(convert, true);
  auto* qdims = app.add_subcommand("qdims", "dimensions of Q_(m,+) for m = 0..max-level");
  common(qdims, true);
  levels(qdims);
  auto* group = app.add_subcommand("group", "group Latin square case, cross-checked against predictions");
  common(group, false);
  levels(group);
  group->add_option("--name", cfg.group_name, "builtin group: Z2..Z6, S3");
  auto* selftest = app.add_subcommand("selftest", "randomized relation suite");
  common(selftest, false);
  selftest->add_option("--spins", cfg.spins, "number of spins N")->check(CLI::Range(1, 6));
  selftest->add_option("--samples", cfg.samples, "random draws per color")->check(CLI::Range(1, 100000));
  selftest->add_option("--max-width", cfg.max_width, "largest width k")->check(CLI::Range(0, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(cfg);
    if (*convert) return cmd_convert(cfg);
    if (*qdims) return cmd_qdims(cfg);
    if (*group) return cmd_group(cfg);
    if (*selftest) return cmd_selftest(cfg);
  } catch (const ResourceError& e) {
    std::cerr << "spinpa: " << e.what() << "\n";
    return kResourceRefusal;
  } catch (const NumericalError& e) {
    std::cerr << "spinpa: numerical failure: " << e.what() << "\n";
    return kVerdictFalse;
  } catch (const Error& e) {
    std::cerr << "spinpa: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
