#pragma once

// JSON forms of the quantum-information objects, planar elements and level
// tables. Complex numbers are [re, im] (a bare number is read as real).
// Spins and Latin square symbols are 1-based in files.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinpa/error.hpp"
#include "spinpa/numerics.hpp"
#include "spinpa/qit_bridge.hpp"
#include "spinpa/spin_core.hpp"
#include "spinpa/subfactor.hpp"

namespace spinpa {

using Json = nlohmann::json;

/// Malformed input; the message carries a byte position or a JSON pointer.
class InputError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

namespace json_detail {

inline std::string at(const std::string& path) { return path.empty() ? "/" : path; }

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw InputError("at " + at(path) + ": " + what);
}

inline const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

inline const Json& array(const Json& j, std::size_t len, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != len) fail(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
  return j;
}

inline double real(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "number is not finite");
  return v;
}

inline Complex complex(const Json& j, const std::string& path) {
  if (j.is_number()) return real(j, path);
  if (!j.is_array() || j.size() != 2) fail(path, "expected a complex number [re, im]");
  return {real(j[0], path + "/0"), real(j[1], path + "/1")};
}

inline int positive_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 1 || v > 1'000'000) fail(path, "expected a positive integer, got " + std::to_string(v));
  return static_cast<int>(v);
}

inline ComplexMatrix matrix(const Json& j, std::size_t side, const std::string& path) {
  array(j, side, path);
  ComplexMatrix m(side, side);
  for (std::size_t r = 0; r < side; ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    array(j[r], side, rp);
    for (std::size_t c = 0; c < side; ++c) m(r, c) = complex(j[r][c], rp + "/" + std::to_string(c));
  }
  return m;
}

inline Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

inline Json matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Line and column (1-based) of a byte offset.
inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

} // namespace json_detail

/// Parses text, reporting syntax errors with byte, line and column.
inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    const auto [line, col] = json_detail::line_col(text, byte);
    throw InputError("JSON syntax error at byte " + std::to_string(e.byte) + " (line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ")");
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

// ---------------------------------------------------------------------------
// Objects

inline QitObject qit_object_from_json(const Json& j) {
  using namespace json_detail;
  const Json& type = field(j, "type", "");
  if (!type.is_string()) fail("/type", "expected a string");
  const std::string t = type.get<std::string>();
  const int n = positive_int(field(j, "n", ""), "/n");
  const auto sn = static_cast<std::size_t>(n);
  if (t == "hadamard") return HadamardMatrix{n, matrix(field(j, "entries", ""), sn, "/entries")};
  if (t == "biunitary") return BiunitaryMatrix{n, matrix(field(j, "entries", ""), sn * sn, "/entries")};
  if (t == "latin") {
    const Json& rows = array(field(j, "rows", ""), sn, "/rows");
    LatinSquare l{n, std::vector(sn, std::vector<int>(sn))};
    for (std::size_t r = 0; r < sn; ++r) {
      const std::string rp = "/rows/" + std::to_string(r);
      array(rows[r], sn, rp);
      for (std::size_t c = 0; c < sn; ++c) {
        const std::string cp = rp + "/" + std::to_string(c);
        const int v = positive_int(rows[r][c], cp);
        if (v > n) fail(cp, "symbol " + std::to_string(v) + " outside 1.." + std::to_string(n));
        l.rows[r][c] = v - 1;
      }
    }
    return l;
  }
  if (t == "qls") {
    const Json& v = array(field(j, "vectors", ""), sn, "/vectors");
    QuantumLatinSquare q{n, std::vector(sn, std::vector(sn, std::vector<Complex>(sn)))};
    for (std::size_t r = 0; r < sn; ++r) {
      const std::string rp = "/vectors/" + std::to_string(r);
      array(v[r], sn, rp);
      for (std::size_t c = 0; c < sn; ++c) {
        const std::string cp = rp + "/" + std::to_string(c);
        array(v[r][c], sn, cp);
        for (std::size_t k = 0; k < sn; ++k) q.vectors[r][c][k] = complex(v[r][c][k], cp + "/" + std::to_string(k));
      }
    }
    return q;
  }
  if (t == "ueb") {
    const Json& ms = array(field(j, "matrices", ""), sn * sn, "/matrices");
    UnitaryErrorBasis e{n, {}};
    for (std::size_t i = 0; i < sn * sn; ++i) e.matrices.push_back(matrix(ms[i], sn, "/matrices/" + std::to_string(i)));
    return e;
  }
  fail("/type", "unknown object type \"" + t + "\" (expected hadamard, latin, qls, biunitary or ueb)");
}

inline Json to_json(const QitObject& obj) {
  using namespace json_detail;
  struct Visitor {
    Json operator()(const HadamardMatrix& h) const { return {{"type", "hadamard"}, {"n", h.n}, {"entries", matrix_json(h.entries)}}; }
    Json operator()(const BiunitaryMatrix& u) const { return {{"type", "biunitary"}, {"n", u.n}, {"entries", matrix_json(u.entries)}}; }
    Json operator()(const LatinSquare& l) const {
      Json rows = Json::array();
      for (const auto& r : l.rows) {
        Json row = Json::array();
        for (int v : r) row.push_back(v + 1);
        rows.push_back(std::move(row));
      }
      return {{"type", "latin"}, {"n", l.n}, {"rows", rows}};
    }
    Json operator()(const QuantumLatinSquare& q) const {
      Json v = Json::array();
      for (const auto& r : q.vectors) {
        Json row = Json::array();
        for (const auto& vec : r) {
          Json c = Json::array();
          for (const auto& z : vec) c.push_back(complex_json(z));
          row.push_back(std::move(c));
        }
        v.push_back(std::move(row));
      }
      return {{"type", "qls"}, {"n", q.n}, {"vectors", v}};
    }
    Json operator()(const UnitaryErrorBasis& e) const {
      Json ms = Json::array();
      for (const auto& m : e.matrices) ms.push_back(matrix_json(m));
      return {{"type", "ueb"}, {"n", e.n}, {"matrices", ms}};
    }
  };
  return std::visit(Visitor{}, obj);
}

// ---------------------------------------------------------------------------
// Elements

/// {"type":"element","spins":N,"color":{"width":k,"shading":"+"},
///  "source":"hadamard","terms":[{"index":{...},"coeff":[re,im]},...]}
/// Terms are listed in canonical basis order.
inline Json element_to_json(const SpinElement& x, const std::string& source = "") {
  using namespace json_detail;
  Json terms = Json::array();
  for (const auto& [idx, v] : x.terms()) {
    Json index = Json::object();
    if (idx.left) index["left"] = *idx.left + 1;
    Json top = Json::array(), bottom = Json::array();
    for (Spin s : idx.top) top.push_back(s + 1);
    for (Spin s : idx.bottom) bottom.push_back(s + 1);
    index["top"] = top;
    index["bottom"] = bottom;
    if (idx.right) index["right"] = *idx.right + 1;
    terms.push_back({{"index", index}, {"label", to_string(idx, x.color())}, {"coeff", complex_json(v)}});
  }
  Json out = {{"type", "element"},
              {"spins", x.context().spins()},
              {"color", {{"width", x.color().width}, {"shading", std::string(1, shading_char(x.color().shading))}}},
              {"terms", terms}};
  if (!source.empty()) out["source"] = source;
  return out;
}

struct ElementRecord {
  SpinElement element;
  std::string source;
};

inline ElementRecord element_from_json(const Json& j) {
  using namespace json_detail;
  const Json& type = field(j, "type", "");
  if (type != "element") fail("/type", "expected \"element\"");
  const int n = positive_int(field(j, "spins", ""), "/spins");
  const Json& col = field(j, "color", "");
  const Json& w = field(col, "width", "/color");
  if (!w.is_number_integer() || w.get<std::int64_t>() < 0 || w.get<std::int64_t>() > 64) fail("/color/width", "expected a width in 0..64");
  const Json& sh = field(col, "shading", "/color");
  if (sh != "+" && sh != "-") fail("/color/shading", "expected \"+\" or \"-\"");
  const SpinContext ctx(n);
  const SpinColor color{static_cast<int>(w.get<std::int64_t>()), sh == "+" ? Shading::plus : Shading::minus};
  ElementRecord rec{SpinElement(ctx, color), ""};
  if (auto it = j.find("source"); it != j.end()) {
    if (!it->is_string()) fail("/source", "expected a string");
    rec.source = it->get<std::string>();
  }
  const Json& terms = field(j, "terms", "");
  if (!terms.is_array()) fail("/terms", "expected an array");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = "/terms/" + std::to_string(t);
    const Json& index = field(terms[t], "index", tp);
    const std::string ip = tp + "/index";
    auto spin = [&](const Json& s, const std::string& p) {
      const int v = positive_int(s, p);
      if (v > n) fail(p, "spin " + std::to_string(v) + " outside 1.." + std::to_string(n));
      return v - 1;
    };
    SpinBasisIndex idx;
    if (auto it = index.find("left"); it != index.end()) idx.left = spin(*it, ip + "/left");
    if (auto it = index.find("right"); it != index.end()) idx.right = spin(*it, ip + "/right");
    for (const char* key : {"top", "bottom"}) {
      const Json& tup = field(index, key, ip);
      if (!tup.is_array()) fail(ip + "/" + key, "expected an array");
      auto& dst = std::string(key) == "top" ? idx.top : idx.bottom;
      for (std::size_t i = 0; i < tup.size(); ++i) dst.push_back(spin(tup[i], ip + "/" + key + "/" + std::to_string(i)));
    }
    try {
      validate_index(ctx, color, idx);
    } catch (const ValidationError& e) {
      fail(ip, e.what());
    }
    rec.element.add_term(idx, complex(field(terms[t], "coeff", tp), tp + "/coeff"));
  }
  return rec;
}

// ---------------------------------------------------------------------------
// Reports

inline Json certificate_to_json(const BiunitaryCertificate& c) {
  Json res = Json::array();
  for (const auto& r : c.residuals) res.push_back({{"name", r.name}, {"residual", r.value}, {"ok", r.ok}});
  return {{"kind", c.kind == CertificateKind::ueb ? "A,R(4,+)" : "0," + std::to_string(c.ell)},
          {"label", c.label()},
          {"tolerance", c.tolerance},
          {"verdict", c.verdict},
          {"residuals", res}};
}

inline Json defects_to_json(const std::vector<Defect>& defects) {
  Json out = Json::array();
  for (const auto& d : defects) out.push_back({{"name", d.name}, {"residual", d.residual}, {"detail", d.detail}});
  return out;
}

/// {"levels":[{"m":..,"dim":..,"residual":..,"gap":..}]}
inline Json levels_to_json(const std::vector<QLevelResult>& levels) {
  Json arr = Json::array();
  for (const auto& l : levels)
    arr.push_back({{"m", l.m}, {"dim", l.dimension}, {"residual", l.residual}, {"gap", l.gap}});
  return {{"levels", arr}};
}

inline Json closure_to_json(const ClosureReport& c) {
  return {{"multiplication", c.multiplication}, {"inclusion", c.inclusion}, {"expectation", c.expectation},
          {"rotation", c.rotation},             {"star", c.star},           {"unit", c.unit},
          {"modulus", c.modulus}};
}

} // namespace spinpa
