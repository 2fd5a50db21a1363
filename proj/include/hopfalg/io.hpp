#pragma once

// Definition files and report rendering.
//
// A definition file is a JSON object:
//   kind      "algebra" | "hopf" | "module-algebra" | "bimodule-algebra"
//   field     "q" or "fp:<p>"
//   dim, basis            basis size and labels
//   mult      [[i, j, k, c], ...]   e_i e_j has coefficient c on e_k
//   unit      [[i, c], ...]
// Hopf algebras add
//   comult    [[i, j, k, c], ...]   Δ(e_i) has coefficient c on e_j ⊗ e_k
//   counit    [[i, c], ...]
//   antipode  [[i, j, c], ...]      S(e_i) has coefficient c on e_j
//   antipode_inverse (optional, same shape)
// Module algebras add an "action" object whose "hopf" entry is either a path
// (relative to the file) or an inline Hopf definition, with
//   act       [[h, a, b, c], ...]   e_h · e_a has coefficient c on e_b
// and bimodule algebras use "left" ([[h, a, b, c]]) and "right" ([[a, h, b, c]]).
// Coefficients are strings ("-1/2") or integers. Indices are 0-based.

#include "hopfalg/universal.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

namespace hopfalg {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, CheckReport rep) : std::runtime_error(what), report(std::move(rep)) {}
  CheckReport report;
};

using Definition = std::variant<StructureAlgebra, HopfAlgebra, LeftModuleAlgebra, BimoduleAlgebra>;

struct LoadOptions {
  std::optional<FieldSpec> field;  // overrides the file's field
  bool validate = true;
};

namespace io_detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::size_t index(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": index is not an integer");
  auto v = j.get<std::int64_t>();
  if (v < 0 || std::size_t(v) >= bound)
    throw ParseError(std::string(what) + ": index " + std::to_string(v) + " out of range");
  return std::size_t(v);
}

inline Scalar coeff(const Json& j, const FieldSpec& f, const char* what) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.embed(Scalar(j.get<std::int64_t>()));
  } catch (const FieldError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
  throw ParseError(std::string(what) + ": coefficient must be a string or an integer");
}

inline const Json& entries(const Json& j, const char* key, std::size_t arity) {
  const Json& arr = require(j, key);
  if (!arr.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  for (const auto& e : arr)
    if (!e.is_array() || e.size() != arity)
      throw ParseError(std::string("'") + key + "' entries must have " + std::to_string(arity) + " elements");
  return arr;
}

inline Tensor3 tensor(const Json& j, const char* key, std::size_t d0, std::size_t d1, std::size_t d2,
                      const FieldSpec& f) {
  Tensor3 t(d0, d1, d2);
  for (const auto& e : entries(j, key, 4)) {
    std::size_t i = index(e[0], d0, key), k = index(e[1], d1, key), l = index(e[2], d2, key);
    t.set(i, k, l, t.at(i, k, l) + coeff(e[3], f, key));
  }
  return t;
}

inline Vec vec(const Json& j, const char* key, std::size_t n, const FieldSpec& f) {
  Vec v(n);
  for (const auto& e : entries(j, key, 2)) {
    std::size_t i = index(e[0], n, key);
    v.set(i, v.at(i) + coeff(e[1], f, key));
  }
  return v;
}

/// [[i, j, c]] with S(e_i) having coefficient c on e_j.
inline Matrix linear_map(const Json& j, const char* key, std::size_t n, const FieldSpec& f) {
  Matrix m(n, n);
  for (const auto& e : entries(j, key, 3)) {
    std::size_t i = index(e[0], n, key), k = index(e[1], n, key);
    m.set(k, i, m.at(k, i) + coeff(e[2], f, key));
  }
  return m;
}

inline FieldSpec field_of(const Json& j, const LoadOptions& opt) {
  if (opt.field) return *opt.field;
  if (!j.contains("field")) return FieldSpec::rationals();
  if (!j.at("field").is_string()) throw ParseError("'field' must be a string");
  try {
    return FieldSpec::from_name(j.at("field").get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("field: ") + e.what());
  }
}

inline StructureAlgebra algebra(const Json& j, const FieldSpec& f) {
  const Json& dj = require(j, "dim");
  if (!dj.is_number_integer() || dj.get<std::int64_t>() < 1) throw ParseError("'dim' must be a positive integer");
  std::size_t n = dj.get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    if (!b.is_array() || b.size() != n) throw ParseError("'basis' must list exactly dim labels");
    for (const auto& l : b) {
      if (!l.is_string()) throw ParseError("basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  return StructureAlgebra::make(f, std::move(labels), tensor(j, "mult", n, n, n, f), vec(j, "unit", n, f));
}

inline HopfAlgebra hopf(const Json& j, const FieldSpec& f) {
  StructureAlgebra a = algebra(j, f);
  std::size_t n = a.dim;
  Tensor3 c = tensor(j, "comult", n, n, n, f);
  Vec e = vec(j, "counit", n, f);
  Matrix s = linear_map(j, "antipode", n, f);
  try {
    if (j.contains("antipode_inverse")) {
      Matrix si = linear_map(j, "antipode_inverse", n, f);
      return HopfAlgebra::make(std::move(a), std::move(c), std::move(e), std::move(s), &si);
    }
    return HopfAlgebra::make(std::move(a), std::move(c), std::move(e), std::move(s));
  } catch (const SingularMatrix& err) {
    CheckReport rep;
    rep.claim = "hopf";
    rep.run("antipode_bijective", [&](Clause& cl) { cl.fail_without_witness(err.what()); });
    throw ValidationError(std::string("antipode_bijective: ") + err.what(), std::move(rep));
  }
}

inline std::string failed_clauses(const CheckReport& rep) {
  std::string out;
  for (const auto& c : rep.clauses)
    if (c.status == Status::Fail) out += (out.empty() ? "" : ", ") + c.id;
  return out;
}

inline void validate(const CheckReport& rep, const std::string& what) {
  if (!rep.passed()) throw ValidationError(what + " fails: " + failed_clauses(rep), rep);
}

inline Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline HopfAlgebra acting_hopf(const Json& action, const FieldSpec& f, const std::filesystem::path& dir,
                               const LoadOptions& opt) {
  const Json& h = require(action, "hopf");
  Json def = h.is_string() ? read_json(dir / h.get<std::string>()) : h;
  HopfAlgebra out = hopf(def, f);
  if (opt.validate) validate(check_hopf(out), "Hopf algebra");
  return out;
}

inline Json scalar_json(const Scalar& s) { return s.str(); }

inline Json tensor_json(const Tensor3& t) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < t.dim0(); ++i)
    for (std::size_t j = 0; j < t.dim1(); ++j)
      for (const auto& [k, c] : t.slice(i, j)) arr.push_back(Json::array({i, j, k, scalar_json(c)}));
  return arr;
}

inline Json vec_json(const Vec& v) {
  Json arr = Json::array();
  for (const auto& [i, c] : v) arr.push_back(Json::array({i, scalar_json(c)}));
  return arr;
}

inline Json map_json(const Matrix& m) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (const auto& [k, c] : m.column(i)) arr.push_back(Json::array({i, k, scalar_json(c)}));
  return arr;
}

}  // namespace io_detail

/// Parses and (unless disabled) validates a definition. `dir` resolves
/// relative references to other files.
inline Definition parse_definition(const Json& j, const std::filesystem::path& dir = ".", const LoadOptions& opt = {}) {
  using namespace io_detail;
  if (!j.is_object()) throw ParseError("definition must be a JSON object");
  std::string kind = j.contains("kind") && j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
  FieldSpec f = field_of(j, opt);
  if (kind == "algebra") {
    StructureAlgebra a = algebra(j, f);
    if (opt.validate) validate(check_algebra(a), "algebra");
    return a;
  }
  if (kind == "hopf") {
    HopfAlgebra h = hopf(j, f);
    if (opt.validate) validate(check_hopf(h), "Hopf algebra");
    return h;
  }
  if (kind == "module-algebra") {
    StructureAlgebra a = algebra(j, f);
    const Json& action = require(j, "action");
    HopfAlgebra h = acting_hopf(action, f, dir, opt);
    LeftModuleAlgebra m{h, a, tensor(action, "act", h.dim(), a.dim, a.dim, f)};
    if (opt.validate) {
      validate(check_algebra(a), "algebra");
      validate(check_left_module_algebra(m), "module algebra");
    }
    return m;
  }
  if (kind == "bimodule-algebra") {
    StructureAlgebra a = algebra(j, f);
    const Json& action = require(j, "action");
    HopfAlgebra h = acting_hopf(action, f, dir, opt);
    BimoduleAlgebra b{h, a, tensor(action, "left", h.dim(), a.dim, a.dim, f),
                      tensor(action, "right", a.dim, h.dim(), a.dim, f)};
    if (opt.validate) {
      validate(check_algebra(a), "algebra");
      validate(check_bimodule_algebra(b), "bimodule algebra");
    }
    return b;
  }
  throw ParseError("unknown or missing 'kind' (expected algebra, hopf, module-algebra or bimodule-algebra)");
}

inline Definition load_definition(const std::filesystem::path& path, const LoadOptions& opt = {}) {
  return parse_definition(io_detail::read_json(path), path.parent_path().empty() ? "." : path.parent_path(), opt);
}

inline Json to_json(const StructureAlgebra& a) {
  Json j;
  j["kind"] = "algebra";
  j["field"] = a.field.name();
  j["dim"] = a.dim;
  j["basis"] = a.basis_labels;
  j["mult"] = io_detail::tensor_json(a.mult);
  j["unit"] = io_detail::vec_json(a.unit);
  return j;
}

inline Json to_json(const HopfAlgebra& h) {
  Json j = to_json(h.algebra);
  j["kind"] = "hopf";
  j["comult"] = io_detail::tensor_json(h.coalgebra.comult);
  j["counit"] = io_detail::vec_json(h.coalgebra.counit);
  j["antipode"] = io_detail::map_json(h.antipode);
  j["antipode_inverse"] = io_detail::map_json(h.antipode_inv);
  return j;
}

/// The acting Hopf algebra is written inline.
inline Json to_json(const LeftModuleAlgebra& m) {
  Json j = to_json(m.alg);
  j["kind"] = "module-algebra";
  j["action"] = {{"hopf", to_json(m.hopf)}, {"act", io_detail::tensor_json(m.act)}};
  return j;
}

inline Json to_json(const BimoduleAlgebra& b) {
  Json j = to_json(b.alg);
  j["kind"] = "bimodule-algebra";
  j["action"] = {{"hopf", to_json(b.hopf)},
                 {"left", io_detail::tensor_json(b.left_act)},
                 {"right", io_detail::tensor_json(b.right_act)}};
  return j;
}

inline Json to_json(const Definition& d) {
  return std::visit([](const auto& x) { return to_json(x); }, d);
}

/// Machine-readable report: one record per clause. `timing` is null unless
/// requested, so identical inputs give byte-identical output.
inline Json report_json(const std::vector<CheckReport>& reports, bool timing = false) {
  Json out = Json::array();
  for (const auto& rep : reports)
    for (const auto& c : rep.clauses) {
      Json w = Json::array();
      for (const auto& t : c.witnesses) w.push_back(t);
      Json rec;
      rec["claim"] = rep.claim;
      rec["clause"] = c.id;
      rec["status"] = status_name(c.status);
      rec["witnesses"] = std::move(w);
      rec["witness_count"] = c.witness_count;
      rec["note"] = c.note;
      rec["timing"] = timing ? Json(c.seconds) : Json(nullptr);
      out.push_back(std::move(rec));
    }
  return out;
}

inline std::string report_text(const CheckReport& rep, bool timing = false) {
  std::ostringstream os;
  os << "== " << rep.claim << '\n';
  if (!rep.header.empty()) {
    std::istringstream lines(rep.header);
    for (std::string line; std::getline(lines, line);) os << "   " << line << '\n';
  }
  for (const auto& c : rep.clauses) {
    os << "  " << status_name(c.status) << "  " << c.id;
    if (timing) os << "  (" << c.seconds << " s)";
    if (!c.note.empty()) os << "  -- " << c.note;
    os << '\n';
    for (const auto& w : c.witnesses) {
      os << "      witness (";
      for (std::size_t k = 0; k < w.size(); ++k) os << (k ? ", " : "") << w[k];
      os << ")\n";
    }
    if (c.witness_count > c.witnesses.size())
      os << "      ... " << (c.witness_count - c.witnesses.size()) << " more\n";
  }
  return os.str();
}

}  // namespace hopfalg
