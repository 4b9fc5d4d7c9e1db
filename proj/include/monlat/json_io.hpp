#pragma once

// JSON encodings of lattices, isometries, Mukai vectors and morphism words.
// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input. Objects use
// sorted keys so output is byte-stable.

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "monlat/groupoid.hpp"

namespace monlat {

using Json = nlohmann::json;

// --- scalars, vectors, matrices ---------------------------------------------

inline Json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

inline Int int_from_json(const Json& j, const std::string& what = "integer") {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<std::int64_t>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw InputError(what + ": expected an integer, got " + j.dump());
}

inline Json rat_to_json(const Rat& q) { return Json(to_string(q)); }

inline Json vector_to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

inline IntVector vector_from_json(const Json& j, const std::string& what = "vector") {
  if (!j.is_array()) throw InputError(what + ": expected an array");
  IntVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(int_from_json(x, what));
  return v;
}

inline Json matrix_to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
  return a;
}

inline IntMatrix matrix_from_json(const Json& j, const std::string& what = "matrix") {
  if (!j.is_array() || j.empty()) throw InputError(what + ": expected a non-empty array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, what + " row"));
  const std::size_t n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw InputError(what + ": ragged rows");
  IntMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) m(i, c) = rows[i][c];
  return m;
}

// --- lattices ----------------------------------------------------------------

/// Built-in names: those of lattice_from_name plus "H2" and "v_perp:<m>:<k>".
inline LatticePtr resolve_lattice(const std::string& name) {
  if (name == "mukai") return mukai_lattice_ptr();
  if (name == "H2") return h2_lattice_ptr();
  if (name.rfind("v_perp:", 0) == 0) {
    const auto rest = name.substr(7);
    const auto colon = rest.find(':');
    Int m, k;
    if (colon == std::string::npos || m.set_str(rest.substr(0, colon), 10) != 0 ||
        k.set_str(rest.substr(colon + 1), 10) != 0)
      throw InputError("bad lattice name '" + name + "', expected v_perp:<m>:<k>");
    if (m < 1 || k < 1) throw InputError("v_perp needs m, k >= 1");
    return MonodromyContext(m, k).lattice();
  }
  return share(lattice_from_name(name));
}

inline Json lattice_to_json(const IntegralLattice& l) { return Json{{"name", l.name()}, {"gram", matrix_to_json(l.gram())}}; }

/// A built-in name (string or {"name"} without gram) or an inline {"name", "gram"} object.
inline LatticePtr lattice_from_json(const Json& j) {
  if (j.is_string()) return resolve_lattice(j.get<std::string>());
  if (!j.is_object()) throw InputError("lattice: expected a name or an object with \"gram\"");
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  if (!j.contains("gram")) {
    if (name.empty()) throw InputError("lattice: missing \"gram\"");
    return resolve_lattice(name);
  }
  return share(IntegralLattice(matrix_from_json(j["gram"], "gram"), name));
}

/// Name reference when the name resolves to a built-in with the same Gram matrix.
inline Json lattice_ref_to_json(const IntegralLattice& l) {
  if (!l.name().empty()) {
    try {
      if (*resolve_lattice(l.name()) == l) return Json(l.name());
    } catch (const InputError&) {
    }
  }
  return lattice_to_json(l);
}

// --- isometries ----------------------------------------------------------------

inline Json isometry_to_json(const Isometry& g) {
  return Json{{"lattice", lattice_ref_to_json(*g.lattice())}, {"matrix", matrix_to_json(g.matrix())}};
}

inline Isometry isometry_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lattice") || !j.contains("matrix"))
    throw InputError("isometry: expected {\"lattice\", \"matrix\"}");
  return check_isometry(lattice_from_json(j["lattice"]), matrix_from_json(j["matrix"]));
}

// --- Mukai vectors -------------------------------------------------------------

inline Json mukai_to_json(const MukaiVector& v) {
  return Json{{"r", int_to_json(v.r)}, {"xi", vector_to_json(v.xi)}, {"a", int_to_json(v.a)}};
}

inline MukaiVector mukai_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("a"))
    throw InputError("Mukai vector: expected {\"r\", \"xi\", \"a\"}");
  IntVector xi = j.contains("xi") ? vector_from_json(j["xi"], "xi") : h2_zero();
  return MukaiVector(int_from_json(j["r"], "r"), std::move(xi), int_from_json(j["a"], "a"));
}

// --- words ---------------------------------------------------------------------

inline Json step_to_json(const Step& s) {
  Json j{{"op", to_string(s.kind)}, {"inverted", s.inverted}, {"asserted", s.asserted}};
  if (s.kind == StepKind::tensor) j["c"] = vector_to_json(s.c);
  if (s.kind == StepKind::deform) j["matrix"] = matrix_to_json(s.matrix);
  return j;
}

inline Step step_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string()) throw InputError("word step: expected {\"op\": ...}");
  Step s;
  s.kind = step_kind_from_string(j["op"].get<std::string>());
  if (j.contains("inverted")) s.inverted = j["inverted"].get<bool>();
  if (j.contains("asserted")) s.asserted = j["asserted"].get<bool>();
  if (s.kind == StepKind::tensor) {
    if (!j.contains("c")) throw InputError("tensor step needs \"c\"");
    s.c = vector_from_json(j["c"], "c");
    if (s.c.size() != kH2Rank) throw InputError("tensor class must have 22 coordinates");
  }
  if (s.kind == StepKind::deform) {
    if (!j.contains("matrix")) throw InputError("deform step needs \"matrix\"");
    s.matrix = matrix_from_json(j["matrix"], "deform matrix");
  }
  return s;
}

inline Json word_to_json(const MorphismWord& w) {
  Json steps = Json::array();
  for (const auto& s : w.steps) steps.push_back(step_to_json(s));
  return Json{{"source", mukai_to_json(w.source)}, {"steps", steps}};
}

inline MorphismWord word_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("source")) throw InputError("word: expected {\"source\", \"steps\"}");
  MorphismWord w{mukai_from_json(j["source"]), {}};
  if (j.contains("steps")) {
    if (!j["steps"].is_array()) throw InputError("word: \"steps\" must be an array");
    for (const auto& s : j["steps"]) w.steps.push_back(step_from_json(s));
  }
  return w;
}

// --- files -----------------------------------------------------------------------

/// Parses JSON text, mapping library exceptions to InputError with diagnostics.
inline Json parse_json(const std::string& text, const std::string& origin = "<input>") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

/// Runs a decoder, turning nlohmann type errors into InputError.
template <class F>
auto decode(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace monlat
