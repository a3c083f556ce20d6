#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilcohom/complex_structure.hpp"
#include "nilcohom/lie_model.hpp"
#include "nilcohom/symplectic.hpp"

namespace nilcohom {

using nlohmann::json;

struct ModelFlags {
  bool nilpotent = false;
  bool completely_solvable = false;
  bool surface = false;
  /// True when invariant (Lie-algebra) cohomology is known to compute the
  /// cohomology of the associated compact quotient.
  bool invariant_computes_full = false;
  std::string provenance;
};

/// Parsed model file: structure equations plus optional J and omega
/// blocks. Parsing is strict -- unknown keys are rejected.
struct ModelFile {
  int schema_version = 1;
  std::string name;
  int dimension = 0;
  std::vector<Form> d;                  // one 2-form per generator
  std::optional<Matrix> J;
  std::optional<Form> omega;
  ModelFlags flags;

  LieAlgebraModel model() const { return LieAlgebraModel(dimension, name, d); }
};

namespace detail {

inline void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw ParseError(where + ": unknown field '" + key + "'");
}

inline Scalar parse_coefficient(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": coefficient must be a \"p/q\" string");
  try {
    return Scalar(parse_rational(j.get<std::string>()));
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Form parse_two_form(const json& j, int n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of coefficient triples");
  Form f(2);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string at = where + "[" + std::to_string(t) + "]";
    const json& triple = j[t];
    if (!triple.is_array() || triple.size() != 3)
      throw ParseError(at + ": expected [\"p/q\", i, j]");
    const Scalar c = parse_coefficient(triple[0], at);
    if (!triple[1].is_number_integer() || !triple[2].is_number_integer())
      throw ParseError(at + ": indices must be integers");
    const int a = triple[1].get<int>(), b = triple[2].get<int>();
    if (a >= b) throw ParseError(at + ": indices must satisfy i < j");
    if (a < 1 || b > n) throw ParseError(at + ": index out of range 1.." + std::to_string(n));
    f.add_term({a, b}, c);
  }
  return f;
}

}  // namespace detail

inline ModelFile parse_model_json(const json& root) {
  if (!root.is_object()) throw ParseError("model file: top level must be an object");
  detail::reject_unknown(root, {"schema_version", "name", "dimension", "d", "J", "omega", "flags"},
                         "model file");
  ModelFile mf;
  if (!root.contains("schema_version") || !root["schema_version"].is_number_integer())
    throw ParseError("model file: missing integer 'schema_version'");
  mf.schema_version = root["schema_version"].get<int>();
  if (mf.schema_version != 1) throw ParseError("model file: unsupported schema_version");
  if (!root.contains("name") || !root["name"].is_string())
    throw ParseError("model file: missing string 'name'");
  mf.name = root["name"].get<std::string>();
  if (!root.contains("dimension") || !root["dimension"].is_number_integer())
    throw ParseError("model file: missing integer 'dimension'");
  mf.dimension = root["dimension"].get<int>();
  if (mf.dimension <= 0) throw ParseError("model file: dimension must be positive");
  const int n = mf.dimension;

  if (!root.contains("d") || !root["d"].is_array() || static_cast<int>(root["d"].size()) != n)
    throw ParseError("model file: 'd' must list one entry per generator");
  for (int i = 0; i < n; ++i)
    mf.d.push_back(detail::parse_two_form(root["d"][i], n, "d[" + std::to_string(i) + "]"));

  if (root.contains("J")) {
    const json& jj = root["J"];
    if (!jj.is_array() || static_cast<int>(jj.size()) != n)
      throw ParseError("J: expected " + std::to_string(n) + " rows");
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
      if (!jj[r].is_array() || static_cast<int>(jj[r].size()) != n)
        throw ParseError("J: row " + std::to_string(r) + " has wrong length");
      for (int c = 0; c < n; ++c)
        m(r, c) = detail::parse_coefficient(jj[r][c], "J[" + std::to_string(r) + "]");
    }
    mf.J = std::move(m);
  }
  if (root.contains("omega"))
    mf.omega = detail::parse_two_form(root["omega"], n, "omega");

  if (root.contains("flags")) {
    const json& fl = root["flags"];
    if (!fl.is_object()) throw ParseError("flags: expected an object");
    detail::reject_unknown(
        fl, {"nilpotent", "completely_solvable", "surface", "invariant_computes_full", "provenance"},
        "flags");
    auto get_bool = [&](const char* key) {
      if (!fl.contains(key)) return false;
      if (!fl[key].is_boolean()) throw ParseError(std::string("flags.") + key + ": expected bool");
      return fl[key].get<bool>();
    };
    mf.flags.nilpotent = get_bool("nilpotent");
    mf.flags.completely_solvable = get_bool("completely_solvable");
    mf.flags.surface = get_bool("surface");
    mf.flags.invariant_computes_full = get_bool("invariant_computes_full");
    if (fl.contains("provenance")) {
      if (!fl["provenance"].is_string()) throw ParseError("flags.provenance: expected string");
      mf.flags.provenance = fl["provenance"].get<std::string>();
    }
  }

  // validate up front so a bad file never reaches the math
  const Verdict v = mf.model().validate_jacobi();
  if (!v.ok) throw ParseError("model '" + mf.name + "': " + v.message);
  return mf;
}

inline ModelFile parse_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file: " + path);
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return parse_model_json(root);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// ---- serialization --------------------------------------------------

inline json serialize_two_form(const Form& f) {
  json out = json::array();
  for (const auto& [I, c] : f.terms())
    out.push_back(json::array({rational_to_string(c.re), I[0], I[1]}));
  return out;
}

inline json serialize_model(const ModelFile& mf) {
  json root;
  root["schema_version"] = mf.schema_version;
  root["name"] = mf.name;
  root["dimension"] = mf.dimension;
  json d = json::array();
  for (const auto& f : mf.d) d.push_back(serialize_two_form(f));
  root["d"] = std::move(d);
  if (mf.J) {
    json rows = json::array();
    for (int r = 0; r < mf.J->rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < mf.J->cols(); ++c) row.push_back(rational_to_string((*mf.J)(r, c).re));
      rows.push_back(std::move(row));
    }
    root["J"] = std::move(rows);
  }
  if (mf.omega) root["omega"] = serialize_two_form(*mf.omega);
  json fl;
  fl["nilpotent"] = mf.flags.nilpotent;
  fl["completely_solvable"] = mf.flags.completely_solvable;
  fl["surface"] = mf.flags.surface;
  fl["invariant_computes_full"] = mf.flags.invariant_computes_full;
  fl["provenance"] = mf.flags.provenance;
  root["flags"] = std::move(fl);
  return root;
}

// ---- shorthand ------------------------------------------------------

/// Converts the single-digit structure-equation shorthand, e.g.
/// "0,0,0,12" or "(-13, 23, 0, 0)", into explicit equations. Only valid
/// for dimension <= 9; the sum syntax "12+34-56" is accepted.
inline std::vector<Form> parse_shorthand(const std::string& text, int n) {
  if (n > 9) throw ParseError("shorthand is ambiguous for dimension > 9");
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ' ') continue;
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (static_cast<int>(parts.size()) != n)
    throw ParseError("shorthand: expected " + std::to_string(n) + " components");
  std::vector<Form> out;
  for (const std::string& comp : parts) {
    Form f(2);
    if (comp != "0") {
      int sign = 1;
      std::string digits;
      auto flush = [&]() {
        if (digits.empty()) return;
        if (digits.size() != 2) throw ParseError("shorthand: expected two-digit monomials");
        const int a = digits[0] - '0', b = digits[1] - '0';
        if (a < 1 || b > n || a >= b) throw ParseError("shorthand: bad monomial " + digits);
        f.add_term({a, b}, Scalar(sign));
        digits.clear();
      };
      for (char ch : comp) {
        if (ch == '+' || ch == '-') {
          flush();
          sign = ch == '-' ? -1 : 1;
        } else if (ch >= '0' && ch <= '9') {
          digits.push_back(ch);
        } else {
          throw ParseError(std::string("shorthand: unexpected character '") + ch + "'");
        }
      }
      flush();
    }
    out.push_back(std::move(f));
  }
  return out;
}

// ---- bundled-model registry -----------------------------------------

inline std::string bundled_model_dir() {
#ifdef NILCOHOM_MODELS_DIR
  return NILCOHOM_MODELS_DIR;
#else
  return "models";
#endif
}

/// Resolves a model argument: an existing path wins, otherwise the name
/// is looked up in the bundled model directory.
inline ModelFile resolve_model(const std::string& arg) {
  if (std::ifstream(arg).good()) return parse_model(arg);
  const std::string bundled = bundled_model_dir() + "/" + arg + ".json";
  if (std::ifstream(bundled).good()) return parse_model(bundled);
  throw ParseError("no such model file or bundled model: " + arg);
}

}  // namespace nilcohom
