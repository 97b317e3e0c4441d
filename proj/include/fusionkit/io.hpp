#pragma once

// JSON files for rings and modular data, and a deterministic JSON writer.
//
// Ring file:    {"schema_version": 1, "rank": r, "labels": [...], "dual": [...],
//                "N": [[i, j, k, value], ...]}
// Modular file: {"schema_version": 1, "rank": r, "labels": [...], "dual": [...],
//                "S": [[[re, im], ...], ...], "T": [[re, im], ...]}
// "labels" is optional in both. Unknown keys are rejected.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "fusionkit/errors.hpp"
#include "fusionkit/modular.hpp"
#include "fusionkit/ring.hpp"

namespace fusionkit {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// The document is not valid JSON or does not match the file schema. The
/// message names the offending line or field.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t n = 0; n < byte && n < text.size(); ++n) {
    if (text[n] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return concat("line ", line, ", column ", col);
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("parse error at"); p != std::string::npos) msg = msg.substr(p);
    throw SchemaError(line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }
}

inline void require_keys(const Json& doc, const std::set<std::string>& required,
                         const std::set<std::string>& optional) {
  if (!doc.is_object()) throw SchemaError("top level: expected an object");
  for (const auto& key : required)
    if (!doc.contains(key)) throw SchemaError("missing field '" + key + "'");
  for (const auto& [key, value] : doc.items())
    if (!required.contains(key) && !optional.contains(key))
      throw SchemaError("unknown field '" + key + "'");
  const auto& v = doc.at("schema_version");
  if (!v.is_number_integer() || v.get<long long>() != kSchemaVersion)
    throw SchemaError(concat("field 'schema_version': expected ", kSchemaVersion));
}

inline long long get_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError("field '" + where + "': expected an integer");
  return v.get<long long>();
}

inline int get_index(const Json& v, const std::string& where) {
  const auto n = get_int(v, where);
  if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max())
    throw SchemaError("field '" + where + "': integer out of range");
  return static_cast<int>(n);
}

inline double get_real(const Json& v, const std::string& where) {
  if (!v.is_number()) throw SchemaError("field '" + where + "': expected a number");
  return v.get<double>();
}

inline const Json& get_array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError("field '" + where + "': expected an array");
  return v;
}

inline std::vector<int> get_dual(const Json& doc, int rank) {
  const auto& d = get_array(doc.at("dual"), "dual");
  if (static_cast<int>(d.size()) != rank)
    throw SchemaError(concat("field 'dual': expected ", rank, " entries, found ", d.size()));
  std::vector<int> out;
  for (std::size_t n = 0; n < d.size(); ++n) out.push_back(get_index(d[n], concat("dual[", n, "]")));
  return out;
}

inline std::vector<std::string> get_labels(const Json& doc, int rank) {
  std::vector<std::string> out;
  if (!doc.contains("labels")) return out;
  const auto& l = get_array(doc.at("labels"), "labels");
  if (static_cast<int>(l.size()) != rank)
    throw SchemaError(concat("field 'labels': expected ", rank, " entries, found ", l.size()));
  for (std::size_t n = 0; n < l.size(); ++n) {
    if (!l[n].is_string()) throw SchemaError(concat("field 'labels[", n, "]': expected a string"));
    out.push_back(l[n].get<std::string>());
  }
  return out;
}

inline int get_rank(const Json& doc) {
  const int rank = get_index(doc.at("rank"), "rank");
  if (rank <= 0) throw SchemaError("field 'rank': must be positive");
  return rank;
}

inline Complex get_complex(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw SchemaError("field '" + where + "': expected [re, im]");
  return {get_real(v[0], where + "[0]"), get_real(v[1], where + "[1]")};
}

}  // namespace detail

inline bool is_modular_document(const Json& doc) { return doc.is_object() && doc.contains("S"); }

/// Structural problems (bad indices, negative constants) surface as
/// StructuralError; the axioms are left to validate_ring.
inline FusionRing ring_from_json(const Json& doc) {
  detail::require_keys(doc, {"schema_version", "rank", "dual", "N"}, {"labels"});
  const int rank = detail::get_rank(doc);
  auto dual = detail::get_dual(doc, rank);
  auto labels = detail::get_labels(doc, rank);
  const auto& n = detail::get_array(doc.at("N"), "N");
  std::vector<Entry> entries;
  for (std::size_t t = 0; t < n.size(); ++t) {
    const auto where = detail::concat("N[", t, "]");
    if (!n[t].is_array() || n[t].size() != 4)
      throw SchemaError("field '" + where + "': expected [i, j, k, value]");
    entries.push_back({detail::get_index(n[t][0], where + "[0]"), detail::get_index(n[t][1], where + "[1]"),
                       detail::get_index(n[t][2], where + "[2]"), detail::get_int(n[t][3], where + "[3]")});
  }
  return FusionRing::make(rank, std::move(dual), std::move(entries), std::move(labels));
}

inline ModularData modular_from_json(const Json& doc, double tolerance = kModularTolerance) {
  detail::require_keys(doc, {"schema_version", "rank", "dual", "S", "T"}, {"labels"});
  const int rank = detail::get_rank(doc);
  auto dual = detail::get_dual(doc, rank);
  auto labels = detail::get_labels(doc, rank);
  const auto& s = detail::get_array(doc.at("S"), "S");
  if (static_cast<int>(s.size()) != rank)
    throw SchemaError(detail::concat("field 'S': expected ", rank, " rows, found ", s.size()));
  std::vector<Complex> entries;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto row = detail::concat("S[", i, "]");
    detail::get_array(s[i], row);
    if (static_cast<int>(s[i].size()) != rank)
      throw SchemaError(detail::concat("field '", row, "': S must be square (", rank, " columns expected, found ",
                                       s[i].size(), ")"));
    for (std::size_t j = 0; j < s[i].size(); ++j)
      entries.push_back(detail::get_complex(s[i][j], detail::concat(row, "[", j, "]")));
  }
  const auto& t = detail::get_array(doc.at("T"), "T");
  if (static_cast<int>(t.size()) != rank)
    throw SchemaError(detail::concat("field 'T': expected ", rank, " entries, found ", t.size()));
  std::vector<Complex> theta;
  for (std::size_t i = 0; i < t.size(); ++i)
    theta.push_back(detail::get_complex(t[i], detail::concat("T[", i, "]")));
  return ModularData::make(rank, std::move(dual), std::move(entries), std::move(theta), std::move(labels),
                           tolerance);
}

inline Json to_json(const FusionRing& ring) {
  Json n = Json::array();
  for (const auto& e : ring.entries()) n.push_back({e.i, e.j, e.k, e.value});
  return {{"schema_version", kSchemaVersion},
          {"rank", ring.rank()},
          {"labels", ring.labels()},
          {"dual", ring.duals()},
          {"N", std::move(n)}};
}

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const ModularData& md) {
  Json s = Json::array();
  for (int i = 0; i < md.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < md.rank(); ++j) row.push_back(complex_json(md.s(i, j)));
    s.push_back(std::move(row));
  }
  Json t = Json::array();
  for (int i = 0; i < md.rank(); ++i) t.push_back(complex_json(md.theta(i)));
  return {{"schema_version", kSchemaVersion},
          {"rank", md.rank()},
          {"labels", md.labels()},
          {"dual", md.duals()},
          {"S", std::move(s)},
          {"T", std::move(t)}};
}

inline std::string read_stream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  return read_stream(in);
}

inline Json parse_document(const std::string& text) { return detail::parse_text(text); }

inline FusionRing parse_ring(std::istream& in) { return ring_from_json(parse_document(read_stream(in))); }
inline ModularData parse_modular(std::istream& in, double tolerance = kModularTolerance) {
  return modular_from_json(parse_document(read_stream(in)), tolerance);
}

// ---------------------------------------------------------------------------
// Deterministic output: object keys in sorted order (nlohmann's default map),
// doubles with 17 significant digits, two-space indent.

namespace detail {

inline void emit(const Json& v, std::string& out, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        emit(value, out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t n = 0; n < v.size(); ++n) {
          if (n) out += ", ";
          emit(v[n], out, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t n = 0; n < v.size(); ++n) {
        if (n) out += ",\n";
        out += pad;
        emit(v[n], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      std::string s = buf;
      if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
      out += s;
      return;
    }
    default:
      out += v.dump();
  }
}

inline void emit_text(const Json& v, std::string& out, int depth, const std::string& key) {
  const std::string pad(2 * depth, ' ');
  const std::string prefix = key.empty() ? pad : pad + key + ":";
  if (v.is_object()) {
    if (!key.empty()) out += prefix + "\n";
    for (const auto& [k, value] : v.items()) emit_text(value, out, key.empty() ? depth : depth + 1, k);
    return;
  }
  if (v.is_array() && !std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
    out += prefix + "\n";
    for (std::size_t n = 0; n < v.size(); ++n)
      emit_text(v[n], out, depth + 1, concat("[", n, "]"));
    return;
  }
  std::string body;
  emit(v, body, 0);
  out += prefix + (key.empty() ? "" : " ") + body + "\n";
}

}  // namespace detail

inline std::string to_json_string(const Json& v) {
  std::string out;
  detail::emit(v, out, 0);
  out += "\n";
  return out;
}

/// Indented "key: value" lines; same key order and number format as the JSON.
inline std::string to_text_string(const Json& v) {
  std::string out;
  detail::emit_text(v, out, 0, "");
  return out;
}

}  // namespace fusionkit
