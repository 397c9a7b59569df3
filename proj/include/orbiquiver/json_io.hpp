#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orbifold.hpp"
#include "path_algebra.hpp"

namespace orbi {

using Json = nlohmann::json;

// Reading. Every shape error raises SchemaError; well-formed documents that
// name unknown vertices or arrows raise InvalidInput.

inline const Json& require_field(const Json& j, const std::string& key) {
  if (!j.is_object()) fail(ErrorKind::Schema, "expected an object holding \"" + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::Schema, "missing field \"" + key + "\"");
  return *it;
}

inline long read_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(ErrorKind::Schema, what + " must be an integer");
  return j.get<long>();
}

inline std::string read_id(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  fail(ErrorKind::Schema, what + " must be a string or an integer");
}

inline std::vector<long> read_int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorKind::Schema, what + " must be an array");
  std::vector<long> out;
  for (const auto& x : j) out.push_back(read_int(x, what + " entry"));
  return out;
}

/// "inf", "p/q", a decimal string, or a JSON integer.
inline ProjPoint read_point(const Json& j) {
  if (j.is_number_integer()) return ProjPoint::finite(j.get<long>());
  if (!j.is_string()) fail(ErrorKind::Schema, "a point must be a string or an integer");
  return ProjPoint::parse(j.get<std::string>());
}

inline std::vector<ProjPoint> read_point_list(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Schema, "lambda must be an array of points");
  std::vector<ProjPoint> out;
  for (const auto& x : j) out.push_back(read_point(x));
  return out;
}

/// {point: multiplicity}
inline EffDivisor read_divisor(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::Schema, "a divisor must be an object {point: multiplicity}");
  EffDivisor d;
  for (const auto& [key, m] : j.items()) {
    const long mult = read_int(m, "multiplicity");
    if (mult < 0) fail(ErrorKind::Schema, "multiplicities must be non-negative");
    d.add(ProjPoint::parse(key), static_cast<int>(mult));
  }
  return d;
}

/// {"vertices": [...], "arrows": [{"id", "src", "tgt"}]}
inline Quiver read_quiver(const Json& j) {
  const Json& vs = require_field(j, "vertices");
  const Json& as = require_field(j, "arrows");
  if (!vs.is_array() || !as.is_array()) fail(ErrorKind::Schema, "vertices and arrows must be arrays");
  std::vector<std::string> vertices;
  for (const auto& v : vs) vertices.push_back(read_id(v, "vertex id"));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& a : as)
    arrows.emplace_back(read_id(require_field(a, "id"), "arrow id"), read_id(require_field(a, "src"), "arrow source"),
                        read_id(require_field(a, "tgt"), "arrow target"));
  return Quiver(std::move(vertices), std::move(arrows));
}

/// The quiver schema plus an optional {"labels": {arrowId: divisor}}.
inline LabeledQuiver read_labeled_quiver(const Json& j) {
  Quiver q = read_quiver(j);
  std::map<std::string, EffDivisor> labels;
  if (j.contains("labels")) {
    const Json& ls = j.at("labels");
    if (!ls.is_object()) fail(ErrorKind::Schema, "labels must be an object");
    for (const auto& [id, d] : ls.items()) {
      if (!q.has_arrow(id)) fail(ErrorKind::InvalidInput, "label for unknown arrow " + id);
      labels[id] = read_divisor(d);
    }
  }
  return LabeledQuiver::with_labels(std::move(q), labels);
}

/// {"m": int, "a": [ints]}; the result is in normal form.
inline PicElement read_pic(const OrbifoldData& d, const Json& j) {
  const long m = read_int(require_field(j, "m"), "m");
  return pic_normal_form(d, m, read_int_list(require_field(j, "a"), "a"));
}

/// {"r": [...], "lambda": [...]}
inline OrbifoldData read_orbifold(const Json& j) {
  OrbifoldData d;
  for (long ri : read_int_list(require_field(j, "r"), "r")) d.r.push_back(static_cast<int>(ri));
  d.lambda = read_point_list(require_field(j, "lambda"));
  validate_orbifold(d);
  return d;
}

// Writing. Object keys come out sorted, so output bytes depend only on values.

inline Json to_json(const ProjPoint& p) { return p.to_string(); }

inline Json to_json(const EffDivisor& d) {
  Json j = Json::object();
  for (const auto& [p, m] : d.entries()) j[p.to_string()] = m;
  return j;
}

inline Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"id", a.id}, {"src", q.vertex_id(a.source)}, {"tgt", q.vertex_id(a.target)}});
  return {{"vertices", q.vertex_ids()}, {"arrows", arrows}};
}

inline Json to_json(const LabeledQuiver& lq) {
  Json j = to_json(lq.quiver());
  Json labels = Json::object();
  for (std::size_t a = 0; a < lq.quiver().num_arrows(); ++a)
    if (!lq.label(a).is_zero()) labels[lq.quiver().arrow(a).id] = to_json(lq.label(a));
  j["labels"] = labels;
  return j;
}

inline Json to_json(const PicElement& p) { return {{"m", p.m}, {"a", p.a}}; }

inline Json to_json(const OrbifoldData& d) {
  Json lambda = Json::array();
  for (const auto& p : d.lambda) lambda.push_back(to_json(p));
  return {{"r", d.r}, {"lambda", lambda}};
}

inline Json path_json(const Quiver& q, const Path& p) {
  Json arrows = Json::array();
  for (auto a : p.arrows) arrows.push_back(q.arrow(a).id);
  return {{"path", path_to_string(q, p)},
          {"arrows", arrows},
          {"source", q.vertex_id(p.source())},
          {"target", q.vertex_id(p.target(q))}};
}

}  // namespace orbi
