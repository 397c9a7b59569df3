#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include "json_io.hpp"

namespace orbi {

inline Json toml_node_to_json(const toml::node& node) {
  if (auto t = node.as_table()) {
    Json out = Json::object();
    for (const auto& [key, value] : *t) out[std::string(key.str())] = toml_node_to_json(value);
    return out;
  }
  if (auto a = node.as_array()) {
    Json out = Json::array();
    for (const auto& value : *a) out.push_back(toml_node_to_json(value));
    return out;
  }
  if (auto v = node.as_integer()) return v->get();
  if (auto v = node.as_floating_point()) return v->get();
  if (auto v = node.as_boolean()) return v->get();
  if (auto v = node.as_string()) return v->get();
  fail(ErrorKind::Schema, "dates and times are not valid config values");
}

inline Json parse_toml_config(const std::string& text) {
  try {
    return toml_node_to_json(toml::parse(text));
  } catch (const toml::parse_error& e) {
    fail(ErrorKind::Schema, std::string("malformed TOML: ") + std::string(e.description()));
  }
}

inline Json parse_json_config(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
  }
}

/// Reads a config from a file ("-" for stdin). Files ending in .toml are
/// TOML; anything else is JSON, with TOML as the fallback for stdin.
inline Json load_config(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Schema, "cannot read config file " + path);
    buffer << in.rdbuf();
  }
  const std::string text = buffer.str();
  const bool toml_file = path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0;
  if (toml_file) return parse_toml_config(text);
  if (path == "-" && !Json::accept(text)) return parse_toml_config(text);
  return parse_json_config(text);
}

}  // namespace orbi
