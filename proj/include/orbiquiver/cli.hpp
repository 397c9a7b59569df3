#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "orbifold.hpp"
#include "random_quiver.hpp"
#include "resolution.hpp"
#include "stability.hpp"

namespace orbi {

struct RunOptions {
  std::uint64_t seed = 0;
  int max_twist = 2;
};

/// JSON document for stdout plus a human-readable rendering.
struct Report {
  Json json;
  std::string text;
};

/// Process exit code for an error kind.
inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Schema:
    case ErrorKind::InvalidInput:
    case ErrorKind::InvalidPath:
    case ErrorKind::DimError:
      return 2;
    case ErrorKind::InternalError:
      return 4;
    default:
      return 3;
  }
}

inline Json error_json(const Error& e) { return {{"error", to_string(e.kind())}, {"message", e.message()}}; }

namespace cli_detail {

inline std::string local_element_string(const Quiver& q, const LocalElement& x) {
  std::string out;
  for (const auto& [p, c] : x) {
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string path = path_to_string(q, p);
    if (c == Poly(1)) out += path;
    else if (c == Poly(-1)) out += "-" + path;
    else out += "(" + c.to_string() + ")*" + path;
  }
  return out.empty() ? "0" : out;
}

inline Json module_json(const Quiver& q, const FreeModule& m) {
  Json out = Json::array();
  for (const auto& s : m.summands) out.push_back({{"vertex", q.vertex_id(s.vertex)}, {"twist", s.twist}});
  return out;
}

inline Json classes_json(const std::vector<std::vector<std::size_t>>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) {
    Json cls = Json::array();
    for (auto i : c) cls.push_back(i + 1);
    out.push_back(cls);
  }
  return out;
}

inline std::vector<long> read_chi(const Json& config) { return read_int_list(require_field(config, "chi"), "chi"); }

inline std::size_t read_vertex(const Quiver& q, const Json& config) {
  return q.vertex(read_id(require_field(config, "vertex"), "vertex"));
}

inline Report quiver_check(const Json& config, const RunOptions&) {
  const LabeledQuiver lq = read_labeled_quiver(require_field(config, "quiver"));
  const Quiver& q = lq.quiver();
  Json cycles = Json::array();
  std::string text;
  for (const auto& c : lq.simple_cycles()) {
    const Path p = c.as_path(q);
    Json entry = path_json(q, p);
    entry["label"] = to_json(cycle_label(lq, c));
    entry["reduced"] = is_reduced(cycle_label(lq, c));
    cycles.push_back(entry);
    text += "cycle " + path_to_string(q, p) + " label " + cycle_label(lq, c).to_string() + "\n";
  }
  Json j = {{"vertices", q.num_vertices()},
            {"arrows", q.num_arrows()},
            {"simple_cycles", cycles},
            {"transverse", lq.transverse()},
            {"reduced", is_reduced_labeling(lq)}};
  text += std::string("transverse: ") + (lq.transverse() ? "yes" : "no") +
          ", reduced: " + (is_reduced_labeling(lq) ? "yes" : "no") + "\n";
  return {j, text};
}

inline Report basis(const Json& config, const RunOptions&) {
  const LabeledQuiver lq = read_labeled_quiver(require_field(config, "quiver"));
  lq.require_transverse();
  const Quiver& q = lq.quiver();
  Json paths = Json::array();
  std::string text;
  for (const auto& p : lq.acyclic_paths()) {
    Json entry = path_json(q, p);
    entry["label"] = to_json(path_label(lq, p));
    paths.push_back(entry);
    text += path_to_string(q, p) + "  O(-" + path_label(lq, p).to_string() + ")\n";
  }
  const auto rank = algebra_rank(lq);
  text += "rank " + std::to_string(rank) + "\n";
  return {{{"acyclic_paths", paths}, {"count", lq.acyclic_paths().size()}, {"rank", rank}}, text};
}

inline Report matrix(const Json& config, const RunOptions&) {
  const LabeledQuiver lq = read_labeled_quiver(require_field(config, "quiver"));
  const DivisorMatrix m = matrix_presentation(lq);
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& entry : row) {
      Json e = Json::array();
      for (const auto& d : entry) e.push_back(to_json(d));
      r.push_back(e);
    }
    rows.push_back(r);
  }
  const std::string text = matrix_to_string(m);
  return {{{"vertices", lq.quiver().vertex_ids()}, {"matrix", rows}, {"text", text}}, text};
}

inline Report hom_table(const Json& config, const RunOptions& opt) {
  const LabeledQuiver lq = read_labeled_quiver(require_field(config, "quiver"));
  lq.require_transverse();
  const Quiver& q = lq.quiver();
  Json entries = Json::array();
  std::string text;
  for (std::size_t w = 0; w < q.num_vertices(); ++w)
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
      for (int k = -opt.max_twist; k <= opt.max_twist; ++k) {
        const int h0 = graded_hom_dim(lq, {w, 0}, {v, k});
        const int h1 = graded_ext1_dim(lq, {w, 0}, {v, k});
        entries.push_back({{"from", q.vertex_id(w)}, {"to", q.vertex_id(v)}, {"twist", k}, {"dim", h0}, {"ext1", h1}});
        text += "(" + q.vertex_id(w) + ",0) -> (" + q.vertex_id(v) + "," + std::to_string(k) +
                "): hom " + std::to_string(h0) + ", ext1 " + std::to_string(h1) + "\n";
      }
  return {{{"entries", entries}, {"max_twist", opt.max_twist}}, text};
}

inline Report resolve(const Json& config, const RunOptions&) {
  const LabeledQuiver lq = read_labeled_quiver(require_field(config, "quiver"));
  const std::size_t v = read_vertex(lq.quiver(), config);
  const ProjPoint p = read_point(require_field(config, "point"));
  const ResolutionReport rep = pd_simple(lq, v, p);
  const Quiver& lqq = rep.local.quiver.quiver();

  Json modules = Json::array();
  for (const auto& m : rep.complex.modules) modules.push_back(module_json(lqq, m));
  Json differentials = Json::array();
  std::string text = "S_" + lq.quiver().vertex_id(v) + " at " + p.to_string() + "\n";
  for (std::size_t i = 0; i < rep.complex.blocks.size(); ++i) {
    Json rows = Json::array();
    text += "d" + std::to_string(i + 1) + ":\n";
    for (const auto& row : rep.complex.blocks[i]) {
      Json r = Json::array();
      std::string line;
      for (const auto& entry : row) {
        r.push_back(local_element_string(lqq, entry));
        line += (line.empty() ? "" : ", ") + local_element_string(lqq, entry);
      }
      rows.push_back(r);
      text += "  [" + line + "]\n";
    }
    differentials.push_back(rows);
  }
  Json ext = Json::array();
  for (const auto& [key, dim] : rep.ext_dims) ext.push_back({{"vertex", key.first}, {"degree", key.second}, {"dim", dim}});
  text += "pd " + std::to_string(rep.pd) + "\n";
  return {{{"vertex", lq.quiver().vertex_id(v)},
           {"point", to_json(p)},
           {"local_quiver", to_json(rep.local.quiver)},
           {"local_vertex", lqq.vertex_id(rep.local_vertex)},
           {"complex", {{"modules", modules}, {"differentials", differentials}}},
           {"exact", rep.exact},
           {"pd", rep.pd},
           {"ext", ext}},
          text};
}

inline Json certification_table(const LabeledQuiver& lq, const CertificationReport& rep, std::string& text) {
  Json table = Json::array();
  for (const auto& row : rep.table) {
    const std::string v = lq.quiver().vertex_id(row.vertex);
    table.push_back({{"vertex", v}, {"point", to_json(row.point)}, {"pd", row.pd}});
    text += "pd S_" + v + " at " + row.point.to_string() + " = " + std::to_string(row.pd) + "\n";
  }
  return table;
}

inline Report certify(const Json& config, const RunOptions& opt) {
  std::string text;
  if (config.contains("random")) {
    const Json& r = config.at("random");
    const long count = read_int(require_field(r, "count"), "count");
    RandomQuiverOptions ro;
    if (r.contains("max_vertices")) ro.max_vertices = static_cast<std::size_t>(read_int(r.at("max_vertices"), "max_vertices"));
    if (r.contains("max_label_degree")) ro.max_label_degree = static_cast<int>(read_int(r.at("max_label_degree"), "max_label_degree"));
    if (count < 0 || ro.max_vertices < 1) fail(ErrorKind::Schema, "count and max_vertices must be positive");
    SplitMix64 rng(opt.seed);
    Json instances = Json::array();
    int max_pd = 0;
    for (long i = 0; i < count; ++i) {
      const LabeledQuiver lq = random_reduced_quiver(rng, ro);
      const CertificationReport rep = certify_hd(lq);
      max_pd = std::max(max_pd, rep.max_pd);
      instances.push_back({{"index", i}, {"quiver", to_json(lq)}, {"max_pd", rep.max_pd}});
      text += "instance " + std::to_string(i) + ": max pd " + std::to_string(rep.max_pd) + "\n";
    }
    return {{{"seed", opt.seed}, {"instances", instances}, {"max_pd", max_pd}, {"hd_at_most_two", max_pd <= 2}}, text};
  }
  const LabeledQuiver lq = read_labeled_quiver(require_field(config, "quiver"));
  const CertificationReport rep = certify_hd(lq);
  Json table = certification_table(lq, rep, text);
  text += "max pd " + std::to_string(rep.max_pd) + "\n";
  return {{{"quiver", to_json(lq)}, {"table", table}, {"max_pd", rep.max_pd}, {"hd_at_most_two", rep.satisfied}}, text};
}

inline Report sdim(const Json& config, const RunOptions&) {
  const OrbifoldData d = read_orbifold(config);
  const PicElement deg = read_pic(d, require_field(config, "degree"));
  const long dim = s_dim(d, deg);
  return {{{"dim", dim}}, "dim S_" + pic_to_string(deg) + " = " + std::to_string(dim) + "\n"};
}

inline Report exccol(const Json& config, const RunOptions&) {
  const OrbifoldData d = read_orbifold(config);
  const ExceptionalCollectionReport rep = verify_exceptional_collection(d);
  Json objects = Json::array();
  for (const auto& o : rep.objects) objects.push_back({{"name", o.name}, {"degree", to_json(o.degree)}});
  Json pairs = Json::array();
  std::string text;
  for (const auto& p : rep.pairs) {
    pairs.push_back({{"from", p.from}, {"to", p.to}, {"ay_dim", p.ay_dim}, {"kqi_dim", p.kqi_dim}, {"ext1", p.ext1}});
    text += p.from + " -> " + p.to + ": " + std::to_string(p.ay_dim) + " / " + std::to_string(p.kqi_dim) +
            ", ext1 " + std::to_string(p.ext1) + "\n";
  }
  text += "total " + std::to_string(rep.total_dim) + "\n";
  return {{{"objects", objects},
           {"pairs", pairs},
           {"dims_equal", rep.dims_equal},
           {"ext1_zero", rep.ext1_zero},
           {"total_dim", rep.total_dim},
           {"kqi_total_dim", rep.kqi_total_dim}},
          text};
}

inline Report stability(const Json& config, const RunOptions&) {
  const auto chi = read_chi(config);
  const auto lambda = read_point_list(require_field(config, "lambda"));
  const bool ss = is_semistable(chi, lambda);
  const bool st = is_stable(chi, lambda);
  const bool gen = is_generic(chi);
  std::string text = std::string("semistable ") + (ss ? "yes" : "no") + ", stable " + (st ? "yes" : "no") +
                     ", generic " + (gen ? "yes" : "no") + "\n";
  return {{{"semistable", ss}, {"stable", st}, {"generic", gen}, {"classes", classes_json(collision_classes(lambda))}},
          text};
}

}  // namespace cli_detail

inline const std::map<std::string, std::function<Report(const Json&, const RunOptions&)>>& commands() {
  static const std::map<std::string, std::function<Report(const Json&, const RunOptions&)>> table{
      {"quiver-check", cli_detail::quiver_check}, {"basis", cli_detail::basis},
      {"matrix", cli_detail::matrix},             {"hom-table", cli_detail::hom_table},
      {"resolve", cli_detail::resolve},           {"certify-hd", cli_detail::certify},
      {"sdim", cli_detail::sdim},                 {"exccol", cli_detail::exccol},
      {"stability", cli_detail::stability}};
  return table;
}

/// Dispatches on config["command"].
inline Report run(const Json& config, const RunOptions& opt = {}) {
  const Json& cmd = require_field(config, "command");
  if (!cmd.is_string()) fail(ErrorKind::Schema, "command must be a string");
  auto it = commands().find(cmd.get<std::string>());
  if (it == commands().end()) fail(ErrorKind::Schema, "unknown command \"" + cmd.get<std::string>() + "\"");
  return it->second(config, opt);
}

}  // namespace orbi
