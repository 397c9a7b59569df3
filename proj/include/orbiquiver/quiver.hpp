#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace orbi {

struct Arrow {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Finite quiver. Vertices and arrows are addressed by their position in
/// declaration order; string ids exist for I/O. Every ordering used by the
/// library ("smallest vertex", "lexicographic by arrow") is declaration order.
class Quiver {
 public:
  Quiver() = default;

  /// arrows are (id, source id, target id).
  Quiver(std::vector<std::string> vertex_ids,
         const std::vector<std::tuple<std::string, std::string, std::string>>& arrows)
      : vertices_(std::move(vertex_ids)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (!vertex_index_.emplace(vertices_[i], i).second)
        fail(ErrorKind::InvalidInput, "duplicate vertex id '" + vertices_[i] + "'");
    for (const auto& [id, src, tgt] : arrows) add_arrow(id, vertex(src), vertex(tgt));
  }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  std::size_t source(std::size_t a) const { return arrows_.at(a).source; }
  std::size_t target(std::size_t a) const { return arrows_.at(a).target; }

  std::size_t vertex(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) fail(ErrorKind::InvalidInput, "unknown vertex '" + id + "'");
    return it->second;
  }
  std::size_t arrow_index(const std::string& id) const {
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end()) fail(ErrorKind::InvalidInput, "unknown arrow '" + id + "'");
    return it->second;
  }
  bool has_vertex(const std::string& id) const { return vertex_index_.count(id) != 0; }
  bool has_arrow(const std::string& id) const { return arrow_index_.count(id) != 0; }

  std::vector<std::size_t> arrows_into(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (arrows_[a].target == v) out.push_back(a);
    return out;
  }
  std::vector<std::size_t> arrows_out_of(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (arrows_[a].source == v) out.push_back(a);
    return out;
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
    for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
      const auto& x = a.arrows_[i];
      const auto& y = b.arrows_[i];
      if (x.id != y.id || x.source != y.source || x.target != y.target) return false;
    }
    return true;
  }

 private:
  void add_arrow(const std::string& id, std::size_t s, std::size_t t) {
    if (!arrow_index_.emplace(id, arrows_.size()).second)
      fail(ErrorKind::InvalidInput, "duplicate arrow id '" + id + "'");
    arrows_.push_back({id, s, t});
  }

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> arrow_index_;
};

/// A morphism of the path category. `arrows` lists arrows in traversal order
/// (the first arrow is applied first; the product is written right to left).
/// `start` is the source vertex and is the only datum of a trivial path.
struct Path {
  std::vector<std::size_t> arrows;
  std::size_t start = 0;

  static Path trivial(std::size_t v) { return {{}, v}; }
  static Path of_arrow(const Quiver& q, std::size_t a) { return {{a}, q.source(a)}; }

  bool is_trivial() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }
  std::size_t source() const { return start; }
  std::size_t target(const Quiver& q) const { return arrows.empty() ? start : q.target(arrows.back()); }

  /// Visited vertices, source first; length()+1 entries.
  std::vector<std::size_t> vertices(const Quiver& q) const {
    std::vector<std::size_t> vs{start};
    for (auto a : arrows) vs.push_back(q.target(a));
    return vs;
  }

  friend bool operator==(const Path& a, const Path& b) { return a.start == b.start && a.arrows == b.arrows; }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
  /// (length, arrows lexicographically, start).
  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.start < b.start;
  }
};

inline bool is_valid_path(const Quiver& q, const Path& p) {
  if (p.start >= q.num_vertices()) return false;
  std::size_t at = p.start;
  for (auto a : p.arrows) {
    if (a >= q.num_arrows() || q.source(a) != at) return false;
    at = q.target(a);
  }
  return true;
}

/// `first` followed by `second`; requires target(first) == source(second).
inline Path concat(const Quiver& q, const Path& first, const Path& second) {
  if (first.target(q) != second.source())
    fail(ErrorKind::ComposeError, "paths do not compose");
  Path out = first;
  out.arrows.insert(out.arrows.end(), second.arrows.begin(), second.arrows.end());
  return out;
}

/// Written in composition order, last arrow first: "a2*a1", or "e_v".
inline std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_id(p.start);
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += "*";
    out += q.arrow(*it).id;
  }
  return out;
}

/// No vertex visited twice (start and end included); trivial paths qualify.
inline bool is_acyclic(const Quiver& q, const Path& p) {
  auto vs = p.vertices(q);
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

/// A simple cycle in canonical rotation: it starts (and ends) at the smallest
/// vertex it visits.
struct SimpleCycle {
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  std::vector<std::size_t> vertices(const Quiver& q) const {
    std::vector<std::size_t> vs;
    for (auto a : arrows) vs.push_back(q.source(a));
    return vs;
  }
  bool contains_vertex(const Quiver& q, std::size_t v) const {
    for (auto a : arrows)
      if (q.source(a) == v) return true;
    return false;
  }
  /// The rotation starting and ending at v, as a path v -> v.
  Path rotated_to(const Quiver& q, std::size_t v) const {
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (q.source(arrows[i]) != v) continue;
      Path p{{}, v};
      for (std::size_t k = 0; k < arrows.size(); ++k) p.arrows.push_back(arrows[(i + k) % arrows.size()]);
      return p;
    }
    fail(ErrorKind::InvalidCycle, "vertex is not on the cycle");
  }
  Path as_path(const Quiver& q) const { return {arrows, q.source(arrows.front())}; }

  friend bool operator==(const SimpleCycle& a, const SimpleCycle& b) { return a.arrows == b.arrows; }
  friend bool operator<(const SimpleCycle& a, const SimpleCycle& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    return a.arrows < b.arrows;
  }
};

/// Validates that the arrows form a simple cycle of q (in some rotation) and
/// returns it in canonical rotation.
inline SimpleCycle make_simple_cycle(const Quiver& q, const std::vector<std::size_t>& arrows) {
  if (arrows.empty()) fail(ErrorKind::InvalidCycle, "empty cycle");
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i] >= q.num_arrows()) fail(ErrorKind::InvalidCycle, "unknown arrow in cycle");
    const auto next = arrows[(i + 1) % arrows.size()];
    if (next >= q.num_arrows() || q.target(arrows[i]) != q.source(next))
      fail(ErrorKind::InvalidCycle, "arrows do not form a cycle");
    if (!seen.insert(q.source(arrows[i])).second)
      fail(ErrorKind::InvalidCycle, "cycle repeats a vertex");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < arrows.size(); ++i)
    if (q.source(arrows[i]) < q.source(arrows[best])) best = i;
  SimpleCycle c;
  for (std::size_t k = 0; k < arrows.size(); ++k) c.arrows.push_back(arrows[(best + k) % arrows.size()]);
  return c;
}

/// All simple cycles, one per rotation class, sorted by (length, arrows).
/// Exhaustive DFS: cycles are rooted at their smallest vertex and only visit
/// larger vertices before closing.
inline std::vector<SimpleCycle> enumerate_simple_cycles(const Quiver& q) {
  std::vector<SimpleCycle> out;
  const std::size_t n = q.num_vertices();
  std::vector<std::vector<std::size_t>> out_arrows(n);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) out_arrows[q.source(a)].push_back(a);

  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    auto dfs = [&](auto&& self, std::size_t at) -> void {
      for (auto a : out_arrows[at]) {
        const auto to = q.target(a);
        if (to == root) {
          stack.push_back(a);
          out.push_back({stack});
          stack.pop_back();
        } else if (to > root && !on_stack[to]) {
          on_stack[to] = true;
          stack.push_back(a);
          self(self, to);
          stack.pop_back();
          on_stack[to] = false;
        }
      }
    };
    on_stack[root] = true;
    dfs(dfs, root);
    on_stack[root] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline std::size_t shared_vertex_count(const Quiver& q, const SimpleCycle& a, const SimpleCycle& b) {
  auto va = a.vertices(q);
  auto vb = b.vertices(q);
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  std::vector<std::size_t> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  return common.size();
}

}  // namespace detail

/// Distinct rotation classes meet in at most one vertex.
inline bool has_transverse_cycles(const Quiver& q, const std::vector<SimpleCycle>& cycles) {
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      if (detail::shared_vertex_count(q, cycles[i], cycles[j]) > 1) return false;
  return true;
}

inline bool has_transverse_cycles(const Quiver& q) { return has_transverse_cycles(q, enumerate_simple_cycles(q)); }

/// Every path that visits no vertex twice, trivial paths included, ordered
/// by (length, arrows, start).
inline std::vector<Path> acyclic_paths(const Quiver& q) {
  std::vector<Path> out;
  const std::size_t n = q.num_vertices();
  std::vector<std::vector<std::size_t>> out_arrows(n);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) out_arrows[q.source(a)].push_back(a);

  std::vector<bool> visited(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    Path p = Path::trivial(s);
    auto dfs = [&](auto&& self, std::size_t at) -> void {
      out.push_back(p);
      for (auto a : out_arrows[at]) {
        const auto to = q.target(a);
        if (visited[to]) continue;
        visited[to] = true;
        p.arrows.push_back(a);
        self(self, to);
        p.arrows.pop_back();
        visited[to] = false;
      }
    };
    visited[s] = true;
    dfs(dfs, s);
    visited[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Contraction {
  Quiver quiver;
  /// Old vertex index -> new vertex index.
  std::vector<std::size_t> vertex_map;
  /// New arrow index -> old arrow index.
  std::vector<std::size_t> arrow_origin;
};

/// Identifies the vertices of `cycle` with its smallest vertex and deletes the
/// cycle's arrows. Remaining vertices and arrows keep their relative order.
inline Contraction contract_cycle(const Quiver& q, const SimpleCycle& cycle) {
  const SimpleCycle canonical = make_simple_cycle(q, cycle.arrows);
  const auto on_cycle = canonical.vertices(q);
  const std::size_t keep = *std::min_element(on_cycle.begin(), on_cycle.end());
  std::set<std::size_t> merged(on_cycle.begin(), on_cycle.end());
  std::set<std::size_t> dropped_arrows(canonical.arrows.begin(), canonical.arrows.end());

  Contraction out;
  out.vertex_map.resize(q.num_vertices());
  std::vector<std::string> ids;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    if (merged.count(v) && v != keep) continue;
    out.vertex_map[v] = ids.size();
    ids.push_back(q.vertex_id(v));
  }
  for (auto v : merged) out.vertex_map[v] = out.vertex_map[keep];

  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (dropped_arrows.count(a)) continue;
    arrows.emplace_back(q.arrow(a).id, ids[out.vertex_map[q.source(a)]], ids[out.vertex_map[q.target(a)]]);
    out.arrow_origin.push_back(a);
  }
  out.quiver = Quiver(std::move(ids), arrows);
  return out;
}

}  // namespace orbi
