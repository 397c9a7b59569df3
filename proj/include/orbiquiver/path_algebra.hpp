#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "projective.hpp"
#include "quiver.hpp"
#include "random.hpp"

namespace orbi {

/// A quiver whose arrows carry effective divisors on P^1. Simple cycles,
/// transversality and the acyclic-path basis are computed once on
/// construction; the object is immutable afterwards.
class LabeledQuiver {
 public:
  LabeledQuiver() : LabeledQuiver(Quiver{}, {}) {}

  LabeledQuiver(Quiver quiver, std::vector<EffDivisor> labels)
      : quiver_(std::move(quiver)), labels_(std::move(labels)) {
    if (labels_.size() != quiver_.num_arrows())
      fail(ErrorKind::InvalidInput, "every arrow needs a label");
    cycles_ = enumerate_simple_cycles(quiver_);
    transverse_ = has_transverse_cycles(quiver_, cycles_);
    paths_ = orbi::acyclic_paths(quiver_);
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      const auto& p = paths_[i];
      by_endpoints_[{p.source(), p.target(quiver_)}].push_back(i);
      path_index_.emplace(p, i);
    }
  }

  /// Arrows missing from `labels` get the zero divisor.
  static LabeledQuiver with_labels(Quiver quiver, const std::map<std::string, EffDivisor>& labels) {
    std::vector<EffDivisor> v(quiver.num_arrows());
    for (const auto& [id, d] : labels) v[quiver.arrow_index(id)] = d;
    return LabeledQuiver(std::move(quiver), std::move(v));
  }

  const Quiver& quiver() const { return quiver_; }
  const std::vector<EffDivisor>& labels() const { return labels_; }
  const EffDivisor& label(std::size_t arrow) const { return labels_.at(arrow); }
  const std::vector<SimpleCycle>& simple_cycles() const { return cycles_; }
  bool transverse() const { return transverse_; }

  const std::vector<Path>& acyclic_paths() const { return paths_; }
  /// Acyclic paths from `from` to `to`, in basis order.
  std::vector<Path> acyclic_paths_between(std::size_t from, std::size_t to) const {
    std::vector<Path> out;
    auto it = by_endpoints_.find({from, to});
    if (it != by_endpoints_.end())
      for (auto i : it->second) out.push_back(paths_[i]);
    return out;
  }
  /// Position of an acyclic path in acyclic_paths().
  std::size_t basis_index(const Path& p) const {
    auto it = path_index_.find(p);
    if (it == path_index_.end()) fail(ErrorKind::InvalidPath, "not an acyclic path");
    return it->second;
  }

  void require_transverse() const {
    if (!transverse_) fail(ErrorKind::NotTransverse, "two distinct simple cycles share more than one vertex");
  }

 private:
  Quiver quiver_;
  std::vector<EffDivisor> labels_;
  std::vector<SimpleCycle> cycles_;
  bool transverse_ = true;
  std::vector<Path> paths_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_endpoints_;
  std::map<Path, std::size_t> path_index_;
};

/// Sum of the arrow labels along p.
inline EffDivisor path_label(const LabeledQuiver& lq, const Path& p) {
  if (!is_valid_path(lq.quiver(), p)) fail(ErrorKind::InvalidPath, "not a path of the quiver");
  EffDivisor d;
  for (auto a : p.arrows) d = divisor_add(d, lq.label(a));
  return d;
}

inline EffDivisor cycle_label(const LabeledQuiver& lq, const SimpleCycle& c) {
  return path_label(lq, c.as_path(lq.quiver()));
}

/// Every simple cycle carries a multiplicity-free divisor.
inline bool is_reduced_labeling(const LabeledQuiver& lq) {
  for (const auto& c : lq.simple_cycles())
    if (!is_reduced(cycle_label(lq, c))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Elements and the cycle-free normal form
// ---------------------------------------------------------------------------

/// An element of H^0(e_target (O Q) e_source (x) O(twist)). The coefficient
/// of an acyclic path g is a form of degree twist - deg D_g; it stands for the
/// section coefficient * divisor_section(D_g) of O(twist).
struct AlgebraElement {
  int twist = 0;
  std::size_t source = 0;
  std::size_t target = 0;
  std::map<Path, HomForm> terms;

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.twist == b.twist && a.source == b.source && a.target == b.target && a.terms == b.terms;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }
};

struct RawTerm {
  HomForm coeff;
  Path path;
};

/// Formal combination of arbitrary (possibly cyclic) paths, all from
/// `source` to `target`, with coefficients of degree twist - deg D_path.
struct RawElement {
  int twist = 0;
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<RawTerm> terms;
};

enum class ReductionOrder { Leftmost, Rightmost, Random };

struct ReductionStrategy {
  ReductionOrder order = ReductionOrder::Leftmost;
  std::uint64_t seed = 0;
};

struct ReducedPath {
  Path path;
  EffDivisor removed;
};

/// Occurrences of simple cycles as contiguous subpaths, as half-open arrow
/// ranges [first, last).
inline std::vector<std::pair<std::size_t, std::size_t>> cycle_occurrences(const Quiver& q, const Path& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto vs = p.vertices(q);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::vector<bool> seen(q.num_vertices(), false);
    seen[vs[i]] = true;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (seen[vs[j]]) {
        if (vs[j] == vs[i]) out.emplace_back(i, j);
        break;
      }
      seen[vs[j]] = true;
    }
  }
  return out;
}

/// Deletes simple cycles from p until it is acyclic, in the order picked by
/// `order`. Returns the acyclic remainder and the total label removed.
inline ReducedPath reduce_path(const LabeledQuiver& lq, Path p, ReductionOrder order, SplitMix64& rng) {
  EffDivisor removed;
  for (;;) {
    auto occ = cycle_occurrences(lq.quiver(), p);
    if (occ.empty()) break;
    std::pair<std::size_t, std::size_t> pick = occ.front();
    if (order == ReductionOrder::Rightmost) pick = occ.back();
    if (order == ReductionOrder::Random) pick = occ[rng.below(occ.size())];
    for (std::size_t k = pick.first; k < pick.second; ++k) removed = divisor_add(removed, lq.label(p.arrows[k]));
    p.arrows.erase(p.arrows.begin() + static_cast<long>(pick.first), p.arrows.begin() + static_cast<long>(pick.second));
  }
  return {std::move(p), std::move(removed)};
}

inline ReducedPath reduce_path(const LabeledQuiver& lq, const Path& p) {
  SplitMix64 rng(0);
  return reduce_path(lq, p, ReductionOrder::Leftmost, rng);
}

/// Rewrites every simple cycle rho at v inside a path as
/// divisor_section(D_rho) * e_v until only acyclic paths remain.
inline AlgebraElement normal_form(const LabeledQuiver& lq, const RawElement& raw, ReductionStrategy strategy = {}) {
  lq.require_transverse();
  const Quiver& q = lq.quiver();
  if (raw.source >= q.num_vertices() || raw.target >= q.num_vertices())
    fail(ErrorKind::InvalidInput, "element endpoints are not vertices");
  SplitMix64 rng(strategy.seed);
  AlgebraElement out{raw.twist, raw.source, raw.target, {}};
  for (const auto& term : raw.terms) {
    if (!is_valid_path(q, term.path)) fail(ErrorKind::InvalidPath, "not a path of the quiver");
    if (term.path.source() != raw.source || term.path.target(q) != raw.target)
      fail(ErrorKind::InvalidInput, "term " + path_to_string(q, term.path) + " has the wrong endpoints");
    if (term.coeff.degree() != raw.twist - path_label(lq, term.path).degree())
      fail(ErrorKind::InvalidInput, "coefficient degree does not match the twist");
    if (term.coeff.is_zero()) continue;
    auto reduced = reduce_path(lq, term.path, strategy.order, rng);
    HomForm coeff = term.coeff * divisor_section(reduced.removed);
    auto [it, inserted] = out.terms.emplace(reduced.path, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

/// The element coeff * path, with twist coeff.degree() + deg D_path.
inline AlgebraElement path_element(const LabeledQuiver& lq, const Path& p, const HomForm& coeff = HomForm::one()) {
  const int twist = coeff.degree() + path_label(lq, p).degree();
  return normal_form(lq, {twist, p.source(), p.target(lq.quiver()), {{coeff, p}}});
}

inline AlgebraElement vertex_element(const LabeledQuiver& lq, std::size_t v) {
  return path_element(lq, Path::trivial(v));
}

/// x * y: y is applied first, so the source of x must be the target of y.
inline AlgebraElement multiply(const LabeledQuiver& lq, const AlgebraElement& x, const AlgebraElement& y) {
  if (x.source != y.target) fail(ErrorKind::ComposeError, "source of the left factor differs from target of the right");
  RawElement raw{x.twist + y.twist, y.source, x.target, {}};
  for (const auto& [py, fy] : y.terms)
    for (const auto& [px, fx] : x.terms) raw.terms.push_back({fx * fy, concat(lq.quiver(), py, px)});
  return normal_form(lq, raw);
}

inline AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.twist != y.twist || x.source != y.source || x.target != y.target)
    fail(ErrorKind::InvalidInput, "adding elements of different hom spaces");
  AlgebraElement out = x;
  for (const auto& [p, f] : y.terms) {
    auto [it, inserted] = out.terms.emplace(p, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

/// "(u0)*a1_1 + (2*u1)*e_0", or "0".
inline std::string element_to_string(const LabeledQuiver& lq, const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [p, f] : x.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + f.to_string() + ")*" + path_to_string(lq.quiver(), p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hom sheaves and graded pieces
// ---------------------------------------------------------------------------

/// Line-bundle decomposition of e_v (O Q) e_w: one O(-D_g) per acyclic path
/// g from w to v, in basis order.
inline std::vector<EffDivisor> hom_bundle(const LabeledQuiver& lq, std::size_t v, std::size_t w) {
  lq.require_transverse();
  std::vector<EffDivisor> out;
  for (const auto& p : lq.acyclic_paths_between(w, v)) out.push_back(path_label(lq, p));
  return out;
}

/// Rank of O Q as an O_{P^1}-module.
inline std::size_t algebra_rank(const LabeledQuiver& lq) {
  std::size_t rank = 0;
  for (std::size_t v = 0; v < lq.quiver().num_vertices(); ++v)
    for (std::size_t w = 0; w < lq.quiver().num_vertices(); ++w) rank += hom_bundle(lq, v, w).size();
  return rank;
}

struct GradedIndex {
  std::size_t vertex = 0;
  int twist = 0;
};

/// dim H^0(e_to (O Q) e_from (x) O(to.twist - from.twist)).
inline int graded_hom_dim(const LabeledQuiver& lq, const GradedIndex& from, const GradedIndex& to) {
  int dim = 0;
  for (const auto& d : hom_bundle(lq, to.vertex, from.vertex)) dim += h0_dim(to.twist - from.twist, d);
  return dim;
}

/// dim H^1 of the same sheaf.
inline int graded_ext1_dim(const LabeledQuiver& lq, const GradedIndex& from, const GradedIndex& to) {
  int dim = 0;
  for (const auto& d : hom_bundle(lq, to.vertex, from.vertex)) dim += h1_dim(to.twist - from.twist, d);
  return dim;
}

/// Whether left multiplication by the arrow is injective over the function
/// field: distinct acyclic paths ending at s(a) stay distinct after a is
/// appended and cycles are removed.
inline bool left_multiplication_injective(const LabeledQuiver& lq, std::size_t arrow) {
  lq.require_transverse();
  const Quiver& q = lq.quiver();
  std::vector<Path> images;
  for (std::size_t w = 0; w < q.num_vertices(); ++w)
    for (const auto& p : lq.acyclic_paths_between(w, q.source(arrow)))
      images.push_back(reduce_path(lq, concat(q, p, Path::of_arrow(q, arrow))).path);
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

// ---------------------------------------------------------------------------
// Contraction and localization
// ---------------------------------------------------------------------------

struct LabeledContraction {
  LabeledQuiver quiver;
  std::vector<std::size_t> vertex_map;
};

/// Contracts a simple cycle with zero label; surviving arrows keep labels.
inline LabeledContraction contract_labeled(const LabeledQuiver& lq, const SimpleCycle& cycle) {
  lq.require_transverse();
  const SimpleCycle canonical = make_simple_cycle(lq.quiver(), cycle.arrows);
  if (!cycle_label(lq, canonical).is_zero())
    fail(ErrorKind::NonzeroCycleLabel, "only cycles with zero label can be contracted");
  auto c = contract_cycle(lq.quiver(), canonical);
  std::vector<EffDivisor> labels;
  for (auto a : c.arrow_origin) labels.push_back(lq.label(a));
  return {LabeledQuiver(std::move(c.quiver), std::move(labels)), std::move(c.vertex_map)};
}

struct Localization {
  LabeledQuiver quiver;
  ProjPoint point;
  /// Original vertex index -> vertex index in the localized quiver.
  std::vector<std::size_t> vertex_map;
};

/// Keeps only the p-primary part of every label, then contracts simple
/// cycles whose label became zero until none is left.
inline Localization localize_at(const LabeledQuiver& lq, const ProjPoint& p) {
  lq.require_transverse();
  std::vector<EffDivisor> labels;
  for (const auto& d : lq.labels()) labels.push_back(d.primary_part(p));
  Localization out{LabeledQuiver(lq.quiver(), std::move(labels)), p, {}};
  out.vertex_map.resize(lq.quiver().num_vertices());
  for (std::size_t v = 0; v < out.vertex_map.size(); ++v) out.vertex_map[v] = v;
  for (;;) {
    const auto& cycles = out.quiver.simple_cycles();
    auto zero = std::find_if(cycles.begin(), cycles.end(),
                             [&](const SimpleCycle& c) { return cycle_label(out.quiver, c).is_zero(); });
    if (zero == cycles.end()) break;
    auto step = contract_labeled(out.quiver, *zero);
    for (auto& v : out.vertex_map) v = step.vertex_map[v];
    out.quiver = std::move(step.quiver);
  }
  return out;
}

/// Whether every label is supported at p only.
inline bool is_localized_at(const LabeledQuiver& lq, const ProjPoint& p) {
  for (const auto& d : lq.labels())
    for (const auto& [q, m] : d.entries())
      if (q != p) return false;
  return true;
}

}  // namespace orbi
