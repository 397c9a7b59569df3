#pragma once

#include <string>
#include <vector>

#include "path_algebra.hpp"
#include "random.hpp"

namespace orbi {

struct RandomQuiverOptions {
  std::size_t max_vertices = 6;
  int max_label_degree = 3;
  /// Arrows per vertex, at most.
  std::size_t arrow_density = 2;
};

inline const std::vector<ProjPoint>& point_pool() {
  static const std::vector<ProjPoint> pool{ProjPoint::infinity(), ProjPoint::finite(0),  ProjPoint::finite(1),
                                           ProjPoint::finite(-1),  ProjPoint::finite(2), ProjPoint::finite(1, 2)};
  return pool;
}

inline EffDivisor random_divisor(SplitMix64& rng, int max_degree) {
  EffDivisor d;
  const long deg = rng.chance(40) ? 0 : rng.between(1, max_degree);
  for (long k = 0; k < deg; ++k) d.add(point_pool()[rng.below(point_pool().size())], 1);
  return d;
}

/// A random quiver with transverse cycles; loops and multiple arrows allowed.
inline Quiver random_transverse_quiver(SplitMix64& rng, const RandomQuiverOptions& opt = {}) {
  for (;;) {
    const auto nv = static_cast<std::size_t>(rng.between(1, static_cast<long>(opt.max_vertices)));
    const auto na = static_cast<std::size_t>(rng.between(0, static_cast<long>(opt.arrow_density * nv)));
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < nv; ++v) vertices.push_back(std::to_string(v));
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    auto add = [&](std::size_t s, std::size_t t) {
      arrows.emplace_back("a" + std::to_string(arrows.size()), vertices[s], vertices[t]);
    };
    // Planted cycles through random vertex sequences, then random arrows.
    const auto planted = rng.chance(50) ? rng.below(3) + 1 : 0;
    for (std::size_t k = 0; k < planted; ++k) {
      std::vector<std::size_t> order(nv);
      for (std::size_t v = 0; v < nv; ++v) order[v] = v;
      for (std::size_t v = nv; v > 1; --v) std::swap(order[v - 1], order[rng.below(v)]);
      const auto len = static_cast<std::size_t>(rng.between(1, static_cast<long>(nv)));
      for (std::size_t i = 0; i < len; ++i) add(order[i], order[(i + 1) % len]);
    }
    for (std::size_t a = 0; a < na; ++a) {
      const auto s = rng.below(nv);
      auto t = rng.below(nv);
      if (t == s && !rng.chance(15)) t = (s + 1) % nv;
      add(s, t);
    }
    Quiver q(vertices, arrows);
    if (has_transverse_cycles(q)) return q;
  }
}

/// Reduced transverse labeled quiver; labels are redrawn until every simple
/// cycle carries a multiplicity-free divisor.
inline LabeledQuiver random_reduced_quiver(SplitMix64& rng, const RandomQuiverOptions& opt = {}) {
  for (;;) {
    Quiver q = random_transverse_quiver(rng, opt);
    for (int attempt = 0; attempt < 20; ++attempt) {
      std::vector<EffDivisor> labels;
      for (std::size_t a = 0; a < q.num_arrows(); ++a) labels.push_back(random_divisor(rng, opt.max_label_degree));
      LabeledQuiver lq(q, labels);
      if (is_reduced_labeling(lq)) return lq;
    }
  }
}

struct ZeroCycleInstance {
  LabeledQuiver quiver;
  SimpleCycle cycle;
};

/// Random labels, then one simple cycle has its labels cleared.
inline ZeroCycleInstance random_zero_cycle_quiver(SplitMix64& rng, const RandomQuiverOptions& opt = {}) {
  for (;;) {
    Quiver q = random_transverse_quiver(rng, opt);
    const auto cycles = enumerate_simple_cycles(q);
    if (cycles.empty()) continue;
    const SimpleCycle cycle = cycles[rng.below(cycles.size())];
    std::vector<EffDivisor> labels;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) labels.push_back(random_divisor(rng, opt.max_label_degree));
    for (auto a : cycle.arrows) labels[a] = EffDivisor();
    return {LabeledQuiver(q, labels), cycle};
  }
}

}  // namespace orbi
