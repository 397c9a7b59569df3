#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "path_algebra.hpp"
#include "poly_matrix.hpp"

namespace orbi {

// ---------------------------------------------------------------------------
// Local path algebra at a point p, in the chart variable t vanishing at p.
//
// After localize_at every label is a multiple of p, so O(-k p) is generated
// by t^k on the chart containing p. An element is stored in generator
// coordinates: {g -> c} means sum of c * t^{k_g} * g over acyclic paths g.
// ---------------------------------------------------------------------------

using LocalElement = std::map<Path, Poly>;

inline LocalElement local_generator(const Path& p, const Poly& c = Poly(1)) { return {{p, c}}; }

inline LocalElement local_negate(LocalElement x) {
  for (auto& [p, c] : x) c = -c;
  return x;
}

/// One indecomposable projective P_vertex = e_vertex A in a free module.
struct Summand {
  std::size_t vertex = 0;
  int twist = 0;
};

/// A direct sum of projectives, viewed as a free Q[t]-module. Coordinate i
/// is the generator t^{k_g} g of the path g = paths[i] inside summand
/// owner[i]; grade[i] is the source vertex of g. Right A-module maps respect
/// grades, which splits every differential into independent blocks.
struct FreeModule {
  std::vector<Summand> summands;
  std::vector<Path> paths;
  std::vector<std::size_t> owner;
  std::vector<std::size_t> grade;

  /// A bare free module of the given rank, one grade.
  static FreeModule plain(std::size_t rank) {
    FreeModule m;
    m.paths.resize(rank);
    m.owner.assign(rank, 0);
    m.grade.assign(rank, 0);
    return m;
  }

  std::size_t rank() const { return grade.size(); }

  std::size_t coordinate(std::size_t summand, const Path& p) const {
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (owner[i] == summand && paths[i] == p) return i;
    fail(ErrorKind::InternalError, "path is not a coordinate of the summand");
  }
};

inline FreeModule projective_module(const LabeledQuiver& lq, std::vector<Summand> summands) {
  FreeModule m;
  m.summands = std::move(summands);
  for (std::size_t s = 0; s < m.summands.size(); ++s) {
    for (const auto& p : lq.acyclic_paths()) {
      if (p.target(lq.quiver()) != m.summands[s].vertex) continue;
      m.paths.push_back(p);
      m.owner.push_back(s);
      m.grade.push_back(p.source());
    }
  }
  return m;
}

/// Bounded complex of free modules F_0 <- F_1 <- ... <- F_k.
/// differentials[i] maps modules[i+1] to modules[i]. When built from the
/// path algebra, blocks[i][row][col] is the entry from summand col of F_{i+1}
/// to summand row of F_i.
struct FreeComplex {
  std::vector<FreeModule> modules;
  std::vector<PolyMatrix> differentials;
  std::vector<std::vector<std::vector<LocalElement>>> blocks;

  std::size_t length() const { return differentials.size(); }
};

/// Matrix of the module map given by left multiplication with block entries.
inline PolyMatrix flatten_block(const LabeledQuiver& lq, const std::vector<std::vector<LocalElement>>& block,
                                const FreeModule& rows, const FreeModule& cols) {
  const Quiver& q = lq.quiver();
  PolyMatrix m(rows.rank(), cols.rank());
  for (std::size_t j = 0; j < cols.rank(); ++j) {
    const Path& beta = cols.paths[j];
    const int k_beta = path_label(lq, beta).degree();
    for (std::size_t r = 0; r < rows.summands.size(); ++r) {
      for (const auto& [alpha, c] : block[r][cols.owner[j]]) {
        if (c.is_zero()) continue;
        const auto reduced = reduce_path(lq, concat(q, beta, alpha));
        const int k_alpha = path_label(lq, alpha).degree();
        const int k_gamma = path_label(lq, reduced.path).degree();
        const auto shift = static_cast<std::size_t>(k_alpha + k_beta - k_gamma);
        m(rows.coordinate(r, reduced.path), j) += c * Poly::t_power(shift);
      }
    }
  }
  return m;
}

namespace detail {

inline std::vector<std::vector<LocalElement>> empty_block(std::size_t rows, std::size_t cols) {
  return std::vector<std::vector<LocalElement>>(rows, std::vector<LocalElement>(cols));
}

inline void drop_trailing_zero_modules(FreeComplex& c) {
  while (c.modules.size() > 1 && c.modules.back().rank() == 0) {
    c.modules.pop_back();
    c.differentials.pop_back();
    c.blocks.pop_back();
  }
}

inline void require_resolution_input(const LabeledQuiver& lq, const ProjPoint& p) {
  lq.require_transverse();
  if (!is_reduced_labeling(lq)) fail(ErrorKind::NotReduced, "a simple cycle carries a non-reduced divisor");
  if (!is_localized_at(lq, p)) fail(ErrorKind::NotLocalized, "a label is supported away from " + p.to_string());
  for (const auto& c : lq.simple_cycles())
    if (cycle_label(lq, c).is_zero()) fail(ErrorKind::NotLocalized, "a simple cycle with zero label is left");
}

}  // namespace detail

/// Projective resolution of the simple module S_v over the path algebra of a
/// quiver localized at p.
///
/// Without cycles through v:
///   0 -> (+)_{t(a)=v} P_{s(a)} --(-t; a)--> (+)_{t(a)=v} P_{s(a)} (+) P_v --(a t)--> P_v.
/// With simple cycles rho_0..rho_r at v, rho_i = a_i rho'_i, and Xi the other
/// arrows into v:
///   0 -> P_v^r (+) (+)_{a in Xi} P_{s(a)} --phi--> (+)_{t(a)=v} P_{s(a)} --(a)--> P_v,
/// where phi has the column blocks (-rho'_0 ... ; diag rho'_i ; 0) and
/// (rho'_0 a ; 0 ; -t).
inline FreeComplex build_simple_resolution(const LabeledQuiver& lq, std::size_t v, const ProjPoint& p) {
  detail::require_resolution_input(lq, p);
  const Quiver& q = lq.quiver();
  if (v >= q.num_vertices()) fail(ErrorKind::InvalidInput, "vertex out of range");

  std::vector<Path> cycles_at_v;
  for (const auto& c : lq.simple_cycles())
    if (c.contains_vertex(q, v)) cycles_at_v.push_back(c.rotated_to(q, v));
  auto t_times = [](std::size_t vertex) { return local_generator(Path::trivial(vertex), Poly::t_power(1)); };
  auto minus_t_times = [](std::size_t vertex) { return local_generator(Path::trivial(vertex), -Poly::t_power(1)); };

  FreeComplex c;
  std::vector<std::size_t> incoming = q.arrows_into(v);

  if (cycles_at_v.empty()) {
    std::vector<Summand> f1, f2;
    for (auto a : incoming) {
      f1.push_back({q.source(a), 0});
      f2.push_back({q.source(a), 0});
    }
    f1.push_back({v, 0});
    c.modules = {projective_module(lq, {{v, 0}}), projective_module(lq, f1), projective_module(lq, f2)};

    auto d1 = detail::empty_block(1, f1.size());
    for (std::size_t i = 0; i < incoming.size(); ++i) d1[0][i] = local_generator(Path::of_arrow(q, incoming[i]));
    d1[0][incoming.size()] = t_times(v);

    auto d2 = detail::empty_block(f1.size(), f2.size());
    for (std::size_t i = 0; i < incoming.size(); ++i) {
      d2[i][i] = minus_t_times(q.source(incoming[i]));
      d2[incoming.size()][i] = local_generator(Path::of_arrow(q, incoming[i]));
    }
    c.blocks = {d1, d2};
  } else {
    // rho_i = a_i rho'_i: a_i is the last arrow, rho'_i runs from v to s(a_i).
    std::vector<std::size_t> closing;
    std::vector<Path> prefix;
    for (const auto& rho : cycles_at_v) {
      closing.push_back(rho.arrows.back());
      Path rest = rho;
      rest.arrows.pop_back();
      prefix.push_back(rest);
    }
    std::vector<std::size_t> xi;
    for (auto a : incoming)
      if (std::find(closing.begin(), closing.end(), a) == closing.end()) xi.push_back(a);
    const std::size_t r = cycles_at_v.size() - 1;

    std::vector<std::size_t> f1_arrows = closing;
    f1_arrows.insert(f1_arrows.end(), xi.begin(), xi.end());
    std::vector<Summand> f1, f2;
    for (auto a : f1_arrows) f1.push_back({q.source(a), 0});
    for (std::size_t i = 0; i < r; ++i) f2.push_back({v, 0});
    for (auto a : xi) f2.push_back({q.source(a), 0});
    c.modules = {projective_module(lq, {{v, 0}}), projective_module(lq, f1), projective_module(lq, f2)};

    auto d1 = detail::empty_block(1, f1.size());
    for (std::size_t i = 0; i < f1_arrows.size(); ++i) d1[0][i] = local_generator(Path::of_arrow(q, f1_arrows[i]));

    auto phi = detail::empty_block(f1.size(), f2.size());
    for (std::size_t i = 1; i <= r; ++i) {
      phi[0][i - 1] = local_negate(local_generator(prefix[0]));
      phi[i][i - 1] = local_generator(prefix[i]);
    }
    for (std::size_t k = 0; k < xi.size(); ++k) {
      const std::size_t col = r + k;
      phi[0][col] = local_generator(concat(q, Path::of_arrow(q, xi[k]), prefix[0]));
      phi[r + 1 + k][col] = minus_t_times(q.source(xi[k]));
    }
    c.blocks = {d1, phi};
  }

  for (std::size_t i = 0; i < c.blocks.size(); ++i)
    c.differentials.push_back(flatten_block(lq, c.blocks[i], c.modules[i], c.modules[i + 1]));
  detail::drop_trailing_zero_modules(c);
  return c;
}

namespace detail {

/// Coordinate groups that no differential mixes; a single group when the
/// grades are not respected.
inline std::vector<std::size_t> grade_values(const FreeComplex& c) {
  std::vector<std::size_t> grades;
  for (const auto& m : c.modules) grades.insert(grades.end(), m.grade.begin(), m.grade.end());
  std::sort(grades.begin(), grades.end());
  grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
  return grades;
}

inline bool respects_grades(const FreeComplex& c) {
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    const auto& d = c.differentials[i];
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t k = 0; k < d.cols(); ++k)
        if (!d(r, k).is_zero() && c.modules[i].grade[r] != c.modules[i + 1].grade[k]) return false;
  }
  return true;
}

inline std::vector<std::size_t> coordinates_of_grade(const FreeModule& m, std::size_t g, bool split) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.rank(); ++i)
    if (!split || m.grade[i] == g) out.push_back(i);
  return out;
}

}  // namespace detail

/// Exactness at every F_i with i >= 1: ker d_i is contained in im d_{i+1}
/// (kernel columns tested one by one for membership) and the leftmost
/// differential is injective. Complexes whose consecutive differentials do
/// not compose to zero are reported as not exact.
inline bool check_exactness(const FreeComplex& c) {
  if (c.differentials.size() + 1 != c.modules.size()) fail(ErrorKind::DimError, "complex has inconsistent length");
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    const auto& d = c.differentials[i];
    if (d.rows() != c.modules[i].rank() || d.cols() != c.modules[i + 1].rank())
      fail(ErrorKind::DimError, "differential does not match module ranks");
  }
  for (std::size_t i = 0; i + 1 < c.differentials.size(); ++i)
    if (!(c.differentials[i] * c.differentials[i + 1]).is_zero()) return false;
  if (c.differentials.empty()) return true;

  const bool split = detail::respects_grades(c);
  const auto grades = split ? detail::grade_values(c) : std::vector<std::size_t>{0};
  for (auto g : grades) {
    std::vector<std::vector<std::size_t>> coords;
    for (const auto& m : c.modules) coords.push_back(detail::coordinates_of_grade(m, g, split));
    const std::size_t top = c.differentials.size();
    for (std::size_t i = 1; i <= top; ++i) {
      const PolyMatrix out_map = c.differentials[i - 1].select(coords[i - 1], coords[i]);
      const PolyMatrix kernel = poly_kernel(out_map);
      if (i == top) {
        if (kernel.cols() != 0) return false;
        continue;
      }
      if (kernel.cols() == 0) continue;
      const auto image = column_hermite_form(c.differentials[i].select(coords[i], coords[i + 1]));
      for (std::size_t k = 0; k < kernel.cols(); ++k)
        if (!membership(image, kernel.column(k))) return false;
    }
  }
  return true;
}

/// Multiplicities of the indecomposable projectives in the minimal complex
/// obtained by splitting off every pair of summands joined by an entry that
/// is a unit at p. minimal[i][vertex] counts P_vertex in degree i.
struct MinimalShape {
  std::vector<std::map<std::size_t, int>> minimal;
  int length = 0;
};

namespace detail {

/// Row-major Gaussian elimination on the residue matrix; returns how many
/// pivots (split pairs) each vertex contributes.
inline std::map<std::size_t, int> split_pairs(std::vector<std::vector<Rat>> residue,
                                              const std::vector<std::size_t>& row_vertex) {
  std::map<std::size_t, int> pairs;
  const std::size_t rows = residue.size();
  const std::size_t cols = rows ? residue[0].size() : 0;
  std::vector<bool> row_used(rows, false), col_used(cols, false);
  for (;;) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = 0; r < rows && pr == rows; ++r) {
      if (row_used[r]) continue;
      for (std::size_t k = 0; k < cols; ++k)
        if (!col_used[k] && residue[r][k] != 0) {
          pr = r;
          pc = k;
          break;
        }
    }
    if (pr == rows) break;
    row_used[pr] = col_used[pc] = true;
    ++pairs[row_vertex[pr]];
    for (std::size_t r = 0; r < rows; ++r) {
      if (row_used[r] || residue[r][pc] == 0) continue;
      Rat f = residue[r][pc] / residue[pr][pc];
      for (std::size_t k = 0; k < cols; ++k) residue[r][k] -= f * residue[pr][k];
    }
  }
  return pairs;
}

}  // namespace detail

/// Entries between summands of different vertices lie in the radical, so
/// only same-vertex blocks of the residue matrices (values at t = 0 of the
/// e_u -> e_u entries) can split.
inline MinimalShape minimal_shape(const FreeComplex& c) {
  MinimalShape shape;
  shape.minimal.resize(c.modules.size());
  for (std::size_t i = 0; i < c.modules.size(); ++i)
    for (const auto& s : c.modules[i].summands) ++shape.minimal[i][s.vertex];
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    const auto& rows = c.modules[i];
    const auto& cols = c.modules[i + 1];
    std::vector<std::vector<Rat>> residue(rows.summands.size(), std::vector<Rat>(cols.summands.size(), Rat(0)));
    std::vector<std::size_t> row_vertex;
    for (std::size_t r = 0; r < rows.summands.size(); ++r) {
      row_vertex.push_back(rows.summands[r].vertex);
      for (std::size_t k = 0; k < cols.summands.size(); ++k) {
        const auto u = rows.summands[r].vertex;
        if (cols.summands[k].vertex != u) continue;
        const auto e = Path::trivial(u);
        residue[r][k] = c.differentials[i](rows.coordinate(r, e), cols.coordinate(k, e)).eval(Rat(0));
      }
    }
    for (const auto& [vertex, n] : detail::split_pairs(std::move(residue), row_vertex)) {
      shape.minimal[i][vertex] -= n;
      shape.minimal[i + 1][vertex] -= n;
    }
  }
  for (std::size_t i = 0; i < shape.minimal.size(); ++i)
    for (const auto& [vertex, n] : shape.minimal[i])
      if (n > 0) shape.length = static_cast<int>(i);
  return shape;
}

struct ResolutionReport {
  std::size_t vertex = 0;  // in the input quiver
  ProjPoint point;
  Localization local;
  std::size_t local_vertex = 0;
  FreeComplex complex;
  bool exact = false;
  int pd = 0;
  /// (vertex id in the localized quiver, degree) -> dim Ext^degree(S_v, S_vertex).
  std::map<std::pair<std::string, int>, int> ext_dims;
};

inline void require_reduced_transverse(const LabeledQuiver& lq) {
  lq.require_transverse();
  if (!is_reduced_labeling(lq)) fail(ErrorKind::NotReduced, "a simple cycle carries a non-reduced divisor");
}

/// Projective dimension of the simple module at vertex v, locally at p.
inline ResolutionReport pd_simple(const LabeledQuiver& lq, std::size_t v, const ProjPoint& p) {
  require_reduced_transverse(lq);
  if (v >= lq.quiver().num_vertices()) fail(ErrorKind::InvalidInput, "vertex out of range");
  ResolutionReport rep;
  rep.vertex = v;
  rep.point = p;
  rep.local = localize_at(lq, p);
  rep.local_vertex = rep.local.vertex_map[v];
  rep.complex = build_simple_resolution(rep.local.quiver, rep.local_vertex, p);
  rep.exact = check_exactness(rep.complex);
  if (!rep.exact) fail(ErrorKind::InternalError, "constructed resolution is not exact");
  const auto shape = minimal_shape(rep.complex);
  rep.pd = shape.length;
  for (std::size_t i = 0; i < shape.minimal.size(); ++i)
    for (const auto& [u, n] : shape.minimal[i])
      if (n > 0) rep.ext_dims[{rep.local.quiver.quiver().vertex_id(u), static_cast<int>(i)}] = n;
  return rep;
}

inline std::vector<ProjPoint> label_support(const LabeledQuiver& lq) {
  std::vector<ProjPoint> pts;
  for (const auto& d : lq.labels())
    for (const auto& [p, m] : d.entries()) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// The first of 0, 1, 2, ... outside the label support.
inline ProjPoint generic_point(const LabeledQuiver& lq) {
  const auto support = label_support(lq);
  for (long k = 0;; ++k) {
    ProjPoint p = ProjPoint::finite(k);
    if (std::find(support.begin(), support.end(), p) == support.end()) return p;
  }
}

struct CertificationReport {
  std::vector<ResolutionReport> table;  // by vertex, then point
  int max_pd = 0;
  bool satisfied = true;  // max_pd <= 2
};

/// pd of every simple module at every point of the label support and at one
/// point outside it.
inline CertificationReport certify_hd(const LabeledQuiver& lq) {
  require_reduced_transverse(lq);
  auto points = label_support(lq);
  points.push_back(generic_point(lq));
  std::sort(points.begin(), points.end());
  CertificationReport rep;
  for (std::size_t v = 0; v < lq.quiver().num_vertices(); ++v)
    for (const auto& p : points) {
      rep.table.push_back(pd_simple(lq, v, p));
      rep.max_pd = std::max(rep.max_pd, rep.table.back().pd);
    }
  rep.satisfied = rep.max_pd <= 2;
  return rep;
}

}  // namespace orbi
