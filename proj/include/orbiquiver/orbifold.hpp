#pragma once

#include <string>
#include <vector>

#include "path_algebra.hpp"
#include "rational.hpp"

namespace orbi {

/// Weights r_i >= 2 and points lambda_i on P^1, one per stacky point.
struct OrbifoldData {
  std::vector<int> r;
  std::vector<ProjPoint> lambda;

  std::size_t n() const { return r.size(); }
};

inline void validate_orbifold(const OrbifoldData& d) {
  if (d.r.empty()) fail(ErrorKind::InvalidInput, "orbifold data needs at least one point");
  if (d.lambda.size() != d.r.size()) fail(ErrorKind::InvalidInput, "r and lambda have different lengths");
  for (int ri : d.r)
    if (ri < 2) fail(ErrorKind::InvalidInput, "weights must be at least 2");
}

/// m*c + sum a_i x_i with 0 <= a_i < r_i.
struct PicElement {
  long m = 0;
  std::vector<long> a;

  friend bool operator==(const PicElement&, const PicElement&) = default;
  friend auto operator<=>(const PicElement&, const PicElement&) = default;
};

inline long floor_div(long x, long y) {
  long q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

inline PicElement pic_normal_form(const OrbifoldData& d, long m, const std::vector<long>& coeffs) {
  validate_orbifold(d);
  if (coeffs.size() != d.n()) fail(ErrorKind::DimError, "need one x-coefficient per point");
  PicElement out{m, std::vector<long>(d.n())};
  for (std::size_t i = 0; i < d.n(); ++i) {
    const long q = floor_div(coeffs[i], d.r[i]);
    out.m += q;
    out.a[i] = coeffs[i] - q * d.r[i];
  }
  return out;
}

inline PicElement pic_zero(const OrbifoldData& d) { return pic_normal_form(d, 0, std::vector<long>(d.n(), 0)); }
inline PicElement pic_c(const OrbifoldData& d, long m = 1) { return pic_normal_form(d, m, std::vector<long>(d.n(), 0)); }
/// k * x_i, with i zero-based.
inline PicElement pic_x(const OrbifoldData& d, std::size_t i, long k = 1) {
  std::vector<long> a(d.n(), 0);
  a.at(i) = k;
  return pic_normal_form(d, 0, a);
}

inline PicElement pic_add(const OrbifoldData& d, const PicElement& x, const PicElement& y) {
  std::vector<long> a(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) a[i] = x.a.at(i) + y.a.at(i);
  return pic_normal_form(d, x.m + y.m, a);
}

inline PicElement pic_neg(const OrbifoldData& d, const PicElement& x) {
  std::vector<long> a(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) a[i] = -x.a.at(i);
  return pic_normal_form(d, -x.m, a);
}

inline PicElement pic_sub(const OrbifoldData& d, const PicElement& x, const PicElement& y) {
  return pic_add(d, x, pic_neg(d, y));
}

/// a <= b iff b - a is a non-negative combination of the x_i.
inline bool pic_leq(const OrbifoldData& d, const PicElement& a, const PicElement& b) {
  return pic_sub(d, b, a).m >= 0;
}

/// (n-2)c - sum x_i.
inline PicElement dualizing_element(const OrbifoldData& d) {
  validate_orbifold(d);
  return pic_normal_form(d, static_cast<long>(d.n()) - 2, std::vector<long>(d.n(), -1));
}

inline std::string pic_to_string(const PicElement& p) {
  std::string s = "(" + std::to_string(p.m) + ";";
  for (std::size_t i = 0; i < p.a.size(); ++i) s += (i ? "," : "") + std::to_string(p.a[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// The coordinate ring S = k[x_1..x_n] / (x_i^{r_i} - x_2^{r_2} + lambda_i x_1^{r_1})_{i>=3}
// ---------------------------------------------------------------------------

/// lambda_1 = inf, lambda_2 = 0 and the remaining points finite.
inline bool is_normalized_presentation(const OrbifoldData& d) {
  if (d.n() < 2 || !d.lambda[0].is_infinity() || d.lambda[1] != ProjPoint::finite(0)) return false;
  for (std::size_t i = 2; i < d.n(); ++i)
    if (d.lambda[i].is_infinity()) return false;
  return true;
}

inline void require_normalized_presentation(const OrbifoldData& d) {
  validate_orbifold(d);
  if (!is_normalized_presentation(d))
    fail(ErrorKind::UnsupportedPresentation, "needs n >= 2, lambda_1 = inf, lambda_2 = 0 and finite lambda_i for i >= 3");
}

/// Exponent vectors of the standard monomials of degree deg. The leading
/// terms x_i^{r_i} (i >= 3) are pairwise coprime, so the relations already
/// form a Groebner basis and standard monomials have e_i < r_i for i >= 3.
inline std::vector<std::vector<long>> s_basis_monomials(const OrbifoldData& d, const PicElement& deg) {
  require_normalized_presentation(d);
  const PicElement g = pic_normal_form(d, deg.m, deg.a);
  std::vector<std::vector<long>> out;
  for (long q1 = g.m; q1 >= 0; --q1) {
    std::vector<long> e = g.a;
    e[0] += d.r[0] * q1;
    e[1] += d.r[1] * (g.m - q1);
    out.push_back(std::move(e));
  }
  return out;
}

inline long s_dim(const OrbifoldData& d, const PicElement& deg) {
  return static_cast<long>(s_basis_monomials(d, deg).size());
}

// ---------------------------------------------------------------------------
// The window quiver with relations and the glued quiver A_Y
// ---------------------------------------------------------------------------

inline std::string arm_vertex_id(std::size_t i, long j) { return std::to_string(i + 1) + "_" + std::to_string(j); }
inline std::string arm_arrow_id(std::size_t i, long j) { return "a" + std::to_string(i + 1) + "_" + std::to_string(j); }

struct QuiverWithRelations {
  Quiver quiver;
  /// Coefficients on the arm paths 0 -> 1, one vector per relation.
  std::vector<std::vector<Rat>> relations;
};

/// Source 0, sink 1, and for each weight a chain 0 -> i_1 -> ... -> i_{r_i-1} -> 1.
inline Quiver window_quiver(const std::vector<int>& r) {
  std::vector<std::string> vertices{"0"};
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (long j = 1; j < r[i]; ++j) vertices.push_back(arm_vertex_id(i, j));
    for (long j = 1; j <= r[i]; ++j) {
      const std::string from = j == 1 ? "0" : arm_vertex_id(i, j - 1);
      const std::string to = j == r[i] ? "1" : arm_vertex_id(i, j);
      arrows.emplace_back(arm_arrow_id(i, j), from, to);
    }
  }
  vertices.push_back("1");
  return Quiver(vertices, arrows);
}

inline QuiverWithRelations build_glq(const OrbifoldData& d) {
  require_normalized_presentation(d);
  QuiverWithRelations out{window_quiver(d.r), {}};
  for (std::size_t i = 2; i < d.n(); ++i) {
    std::vector<Rat> rel(d.n(), Rat(0));
    rel[0] = -1;
    rel[1] = d.lambda[i].value();
    rel[i] = 1;
    out.relations.push_back(rel);
  }
  return out;
}

/// dim e_b (kQ/I) e_a: paths a -> b, minus the relation rank on the paths 0 -> 1.
inline long kqi_hom_dim(const QuiverWithRelations& qr, std::size_t a, std::size_t b) {
  const Quiver& q = qr.quiver;
  if (a >= q.num_vertices() || b >= q.num_vertices()) fail(ErrorKind::InvalidInput, "vertex out of range");
  long paths = 0;
  for (const auto& p : acyclic_paths(q))
    if (p.source() == a && p.target(q) == b) ++paths;
  if (a == q.vertex("0") && b == q.vertex("1")) paths -= static_cast<long>(rational_rank(qr.relations));
  return paths;
}

/// n petals glued at vertex 0; petal i is 0 -> i_1 -> ... -> i_{r_i-1} -> 0
/// and only its closing arrow carries a label, the point lambda_i.
inline LabeledQuiver build_ay(const OrbifoldData& d) {
  validate_orbifold(d);
  std::vector<std::string> vertices{"0"};
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  std::vector<EffDivisor> labels;
  for (std::size_t i = 0; i < d.n(); ++i) {
    for (long j = 1; j < d.r[i]; ++j) vertices.push_back(arm_vertex_id(i, j));
    for (long j = 1; j <= d.r[i]; ++j) {
      const std::string from = j == 1 ? "0" : arm_vertex_id(i, j - 1);
      const std::string to = j == d.r[i] ? "0" : arm_vertex_id(i, j);
      arrows.emplace_back(arm_arrow_id(i, j), from, to);
      labels.push_back(j == d.r[i] ? EffDivisor(d.lambda[i]) : EffDivisor());
    }
  }
  return LabeledQuiver(Quiver(vertices, arrows), labels);
}

using DivisorMatrix = std::vector<std::vector<std::vector<EffDivisor>>>;

/// Entry (v, w) is hom_bundle(v, w).
inline DivisorMatrix matrix_presentation(const LabeledQuiver& lq) {
  lq.require_transverse();
  const std::size_t n = lq.quiver().num_vertices();
  DivisorMatrix m(n, std::vector<std::vector<EffDivisor>>(n));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) m[v][w] = hom_bundle(lq, v, w);
  return m;
}

inline std::string line_bundle_string(const EffDivisor& d) { return d.is_zero() ? "O" : "O(-" + d.to_string() + ")"; }

/// One bracketed row per vertex; direct sums joined by " + ", empty sums "0".
inline std::string matrix_to_string(const DivisorMatrix& m) {
  std::string out;
  for (const auto& row : m) {
    out += "[";
    for (std::size_t w = 0; w < row.size(); ++w) {
      if (w) out += ", ";
      if (row[w].empty()) out += "0";
      for (std::size_t k = 0; k < row[w].size(); ++k) out += (k ? " + " : "") + line_bundle_string(row[w][k]);
    }
    out += "]\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// The exceptional collection (O(a))_{0 <= a <= c}
// ---------------------------------------------------------------------------

struct WindowObject {
  std::string name;      // vertex of the window quiver: "0", "i_j" or "1"
  PicElement degree;     // a with O(a)
  GradedIndex ay_index;  // the matching vertex and twist of A_Y
};

inline std::vector<WindowObject> window_objects(const OrbifoldData& d) {
  validate_orbifold(d);
  std::vector<WindowObject> out;
  out.push_back({"0", pic_zero(d), {0, 0}});
  std::size_t ay_vertex = 1;
  for (std::size_t i = 0; i < d.n(); ++i)
    for (long j = 1; j < d.r[i]; ++j) out.push_back({arm_vertex_id(i, j), pic_x(d, i, j), {ay_vertex++, 0}});
  out.push_back({"1", pic_c(d), {0, 1}});
  return out;
}

struct WindowPair {
  std::string from, to;
  long ay_dim = 0;
  long kqi_dim = 0;
  long ext1 = 0;
};

struct ExceptionalCollectionReport {
  std::vector<WindowObject> objects;
  std::vector<WindowPair> pairs;
  bool dims_equal = true;
  bool ext1_zero = true;
  long total_dim = 0;      // A_Y side
  long kqi_total_dim = 0;  // window quiver side
};

/// The window quiver side. For n = 1 the single arm is paired with a bare
/// arrow 0 -> 1 (an arm of weight one), so that Hom(O, O(c)) has its two
/// sections; no relations arise.
inline QuiverWithRelations window_algebra(const OrbifoldData& d) {
  validate_orbifold(d);
  if (d.n() == 1) return {window_quiver({d.r[0], 1}), {}};
  return build_glq(d);
}

inline ExceptionalCollectionReport verify_exceptional_collection(const OrbifoldData& d) {
  validate_orbifold(d);
  const QuiverWithRelations qr = window_algebra(d);
  const LabeledQuiver ay = build_ay(d);
  ExceptionalCollectionReport rep;
  rep.objects = window_objects(d);
  for (const auto& from : rep.objects)
    for (const auto& to : rep.objects) {
      WindowPair p{from.name, to.name, 0, 0, 0};
      p.ay_dim = graded_hom_dim(ay, from.ay_index, to.ay_index);
      p.kqi_dim = kqi_hom_dim(qr, qr.quiver.vertex(from.name), qr.quiver.vertex(to.name));
      p.ext1 = graded_ext1_dim(ay, from.ay_index, to.ay_index);
      rep.dims_equal = rep.dims_equal && p.ay_dim == p.kqi_dim;
      rep.ext1_zero = rep.ext1_zero && p.ext1 == 0;
      rep.total_dim += p.ay_dim;
      rep.kqi_total_dim += p.kqi_dim;
      rep.pairs.push_back(p);
    }
  return rep;
}

struct SRingComparison {
  long checked = 0;
  std::vector<std::string> mismatches;
};

/// graded_hom_dim on A_Y against s_dim for every window pair, with the
/// target translated by k c for |k| <= max_twist.
inline SRingComparison compare_with_s_ring(const OrbifoldData& d, int max_twist) {
  require_normalized_presentation(d);
  const LabeledQuiver ay = build_ay(d);
  const auto objects = window_objects(d);
  SRingComparison out;
  for (const auto& from : objects)
    for (const auto& to : objects)
      for (int k = -max_twist; k <= max_twist; ++k) {
        const GradedIndex target{to.ay_index.vertex, to.ay_index.twist + k};
        const long lhs = graded_hom_dim(ay, from.ay_index, target);
        const long rhs = s_dim(d, pic_sub(d, pic_add(d, to.degree, pic_c(d, k)), from.degree));
        ++out.checked;
        if (lhs != rhs)
          out.mismatches.push_back(from.name + " -> " + to.name + " twist " + std::to_string(k) + ": " +
                                   std::to_string(lhs) + " vs " + std::to_string(rhs));
      }
  return out;
}

}  // namespace orbi
