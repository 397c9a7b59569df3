// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "orbiquiver/orbiquiver.hpp"
#include "support/random_elements.hpp"
#include "support/rewriting_oracle.hpp"
#include "support/small_oracles.hpp"
#include "support/truncation_oracle.hpp"

using namespace orbi;

namespace {

const ProjPoint inf = ProjPoint::infinity();
ProjPoint pt(long v) { return ProjPoint::finite(v); }

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

LabeledQuiver two_petals(EffDivisor d1, EffDivisor d2) {
  Quiver q({"0", "1", "2"}, {{"a1", "0", "1"}, {"b1", "1", "0"}, {"a2", "0", "2"}, {"b2", "2", "0"}});
  return LabeledQuiver::with_labels(q, {{"b1", d1}, {"b2", d2}});
}

std::vector<LabeledQuiver> random_corpus() {
  SplitMix64 rng(2024);
  std::vector<LabeledQuiver> out;
  for (int i = 0; i < 120; ++i) out.push_back(random_reduced_quiver(rng, {6, 3, 2}));
  return out;
}

std::vector<LabeledQuiver> ay_corpus() {
  std::vector<LabeledQuiver> out;
  const std::vector<ProjPoint> points{inf, pt(0), pt(1)};
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<int> r(n, 2);
    for (;;) {
      out.push_back(build_ay({r, std::vector<ProjPoint>(points.begin(), points.begin() + static_cast<long>(n))}));
      std::size_t i = 0;
      while (i < n && ++r[i] > 4) r[i++] = 2;
      if (i == n) break;
    }
  }
  return out;
}

int max_multiplicity(const LabeledQuiver& lq) {
  int m = 0;
  for (const auto& d : lq.labels())
    for (const auto& [p, k] : d.entries()) m = std::max(m, k);
  return m;
}

/// lambda = (inf, 0, then random small points), n >= 2 unless allow_single.
OrbifoldData random_orbifold(SplitMix64& rng, std::size_t max_n, int max_r, bool allow_single) {
  OrbifoldData d;
  const std::size_t lo = allow_single ? 1 : 2;
  const std::size_t n = lo + rng.below(max_n - lo + 1);
  for (std::size_t i = 0; i < n; ++i) {
    d.r.push_back(static_cast<int>(rng.between(2, max_r)));
    d.lambda.push_back(i == 0 ? inf : i == 1 ? pt(0) : pt(rng.between(0, 2)));
  }
  return d;
}

bool has_collision(const OrbifoldData& d) { return collision_classes(d.lambda).size() < d.n(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// ---------------------------------------------------------------------------

Check basis_and_multiplication() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  auto corpus = random_corpus();
  for (auto& lq : ay_corpus()) corpus.push_back(lq);
  SplitMix64 rng(7);
  int triples = 0;
  for (const auto& lq : corpus) {
    const auto summary = oracle::rewriting_classes(lq.quiver(), lq.quiver().num_vertices() + 2);
    c.require(summary.one_acyclic_per_class, "rewriting class without a unique acyclic path");
    c.require(algebra_rank(lq) == summary.classes, "rank differs from rewriting classes");
    c.require(algebra_rank(lq) == acyclic_paths(lq.quiver()).size(), "rank differs from acyclic count");
    const std::size_t n = lq.quiver().num_vertices();
    for (int k = 0; k < 3; ++k) {
      const auto raw = testing_support::random_raw_element(rng, lq, rng.below(n), rng.below(n), 1);
      const auto a = normal_form(lq, raw, {ReductionOrder::Random, rng.next()});
      const auto b = normal_form(lq, raw, {ReductionOrder::Random, rng.next()});
      c.require(a == b && a == normal_form(lq, raw, {ReductionOrder::Rightmost, 0}), "normal form not confluent");
    }
  }
  for (std::size_t i = 0; triples < 1000 && i < 100000; ++i) {
    const LabeledQuiver& lq = corpus[i % corpus.size()];
    auto step = [&](std::size_t from) {
      std::vector<std::size_t> ends;
      for (const auto& p : lq.acyclic_paths())
        if (p.source() == from) ends.push_back(p.target(lq.quiver()));
      return ends[rng.below(ends.size())];
    };
    const std::size_t a = rng.below(lq.quiver().num_vertices()), b = step(a), cc = step(b), d = step(cc);
    const auto z = testing_support::random_element(rng, lq, a, b, static_cast<int>(rng.below(4)));
    const auto y = testing_support::random_element(rng, lq, b, cc, static_cast<int>(rng.below(4)));
    const auto x = testing_support::random_element(rng, lq, cc, d, static_cast<int>(rng.below(4)));
    if (x.is_zero() || y.is_zero() || z.is_zero()) continue;
    c.require(multiply(lq, multiply(lq, x, y), z) == multiply(lq, x, multiply(lq, y, z)), "multiply not associative");
    ++triples;
  }
  const double secs = seconds_since(t0);
  c.require(triples == 1000, "could not draw 1000 triples");
  c.require(secs < 60, "too slow");
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(corpus.size()) + " quivers, " + std::to_string(triples) +
              " triples, " + std::to_string(secs).substr(0, 5) + " s";
  return c;
}

Check root_stack_rank() {
  Check c;
  for (int r : {2, 3, 5}) {
    const LabeledQuiver lq = build_ay({{r}, {pt(0)}});
    c.require(algebra_rank(lq) == static_cast<std::size_t>(r * r), "rank is not r^2 for r=" + std::to_string(r));
    c.require(oracle::rewriting_classes(lq.quiver(), 2 * r + 1).classes == static_cast<std::size_t>(r * r),
              "oracle rank is not r^2");
  }
  return c;
}

Check matrix_golden() {
  Check c;
  const auto text = matrix_to_string(matrix_presentation(two_petals(EffDivisor(pt(0)), EffDivisor(pt(0)))));
  c.require(text == slurp(ORBI_GOLDEN_DIR "/matrix_lambda0.txt"), "matrix differs from golden");
  return c;
}

Check degenerate_dimension() {
  Check c;
  const LabeledQuiver lq = two_petals(EffDivisor(pt(0)), EffDivisor(pt(0)));
  c.require(pd_simple(lq, 0, pt(0)).pd == 2, "pd(0, 0) != 2");
  c.require(check_exactness(build_simple_resolution(lq, 0, pt(0))), "resolution at 0 not exact");
  std::vector<ProjPoint> points{pt(0), pt(1), pt(-1), pt(2), inf, ProjPoint::finite(Rat(1, 2))};
  for (std::size_t v = 0; v < 3; ++v)
    for (const auto& p : points) {
      if (v == 0 && p == pt(0)) continue;
      c.require(pd_simple(lq, v, p).pd <= 1, "pd > 1 away from (0, 0)");
    }
  return c;
}

Check global_dimension() {
  Check c;
  auto corpus = random_corpus();
  for (auto& lq : ay_corpus()) corpus.push_back(lq);
  std::size_t resolutions = 0;
  int worst = 0;
  for (const auto& lq : corpus) {
    const auto rep = certify_hd(lq);
    worst = std::max(worst, rep.max_pd);
    c.require(rep.satisfied, "pd > 2");
    for (const auto& r : rep.table) {
      const std::size_t n = oracle::default_truncation(r.complex, max_multiplicity(r.local.quiver));
      c.require(oracle::exact_by_truncation(r.complex, n) == r.exact, "truncation oracle disagrees");
      ++resolutions;
    }
  }
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(resolutions) + " resolutions, max pd " +
              std::to_string(worst);
  return c;
}

Check morita() {
  Check c;
  SplitMix64 rng(606);
  for (int i = 0; i < 200; ++i) {
    const auto inst = random_zero_cycle_quiver(rng, {6, 3, 2});
    const auto con = contract_labeled(inst.quiver, inst.cycle);
    const std::size_t n = inst.quiver.quiver().num_vertices();
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        for (int k = -3; k <= 3; ++k)
          c.require(graded_hom_dim(inst.quiver, {w, 0}, {v, k}) ==
                        graded_hom_dim(con.quiver, {con.vertex_map[w], 0}, {con.vertex_map[v], k}),
                    "graded dims change under contraction");
  }
  return c;
}

Check exceptional_collection() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = verify_exceptional_collection({{2, 2, 2}, {inf, pt(0), pt(1)}});
  c.require(rep.total_dim == 13 && rep.kqi_total_dim == 13, "total dimension != 13");
  c.require(rep.dims_equal && rep.ext1_zero, "(2,2,2) flags");
  SplitMix64 rng(77);
  int collided = 0;
  for (int i = 0; i < 20; ++i) {
    OrbifoldData d = random_orbifold(rng, 4, 5, true);
    if (i % 4 == 0 && d.n() >= 3) d.lambda[2] = pt(0);
    collided += has_collision(d) ? 1 : 0;
    const auto e = verify_exceptional_collection(d);
    c.require(e.dims_equal && e.ext1_zero && e.total_dim == e.kqi_total_dim, "random collection flags");
  }
  const double secs = seconds_since(t0);
  c.require(collided > 0, "no collided tuple drawn");
  c.require(secs < 120, "too slow");
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(collided) + " collided of 20";
  return c;
}

Check flatness_and_equivalence() {
  Check c;
  const std::size_t rank = algebra_rank(build_ay({{2, 2, 2}, {inf, pt(0), pt(1)}}));
  for (long k = 0; k < 10; ++k)
    c.require(algebra_rank(build_ay({{2, 2, 2}, {inf, pt(0), ProjPoint::finite(Rat(k, 4))}})) == rank,
              "rank jumps along the degeneration");
  for (const OrbifoldData& d : {OrbifoldData{{2, 2, 2}, {inf, pt(0), pt(1)}}, OrbifoldData{{2, 3, 4}, {inf, pt(0), pt(1)}},
                                OrbifoldData{{3, 3, 2, 2}, {inf, pt(0), pt(1), pt(-1)}}, OrbifoldData{{2, 5}, {inf, pt(0)}}}) {
    const auto cmp = compare_with_s_ring(d, 3);
    c.require(cmp.mismatches.empty(), "graded hom differs from s_dim");
    c.require(certify_hd(build_ay(d)).max_pd <= 2, "A_Y pd > 2");
  }
  return c;
}

Check stability() {
  Check c;
  // all set partitions of 4 points, as restricted growth strings
  std::vector<std::vector<ProjPoint>> patterns;
  std::function<void(std::vector<long>&, long)> grow = [&](std::vector<long>& code, long used) {
    if (code.size() == 4) {
      std::vector<ProjPoint> lambda;
      for (long x : code) lambda.push_back(x == 0 ? inf : pt(x - 1));
      patterns.push_back(lambda);
      return;
    }
    for (long x = 0; x <= used; ++x) {
      code.push_back(x);
      grow(code, std::max(used, x + 1));
      code.pop_back();
    }
  };
  std::vector<long> code;
  grow(code, 0);
  c.require(patterns.size() == 15, "expected 15 collision patterns");
  std::vector<long> chi(4);
  for (long k = 0; k < 625; ++k) {
    long rest = k;
    for (auto& x : chi) {
      x = rest % 5 - 2;
      rest /= 5;
    }
    for (const auto& lambda : patterns) {
      const auto want = oracle::stability_by_subsets(chi, lambda);
      c.require(is_semistable(chi, lambda) == want.semistable && is_stable(chi, lambda) == want.stable,
                "closed form disagrees with enumeration");
    }
  }
  const std::vector<long> ones{1, 1, 1, 1};
  c.require(is_semistable(ones, {inf, pt(0), pt(1), pt(1)}) && !is_stable(ones, {inf, pt(0), pt(1), pt(1)}), "row 1");
  c.require(!is_semistable(ones, {inf, pt(0), pt(0), pt(0)}), "row 2");
  c.require(is_semistable(ones, {inf, pt(0), pt(1), pt(2)}) && is_stable(ones, {inf, pt(0), pt(1), pt(2)}), "row 3");
  c.require(is_stable({2, 1, 1, 1}, {inf, pt(0), pt(1), pt(1)}), "row 4");
  c.require(!is_generic(ones) && is_generic({1, 1, 1, 2}) && !is_generic({2, 2}), "genericity rows");
  return c;
}

Check hilbert_data() {
  Check c;
  SplitMix64 rng(1010);
  int collided = 0;
  for (int i = 0; i < 10; ++i) {
    OrbifoldData d = random_orbifold(rng, 4, 5, false);
    if (i % 3 == 0 && d.n() >= 3) d.lambda[2] = pt(0);
    collided += has_collision(d) ? 1 : 0;
    for (long m = 0; m <= 10; ++m) c.require(s_dim(d, pic_c(d, m)) == m + 1, "s_dim(mc) != m + 1");
    for (const auto& w : window_objects(d))
      for (long k = 0; k <= 2; ++k) {
        const PicElement deg = pic_add(d, w.degree, pic_c(d, k));
        if (!pic_leq(d, pic_c(d), deg) || !pic_leq(d, deg, pic_c(d, 3))) continue;
        for (std::size_t j = 0; j < d.n(); ++j)
          for (long a = 1; a < d.r[j]; ++a) {
            const PicElement ax = pic_x(d, j, a);
            const long sum = s_dim(d, deg) - s_dim(d, pic_sub(d, deg, ax)) - s_dim(d, pic_sub(d, deg, pic_c(d))) +
                             s_dim(d, pic_sub(d, pic_sub(d, deg, ax), pic_c(d)));
            c.require(sum == 0, "additivity fails at " + pic_to_string(deg));
          }
      }
  }
  c.require(collided > 0, "no collided tuple drawn");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"basis, confluence and associativity", basis_and_multiplication},
      {"root stack rank r^2", root_stack_rank},
      {"matrix presentation golden", matrix_golden},
      {"degenerate example has dimension two", degenerate_dimension},
      {"global dimension at most two", global_dimension},
      {"contraction invariance", morita},
      {"exceptional collection", exceptional_collection},
      {"flatness and equivalence proxies", flatness_and_equivalence},
      {"stability", stability},
      {"Hilbert data of S", hilbert_data},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    failures += c.ok ? 0 : 1;
    std::printf("%s %2zu %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                c.detail.empty() ? "" : " : ", c.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
