#pragma once

// Brute-force counterparts for the lattice order, the coordinate ring and
// the stability inequalities.

#include <functional>
#include <vector>

#include "orbiquiver/orbifold.hpp"
#include "truncation_oracle.hpp"

namespace oracle {

/// Whether x = m c + sum a_i x_i equals sum e_i x_i for some e_i in [0, bound].
inline bool nonnegative_representation(const std::vector<int>& r, long m, const std::vector<long>& a, long bound) {
  const std::size_t n = r.size();
  std::vector<long> e(n, 0);
  // Two elements agree in L iff m c + sum a_i x_i - sum e_i x_i has every
  // x_i-coefficient divisible by r_i and the quotients cancel m.
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == n) {
      long total = m;
      for (std::size_t k = 0; k < n; ++k) {
        const long diff = a[k] - e[k];
        if (diff % r[k] != 0) return false;
        total += diff / r[k];
      }
      return total == 0;
    }
    for (e[i] = 0; e[i] <= bound; ++e[i])
      if (search(i + 1)) return true;
    return false;
  };
  return search(0);
}

/// Exponent vectors of all monomials of degree (m; a) in k[x_1..x_n].
inline std::vector<std::vector<long>> monomials_of_degree(const std::vector<int>& r, long m, const std::vector<long>& a) {
  std::vector<std::vector<long>> out;
  if (m < 0) return out;
  std::vector<long> q(r.size(), 0);
  std::function<void(std::size_t, long)> fill = [&](std::size_t i, long left) {
    if (i + 1 == r.size()) {
      q[i] = left;
      std::vector<long> e(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) e[k] = a[k] + r[k] * q[k];
      out.push_back(e);
      return;
    }
    for (long k = 0; k <= left; ++k) {
      q[i] = k;
      fill(i + 1, left - k);
    }
  };
  fill(0, m);
  return out;
}

/// Monomials of degree d minus the rank of {mu * f_i}, with
/// f_i = x_i^{r_i} - x_2^{r_2} + lambda_i x_1^{r_1}.
inline long s_dim_by_relations(const orbi::OrbifoldData& d, const orbi::PicElement& deg) {
  const auto basis = monomials_of_degree(d.r, deg.m, deg.a);
  const auto multipliers = monomials_of_degree(d.r, deg.m - 1, deg.a);
  std::map<std::vector<long>, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;
  Dense rows;
  for (std::size_t i = 2; i < d.n(); ++i)
    for (const auto& mu : multipliers) {
      std::vector<mpq_class> row(basis.size(), 0);
      auto bump = [&](std::size_t var, const mpq_class& c) {
        auto e = mu;
        e[var] += d.r[var];
        row[column.at(e)] += c;
      };
      bump(i, 1);
      bump(1, -1);
      bump(0, d.lambda[i].value());
      rows.push_back(row);
    }
  return static_cast<long>(basis.size()) - static_cast<long>(rows.empty() ? 0 : dense_rank(rows));
}

/// The inequality over every subset of indices whose points coincide,
/// the empty subset included.
struct StabilityVerdict {
  bool semistable = true;
  bool stable = true;
};

inline StabilityVerdict stability_by_subsets(const std::vector<long>& chi, const std::vector<orbi::ProjPoint>& lambda) {
  const std::size_t n = chi.size();
  long total = 0;
  for (long x : chi) total += x;
  StabilityVerdict v;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    long first = -1;
    bool collided = true;
    long sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      if (first < 0) first = static_cast<long>(i);
      collided = collided && lambda[i] == lambda[static_cast<std::size_t>(first)];
      sum += chi[i];
    }
    if (!collided) continue;
    if (2 * sum > total) v.semistable = false;
    if (2 * sum >= total) v.stable = false;
  }
  return v;
}

}  // namespace oracle
