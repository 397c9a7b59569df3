#pragma once

#include <vector>

#include "projective.hpp"

namespace orbi {

/// Indices grouped by equal points, classes ordered by their smallest index.
inline std::vector<std::vector<std::size_t>> collision_classes(const std::vector<ProjPoint>& lambda) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    bool placed = false;
    for (auto& c : classes)
      if (lambda[c.front()] == lambda[i]) {
        c.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

namespace detail {

inline void require_same_length(const std::vector<long>& chi, const std::vector<ProjPoint>& lambda) {
  if (chi.size() != lambda.size()) fail(ErrorKind::DimError, "chi and lambda have different lengths");
}

inline long total(const std::vector<long>& chi) {
  long s = 0;
  for (long x : chi) s += x;
  return s;
}

/// Largest subset sum inside each class; the empty subset contributes 0.
inline std::vector<long> class_maxima(const std::vector<long>& chi, const std::vector<ProjPoint>& lambda) {
  std::vector<long> out;
  for (const auto& c : collision_classes(lambda)) {
    long s = 0;
    for (auto i : c)
      if (chi[i] > 0) s += chi[i];
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

/// Every subset of collided indices has weight at most half the total.
inline bool is_semistable(const std::vector<long>& chi, const std::vector<ProjPoint>& lambda) {
  detail::require_same_length(chi, lambda);
  const long sum = detail::total(chi);
  for (long s : detail::class_maxima(chi, lambda))
    if (2 * s > sum) return false;
  return true;
}

/// The same inequality, strict.
inline bool is_stable(const std::vector<long>& chi, const std::vector<ProjPoint>& lambda) {
  detail::require_same_length(chi, lambda);
  const long sum = detail::total(chi);
  for (long s : detail::class_maxima(chi, lambda))
    if (2 * s >= sum) return false;
  return true;
}

/// No subset of {1..n} weighs exactly half the total.
inline bool is_generic(const std::vector<long>& chi) {
  if (chi.size() > 20) fail(ErrorKind::SizeLimit, "genericity is checked by enumeration for n <= 20");
  const long sum = detail::total(chi);
  const std::size_t n = chi.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s += chi[i];
    if (2 * s == sum) return false;
  }
  return true;
}

}  // namespace orbi
