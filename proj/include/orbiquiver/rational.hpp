#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace orbi {

/// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// "p" for integers, "p/q" otherwise.
inline std::string format_rat(const Rat& q) { return q.get_str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Accepts "7", "-3/4", "+2", "0.125", "-1.5".
inline Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rat value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      fail(ErrorKind::Schema, "malformed rational literal '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorKind::Schema, "zero denominator in '" + std::string(text) + "'");
    value = Rat(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      fail(ErrorKind::Schema, "malformed decimal literal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    value = Rat(digits, scale);
  } else {
    if (!detail::all_digits(s))
      fail(ErrorKind::Schema, "malformed rational literal '" + std::string(text) + "'");
    value = Rat(mpz_class(std::string(s), 10));
  }
  value.canonicalize();
  return negative ? Rat(-value) : value;
}

/// Rank of a dense rational matrix by Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rat>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace orbi
