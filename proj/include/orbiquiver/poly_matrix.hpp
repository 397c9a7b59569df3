#pragma once

#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace orbi {

/// Dense matrix over Q[t], row major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) fail(ErrorKind::DimError, "entry count differs from rows*cols");
  }

  static PolyMatrix identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  std::vector<Poly> column(std::size_t j) const {
    std::vector<Poly> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::DimError, "matrix product dimensions differ");
    PolyMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Poly& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// The submatrix on the given rows and columns.
  PolyMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    PolyMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out += "[";
      for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
      out += "]\n";
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

/// Column Hermite form H = M * U with U unimodular over Q[t]. Column k < rank
/// has its first nonzero entry, a monic pivot, at row pivot_rows[k]; pivot
/// rows increase with k; entries left of a pivot have lower degree than the
/// pivot; columns from rank on are zero.
struct HermiteForm {
  PolyMatrix h;
  PolyMatrix u;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return pivot_rows.size(); }
};

namespace detail {

inline void column_axpy(PolyMatrix& m, std::size_t dst, const Poly& f, std::size_t src) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, src).is_zero()) m(i, dst) -= f * m(i, src);
}

inline void column_swap(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

inline void column_scale(PolyMatrix& m, std::size_t c, const Rat& s) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, c).is_zero()) m(i, c) = Poly(s) * m(i, c);
}

}  // namespace detail

/// Euclidean column reduction row by row. Coefficients stay rational; pivots
/// are kept monic so that quotients stay small.
inline HermiteForm column_hermite_form(const PolyMatrix& m) {
  HermiteForm hf{m, PolyMatrix::identity(m.cols()), {}};
  PolyMatrix& h = hf.h;
  PolyMatrix& u = hf.u;
  std::size_t next = 0;
  for (std::size_t row = 0; row < h.rows() && next < h.cols(); ++row) {
    for (;;) {
      std::size_t pivot = h.cols();
      for (std::size_t j = next; j < h.cols(); ++j) {
        if (h(row, j).is_zero()) continue;
        if (pivot == h.cols() || h(row, j).degree() < h(row, pivot).degree()) pivot = j;
      }
      if (pivot == h.cols()) break;
      bool others = false;
      for (std::size_t j = next; j < h.cols(); ++j) {
        if (j == pivot || h(row, j).is_zero()) continue;
        auto [quot, rem] = divmod(h(row, j), h(row, pivot));
        detail::column_axpy(h, j, quot, pivot);
        detail::column_axpy(u, j, quot, pivot);
        others = others || !rem.is_zero();
      }
      if (others) continue;
      detail::column_swap(h, pivot, next);
      detail::column_swap(u, pivot, next);
      const Rat inv = 1 / h(row, next).leading();
      detail::column_scale(h, next, inv);
      detail::column_scale(u, next, inv);
      for (std::size_t j = 0; j < next; ++j) {
        if (h(row, j).is_zero()) continue;
        auto [quot, rem] = divmod(h(row, j), h(row, next));
        if (quot.is_zero()) continue;
        detail::column_axpy(h, j, quot, next);
        detail::column_axpy(u, j, quot, next);
      }
      hf.pivot_rows.push_back(row);
      ++next;
      break;
    }
  }
  return hf;
}

/// Basis of {x : M x = 0} over Q[t], as the columns of the result.
inline PolyMatrix poly_kernel(const PolyMatrix& m) {
  const auto hf = column_hermite_form(m);
  const std::size_t r = hf.rank();
  PolyMatrix k(m.cols(), m.cols() - r);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = r; j < m.cols(); ++j) k(i, j - r) = hf.u(i, j);
  return k;
}

/// Rank over the fraction field Q(t).
inline std::size_t poly_rank(const PolyMatrix& m) { return column_hermite_form(m).rank(); }

/// Whether v = M x has a solution with polynomial entries.
inline bool membership(const HermiteForm& hf, std::vector<Poly> v) {
  const PolyMatrix& h = hf.h;
  if (v.size() != h.rows()) fail(ErrorKind::DimError, "vector length differs from the row count");
  for (std::size_t k = 0; k < hf.rank(); ++k) {
    const std::size_t row = hf.pivot_rows[k];
    for (std::size_t i = 0; i < row; ++i)
      if (!v[i].is_zero()) return false;
    if (v[row].is_zero()) continue;
    auto [quot, rem] = divmod(v[row], h(row, k));
    if (!rem.is_zero()) return false;
    for (std::size_t i = row; i < h.rows(); ++i)
      if (!h(i, k).is_zero()) v[i] -= quot * h(i, k);
  }
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

inline bool membership(const PolyMatrix& m, const std::vector<Poly>& v) {
  if (v.size() != m.rows()) fail(ErrorKind::DimError, "vector length differs from the row count");
  return membership(column_hermite_form(m), v);
}

}  // namespace orbi
