#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace orbi {

/// Univariate polynomial over the rationals in the chart variable t.
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  Poly(int c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(const Rat& c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = c;
    return Poly(std::move(v));
  }
  static Poly t_power(std::size_t degree) { return monomial(Rat(1), degree); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division; the divisor must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorKind::InternalError, "polynomial division by zero");
    Poly rem = a;
    if (rem.degree() < b.degree()) return {Poly{}, rem};
    std::vector<Rat> quot(static_cast<std::size_t>(rem.degree() - b.degree() + 1), Rat(0));
    const Rat lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
      Rat f = rem.leading() / lead;
      quot[shift] = f;
      for (std::size_t i = 0; i < b.coeffs_.size(); ++i) rem.coeffs_[i + shift] -= f * b.coeffs_[i];
      rem.trim();
    }
    return {Poly(std::move(quot)), rem};
  }

  /// Scales to leading coefficient one; zero stays zero.
  Poly monic() const {
    if (is_zero()) return {};
    Poly out = *this;
    Rat inv = 1 / leading();
    for (auto& c : out.coeffs_) c *= inv;
    return out;
  }

  /// Keeps only the terms of degree below n (reduction modulo t^n).
  Poly truncated(std::size_t n) const {
    if (coeffs_.size() <= n) return *this;
    return Poly(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
      const Rat& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      Rat mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      const bool unit = mag == 1;
      if (k == 0 || !unit) out += format_rat(mag);
      if (k > 0) {
        if (!unit) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rat> coeffs_;
};

}  // namespace orbi
