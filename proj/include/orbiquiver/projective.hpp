#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace orbi {

/// A rational point of P^1, stored as [q:1] or [1:0].
class ProjPoint {
 public:
  ProjPoint() = default;  // the point 0
  explicit ProjPoint(Rat value) : value_(std::move(value)) {}
  static ProjPoint infinity() {
    ProjPoint p;
    p.value_.reset();
    return p;
  }
  static ProjPoint finite(const Rat& value) { return ProjPoint(value); }
  static ProjPoint finite(long num, long den = 1) { return ProjPoint(make_rat(num, den)); }

  bool is_infinity() const { return !value_.has_value(); }
  const Rat& value() const {
    if (!value_) fail(ErrorKind::InvalidInput, "the point at infinity has no affine coordinate");
    return *value_;
  }

  /// "inf" or the canonical rational literal.
  std::string to_string() const { return value_ ? format_rat(*value_) : "inf"; }
  static ProjPoint parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    return ProjPoint(parse_rat(text));
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.value_ == *b.value_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  /// Finite points by value, infinity last.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return *a.value_ < *b.value_;
  }

 private:
  std::optional<Rat> value_ = Rat(0);
};

/// Effective divisor on P^1: finitely many points with positive multiplicity.
class EffDivisor {
 public:
  EffDivisor() = default;
  explicit EffDivisor(const ProjPoint& p, int multiplicity = 1) { add(p, multiplicity); }
  EffDivisor(std::initializer_list<std::pair<ProjPoint, int>> entries) {
    for (const auto& [p, m] : entries) add(p, m);
  }

  void add(const ProjPoint& p, int multiplicity) {
    if (multiplicity < 0) fail(ErrorKind::InvalidInput, "negative multiplicity in effective divisor");
    if (multiplicity == 0) return;
    mult_[p] += multiplicity;
  }

  int multiplicity(const ProjPoint& p) const {
    auto it = mult_.find(p);
    return it == mult_.end() ? 0 : it->second;
  }
  int degree() const {
    int d = 0;
    for (const auto& [p, m] : mult_) d += m;
    return d;
  }
  bool is_zero() const { return mult_.empty(); }
  const std::map<ProjPoint, int>& entries() const { return mult_; }

  std::vector<ProjPoint> support() const {
    std::vector<ProjPoint> out;
    for (const auto& [p, m] : mult_) out.push_back(p);
    return out;
  }

  /// The p-primary part: mult_p(D) * p.
  EffDivisor primary_part(const ProjPoint& p) const {
    EffDivisor out;
    out.add(p, multiplicity(p));
    return out;
  }

  /// "{0:1, inf:2}"; the zero divisor prints as "{}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [p, m] : mult_) {
      if (!first) out += ", ";
      first = false;
      out += p.to_string() + ":" + std::to_string(m);
    }
    return out + "}";
  }

  friend bool operator==(const EffDivisor& a, const EffDivisor& b) { return a.mult_ == b.mult_; }
  friend bool operator!=(const EffDivisor& a, const EffDivisor& b) { return !(a == b); }
  friend bool operator<(const EffDivisor& a, const EffDivisor& b) { return a.mult_ < b.mult_; }

 private:
  std::map<ProjPoint, int> mult_;
};

inline EffDivisor divisor_add(const EffDivisor& a, const EffDivisor& b) {
  EffDivisor out = a;
  for (const auto& [p, m] : b.entries()) out.add(p, m);
  return out;
}

inline bool is_reduced(const EffDivisor& d) {
  for (const auto& [p, m] : d.entries())
    if (m != 1) return false;
  return true;
}

/// Homogeneous form in u0, u1; coeffs[k] multiplies u0^k u1^(degree-k).
class HomForm {
 public:
  HomForm() = default;
  HomForm(int degree, std::vector<Rat> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) fail(ErrorKind::InvalidInput, "forms of negative degree do not exist");
    if (coeffs_.size() != static_cast<std::size_t>(degree) + 1)
      fail(ErrorKind::InvalidInput, "form of degree " + std::to_string(degree) + " needs " +
                                        std::to_string(degree + 1) + " coefficients");
  }

  static HomForm zero(int degree) { return HomForm(degree, std::vector<Rat>(static_cast<std::size_t>(degree) + 1, Rat(0))); }
  static HomForm constant(const Rat& c) { return HomForm(0, {c}); }
  static HomForm one() { return constant(Rat(1)); }
  static HomForm u0() { return HomForm(1, {Rat(0), Rat(1)}); }
  static HomForm u1() { return HomForm(1, {Rat(1), Rat(0)}); }

  /// u0 - lambda*u1 for finite points, u1 at infinity.
  static HomForm linear_factor(const ProjPoint& p) {
    if (p.is_infinity()) return u1();
    return HomForm(1, {Rat(-p.value()), Rat(1)});
  }

  int degree() const { return degree_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  HomForm& operator+=(const HomForm& o) {
    if (o.degree_ != degree_) fail(ErrorKind::InvalidInput, "adding forms of different degree");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  friend HomForm operator+(HomForm a, const HomForm& b) { return a += b; }
  friend HomForm operator-(HomForm a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend HomForm operator-(const HomForm& a, const HomForm& b) { return a + (-b); }
  friend HomForm operator*(const HomForm& a, const HomForm& b) {
    HomForm out = zero(a.degree_ + b.degree_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  friend HomForm operator*(const Rat& s, HomForm a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }
  friend bool operator==(const HomForm& a, const HomForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const HomForm& a, const HomForm& b) { return !(a == b); }

  /// Dehomogenization u1 = 1, a polynomial in x = u0/u1.
  Poly finite_chart() const { return Poly(coeffs_); }
  /// Dehomogenization u0 = 1, a polynomial in y = u1/u0.
  Poly infinity_chart() const { return Poly(std::vector<Rat>(coeffs_.rbegin(), coeffs_.rend())); }

  /// Order of vanishing at p; the zero form vanishes to every order and
  /// reports -1.
  int order_at(const ProjPoint& p) const {
    if (is_zero()) return -1;
    if (p.is_infinity()) {
      int top = degree_;
      while (coeffs_[static_cast<std::size_t>(top)] == 0) --top;
      return degree_ - top;
    }
    Poly f = finite_chart();
    const Poly factor(std::vector<Rat>{Rat(-p.value()), Rat(1)});
    int order = 0;
    for (;;) {
      auto [q, r] = divmod(f, factor);
      if (!r.is_zero()) break;
      f = q;
      ++order;
    }
    return order;
  }

  std::string to_string() const {
    std::string out;
    for (int k = degree_; k >= 0; --k) {
      const Rat& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      Rat mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string mono;
      auto power = [](const char* var, int e) {
        return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
      };
      if (k > 0) mono = power("u0", k);
      if (degree_ - k > 0) mono += (mono.empty() ? "" : "*") + power("u1", degree_ - k);
      if (mono.empty()) {
        out += format_rat(mag);
      } else {
        if (mag != 1) out += format_rat(mag) + "*";
        out += mono;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  int degree_ = 0;
  std::vector<Rat> coeffs_{Rat(0)};
};

/// The section cutting out D, normalized so that the coefficient of the
/// highest power of u0 present is one.
inline HomForm divisor_section(const EffDivisor& d) {
  HomForm out = HomForm::one();
  for (const auto& [p, m] : d.entries())
    for (int i = 0; i < m; ++i) out = out * HomForm::linear_factor(p);
  return out;
}

/// dim H^0(P^1, O(d)(-D)).
inline int h0_dim(int d, const EffDivisor& D) {
  const int e = d - D.degree();
  return e < 0 ? 0 : e + 1;
}

/// dim H^1(P^1, O(d)(-D)).
inline int h1_dim(int d, const EffDivisor& D) {
  const int e = D.degree() - d - 1;
  return e < 0 ? 0 : e;
}

}  // namespace orbi
