#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace superkostka {

using Integer = boost::multiprecision::cpp_int;

// Laurent polynomial in q with arbitrary-precision integer coefficients.
// Terms are kept sorted by exponent with no zero coefficients, so equality
// is structural.
class QPolynomial {
 public:
  using Term = std::pair<int, Integer>;

  QPolynomial() = default;
  QPolynomial(Integer c) {  // NOLINT: implicit constant polynomial
    if (c != 0) terms_.emplace_back(0, std::move(c));
  }
  QPolynomial(int c) : QPolynomial(Integer(c)) {}  // NOLINT

  static QPolynomial monomial(int exponent, Integer coeff = 1) {
    QPolynomial p;
    if (coeff != 0) p.terms_.emplace_back(exponent, std::move(coeff));
    return p;
  }

  static QPolynomial from_map(const std::map<int, Integer>& coeffs) {
    QPolynomial p;
    for (const auto& [e, c] : coeffs)
      if (c != 0) p.terms_.emplace_back(e, c);
    return p;
  }

  // Dense coefficients c_0 + c_1 q + ...
  static QPolynomial from_coefficients(const std::vector<long long>& coeffs) {
    QPolynomial p;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
      if (coeffs[e] != 0) p.terms_.emplace_back(static_cast<int>(e), Integer(coeffs[e]));
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  // Highest / lowest exponent; nullopt for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().first;
  }
  std::optional<int> low_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
  }

  Integer coefficient(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return 0;
  }

  Integer eval_at_one() const {
    Integer s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
  }

  // Unimodal: coefficients over the full exponent range [low, high] (with
  // interior zeros included) weakly increase then weakly decrease.
  bool is_unimodal() const {
    if (terms_.empty()) return true;
    Integer prev = 0;
    bool descending = false;
    for (int e = terms_.front().first; e <= terms_.back().first; ++e) {
      Integer c = coefficient(e);
      if (!descending) {
        if (c < prev) descending = true;
      } else if (c > prev) {
        return false;
      }
      prev = std::move(c);
    }
    return true;
  }

  QPolynomial shifted(int k) const {
    QPolynomial p = *this;
    for (auto& t : p.terms_) t.first += k;
    return p;
  }

  QPolynomial& operator+=(const QPolynomial& o) { return merge(o, 1); }
  QPolynomial& operator-=(const QPolynomial& o) { return merge(o, -1); }

  QPolynomial& operator*=(const Integer& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= k;
    }
    return *this;
  }

  // this += k * q^shift * o
  void add_scaled(const QPolynomial& o, const Integer& k, int shift = 0) {
    if (k == 0 || o.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first + shift)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first + shift < a->first) {
        out.emplace_back(b->first + shift, b->second * k);
        ++b;
      } else {
        Integer c = a->second + b->second * k;
        if (c != 0) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  QPolynomial operator-() const {
    QPolynomial p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }
  friend QPolynomial operator*(QPolynomial a, const Integer& k) { return a *= k; }
  friend QPolynomial operator*(const Integer& k, QPolynomial a) { return a *= k; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.shifted(a.terms_[0].first) * a.terms_[0].second;
    if (b.terms_.size() == 1) return a.shifted(b.terms_[0].first) * b.terms_[0].second;
    const int lo = a.terms_.front().first + b.terms_.front().first;
    const int hi = a.terms_.back().first + b.terms_.back().first;
    std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) dense[ea + eb - lo] += ca * cb;
    QPolynomial p;
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (dense[i] != 0) p.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
    return p;
  }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  // Descending, e.g. "2*q^22 + 8*q^21 - q + 3"; "0" for the zero polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool negative = c < 0;
      Integer mag = negative ? Integer(-c) : c;
      if (s.empty()) {
        if (negative) s += "-";
      } else {
        s += negative ? " - " : " + ";
      }
      std::string mono;
      if (e == 0) {
        mono = mag.str();
      } else {
        if (mag != 1) mono = mag.str() + "*";
        mono += "q";
        if (e != 1) mono += "^" + std::to_string(e);
      }
      s += mono;
    }
    return s;
  }

  // Rough heap footprint, used for memo budgeting.
  std::size_t approx_bytes() const { return sizeof(QPolynomial) + terms_.size() * sizeof(Term); }

 private:
  QPolynomial& merge(const QPolynomial& o, int sign) {
    add_scaled(o, Integer(sign), 0);
    return *this;
  }

  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const QPolynomial& p) {
  return os << p.to_string();
}

inline const QPolynomial& q_poly() {
  static const QPolynomial q = QPolynomial::monomial(1);
  return q;
}

}  // namespace superkostka
