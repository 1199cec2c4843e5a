#pragma once

#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "superkostka/algebra.hpp"
#include "superkostka/error.hpp"
#include "superkostka/qpolynomial.hpp"

namespace superkostka {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view word) {
    skip_space();
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (done()) fail("expected an integer");
    if (peek() == '+' || peek() == '-') ++pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start + (s_[start] == '+' ? 1 : 0),
                                     s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in \"" + std::string(s_) + "\"", pos_);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// One entry "a" or "a/2", returned doubled.
inline int doubled_entry(Cursor& c) {
  const long long a = c.integer();
  long long d = 2 * a;
  if (c.accept('/')) {
    const std::size_t at = c.pos();
    if (c.integer() != 2) throw ParseError("only the denominator 2 is allowed", at);
    d = a;
  }
  if (d > (1 << 28) || d < -(1 << 28)) c.fail("entry out of range");
  return static_cast<int>(d);
}

inline std::vector<int> entry_list(Cursor& c, char stop) {
  std::vector<int> out;
  c.skip_space();
  if (c.done() || c.peek() == stop) return out;
  do {
    out.push_back(doubled_entry(c));
  } while (c.accept(','));
  return out;
}

}  // namespace detail

// "gl:N,M", "spo:2n=A,M=B" or "spo:A,B" with A = 2n and B the odd/even size M.
inline AlgebraSpec parse_algebra(std::string_view s) {
  detail::Cursor c(s);
  AlgebraSpec spec;
  if (c.accept("gl:")) {
    const long long n = c.integer();
    c.expect(',');
    const long long m = c.integer();
    c.skip_space();
    if (!c.done()) c.fail("trailing characters");
    if (n < 1 || m < 1 || n > 64 || m > 64) c.fail("gl:N,M needs 1 <= N, M <= 64");
    return AlgebraSpec::gl(static_cast<int>(n), static_cast<int>(m));
  }
  if (!c.accept("spo:")) c.fail("expected 'gl:' or 'spo:'");
  const bool named = c.accept("2n=");
  const std::size_t at_a = c.pos();
  const long long a = c.integer();
  c.expect(',');
  if (named && !c.accept("M=")) c.fail("expected 'M='");
  const std::size_t at_b = c.pos();
  const long long b = c.integer();
  c.skip_space();
  if (!c.done()) c.fail("trailing characters");
  if (a < 2 || a % 2 != 0 || a > 128) throw ParseError("2n must be an even number >= 2", at_a);
  if (b < 1 || b > 129) throw ParseError("M must be between 1 and 129", at_b);
  const int n = static_cast<int>(a / 2);
  if (b % 2 == 1) return AlgebraSpec::spo_odd(n, static_cast<int>((b - 1) / 2));
  return AlgebraSpec::spo_even(n, static_cast<int>(b / 2));
}

inline std::string format_algebra(const AlgebraSpec& spec) {
  switch (spec.family) {
    case Family::GL: return "gl:" + std::to_string(spec.n) + "," + std::to_string(spec.m);
    case Family::SPO_ODD:
      return "spo:2n=" + std::to_string(2 * spec.n) + ",M=" + std::to_string(2 * spec.m + 1);
    case Family::SPO_EVEN:
      return "spo:2n=" + std::to_string(2 * spec.n) + ",M=" + std::to_string(2 * spec.m);
  }
  return "?";
}

// "3,1,-2;4,2,-8"; entries may be written a/2. Parentheses are optional.
inline Weight parse_weight(std::string_view s) {
  detail::Cursor c(s);
  const bool paren = c.accept('(');
  auto p0 = detail::entry_list(c, ';');
  c.expect(';');
  auto p1 = detail::entry_list(c, paren ? ')' : '\0');
  if (paren) c.expect(')');
  c.skip_space();
  if (!c.done()) c.fail("trailing characters");
  return {std::move(p0), std::move(p1)};
}

inline Weight parse_weight(std::string_view s, const AlgebraSpec& spec) {
  Weight w = parse_weight(s);
  if (!w.fits(spec))
    throw DimensionMismatch("weight \"" + std::string(s) + "\" needs " + std::to_string(spec.n) +
                            " and " + std::to_string(spec.m) + " entries for " + spec.name());
  return w;
}

// Canonical form accepted by parse_weight: no parentheses, no spaces.
inline std::string format_weight(const Weight& w) {
  std::string s = w.to_string();
  return s.substr(1, s.size() - 2);
}

//---------------------------------------------------------------------------//
// Polynomials
//---------------------------------------------------------------------------//

inline nlohmann::json polynomial_to_json(const QPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      coeffs[std::to_string(e)] = static_cast<long long>(c);
    else
      coeffs[std::to_string(e)] = c.str();
  }
  return {{"coeffs", coeffs}};
}

inline QPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
    throw ParseError("expected {\"coeffs\": {...}}", 0);
  std::map<int, Integer> m;
  for (const auto& [key, val] : j["coeffs"].items()) {
    int e = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
    if (ec != std::errc() || ptr != key.data() + key.size())
      throw ParseError("bad exponent \"" + key + "\"", 0);
    if (val.is_number_integer())
      m[e] += Integer(val.get<long long>());
    else if (val.is_string())
      m[e] += Integer(val.get<std::string>());
    else
      throw ParseError("bad coefficient for exponent " + key, 0);
  }
  return QPolynomial::from_map(m);
}

// Inverse of QPolynomial::to_string; spacing is free.
inline QPolynomial parse_polynomial(std::string_view s) {
  detail::Cursor c(s);
  c.skip_space();
  if (c.accept('0')) {
    c.skip_space();
    if (c.done()) return {};
    c.fail("unexpected text after 0");
  }
  std::map<int, Integer> m;
  bool first = true;
  while (true) {
    c.skip_space();
    if (c.done()) {
      if (first) c.fail("empty polynomial");
      break;
    }
    int sign = 1;
    if (c.accept('-')) {
      sign = -1;
    } else if (!c.accept('+') && !first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    c.skip_space();
    Integer coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        digits += c.peek();
        c.accept(c.peek());
      }
      coeff = Integer(digits);
      have_coeff = true;
    }
    int e = 0;
    const bool star = have_coeff && c.accept('*');
    if (c.accept('q')) {
      e = 1;
      if (c.accept('^')) e = static_cast<int>(c.integer());
    } else if (!have_coeff || star) {
      c.fail("expected 'q'");
    }
    m[e] += sign * coeff;
  }
  return QPolynomial::from_map(m);
}

}  // namespace superkostka
