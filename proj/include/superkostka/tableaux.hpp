#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superkostka/algebra.hpp"
#include "superkostka/error.hpp"
#include "superkostka/qpolynomial.hpp"

namespace superkostka {

// Letters of A_{n,m}: the barred letter ibar is stored as -i, the unbarred
// letter r as r. Integer order then matches nbar < ... < 1bar < 1 < ... < m.
inline bool is_barred(int letter) { return letter < 0; }

inline std::string letter_name(int letter) {
  return letter < 0 ? std::to_string(-letter) + "bar" : std::to_string(letter);
}

// Tableau with a (possibly skew) shape. Row i holds its cells left to right;
// 0 marks a cell of the inner shape.
struct ClassicalTableau {
  std::vector<std::vector<int>> rows;

  friend bool operator==(const ClassicalTableau&, const ClassicalTableau&) = default;

  std::vector<int> shape() const {
    std::vector<int> s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    while (!s.empty() && s.back() == 0) s.pop_back();
    return s;
  }

  std::vector<int> inner_shape() const {
    std::vector<int> s;
    for (const auto& r : rows)
      s.push_back(static_cast<int>(std::count(r.begin(), r.end(), 0)));
    while (!s.empty() && s.back() == 0) s.pop_back();
    return s;
  }

  bool is_straight() const { return inner_shape().empty(); }

  std::size_t size() const {
    std::size_t k = 0;
    for (const auto& r : rows)
      for (int v : r)
        if (v != 0) ++k;
    return k;
  }

  // content[k-1] = number of k's, for letters 1..alphabet.
  std::vector<int> content(int alphabet) const {
    std::vector<int> c(alphabet, 0);
    for (const auto& r : rows)
      for (int v : r)
        if (v > 0 && v <= alphabet) ++c[v - 1];
    return c;
  }

  // Semistandard: rows weakly increasing, columns strictly increasing,
  // inner cells forming a partition at the top-left.
  bool is_semistandard() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      bool seen_filled = false;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const int v = rows[i][j];
        if (v == 0) {
          if (seen_filled) return false;
          if (i > 0 && (j >= rows[i - 1].size() || rows[i - 1][j] != 0)) return false;
          continue;
        }
        seen_filled = true;
        if (j > 0 && rows[i][j - 1] != 0 && rows[i][j - 1] > v) return false;
        if (i > 0) {
          if (j >= rows[i - 1].size()) return false;
          if (rows[i - 1][j] != 0 && rows[i - 1][j] >= v) return false;
        }
      }
      if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    }
    return true;
  }

  // Rows top to bottom, each read right to left.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows)
      for (auto it = r.rbegin(); it != r.rend(); ++it)
        if (*it != 0) w.push_back(*it);
    return w;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& r : rows) {
      s += "[";
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j) s += " ";
        s += r[j] == 0 ? "." : std::to_string(r[j]);
      }
      s += "]";
    }
    return s;
  }
};

// Filling of the hook diagram Y(lambda) by letters of A_{n,m}.
struct HookTableau {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const HookTableau&, const HookTableau&) = default;

  std::vector<int> shape() const {
    std::vector<int> s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
  }

  bool is_valid() const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const int x = rows[i][j];
        if (x == 0 || x < -n || x > m) return false;
        if (j > 0) {
          const int l = rows[i][j - 1];
          if (l > x || (l == x && !is_barred(x))) return false;
        }
        if (i > 0) {
          if (j >= rows[i - 1].size()) return false;
          const int u = rows[i - 1][j];
          if (u > x || (u == x && is_barred(x))) return false;
        }
      }
    return true;
  }

  // Weight: part0 index of ibar is n - i, part1 index of r is r - 1.
  Weight content() const {
    std::vector<int> a(n, 0), b(m, 0);
    for (const auto& r : rows)
      for (int x : r) {
        if (is_barred(x))
          a[n + x] += 2;
        else
          b[x - 1] += 2;
      }
    return {a, b};
  }

  std::string to_string() const {
    std::string s;
    for (const auto& r : rows) {
      s += "[";
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j) s += " ";
        s += letter_name(r[j]);
      }
      s += "]";
    }
    return s;
  }
};

//---------------------------------------------------------------------------//
// Enumeration
//---------------------------------------------------------------------------//

namespace detail {

struct SshtSearch {
  int n, m;
  std::vector<int> shape;
  std::vector<std::pair<int, int>> cells;
  const std::vector<int>* remaining0;  // nullptr means unrestricted content
  std::vector<int> left0, left1;
  HookTableau cur;
  std::vector<HookTableau>* out;

  void run(std::size_t k) {
    if (k == cells.size()) {
      out->push_back(cur);
      return;
    }
    const auto [i, j] = cells[k];
    int lo = -n;
    bool strict_left = false, strict_up = false;
    int left = 0, up = 0;
    if (j > 0) {
      left = cur.rows[i][j - 1];
      lo = std::max(lo, left);
      strict_left = true;
    }
    if (i > 0) {
      up = cur.rows[i - 1][j];
      lo = std::max(lo, up);
      strict_up = true;
    }
    for (int x = lo; x <= m; ++x) {
      if (x == 0) continue;
      if (strict_left && x == left && !is_barred(x)) continue;
      if (strict_up && x == up && is_barred(x)) continue;
      int* slot = nullptr;
      if (remaining0) {
        slot = is_barred(x) ? &left0[n + x] : &left1[x - 1];
        if (*slot == 0) continue;
        --*slot;
      }
      cur.rows[i][j] = x;
      run(k + 1);
      if (slot) ++*slot;
    }
    cur.rows[i][j] = 0;
  }
};

}  // namespace detail

// SSHT(lambda), restricted to content mu when given; row-major backtracking.
inline std::vector<HookTableau> enumerate_ssht(const AlgebraSpec& spec, const Weight& lambda,
                                               const std::optional<Weight>& mu = std::nullopt) {
  const auto shape = hook_diagram(spec, lambda);
  std::vector<HookTableau> out;
  detail::SshtSearch s{spec.n, spec.m, shape, {}, nullptr, {}, {}, {}, &out};
  s.cur.n = spec.n;
  s.cur.m = spec.m;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    s.cur.rows.emplace_back(shape[i], 0);
    for (int j = 0; j < shape[i]; ++j) s.cells.emplace_back(static_cast<int>(i), j);
  }
  if (mu) {
    mu->check_fits(spec);
    if (!mu->is_integral()) return out;
    s.left0 = Weight::halve(mu->doubled0());
    s.left1 = Weight::halve(mu->doubled1());
    int total = 0;
    for (int v : s.left0) {
      if (v < 0) return out;
      total += v;
    }
    for (int v : s.left1) {
      if (v < 0) return out;
      total += v;
    }
    if (total != static_cast<int>(s.cells.size())) return out;
    s.remaining0 = &s.left0;
  }
  s.run(0);
  return out;
}

// Semistandard Young tableaux of a straight shape over 1..alphabet, restricted
// to a content vector when given.
inline std::vector<ClassicalTableau> enumerate_ssyt(const std::vector<int>& shape, int alphabet,
                                                    const std::optional<std::vector<int>>& content = {}) {
  std::vector<ClassicalTableau> out;
  ClassicalTableau cur;
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    cur.rows.emplace_back(shape[i], 0);
    for (int j = 0; j < shape[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
  }
  std::vector<int> left = content ? *content : std::vector<int>();
  if (content) {
    int total = 0;
    for (int v : left) total += v;
    if (total != static_cast<int>(cells.size()) || static_cast<int>(left.size()) != alphabet)
      return out;
  }
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.push_back(cur);
      return;
    }
    const auto [i, j] = cells[k];
    int lo = 1;
    if (j > 0) lo = std::max(lo, cur.rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, cur.rows[i - 1][j] + 1);
    for (int x = lo; x <= alphabet; ++x) {
      if (content) {
        if (left[x - 1] == 0) continue;
        --left[x - 1];
      }
      cur.rows[i][j] = x;
      self(self, k + 1);
      if (content) ++left[x - 1];
    }
    cur.rows[i][j] = 0;
  };
  rec(rec, 0);
  return out;
}

//---------------------------------------------------------------------------//
// Jeu de taquin
//---------------------------------------------------------------------------//

enum class SlidePolicy { BottomCornerFirst, RightCornerFirst };

// Rectify a skew semistandard tableau by inward slides into inner corners.
inline ClassicalTableau jdt_rectify(ClassicalTableau t,
                                    SlidePolicy policy = SlidePolicy::BottomCornerFirst) {
  auto& R = t.rows;
  auto inner_len = [&](std::size_t i) {
    return static_cast<int>(std::count(R[i].begin(), R[i].end(), 0));
  };
  while (true) {
    // Inner corners: last inner cell of a row whose next row has shorter inner part.
    std::vector<std::pair<int, int>> corners;
    for (std::size_t i = 0; i < R.size(); ++i) {
      const int a = inner_len(i);
      if (a == 0) continue;
      const int below = (i + 1 < R.size()) ? inner_len(i + 1) : 0;
      if (below < a) corners.emplace_back(static_cast<int>(i), a - 1);
    }
    if (corners.empty()) break;
    auto [i, j] = policy == SlidePolicy::BottomCornerFirst ? corners.back() : corners.front();
    // Slide the hole at (i, j) outward.
    while (true) {
      const bool has_right = j + 1 < static_cast<int>(R[i].size());
      const bool has_below = i + 1 < static_cast<int>(R.size()) && j < static_cast<int>(R[i + 1].size());
      if (!has_right && !has_below) break;
      if (has_below && (!has_right || R[i + 1][j] <= R[i][j + 1])) {
        R[i][j] = R[i + 1][j];
        ++i;
      } else {
        R[i][j] = R[i][j + 1];
        ++j;
      }
      R[i][j] = 0;
    }
    R[i].pop_back();
    while (!R.empty() && R.back().empty()) R.pop_back();
  }
  // A row may have emptied entirely at the top; drop empty rows.
  R.erase(std::remove_if(R.begin(), R.end(), [](const auto& r) { return r.empty(); }), R.end());
  return t;
}

//---------------------------------------------------------------------------//
// Splitting a hook tableau
//---------------------------------------------------------------------------//

// T0: the barred letters, relabelled ibar -> n + 1 - i so that nbar is 1.
// T1: the unbarred letters, transposed and rectified.
inline std::pair<ClassicalTableau, ClassicalTableau> split(const HookTableau& T) {
  ClassicalTableau t0;
  for (const auto& r : T.rows) {
    std::vector<int> row;
    for (int x : r)
      if (is_barred(x)) row.push_back(T.n + 1 + x);
    if (!row.empty()) t0.rows.push_back(std::move(row));
  }
  ClassicalTableau skew;
  int cols = 0;
  for (const auto& r : T.rows) cols = std::max(cols, static_cast<int>(r.size()));
  for (int j = 0; j < cols; ++j) {
    std::vector<int> row;
    for (const auto& r : T.rows) {
      if (j >= static_cast<int>(r.size())) break;
      row.push_back(is_barred(r[j]) ? 0 : r[j]);
    }
    skew.rows.push_back(std::move(row));
  }
  // Rows made only of inner cells stay: they carry the skew boundary.
  return {std::move(t0), jdt_rectify(std::move(skew))};
}

//---------------------------------------------------------------------------//
// Charge
//---------------------------------------------------------------------------//

// Charge of a word with partition content. Standard subwords are extracted by
// scanning cyclically to the right from the first 1; within a standard
// subword, r + 1 keeps the index of r when it lies to the right of r and gets
// index + 1 when it lies to the left.
inline int charge_of_word(const std::vector<int>& word) {
  int top = 0;
  for (int x : word) top = std::max(top, x);
  std::vector<int> cnt(top + 1, 0);
  for (int x : word) {
    if (x <= 0) throw NotDominantContent("charge needs letters 1, 2, ...");
    ++cnt[x];
  }
  for (int k = 1; k < top; ++k)
    if (cnt[k] < cnt[k + 1]) throw NotDominantContent("content is not a partition");

  std::vector<char> used(word.size(), 0);
  const std::size_t len = word.size();
  std::size_t remaining = len;
  int total = 0;
  while (remaining > 0) {
    // Letters present in the remaining word form 1..k.
    int k = 0;
    std::vector<int> left(top + 1, 0);
    for (std::size_t p = 0; p < len; ++p)
      if (!used[p]) ++left[word[p]];
    while (k + 1 <= top && left[k + 1] > 0) ++k;
    std::size_t pos = 0;
    while (used[pos] || word[pos] != 1) ++pos;
    used[pos] = 1;
    --remaining;
    int index = 0;
    for (int r = 2; r <= k; ++r) {
      std::size_t p = (pos + 1) % len;
      while (used[p] || word[p] != r) p = (p + 1) % len;
      if (p < pos) ++index;
      total += index;
      used[p] = 1;
      --remaining;
      pos = p;
    }
  }
  return total;
}

inline int charge(const ClassicalTableau& T) {
  if (!T.is_straight()) throw Error("charge is defined on straight-shape tableaux");
  return charge_of_word(T.reading_word());
}

inline int super_charge(const HookTableau& T) {
  auto [t0, t1] = split(T);
  return charge(t0) + charge(t1);
}

// q^{|lambda0| - |mu0|} sum_{T in SSHT(lambda)_mu} q^{ch(T)}.
inline QPolynomial kostka_charge(const AlgebraSpec& spec, const Weight& lambda, const Weight& mu) {
  require_dominant(spec, mu, "mu");
  const int shift = (lambda.doubled_size0() - mu.doubled_size0()) / 2;
  QPolynomial out;
  for (const auto& T : enumerate_ssht(spec, lambda, mu))
    out.add_scaled(QPolynomial(1), 1, shift + super_charge(T));
  return out;
}

// Components of B(lambda) under g0: tableaux whose split is a pair of
// highest-weight (row i filled with i) tableaux, grouped by their weight.
inline bool is_highest_weight(const ClassicalTableau& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (int v : t.rows[i])
      if (v != static_cast<int>(i) + 1) return false;
  return true;
}

inline std::map<Weight, Integer> branching_from_tableaux(const AlgebraSpec& spec,
                                                         const Weight& lambda) {
  std::map<Weight, Integer> out;
  for (const auto& T : enumerate_ssht(spec, lambda)) {
    auto [t0, t1] = split(T);
    if (is_highest_weight(t0) && is_highest_weight(t1)) out[T.content()] += 1;
  }
  return out;
}

}  // namespace superkostka
