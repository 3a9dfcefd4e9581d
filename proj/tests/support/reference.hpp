#pragma once

// Slow, independent reference routines for tests. Simplices are plain sorted
// vertex vectors and ranks come from dense elimination; nothing here uses the
// library's bitmask arithmetic or eliminators.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sfill/chain.hpp"

namespace ref {

using Verts = std::vector<int>;
using RChain = std::map<Verts, mpq_class>;  // zero coefficients never stored

inline long long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline mpq_class reduce(bool f2, mpq_class q) {
  if (!f2) return q;
  mpz_class num = q.get_num() % 2;
  return num == 0 ? mpq_class(0) : mpq_class(1);
}

inline void add_to(RChain& c, const Verts& s, const mpq_class& q, bool f2) {
  mpq_class v = reduce(f2, c[s] + q);
  if (v == 0)
    c.erase(s);
  else
    c[s] = v;
}

inline RChain from(const sfill::Chain& c) {
  RChain r;
  for (const auto& t : c.terms()) r[t.simplex.vertices()] = t.coef;
  return r;
}

inline RChain boundary(const RChain& c, bool f2) {
  RChain out;
  for (const auto& [s, q] : c)
    for (std::size_t i = 0; i < s.size(); ++i) {
      Verts f = s;
      f.erase(f.begin() + static_cast<long>(i));
      add_to(out, f, i % 2 ? mpq_class(-q) : q, f2);
    }
  return out;
}

// Rank of the boundary vectors of `facets` by dense Gaussian elimination.
inline int rank(const std::vector<Verts>& facets, bool f2) {
  std::map<Verts, int> col;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& s : facets) {
    RChain b = boundary(RChain{{s, 1}}, f2);
    for (const auto& [f, q] : b) col.emplace(f, 0);
  }
  int k = 0;
  for (auto& [f, i] : col) i = k++;
  for (const auto& s : facets) {
    std::vector<mpq_class> row(col.size());
    for (const auto& [f, q] : boundary(RChain{{s, 1}}, f2)) row[col[f]] = q;
    rows.push_back(std::move(row));
  }
  if (f2) {
    std::vector<std::vector<char>> bits;
    for (const auto& row : rows) {
      std::vector<char> b(row.size());
      for (std::size_t j = 0; j < row.size(); ++j) b[j] = row[j] != 0;
      bits.push_back(std::move(b));
    }
    int r = 0;
    for (std::size_t c = 0; c < col.size() && r < static_cast<int>(bits.size()); ++c) {
      int p = -1;
      for (int i = r; i < static_cast<int>(bits.size()); ++i)
        if (bits[i][c]) {
          p = i;
          break;
        }
      if (p < 0) continue;
      std::swap(bits[p], bits[r]);
      for (int i = r + 1; i < static_cast<int>(bits.size()); ++i)
        if (bits[i][c])
          for (std::size_t j = c; j < col.size(); ++j) bits[i][j] ^= bits[r][j];
      ++r;
    }
    return r;
  }
  int r = 0;
  for (std::size_t c = 0; c < col.size() && r < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[r]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class m = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < col.size(); ++j) rows[i][j] = reduce(f2, rows[i][j] - m * rows[r][j]);
    }
    ++r;
  }
  return r;
}

// Coefficients x with sum x_i * boundary(facets[i]) = target, when the
// boundaries are independent and the target lies in their span.
inline std::optional<RChain> solve_on(const std::vector<Verts>& facets, const RChain& target, bool f2) {
  std::map<Verts, int> col;
  for (const auto& s : facets)
    for (const auto& [f, q] : boundary(RChain{{s, 1}}, f2)) col.emplace(f, 0);
  for (const auto& [f, q] : target) col.emplace(f, 0);
  int k = 0;
  for (auto& [f, i] : col) i = k++;
  const std::size_t m = facets.size();
  // rows = faces, columns = facets + rhs
  std::vector<std::vector<mpq_class>> a(col.size(), std::vector<mpq_class>(m + 1));
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& [f, q] : boundary(RChain{{facets[j], 1}}, f2)) a[col[f]][j] = q;
  for (const auto& [f, q] : target) a[col[f]][m] = q;
  std::size_t r = 0;
  std::vector<int> pivot_col;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) return std::nullopt;  // dependent columns
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class t = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= m; ++j) a[i][j] = reduce(f2, a[i][j] - t * a[r][j]);
    }
    ++r;
  }
  for (std::size_t i = r; i < a.size(); ++i)
    if (a[i][m] != 0) return std::nullopt;
  RChain x;
  for (std::size_t c = 0; c < m; ++c) {
    mpq_class v = reduce(f2, a[c][m] / a[c][c]);
    if (v != 0) x[facets[c]] = v;
  }
  return x;
}

inline std::vector<Verts> all_facets(int n, int d) {
  std::vector<Verts> out;
  Verts cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == d + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Smallest deficit of an acyclic filling of `target` in K_n^d, by solving on
// every facet subset of hypertree size. Any acyclic filling extends to a
// hypertree, on which the filling is unique, so this is exact.
inline long long brute_best_deficit(const RChain& target, int n, int d, bool f2) {
  const auto facets = all_facets(n, d);
  const int k = static_cast<int>(binom(n - 1, d));
  long long best = -1;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int total = static_cast<int>(facets.size());
  for (;;) {
    std::vector<Verts> pick;
    for (int i : idx) pick.push_back(facets[i]);
    if (auto x = solve_on(pick, target, f2)) {
      long long def = k - static_cast<long long>(x->size());
      if (best < 0 || def < best) best = def;
      if (best == 0) return 0;
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == total - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

inline std::vector<Verts> support(const RChain& c) {
  std::vector<Verts> s;
  for (const auto& [v, q] : c) s.push_back(v);
  return s;
}

inline bool acyclic(const RChain& c, bool f2) {
  auto s = support(c);
  return rank(s, f2) == static_cast<int>(s.size());
}

inline bool simple_cycle(const RChain& c, bool f2) {
  if (c.empty() || !boundary(c, f2).empty()) return false;
  auto s = support(c);
  return rank(s, f2) == static_cast<int>(s.size()) - 1;
}

// Empty when `filling` is an acyclic filling of `target` inside the universe
// {1..m} (given as a vertex list) with the stated deficit.
inline std::string check_filling(const sfill::Chain& target, const sfill::Chain& filling,
                                 const std::vector<int>& universe, long long stated_deficit) {
  const bool f2 = target.field() == sfill::Field::F2;
  RChain t = from(target), f = from(filling);
  if (boundary(f, f2) != t) return "boundary mismatch";
  for (const auto& [s, q] : f)
    for (int v : s) {
      bool in = false;
      for (int u : universe) in |= u == v;
      if (!in) return "vertex outside universe";
    }
  if (!acyclic(f, f2)) return "support not acyclic";
  const int d = filling.dim();
  const long long def = binom(static_cast<int>(universe.size()) - 1, d) - static_cast<long long>(f.size());
  if (def != stated_deficit) return "deficit mismatch";
  return {};
}

inline std::vector<int> iota_vertices(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

}  // namespace ref
