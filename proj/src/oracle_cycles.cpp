#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "sfill/combinatorics.hpp"
#include "sfill/linalg.hpp"
#include "sfill/oracle.hpp"

namespace sfill {

namespace {

constexpr int kMaxCycleBits = 24;

// A nonzero vector in the kernel of a rational matrix whose kernel is one-dimensional.
std::vector<Rational> kernel_vector(std::vector<std::vector<Rational>> a, std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free_col)) != pivot_col.end()) ++free_col;
  std::vector<Rational> x(cols);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -a[r][free_col];
  return x;
}

void check_time(const Budget& b, std::chrono::steady_clock::time_point start) {
  if (b.max_seconds > 0 &&
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > b.max_seconds)
    throw BudgetExceeded("time budget exhausted");
}

MaxCycleResult max_cycle_f2(int n, int d, const Budget& budget) {
  const auto start = std::chrono::steady_clock::now();
  // d-cycles of K_n^d in facet coordinates; vectors use faces avoiding vertex 1.
  EnumerationSpace sp(n, d);
  if (binom(n - 1, d + 1) > kMaxCycleBits) throw BudgetExceeded("cycle space too large");
  std::vector<FacetMask> basis;
  for (Simplex tau : k_subsets(vertex_range(n) & ~vertex_bit(1), d + 1)) {
    Simplex t = tau.with(1);
    FacetMask m = 0;
    for (VertexSet b = t.mask(); b; b &= b - 1) {
      Simplex f = t.without(lowest_vertex(b));
      m |= FacetMask{1} << (std::lower_bound(sp.facets.begin(), sp.facets.end(), f) - sp.facets.begin());
    }
    basis.push_back(m);
  }
  auto popcount128 = [](FacetMask m) {
    return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
  };
  auto rank_of_mask = [&](FacetMask m) {
    std::uint64_t rows[64] = {};
    int r = 0;
    for (int i = 0; i < sp.facet_count; ++i) {
      if (!((m >> i) & 1)) continue;
      std::uint64_t v = sp.vectors[i];
      while (v) {
        int h = 63 - std::countl_zero(v);
        if (!rows[h]) {
          rows[h] = v;
          ++r;
          break;
        }
        v ^= rows[h];
      }
    }
    return r;
  };
  MaxCycleResult res;
  res.n = n;
  res.d = d;
  res.field = Field::F2;
  FacetMask cur = 0, best_mask = 0;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    if ((i & 0xFFFF) == 0) check_time(budget, start);
    cur ^= basis[std::countr_zero(i)];
    ++res.examined;
    int size = popcount128(cur);
    if (size <= res.max_size) continue;
    if (rank_of_mask(cur) == size - 1) {
      res.max_size = size;
      best_mask = cur;
    }
  }
  res.witness = best_mask ? sp.chain_of(best_mask) : Chain(Field::F2, n, d);
  return res;
}

MaxCycleResult max_cycle_q(int n, int d, const Budget& budget) {
  const auto start = std::chrono::steady_clock::now();
  const auto facets = complete_facets(vertex_range(n), d);
  const int f = static_cast<int>(facets.size());
  const int r = static_cast<int>(hypertree_size(n, d));
  MaxCycleResult res;
  res.n = n;
  res.d = d;
  res.field = Field::Q;
  for (int k = std::min(f, r + 1); k >= d + 2; --k) {
    if (binom(f, k) > (std::uint64_t{1} << kMaxCycleBits)) throw BudgetExceeded("too many candidate supports");
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if ((++res.examined & 0x3FF) == 0) check_time(budget, start);
      std::vector<Simplex> s;
      for (int i : idx) s.push_back(facets[i]);
      bool circuit = true;
      for (int drop = 0; drop < k && circuit; ++drop) {
        std::vector<Simplex> t = s;
        t.erase(t.begin() + drop);
        circuit = is_acyclic(Field::Q, n, t);
      }
      if (circuit && rank_of(Field::Q, n, s) == k - 1) {
        // Coefficients: the kernel of the boundary restricted to s.
        std::vector<Simplex> faces = complete_facets(vertex_range(n), d - 1);
        std::vector<std::vector<Rational>> m(faces.size(), std::vector<Rational>(k));
        for (int j = 0; j < k; ++j)
          for (VertexSet b = s[j].mask(); b; b &= b - 1) {
            int v = lowest_vertex(b);
            auto pos = std::lower_bound(faces.begin(), faces.end(), s[j].without(v)) - faces.begin();
            m[pos][j] = s[j].incidence_sign(v);
          }
        auto x = kernel_vector(std::move(m), k);
        ChainBuilder b(Field::Q, n, d);
        for (int j = 0; j < k; ++j) b.add(s[j], x[j]);
        res.max_size = k;
        res.witness = b.build();
        return res;
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == f - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  res.witness = Chain(Field::Q, n, d);
  return res;
}

}  // namespace

MaxCycleResult max_simple_cycle(int n, int d, Field field, const Budget& budget) {
  if (d < 1 || n < d + 2) throw std::invalid_argument("max_simple_cycle: need d >= 1 and n >= d + 2");
  return field == Field::F2 ? max_cycle_f2(n, d, budget) : max_cycle_q(n, d, budget);
}

}  // namespace sfill
