#include "sfill/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "sfill/combinatorics.hpp"

namespace sfill {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

// Signed boundary entries of sigma in colex face coordinates of K_n.
std::vector<std::pair<std::uint64_t, int>> boundary_entries(Simplex s, int n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  const VertexSet all = vertex_range(n);
  for (VertexSet m = s.mask(); m; m &= m - 1) {
    int v = lowest_vertex(m);
    out.emplace_back(colex_rank(s.without(v).mask(), all), s.incidence_sign(v));
  }
  return out;
}

int face_dim_count(int n, int d) { return static_cast<int>(binom(n, d)); }

struct F2Eliminator {
  int words;
  std::vector<std::uint64_t> rows;
  std::vector<int> pivots;

  explicit F2Eliminator(int bits) : words((bits + 63) / 64) {}

  // Reduces v in place; true when independent (and then stored).
  bool insert(std::vector<std::uint64_t>& v) {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      int p = pivots[r];
      if ((v[p >> 6] >> (p & 63)) & 1) {
        const std::uint64_t* row = &rows[r * words];
        for (int w = 0; w < words; ++w) v[w] ^= row[w];
      }
    }
    for (int w = 0; w < words; ++w) {
      if (v[w]) {
        pivots.push_back(w * 64 + std::countr_zero(v[w]));
        rows.insert(rows.end(), v.begin(), v.end());
        return true;
      }
    }
    return false;
  }
};

std::vector<std::uint64_t> f2_vector(Simplex s, int n, int words) {
  std::vector<std::uint64_t> v(words, 0);
  for (auto [idx, sign] : boundary_entries(s, n)) v[idx >> 6] ^= std::uint64_t{1} << (idx & 63);
  return v;
}

struct ModPEliminator {
  int dim;
  std::vector<std::vector<std::uint64_t>> rows;  // pivot entry normalized to 1
  std::vector<int> pivots;

  bool insert(std::vector<std::uint64_t>& v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint64_t f = v[pivots[r]];
      if (!f) continue;
      const auto& row = rows[r];
      for (int i = 0; i < dim; ++i)
        if (row[i]) v[i] = (v[i] + kPrime - mulmod(f, row[i])) % kPrime;
    }
    for (int i = 0; i < dim; ++i) {
      if (v[i]) {
        std::uint64_t inv = invmod(v[i]);
        for (int j = i; j < dim; ++j)
          if (v[j]) v[j] = mulmod(v[j], inv);
        pivots.push_back(i);
        rows.push_back(std::move(v));
        return true;
      }
    }
    return false;
  }
};

struct QEliminator {
  std::vector<std::vector<Rational>> rows;
  std::vector<int> pivots;

  bool insert(std::vector<Rational>& v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational f = v[pivots[r]];
      if (f == 0) continue;
      const auto& row = rows[r];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (row[i] != 0) v[i] -= f * row[i];
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) {
        Rational inv = 1 / v[i];
        for (std::size_t j = i; j < v.size(); ++j)
          if (v[j] != 0) v[j] *= inv;
        pivots.push_back(static_cast<int>(i));
        rows.push_back(std::move(v));
        return true;
      }
    }
    return false;
  }
};

}  // namespace

struct RankContext::State {
  F2Eliminator f2{0};
  QEliminator q;
};

RankContext::RankContext(Field field, int n, int d)
    : field_(field), n_(n), d_(d) {
  auto st = std::make_shared<State>();
  st->f2 = F2Eliminator(face_dim_count(n, d));
  state_ = std::move(st);
}

std::pair<RankContext, bool> RankContext::extend(Simplex s) const {
  if (s.dim() != d_) throw std::invalid_argument("RankContext: simplex of wrong dimension");
  auto st = std::make_shared<State>(*state_);
  bool grew;
  if (field_ == Field::F2) {
    auto v = f2_vector(s, n_, st->f2.words);
    grew = st->f2.insert(v);
  } else {
    std::vector<Rational> v(face_dim_count(n_, d_));
    for (auto [idx, sign] : boundary_entries(s, n_)) v[idx] = sign;
    grew = st->q.insert(v);
  }
  if (!grew) return {*this, false};
  return {RankContext(field_, n_, d_, std::move(st)), true};
}

bool RankContext::independent_of(Simplex s) const { return extend(s).second; }

int RankContext::rank() const {
  return static_cast<int>(field_ == Field::F2 ? state_->f2.pivots.size() : state_->q.pivots.size());
}

int exact_rank(std::vector<std::vector<Rational>> rows) {
  QEliminator e;
  int r = 0;
  for (auto& row : rows) r += e.insert(row);
  return r;
}

int rank_of(Field field, int n, const std::vector<Simplex>& simplices) {
  if (simplices.empty()) return 0;
  const int d = simplices.front().dim();
  for (Simplex s : simplices)
    if (s.dim() != d) throw std::invalid_argument("rank_of: mixed dimensions");
  const int dim = face_dim_count(n, d);
  if (field == Field::F2) {
    F2Eliminator e(dim);
    int r = 0;
    for (Simplex s : simplices) {
      auto v = f2_vector(s, n, e.words);
      r += e.insert(v);
    }
    return r;
  }
  ModPEliminator mp{dim, {}, {}};
  int r = 0;
  for (Simplex s : simplices) {
    std::vector<std::uint64_t> v(dim, 0);
    for (auto [idx, sign] : boundary_entries(s, n)) v[idx] = sign > 0 ? 1 : kPrime - 1;
    r += mp.insert(v);
  }
  if (r == static_cast<int>(simplices.size())) return r;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(simplices.size());
  for (Simplex s : simplices) {
    std::vector<Rational> v(dim);
    for (auto [idx, sign] : boundary_entries(s, n)) v[idx] = sign;
    rows.push_back(std::move(v));
  }
  return exact_rank(std::move(rows));
}

bool is_acyclic(Field field, int n, const std::vector<Simplex>& simplices) {
  return rank_of(field, n, simplices) == static_cast<int>(simplices.size());
}

bool is_simple_cycle(const Chain& c) {
  if (c.is_zero() || !is_cycle(c)) return false;
  return rank_of(c.field(), c.n(), c.support()) == static_cast<int>(c.size()) - 1;
}

namespace {

// Square matrix of restricted boundaries; columns follow the facet order.
std::vector<std::vector<Rational>> restricted_matrix(const std::vector<Simplex>& facets,
                                                     const std::vector<Simplex>& coords) {
  const std::size_t r = coords.size();
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(facets.size()));
  for (std::size_t j = 0; j < facets.size(); ++j) {
    Simplex s = facets[j];
    for (VertexSet b = s.mask(); b; b &= b - 1) {
      int v = lowest_vertex(b);
      Simplex f = s.without(v);
      auto it = std::lower_bound(coords.begin(), coords.end(), f);
      if (it != coords.end() && *it == f) m[it - coords.begin()][j] = s.incidence_sign(v);
    }
  }
  return m;
}

// Gauss-Jordan inverse over the field; empty result when singular.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a, Field field) {
  const std::size_t r = a.size();
  std::vector<std::vector<Rational>> inv(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i) inv[i][i] = 1;
  auto red = [field](Rational& x) {
    if (field == Field::F2) x = reduce_coef(Field::F2, x);
  };
  for (auto& row : a)
    for (auto& x : row) red(x);
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (piv < r && a[piv][col] == 0) ++piv;
    if (piv == r) return {};
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    if (p != 1) {
      Rational ip = 1 / p;
      for (auto& x : a[col]) x *= ip;
      for (auto& x : inv[col]) x *= ip;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < r; ++j) {
        if (a[col][j] != 0) {
          a[i][j] -= f * a[col][j];
          red(a[i][j]);
        }
        if (inv[col][j] != 0) {
          inv[i][j] -= f * inv[col][j];
          red(inv[i][j]);
        }
      }
    }
  }
  return inv;
}

std::vector<Simplex> reduced_coords(VertexSet universe, int d) {
  VertexSet rest = universe & ~vertex_bit(lowest_vertex(universe));
  return k_subsets(rest, d);
}

}  // namespace

bool HypertreeBasis::is_hypertree(Field field, VertexSet universe, int d,
                                  const std::vector<Simplex>& facets) {
  if (universe == 0) return false;
  if (static_cast<std::int64_t>(facets.size()) != hypertree_size(vertex_count(universe), d)) return false;
  for (Simplex s : facets)
    if (s.dim() != d || (s.mask() & ~universe)) return false;
  auto coords = reduced_coords(universe, d);
  return !invert(restricted_matrix(facets, coords), field).empty() || facets.empty();
}

HypertreeBasis::HypertreeBasis(Field field, VertexSet universe, int d, std::vector<Simplex> facets)
    : field_(field), universe_(universe), d_(d), facets_(std::move(facets)) {
  if (universe == 0) throw std::invalid_argument("hypertree: empty universe");
  if (static_cast<std::int64_t>(facets_.size()) != hypertree_size(vertex_count(universe), d))
    throw std::invalid_argument("hypertree: wrong number of facets");
  for (Simplex s : facets_)
    if (s.dim() != d || (s.mask() & ~universe)) throw std::invalid_argument("hypertree: facet outside universe");
  coords_ = reduced_coords(universe, d);
  if (!facets_.empty()) {
    inverse_ = invert(restricted_matrix(facets_, coords_), field);
    if (inverse_.empty()) throw std::invalid_argument("hypertree: facets are not independent");
  }
}

Chain HypertreeBasis::fill(const Chain& z) const {
  const int n = std::max(z.n(), highest_vertex(universe_));
  std::vector<Rational> rhs(coords_.size());
  for (const Term& t : z.terms()) {
    auto it = std::lower_bound(coords_.begin(), coords_.end(), t.simplex);
    if (it != coords_.end() && *it == t.simplex) rhs[it - coords_.begin()] = t.coef;
  }
  ChainBuilder b(field_, n, d_);
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    Rational x = 0;
    for (std::size_t j = 0; j < rhs.size(); ++j)
      if (rhs[j] != 0 && inverse_[i][j] != 0) x += inverse_[i][j] * rhs[j];
    if (x != 0) b.add(facets_[i], x);
  }
  return b.build();
}

Chain fill_on_hypertree(const HypertreeBasis& t, const Chain& z) { return t.fill(z); }

}  // namespace sfill
