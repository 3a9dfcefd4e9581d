#include "sfill/combinatorics.hpp"

#include <array>
#include <stdexcept>

namespace sfill {

namespace {

struct BinomTable {
  std::array<std::array<std::uint64_t, 65>, 65> v{};
  BinomTable() {
    for (int n = 0; n <= 64; ++n) {
      v[n][0] = 1;
      for (int k = 1; k <= n; ++k) v[n][k] = v[n - 1][k - 1] + (k <= n - 1 ? v[n - 1][k] : 0);
    }
  }
};

const BinomTable& table() {
  static const BinomTable t;
  return t;
}

}  // namespace

std::uint64_t binom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > 64) throw std::out_of_range("binom: n > 64");
  return table().v[n][k];
}

std::uint64_t colex_rank(VertexSet subset, VertexSet universe) {
  std::uint64_t r = 0;
  int i = 0;
  for (VertexSet s = subset; s; s &= s - 1) {
    int v = lowest_vertex(s);
    int pos = vertex_count(universe & (vertex_bit(v) - 1));
    r += binom(pos, ++i);
  }
  return r;
}

VertexSet to_local(VertexSet s, VertexSet universe) {
  VertexSet out = 0;
  int i = 1;
  for (VertexSet u = universe; u; u &= u - 1, ++i)
    if (s & (u & -u)) out |= vertex_bit(i);
  return out;
}

VertexSet from_local(VertexSet s, VertexSet universe) {
  VertexSet out = 0;
  int i = 1;
  for (VertexSet u = universe; u; u &= u - 1, ++i)
    if (has_vertex(s, i)) out |= u & -u;
  return out;
}

std::vector<Simplex> k_subsets(VertexSet universe, int k) {
  std::vector<int> verts = vertices_of(universe);
  int m = static_cast<int>(verts.size());
  std::vector<Simplex> out;
  if (k < 0 || k > m) return out;
  if (k == 0) return {Simplex()};
  out.reserve(binom(m, k));
  // Colex order: iterate local-index masks with Gosper's hack, which visits
  // k-subsets in increasing numeric (= colex) order.
  if (m > 63) throw std::out_of_range("k_subsets: universe too large");
  std::uint64_t local = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  while (local < limit) {
    VertexSet mask = 0;
    for (std::uint64_t s = local; s; s &= s - 1) mask |= vertex_bit(verts[std::countr_zero(s)]);
    out.emplace_back(mask);
    std::uint64_t c = local & -local;
    std::uint64_t r = local + c;
    local = (((r ^ local) >> 2) / c) | r;
  }
  return out;
}

}  // namespace sfill
