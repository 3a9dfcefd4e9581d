#include <functional>
#include <stdexcept>

#include "fill_internal.hpp"
#include "sfill/combinatorics.hpp"

namespace sfill {

std::vector<FillResult> fill_dim0(const Chain& target, VertexSet universe, int want) {
  std::vector<FillResult> out;
  const Rational c = target.coefficient(Simplex());
  const int m = vertex_count(universe);
  for (int v : vertices_of(universe)) {
    if (static_cast<int>(out.size()) == want) break;
    out.push_back(detail::leaf_result(Chain::single(target.field(), target.n(), Simplex(vertex_bit(v)), c),
                                      0, 0, m, "vertex"));
  }
  return out;
}

namespace {

// Eliminates one vertex per level: its weight is pushed along a single edge.
// emit returns false to stop the enumeration.
bool tree_dfs(const Chain& z, VertexSet universe, int forced_leaf, int forced_partner,
              const std::function<bool(const Chain&)>& emit) {
  const int m = vertex_count(universe);
  if (z.is_zero()) {
    if (m == 1) return emit(Chain(z.field(), z.n(), 1));
    return true;  // would leave isolated vertices
  }
  const int a = forced_leaf ? forced_leaf : lowest_vertex(z.vertex_set());
  const Rational c = z.coefficient(Simplex(vertex_bit(a)));
  const VertexSet rest = universe & ~vertex_bit(a);
  const Chain moved = remove_vertex(a, z);
  for (int u : vertices_of(rest)) {
    if (forced_partner && u != forced_partner) continue;
    Chain z2 = moved + Chain::single(z.field(), z.n(), Simplex(vertex_bit(u)), c);
    if (z2.is_zero() && m > 2) continue;
    const Chain edge = cone(a, Chain::single(z.field(), z.n(), Simplex(vertex_bit(u)), c));
    bool go = tree_dfs(z2, rest, 0, 0, [&](const Chain& sub) { return emit(sub - edge); });
    if (!go) return false;
  }
  return true;
}

}  // namespace

std::vector<Chain> tree_fillings(const Chain& target, VertexSet universe, int limit,
                                 std::optional<LeafConstraint> constraint) {
  if (target.dim() != 0) throw std::invalid_argument("tree_fillings: target must be a 0-chain");
  if (target.vertex_set() & ~universe) throw std::invalid_argument("target uses vertices outside the universe");
  if (!is_cycle(target)) throw std::invalid_argument("target is not a 0-cycle");
  int leaf = 0, partner = 0;
  if (constraint) {
    leaf = constraint->leaf;
    partner = constraint->neighbor;
    if (!has_vertex(universe, leaf) || !has_vertex(universe, partner) || leaf == partner)
      throw std::invalid_argument("leaf constraint outside the universe");
    if (!target.contains(Simplex(vertex_bit(leaf))))
      throw std::invalid_argument("constraint unsatisfiable: a leaf must carry nonzero weight");
  }
  std::vector<Chain> out;
  if (limit <= 0) return out;
  tree_dfs(target, universe, leaf, partner, [&](const Chain& t) {
    out.push_back(t);
    return static_cast<int>(out.size()) < limit;
  });
  if (out.empty() && constraint) throw std::invalid_argument("constraint unsatisfiable");
  return out;
}

Chain fill_dim1(const Chain& target, VertexSet universe, std::optional<LeafConstraint> constraint) {
  auto t = tree_fillings(target, universe, 1, constraint);
  if (t.empty()) throw std::invalid_argument("no spanning-tree filling exists");
  return t.front();
}

}  // namespace sfill
