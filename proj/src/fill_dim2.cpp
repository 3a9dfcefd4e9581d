#include <stdexcept>

#include "fill_internal.hpp"
#include "sfill/combinatorics.hpp"
#include "sfill/oracle.hpp"

namespace sfill {

namespace {

constexpr int kTreesPerPivot = 4;
constexpr int kBaseF2 = 5;  // exact search at and below this many vertices
constexpr int kBaseQ = 5;

std::vector<FillResult> tree_candidates(const Chain& link_chain, VertexSet w) {
  std::vector<FillResult> out;
  const int m = vertex_count(w);
  for (Chain& t : tree_fillings(link_chain, w, kTreesPerPivot))
    out.push_back(detail::leaf_result(std::move(t), 0, 1, m, "tree"));
  return out;
}

}  // namespace

std::vector<FillResult> fill_dim2_f2(const Chain& target, VertexSet universe, int want,
                                     PivotStrategy strategy) {
  if (target.field() != Field::F2 || target.dim() != 1) throw std::invalid_argument("fill_dim2_f2: need an F2 1-cycle");
  const int m = vertex_count(universe);
  if (target.is_zero() || m <= kBaseF2) return detail::oracle_results(target, universe, want);
  const std::int64_t target_deficit = parity_status(target, m).holds ? 0 : 1;
  auto child = [strategy](const Chain& z, VertexSet w, int k) { return fill_dim2_f2(z, w, k, strategy); };
  return detail::pivot_search(target, universe, want, target_deficit,
                              detail::pivot_order(target, strategy), tree_candidates, child, "pivot");
}

std::vector<FillResult> fill_dim2_q(const Chain& target, VertexSet universe, int want,
                                    PivotStrategy strategy) {
  if (target.field() != Field::Q || target.dim() != 1) throw std::invalid_argument("fill_dim2_q: need a Q 1-cycle");
  const int m = vertex_count(universe);
  if (target.is_zero() || m <= kBaseQ) return detail::oracle_results(target, universe, want);
  auto child = [strategy](const Chain& z, VertexSet w, int k) { return fill_dim2_q(z, w, k, strategy); };
  return detail::pivot_search(target, universe, want, 0, detail::pivot_order(target, strategy),
                              tree_candidates, child, "pivot");
}

}  // namespace sfill
