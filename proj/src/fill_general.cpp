#include <stdexcept>

#include "fill_internal.hpp"
#include "sfill/combinatorics.hpp"
#include "sfill/linalg.hpp"

namespace sfill {

std::vector<FillResult> base_case_small_n(const Chain& target, VertexSet universe, int want) {
  const int d = target.dim() + 1;
  const int m = vertex_count(universe);
  if (m != d + 2) throw std::invalid_argument("base_case_small_n: universe must have d+2 vertices");
  if (target.is_zero()) throw std::invalid_argument("base_case_small_n: zero target");
  if (!boundary(target).is_zero()) throw std::invalid_argument("base_case_small_n: target is not a cycle");
  auto facets = complete_facets(universe, d);
  const Simplex omitted = facets.back();
  facets.pop_back();
  const Chain f0 = HypertreeBasis(target.field(), universe, d, facets).fill(target).with_n(target.n());
  // The only d-cycle: boundary of the full simplex on the universe.
  const Chain cycle = boundary(Chain::single(target.field(), target.n(), Simplex(universe)));
  std::vector<FillResult> out;
  auto offer = [&](Chain f, const std::string& note) {
    std::int64_t def = deficit(f, m);
    detail::add_distinct(out, detail::leaf_result(std::move(f), def, d, m, "small-n", note));
  };
  offer(f0, "omit " + omitted.to_string());
  for (const Term& t : f0.terms()) {
    const Rational shift = t.coef / cycle.coefficient(t.simplex);
    offer(f0 - scale(cycle, shift), "substitute " + t.simplex.to_string());
  }
  detail::finish(out, want);
  return out;
}

std::vector<FillResult> fill_general(const Chain& target, VertexSet universe, int want) {
  const int d = target.dim() + 1;
  const int m = vertex_count(universe);
  if (target.is_zero()) return fill_engine(target, universe, want);
  if (m == d + 1) {
    Chain f = HypertreeBasis(target.field(), universe, d, {Simplex(universe)}).fill(target).with_n(target.n());
    return {detail::leaf_result(std::move(f), 0, d, m, "single-simplex")};
  }
  if (m == d + 2) return base_case_small_n(target, universe, want);
  auto lower = [](const Chain& lk, VertexSet w) { return fill_engine(lk, w, 2); };
  auto child = [](const Chain& z, VertexSet w, int k) { return fill_general(z, w, k); };
  return detail::pivot_search(target, universe, want, detail::kAnyDeficit,
                              detail::pivot_order(target, PivotStrategy::SmallestLabel), lower, child,
                              "pivot");
}

}  // namespace sfill
