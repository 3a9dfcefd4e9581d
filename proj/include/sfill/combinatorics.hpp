#pragma once

#include <cstdint>
#include <vector>

#include "sfill/simplex.hpp"

namespace sfill {

// Exact binomial coefficient; 0 when k < 0 or k > n. Valid for n <= 64.
std::uint64_t binom(int n, int k);

// Colex rank of a k-subset of a universe U: vertices are renumbered by their
// position inside U first. With U = {1..n} this is the standard colex index.
std::uint64_t colex_rank(VertexSet subset, VertexSet universe);

// Relabel vertices of s (a subset of U) to 1..|U| by their rank in U, and back.
VertexSet to_local(VertexSet s, VertexSet universe);
VertexSet from_local(VertexSet s, VertexSet universe);

// All k-subsets of the universe, in colex order.
std::vector<Simplex> k_subsets(VertexSet universe, int k);

// Facets of the complete d-dimensional complex on the universe (d+1 subsets).
inline std::vector<Simplex> complete_facets(VertexSet universe, int d) {
  return k_subsets(universe, d + 1);
}

// C(|U|-1, d): the rank of the boundary map on the full d-skeleton, i.e. the
// size of a d-hypertree on |U| vertices.
inline std::int64_t hypertree_size(int m, int d) {
  return static_cast<std::int64_t>(binom(m - 1, d));
}

}  // namespace sfill
