#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sfill/fill.hpp"

namespace sfill::detail {

constexpr std::int64_t kAnyDeficit = std::numeric_limits<std::int64_t>::max();

std::vector<int> pivot_order(const Chain& z, PivotStrategy strategy);

// Appends r unless an equal filling is already present.
bool add_distinct(std::vector<FillResult>& out, FillResult r);
// Stable sort by deficit, then truncate to `want`.
void finish(std::vector<FillResult>& out, int want);
bool satisfied(const std::vector<FillResult>& out, int want, std::int64_t target);

FillResult leaf_result(Chain filling, std::int64_t deficit, int d, int m, std::string method,
                       std::string note = {});

// F = child - Cone(pivot, lower), with a frame recording both deficits.
FillResult compose(int d, int m, int pivot, const FillResult& lower, const FillResult& child,
                   const std::string& method, const std::string& note = {});

using LowerFn = std::function<std::vector<FillResult>(const Chain& link, VertexSet w)>;
using ChildFn = std::function<std::vector<FillResult>(const Chain& z, VertexSet w, int want)>;

// Tries pivots in order and, for each, the candidate fillings of the link;
// stops once `want` results of deficit <= target are found.
std::vector<FillResult> pivot_search(const Chain& z, VertexSet universe, int want,
                                     std::int64_t target, const std::vector<int>& pivots,
                                     const LowerFn& lower, const ChildFn& child,
                                     const std::string& method);

std::vector<FillResult> oracle_results(const Chain& z, VertexSet universe, int want);

}  // namespace sfill::detail
