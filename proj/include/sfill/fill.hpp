#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfill/chain.hpp"

namespace sfill {

enum class PivotStrategy { SmallestLabel, SmallestDegree };

// One recursion frame. Pivot frames satisfy deficit = lower_deficit +
// child_deficit; leaf frames (oracle, small-n, tree, vertex) have pivot 0.
struct TranscriptFrame {
  int depth = 0;
  int d = 0;
  int m = 0;  // universe size
  int pivot = 0;
  std::int64_t lower_deficit = 0;
  std::int64_t child_deficit = 0;
  std::int64_t deficit = 0;
  std::string method;
  std::string note;
};

// Degree bookkeeping for the d=3 friendliness step over F2: for each vertex u
// of the link universe, A(u) = deg(u, Z minus pivot), B(u) = deg(u, F2part),
// and the resulting degree in Z' (all mod 2).
struct DegreeProfile {
  int m = 0;            // universe size at this level
  int pivot = 0;        // top-level pivot v
  int first_pivot = 0;  // pivot of the 2-fill of the link
  std::string case_label;
  std::vector<int> vertices;
  std::vector<int> a, b, deg;
  int first_pivot_degree = 0;  // deg(first_pivot, F2part), equals m-3
};

struct ParityStatus {
  bool applicable = false;  // F2 and even d
  bool holds = false;
  int cycle_size_mod2 = 0;
  int binomial_mod2 = 0;
};

ParityStatus parity_status(const Chain& target, int universe_size);

struct FillResult {
  Chain filling;
  std::int64_t deficit = 0;
  std::vector<TranscriptFrame> transcript;
  std::vector<DegreeProfile> profiles;
};

struct FillRequest {
  Chain target;             // a (d-1)-cycle
  VertexSet universe = 0;   // 0 means {1..n}
  int want_distinct = 1;
  PivotStrategy strategy = PivotStrategy::SmallestLabel;
};

struct FillCertificate {
  Chain target;
  VertexSet universe = 0;
  Chain filling;
  std::int64_t deficit = 0;
  ParityStatus parity;
  std::vector<TranscriptFrame> transcript;
  std::vector<DegreeProfile> profiles;
};

// Distinct acyclic fillings, best deficit first. Every certificate is checked
// (boundary, acyclicity, deficit) before it is returned; a failed check
// throws std::logic_error. Invalid targets throw std::invalid_argument.
std::vector<FillCertificate> fill(const FillRequest& req);
std::vector<FillCertificate> fill(const Chain& target, int want_distinct = 1);

// Empty string when the certificate checks out, else the reason.
std::string check_certificate(const FillCertificate& c);

// Engine entry that dispatches on field and dimension without certificate
// checks. Results are distinct and sorted by deficit.
std::vector<FillResult> fill_engine(const Chain& target, VertexSet universe, int want,
                                    PivotStrategy strategy = PivotStrategy::SmallestLabel);

// d = 0: a single vertex carrying the coefficient of the empty simplex.
std::vector<FillResult> fill_dim0(const Chain& target, VertexSet universe, int want);

// d = 1: spanning trees with every edge coefficient nonzero, produced by the
// vertex-elimination recursion (pivot = smallest vertex of the support,
// partner ascending). With a leaf constraint (w, y) the first step is forced
// to eliminate w through y, so w is a leaf attached to y.
struct LeafConstraint {
  int leaf;
  int neighbor;
};
std::vector<Chain> tree_fillings(const Chain& target, VertexSet universe, int limit,
                                 std::optional<LeafConstraint> constraint = std::nullopt);
Chain fill_dim1(const Chain& target, VertexSet universe,
                std::optional<LeafConstraint> constraint = std::nullopt);

// True when V(z) holds a vertex of odd degree and a vertex of even degree.
bool is_friendly(const Chain& z);

std::vector<FillResult> fill_dim2_f2(const Chain& target, VertexSet universe, int want,
                                     PivotStrategy strategy = PivotStrategy::SmallestLabel);
std::vector<FillResult> fill_dim2_q(const Chain& target, VertexSet universe, int want,
                                    PivotStrategy strategy = PivotStrategy::SmallestLabel);
std::vector<FillResult> fill_dim3_f2(const Chain& target, VertexSet universe, int want);

// |U| = d + 2: the complex has a single d-cycle, so fillings form a line;
// returns the fillings that zero out one facet, best deficit first.
std::vector<FillResult> base_case_small_n(const Chain& target, VertexSet universe, int want);

// Pivot recursion for F2 with d >= 4 and Q with d >= 3.
std::vector<FillResult> fill_general(const Chain& target, VertexSet universe, int want);

}  // namespace sfill
