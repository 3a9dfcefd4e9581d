#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfill/chain.hpp"

namespace sfill {

// Work limits for exhaustive searches. Zero means unlimited.
struct Budget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;

  // Reads SFILL_BUDGET_SECONDS when set.
  static Budget from_env();
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RankedFilling {
  Chain filling;
  std::int64_t deficit;
};

// Exact best fillings of z by acyclic d-chains on the universe, ordered by
// deficit and then by search order. At most `want` results; fillings with
// deficit above max_deficit are ignored.
//
// F2: enumerates the coset (particular filling + cycle space). Requires
// C(m-1, d+1) <= 24. Q: enumerates all Q-hypertrees of K_U^d and solves on
// each one. Requires at most 5000 candidate facet subsets.
std::vector<RankedFilling> optimal_fillings_f2(
    const Chain& z, VertexSet universe, int want,
    std::int64_t max_deficit = std::numeric_limits<std::int64_t>::max());
std::vector<RankedFilling> optimal_fillings_q(
    const Chain& z, VertexSet universe, int want,
    std::int64_t max_deficit = std::numeric_limits<std::int64_t>::max());
bool optimal_search_feasible(Field field, int m, int d);

// All Q- (or F2-) hypertrees of the complete d-complex on the universe, in
// colex order of their sorted facet lists.
std::vector<std::vector<Simplex>> all_hypertrees(Field field, VertexSet universe, int d);

// ---------------------------------------------------------------------------
// Exhaustive enumeration of F2-acyclic facet sets of K_n^d.

using FacetMask = unsigned __int128;

struct AcyclicVisit {
  FacetMask facets;        // bit i = i-th facet of K_n^d in colex order
  std::uint64_t key;       // boundary restricted to faces avoiding vertex 1
  int size;
};

struct EnumerationSpace {
  int n = 0;
  int d = 0;
  int facet_count = 0;     // C(n, d+1)
  int key_bits = 0;        // C(n-1, d)
  int tree_size = 0;       // C(n-1, d)
  std::vector<Simplex> facets;
  std::vector<std::uint64_t> vectors;  // boundary of each facet in key coordinates

  // Requires C(n, d+1) <= 128 and C(n-1, d) <= 64.
  EnumerationSpace(int n, int d);
  std::uint64_t key_of(const Chain& cycle) const;
  Chain cycle_of(std::uint64_t key) const;
  Chain chain_of(FacetMask mask) const;
  FacetMask mask_of(const Chain& filling) const;
};

// Visits every acyclic set of size >= tree_size - slack exactly once.
// Returns the number of search nodes. Throws BudgetExceeded.
template <class Visitor>
std::uint64_t enumerate_acyclic(const EnumerationSpace& sp, int slack, Visitor&& visit,
                                const Budget& budget = {});

struct CensusReport {
  int n = 0;
  int d = 0;
  int slack = 1;
  int key_bits = 0;
  std::vector<std::uint32_t> count0;  // per cycle key: fillings of deficit 0
  std::vector<std::uint32_t> count1;  // deficit 1
  std::uint64_t nodes = 0;
  std::uint64_t trees = 0;
  std::uint64_t deficit_one = 0;
  std::uint64_t min_total = 0;               // over nonzero cycles, fillings of deficit <= 1
  std::uint64_t cycles_without_zero = 0;
  std::uint64_t cycles_without_le1 = 0;
  std::uint64_t nonzero_cycles = 0;
  bool complete = false;
  double elapsed_seconds = 0;
};

// Per-cycle counts of fillings with deficit 0 and 1 over F2. The search is
// split into prefix tasks shared by `jobs` threads; counts do not depend on
// the split. Incomplete (budget) runs return partial counts, complete=false.
CensusReport filling_census(int n, int d, int jobs = 1, const Budget& budget = {});

void write_census(const CensusReport& r, const std::string& binary_path,
                  const std::string& json_path);
CensusReport read_census(const std::string& binary_path);

// ---------------------------------------------------------------------------

struct MaxCycleResult {
  int n = 0;
  int d = 0;
  Field field = Field::F2;
  int max_size = 0;
  Chain witness;
  std::uint64_t examined = 0;
};

// Largest simple d-cycle of K_n^d (support rank = size - 1).
MaxCycleResult max_simple_cycle(int n, int d, Field field, const Budget& budget = {});

struct VerifyReport {
  int n = 0;
  int d = 0;
  std::uint64_t cycles = 0;
  std::uint64_t engine_outputs = 0;
  std::uint64_t outputs_found_in_census = 0;
  std::vector<std::string> discrepancies;
  CensusReport census;
  bool ok() const { return discrepancies.empty() && census.complete; }
};

// Runs the F2 engine on every nonzero (d-1)-cycle of K_n and checks its
// deficits against the census and its outputs against the enumerated sets.
VerifyReport verify_engine_against_oracle(int n, int d, int jobs = 1, const Budget& budget = {});

}  // namespace sfill

#include "sfill/detail/enumerate_impl.hpp"
