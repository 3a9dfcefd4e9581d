#pragma once

#include <bit>
#include <chrono>
#include <cstring>
#include <vector>

namespace sfill {
namespace detail {

struct EnumPrefix {
  int depth;
  FacetMask mask;
  std::uint64_t key;
  int size;
  std::uint64_t basis[64];
};

template <class Visitor>
class AcyclicEnumerator {
 public:
  AcyclicEnumerator(const EnumerationSpace& sp, int min_size, Visitor& visit, const Budget& budget)
      : sp_(sp), min_size_(min_size), visit_(visit), budget_(budget),
        start_(std::chrono::steady_clock::now()) {
    std::memset(basis_, 0, sizeof basis_);
  }

  void run(const EnumPrefix& p) {
    std::memcpy(basis_, p.basis, sizeof basis_);
    dfs(p.depth, p.mask, p.key, p.size);
  }

  // Collects the states reached after deciding the first `depth` facets.
  void split(int depth, std::vector<EnumPrefix>& out) {
    split_depth_ = depth;
    prefixes_ = &out;
    dfs(0, 0, 0, 0);
    prefixes_ = nullptr;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void check_budget() {
    if (budget_.max_nodes && nodes_ > budget_.max_nodes) throw BudgetExceeded("node budget exhausted");
    if (budget_.max_seconds > 0) {
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (s > budget_.max_seconds) throw BudgetExceeded("time budget exhausted");
    }
  }

  void dfs(int i, FacetMask mask, std::uint64_t key, int size) {
    if ((++nodes_ & 0xFFFFF) == 0) check_budget();
    if (size + (sp_.facet_count - i) < min_size_) return;
    if (prefixes_ && (i == split_depth_ || size == sp_.tree_size || i == sp_.facet_count)) {
      EnumPrefix p{i, mask, key, size, {}};
      std::memcpy(p.basis, basis_, sizeof basis_);
      prefixes_->push_back(p);
      return;
    }
    if (size == sp_.tree_size || i == sp_.facet_count) {
      if (size >= min_size_) visit_(AcyclicVisit{mask, key, size});
      return;
    }
    std::uint64_t v = sp_.vectors[i];
    while (v) {
      int h = 63 - std::countl_zero(v);
      if (!basis_[h]) break;
      v ^= basis_[h];
    }
    if (v) {
      int h = 63 - std::countl_zero(v);
      basis_[h] = v;
      dfs(i + 1, mask | (FacetMask{1} << i), key ^ sp_.vectors[i], size + 1);
      basis_[h] = 0;
    }
    dfs(i + 1, mask, key, size);
  }

  const EnumerationSpace& sp_;
  int min_size_;
  Visitor& visit_;
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t basis_[64];
  std::uint64_t nodes_ = 0;
  int split_depth_ = -1;
  std::vector<EnumPrefix>* prefixes_ = nullptr;
};

}  // namespace detail

template <class Visitor>
std::uint64_t enumerate_acyclic(const EnumerationSpace& sp, int slack, Visitor&& visit,
                                const Budget& budget) {
  detail::AcyclicEnumerator<std::remove_reference_t<Visitor>> e(sp, sp.tree_size - slack, visit, budget);
  detail::EnumPrefix root{0, 0, 0, 0, {}};
  e.run(root);
  return e.nodes();
}

}  // namespace sfill
