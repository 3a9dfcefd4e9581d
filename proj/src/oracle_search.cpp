#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sfill/combinatorics.hpp"
#include "sfill/linalg.hpp"
#include "sfill/oracle.hpp"

namespace sfill {

Budget Budget::from_env() {
  Budget b;
  if (const char* s = std::getenv("SFILL_BUDGET_SECONDS")) b.max_seconds = std::atof(s);
  return b;
}

namespace {

constexpr int kMaxCosetBits = 24;
constexpr std::uint64_t kMaxHypertreeCandidates = 5000;

void check_target(const Chain& z, VertexSet universe) {
  if (z.vertex_set() & ~universe) throw std::invalid_argument("target uses vertices outside the universe");
  if (!is_cycle(z)) throw std::invalid_argument("target is not a cycle");
}

// Keeps the best `want` candidates by (deficit, arrival order).
class BestList {
 public:
  BestList(int want, std::int64_t max_deficit) : want_(want), max_deficit_(max_deficit) {}

  bool wanted(std::int64_t def) const {
    if (def > max_deficit_) return false;
    return static_cast<int>(items_.size()) < want_ || def < items_.back().deficit;
  }
  void offer(Chain c, std::int64_t def) {
    if (!wanted(def)) return;
    for (const auto& it : items_)
      if (it.filling == c) return;
    auto pos = std::upper_bound(items_.begin(), items_.end(), def,
                                [](std::int64_t x, const RankedFilling& r) { return x < r.deficit; });
    items_.insert(pos, RankedFilling{std::move(c), def});
    if (static_cast<int>(items_.size()) > want_) items_.pop_back();
  }
  bool saturated_at_zero() const {
    return static_cast<int>(items_.size()) == want_ && items_.back().deficit == 0;
  }
  std::vector<RankedFilling> take() { return std::move(items_); }

 private:
  int want_;
  std::int64_t max_deficit_;
  std::vector<RankedFilling> items_;
};

struct CosetSpace {
  std::vector<Simplex> facets;
  std::vector<std::uint64_t> vectors;    // boundary in faces avoiding the lowest vertex
  std::vector<std::uint64_t> cycles;     // facet masks spanning the d-cycles
  std::vector<Simplex> coords;
  int tree_size;
};

const CosetSpace& coset_space(VertexSet universe, int d) {
  static std::mutex mu;
  static std::map<std::pair<VertexSet, int>, CosetSpace> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(universe, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  CosetSpace sp;
  const int m = vertex_count(universe);
  const int low = lowest_vertex(universe);
  sp.facets = complete_facets(universe, d);
  sp.coords = k_subsets(universe & ~vertex_bit(low), d);
  sp.tree_size = static_cast<int>(hypertree_size(m, d));
  if (sp.facets.size() > 64 || sp.coords.size() > 64) throw std::invalid_argument("coset search space too large");
  for (Simplex s : sp.facets) {
    std::uint64_t v = 0;
    for (VertexSet b = s.mask(); b; b &= b - 1) {
      Simplex f = s.without(lowest_vertex(b));
      auto pos = std::lower_bound(sp.coords.begin(), sp.coords.end(), f);
      if (pos != sp.coords.end() && *pos == f) v |= std::uint64_t{1} << (pos - sp.coords.begin());
    }
    sp.vectors.push_back(v);
  }
  for (Simplex tau : k_subsets(universe & ~vertex_bit(low), d + 1)) {
    Simplex t = tau.with(low);
    std::uint64_t mask = 0;
    for (VertexSet b = t.mask(); b; b &= b - 1) {
      Simplex f = t.without(lowest_vertex(b));
      mask |= std::uint64_t{1} << (std::lower_bound(sp.facets.begin(), sp.facets.end(), f) - sp.facets.begin());
    }
    sp.cycles.push_back(mask);
  }
  return cache.emplace(key, std::move(sp)).first->second;
}

bool acyclic_mask(const CosetSpace& sp, std::uint64_t mask) {
  std::uint64_t basis[64];
  std::uint64_t used = 0;
  bool ok = true;
  for (std::uint64_t m = mask; m && ok; m &= m - 1) {
    std::uint64_t v = sp.vectors[std::countr_zero(m)];
    while (v) {
      int h = 63 - std::countl_zero(v);
      if (!((used >> h) & 1)) {
        basis[h] = v;
        used |= std::uint64_t{1} << h;
        break;
      }
      v ^= basis[h];
    }
    if (!v) ok = false;
  }
  return ok;
}

}  // namespace

bool optimal_search_feasible(Field field, int m, int d) {
  if (d < 1 || m < d + 1) return true;
  if (field == Field::F2)
    return binom(m, d + 1) <= 64 && binom(m - 1, d) <= 64 && binom(m - 1, d + 1) <= kMaxCosetBits;
  return binom(static_cast<int>(binom(m, d + 1)), static_cast<int>(binom(m - 1, d))) <= kMaxHypertreeCandidates;
}

std::vector<RankedFilling> optimal_fillings_f2(const Chain& z, VertexSet universe, int want,
                                               std::int64_t max_deficit) {
  check_target(z, universe);
  const int d = z.dim() + 1;
  const int m = vertex_count(universe);
  if (!optimal_search_feasible(Field::F2, m, d)) throw BudgetExceeded("coset search too large");
  BestList best(want, max_deficit);
  if (z.is_zero() || m < d + 1) {
    if (z.is_zero()) best.offer(Chain(Field::F2, z.n(), d), hypertree_size(m, d));
    return best.take();
  }
  const CosetSpace& sp = coset_space(universe, d);
  const int low = lowest_vertex(universe);
  // Particular filling: cone from the lowest vertex over the faces avoiding it.
  std::uint64_t cur = 0;
  for (const Term& t : z.terms()) {
    if (t.simplex.contains(low)) continue;
    Simplex up = t.simplex.with(low);
    cur |= std::uint64_t{1} << (std::lower_bound(sp.facets.begin(), sp.facets.end(), up) - sp.facets.begin());
  }
  auto to_chain = [&](std::uint64_t mask) {
    std::vector<Simplex> supp;
    for (; mask; mask &= mask - 1) supp.push_back(sp.facets[std::countr_zero(mask)]);
    return Chain::from_support(Field::F2, z.n(), d, supp);
  };
  const std::uint64_t total = std::uint64_t{1} << sp.cycles.size();
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i) cur ^= sp.cycles[std::countr_zero(i)];
    int size = std::popcount(cur);
    if (size > sp.tree_size) continue;
    std::int64_t def = sp.tree_size - size;
    if (!best.wanted(def)) continue;
    if (!acyclic_mask(sp, cur)) continue;
    best.offer(to_chain(cur), def);
    if (best.saturated_at_zero()) break;
  }
  return best.take();
}

std::vector<std::vector<Simplex>> all_hypertrees(Field field, VertexSet universe, int d) {
  const int m = vertex_count(universe);
  auto facets = complete_facets(universe, d);
  const int r = static_cast<int>(hypertree_size(m, d));
  std::vector<std::vector<Simplex>> out;
  const int f = static_cast<int>(facets.size());
  if (r > f) return out;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  // Combinations in lexicographic order of index lists.
  while (true) {
    std::vector<Simplex> cand;
    for (int i : idx) cand.push_back(facets[i]);
    if (HypertreeBasis::is_hypertree(field, universe, d, cand)) out.push_back(std::move(cand));
    int k = r - 1;
    while (k >= 0 && idx[k] == f - r + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

const std::vector<HypertreeBasis>& q_hypertree_bases(int m, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<HypertreeBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<HypertreeBasis> bases;
  for (auto& t : all_hypertrees(Field::Q, vertex_range(m), d))
    bases.emplace_back(Field::Q, vertex_range(m), d, std::move(t));
  return cache.emplace(key, std::move(bases)).first->second;
}

Chain relabel(const Chain& c, int n, VertexSet universe, bool to_local_labels) {
  ChainBuilder b(c.field(), n, c.dim());
  for (const Term& t : c.terms()) {
    VertexSet s = to_local_labels ? to_local(t.simplex.mask(), universe) : from_local(t.simplex.mask(), universe);
    b.add(Simplex(s), t.coef);
  }
  return b.build();
}

}  // namespace

std::vector<RankedFilling> optimal_fillings_q(const Chain& z, VertexSet universe, int want,
                                              std::int64_t max_deficit) {
  check_target(z, universe);
  const int d = z.dim() + 1;
  const int m = vertex_count(universe);
  if (!optimal_search_feasible(Field::Q, m, d)) throw BudgetExceeded("hypertree search too large");
  BestList best(want, max_deficit);
  if (z.is_zero() || m < d + 1) {
    if (z.is_zero()) best.offer(Chain(Field::Q, z.n(), d), hypertree_size(m, d));
    return best.take();
  }
  Chain local = relabel(z, m, universe, true);
  for (const HypertreeBasis& t : q_hypertree_bases(m, d)) {
    Chain f = t.fill(local);
    std::int64_t def = hypertree_size(m, d) - static_cast<std::int64_t>(f.size());
    if (!best.wanted(def)) continue;
    best.offer(relabel(f.with_n(m), z.n(), universe, false), def);
  }
  return best.take();
}

}  // namespace sfill
