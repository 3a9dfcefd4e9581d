#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>


#include "sfill/combinatorics.hpp"
#include "sfill/digest.hpp"
#include "sfill/oracle.hpp"
#include "sfill/serialize.hpp"
#include "oracle_internal.hpp"

namespace sfill {

EnumerationSpace::EnumerationSpace(int n_, int d_) : n(n_), d(d_) {
  if (d < 1 || n < d + 1) throw std::invalid_argument("enumeration space needs d >= 1 and n >= d + 1");
  if (binom(n, d + 1) > 128 || binom(n - 1, d) > 64) throw std::invalid_argument("enumeration space too large");
  facets = complete_facets(vertex_range(n), d);
  facet_count = static_cast<int>(facets.size());
  key_bits = static_cast<int>(binom(n - 1, d));
  tree_size = key_bits;
  const VertexSet rest = vertex_range(n) & ~vertex_bit(1);
  for (Simplex s : facets) {
    std::uint64_t v = 0;
    for (VertexSet b = s.mask(); b; b &= b - 1) {
      Simplex f = s.without(lowest_vertex(b));
      if (!f.contains(1)) v |= std::uint64_t{1} << colex_rank(f.mask(), rest);
    }
    vectors.push_back(v);
  }
}

std::uint64_t EnumerationSpace::key_of(const Chain& cycle) const {
  const VertexSet rest = vertex_range(n) & ~vertex_bit(1);
  std::uint64_t k = 0;
  for (const Term& t : cycle.terms())
    if (!t.simplex.contains(1)) k |= std::uint64_t{1} << colex_rank(t.simplex.mask(), rest);
  return k;
}

Chain EnumerationSpace::cycle_of(std::uint64_t key) const {
  static thread_local std::vector<Simplex> coords;
  static thread_local std::pair<int, int> coords_for{0, 0};
  if (coords_for != std::make_pair(n, d)) {
    coords = k_subsets(vertex_range(n) & ~vertex_bit(1), d);
    coords_for = {n, d};
  }
  std::vector<Simplex> cones;
  for (std::uint64_t k = key; k; k &= k - 1) cones.push_back(coords[std::countr_zero(k)].with(1));
  return boundary(Chain::from_support(Field::F2, n, d, cones));
}

Chain EnumerationSpace::chain_of(FacetMask mask) const {
  std::vector<Simplex> s;
  for (int i = 0; i < facet_count; ++i)
    if ((mask >> i) & 1) s.push_back(facets[i]);
  return Chain::from_support(Field::F2, n, d, s);
}

FacetMask EnumerationSpace::mask_of(const Chain& filling) const {
  FacetMask m = 0;
  for (const Term& t : filling.terms()) {
    auto it = std::lower_bound(facets.begin(), facets.end(), t.simplex);
    if (it == facets.end() || *it != t.simplex) throw std::invalid_argument("simplex not in the space");
    m |= FacetMask{1} << (it - facets.begin());
  }
  return m;
}

namespace {

constexpr int kDenseKeyBits = 26;

class Tally {
 public:
  explicit Tally(int key_bits) : dense_(key_bits <= kDenseKeyBits) {
    if (dense_) {
      c0_.assign(std::size_t{1} << key_bits, 0);
      c1_.assign(std::size_t{1} << key_bits, 0);
    }
  }
  void add(std::uint64_t key, int deficit) {
    if (dense_) {
      (deficit == 0 ? c0_ : c1_)[key]++;
    } else {
      auto& e = sparse_[key];
      (deficit == 0 ? e.first : e.second)++;
    }
  }
  void merge(const Tally& o) {
    if (dense_) {
      for (std::size_t i = 0; i < c0_.size(); ++i) {
        c0_[i] += o.c0_[i];
        c1_[i] += o.c1_[i];
      }
    } else {
      for (auto& [k, v] : o.sparse_) {
        auto& e = sparse_[k];
        e.first += v.first;
        e.second += v.second;
      }
    }
  }
  bool dense() const { return dense_; }
  std::vector<std::uint32_t> c0_, c1_;
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> sparse_;

 private:
  bool dense_;
};

struct CensusVisitor {
  Tally* tally;
  int tree_size;
  int worker;
  detail::LeafHook hook;
  void* ctx;
  std::uint64_t trees = 0, def1 = 0;
  void operator()(const AcyclicVisit& v) {
    int def = tree_size - v.size;
    tally->add(v.key, def);
    (def == 0 ? trees : def1)++;
    if (hook) hook(ctx, worker, v);
  }
};

struct NoopVisitor {
  void operator()(const AcyclicVisit&) {}
};

int split_depth(const EnumerationSpace& sp, int jobs) {
  return std::min(sp.facet_count, jobs > 1 ? 14 : 8);
}

// Runs the prefix tasks on `jobs` threads. make_visitor(worker) returns a
// visitor owned by that worker.
template <class MakeVisitor>
bool run_tasks(const EnumerationSpace& sp, int slack, int jobs, const Budget& budget,
               MakeVisitor&& make_visitor, std::uint64_t& nodes_out) {
  std::vector<detail::EnumPrefix> prefixes;
  NoopVisitor noop;
  detail::AcyclicEnumerator<NoopVisitor> splitter(sp, sp.tree_size - slack, noop, Budget{});
  splitter.split(split_depth(sp, jobs), prefixes);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{splitter.nodes()};
  std::atomic<bool> stopped{false};
  const auto start = std::chrono::steady_clock::now();
  auto worker = [&](int id) {
    auto visitor = make_visitor(id);
    while (!stopped) {
      std::size_t i = next++;
      if (i >= prefixes.size()) break;
      Budget b;
      if (budget.max_nodes) {
        std::uint64_t used = nodes.load();
        if (used >= budget.max_nodes) { stopped = true; break; }
        b.max_nodes = budget.max_nodes - used;
      }
      if (budget.max_seconds > 0) {
        double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (spent >= budget.max_seconds) { stopped = true; break; }
        b.max_seconds = budget.max_seconds - spent;
      }
      detail::AcyclicEnumerator<std::remove_reference_t<decltype(*visitor)>> e(sp, sp.tree_size - slack, *visitor, b);
      try {
        e.run(prefixes[i]);
      } catch (const BudgetExceeded&) {
        stopped = true;
      }
      nodes += e.nodes();
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> ts;
    for (int j = 0; j < jobs; ++j) ts.emplace_back(worker, j);
    for (auto& t : ts) t.join();
  }
  nodes_out = nodes;
  return !stopped;
}

void summarize(CensusReport& r, const Tally& t) {
  r.nonzero_cycles = (std::uint64_t{1} << r.key_bits) - 1;
  r.min_total = std::numeric_limits<std::uint64_t>::max();
  if (t.dense()) {
    r.count0 = t.c0_;
    r.count1 = t.c1_;
    for (std::size_t k = 1; k < t.c0_.size(); ++k) {
      std::uint64_t tot = std::uint64_t{t.c0_[k]} + t.c1_[k];
      r.min_total = std::min(r.min_total, tot);
      r.cycles_without_zero += t.c0_[k] == 0;
      r.cycles_without_le1 += tot == 0;
    }
  } else {
    std::uint64_t present = 0;
    for (auto& [k, v] : t.sparse_) {
      if (k == 0) continue;
      ++present;
      r.min_total = std::min<std::uint64_t>(r.min_total, std::uint64_t{v.first} + v.second);
      r.cycles_without_zero += v.first == 0;
    }
    r.cycles_without_le1 = r.nonzero_cycles - present;
    r.cycles_without_zero += r.cycles_without_le1;
    if (r.cycles_without_le1) r.min_total = 0;
  }
}

}  // namespace

CensusReport detail::census_with_hook(int n, int d, int jobs, const Budget& budget, LeafHook hook,
                                      void* ctx) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationSpace sp(n, d);
  CensusReport r;
  r.n = n;
  r.d = d;
  r.slack = 1;
  r.key_bits = sp.key_bits;
  jobs = std::max(1, jobs);
  std::vector<std::unique_ptr<Tally>> tallies;
  std::vector<std::unique_ptr<CensusVisitor>> visitors;
  for (int j = 0; j < jobs; ++j) {
    tallies.push_back(std::make_unique<Tally>(sp.key_bits));
    visitors.push_back(std::make_unique<CensusVisitor>(CensusVisitor{tallies.back().get(), sp.tree_size, j, hook, ctx}));
  }
  r.complete = run_tasks(sp, 1, jobs, budget, [&](int id) { return visitors[id].get(); }, r.nodes);
  for (int j = 1; j < jobs; ++j) tallies[0]->merge(*tallies[j]);
  for (auto& v : visitors) {
    r.trees += v->trees;
    r.deficit_one += v->def1;
  }
  summarize(r, *tallies[0]);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CensusReport filling_census(int n, int d, int jobs, const Budget& budget) {
  return detail::census_with_hook(n, d, jobs, budget, nullptr, nullptr);
}

namespace {

constexpr char kMagic[8] = {'S', 'F', 'C', 'E', 'N', 'S', 'U', 'S'};
constexpr std::uint32_t kCensusVersion = 1;

template <class T>
void put(std::string& out, T v) {
  out.append(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(const std::string& in, std::size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw std::runtime_error("census file truncated");
  T v;
  std::memcpy(&v, in.data() + pos, sizeof v);
  pos += sizeof v;
  return v;
}

}  // namespace

void write_census(const CensusReport& r, const std::string& binary_path, const std::string& json_path) {
  std::string bin(kMagic, sizeof kMagic);
  put<std::uint32_t>(bin, kCensusVersion);
  for (int v : {r.n, r.d, r.slack, r.key_bits}) put<std::int32_t>(bin, v);
  put<std::uint8_t>(bin, r.complete);
  for (std::uint64_t v : {r.nodes, r.trees, r.deficit_one, r.min_total, r.cycles_without_zero,
                          r.cycles_without_le1, r.nonzero_cycles})
    put<std::uint64_t>(bin, v);
  put<std::uint64_t>(bin, r.count0.size());
  for (auto c : r.count0) put<std::uint32_t>(bin, c);
  for (auto c : r.count1) put<std::uint32_t>(bin, c);
  {
    std::ofstream f(binary_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + binary_path);
    f << bin;
  }
  Json j = census_summary_to_json(r);
  j["table_sha256"] = sha256_hex(bin);
  std::ofstream f(json_path);
  if (!f) throw std::runtime_error("cannot write " + json_path);
  f << j.dump(2) << '\n';
}

CensusReport read_census(const std::string& binary_path) {
  std::ifstream f(binary_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + binary_path);
  std::string in((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (in.size() < sizeof kMagic || std::memcmp(in.data(), kMagic, sizeof kMagic) != 0)
    throw std::runtime_error("not a census file");
  std::size_t pos = sizeof kMagic;
  if (get<std::uint32_t>(in, pos) != kCensusVersion) throw std::runtime_error("unsupported census version");
  CensusReport r;
  r.n = get<std::int32_t>(in, pos);
  r.d = get<std::int32_t>(in, pos);
  r.slack = get<std::int32_t>(in, pos);
  r.key_bits = get<std::int32_t>(in, pos);
  r.complete = get<std::uint8_t>(in, pos);
  r.nodes = get<std::uint64_t>(in, pos);
  r.trees = get<std::uint64_t>(in, pos);
  r.deficit_one = get<std::uint64_t>(in, pos);
  r.min_total = get<std::uint64_t>(in, pos);
  r.cycles_without_zero = get<std::uint64_t>(in, pos);
  r.cycles_without_le1 = get<std::uint64_t>(in, pos);
  r.nonzero_cycles = get<std::uint64_t>(in, pos);
  auto len = get<std::uint64_t>(in, pos);
  r.count0.resize(len);
  r.count1.resize(len);
  for (auto& c : r.count0) c = get<std::uint32_t>(in, pos);
  for (auto& c : r.count1) c = get<std::uint32_t>(in, pos);
  if (pos != in.size()) throw std::runtime_error("trailing bytes in census file");
  return r;
}

}  // namespace sfill
