#include <atomic>
#include <mutex>
#include <thread>

#include "sfill/fill.hpp"
#include "sfill/linalg.hpp"
#include "sfill/oracle.hpp"
#include "oracle_internal.hpp"

namespace sfill {

namespace {

constexpr int kMaxVerifyKeyBits = 22;

struct EngineTable {
  std::vector<std::int8_t> deficit;    // best engine deficit, capped at 127
  std::vector<FacetMask> out0, out1;   // engine outputs (0 when absent)
};

struct Membership {
  const EngineTable* table;
  std::vector<std::vector<std::uint8_t>>* found;  // per worker
};

void membership_hook(void* ctx, int worker, const AcyclicVisit& v) {
  auto* m = static_cast<Membership*>(ctx);
  auto& f = (*m->found)[worker];
  if (v.facets == m->table->out0[v.key]) f[v.key] |= 1;
  if (v.facets == m->table->out1[v.key]) f[v.key] |= 2;
}

}  // namespace

VerifyReport verify_engine_against_oracle(int n, int d, int jobs, const Budget& budget) {
  EnumerationSpace sp(n, d);
  if (sp.key_bits > kMaxVerifyKeyBits) throw BudgetExceeded("too many cycles to verify");
  VerifyReport rep;
  rep.n = n;
  rep.d = d;
  const std::size_t keys = std::size_t{1} << sp.key_bits;
  rep.cycles = keys - 1;
  EngineTable table;
  table.deficit.assign(keys, 0);
  table.out0.assign(keys, 0);
  table.out1.assign(keys, 0);

  jobs = std::max(1, jobs);
  std::atomic<std::size_t> next{1};
  std::mutex mu;
  auto engine_worker = [&] {
    constexpr std::size_t kChunk = 256;
    while (true) {
      std::size_t lo = next.fetch_add(kChunk);
      if (lo >= keys) break;
      for (std::size_t key = lo; key < std::min(keys, lo + kChunk); ++key) {
        Chain z = sp.cycle_of(key);
        auto res = fill_engine(z, vertex_range(n), 2);
        if (res.empty()) {
          std::lock_guard<std::mutex> lock(mu);
          rep.discrepancies.push_back("engine returned nothing for cycle key " + std::to_string(key));
          continue;
        }
        table.deficit[key] = static_cast<std::int8_t>(std::min<std::int64_t>(res.front().deficit, 127));
        for (std::size_t i = 0; i < res.size() && i < 2; ++i) {
          FacetMask m = sp.mask_of(res[i].filling);
          (i == 0 ? table.out0 : table.out1)[key] = m;
          if (res[i].deficit > 1 && !is_acyclic(Field::F2, n, res[i].filling.support())) {
            std::lock_guard<std::mutex> lock(mu);
            rep.discrepancies.push_back("engine output not acyclic for cycle key " + std::to_string(key));
          }
        }
      }
    }
  };
  if (jobs == 1) {
    engine_worker();
  } else {
    std::vector<std::thread> ts;
    for (int j = 0; j < jobs; ++j) ts.emplace_back(engine_worker);
    for (auto& t : ts) t.join();
  }
  for (std::size_t key = 1; key < keys; ++key) rep.engine_outputs += (table.out0[key] != 0) + (table.out1[key] != 0);

  // Census pass that also looks for every engine output among the visited sets.
  std::vector<std::vector<std::uint8_t>> found(jobs, std::vector<std::uint8_t>(keys, 0));
  Membership ctx{&table, &found};
  rep.census = detail::census_with_hook(n, d, jobs, budget, membership_hook, &ctx);
  for (int j = 1; j < jobs; ++j)
    for (std::size_t k = 0; k < keys; ++k) found[0][k] |= found[j][k];

  if (!rep.census.complete) rep.discrepancies.push_back("census incomplete (budget)");
  const CensusReport& c = rep.census;
  for (std::size_t key = 1; key < keys && c.complete; ++key) {
    const int def = table.deficit[key];
    const std::uint32_t c0 = c.count0[key], c1 = c.count1[key];
    const int optimum = c0 ? 0 : (c1 ? 1 : 2);  // 2 means "at least 2"
    bool ok = optimum == 2 ? def >= 2 : def == optimum;
    if (!ok) {
      rep.discrepancies.push_back("cycle key " + std::to_string(key) + ": engine deficit " + std::to_string(def) +
                                  ", census optimum " + (optimum == 2 ? std::string(">=2") : std::to_string(optimum)));
      continue;
    }
    if (def <= 1) {
      for (int i = 0; i < 2; ++i) {
        FacetMask m = i == 0 ? table.out0[key] : table.out1[key];
        if (!m) continue;
        if (found[0][key] & (1 << i)) {
          ++rep.outputs_found_in_census;
        } else {
          // A second output with deficit above 1 is outside the census range.
          Chain f = sp.chain_of(m);
          if (deficit(f, n) <= 1)
            rep.discrepancies.push_back("engine output for cycle key " + std::to_string(key) + " missing from enumeration");
        }
      }
    }
  }
  return rep;
}

}  // namespace sfill
