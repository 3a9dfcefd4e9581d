// Acceptance suite: one PASS/FAIL line per criterion. Every check is exact;
// the only numeric tolerance is kDeficitRatioBound (criterion 7).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sfill/combinatorics.hpp"
#include "sfill/fill.hpp"
#include "sfill/hamiltonian.hpp"
#include "sfill/oracle.hpp"
#include "sfill/random.hpp"
#include "support/reference.hpp"

using namespace sfill;

namespace {

// Criterion 7: achieved deficit / n^(d-3) over the whole grid.
constexpr double kDeficitRatioBound = 4.0;

constexpr int kIdentityChains = 10000;
constexpr int kQRandomCycles = 1000;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;
  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

Simplex first_simplex(int d) {
  VertexSet m = 0;
  for (int v = 1; v <= d + 1; ++v) m |= vertex_bit(v);
  return Simplex(m);
}

std::string check_cert(const FillCertificate& c) {
  return ref::check_filling(c.target, c.filling, vertices_of(c.universe), c.deficit);
}

// ---------------------------------------------------------------------------

void criterion1(Outcome& o) {
  Rng rng(1001);
  std::uniform_int_distribution<int> nd(2, 10);
  long identities = 0;
  for (int it = 0; it < kIdentityChains; ++it) {
    const Field f = it % 2 ? Field::Q : Field::F2;
    const int n = nd(rng);
    const int dim = std::uniform_int_distribution<int>(0, std::min(4, n - 1))(rng);
    const Chain c = random_chain(f, n, dim, 1 + static_cast<int>(rng() % 8), rng);
    const Chain bc = boundary(c);
    if (ref::from(bc) != ref::boundary(ref::from(c), f == Field::F2)) o.fail("boundary differs from reference");
    if (!boundary(bc).is_zero()) o.fail("boundary of boundary nonzero");
    ++identities;
    for (int v = 1; v <= n; ++v) {
      if (has_vertex(c.vertex_set(), v)) {
        if (!(cone(v, link(v, c)) == star(v, c))) o.fail("cone(link) != star");
      } else if (!(boundary(cone(v, c)) == c - cone(v, bc))) {
        o.fail("boundary of cone identity fails");
      }
      ++identities;
    }
    if (dim >= 1)
      for (int v : vertices_of(bc.vertex_set())) {
        if (!is_cycle(link(v, bc))) o.fail("link of a cycle is not a cycle");
        ++identities;
      }
  }
  o.detail << kIdentityChains << " random chains, " << identities << " identities checked";
}

// ---------------------------------------------------------------------------

void criterion2(Outcome& o) {
  std::uint64_t cycles = 0, certs = 0, zero = 0;
  for (int n = 4; n <= 7; ++n) {
    std::vector<Chain> basis;
    for (Simplex s : complete_facets(vertex_range(n), 2))
      if (s.contains(1)) basis.push_back(boundary(Chain::single(Field::F2, n, s)));
    Chain z(Field::F2, n, 1);
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    const bool tree_odd = binom(n - 1, 2) & 1;
    for (std::uint64_t g = 1; g < total; ++g) {
      z = z + basis[std::countr_zero(g)];
      ++cycles;
      auto res = fill(z, 2);
      const bool parity = (z.size() & 1) == static_cast<std::size_t>(tree_odd);
      if (res.empty()) {
        o.fail("no filling for a cycle at n=" + std::to_string(n));
        continue;
      }
      if (res[0].deficit > 1) o.fail("deficit above 1 at n=" + std::to_string(n));
      if ((res[0].deficit == 0) != parity) o.fail("deficit 0 does not match parity at n=" + std::to_string(n));
      zero += res[0].deficit == 0;
      const bool need_two = n >= 5 || !parity;
      if (need_two && (res.size() < 2 || res[1].deficit > 1))
        o.fail("fewer than two fillings of deficit <= 1 at n=" + std::to_string(n));
      if (res.size() == 2 && res[0].filling == res[1].filling) o.fail("duplicate fillings");
      for (const auto& c : res) {
        ++certs;
        if (auto why = check_cert(c); !why.empty()) o.fail("certificate: " + why);
      }
    }
  }
  o.detail << cycles << " cycles on n=4..7, " << certs << " certificates re-verified, " << zero
           << " with deficit 0";
}

// ---------------------------------------------------------------------------

void criterion3(Outcome& o) {
  const Chain c4 = boundary(Chain::single(Field::Q, 4, Simplex::from_vertices({1, 2, 3}))) -
                   boundary(Chain::single(Field::Q, 4, Simplex::from_vertices({1, 2, 4})));
  const Chain c3 = boundary(Chain::single(Field::Q, 5, Simplex::from_vertices({1, 2, 3})));
  for (const Chain* z : {&c4, &c3}) {
    auto res = fill(*z, 2);
    if (res.empty() || res[0].deficit != 1) o.fail("exceptional cycle not filled with deficit exactly 1");
    for (const auto& c : res)
      if (auto why = check_cert(c); !why.empty()) o.fail("certificate: " + why);
    const long long best = ref::brute_best_deficit(ref::from(*z), z->n(), 2, false);
    if (best != 1) o.fail("hypertree search found optimum " + std::to_string(best));
  }

  Rng rng(3003);
  int ok = 0;
  for (int it = 0; it < kQRandomCycles; ++it) {
    const int n = 6 + it % 4;
    const Chain z = random_cycle(Field::Q, n, 2, rng);
    auto res = fill(z, 2);
    if (res.size() != 2 || res[0].deficit != 0 || res[1].deficit != 0) {
      o.fail("random Q cycle at n=" + std::to_string(n) + " lacks two 0-deficit fillings");
      continue;
    }
    if (res[0].filling == res[1].filling) o.fail("duplicate Q fillings");
    bool good = true;
    for (const auto& c : res)
      if (auto why = check_cert(c); !why.empty()) good = false, o.fail("certificate: " + why);
    ok += good;
  }
  o.detail << "C4@4 and C3@5 optimum 1 over all Q-hypertrees; " << ok << "/" << kQRandomCycles
           << " random cycles on n=6..9 with two verified 0-deficit fillings";
}

// ---------------------------------------------------------------------------

struct OracleRun {
  VerifyReport report;
  double seconds = 0;
};

std::map<std::pair<int, int>, OracleRun> g_oracle;

const OracleRun& oracle_run(int n, int d) {
  auto it = g_oracle.find({n, d});
  if (it != g_oracle.end()) return it->second;
  const auto start = std::chrono::steady_clock::now();
  OracleRun r;
  r.report = verify_engine_against_oracle(n, d, 1);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return g_oracle.emplace(std::pair{n, d}, std::move(r)).first->second;
}

void criterion4(Outcome& o) {
  const CensusReport& c = oracle_run(7, 3).report.census;
  if (!c.complete) o.fail("census incomplete");
  if (c.nonzero_cycles != (std::uint64_t{1} << 20) - 1) o.fail("census missed cycles");
  if (c.min_total < 2) o.fail("some 2-cycle has fewer than two fillings of deficit <= 1");
  // complements of 3-hypertrees of K_7 are 2-hypertrees (Alexander duality)
  const std::uint64_t dual = oracle_run(7, 2).report.census.trees;
  if (c.trees != dual) o.fail("hypertree count differs from the dual count");
  o.detail << c.nonzero_cycles << " nonzero 2-cycles of K_7, " << c.trees << " hypertrees (= 2-hypertrees), " << c.deficit_one
           << " deficit-1 forests; min fillings per cycle = " << c.min_total
           << "; cycles without a 0-deficit filling = " << c.cycles_without_zero;
}

// ---------------------------------------------------------------------------

bool ref_simple(const Chain& z) { return ref::simple_cycle(ref::from(z), z.field() == Field::F2); }

void criterion5(Outcome& o) {
  for (int n : {7, 8, 11, 12}) {
    auto h = hamiltonian_2cycle(n, Field::F2);
    if (h.outcome != HamiltonianOutcome::Cycle) o.fail("F2 n=" + std::to_string(n) + " not a cycle");
    if (static_cast<long long>(h.cycle.size()) != ref::binom(n - 1, 2) + 1) o.fail("F2 size mismatch");
    if (!ref_simple(h.cycle)) o.fail("F2 cycle not simple");
  }
  const int m5 = max_simple_cycle(5, 2, Field::F2).max_size;
  const int m6 = max_simple_cycle(6, 2, Field::F2).max_size;
  if (m5 != 6) o.fail("max simple cycle at n=5 is " + std::to_string(m5));
  if (m6 != 10) o.fail("max simple cycle at n=6 is " + std::to_string(m6));
  for (int n : {4, 6, 7, 8}) {
    auto h = hamiltonian_2cycle(n, Field::Q);
    if (h.outcome != HamiltonianOutcome::Cycle) o.fail("Q n=" + std::to_string(n) + " not a cycle");
    if (static_cast<long long>(h.cycle.size()) != ref::binom(n - 1, 2) + 1) o.fail("Q size mismatch");
    if (!ref_simple(h.cycle)) o.fail("Q cycle not simple");
  }
  auto q5 = hamiltonian_2cycle(5, Field::Q);
  if (q5.outcome != HamiltonianOutcome::Nonexistent) o.fail("Q n=5 not reported nonexistent");
  const long long q5best = ref::brute_best_deficit(ref::from(q5.certificate.target), 5, 2, false);
  if (q5best != 1) o.fail("Q n=5 hypertree search optimum " + std::to_string(q5best));
  o.detail << "F2 cycles n=7,8,11,12; max simple cycle n=5: " << m5 << ", n=6: " << m6
           << "; Q cycles n=4,6,7,8; Q n=5 nonexistent";
}

void criterion6(Outcome& o) {
  for (int n : {8, 9, 12, 13}) {
    auto h = hamiltonian_3cycle(n);
    if (h.outcome != HamiltonianOutcome::Cycle) o.fail("n=" + std::to_string(n) + " not a cycle");
    if (static_cast<long long>(h.cycle.size()) != ref::binom(n - 1, 3) + 1) o.fail("size mismatch");
    if (!ref_simple(h.cycle)) o.fail("cycle not simple");
  }
  for (int n : {7, 10, 11}) {
    auto h = hamiltonian_3cycle(n);
    if (h.outcome != HamiltonianOutcome::Near || h.deficit != 1) o.fail("n=" + std::to_string(n) + " not near(1)");
    if (static_cast<long long>(h.cycle.size()) != ref::binom(n - 1, 3)) o.fail("near size mismatch");
    if (!ref_simple(h.cycle)) o.fail("near-cycle not simple");
  }
  o.detail << "cycles n=8,9,12,13; near-cycles n=7,10,11";
}

// ---------------------------------------------------------------------------

void criterion7(Outcome& o) {
  struct Cell {
    Field f;
    int d;
  };
  Rng rng(7007);
  double worst = 0;
  std::string worst_at;
  int certs = 0;
  for (Cell cell : {Cell{Field::F2, 4}, Cell{Field::Q, 3}, Cell{Field::Q, 4}}) {
    for (int n = 7; n <= 12; ++n) {
      std::vector<Chain> targets{boundary(Chain::single(cell.f, n, first_simplex(cell.d)))};
      for (int k = 0; k < 3; ++k) targets.push_back(random_cycle(cell.f, n, cell.d, rng));
      for (const Chain& z : targets) {
        auto res = fill(z, 1);
        if (res.empty()) {
          o.fail("no filling");
          continue;
        }
        ++certs;
        if (auto why = check_cert(res[0]); !why.empty()) o.fail("certificate: " + why);
        const double ratio = static_cast<double>(res[0].deficit) / std::pow(n, cell.d - 3);
        if (ratio > worst) {
          worst = ratio;
          worst_at = std::string(field_name(cell.f)) + " d=" + std::to_string(cell.d) + " n=" + std::to_string(n) +
                     " deficit=" + std::to_string(res[0].deficit);
        }
      }
    }
  }
  if (worst > kDeficitRatioBound) o.fail("deficit ratio above the pinned bound");
  o.detail << certs << " certificates verified; max deficit/n^(d-3) = " << worst << " (" << worst_at
           << "), bound " << kDeficitRatioBound;
}

// ---------------------------------------------------------------------------

void criterion8(Outcome& o) {
  for (auto [n, d] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 2}, std::pair{7, 2}, std::pair{6, 3},
                      std::pair{7, 3}}) {
    const OracleRun& r = oracle_run(n, d);
    if (!r.report.ok()) {
      o.fail("(" + std::to_string(n) + "," + std::to_string(d) + "): " +
             std::to_string(r.report.discrepancies.size()) + " discrepancies");
      for (const auto& s : r.report.discrepancies) {
        o.fail(s);
        break;
      }
    }
    o.detail << "(" << n << "," << d << ") " << r.report.cycles << " cycles ok; ";
  }
  for (int n = 2; n <= 7; ++n) {
    EnumerationSpace sp(n, 1);
    std::uint64_t trees = 0;
    enumerate_acyclic(sp, 0, [&](const AcyclicVisit&) { ++trees; });
    std::uint64_t cayley = 1;
    for (int i = 0; i < n - 2; ++i) cayley *= n;
    if (trees != cayley) o.fail("spanning tree count at n=" + std::to_string(n));
  }
  o.detail << "Cayley n^(n-2) for n=2..7";
}

// ---------------------------------------------------------------------------

void criterion9(Outcome& o) {
  const char* sep = "";
  for (auto [n, d] : {std::pair{8, 2}, std::pair{8, 3}}) {
    auto t = non_collapsible_tree(n, d);
    const auto facets = t.tree.support();
    if (static_cast<long long>(facets.size()) != ref::binom(n - 1, d)) o.fail("size is not C(n-1,d)");
    std::vector<ref::Verts> vs;
    for (Simplex s : facets) vs.push_back(s.vertices());
    if (ref::rank(vs, true) != static_cast<int>(vs.size())) o.fail("not acyclic");
    std::map<Simplex, int> deg;
    for (Simplex s : facets)
      for (int v : s.vertices()) ++deg[s.without(v)];
    for (auto [face, k] : deg)
      if (k == 1) o.fail("exposed face " + face.to_string());
    if (collapse_check(facets).collapsed_fully) o.fail("collapse_check collapsed the tree");
    o.detail << sep << "(" << n << "," << d << ") size " << facets.size() << " removed "
             << t.removed.to_string();
    sep = "; ";
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> all{
      {1, "operator identities", criterion1},
      {2, "d=2 over F2, exhaustive n=4..7", criterion2},
      {3, "d=2 over Q", criterion3},
      {4, "d=3 census n=7", criterion4},
      {5, "Hamiltonian 2-cycles", criterion5},
      {6, "Hamiltonian 3-cycles", criterion6},
      {7, "general d", criterion7},
      {8, "oracle cross-validation", criterion8},
      {9, "non-collapsible hypertrees", criterion9},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.str().c_str(), secs);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
