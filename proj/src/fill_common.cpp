#include <algorithm>
#include <stdexcept>

#include "fill_internal.hpp"
#include "sfill/combinatorics.hpp"
#include "sfill/linalg.hpp"
#include "sfill/oracle.hpp"

namespace sfill {

namespace detail {

std::vector<int> pivot_order(const Chain& z, PivotStrategy strategy) {
  std::vector<int> vs = vertices_of(z.vertex_set());
  if (strategy == PivotStrategy::SmallestDegree) {
    std::stable_sort(vs.begin(), vs.end(),
                     [&](int a, int b) { return degree(a, z) < degree(b, z); });
  }
  return vs;
}

bool add_distinct(std::vector<FillResult>& out, FillResult r) {
  for (const auto& x : out)
    if (x.filling == r.filling) return false;
  out.push_back(std::move(r));
  return true;
}

void finish(std::vector<FillResult>& out, int want) {
  std::stable_sort(out.begin(), out.end(),
                   [](const FillResult& a, const FillResult& b) { return a.deficit < b.deficit; });
  if (static_cast<int>(out.size()) > want) out.resize(want);
}

bool satisfied(const std::vector<FillResult>& out, int want, std::int64_t target) {
  int good = 0;
  for (const auto& r : out) good += r.deficit <= target;
  return good >= want;
}

FillResult leaf_result(Chain filling, std::int64_t deficit, int d, int m, std::string method,
                       std::string note) {
  FillResult r;
  r.filling = std::move(filling);
  r.deficit = deficit;
  TranscriptFrame f;
  f.d = d;
  f.m = m;
  f.deficit = deficit;
  f.method = std::move(method);
  f.note = std::move(note);
  r.transcript.push_back(std::move(f));
  return r;
}

FillResult compose(int d, int m, int pivot, const FillResult& lower, const FillResult& child,
                   const std::string& method, const std::string& note) {
  FillResult r;
  r.filling = child.filling - cone(pivot, lower.filling);
  r.deficit = lower.deficit + child.deficit;
  TranscriptFrame f;
  f.d = d;
  f.m = m;
  f.pivot = pivot;
  f.lower_deficit = lower.deficit;
  f.child_deficit = child.deficit;
  f.deficit = r.deficit;
  f.method = method;
  f.note = note;
  r.transcript.push_back(f);
  for (auto sub : {&lower, &child}) {
    for (TranscriptFrame t : sub->transcript) {
      t.depth += 1;
      r.transcript.push_back(std::move(t));
    }
    r.profiles.insert(r.profiles.end(), sub->profiles.begin(), sub->profiles.end());
  }
  return r;
}

std::vector<FillResult> pivot_search(const Chain& z, VertexSet universe, int want,
                                     std::int64_t target, const std::vector<int>& pivots,
                                     const LowerFn& lower, const ChildFn& child,
                                     const std::string& method) {
  const int d = z.dim() + 1;
  const int m = vertex_count(universe);
  std::vector<FillResult> out;
  for (int p : pivots) {
    const VertexSet w = universe & ~vertex_bit(p);
    const Chain rest = remove_vertex(p, z);
    for (const FillResult& lo : lower(link(p, z), w)) {
      Chain z2 = rest + lo.filling.with_n(z.n());
      std::vector<FillResult> kids;
      if (z2.is_zero()) {
        if (hypertree_size(m - 1, d) != 0) continue;
        kids.push_back(leaf_result(Chain(z.field(), z.n(), d), 0, d, m - 1, "empty"));
      } else {
        int missing = want;
        for (const auto& r : out) missing -= r.deficit <= target;
        kids = child(z2, w, std::max(1, missing));
      }
      for (const FillResult& k : kids) add_distinct(out, compose(d, m, p, lo, k, method));
      if (satisfied(out, want, target)) {
        finish(out, want);
        return out;
      }
    }
  }
  finish(out, want);
  return out;
}

std::vector<FillResult> oracle_results(const Chain& z, VertexSet universe, int want) {
  const int d = z.dim() + 1;
  const int m = vertex_count(universe);
  auto best = z.field() == Field::F2 ? optimal_fillings_f2(z, universe, want)
                                     : optimal_fillings_q(z, universe, want);
  std::vector<FillResult> out;
  for (auto& b : best)
    out.push_back(leaf_result(std::move(b.filling), b.deficit, d, m,
                              z.field() == Field::F2 ? "oracle-coset" : "oracle-hypertree"));
  return out;
}

}  // namespace detail

ParityStatus parity_status(const Chain& target, int universe_size) {
  ParityStatus p;
  const int d = target.dim() + 1;
  p.applicable = target.field() == Field::F2 && d % 2 == 0;
  p.cycle_size_mod2 = static_cast<int>(target.size() & 1);
  p.binomial_mod2 = static_cast<int>(binom(universe_size - 1, d) & 1);
  p.holds = p.applicable && p.cycle_size_mod2 == p.binomial_mod2;
  return p;
}

bool is_friendly(const Chain& z) {
  if (z.field() != Field::F2 || z.dim() != 2) throw std::invalid_argument("is_friendly: need a 2-chain over F2");
  bool odd = false, even = false;
  for (int v : vertices_of(z.vertex_set())) (degree(v, z) & 1 ? odd : even) = true;
  return odd && even;
}

std::vector<FillResult> fill_engine(const Chain& target, VertexSet universe, int want,
                                    PivotStrategy strategy) {
  const int d = target.dim() + 1;
  const int m = vertex_count(universe);
  if (target.is_zero()) {
    std::vector<FillResult> out;
    out.push_back(detail::leaf_result(Chain(target.field(), target.n(), d), hypertree_size(m, d), d, m, "empty"));
    return out;
  }
  if (d == 0) return fill_dim0(target, universe, want);
  if (d == 1) {
    std::vector<FillResult> out;
    for (Chain& t : tree_fillings(target, universe, want))
      out.push_back(detail::leaf_result(std::move(t), 0, 1, m, "tree"));
    return out;
  }
  if (target.field() == Field::F2) {
    if (d == 2) return fill_dim2_f2(target, universe, want, strategy);
    if (d == 3) return fill_dim3_f2(target, universe, want);
    return fill_general(target, universe, want);
  }
  if (d == 2) return fill_dim2_q(target, universe, want, strategy);
  return fill_general(target, universe, want);
}

std::string check_certificate(const FillCertificate& c) {
  const Chain& f = c.filling;
  if (f.field() != c.target.field()) return "field mismatch";
  if (f.dim() != c.target.dim() + 1) return "dimension mismatch";
  if (f.vertex_set() & ~c.universe) return "filling leaves the universe";
  if (!(boundary(f) == c.target.with_n(f.n()))) return "boundary of filling differs from target";
  if (!is_acyclic(f.field(), f.n(), f.support())) return "filling is not acyclic";
  if (deficit(f, vertex_count(c.universe)) != c.deficit) return "recorded deficit is wrong";
  return {};
}

std::vector<FillCertificate> fill(const FillRequest& req) {
  const Chain& z = req.target;
  const VertexSet universe = req.universe ? req.universe : vertex_range(z.n());
  if (req.want_distinct < 1) throw std::invalid_argument("want_distinct must be positive");
  if (z.vertex_set() & ~universe) throw std::invalid_argument("target uses vertices outside the universe");
  if (highest_vertex(universe) > z.n()) throw std::invalid_argument("universe exceeds n");
  if (!is_cycle(z)) throw std::invalid_argument("target is not a cycle");
  const int d = z.dim() + 1;
  if (vertex_count(universe) < d + 1) throw std::invalid_argument("universe too small for a filling");
  auto results = fill_engine(z, universe, req.want_distinct, req.strategy);
  std::vector<FillCertificate> out;
  for (auto& r : results) {
    FillCertificate c;
    c.target = z;
    c.universe = universe;
    c.filling = r.filling.with_n(z.n());
    c.deficit = r.deficit;
    c.parity = parity_status(z, vertex_count(universe));
    c.transcript = std::move(r.transcript);
    c.profiles = std::move(r.profiles);
    if (auto why = check_certificate(c); !why.empty())
      throw std::logic_error("engine produced an invalid filling: " + why);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<FillCertificate> fill(const Chain& target, int want_distinct) {
  FillRequest req;
  req.target = target;
  req.want_distinct = want_distinct;
  return fill(req);
}

}  // namespace sfill
