#include <algorithm>
#include <stdexcept>

#include "fill_internal.hpp"
#include "sfill/combinatorics.hpp"
#include "sfill/linalg.hpp"

namespace sfill {

namespace {

constexpr int kBaseF2 = 7;
constexpr int kMaxPlansPerCase = 6;
constexpr int kSearchTrees = 3;

Chain edge(int n, int a, int b) {
  return Chain::single(Field::F2, n, Simplex(vertex_bit(a) | vertex_bit(b)));
}

Chain edges_chain(int n, const std::vector<std::pair<int, int>>& es) {
  Chain c(Field::F2, n, 1);
  for (auto [a, b] : es) c = c + edge(n, a, b);
  return c;
}

bool has_edge(const Chain& g, int a, int b) {
  return g.contains(Simplex(vertex_bit(a) | vertex_bit(b)));
}

struct PlanStep {
  int pivot;
  std::optional<Chain> tree;
};

struct Plan {
  std::vector<PlanStep> steps;
  std::string label;
};

bool is_spanning_tree(const Chain& t, VertexSet verts) {
  if (t.vertex_set() & ~verts) return false;
  if (static_cast<int>(t.size()) != vertex_count(verts) - 1) return false;
  return is_acyclic(Field::F2, t.n(), t.support());
}

// Applies the forced elimination steps to the 1-cycle z1 on w, then fills the
// remainder with the default engine.
std::optional<FillResult> run_plan(const Chain& z1, VertexSet w, const Plan& plan) {
  Chain cur = z1;
  VertexSet u = w;
  struct Done {
    int pivot;
    int m;
    Chain tree;
  };
  std::vector<Done> done;
  for (const PlanStep& st : plan.steps) {
    if (!has_vertex(cur.vertex_set(), st.pivot)) return std::nullopt;
    const Chain lk = link(st.pivot, cur);
    const VertexSet u2 = u & ~vertex_bit(st.pivot);
    Chain t;
    if (st.tree) {
      t = *st.tree;
      if (!(boundary(t) == lk) || !is_spanning_tree(t, u2)) return std::nullopt;
    } else {
      auto ts = tree_fillings(lk, u2, 1);
      if (ts.empty()) return std::nullopt;
      t = ts.front();
    }
    Chain next = remove_vertex(st.pivot, cur) + t;
    if (next.is_zero()) return std::nullopt;
    done.push_back({st.pivot, vertex_count(u), t});
    cur = std::move(next);
    u = u2;
  }
  auto rest = fill_dim2_f2(cur, u, 1);
  if (rest.empty()) return std::nullopt;
  FillResult r = rest.front();
  for (auto it = done.rbegin(); it != done.rend(); ++it) {
    FillResult tr = detail::leaf_result(it->tree, 0, 1, it->m - 1, "tree");
    r = detail::compose(2, it->m, it->pivot, tr, r, "pivot", plan.label);
  }
  return r;
}

// Components of a graph given as a 1-chain, as vertex sets.
std::vector<VertexSet> components(const Chain& g) {
  std::vector<VertexSet> comps;
  VertexSet left = g.vertex_set();
  while (left) {
    VertexSet comp = vertex_bit(lowest_vertex(left)), frontier = comp;
    while (frontier) {
      int x = lowest_vertex(frontier);
      frontier &= frontier - 1;
      VertexSet nb = link(x, g).vertex_set() & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

class FriendlyPlanner {
 public:
  FriendlyPlanner(const Chain& z, int v, VertexSet universe)
      : n_(z.n()), v_(v), w_(universe & ~vertex_bit(v)), z1_(link(v, z)), g_(remove_vertex(v, z)) {
    for (int u : vertices_of(w_)) a_[u] = degree(u, g_) & 1;
  }

  const Chain& z1() const { return z1_; }
  const Chain& rest() const { return g_; }
  VertexSet w() const { return w_; }
  int a(int u) const { return a_[u]; }

  std::vector<Plan> case1() const {
    std::vector<Plan> plans;
    for (const Term& t : z1_.terms()) {
      auto e = t.simplex.vertices();
      if (a_[e[0]] == a_[e[1]]) continue;
      for (auto [p, q] : {std::pair{e[0], e[1]}, std::pair{e[1], e[0]}}) {
        const VertexSet s = w_ & ~vertex_bit(p);
        const Chain g1 = remove_vertex(p, z1_);
        std::vector<int> ys;
        for (int y : vertices_of(s & ~vertex_bit(q)))
          if (!has_edge(g1, q, y)) ys.push_back(y);
        if (ys.empty()) ys = vertices_of(s & ~vertex_bit(q));
        for (std::size_t i = 0; i < ys.size() && i < 2; ++i) {
          std::vector<Chain> ts;
          try {
            ts = tree_fillings(link(p, z1_), s, 1, LeafConstraint{q, ys[i]});
          } catch (const std::invalid_argument&) {
            ts = tree_fillings(link(p, z1_), s, 1);
          }
          plans.push_back({{{p, ts.front()}, {q, std::nullopt}}, "case1"});
        }
      }
      if (static_cast<int>(plans.size()) >= kMaxPlansPerCase) break;
    }
    return plans;
  }

  std::vector<Plan> case2() const {
    std::vector<Plan> plans;
    for (int u : vertices_of(z1_.vertex_set())) {
      for (int u2 : vertices_of(w_ & ~vertex_bit(u))) {
        if (a_[u] != a_[u2] || has_edge(z1_, u, u2)) continue;
        const Chain odd = link(u, z1_);
        const VertexSet s = w_ & ~vertex_bit(u) & ~vertex_bit(u2);
        auto t0s = tree_fillings(odd, s, 1);
        if (t0s.empty()) continue;
        const Chain& t0 = t0s.front();
        int tried = 0;
        for (const Term& e : t0.terms()) {
          auto xy = e.simplex.vertices();
          Chain t = t0 + edges_chain(n_, {{xy[0], xy[1]}, {xy[0], u2}, {u2, xy[1]}});
          plans.push_back({{{u, t}, {u2, std::nullopt}}, "case2"});
          if (++tried == 2) break;
        }
        if (static_cast<int>(plans.size()) >= kMaxPlansPerCase) return plans;
      }
    }
    return plans;
  }

  // Case 3 applies when the link is a disjoint union of at most two cliques,
  // each monochromatic under A, with different colors.
  bool clique_structure(std::vector<VertexSet>& comps) const {
    comps = components(z1_);
    if (comps.empty() || comps.size() > 2) return false;
    for (VertexSet c : comps) {
      const int k = vertex_count(c);
      std::size_t edges = 0;
      for (const Term& t : z1_.terms()) edges += (t.simplex.mask() & c) == t.simplex.mask();
      if (edges != static_cast<std::size_t>(k * (k - 1) / 2)) return false;
      const int col = a_[lowest_vertex(c)];
      for (int x : vertices_of(c))
        if (a_[x] != col) return false;
    }
    if (comps.size() == 2 && a_[lowest_vertex(comps[0])] == a_[lowest_vertex(comps[1])]) return false;
    return true;
  }

  std::vector<Plan> case3(const std::vector<VertexSet>& comps) const {
    std::vector<Plan> plans;
    VertexSet k = comps[0];
    for (VertexSet c : comps)
      if (vertex_count(c) > vertex_count(k)) k = c;
    const int p1 = lowest_vertex(k);
    for (int y : vertices_of(k & ~vertex_bit(p1))) {
      if (k == w_) {
        std::vector<std::pair<int, int>> es;
        for (int x : vertices_of(w_ & ~vertex_bit(p1) & ~vertex_bit(y))) es.push_back({std::min(x, y), std::max(x, y)});
        Chain t = edges_chain(n_, es);
        for (int p2 : vertices_of(w_ & ~vertex_bit(p1) & ~vertex_bit(y)))
          plans.push_back({{{p1, t}, {p2, std::nullopt}, {y, std::nullopt}}, "case3-complete"});
      } else {
        for (int a : vertices_of(k & ~vertex_bit(p1) & ~vertex_bit(y))) {
          std::vector<std::pair<int, int>> es;
          for (int x : vertices_of(k & ~vertex_bit(p1) & ~vertex_bit(y) & ~vertex_bit(a)))
            es.push_back({std::min(x, y), std::max(x, y)});
          int prev = y;
          for (int o : vertices_of(w_ & ~k)) {
            es.push_back({std::min(prev, o), std::max(prev, o)});
            prev = o;
          }
          es.push_back({std::min(prev, a), std::max(prev, a)});
          Chain t = edges_chain(n_, es);
          for (int x : vertices_of(w_ & ~vertex_bit(p1) & ~vertex_bit(y)))
            plans.push_back({{{p1, t}, {x, std::nullopt}, {y, std::nullopt}}, "case3-cliques"});
          plans.push_back({{{p1, t}}, "case3-cliques"});
        }
      }
      if (plans.size() > 24) break;
    }
    return plans;
  }

  std::vector<Plan> search() const {
    std::vector<Plan> plans;
    for (int p1 : vertices_of(z1_.vertex_set())) {
      const VertexSet s = w_ & ~vertex_bit(p1);
      for (const Chain& t : tree_fillings(link(p1, z1_), s, kSearchTrees)) {
        plans.push_back({{{p1, t}}, "search"});
        for (int p2 : vertices_of(s)) plans.push_back({{{p1, t}, {p2, std::nullopt}}, "search"});
      }
    }
    return plans;
  }

 private:
  int n_;
  int v_;
  VertexSet w_;
  Chain z1_;
  Chain g_;
  int a_[64] = {};
};

DegreeProfile make_profile(const FriendlyPlanner& pl, int m, int v, const FillResult& part,
                           const Chain& z2) {
  DegreeProfile p;
  p.m = m;
  p.pivot = v;
  for (const auto& f : part.transcript)
    if (f.pivot) {
      p.first_pivot = f.pivot;
      p.case_label = f.note;
      break;
    }
  p.first_pivot_degree = p.first_pivot ? degree(p.first_pivot, part.filling) : 0;
  for (int u : vertices_of(pl.w())) {
    p.vertices.push_back(u);
    p.a.push_back(pl.a(u));
    p.b.push_back(degree(u, part.filling) & 1);
    p.deg.push_back(degree(u, z2) & 1);
  }
  return p;
}

struct Part {
  FillResult part;
  Chain z2;
};

// 2-fillings F of the link of v such that (z minus v) + F is friendly.
std::vector<Part> friendly_parts(const Chain& z, int v, VertexSet universe, int want) {
  FriendlyPlanner pl(z, v, universe);
  const std::int64_t e1 = parity_status(pl.z1(), vertex_count(pl.w())).holds ? 0 : 1;
  std::vector<Part> out;
  auto try_plans = [&](const std::vector<Plan>& plans) {
    for (const Plan& plan : plans) {
      if (static_cast<int>(out.size()) >= want) return;
      auto r = run_plan(pl.z1(), pl.w(), plan);
      if (!r || r->deficit != e1) continue;
      Chain z2 = pl.rest() + r->filling;
      if (!is_friendly(z2)) continue;
      bool dup = false;
      for (const auto& o : out) dup |= o.part.filling == r->filling;
      if (dup) continue;
      r->profiles.push_back(make_profile(pl, vertex_count(universe), v, *r, z2));
      out.push_back({std::move(*r), std::move(z2)});
    }
  };
  auto c1 = pl.case1();
  auto c2 = pl.case2();
  try_plans(c1);
  try_plans(c2);
  if (c1.empty() && c2.empty()) {
    std::vector<VertexSet> comps;
    if (!pl.clique_structure(comps))
      throw std::logic_error("friendliness step: link is neither case 1, 2 nor a union of monochromatic cliques");
    try_plans(pl.case3(comps));
  }
  if (static_cast<int>(out.size()) < want) try_plans(pl.search());
  return out;
}

}  // namespace

std::vector<FillResult> fill_dim3_f2(const Chain& target, VertexSet universe, int want) {
  if (target.field() != Field::F2 || target.dim() != 2) throw std::invalid_argument("fill_dim3_f2: need an F2 2-cycle");
  const int m = vertex_count(universe);
  if (target.is_zero() || m <= kBaseF2) return detail::oracle_results(target, universe, want);

  const std::uint64_t want_parity = binom(m - 2, 2) & 1;
  std::vector<int> order;
  for (int v : vertices_of(target.vertex_set()))
    if ((degree(v, target) & 1) == static_cast<int>(want_parity)) order.push_back(v);
  const std::int64_t target_deficit = order.empty() ? 1 : 0;
  for (int v : vertices_of(target.vertex_set()))
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);

  std::vector<FillResult> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    auto parts = friendly_parts(target, v, universe, 2);
    if (parts.empty()) {
      if (i == 0) throw std::logic_error("friendliness step found no sub-filling for the preferred pivot");
      continue;
    }
    const VertexSet w = universe & ~vertex_bit(v);
    for (const Part& p : parts) {
      int missing = want;
      for (const auto& r : out) missing -= r.deficit <= target_deficit;
      for (const FillResult& k : fill_dim3_f2(p.z2, w, std::max(1, missing)))
        detail::add_distinct(out, detail::compose(3, m, v, p.part, k, "pivot",
                                                  p.part.profiles.empty() ? "" : p.part.profiles.back().case_label));
      if (detail::satisfied(out, want, target_deficit)) {
        detail::finish(out, want);
        return out;
      }
    }
  }
  detail::finish(out, want);
  return out;
}

}  // namespace sfill
