#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sfill/fill.hpp"
#include "support/reference.hpp"

using namespace sfill;

namespace {

Simplex V(int v) { return Simplex(vertex_bit(v)); }

Chain points(Field f, int n, std::vector<std::pair<int, Rational>> pts) {
  ChainBuilder b(f, n, 0);
  for (auto& [v, c] : pts) b.add(V(v), c);
  return b.build();
}

long long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

TEST_CASE("d=0 fillings") {
  Chain e = boundary(points(Field::Q, 4, {{2, 3}}));
  auto r = fill_dim0(e, vertex_range(4), 4);
  REQUIRE(r.size() == 4);
  for (const auto& f : r) {
    CHECK(boundary(f.filling) == e);
    CHECK(f.deficit == 0);
  }
}

TEST_CASE("d=1 path between two odd vertices") {
  Chain z = points(Field::F2, 5, {{1, 1}, {5, 1}});
  Chain t = fill_dim1(z, vertex_range(5));
  CHECK(t.size() == 4);
  CHECK(boundary(t) == z);
  for (int v = 1; v <= 5; ++v) CHECK(degree(v, t) <= 2);
  CHECK(degree(1, t) == 1);
  CHECK(degree(5, t) == 1);
  CHECK(ref::check_filling(z, t, ref::iota_vertices(5), 0).empty());
}

TEST_CASE("d=1 filling counts") {
  for (int n = 4; n <= 5; ++n) {
    Chain z = points(Field::F2, n, {{1, 1}, {n, 1}});
    auto all = tree_fillings(z, vertex_range(n), 1'000'000);
    std::set<std::vector<Simplex>> distinct;
    for (const Chain& t : all) {
      CHECK(ref::check_filling(z, t, ref::iota_vertices(n), 0).empty());
      distinct.insert(t.support());
    }
    CHECK(distinct.size() == all.size());
    CHECK(static_cast<long long>(all.size()) >= factorial(n - 2));
  }
}

TEST_CASE("d=1 forced leaf") {
  Chain z = points(Field::F2, 5, {{1, 1}, {2, 1}, {3, 1}, {4, 1}});
  Chain t = fill_dim1(z, vertex_range(5), LeafConstraint{1, 5});
  CHECK(t.contains(Simplex(vertex_bit(1) | vertex_bit(5))));
  CHECK(degree(1, t) == 1);
  CHECK(boundary(t) == z);
  CHECK(t.size() == 4);
  for (const Chain& u : tree_fillings(z, vertex_range(5), 100, LeafConstraint{1, 5})) {
    CHECK(degree(1, u) == 1);
    CHECK(u.contains(Simplex(vertex_bit(1) | vertex_bit(5))));
  }

  Chain pair = points(Field::F2, 4, {{1, 1}, {2, 1}});
  CHECK_THROWS_AS(fill_dim1(pair, vertex_range(4), LeafConstraint{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(fill_dim1(z, vertex_range(5), LeafConstraint{5, 1}), std::invalid_argument);
}

TEST_CASE("d=1 over Q") {
  Chain z = points(Field::Q, 4, {{1, 1}, {2, -1}});
  Chain t = fill_dim1(z, vertex_range(4));
  CHECK(boundary(t) == z);
  CHECK(t.size() == 3);
  CHECK(ref::check_filling(z, t, ref::iota_vertices(4), 0).empty());

  Chain w = points(Field::Q, 6, {{1, Rational(2, 3)}, {3, -1}, {6, Rational(1, 3)}});
  for (const Chain& u : tree_fillings(w, vertex_range(6), 50))
    CHECK(ref::check_filling(w, u, ref::iota_vertices(6), 0).empty());
}

TEST_CASE("d=1 rejects non-cycles") {
  CHECK_THROWS_AS(fill_dim1(points(Field::F2, 4, {{1, 1}}), vertex_range(4)), std::invalid_argument);
  CHECK_THROWS_AS(fill_dim1(points(Field::Q, 4, {{1, 1}, {2, 1}}), vertex_range(4)), std::invalid_argument);
}
