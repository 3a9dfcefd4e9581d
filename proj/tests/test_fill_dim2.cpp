#include <catch2/catch_amalgamated.hpp>

#include "sfill/combinatorics.hpp"
#include "sfill/fill.hpp"
#include "sfill/random.hpp"
#include "support/reference.hpp"

using namespace sfill;

namespace {

Simplex S(std::initializer_list<int> v) { return Simplex::from_vertices(std::vector<int>(v)); }

Chain tri_boundary(Field f, int n, Simplex s) { return boundary(Chain::single(f, n, s)); }

void check_all(const Chain& z, const std::vector<FillCertificate>& certs) {
  const int n = z.n();
  for (const auto& c : certs) {
    INFO("deficit " << c.deficit);
    CHECK(ref::check_filling(z, c.filling, ref::iota_vertices(n), c.deficit).empty());
  }
  for (std::size_t i = 0; i < certs.size(); ++i)
    for (std::size_t j = i + 1; j < certs.size(); ++j) CHECK_FALSE(certs[i].filling == certs[j].filling);
}

}  // namespace

TEST_CASE("F2 triangle at n=4 has a unique 0-deficit filling") {
  Chain z = tri_boundary(Field::F2, 4, S({1, 2, 3}));
  auto certs = fill(z, 2);
  REQUIRE(certs.size() == 2);
  check_all(z, certs);
  CHECK(certs[0].deficit == 0);
  CHECK(certs[0].filling.support() == std::vector<Simplex>{S({1, 2, 4}), S({1, 3, 4}), S({2, 3, 4})});
  CHECK(certs[1].deficit > 0);
  CHECK(certs[0].parity.holds);
}

TEST_CASE("F2 four-cycle at n=4 has two 1-deficit fillings") {
  Chain z = tri_boundary(Field::F2, 4, S({1, 2, 3})) + tri_boundary(Field::F2, 4, S({1, 2, 4}));
  REQUIRE(z.size() == 4);
  auto certs = fill(z, 2);
  REQUIRE(certs.size() == 2);
  check_all(z, certs);
  CHECK(certs[0].deficit == 1);
  CHECK(certs[1].deficit == 1);
  CHECK_FALSE(certs[0].parity.holds);
}

TEST_CASE("F2 triangle at n=6 needs deficit 1") {
  Chain z = tri_boundary(Field::F2, 6, S({1, 2, 3}));
  auto certs = fill(z, 2);
  REQUIRE(certs.size() == 2);
  check_all(z, certs);
  CHECK(certs[0].deficit == 1);
  CHECK(certs[0].filling.size() == 9);
  // |boundary F| = 3|F| mod 2, so |F| = 10 cannot produce an odd cycle
  CHECK_FALSE(certs[0].parity.holds);
}

TEST_CASE("F2 parity cycles at n=7 get 0-deficit fillings") {
  Rng rng(17);
  int tried = 0;
  while (tried < 20) {
    Chain z = random_cycle(Field::F2, 7, 2, rng);
    if (z.size() % 2 != 1) continue;
    ++tried;
    auto certs = fill(z, 2);
    REQUIRE(certs.size() == 2);
    check_all(z, certs);
    CHECK(certs[0].deficit == 0);
    CHECK(certs[0].filling.size() == 15);
    CHECK(certs[1].deficit == 0);
  }
}

TEST_CASE("F2 exhaustive for n=4..6", "[property]") {
  for (int n = 4; n <= 6; ++n) {
    std::vector<Chain> basis;
    for (Simplex s : complete_facets(vertex_range(n), 2))
      if (s.contains(1)) basis.push_back(tri_boundary(Field::F2, n, s));
    Chain z(Field::F2, n, 1);
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t g = 1; g < total; ++g) {
      z = z + basis[std::countr_zero(g)];
      auto certs = fill(z, 2);
      REQUIRE(!certs.empty());
      const bool parity = (z.size() % 2) == (binom(n - 1, 2) % 2);
      CHECK(certs[0].parity.holds == parity);
      CHECK(certs[0].deficit == (parity ? 0 : 1));
      // two fillings of deficit <= 1 except the unique one at n=4
      if (n >= 5 || !parity) {
        REQUIRE(certs.size() == 2);
        CHECK(certs[1].deficit <= 1);
      }
      check_all(z, certs);
    }
  }
}

TEST_CASE("friendliness predicate") {
  Chain z = tri_boundary(Field::F2, 4, S({1, 2, 3, 4}));
  CHECK_FALSE(is_friendly(z));
  Chain w = tri_boundary(Field::F2, 5, S({1, 2, 3, 5})) + tri_boundary(Field::F2, 5, S({2, 3, 4, 5}));
  int odd = 0, even = 0;
  for (int v : vertices_of(w.vertex_set())) (degree(v, w) % 2 ? odd : even)++;
  CHECK(is_friendly(w) == (odd > 0 && even > 0));
  CHECK_THROWS(is_friendly(tri_boundary(Field::F2, 4, S({1, 2, 3}))));
}

TEST_CASE("Q exceptional cycles need deficit 1") {
  // uniformly weighted C4 on 1-3-2-4
  Chain c4 = tri_boundary(Field::Q, 4, S({1, 2, 3})) - tri_boundary(Field::Q, 4, S({1, 2, 4}));
  REQUIRE(c4.size() == 4);
  auto certs = fill(c4, 2);
  REQUIRE(certs.size() == 2);
  check_all(c4, certs);
  CHECK(certs[0].deficit == 1);
  CHECK(certs[1].deficit == 1);
  Chain a = Chain::single(Field::Q, 4, S({1, 2, 3})) - Chain::single(Field::Q, 4, S({1, 2, 4}));
  Chain b = Chain::single(Field::Q, 4, S({2, 3, 4})) - Chain::single(Field::Q, 4, S({1, 3, 4}));
  CHECK(boundary(b) == c4);
  CHECK(((certs[0].filling == a && certs[1].filling == b) || (certs[0].filling == b && certs[1].filling == a)));
  CHECK(ref::brute_best_deficit(ref::from(c4), 4, 2, false) == 1);

  Chain c3 = tri_boundary(Field::Q, 5, S({1, 2, 3}));
  auto c3certs = fill(c3, 2);
  REQUIRE(!c3certs.empty());
  check_all(c3, c3certs);
  CHECK(c3certs[0].deficit == 1);
  CHECK(ref::brute_best_deficit(ref::from(c3), 5, 2, false) == 1);
}

TEST_CASE("Q triangle at n=4") {
  Chain z = tri_boundary(Field::Q, 4, S({1, 2, 3}));
  auto certs = fill(z, 2);
  REQUIRE(certs.size() == 2);
  check_all(z, certs);
  CHECK(certs[0].deficit == 0);
  CHECK(certs[0].filling.size() == 3);
  CHECK(certs[1].filling == Chain::single(Field::Q, 4, S({1, 2, 3})));
  CHECK(certs[1].deficit == 2);
}

TEST_CASE("Q unit six-cycle at n=6") {
  ChainBuilder b(Field::Q, 6, 1);
  for (int i = 1; i <= 5; ++i) b.add(Simplex(vertex_bit(i) | vertex_bit(i + 1)), 1);
  b.add(Simplex(vertex_bit(1) | vertex_bit(6)), -1);
  Chain z = b.build();
  REQUIRE(is_cycle(z));
  auto certs = fill(z, 2);
  REQUIRE(certs.size() == 2);
  check_all(z, certs);
  CHECK(certs[0].deficit == 0);
  CHECK(certs[0].filling.size() == 10);
  CHECK(certs[1].deficit == 0);
}

TEST_CASE("Q random cycles at n=6..8", "[property]") {
  Rng rng(23);
  for (int it = 0; it < 60; ++it) {
    const int n = 6 + it % 3;
    Chain z = random_cycle(Field::Q, n, 2, rng);
    auto certs = fill(z, 2);
    REQUIRE(certs.size() == 2);
    check_all(z, certs);
    CHECK(certs[0].deficit == 0);
    CHECK(certs[1].deficit == 0);
  }
}

TEST_CASE("Q small cycles match the brute-force optimum", "[property]") {
  Rng rng(29);
  for (int it = 0; it < 40; ++it) {
    const int n = 4 + it % 2;
    Chain z = random_cycle(Field::Q, n, 2, rng);
    auto certs = fill(z, 1);
    REQUIRE(certs.size() == 1);
    check_all(z, certs);
    CHECK(certs[0].deficit == ref::brute_best_deficit(ref::from(z), n, 2, false));
  }
}

TEST_CASE("fill rejects bad targets") {
  CHECK_THROWS_AS(fill(Chain::single(Field::F2, 4, S({1, 2})), 1), std::invalid_argument);
  FillRequest r;
  r.target = tri_boundary(Field::F2, 6, S({1, 2, 5}));
  r.universe = vertex_range(4);
  CHECK_THROWS_AS(fill(r), std::invalid_argument);
  auto empty = fill(Chain(Field::Q, 5, 1), 1);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].filling.is_zero());
}

TEST_CASE("fill on a sub-universe") {
  FillRequest r;
  r.target = tri_boundary(Field::F2, 9, S({2, 5, 7}));
  r.universe = vertex_bit(2) | vertex_bit(3) | vertex_bit(5) | vertex_bit(7) | vertex_bit(8) | vertex_bit(9);
  r.want_distinct = 2;
  auto certs = fill(r);
  REQUIRE(!certs.empty());
  for (const auto& c : certs) {
    CHECK(ref::check_filling(r.target, c.filling, vertices_of(r.universe), c.deficit).empty());
    CHECK((c.filling.vertex_set() & ~r.universe) == 0);
  }
  CHECK(certs[0].deficit == 1);  // 3 vs C(5,2) = 10
}
