#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "sfill/chain.hpp"

namespace sfill {

// Incremental rank of boundary vectors of d-simplices of K_n, in coordinates
// indexed by the colex enumeration of (d-1)-faces. Values are persistent:
// extend() returns a new context and leaves this one untouched.
class RankContext {
 public:
  RankContext(Field field, int n, int d);

  // Returns the extended context and whether the rank grew.
  std::pair<RankContext, bool> extend(Simplex s) const;
  bool independent_of(Simplex s) const;
  int rank() const;
  Field field() const { return field_; }
  int n() const { return n_; }
  int d() const { return d_; }

  struct State;

 private:
  RankContext(Field f, int n, int d, std::shared_ptr<const State> st)
      : field_(f), n_(n), d_(d), state_(std::move(st)) {}
  Field field_;
  int n_;
  int d_;
  std::shared_ptr<const State> state_;
};

// Rank of {boundary(sigma)} over the field. Q uses elimination modulo a large
// prime first and falls back to exact rationals when that is not full rank.
int rank_of(Field field, int n, const std::vector<Simplex>& simplices);
bool is_acyclic(Field field, int n, const std::vector<Simplex>& simplices);
// Chain is a nonzero cycle whose support has rank |supp| - 1.
bool is_simple_cycle(const Chain& c);

// Exact rank of an explicit rational matrix (rows).
int exact_rank(std::vector<std::vector<Rational>> rows);

// A d-hypertree of the complete complex on a universe U: |T| = C(|U|-1, d)
// facets whose boundaries are independent. The constructor throws
// std::invalid_argument otherwise.
class HypertreeBasis {
 public:
  HypertreeBasis(Field field, VertexSet universe, int d, std::vector<Simplex> facets);
  // Check only; never throws.
  static bool is_hypertree(Field field, VertexSet universe, int d,
                           const std::vector<Simplex>& facets);

  const std::vector<Simplex>& facets() const { return facets_; }
  VertexSet universe() const { return universe_; }
  int d() const { return d_; }
  Field field() const { return field_; }

  // The unique chain supported on the hypertree with boundary z. Precondition:
  // z is a (d-1)-cycle on the universe.
  Chain fill(const Chain& z) const;

 private:
  Field field_;
  VertexSet universe_;
  int d_;
  std::vector<Simplex> facets_;
  std::vector<Simplex> coords_;  // (d-1)-faces avoiding the smallest vertex
  std::vector<std::vector<Rational>> inverse_;
};

Chain fill_on_hypertree(const HypertreeBasis& t, const Chain& z);

}  // namespace sfill
