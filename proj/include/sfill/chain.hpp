#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "sfill/simplex.hpp"

namespace sfill {

enum class Field { F2, Q };

using Rational = mpq_class;

const char* field_name(Field f);
Field parse_field(const std::string& s);

struct Term {
  Simplex simplex;
  Rational coef;
};

// Finite formal sum of d-simplices of K_n with nonzero coefficients, kept in
// colex order. Over F2 every stored coefficient is 1.
class Chain {
 public:
  Chain() = default;
  Chain(Field field, int n, int dim) : field_(field), n_(n), dim_(dim) {}

  // Sums repeated simplices and drops zeros. Throws if a simplex has the wrong
  // dimension or a vertex above n.
  static Chain from_terms(Field field, int n, int dim, std::vector<Term> terms);
  static Chain single(Field field, int n, Simplex s, const Rational& c = 1);
  // Unit coefficient on each simplex (all of the same dimension).
  static Chain from_support(Field field, int n, int dim,
                            const std::vector<Simplex>& support);

  Field field() const { return field_; }
  int n() const { return n_; }
  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Simplex> support() const;
  VertexSet vertex_set() const;
  Rational coefficient(Simplex s) const;
  bool contains(Simplex s) const;

  Chain with_n(int n) const;

  friend bool operator==(const Chain& a, const Chain& b);

 private:
  friend class ChainBuilder;
  Field field_ = Field::F2;
  int n_ = 0;
  int dim_ = 0;
  std::vector<Term> terms_;
};

// Accumulates terms, then normalizes once.
class ChainBuilder {
 public:
  ChainBuilder(Field field, int n, int dim) : field_(field), n_(n), dim_(dim) {}
  void add(Simplex s, const Rational& c) { terms_.push_back({s, c}); }
  void add(const Chain& c, const Rational& alpha);
  Chain build();

 private:
  Field field_;
  int n_;
  int dim_;
  std::vector<Term> terms_;
};

Chain boundary(const Chain& c);
Chain star(int v, const Chain& c);
Chain link(int v, const Chain& c);
Chain cone(int v, const Chain& c);
// Terms of c not containing v.
Chain remove_vertex(int v, const Chain& c);
Chain combine(const Chain& a, const Chain& b, const Rational& alpha,
              const Rational& beta);
Chain scale(const Chain& c, const Rational& alpha);
inline Chain operator+(const Chain& a, const Chain& b) { return combine(a, b, 1, 1); }
inline Chain operator-(const Chain& a, const Chain& b) { return combine(a, b, 1, -1); }

// Number of simplices of c containing v.
int degree(int v, const Chain& c);
bool is_cycle(const Chain& c);

// C(m-1, d) - |supp F| for a d-chain F, with m the universe size.
std::int64_t deficit(const Chain& f, int universe_size);
inline std::int64_t deficit(const Chain& f) { return deficit(f, f.n()); }

// Reduce a rational into the field (F2: parity of an integer).
Rational reduce_coef(Field field, const Rational& c);

}  // namespace sfill
