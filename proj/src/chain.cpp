#include "sfill/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sfill/combinatorics.hpp"

namespace sfill {

std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  out.reserve(vertex_count(s));
  for (; s; s &= s - 1) out.push_back(lowest_vertex(s));
  return out;
}

Simplex Simplex::from_vertices(std::span<const int> vs) {
  VertexSet mask = 0;
  int prev = 0;
  for (int v : vs) {
    if (v < 1 || v > kMaxVertex) throw std::invalid_argument("vertex label out of range");
    if (v <= prev) throw std::invalid_argument("simplex vertices must be strictly increasing");
    prev = v;
    mask |= vertex_bit(v);
  }
  return Simplex(mask);
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int v : vertices()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << ')';
  return os.str();
}

const char* field_name(Field f) { return f == Field::F2 ? "F2" : "Q"; }

Field parse_field(const std::string& s) {
  if (s == "F2" || s == "f2") return Field::F2;
  if (s == "Q" || s == "q") return Field::Q;
  throw std::invalid_argument("unknown field '" + s + "'");
}

Rational reduce_coef(Field field, const Rational& c) {
  Rational r = c;
  r.canonicalize();
  if (field == Field::Q) return r;
  if (r.get_den() != 1) throw std::invalid_argument("non-integer coefficient over F2");
  return mpz_odd_p(r.get_num().get_mpz_t()) ? Rational(1) : Rational(0);
}

void ChainBuilder::add(const Chain& c, const Rational& alpha) {
  for (const Term& t : c.terms()) terms_.push_back({t.simplex, t.coef * alpha});
}

Chain ChainBuilder::build() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.simplex < b.simplex; });
  Chain out(field_, n_, dim_);
  const VertexSet allowed = vertex_range(n_);
  for (std::size_t i = 0; i < terms_.size();) {
    Simplex s = terms_[i].simplex;
    if (s.dim() != dim_) throw std::invalid_argument("simplex dimension does not match chain");
    if (s.mask() & ~allowed) throw std::invalid_argument("vertex label exceeds n");
    Rational sum = terms_[i].coef;
    std::size_t j = i + 1;
    for (; j < terms_.size() && terms_[j].simplex == s; ++j) sum += terms_[j].coef;
    sum = reduce_coef(field_, sum);
    if (sum != 0) out.terms_.push_back({s, sum});
    i = j;
  }
  terms_.clear();
  return out;
}

Chain Chain::from_terms(Field field, int n, int dim, std::vector<Term> terms) {
  ChainBuilder b(field, n, dim);
  for (auto& t : terms) b.add(t.simplex, t.coef);
  return b.build();
}

Chain Chain::single(Field field, int n, Simplex s, const Rational& c) {
  ChainBuilder b(field, n, s.dim());
  b.add(s, c);
  return b.build();
}

Chain Chain::from_support(Field field, int n, int dim, const std::vector<Simplex>& support) {
  ChainBuilder b(field, n, dim);
  for (Simplex s : support) b.add(s, 1);
  return b.build();
}

std::vector<Simplex> Chain::support() const {
  std::vector<Simplex> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(t.simplex);
  return out;
}

VertexSet Chain::vertex_set() const {
  VertexSet s = 0;
  for (const Term& t : terms_) s |= t.simplex.mask();
  return s;
}

Rational Chain::coefficient(Simplex s) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term& t, Simplex x) { return t.simplex < x; });
  if (it != terms_.end() && it->simplex == s) return it->coef;
  return 0;
}

bool Chain::contains(Simplex s) const { return coefficient(s) != 0; }

Chain Chain::with_n(int n) const {
  if (vertex_set() & ~vertex_range(n)) throw std::invalid_argument("chain uses vertices above n");
  Chain c = *this;
  c.n_ = n;
  return c;
}

bool operator==(const Chain& a, const Chain& b) {
  if (a.field_ != b.field_ || a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].simplex != b.terms_[i].simplex || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

Chain boundary(const Chain& c) {
  ChainBuilder b(c.field(), c.n(), c.dim() - 1);
  if (c.dim() < 0) return b.build();
  for (const Term& t : c.terms()) {
    for (VertexSet s = t.simplex.mask(); s; s &= s - 1) {
      int v = lowest_vertex(s);
      b.add(t.simplex.without(v), t.coef * t.simplex.incidence_sign(v));
    }
  }
  return b.build();
}

Chain star(int v, const Chain& c) {
  ChainBuilder b(c.field(), c.n(), c.dim());
  for (const Term& t : c.terms())
    if (t.simplex.contains(v)) b.add(t.simplex, t.coef);
  return b.build();
}

Chain remove_vertex(int v, const Chain& c) {
  ChainBuilder b(c.field(), c.n(), c.dim());
  for (const Term& t : c.terms())
    if (!t.simplex.contains(v)) b.add(t.simplex, t.coef);
  return b.build();
}

Chain link(int v, const Chain& c) {
  ChainBuilder b(c.field(), c.n(), c.dim() - 1);
  for (const Term& t : c.terms())
    if (t.simplex.contains(v)) b.add(t.simplex.without(v), t.coef * t.simplex.incidence_sign(v));
  return b.build();
}

Chain cone(int v, const Chain& c) {
  if (v < 1 || v > c.n()) throw std::invalid_argument("cone apex outside [n]");
  ChainBuilder b(c.field(), c.n(), c.dim() + 1);
  for (const Term& t : c.terms()) {
    if (t.simplex.contains(v)) throw std::invalid_argument("cone apex is a vertex of the chain");
    Simplex up = t.simplex.with(v);
    b.add(up, t.coef * up.incidence_sign(v));
  }
  return b.build();
}

Chain combine(const Chain& a, const Chain& b, const Rational& alpha, const Rational& beta) {
  if (a.field() != b.field()) throw std::invalid_argument("combine: field mismatch");
  if (a.dim() != b.dim()) throw std::invalid_argument("combine: dimension mismatch");
  ChainBuilder out(a.field(), std::max(a.n(), b.n()), a.dim());
  out.add(a, alpha);
  out.add(b, beta);
  return out.build();
}

Chain scale(const Chain& c, const Rational& alpha) {
  ChainBuilder out(c.field(), c.n(), c.dim());
  out.add(c, alpha);
  return out.build();
}

int degree(int v, const Chain& c) {
  int k = 0;
  for (const Term& t : c.terms()) k += t.simplex.contains(v);
  return k;
}

bool is_cycle(const Chain& c) { return c.dim() <= -1 || boundary(c).is_zero(); }

std::int64_t deficit(const Chain& f, int universe_size) {
  return hypertree_size(universe_size, f.dim()) - static_cast<std::int64_t>(f.size());
}

}  // namespace sfill
