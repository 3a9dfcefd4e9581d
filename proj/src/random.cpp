#include "sfill/random.hpp"

#include <stdexcept>

namespace sfill {

namespace {

Simplex random_simplex(int n, int dim, Rng& rng) {
  VertexSet m = 0;
  std::uniform_int_distribution<int> pick(1, n);
  while (vertex_count(m) < dim + 1) m |= vertex_bit(pick(rng));
  return Simplex(m);
}

Rational random_coef(Field field, Rng& rng) {
  if (field == Field::F2) return 1;
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  int p = 0;
  while (p == 0) p = num(rng);
  Rational q(p, den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

Chain random_chain(Field field, int n, int dim, int terms, Rng& rng) {
  if (dim < 0 || dim + 1 > n) throw std::invalid_argument("random_chain: need 0 <= dim < n");
  ChainBuilder b(field, n, dim);
  for (int i = 0; i < terms; ++i) b.add(random_simplex(n, dim, rng), random_coef(field, rng));
  return b.build();
}

Chain random_cycle(Field field, int n, int d, Rng& rng) {
  if (d < 1 || d + 1 > n) throw std::invalid_argument("random_cycle: need 1 <= d < n");
  std::uniform_int_distribution<int> count(1, 6);
  for (;;) {
    Chain z = boundary(random_chain(field, n, d, count(rng), rng));
    if (!z.is_zero()) return z;
  }
}

}  // namespace sfill
