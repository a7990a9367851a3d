#include "homsplit/generators.hpp"

#include "homsplit/axioms.hpp"
#include "homsplit/morphisms.hpp"

namespace homsplit::gen {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational small_rational(Rng& rng, int lo, int hi) { return Rational(uniform(rng, lo, hi)); }

RatMatrix random_matrix(Rng& rng, int rows, int cols, int lo, int hi, double density) {
  std::bernoulli_distribution keep(density);
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = keep(rng) ? small_rational(rng, lo, hi) : Rational(0);
  return m;
}

RatMatrix random_invertible(Rng& rng, int n, int lo, int hi) {
  while (true) {
    RatMatrix m = random_matrix(rng, n, n, lo, hi);
    if (!determinant(m).is_zero()) return m;
  }
}

BasicAlgebra<Rational> nilpotent_algebra(Rng& rng, Kind kind, int dim) {
  auto b = zero_algebra<Rational>(kind, dim, random_matrix(rng, dim, dim));
  if (dim < 2) return b;
  const int top = uniform(rng, 1, dim - 1);
  std::bernoulli_distribution keep(0.5);
  for (auto& [name, op] : b.ops)
    for (int i = 1; i <= top; ++i)
      for (int j = 1; j <= top; ++j)
        for (int k = top + 1; k <= dim; ++k)
          if (keep(rng)) op.set(i, j, k, small_rational(rng));
  return b;
}

BasicAlgebra<Rational> sparse_algebra(Rng& rng, Kind kind, int dim, int max_entries) {
  RatMatrix twist;
  switch (uniform(rng, 0, 3)) {
  case 0: twist = RatMatrix::Identity(dim, dim); break;
  case 1: twist = RatMatrix::Zero(dim, dim); break;
  case 2:
    twist = RatMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) twist(i, i) = small_rational(rng, -1, 1);
    break;
  default: twist = random_matrix(rng, dim, dim, -1, 1, 0.4); break;
  }
  auto b = zero_algebra<Rational>(kind, dim, twist);
  const int n = uniform(rng, 1, max_entries);
  const auto& names = required_ops(kind);
  for (int e = 0; e < n; ++e) {
    auto& op = b.op(names[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(names.size()) - 1))]);
    op.set(uniform(rng, 1, dim), uniform(rng, 1, dim), uniform(rng, 1, dim), Rational(uniform(rng, 0, 1) ? 1 : -1));
  }
  return b;
}

BasicAlgebra<Rational> random_valid_algebra(Rng& rng, Kind kind, int dim, int attempts) {
  std::optional<BasicAlgebra<Rational>> found;
  for (int a = 0; a < attempts && !found; ++a) {
    auto b = sparse_algebra(rng, kind, dim);
    if (algebra_holds(b)) found = std::move(b);
  }
  if (!found) found = nilpotent_algebra(rng, kind, dim);
  return push_forward(*found, random_invertible(rng, dim));
}

} // namespace homsplit::gen
