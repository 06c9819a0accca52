#include "forge/coalgebra.hpp"

namespace forge {

Coalgebra scalar_coalgebra(const Field& f) {
  return {f, 1, Matrix::identity(f, 1), Matrix::identity(f, 1)};
}

Coalgebra grouplike_coalgebra(const Field& f, std::size_t n) {
  Coalgebra c{f, n, Matrix(f, n * n, n), Matrix(f, 1, n)};
  for (std::size_t i = 0; i < n; ++i) {
    c.comul.set(tensor_index(i, i, n), i, f.one());
    c.counit.set(0, i, f.one());
  }
  return c;
}

Coalgebra matrix_coalgebra(const Field& f, std::size_t n) {
  std::size_t d = n * n;
  Coalgebra c{f, d, Matrix(f, d * d, d), Matrix(f, 1, d)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        c.comul.set(tensor_index(i * n + k, k * n + j, d), i * n + j, f.one());
      if (i == j) c.counit.set(0, i * n + j, f.one());
    }
  return c;
}

std::vector<std::string> check_coalgebra(const Coalgebra& c) {
  const Field& f = c.field;
  if (c.comul.rows() != c.dim * c.dim || c.comul.cols() != c.dim || c.counit.rows() != 1 ||
      c.counit.cols() != c.dim)
    return {"shape"};
  std::vector<std::string> bad;
  Matrix id = Matrix::identity(f, c.dim);
  if (c.comul.kron(id) * c.comul != id.kron(c.comul) * c.comul)
    bad.push_back("coassociativity");
  if (c.counit.kron(id) * c.comul != id) bad.push_back("counit-left");
  if (id.kron(c.counit) * c.comul != id) bad.push_back("counit-right");
  return bad;
}

bool verify_grouplike(const Coalgebra& c, const Vec& x) {
  const Field& f = c.field;
  return eq_vec(f, c.comul.apply(x), tensor_vec(f, x, x)) &&
         c.counit.apply(x) == Vec{f.one()};
}

std::optional<Cointegral> find_cointegral(const Coalgebra& c) {
  const Field& f = c.field;
  std::size_t d = c.dim;
  Matrix id = Matrix::identity(f, d);

  // delta . comul = counit, a linear condition on the 1 x d^2 unknown.
  Matrix counit_sys = linearize(f, 1, d * d, [&](const Matrix& delta) { return delta * c.comul; });

  // Colinearity: (id (x) delta)(comul (x) id) = (delta (x) id)(id (x) comul).
  Matrix colin_sys = linearize(f, 1, d * d, [&](const Matrix& delta) {
    return id.kron(delta) * c.comul.kron(id) - delta.kron(id) * id.kron(c.comul);
  });

  auto x = solve_affine({{counit_sys, flatten(c.counit)},
                         {colin_sys, zero_vec(colin_sys.rows())}});
  if (!x) return std::nullopt;
  return Cointegral{unflatten(f, 1, d * d, *x)};
}

std::vector<std::string> check_cointegral(const Coalgebra& c, const Matrix& delta) {
  if (delta.rows() != 1 || delta.cols() != c.dim * c.dim) return {"shape"};
  Matrix id = Matrix::identity(c.field, c.dim);
  std::vector<std::string> bad;
  if (delta * c.comul != c.counit) bad.push_back("counit");
  if (id.kron(delta) * c.comul.kron(id) != delta.kron(id) * id.kron(c.comul))
    bad.push_back("colinearity");
  return bad;
}

}  // namespace forge
