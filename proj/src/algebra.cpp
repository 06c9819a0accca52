#include "forge/algebra.hpp"

#include <stdexcept>

namespace forge {

Matrix Algebra::left_mult(const Vec& a) const {
  // x -> a x is mul restricted along the first slot.
  return mul * Matrix::column(field, a).kron(Matrix::identity(field, dim));
}

Matrix Algebra::right_mult(const Vec& a) const {
  return mul * Matrix::identity(field, dim).kron(Matrix::column(field, a));
}

Algebra scalar_algebra(const Field& f) {
  Algebra a;
  a.field = f;
  a.dim = 1;
  a.mul = Matrix::identity(f, 1);
  a.unit = {f.one()};
  return a;
}

Matrix AModule::action_of(const Vec& a) const {
  Matrix ca = Matrix::column(algebra.field, a);
  if (side == Side::right) return action * Matrix::identity(algebra.field, dim).kron(ca);
  return action * ca.kron(Matrix::identity(algebra.field, dim));
}

Vec AModule::act_right(const Vec& m, const Vec& a) const {
  if (side != Side::right) throw std::logic_error("act_right on a left module");
  return action.apply(tensor_vec(algebra.field, m, a));
}

Vec AModule::act_left(const Vec& a, const Vec& m) const {
  if (side != Side::left) throw std::logic_error("act_left on a right module");
  return action.apply(tensor_vec(algebra.field, a, m));
}

AModule regular_right_module(const Algebra& a) { return {a, Side::right, a.dim, a.mul}; }
AModule regular_left_module(const Algebra& a) { return {a, Side::left, a.dim, a.mul}; }

std::vector<std::string> check_algebra(const Algebra& a) {
  std::vector<std::string> bad;
  const Field& f = a.field;
  if (a.mul.rows() != a.dim || a.mul.cols() != a.dim * a.dim || a.unit.size() != a.dim)
    return {"shape"};
  Matrix id = Matrix::identity(f, a.dim);
  Matrix u = Matrix::column(f, a.unit);
  if (a.mul * a.mul.kron(id) != a.mul * id.kron(a.mul)) bad.push_back("associativity");
  if (a.mul * u.kron(id) != id) bad.push_back("unit-left");
  if (a.mul * id.kron(u) != id) bad.push_back("unit-right");
  return bad;
}

std::vector<std::string> check_module(const AModule& m) {
  std::vector<std::string> bad;
  const Field& f = m.algebra.field;
  std::size_t na = m.algebra.dim;
  Matrix id_m = Matrix::identity(f, m.dim);
  Matrix id_a = Matrix::identity(f, na);
  Matrix u = Matrix::column(f, m.algebra.unit);
  if (m.side == Side::right) {
    if (m.action.rows() != m.dim || m.action.cols() != m.dim * na) return {"shape"};
    if (m.action * m.action.kron(id_a) != m.action * id_m.kron(m.algebra.mul))
      bad.push_back("action-associativity");
    if (m.action * id_m.kron(u) != id_m) bad.push_back("action-unit");
  } else {
    if (m.action.rows() != m.dim || m.action.cols() != na * m.dim) return {"shape"};
    if (m.action * id_a.kron(m.action) != m.action * m.algebra.mul.kron(id_m))
      bad.push_back("action-associativity");
    if (m.action * u.kron(id_m) != id_m) bad.push_back("action-unit");
  }
  return bad;
}

std::vector<Matrix> module_hom(const AModule& m, const AModule& n) {
  if (m.side != n.side) throw std::invalid_argument("module_hom: side mismatch");
  if (!(m.algebra.field == n.algebra.field) || m.algebra.mul != n.algebra.mul)
    throw std::invalid_argument("module_hom: different algebras");
  const Field& f = m.algebra.field;
  Matrix id_a = Matrix::identity(f, m.algebra.dim);
  auto defect = [&](const Matrix& fmat) {
    if (m.side == Side::right) return n.action * fmat.kron(id_a) - fmat * m.action;
    return n.action * id_a.kron(fmat) - fmat * m.action;
  };
  Matrix constraints = linearize(f, n.dim, m.dim, defect);
  Matrix ker = kernel_basis(constraints);
  std::vector<Matrix> basis;
  basis.reserve(ker.cols());
  for (std::size_t j = 0; j < ker.cols(); ++j)
    basis.push_back(unflatten(f, n.dim, m.dim, ker.col_vec(j)));
  return basis;
}

BalancedTensor tensor_over_A(const AModule& m, const AModule& n) {
  if (m.side != Side::right || n.side != Side::left)
    throw std::invalid_argument("tensor_over_A: needs a right and a left module");
  if (!(m.algebra.field == n.algebra.field) || m.algebra.mul != n.algebra.mul)
    throw std::invalid_argument("tensor_over_A: different algebras");
  const Field& f = m.algebra.field;
  std::size_t na = m.algebra.dim;
  Matrix rel(f, m.dim * n.dim, m.dim * na * n.dim);
  std::size_t col = 0;
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t j = 0; j < n.dim; ++j) {
        Vec ma = m.act_right(unit_vec(m.dim, i), unit_vec(na, k));
        Vec an = n.act_left(unit_vec(na, k), unit_vec(n.dim, j));
        Vec v = sub_vec(f, tensor_vec(f, ma, unit_vec(n.dim, j)),
                        tensor_vec(f, unit_vec(m.dim, i), an));
        rel.set_col(col++, v);
      }
  BalancedTensor t;
  t.left_dim = m.dim;
  t.right_dim = n.dim;
  t.q = quotient_space(f, m.dim * n.dim, rel);
  return t;
}

std::optional<DualBasis> find_dual_basis(const AModule& m) {
  const Field& f = m.algebra.field;
  AModule reg = m.side == Side::right ? regular_right_module(m.algebra)
                                      : regular_left_module(m.algebra);
  std::vector<Matrix> mstar = module_hom(m, reg);
  if (m.dim > 0 && mstar.empty()) return std::nullopt;

  // Solve sum_{i,b} x_{ib} (m_i . xi_b(-)) = id_M for scalars x_{ib}; on the
  // left side the scalar lands on the other factor, x = sum xi_b(x) . m_i.
  std::size_t vars = m.dim * mstar.size();
  Matrix sys(f, m.dim * m.dim, vars);
  std::size_t col = 0;
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t b = 0; b < mstar.size(); ++b) {
      Matrix e = Matrix::column(f, unit_vec(m.dim, i));
      Matrix op = m.side == Side::right ? m.action * e.kron(mstar[b])
                                        : m.action * mstar[b].kron(e);
      sys.set_col(col++, flatten(op));
    }
  auto x = solve(sys, flatten(Matrix::identity(f, m.dim)));
  if (!x) return std::nullopt;

  DualBasis db;
  for (std::size_t i = 0; i < m.dim; ++i) {
    Matrix xi(f, m.algebra.dim, m.dim);
    for (std::size_t b = 0; b < mstar.size(); ++b) {
      const Scalar& c = (*x)[i * mstar.size() + b];
      if (c != 0) xi = xi + mstar[b].scaled(c);
    }
    db.elements.push_back(unit_vec(m.dim, i));
    db.functionals.push_back(xi);
  }
  return db;
}

}  // namespace forge
