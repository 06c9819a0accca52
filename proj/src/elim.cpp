#include "forge/elim.hpp"

#include <stdexcept>

namespace forge {

Echelon rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t piv = row;
    while (piv < r.rows() && f.is_zero(r.at(piv, col))) ++piv;
    if (piv == r.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < r.cols(); ++j) {
        Scalar t = r.at(row, j);
        r.set(row, j, r.at(piv, j));
        r.set(piv, j, t);
      }
    Scalar inv = f.inv(r.at(row, col));
    for (std::size_t j = col; j < r.cols(); ++j) r.set(row, j, f.mul(inv, r.at(row, j)));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || f.is_zero(r.at(i, col))) continue;
      Scalar c = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return {r, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::size_t nullity = m.cols() - e.pivots.size();
  Matrix out(f, m.cols(), nullity);
  std::size_t k = 0;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m.cols(), Scalar(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = f.neg(e.r.at(i, free_col));
    out.set_col(k++, v);
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  const Field& f = m.field();
  Echelon e = rref(m.hstack(Matrix::column(f, b)));
  // Inconsistent iff some pivot lands in the appended column.
  for (std::size_t p : e.pivots)
    if (p == m.cols()) return std::nullopt;
  Vec x(m.cols(), Scalar(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.r.at(i, m.cols());
  return x;
}

std::optional<Vec> solve_affine(const std::vector<std::pair<Matrix, Vec>>& constraints) {
  if (constraints.empty()) throw std::invalid_argument("solve_affine: no constraints");
  Matrix big = constraints[0].first;
  Vec rhs = constraints[0].second;
  for (std::size_t k = 1; k < constraints.size(); ++k) {
    big = big.vstack(constraints[k].first);
    rhs.insert(rhs.end(), constraints[k].second.begin(), constraints[k].second.end());
  }
  return solve(big, rhs);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Field& f = m.field();
  Echelon e = rref(m.hstack(Matrix::identity(f, m.rows())));
  if (e.pivots.size() != m.rows()) return std::nullopt;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (e.pivots[i] != i) return std::nullopt;
  Matrix inv(f, m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) inv.set(i, j, e.r.at(i, m.cols() + j));
  return inv;
}

QuotientSpace quotient_space(const Field& f, std::size_t ambient, const Matrix& relations) {
  if (relations.cols() > 0 && relations.rows() != ambient)
    throw std::invalid_argument("quotient_space: relations live in the wrong space");
  // Row-reduce the transpose to get an echelon basis of the relation span,
  // then complete with the standard vectors at non-pivot coordinates.
  Echelon e = rref(relations.transpose());
  std::size_t r = e.pivots.size();
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::size_t q = ambient - r;

  Matrix basis(f, ambient, ambient);
  for (std::size_t i = 0; i < r; ++i) basis.set_col(i, e.r.row_vec(i));
  std::size_t k = r;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < ambient; ++j) {
    if (is_pivot[j]) continue;
    complement.push_back(j);
    basis.set_col(k++, unit_vec(ambient, j));
  }
  auto binv = inverse(basis);
  if (!binv) throw std::logic_error("quotient_space: completion failed");  // cannot happen

  QuotientSpace out;
  out.ambient = ambient;
  out.dim = q;
  out.projection = Matrix(f, q, ambient);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < ambient; ++j) out.projection.set(i, j, binv->at(r + i, j));
  out.section = Matrix(f, ambient, q);
  for (std::size_t i = 0; i < q; ++i) out.section.set_col(i, unit_vec(ambient, complement[i]));
  return out;
}

Matrix linearize(const Field& f, std::size_t rows_in, std::size_t cols_in,
                 const std::function<Matrix(const Matrix&)>& phi) {
  Matrix probe(f, rows_in, cols_in);
  Matrix first = phi(probe);  // image shape of zero fixes codomain dims
  Matrix out(f, first.rows() * first.cols(), rows_in * cols_in);
  for (std::size_t i = 0; i < rows_in; ++i)
    for (std::size_t j = 0; j < cols_in; ++j) {
      Matrix e(f, rows_in, cols_in);
      e.set(i, j, f.one());
      Matrix img = phi(e) - first;  // subtract phi(0) so affine misuse still linearizes the linear part
      out.set_col(i * cols_in + j, flatten(img));
    }
  return out;
}

Vec flatten(const Matrix& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, v[i * cols + j]);
  return m;
}

bool span_contains(const Matrix& space, const Vec& v) {
  return solve(space, v).has_value();
}

bool span_contained(const Matrix& inner, const Matrix& outer) {
  for (std::size_t j = 0; j < inner.cols(); ++j)
    if (!span_contains(outer, inner.col_vec(j))) return false;
  return true;
}

bool span_equal(const Matrix& a, const Matrix& b) {
  return span_contained(a, b) && span_contained(b, a);
}

}  // namespace forge
