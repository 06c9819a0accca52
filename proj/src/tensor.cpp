#include "forge/tensor.hpp"

namespace forge {

Vec ChainTensor::pure(const Field& f, const std::vector<Vec>& parts) const {
  if (parts.size() != dims.size()) throw std::invalid_argument("pure: wrong factor count");
  Vec v = {f.one()};
  for (std::size_t t = 0; t < parts.size(); ++t) {
    if (parts[t].size() != dims[t]) throw std::invalid_argument("pure: factor dim mismatch");
    v = tensor_vec(f, v, parts[t]);
  }
  return q.projection.apply(v);
}

ChainTensor chain_quotient(const ChainSpec& spec) {
  const Field& f = spec.field;
  std::size_t n = spec.dims.size();
  if (n == 0) throw std::invalid_argument("chain_quotient: empty chain");
  if (spec.ract.size() != n - 1 || spec.lact.size() != n - 1)
    throw std::invalid_argument("chain_quotient: need one action pair per junction");

  std::size_t ambient = 1;
  for (std::size_t d : spec.dims) ambient *= d;

  Matrix rel(f, ambient, 0);
  for (std::size_t t = 0; t + 1 < n; ++t) {
    std::size_t pre = 1, suf = 1;
    for (std::size_t i = 0; i < t; ++i) pre *= spec.dims[i];
    for (std::size_t i = t + 2; i < n; ++i) suf *= spec.dims[i];
    // (v a) (x) w - v (x) (a w) on the junction factors, identity elsewhere.
    Matrix mid = spec.ract[t].kron(Matrix::identity(f, spec.dims[t + 1])) -
                 Matrix::identity(f, spec.dims[t]).kron(spec.lact[t]);
    Matrix block = Matrix::identity(f, pre).kron(mid).kron(Matrix::identity(f, suf));
    rel = rel.hstack(block);
  }

  ChainTensor out;
  out.dims = spec.dims;
  out.q = quotient_space(f, ambient, rel);
  return out;
}

QuotientSpace identity_quotient(const Field& f, std::size_t n) {
  return {n, n, Matrix::identity(f, n), Matrix::identity(f, n)};
}

QuotientSpace tensor_quotient_left(const Field& f, std::size_t n, const QuotientSpace& q) {
  Matrix id = Matrix::identity(f, n);
  return {n * q.ambient, n * q.dim, id.kron(q.projection), id.kron(q.section)};
}

QuotientSpace tensor_quotient_right(const Field& f, const QuotientSpace& q, std::size_t n) {
  Matrix id = Matrix::identity(f, n);
  return {q.ambient * n, q.dim * n, q.projection.kron(id), q.section.kron(id)};
}

Matrix induced_on_quotients(const Matrix& f, const QuotientSpace& from, const QuotientSpace& to) {
  if (f.cols() != from.ambient || f.rows() != to.ambient)
    throw std::invalid_argument("induced_on_quotients: shape mismatch");
  Matrix down = to.projection * f;
  Matrix induced = down * from.section;
  if (induced * from.projection != down)
    throw coherence_error("map does not descend to the quotients");
  return induced;
}

}  // namespace forge
