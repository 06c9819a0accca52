#include "forge/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace forge {

namespace {
void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}
}  // namespace

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Matrix Matrix::from_int_rows(Field f, std::size_t rows, std::size_t cols,
                             std::initializer_list<long> entries) {
  require(entries.size() == rows * cols, "from_int_rows: wrong entry count");
  Matrix m(f, rows, cols);
  std::size_t k = 0;
  for (long e : entries) {
    m.a_[k] = f.from_int(e);
    ++k;
  }
  return m;
}

Matrix Matrix::column(Field f, const Vec& v) {
  Matrix m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require(field_ == rhs.field_, "matrix product: field mismatch");
  require(cols_ == rhs.rows_, "matrix product: dimension mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = a_[i * cols_ + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs.a_[k * rhs.cols_ + j];
        if (b == 0) continue;
        out.a_[i * out.cols_ + j] = field_.add(out.a_[i * out.cols_ + j], aik * b);
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require(field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix sum: shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = field_.add(a_[k], rhs.a_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require(field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix difference: shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = field_.sub(a_[k], rhs.a_[k]);
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = field_.mul(a_[k], c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.a_[j * rows_ + i] = a_[i * cols_ + j];
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != rhs.a_[k]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const Scalar& x : a_)
    if (x != 0) return false;
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  require(v.size() == cols_, "apply: dimension mismatch");
  Vec out(rows_, Scalar(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc(0);
    for (std::size_t j = 0; j < cols_; ++j)
      if (a_[i * cols_ + j] != 0 && v[j] != 0) acc += a_[i * cols_ + j] * v[j];
    out[i] = field_.reduce(acc);
  }
  return out;
}

Vec Matrix::row_vec(std::size_t i) const {
  Vec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = a_[i * cols_ + j];
  return out;
}

Vec Matrix::col_vec(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = a_[i * cols_ + j];
  return out;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  require(v.size() == rows_, "set_col: dimension mismatch");
  for (std::size_t i = 0; i < rows_; ++i) a_[i * cols_ + j] = field_.reduce(v[i]);
}

Matrix Matrix::kron(const Matrix& rhs) const {
  require(field_ == rhs.field_, "kron: field mismatch");
  Matrix out(field_, rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& aij = a_[i * cols_ + j];
      if (aij == 0) continue;
      for (std::size_t p = 0; p < rhs.rows_; ++p)
        for (std::size_t q = 0; q < rhs.cols_; ++q) {
          const Scalar& b = rhs.a_[p * rhs.cols_ + q];
          if (b == 0) continue;
          out.set(i * rhs.rows_ + p, j * rhs.cols_ + q, aij * b);
        }
    }
  return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
  require(field_ == rhs.field_ && rows_ == rhs.rows_, "hstack: shape mismatch");
  Matrix out(field_, rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.a_[i * out.cols_ + j] = a_[i * cols_ + j];
    for (std::size_t j = 0; j < rhs.cols_; ++j) out.a_[i * out.cols_ + cols_ + j] = rhs.a_[i * rhs.cols_ + j];
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
  require(field_ == rhs.field_ && cols_ == rhs.cols_, "vstack: shape mismatch");
  Matrix out(field_, rows_ + rhs.rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k];
  for (std::size_t k = 0; k < rhs.a_.size(); ++k) out.a_[rows_ * cols_ + k] = rhs.a_[k];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << field_.to_string(a_[i * cols_ + j]);
    }
    os << "]\n";
  }
  return os.str();
}

std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t dim2) { return i * dim2 + j; }

Matrix flip(const Field& f, std::size_t d1, std::size_t d2) {
  Matrix m(f, d1 * d2, d1 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j)
      m.set(tensor_index(j, i, d1), tensor_index(i, j, d2), f.one());
  return m;
}

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Scalar(0));
  v[i] = 1;
  return v;
}

Vec tensor_vec(const Field& f, const Vec& u, const Vec& v) {
  Vec out(u.size() * v.size(), Scalar(0));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) out[tensor_index(i, j, v.size())] = f.mul(u[i], v[j]);
  }
  return out;
}

Vec add_vec(const Field& f, const Vec& u, const Vec& v) {
  require(u.size() == v.size(), "add_vec: size mismatch");
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = f.add(u[i], v[i]);
  return out;
}

Vec sub_vec(const Field& f, const Vec& u, const Vec& v) {
  require(u.size() == v.size(), "sub_vec: size mismatch");
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = f.sub(u[i], v[i]);
  return out;
}

Vec scale_vec(const Field& f, const Scalar& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(c, v[i]);
  return out;
}

bool is_zero_vec(const Field& f, const Vec& v) {
  for (const Scalar& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

bool eq_vec(const Field& f, const Vec& u, const Vec& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (f.reduce(u[i]) != f.reduce(v[i])) return false;
  return true;
}

}  // namespace forge
