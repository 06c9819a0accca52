#pragma once

#include <stdexcept>

#include "forge/algebra.hpp"

namespace forge {

// Raised when a map claimed to descend to quotients fails the well-definedness
// check, i.e. it does not send relations to relations.
struct coherence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A chain V_1 (x)_A V_2 (x)_A ... (x)_A V_n of balanced tensor factors over a
// single algebra of dimension adim. Junction t (0-based, between V_t+1 and
// V_t+2 in 1-based terms) carries a right action on the left factor and a left
// action on the right factor; relations are (v a) (x) w - v (x) (a w) at each
// junction, tensored with identities elsewhere.
struct ChainSpec {
  Field field = Field::rationals();
  std::vector<std::size_t> dims;
  std::size_t adim = 0;
  std::vector<Matrix> ract;  // ract[t]: V_t (x) A -> V_t
  std::vector<Matrix> lact;  // lact[t]: A (x) V_{t+1} -> V_{t+1}
};

struct ChainTensor {
  std::vector<std::size_t> dims;
  QuotientSpace q;

  std::size_t ambient() const { return q.ambient; }
  std::size_t dim() const { return q.dim; }
  // Class of a pure tensor given by per-factor coordinate vectors.
  Vec pure(const Field& f, const std::vector<Vec>& parts) const;
};

ChainTensor chain_quotient(const ChainSpec& spec);

// The map on quotients induced by f: ambient(from) -> ambient(to), namely
// proj_to . f . sect_from. Throws coherence_error unless f genuinely descends,
// i.e. proj_to . f agrees on every representative of each class.
Matrix induced_on_quotients(const Matrix& f, const QuotientSpace& from, const QuotientSpace& to);

// k^n presented as the quotient by no relations (projection = section = id).
QuotientSpace identity_quotient(const Field& f, std::size_t n);

// Quotients of k^n (x) Q and Q (x) k^n inherited coordinatewise from Q.
QuotientSpace tensor_quotient_left(const Field& f, std::size_t n, const QuotientSpace& q);
QuotientSpace tensor_quotient_right(const Field& f, const QuotientSpace& q, std::size_t n);

}  // namespace forge
