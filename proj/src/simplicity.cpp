#include <random>
#include <stdexcept>

#include "forge/comodule.hpp"

namespace forge {

namespace {

// Smallest subspace containing seed and stable under every operator, grown
// breadth-first; stops early once it fills the whole space.
Matrix spin(const std::vector<Matrix>& ops, const Field& f, const Vec& seed, std::size_t full) {
  Matrix basis = Matrix::column(f, seed);
  std::vector<Vec> frontier{seed};
  while (!frontier.empty() && basis.cols() < full) {
    Vec u = frontier.back();
    frontier.pop_back();
    for (const Matrix& op : ops) {
      Vec w = op.apply(u);
      if (is_zero_vec(f, w) || span_contains(basis, w)) continue;
      basis = basis.hstack(Matrix::column(f, w));
      frontier.push_back(w);
      if (basis.cols() == full) break;
    }
  }
  return basis;
}

}  // namespace

bool is_subcomodule(const Comodule& m, const Matrix& v) {
  if (m.side != CoSide::right)
    throw std::invalid_argument("is_subcomodule: right comodules only");
  const Field& f = m.coring.base.field;
  Matrix ia = Matrix::identity(f, m.coring.base.dim);
  Matrix ic = Matrix::identity(f, m.coring.dim);
  return span_contained(m.action * v.kron(ia), v) &&
         span_contained(m.coaction * v, m.mc.q.projection * v.kron(ic));
}

SimplicityVerdict is_simple(const Comodule& m, unsigned long seed, std::size_t point_budget) {
  using Kind = SimplicityVerdict::Kind;
  if (m.side != CoSide::right)
    throw std::invalid_argument("is_simple: right comodules only");
  const Coring& c = m.coring;
  const Field& f = c.base.field;
  if (m.dim == 0) return {Kind::unsupported, std::nullopt, "zero"};
  if (m.dim == 1) return {Kind::simple, std::nullopt, "dimension-one"};

  // Operators whose invariant subspaces contain every subcomodule: the
  // A-action together with m -> m_0 . g(m_1) for left A-linear g: C -> A.
  // Invariance also implies subcomodule when C has a left dual basis, so a
  // proper invariant subspace is only trusted after direct verification.
  Matrix im = Matrix::identity(f, m.dim);
  Matrix rl = m.coaction_lift();
  std::vector<Matrix> ops;
  for (const Matrix& g : module_hom(c.left_module(), regular_left_module(c.base)))
    ops.push_back(m.action * im.kron(g) * rl);
  for (std::size_t k = 0; k < c.base.dim; ++k)
    ops.push_back(m.action * im.kron(Matrix::column(f, unit_vec(c.base.dim, k))));

  bool faithful = find_dual_basis(c.left_module()).has_value();
  bool unverified = false;
  auto verified = [&](const Matrix& w, const char* method) -> std::optional<SimplicityVerdict> {
    if (is_subcomodule(m, w)) return SimplicityVerdict{Kind::not_simple, w, method};
    if (faithful) throw std::logic_error("is_simple: invariant subspace failed verification");
    unverified = true;
    return std::nullopt;
  };

  unsigned long p = f.characteristic();
  if (p > 0) {
    // Projective point count (p^d - 1)/(p - 1), abandoned once past budget.
    unsigned long long count = 0, power = 1;
    bool over = false;
    for (std::size_t i = 0; i < m.dim; ++i) {
      count += power;
      if (count > point_budget) {
        over = true;
        break;
      }
      if (i + 1 < m.dim) {
        if (power > point_budget) {
          over = true;
          break;
        }
        power *= p;
      }
    }

    if (!over) {
      // One representative per projective point: first nonzero coordinate 1.
      for (std::size_t lead = 0; lead < m.dim; ++lead) {
        std::vector<unsigned long> digits(m.dim - 1 - lead, 0);
        while (true) {
          Vec v = zero_vec(m.dim);
          v[lead] = f.one();
          for (std::size_t t = 0; t < digits.size(); ++t)
            v[lead + 1 + t] = Scalar(static_cast<long>(digits[t]));
          Matrix w = spin(ops, f, v, m.dim);
          if (w.cols() < m.dim)
            if (auto out = verified(w, "exhaustive-spin")) return *out;
          std::size_t t = 0;
          for (; t < digits.size(); ++t) {
            if (++digits[t] < p) break;
            digits[t] = 0;
          }
          if (t == digits.size()) break;
        }
      }
      if (unverified) return {Kind::unsupported, std::nullopt, "translation-unfaithful"};
      return {Kind::simple, std::nullopt, "exhaustive-spin"};
    }
  }

  // Hunt for a nullity-one element theta of the operator algebra: its null
  // vector must then spin to everything, and so must the null functional of
  // the transpose on the dual, or else one of the two hands over a proper
  // invariant subspace.
  std::mt19937_64 rng(seed);
  auto random_scalar = [&]() {
    long r = p > 0 ? static_cast<long>(rng() % p) : static_cast<long>(rng() % 7) - 3;
    return Scalar(r);
  };
  std::vector<Matrix> tops;
  for (const Matrix& op : ops) tops.push_back(op.transpose());

  for (int attempt = 0; attempt < 60; ++attempt) {
    Matrix theta(f, m.dim, m.dim);
    for (const Matrix& op : ops) theta = theta + op.scaled(random_scalar());
    Matrix null = kernel_basis(theta);
    if (null.cols() != 1) continue;

    Matrix w = spin(ops, f, null.col_vec(0), m.dim);
    if (w.cols() < m.dim) {
      if (auto out = verified(w, "norton")) return *out;
      continue;
    }
    Matrix z = spin(tops, f, kernel_basis(theta.transpose()).col_vec(0), m.dim);
    if (z.cols() < m.dim) {
      if (auto out = verified(kernel_basis(z.transpose()), "norton")) return *out;
      continue;
    }
    return {Kind::simple, std::nullopt, "norton"};
  }
  return {Kind::unsupported, std::nullopt, "no-nullity-one-element"};
}

}  // namespace forge
