#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/elim.hpp"

namespace forge {

// Finite-dimensional unital associative algebra given by structure constants:
// mul is the multiplication A (x) A -> A as a dim x dim^2 matrix in the
// left-major tensor order, unit the coordinate vector of 1.
struct Algebra {
  Field field = Field::rationals();
  std::size_t dim = 0;
  Matrix mul;
  Vec unit;

  Vec multiply(const Vec& a, const Vec& b) const { return mul.apply(tensor_vec(field, a, b)); }
  Matrix left_mult(const Vec& a) const;   // x -> a x
  Matrix right_mult(const Vec& a) const;  // x -> x a
};

// Ground field viewed as the one-dimensional algebra.
Algebra scalar_algebra(const Field& f);

enum class Side { left, right };

// Module over A. For side == right the action is M (x) A -> M, for side ==
// left it is A (x) M -> M.
struct AModule {
  Algebra algebra;
  Side side = Side::right;
  std::size_t dim = 0;
  Matrix action;

  // Operator of a fixed algebra element on the module.
  Matrix action_of(const Vec& a) const;
  Vec act_right(const Vec& m, const Vec& a) const;  // side == right
  Vec act_left(const Vec& a, const Vec& m) const;   // side == left
};

AModule regular_right_module(const Algebra& a);
AModule regular_left_module(const Algebra& a);

// Axiom checkers return the list of violated axiom names; empty means valid.
std::vector<std::string> check_algebra(const Algebra& a);
std::vector<std::string> check_module(const AModule& m);

// Basis of Hom_A(M, N) for modules on the same side, as matrices N <- M, in
// the echelon order produced by elimination.
std::vector<Matrix> module_hom(const AModule& m, const AModule& n);

// M (x)_A N for M a right and N a left A-module, materialised as a quotient
// of M (x)_k N with a fixed projection/section pair.
struct BalancedTensor {
  std::size_t left_dim = 0, right_dim = 0;
  QuotientSpace q;

  std::size_t dim() const { return q.dim; }
  Vec pure(const Field& f, const Vec& m, const Vec& n) const {
    return q.projection.apply(tensor_vec(f, m, n));
  }
};

BalancedTensor tensor_over_A(const AModule& m, const AModule& n);

// Dual basis of an A-module: elements e^i and A-linear functionals
// xi^i: M -> A with sum_i e^i xi^i(m) = m on the right side and
// sum_i xi^i(m) e^i = m on the left. Exists iff M is finitely generated
// projective; nullopt when the defining linear system is infeasible.
struct DualBasis {
  std::vector<Vec> elements;
  std::vector<Matrix> functionals;
};

std::optional<DualBasis> find_dual_basis(const AModule& m);

}  // namespace forge
