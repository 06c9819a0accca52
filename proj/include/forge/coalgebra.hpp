#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/elim.hpp"

namespace forge {

// Finite-dimensional coalgebra over the ground field: comul is C -> C (x) C
// as a dim^2 x dim matrix, counit is C -> k as a 1 x dim matrix.
struct Coalgebra {
  Field field = Field::rationals();
  std::size_t dim = 0;
  Matrix comul;
  Matrix counit;
};

// The ground field as the one-dimensional coalgebra.
Coalgebra scalar_coalgebra(const Field& f);

// Group-like coalgebra on the basis of k[Z/n]: every basis vector is
// group-like. Shares its carrier with the cyclic group algebra.
Coalgebra grouplike_coalgebra(const Field& f, std::size_t n);

// Matrix coalgebra M^c(n): comul(e_ij) = sum_k e_ik (x) e_kj, counit(e_ij) = [i==j].
Coalgebra matrix_coalgebra(const Field& f, std::size_t n);

std::vector<std::string> check_coalgebra(const Coalgebra& c);

// True iff comul(x) = x (x) x and counit(x) = 1, both exactly.
bool verify_grouplike(const Coalgebra& c, const Vec& x);

// A coseparability witness: delta: C (x) C -> k with delta . comul = counit
// and the colinearity law sum c_1 delta(c_2 (x) c') = sum delta(c (x) c'_1) c'_2.
struct Cointegral {
  Matrix delta;  // 1 x dim^2
};

// Echelon-minimal solution of the affine system, or nullopt when the system
// is infeasible (the coalgebra is then not coseparable).
std::optional<Cointegral> find_cointegral(const Coalgebra& c);

// Violations of the cointegral laws for a candidate delta: "shape",
// "counit", "colinearity". Empty means delta is a cointegral.
std::vector<std::string> check_cointegral(const Coalgebra& c, const Matrix& delta);

}  // namespace forge
