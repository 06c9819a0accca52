#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "forge/matrix.hpp"

namespace forge {

// Exact Gauss-Jordan elimination and everything downstream of it. All results
// are deterministic functions of the input: pivots are chosen as the first
// nonzero entry in column order, so repeated runs (and parallel runs) agree.

struct Echelon {
  Matrix r;                         // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns form a basis of ker(m), one per free column, in ascending free
// column order with unit entry at the free position ("echelon order").
Matrix kernel_basis(const Matrix& m);

// Particular solution of m x = b with all free variables set to zero (the
// echelon-minimal solution); nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Simultaneous affine system: find x with constraint.first * x =
// constraint.second for every pair. Echelon-minimal on success.
std::optional<Vec> solve_affine(const std::vector<std::pair<Matrix, Vec>>& constraints);

std::optional<Matrix> inverse(const Matrix& m);

// Quotient of k^ambient by the column span of `relations`, presented by a
// projection onto coordinates and a section with projection * section = id.
// ker(projection) is exactly the relation span.
struct QuotientSpace {
  std::size_t ambient = 0;
  std::size_t dim = 0;
  Matrix projection;  // dim x ambient
  Matrix section;     // ambient x dim
};

QuotientSpace quotient_space(const Field& f, std::size_t ambient, const Matrix& relations);

// Matrix of a linear operator on matrix space. `phi` must be linear; it is
// evaluated on the elementary matrices of shape (rows_in, cols_in) and the
// images are flattened row-major into columns.
Matrix linearize(const Field& f, std::size_t rows_in, std::size_t cols_in,
                 const std::function<Matrix(const Matrix&)>& phi);

Vec flatten(const Matrix& m);                                        // row-major
Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v);

// Column span comparisons.
bool span_contains(const Matrix& space, const Vec& v);
bool span_contained(const Matrix& inner, const Matrix& outer);  // span(inner) subset of span(outer)
bool span_equal(const Matrix& a, const Matrix& b);

}  // namespace forge
