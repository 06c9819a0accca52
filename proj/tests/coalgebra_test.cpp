#include <doctest.h>

#include "fixtures.hpp"
#include "forge/coalgebra.hpp"

using namespace forge;
using namespace forge::fixtures;

namespace {

// Both defining equations of a cointegral, re-verified from scratch.
bool cointegral_valid(const Coalgebra& c, const Matrix& delta) {
  const Field& f = c.field;
  Matrix id = Matrix::identity(f, c.dim);
  return delta * c.comul == c.counit &&
         id.kron(delta) * c.comul.kron(id) == delta.kron(id) * id.kron(c.comul);
}

}  // namespace

TEST_CASE("standard coalgebras satisfy the axioms") {
  for (auto f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
    CHECK(check_coalgebra(scalar_coalgebra(f)).empty());
    CHECK(check_coalgebra(grouplike_coalgebra(f, 2)).empty());
    CHECK(check_coalgebra(grouplike_coalgebra(f, 3)).empty());
    CHECK(check_coalgebra(matrix_coalgebra(f, 2)).empty());
    CHECK(check_coalgebra(dual_numbers_coalgebra(f)).empty());
  }
}

TEST_CASE("zero comultiplication breaks exactly the counit laws") {
  Field f = Field::rationals();
  Coalgebra c = grouplike_coalgebra(f, 2);
  c.comul = Matrix(f, 4, 2);
  CHECK(check_coalgebra(c) == std::vector<std::string>{"counit-left", "counit-right"});
}

TEST_CASE("group-like verification is exact") {
  Field f = Field::rationals();
  Coalgebra c = grouplike_coalgebra(f, 2);
  CHECK(verify_grouplike(c, unit_vec(2, 0)));
  CHECK(verify_grouplike(c, unit_vec(2, 1)));
  CHECK_FALSE(verify_grouplike(c, {f.one(), f.one()}));  // counit gives 2
  CHECK_FALSE(verify_grouplike(c, zero_vec(2)));

  // No basis element of the matrix coalgebra is group-like.
  Coalgebra m = matrix_coalgebra(f, 2);
  for (std::size_t i = 0; i < 4; ++i) CHECK_FALSE(verify_grouplike(m, unit_vec(4, i)));
}

TEST_CASE("group-like coalgebras have the diagonal cointegral") {
  for (auto f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
    for (std::size_t n : {2, 3}) {
      auto ci = find_cointegral(grouplike_coalgebra(f, n));
      REQUIRE(ci.has_value());
      // delta(g^i (x) g^j) = [i == j]; the solution is unique here, so the
      // solver must land on it exactly.
      Matrix expect(f, 1, n * n);
      for (std::size_t i = 0; i < n; ++i) expect.set(0, tensor_index(i, i, n), f.one());
      CHECK(ci->delta == expect);
      CHECK(cointegral_valid(grouplike_coalgebra(f, n), ci->delta));
    }
  }
}

TEST_CASE("matrix coalgebra is coseparable and admits the trace pairing") {
  Field f = Field::rationals();
  Coalgebra m = matrix_coalgebra(f, 2);
  auto ci = find_cointegral(m);
  REQUIRE(ci.has_value());
  CHECK(cointegral_valid(m, ci->delta));

  // The solution space is a 3-dimensional affine family; the normalised
  // trace pairing delta(e_ij (x) e_kl) = [i==l][j==k] / 2 is one member.
  Scalar half = f.div(f.one(), f.from_int(2));
  Matrix trace_form(f, 1, 16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      std::size_t i = a / 2, j = a % 2, k = b / 2, l = b % 2;
      if (i == l && j == k) trace_form.set(0, tensor_index(a, b, 4), half);
    }
  CHECK(cointegral_valid(m, trace_form));
  CHECK(ci->delta != trace_form);  // the solver picks the echelon-minimal one

  // Even in characteristic 2 the family contains members: the trace pairing
  // needs 1/2 but an asymmetric solution survives.
  Coalgebra m2 = matrix_coalgebra(Field::prime(2), 2);
  auto ci2 = find_cointegral(m2);
  REQUIRE(ci2.has_value());
  CHECK(cointegral_valid(m2, ci2->delta));
}

TEST_CASE("the dual numbers coalgebra is not coseparable") {
  for (auto f : {Field::rationals(), Field::prime(3)})
    CHECK_FALSE(find_cointegral(dual_numbers_coalgebra(f)).has_value());
}

TEST_CASE("the one-dimensional coalgebra has the obvious cointegral") {
  Field f = Field::rationals();
  auto ci = find_cointegral(scalar_coalgebra(f));
  REQUIRE(ci.has_value());
  CHECK(ci->delta == Matrix::identity(f, 1));
}
