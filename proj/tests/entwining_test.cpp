#include <doctest.h>

#include "fixtures.hpp"
#include "forge/entwining.hpp"

using namespace forge;
using namespace forge::fixtures;

TEST_CASE("the flip entwines any algebra with any coalgebra") {
  Field f = Field::rationals();
  CHECK(check_bowtie(flip_entwining(cyclic_group_algebra(f, 2), scalar_coalgebra(f))).empty());
  CHECK(check_bowtie(flip_entwining(anticommuting_pair_algebra(f), matrix_coalgebra(f, 2)))
            .empty());
  Entwining e = flip_entwining(matrix_algebra(Field::prime(3), 2),
                               grouplike_coalgebra(Field::prime(3), 3));
  CHECK(check_bowtie(e).empty());
  CHECK(invert_psi(e) == e.psi_inverse);
}

TEST_CASE("zero psi breaks exactly the triangles") {
  Field f = Field::rationals();
  Entwining e{cyclic_group_algebra(f, 2), grouplike_coalgebra(f, 2), Matrix(f, 4, 4),
              std::nullopt};
  CHECK(check_bowtie(e) == std::vector<std::string>{"left-triangle", "right-triangle"});
  CHECK_FALSE(invert_psi(e).has_value());
}

TEST_CASE("hopf axioms hold for the group and small quantum fixtures") {
  for (auto f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
    CHECK(check_hopf(group_hopf(f, 2)).empty());
    CHECK(check_hopf(group_hopf(f, 3)).empty());
    CHECK(check_hopf(small_quantum_hopf(f)).empty());
  }
  // The small quantum antipode has order four, not two.
  HopfAlgebra h = small_quantum_hopf(Field::rationals());
  CHECK(h.antipode * h.antipode != Matrix::identity(h.algebra.field, 4));
}

TEST_CASE("a wrong antipode is reported as exactly the antipode axioms") {
  Field f = Field::rationals();
  HopfAlgebra h = group_hopf(f, 2);
  h.antipode = Matrix::from_int_rows(f, 2, 2, {1, 0, 0, -1});
  h.antipode_inverse = std::nullopt;
  CHECK(check_hopf(h) == std::vector<std::string>{"antipode-left", "antipode-right"});
}

TEST_CASE("group-like self-entwining is the expected permutation") {
  Field f = Field::rationals();
  Entwining e = doi_koppinen(self_dk(group_hopf(f, 2)));
  CHECK(check_bowtie(e).empty());

  // psi: 1 (x) 1 -> 1 (x) 1, g (x) 1 -> 1 (x) g, 1 (x) g -> g (x) g,
  //      g (x) g -> g (x) 1, frozen from the coaction formula.
  Matrix expect(f, 4, 4);
  expect.set(0, 0, f.one());
  expect.set(3, 1, f.one());
  expect.set(1, 2, f.one());
  expect.set(2, 3, f.one());
  CHECK(e.psi == expect);

  REQUIRE(e.psi_inverse.has_value());
  CHECK(e.psi * *e.psi_inverse == Matrix::identity(f, 4));
  CHECK(*e.psi_inverse * e.psi == Matrix::identity(f, 4));
}

TEST_CASE("self-entwining of the small quantum hopf algebra passes the bow-tie") {
  for (auto f : {Field::rationals(), Field::prime(5)}) {
    Entwining e = doi_koppinen(self_dk(small_quantum_hopf(f)));
    CHECK(check_bowtie(e).empty());
    REQUIRE(e.psi_inverse.has_value());
    CHECK(e.psi * *e.psi_inverse == Matrix::identity(f, 16));
  }
}

TEST_CASE("projection onto the group-like quotient entwines the quantum algebra") {
  for (auto f : {Field::rationals(), Field::prime(5)}) {
    Entwining e = doi_koppinen(quantum_projection_dk(f));
    CHECK(e.psi.rows() == 8);
    CHECK(check_bowtie(e).empty());
    REQUIRE(e.psi_inverse.has_value());
  }
}

TEST_CASE("trivial hopf algebra gives the flip entwining") {
  Field f = Field::rationals();
  HopfAlgebra triv = group_hopf(f, 1);
  Algebra a = dual_numbers_algebra(f);
  // Coaction a -> a (x) 1 is the identity under the identification A = A (x) k.
  DoiKoppinenData d{triv, {a, Matrix::identity(f, 2)}, scalar_coalgebra(f),
                    Matrix::identity(f, 1), Matrix::identity(f, 1)};
  Entwining e = doi_koppinen(d);
  CHECK(e.psi == flip(f, 1, 2));
}

TEST_CASE("the projected unit is group-like in the quotient coalgebra") {
  Field f = Field::prime(5);
  for (std::size_t n : {2, 3}) {
    DoiKoppinenData d = self_dk(group_hopf(f, n));
    CHECK(verify_grouplike(d.c, d.pi.apply(d.hopf.algebra.unit)));
  }
  DoiKoppinenData q = self_dk(small_quantum_hopf(f));
  CHECK(verify_grouplike(q.c, q.pi.apply(q.hopf.algebra.unit)));
}

TEST_CASE("doi-koppinen rejects a non-equivariant projection") {
  Field f = Field::rationals();
  HopfAlgebra h = group_hopf(f, 2);
  DoiKoppinenData d = self_dk(h);
  // Make C carry the trivial right action instead of multiplication; pi = id
  // is then no longer H-linear.
  Matrix eps = h.coalgebra.counit;
  d.c_act = Matrix::identity(f, 2).kron(eps);
  CHECK_THROWS_AS(doi_koppinen(d), std::invalid_argument);
}
