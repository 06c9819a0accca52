#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "forge/comodule.hpp"

using namespace forge;
using namespace forge::fixtures;

namespace {

Coring dk_z2_coring(const Field& f) {
  return coring_from_entwining(doi_koppinen(self_dk(group_hopf(f, 2))));
}

// The unit group-like 1 (x) 1 of an entwining coring with carrier A (x) C.
Vec dk_unit_grouplike(const Coring& c) { return unit_vec(c.dim, 0); }

// Canonical comodule over the trivial coring: coaction m -> m (x) 1.
Comodule trivial_comodule(const AModule& mod) {
  const Field& f = mod.algebra.field;
  Coring c = trivial_coring(mod.algebra);
  BalancedTensor mc = tensor_over_A(mod, c.left_module());
  Matrix co = mc.q.projection *
              Matrix::identity(f, mod.dim).kron(Matrix::column(f, mod.algebra.unit));
  return {c, CoSide::right, mod.dim, mod.action, mc, co};
}

Matrix flat_span(const std::vector<Matrix>& maps) {
  if (maps.empty()) return Matrix();
  Matrix s(maps[0].field(), maps[0].rows() * maps[0].cols(), maps.size());
  for (std::size_t j = 0; j < maps.size(); ++j) s.set_col(j, flatten(maps[j]));
  return s;
}

}  // namespace

TEST_CASE("regular and group-like comodules satisfy the axioms") {
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    Coring c = dk_z2_coring(f);
    CHECK(check_comodule(regular_comodule(c)).empty());
    CHECK(check_comodule(regular_left_comodule(c)).empty());

    Vec g = dk_unit_grouplike(c);
    CHECK(check_comodule(grouplike_comodule(c, g)).empty());
    CHECK(check_comodule(grouplike_left_comodule(c, g)).empty());
  }
}

TEST_CASE("comodules over the trivial coring are exactly modules") {
  Field f = Field::rationals();
  Algebra mat = matrix_algebra(f, 2);
  Comodule row = trivial_comodule(row_module(mat, 2));
  CHECK(check_comodule(row).empty());

  // Colinearity adds nothing over the trivial coring.
  Comodule reg = trivial_comodule(regular_right_module(mat));
  auto chom = colinear_hom(row, reg);
  auto mhom = module_hom(row.module(), reg.module());
  CHECK(chom.size() == mhom.size());
  CHECK(span_equal(flat_span(chom), flat_span(mhom)));
}

TEST_CASE("grouplike_comodule rejects non-group-likes") {
  Field f = Field::rationals();
  Coring c = dk_z2_coring(f);
  // 1 (x) g is a second genuine group-like here; g (x) 1 has counit g and is not.
  CHECK(coring_grouplike(c, unit_vec(c.dim, 1)));
  CHECK(check_comodule(grouplike_comodule(c, unit_vec(c.dim, 1))).empty());
  CHECK_THROWS_AS(grouplike_comodule(c, unit_vec(c.dim, 2)), std::invalid_argument);
  CHECK_THROWS_AS(grouplike_left_comodule(c, unit_vec(c.dim, 2)), std::invalid_argument);
}

TEST_CASE("broken coactions report the right axioms") {
  Field f = Field::rationals();
  Coring c = dk_z2_coring(f);
  Comodule m = grouplike_comodule(c, dk_unit_grouplike(c));

  Comodule zeroed = m;
  zeroed.coaction = Matrix(f, m.coaction.rows(), m.coaction.cols());
  CHECK(check_comodule(zeroed) == std::vector<std::string>{"counit-law"});

  Comodule doubled = m;
  doubled.coaction = m.coaction.scaled(f.from_int(2));
  CHECK(check_comodule(doubled) == std::vector<std::string>{"coassociativity", "counit-law"});

  Comodule left_doubled = regular_left_comodule(c);
  left_doubled.coaction = left_doubled.coaction.scaled(f.from_int(2));
  CHECK(check_comodule(left_doubled) ==
        std::vector<std::string>{"coassociativity", "counit-law"});

  Comodule bad_module = m;
  bad_module.action = Matrix(f, m.dim, m.dim * c.base.dim);
  CHECK(check_comodule(bad_module) == std::vector<std::string>{"module"});

  Comodule bad_shape = m;
  bad_shape.coaction = Matrix(f, m.coaction.rows() + 1, m.coaction.cols());
  CHECK(check_comodule(bad_shape) == std::vector<std::string>{"shape"});
}

TEST_CASE("a coaction that is not A-linear is reported as such") {
  // Over the trivial coring on k[x]/(x^2), send m -> m (x) 1 + (m x) (x) x's
  // class; tweaking one matrix entry of a valid coaction breaks linearity.
  Field f = Field::rationals();
  Comodule m = trivial_comodule(regular_right_module(dual_numbers_algebra(f)));
  Comodule bent = m;
  bent.coaction.set(1, 1, f.from_int(5));
  auto bad = check_comodule(bent);
  CHECK(!bad.empty());
  CHECK(std::find(bad.begin(), bad.end(), "coaction-linear") != bad.end());
}

TEST_CASE("colinear maps are module maps, and the inclusion can be strict") {
  Field f = Field::rationals();
  Coring c = dk_z2_coring(f);
  Comodule m = grouplike_comodule(c, dk_unit_grouplike(c));
  Comodule n = regular_comodule(c);

  auto chom = colinear_hom(m, n);
  auto mhom = module_hom(m.module(), n.module());
  CHECK(!chom.empty());
  CHECK(span_contained(flat_span(chom), flat_span(mhom)));
  CHECK(chom.size() < mhom.size());

  // Colinear maps compose with colinear endomorphisms without leaving the space.
  Matrix chom_span = flat_span(chom);
  for (const Matrix& s : colinear_hom(m, m))
    for (const Matrix& t : chom) CHECK(span_contains(chom_span, flatten(t * s)));
}

TEST_CASE("endomorphism ring of a group-like comodule over the Hopf coring is the field") {
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    Coring c = dk_z2_coring(f);
    EndoRing s = endomorphism_ring(grouplike_comodule(c, dk_unit_grouplike(c)));
    CHECK(s.basis.size() == 1);
    CHECK(check_algebra(s.ring).empty());
    CHECK(rank(s.basis[0]) == 2);  // invertible: a division ring in dimension one
  }
}

TEST_CASE("endomorphism ring over the trivial coring recovers the regular module's endos") {
  Field f = Field::rationals();
  Algebra a = cyclic_group_algebra(f, 2);
  EndoRing s = endomorphism_ring(trivial_comodule(regular_right_module(a)));
  CHECK(s.basis.size() == 2);
  CHECK(check_algebra(s.ring).empty());
  // End_A(A) acts by left multiplication, so the ring is A again: commutative
  // with an element squaring to the unit.
  Matrix mul = s.ring.mul;
  CHECK(mul * flip(f, 2, 2) == mul);
}

TEST_CASE("endomorphism ring of a left comodule multiplies by opposite composition") {
  Field f = Field::rationals();
  Coring c = trivial_coring(matrix_algebra(f, 2));
  Comodule l = regular_left_comodule(c);
  EndoRing t = endomorphism_ring(l);
  CHECK(check_algebra(t.ring).empty());
  CHECK(t.basis.size() == 4);  // End of the left regular module: right multiplications

  Matrix span = flat_span(t.basis);
  for (std::size_t i = 0; i < t.basis.size(); ++i)
    for (std::size_t j = 0; j < t.basis.size(); ++j) {
      Vec coords = t.ring.mul.apply(tensor_vec(f, unit_vec(4, i), unit_vec(4, j)));
      Matrix recombined(f, l.dim, l.dim);
      for (std::size_t k = 0; k < t.basis.size(); ++k)
        if (coords[k] != 0) recombined = recombined + t.basis[k].scaled(coords[k]);
      CHECK(recombined == t.basis[j] * t.basis[i]);
    }
}

TEST_CASE("cotensor with the coring itself is the identity functor") {
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    Coring c = dk_z2_coring(f);
    Comodule m = grouplike_comodule(c, dk_unit_grouplike(c));
    CotensorSpace ct = cotensor(m, regular_left_comodule(c));
    CHECK(ct.basis.cols() == m.dim);

    // Mutually inverse maps: the coaction into the cotensor and id (x) counit
    // back out of it.
    Matrix im = Matrix::identity(f, m.dim);
    Matrix back = m.action * im.kron(c.counit) * ct.carrier.q.section;
    Matrix into = ct.carrier.q.projection * m.coaction_lift();
    CHECK(back * into == im);
    for (std::size_t j = 0; j < ct.basis.cols(); ++j) {
      Vec w = ct.basis.col_vec(j);
      CHECK(span_contains(ct.basis, into.apply(back.apply(w))));
      CHECK(eq_vec(f, into.apply(back.apply(w)), w));
    }
    // The coaction lands inside the cotensor subspace.
    for (std::size_t j = 0; j < m.dim; ++j)
      CHECK(span_contains(ct.basis, into.col_vec(j)));
  }
}

TEST_CASE("cotensor of the two group-like twists of A is the coinvariant line") {
  Field f = Field::rationals();
  Coring c = dk_z2_coring(f);
  Vec g = dk_unit_grouplike(c);
  CotensorSpace ct = cotensor(grouplike_comodule(c, g), grouplike_left_comodule(c, g));
  CHECK(ct.carrier.dim() == 2);  // A (x)_A A
  CHECK(ct.basis.cols() == 1);
}

TEST_CASE("coinvariants of the Hopf coaction on A form the ground field") {
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    for (std::size_t n : {2, 3}) {
      Coring c = coring_from_entwining(doi_koppinen(self_dk(group_hopf(f, n))));
      Vec g = unit_vec(c.dim, 0);
      Coinvariants ci = coinvariants(grouplike_comodule(c, g), g);
      CHECK(ci.basis.cols() == 1);
      CHECK(span_contains(ci.basis, c.base.unit));
      CHECK(ci.stabilizer.cols() == 1);
      REQUIRE(ci.action.size() == 1);
      CHECK(ci.action[0] == Matrix::identity(f, 1));
    }
  }
}

TEST_CASE("coinvariants over the trivial coring are everything") {
  Field f = Field::prime(3);
  Algebra a = matrix_algebra(f, 2);
  Coring c = trivial_coring(a);
  Coinvariants ci = coinvariants(trivial_comodule(regular_right_module(a)), a.unit);
  CHECK(ci.basis.cols() == a.dim);
  CHECK(ci.stabilizer.cols() == a.dim);  // everything commutes with the unit
  CHECK(ci.action.size() == a.dim);
}

TEST_CASE("coinvariants insist on a group-like") {
  Field f = Field::rationals();
  Coring c = dk_z2_coring(f);
  Comodule m = grouplike_comodule(c, dk_unit_grouplike(c));
  CHECK_THROWS_AS(coinvariants(m, unit_vec(c.dim, 2)), std::invalid_argument);
}
