#pragma once

#include "forge/algebra.hpp"
#include "forge/coalgebra.hpp"

namespace forge {

// An entwining of an algebra and a coalgebra over the same field: psi maps
// C (x) A -> A (x) C and is subject to the four bow-tie conditions.
struct Entwining {
  Algebra algebra;
  Coalgebra coalgebra;
  Matrix psi;
  std::optional<Matrix> psi_inverse;
};

// Flip map as the entwining of A with the trivial coalgebra k (or any
// coalgebra when A is commutative and the actions do not interact).
Entwining flip_entwining(const Algebra& a, const Coalgebra& c);

// Violated conditions among: left-pentagon, right-pentagon, left-triangle,
// right-triangle, and inverse (when psi_inverse is present but not inverse).
std::vector<std::string> check_bowtie(const Entwining& e);

// Exact inverse of psi, or nullopt when singular.
std::optional<Matrix> invert_psi(const Entwining& e);

// Hopf algebra data on one carrier: the algebra and coalgebra structures,
// the antipode, and optionally its inverse.
struct HopfAlgebra {
  Algebra algebra;
  Coalgebra coalgebra;
  Matrix antipode;
  std::optional<Matrix> antipode_inverse;
};

// Violated bialgebra/Hopf axioms by name; empty means a genuine Hopf algebra.
std::vector<std::string> check_hopf(const HopfAlgebra& h);

// Right comodule algebra over a Hopf algebra: coaction A -> A (x) H that is
// a unital algebra map and a counital coassociative coaction.
struct ComoduleAlgebra {
  Algebra algebra;
  Matrix coaction;  // (dim A * dim H) x dim A
};

std::vector<std::string> check_comodule_algebra(const ComoduleAlgebra& a, const HopfAlgebra& h);

// Doi-Koppinen data: a Hopf algebra H, a right H-comodule algebra A, and a
// quotient-like coalgebra C with a surjection pi: H -> C that is a coalgebra
// map and right H-linear for a given right H-action on C.
struct DoiKoppinenData {
  HopfAlgebra hopf;
  ComoduleAlgebra amod;
  Coalgebra c;
  Matrix pi;     // dim C x dim H, coalgebra surjection
  Matrix c_act;  // C (x) H -> C, right H-module structure
};

// Builds psi(c (x) a) = sum a_0 (x) c . a_1 after verifying every structural
// precondition (throws std::invalid_argument naming the first failure).
// When the antipode inverse is available, psi_inverse is set from the
// closed formula a (x) c -> sum c . Sinv(a_1) (x) a_0.
Entwining doi_koppinen(const DoiKoppinenData& d);

}  // namespace forge
