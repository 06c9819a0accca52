#pragma once

#include "forge/entwining.hpp"
#include "forge/tensor.hpp"

namespace forge {

// A coring over the base algebra A: an (A,A)-bimodule carrier C with a
// comultiplication into the materialised quotient C (x)_A C and a counit
// into A, both bimodule maps, subject to coassociativity and counit laws.
//
// comul is stored post-quotient (cc.dim x dim); comul_lift() composes with
// the retained section to land in the plain tensor square when a formula
// needs representatives.
struct Coring {
  Algebra base;
  std::size_t dim = 0;
  Matrix lact;  // A (x) C -> C
  Matrix ract;  // C (x) A -> C
  BalancedTensor cc;
  Matrix comul;   // C -> C (x)_A C
  Matrix counit;  // C -> A

  AModule left_module() const { return {base, Side::left, dim, lact}; }
  AModule right_module() const { return {base, Side::right, dim, ract}; }
  Matrix comul_lift() const { return cc.q.section * comul; }
};

// A itself with the canonical identification A (x)_A A = A.
Coring trivial_coring(const Algebra& a);

// A (x)_S A for a unital injective algebra map emb: S -> A, with coproduct
// a (x) a' -> (a (x) 1) (x) (1 (x) a') and counit the multiplication. When
// presentation is non-null it receives the carrier as a quotient of A (x) A,
// which is how elements a (x) a' are addressed from outside.
Coring sweedler_coring(const Algebra& s, const Algebra& a, const Matrix& emb,
                       BalancedTensor* presentation = nullptr);

// A (x) C with the actions a(a' (x) c)a'' = a a' psi(c (x) a''), coproduct
// inherited from the coalgebra, counit a (x) c -> a eps(c). The entwining
// must pass check_bowtie.
Coring coring_from_entwining(const Entwining& e);

// A coalgebra is exactly a coring over the ground field.
Coring coring_from_coalgebra(const Coalgebra& c);

std::vector<std::string> check_coring(const Coring& c);

// Group-like element: comul(g) = class of g (x) g and counit(g) = 1.
bool coring_grouplike(const Coring& c, const Vec& g);

// Morphism axioms for (alpha, gamma) from c over A to d over B: alpha a
// unital algebra map, gamma a bimodule map along alpha, compatible with
// both coproducts (through the canonical D (x)_A D -> D (x)_B D) and counits.
std::vector<std::string> check_coring_morphism(const Coring& c, const Coring& d,
                                               const Matrix& alpha, const Matrix& gamma);

// A morphism bundled with its endpoint corings, for passing to induction
// functors. source lives over A = source.base, target over B = target.base.
struct CoringMorphism {
  Coring source;
  Coring target;
  Matrix alpha;  // A -> B
  Matrix gamma;  // C -> D
};

inline std::vector<std::string> check_coring_morphism(const CoringMorphism& m) {
  return check_coring_morphism(m.source, m.target, m.alpha, m.gamma);
}

// (id, counit) into the trivial coring over the same base; always a morphism.
CoringMorphism counit_morphism(const Coring& c);

// Searches for a coring isomorphism over the shared base with alpha = id:
// solves the linear morphism constraints, then verifies the full axioms and
// bijectivity on the echelon solution. nullopt means the search failed, not
// a proof that no isomorphism exists.
std::optional<Matrix> find_coring_isomorphism(const Coring& c, const Coring& d);

}  // namespace forge
