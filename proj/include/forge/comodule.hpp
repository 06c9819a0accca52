#pragma once

#include <optional>

#include "forge/coring.hpp"

namespace forge {

enum class CoSide { right, left };

// A one-sided comodule over a coring. The carrier is an A-module on the same
// side, and the coaction lands in the materialised balanced tensor M (x)_A C
// (right side) or C (x)_A M (left side), stored post-quotient next to its
// quotient presentation. coaction_lift() picks representatives in the plain
// tensor product when a formula needs them; anything computed from a lift
// must be checked or known to be independent of the choice.
struct Comodule {
  Coring coring;
  CoSide side = CoSide::right;
  std::size_t dim = 0;
  Matrix action;      // M (x) A -> M, or A (x) M -> M on the left
  BalancedTensor mc;  // M (x)_A C, or C (x)_A M on the left
  Matrix coaction;    // M -> mc, post-quotient

  AModule module() const {
    return {coring.base, side == CoSide::right ? Side::right : Side::left, dim, action};
  }
  Matrix coaction_lift() const { return mc.q.section * coaction; }
};

// The coring over itself, coproduct as coaction, on either side.
Comodule regular_comodule(const Coring& c);
Comodule regular_left_comodule(const Coring& c);

// A as a right comodule along a group-like g, coaction a -> 1 (x) (g a),
// or as a left comodule with a -> (a g) (x) 1. Throws invalid_argument
// unless g passes coring_grouplike.
Comodule grouplike_comodule(const Coring& c, const Vec& g);
Comodule grouplike_left_comodule(const Coring& c, const Vec& g);

// Violated axiom names, empty iff m is a comodule: "module" (carrier fails
// the module axioms), "shape", "coaction-linear" (coaction not A-linear into
// the balanced tensor), "coassociativity", "counit-law".
std::vector<std::string> check_comodule(const Comodule& m);

// Basis, in echelon order, of the maps M -> N that are simultaneously
// A-linear and colinear. Same side and same coring required.
std::vector<Matrix> colinear_hom(const Comodule& m, const Comodule& n);

// End of a comodule as an algebra in a fixed basis of colinear_hom(m, m).
// The product is composition for right comodules and opposite composition
// for left ones, so scalars act the same way evaluation does.
struct EndoRing {
  std::vector<Matrix> basis;  // maps M -> M
  Algebra ring;               // structure constants in that basis
};

EndoRing endomorphism_ring(const Comodule& m);

// The cotensor product of a right and a left comodule over one coring:
// the kernel of rho_M (x) id - id (x) rho_N inside M (x)_A N.
struct CotensorSpace {
  BalancedTensor carrier;  // M (x)_A N
  Matrix basis;            // columns, in carrier coordinates
};

CotensorSpace cotensor(const Comodule& m, const Comodule& n);

// Coinvariants of a right comodule relative to a group-like g: the subspace
// {w : rho(w) = w (x) g}, together with the stabiliser subalgebra
// S_g = {s in A : s g = g s} and its right action on the subspace (the
// matrix of - . s_j in the coinvariant basis, one per stabiliser basis
// element). Throws invalid_argument unless g is group-like.
struct Coinvariants {
  Matrix basis;        // columns span the coinvariants inside M
  Matrix stabilizer;   // columns span S_g inside A
  std::vector<Matrix> action;
};

Coinvariants coinvariants(const Comodule& w, const Vec& g);

// The left comodule structure on M* = Hom_A(M, A) of a finitely generated
// projective right comodule: xi -> sum_i xi(e^i_0) e^i_1 (x) xi^i for a dual
// basis {e^i, xi^i}. Returns the comodule together with the chosen basis of
// M* (as maps M -> A), the dual basis, and the coordinates of each xi^i in
// that basis. Throws invalid_argument when no dual basis exists.
struct DualComodule {
  Comodule dual;                    // left comodule on M*
  std::vector<Matrix> functionals;  // basis of M*, maps M -> A
  DualBasis db;
  Matrix db_coords;  // column i: xi^i in functional coordinates
};

DualComodule dual_left_comodule(const Comodule& m);

// The ring map Gamma: End(M) -> End(M*), s -> (xi -> xi . s), expressed in
// the two endomorphism bases, with its inverse t -> (m -> sum_i e^i t(xi^i)(m)).
// Since the target ring multiplies by opposite composition, Gamma is an
// isomorphism of algebras from source.ring to target.ring.
struct GammaIso {
  EndoRing source;  // End of M
  EndoRing target;  // End of M*, opposite composition
  Matrix gamma;     // source coordinates -> target coordinates
  Matrix gamma_inverse;
};

GammaIso gamma_iso(const Comodule& m);
GammaIso gamma_iso(const Comodule& m, const DualComodule& dual);

// Does the column span of v (nonzero, proper) carry a subcomodule: stable
// under the A-action, with coaction values inside the image of span (x)_A C.
bool is_subcomodule(const Comodule& m, const Matrix& v);

// Simplicity of a right comodule, decided through the associated module
// structure over the left dual ring of C (operators m -> m_0 . f(m_1) for
// left A-linear f: C -> A, together with the A-action). Requires C finitely
// generated projective as a left A-module for the translation to be faithful.
//
// Over a prime field with few enough projective points the spin test is
// exhaustive and the answer definitive either way. Otherwise a seeded search
// for a nullity-one operator decides via its null vector and the transposed
// module; when no such operator turns up the verdict is unsupported rather
// than a guess. not_simple always carries a verified witness subcomodule.
struct SimplicityVerdict {
  enum class Kind { simple, not_simple, unsupported };
  Kind kind = Kind::unsupported;
  std::optional<Matrix> witness;  // columns span a proper nonzero subcomodule
  std::string method;
};

SimplicityVerdict is_simple(const Comodule& m, unsigned long seed = 20260817,
                            std::size_t point_budget = 500000);

// Retraction of the coaction when one exists: an A-linear colinear
// pi: M (x)_A C -> M with pi . rho = id. Its existence is precisely relative
// injectivity of the comodule; nullopt means the linear system is infeasible,
// which here is a proof.
std::optional<Matrix> is_relatively_injective(const Comodule& m);

// Induction along a coring morphism: a right comodule M over the source
// becomes M (x)_A B over the target, coaction m (x) b -> m_0 (x) gamma(m_1) b;
// on the left, N becomes B (x)_A N with coaction b (x) n -> b gamma(n_-1) (x) n_0.
Comodule induced_comodule(const Comodule& m, const CoringMorphism& f);
Comodule induced_left_comodule(const Comodule& n, const CoringMorphism& f);

}  // namespace forge
