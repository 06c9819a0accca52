#pragma once

#include "forge/galois.hpp"

namespace forge {

// M (x)_A C as a right comodule whose coaction extends the coproduct. The
// carrier keeps the coordinates of m.mc, so retractions produced by
// is_relatively_injective are colinear maps out of this comodule.
Comodule cofree_comodule(const Comodule& m);

// A comodule induced along a coring morphism, bundled with everything the
// induction theory consumes: the induced comodule M (x)_A B over the target,
// its endomorphism ring, and B (x)_A C as a left comodule over the target.
// The two balanced-tensor presentations address elements of the quotients
// from outside.
struct InductionDatum {
  CoringMorphism morphism;
  GaloisDatum source;
  Comodule induced;                // M (x)_A B
  BalancedTensor induced_carrier;  // quotient presenting M (x)_A B
  EndoRing induced_endo;           // endomorphisms of the induced comodule
  Comodule left_comodule;          // B (x)_A C
  BalancedTensor left_carrier;     // quotient presenting B (x)_A C
};

// Throws invalid_argument when the morphism fails its axioms or does not
// start at the coring of the datum, logic_error when an induced comodule
// fails the comodule axioms.
InductionDatum induction_datum(const GaloisDatum& g, const CoringMorphism& f);

// The comparison map Hom(M (x)_A B, N) (x)_S M -> N box (B (x)_A C),
// f (x) m -> sum f(m_0 (x) 1_B) (x) (1_B (x) m_1), with S the endomorphism
// ring of the source comodule. theta is written in the basis of the cotensor
// space; bijectivity is decided by rank.
struct ThetaMap {
  std::vector<Matrix> homs;  // basis of the colinear maps from induced to n
  BalancedTensor domain;     // homs (x)_S M
  CotensorSpace codomain;    // n box (B (x)_A C)
  Matrix theta;              // domain -> cotensor basis coordinates
  bool bijective = false;
};

// Throws invalid_argument unless the source datum is Galois.
ThetaMap theta_map(const InductionDatum& d, const Comodule& n);

// The naturality square of theta at a colinear map w: n -> n2. Throws
// invalid_argument when w is not a comodule morphism.
bool theta_natural(const InductionDatum& d, const Comodule& n, const Comodule& n2,
                   const Matrix& w);

// b (x) c -> b gamma(c), from B (x)_A C onto the target coring, in quotient
// coordinates.
Matrix gamma_tilde_map(const InductionDatum& d);

// Section of gamma_tilde in the category of left comodules over the target:
// a left-linear colinear s with gamma_tilde . s = id. nullopt when the
// search is infeasible; existence makes B (x)_A C faithfully coflat, which
// is the hypothesis induce_principal discharges.
std::optional<Matrix> gamma_tilde_split(const InductionDatum& d);

// Induction of principality: when the source comodule is principal and
// gamma_tilde splits, the induced comodule is again principal, and both
// principality routes are re-run on it as an independent confirmation.
// A missing hypothesis yields applicable = false rather than an error;
// the theorem failing on a valid instance throws logic_error.
struct InducedPrincipalVerdict {
  bool source_principal = false;
  bool split = false;
  bool applicable = false;
  std::optional<PrincipalVerdict> induced;  // present exactly when applicable
  bool principal = false;
};

InducedPrincipalVerdict induce_principal(const InductionDatum& d);

// The duality pairing of a Galois comodule M against a comodule w on the
// same side: f -> [phi -> f . phi] from the colinear maps w -> M to the
// right-S-linear functionals on the colinear maps M -> w, with values in
// S. Both spaces are left S-modules and the pairing is left S-linear.
struct DualityIso {
  std::vector<Matrix> into;        // basis of the colinear maps w -> M
  std::vector<Matrix> from;        // basis of the colinear maps M -> w
  std::vector<Matrix> functionals; // basis of the right-S-linear maps from -> S
  Matrix iso;                      // into coordinates -> functional coordinates
  bool bijective = false;
  bool left_linear = false;
};

// Throws invalid_argument unless the datum is principal; principality keeps
// M flat over its endomorphism ring, which the duality needs.
DualityIso duality_iso(const GaloisDatum& g, const Comodule& w);

// Duality applied twice to the endomorphisms themselves, against the naive
// double-dual evaluation. `twice` sends f to [l -> f . inverse-duality(l)],
// `evaluation` sends f to [l -> l(f)]; both are recorded as flattened maps
// from the functional space to S, one column per endomorphism basis element.
// The two agree exactly when the endomorphism ring is commutative, so agree
// is a fixture property rather than a law; bijectivity of `twice` is the law.
struct ReflexivityCheck {
  std::vector<Matrix> functionals;  // right-S-linear maps S -> S
  Matrix twice;
  Matrix evaluation;
  bool agree = false;
  bool bijective = false;
};

ReflexivityCheck reflexivity_check(const GaloisDatum& g);

// An entwining with a distinguished group-like element of the coalgebra,
// together with the mixed coring A (x) C and the base algebra as a comodule
// over it on both sides. This is the setting in which associated modules
// acquire their two classical presentations.
struct EntwinedBase {
  Entwining e;
  Vec grouplike;       // in coalgebra coordinates
  Coring coring;       // A (x) C
  Comodule right_base; // A with a -> psi(e (x) a)
  Comodule left_base;  // A with a -> (a . 1 (x) e) (x) 1
};

// Throws invalid_argument when the bow-tie fails or the element is not
// group-like.
EntwinedBase entwined_base(const Entwining& e, const Vec& grouplike);

// The four associated-module presentations attached to a left coalgebra
// comodule u and a right coalgebra comodule x (both over the ground field):
// colinear maps out of the extended comodules A (x) U and X (x) A match maps
// out of U and X alone, and the fixed subspaces match cotensor-style
// kernels. Restriction coordinate matrices and the agreement flags record
// the comparisons.
struct AssociatedModules {
  Comodule extended_left;              // A (x) U over the mixed coring
  std::vector<Matrix> left_homs;       // colinear linear maps A (x) U -> A
  std::vector<Matrix> entwined_homs;   // maps U -> A obeying the psi law
  Matrix left_restriction;             // f -> f(1 (x) -), hom coordinates
  bool left_iso = false;
  Matrix left_fixed;                   // {v : coaction(v) = g (x) v}
  Matrix left_cotensor;                // A box U inside A (x) U
  bool left_spaces_equal = false;

  Comodule extended_right;             // X (x) A over the mixed coring
  std::vector<Matrix> right_homs;      // colinear linear maps X (x) A -> A
  std::vector<Matrix> coalgebra_homs;  // colinear maps X -> A over C
  Matrix right_restriction;            // f -> f(- (x) 1), hom coordinates
  bool right_iso = false;
  Matrix right_fixed;                  // {t : coaction(t) = t (x) g}
  Matrix right_zero_space;             // kernel of the two-sided coaction law
  bool right_spaces_equal = false;
};

// u must be a left and x a right comodule over the coalgebra of b viewed as
// a coring over the scalars; anything else throws invalid_argument.
AssociatedModules associated_modules(const EntwinedBase& b, const Comodule& u,
                                     const Comodule& x);

// The extension of the comodule endomorphisms S inside the full module
// endomorphisms of a Galois comodule. theta identifies the right-S-linear
// maps from the full ring to S with the colinear retraction space out of
// M (x)_A C; unit-preserving elements on one side correspond to actual
// retractions of the coaction on the other, which ties the splitting of the
// extension to relative injectivity.
struct SplitExtensionCheck {
  EndoRing full_endo;                    // all linear endomorphisms over the base
  std::vector<Matrix> sigma_basis;       // right-S-linear maps full_endo -> S
  std::vector<Matrix> retraction_basis;  // colinear maps M (x)_A C -> M
  Matrix theta;                          // sigma coordinates -> retraction coordinates
  Matrix theta_inverse;
  bool theta_bijective = false;
  std::optional<Matrix> right_sigma;     // unit-preserving right-S-linear map
  std::optional<Matrix> bimodule_sigma;  // additionally left-S-linear
  std::optional<Matrix> retraction;      // colinear retraction of the coaction
  std::optional<Matrix> induced_retraction;  // theta applied to right_sigma
  std::optional<Matrix> recovered_sigma;     // theta inverse of retraction
  bool matches_injectivity = false;  // right_sigma and retraction exist together
  bool units_correspond = false;     // the two derived witnesses pass their laws
};

// Throws invalid_argument unless the datum is Galois.
SplitExtensionCheck split_extension_check(const GaloisDatum& g);

// Laws satisfied by the inverse of the canonical map on a Galois datum,
// verified on full bases: "evaluation" (feeding the inverse back through
// coaction and evaluation returns the argument), "carrier" (the inverse
// absorbs functional evaluation on the comatrix carrier), "operator" (the
// same law for module endomorphisms over the endomorphism ring). Returns
// the violated names; empty means all hold. Throws invalid_argument unless
// the datum is Galois.
std::vector<std::string> check_canonical_inverse(const GaloisDatum& g);

// Sufficient conditions for M to be faithfully flat over its endomorphism
// ring, evaluated in order: principality; a projectivity section plus a
// unit-preserving left-S-linear map from the full endomorphism ring; a
// bimodule splitting of the endomorphism extension. Whenever a splitting
// route applies, the adjunction unit at X = S is verified bijective and
// inverted through the explicit formula built from the dual basis and the
// splitting.
struct FlatnessVerdict {
  bool galois = false;
  bool principal_route = false;
  bool section_route = false;
  bool split_route = false;
  bool certified = false;
  std::string route;  // first route that applies, or "uncertified"
  std::optional<Matrix> nu;  // unit of the adjunction at X = S
  bool nu_bijective = false;
  bool nu_formula_inverts = false;
};

FlatnessVerdict faithful_flatness_verdict(const GaloisDatum& g);

// Finite generation and projectivity over S of the colinear maps from a
// left comodule v into the dual of a Galois comodule. Two hypothesis routes
// are tried: an equivariant section of the dual action (plus certified
// faithful flatness), or a bimodule splitting of the endomorphism extension
// (plus projectivity of the dual over S and of the coring over the base).
// When neither applies the verdict is not-applicable rather than negative.
struct FgpVerdict {
  bool applicable = false;
  std::string route;          // "equivariant-section", "split-extension", "none"
  std::vector<Matrix> homs;   // basis of the colinear maps v -> dual
  std::optional<DualBasis> dual_basis;  // over S, when the search succeeds
  bool fgp = false;
};

// v must be a left comodule over the same coring, finitely generated
// projective over the base; otherwise invalid_argument.
FgpVerdict fgp_associated_check(const GaloisDatum& g, const Comodule& v);

}  // namespace forge
