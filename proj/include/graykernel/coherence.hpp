#pragma once

#include "graykernel/kanmonad.hpp"

namespace gk {

// an adjoint equivalence internal to a hom 2-category of [obP, Gray]
struct FamAdjEquiv {
  FamNat left, right;
  FamMod unit, counit;
};
ValidationReport check_fam_adjequiv(const FamAdjEquiv& ae);

FamAdjEquiv fam_identity_adjequiv(const FamNat& t);  // (t, t⁻¹, 1, 1) for strictly
                                                     // invertible t

// A pseudo T-algebra on the Kan monad of `setup`.
struct PseudoAlgebra {
  std::shared_ptr<KanSetup> setup;
  FamFunctor x;     // TA → A
  FamAdjEquiv m;    // x∘Tx ⇒ x∘μ in K(T²X,X)
  FamAdjEquiv i;    // 1 ⇒ x∘η in K(X,X)
  FamMod pi, lambda, rho;
};

PseudoAlgebra strict_pseudo_algebra(const TAlgebra& alg);

// derived 1-cell levels shared by several checkers
struct MonadCells {
  // lifts of x and the monad structure maps as composable functor families
  FamFunctor x, Tx, T2x, T3x;
  FamFunctor mu, Tmu, T2mu, mu_T, Tmu_T, mu_T2, eta, Teta, T2eta, eta_T;
};
MonadCells monad_cells(const PseudoAlgebra& pa);

ValidationReport check_pseudo_algebra(const PseudoAlgebra& pa,
                                      const std::vector<int>& axioms = {1, 2, 3, 4});
// Prop. 2: for inputs passing LAA1 and LAA4 with invertible structure, LAA2
// and LAA3 must hold; a nonempty report is a soundness alarm.
ValidationReport verify_redundancy(const PseudoAlgebra& pa);

// componentwise adjoint equivalence of 2-categories used by the transport
// generator: unit/counit with identity 1-cell components
struct FamEquivalence {
  ObFamily domv, codv;
  FamFunctor fwd;   // X(p) → Y(p)
  FamFunctor back;  // Y(p) → X(p)
  FamNat unit;      // 1_X ⇒ back∘fwd
  FamNat counit;    // fwd∘back ⇒ 1_Y
};
ValidationReport check_fam_equivalence(const FamEquivalence& e);

PseudoAlgebra transport_along_equivalence(const TAlgebra& strict_alg, const FamEquivalence& e,
                                          std::shared_ptr<KanSetup> target_setup);

// pseudo T-functors, T-transformations, T-modifications
struct PsTFunctor {
  const PseudoAlgebra* dom = nullptr;
  const PseudoAlgebra* cod = nullptr;
  FamFunctor f;    // X → Y
  FamAdjEquiv F;   // f∘x ⇒ y∘Tf in K(TX,Y)
  FamMod h, m;     // PSF1 / PSF2
};
PsTFunctor identity_pstfunctor(const PseudoAlgebra& pa);
ValidationReport check_pseudo_functor(const PsTFunctor& pf,
                                      const std::vector<int>& axioms = {1, 2, 3});

struct TTransformation {
  const PsTFunctor* dom = nullptr;
  const PsTFunctor* cod = nullptr;
  FamNat alpha;  // f ⇒ g
  FamMod A;      // (1_y Tα)∗F ⇒ G∗(α 1_x)
};
TTransformation identity_ttransformation(const PsTFunctor& pf);
ValidationReport check_t_transformation(const TTransformation& tt,
                                        const std::vector<int>& axioms = {1, 2});

struct TModification {
  const TTransformation* dom = nullptr;
  const TTransformation* cod = nullptr;
  FamMod Gamma;  // α ⇒ β
};
ValidationReport check_t_modification(const TModification& tm);

// the local 2-category structure of Ps-T-Alg (Def. 5)
TModification vcompose_tmod(const TModification& d, const TModification& g,
                            const TTransformation& mid);
TTransformation hcompose_ttrans(const TTransformation& beta, const TTransformation& alpha,
                                const PsTFunctor& composite_witness);
// raw data composite without a precomputed witness; returns (β∗α, pasted A)
std::pair<FamNat, FamMod> hcompose_ttrans_data(const TTransformation& beta,
                                               const TTransformation& alpha);
FamMod hcompose_tmod_data(const TModification& d, const TModification& g);

// ⊠ of Def. 6
PsTFunctor box_compose(const PsTFunctor& g, const PsTFunctor& f);
// g ⊠ (β,B)-side and (α,A)-side generating 1-cells
std::pair<FamNat, FamMod> box_left(const TTransformation& al, const PsTFunctor& f);
std::pair<FamNat, FamMod> box_right(const PsTFunctor& g, const TTransformation& be);
FamMod box_left_mod(const TModification& ga, const PsTFunctor& f);
FamMod box_right_mod(const PsTFunctor& g, const TModification& de);
// image of the interchanger Σ_{(α,A),(β,B)}
FamMod box_sigma(const TTransformation& al, const TTransformation& be);

}  // namespace gk
