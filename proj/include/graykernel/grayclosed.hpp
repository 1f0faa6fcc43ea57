#pragma once

#include "graykernel/cubical.hpp"

namespace gk {

// ---------------------------------------------------------------------------
// The hom adjunction n: L(X⊗L, M) ≅ [X, L(L,M)] for V = Gray, on all three
// cell levels. XL is the materialized X⊗L, homLM the materialized [L,M].

StrictFunctor curry(const StrictFunctor& F, const GrayProductView& XL, const Hom2& homLM);
StrictFunctor uncurry(const StrictFunctor& G, const GrayProductView& XL, const Hom2& homLM);
PseudoNat curry_cells(const PseudoNat& s, const GrayProductView& XL, const Hom2& homLM);
PseudoNat uncurry_cells(const PseudoNat& s, const GrayProductView& XL, const Hom2& homLM);
Modification curry_cells(const Modification& m, const GrayProductView& XL, const Hom2& homLM);
Modification uncurry_cells(const Modification& m, const GrayProductView& XL, const Hom2& homLM);

// n as a strict functor of 2-categories [X⊗L, M] → [X, [L,M]] (homXL_M and
// homX_LM materialized); n_inverse goes the other way.
StrictFunctor n_functor(const GrayProductView& XL, const Hom2& homXL_M, const Hom2& homLM,
                        const Hom2& homX_LM);
StrictFunctor n_inverse_functor(const GrayProductView& XL, const Hom2& homXL_M,
                                const Hom2& homLM, const Hom2& homX_LM);

// hom functors [A,h]: [A,B] → [A,C] (postcomposition with h: B→C) and
// [k,C]: [B,C] → [A,C] (precomposition with k: A→B)
StrictFunctor hom_postcompose(const StrictFunctor& h, const Hom2& src, const Hom2& dst);
StrictFunctor hom_precompose(const StrictFunctor& k, const Hom2& src, const Hom2& dst);

// ---------------------------------------------------------------------------
// The composition law M_Gray and the Gray-functor Ten.

// m_gray: [Y,Z]⊗[X,Y] → [X,Z]; P is the materialized homYZ.cat ⊗ homXY.cat.
StrictFunctor m_gray(const Hom2& homYZ, const Hom2& homXY, const Hom2& homXZ,
                     const GrayProductView& P);

// structured Ten actions (no materialization of the codomain hom needed)
struct TenAction {
  std::shared_ptr<const Hom2> homA;  // [X,X']
  std::shared_ptr<const Hom2> homB;  // [Y,Y']
  std::shared_ptr<const GrayProductView> XY, XpYp;

  StrictFunctor obj(const StrictFunctor& F, const StrictFunctor& G) const;
  PseudoNat one_left(const PseudoNat& theta, const StrictFunctor& G) const;
  PseudoNat one_right(const StrictFunctor& F, const PseudoNat& iota) const;
  Modification two_left(const Modification& m, const StrictFunctor& G) const;
  Modification two_right(const StrictFunctor& F, const Modification& m) const;
  Modification sigma(const PseudoNat& theta, const PseudoNat& iota) const;
};

// Ten as a strict functor [X,X']⊗[Y,Y'] → [X⊗Y, X'⊗Y']; P is the Gray product
// of the homs, homTen the materialized codomain.
StrictFunctor ten_functor(const TenAction& act, const GrayProductView& P, const Hom2& homTen);

// ---------------------------------------------------------------------------
// Unit and counit of the tensor adjunction −⊗L ⊣ [L,−].

// η_X^L: X → [L, X⊗L]
StrictFunctor tensor_unit(const GrayProductView& XL, const Hom2& homL_XL);
// ε_M^L: [L,M]⊗L → M; homLM_L is the materialized [L,M]⊗L
StrictFunctor tensor_counit(const Hom2& homLM, const GrayProductView& homLM_L);

// ---------------------------------------------------------------------------
// Executable verifiers. Each returns an empty report iff the two sides agree
// on every cell of the (finite) domain.

ValidationReport compare_functors(const StrictFunctor& lhs, const StrictFunctor& rhs,
                                  const std::string& label);

// First Transformation Lemma: n L(α,1) M_L (1 ⊗ (X⊗−)) = [1,M_L] Ten (n⊗n)
// as functors [X⊗M,N] ⊗ [Y⊗L,M] → [X⊗Y, [L,N]].
std::pair<StrictFunctor, StrictFunctor> transformation_lemma_1_sides(
    const std::shared_ptr<const TwoCat>& X, const std::shared_ptr<const TwoCat>& Y,
    const std::shared_ptr<const TwoCat>& L, const std::shared_ptr<const TwoCat>& M,
    const std::shared_ptr<const TwoCat>& N);
ValidationReport verify_transformation_lemma_1(
    const std::shared_ptr<const TwoCat>& X, const std::shared_ptr<const TwoCat>& Y,
    const std::shared_ptr<const TwoCat>& L, const std::shared_ptr<const TwoCat>& M,
    const std::shared_ptr<const TwoCat>& N);

// Second Transformation Lemma: n M_L (1 ⊗ (X⊗−)) = M_V (L(−,N) ⊗ n) c
// as functors [X⊗M,N] ⊗ [L,M] → [X, [L,N]].
std::pair<StrictFunctor, StrictFunctor> transformation_lemma_2_sides(
    const std::shared_ptr<const TwoCat>& X, const std::shared_ptr<const TwoCat>& L,
    const std::shared_ptr<const TwoCat>& M, const std::shared_ptr<const TwoCat>& N);
ValidationReport verify_transformation_lemma_2(
    const std::shared_ptr<const TwoCat>& X, const std::shared_ptr<const TwoCat>& L,
    const std::shared_ptr<const TwoCat>& M, const std::shared_ptr<const TwoCat>& N);

// pentagon for α/a and triangle for r/λ on ((W⊗X)⊗Y)⊗L resp. X⊗(I⊗L)
ValidationReport verify_pentagon_triangle(const std::shared_ptr<const TwoCat>& W,
                                          const std::shared_ptr<const TwoCat>& X,
                                          const std::shared_ptr<const TwoCat>& Y,
                                          const std::shared_ptr<const TwoCat>& L);

// M_L = L(L, ε(1⊗ε)α) η  (cellwise, as curry of the triple evaluation)
ValidationReport verify_ml_identification(const std::shared_ptr<const TwoCat>& L,
                                          const std::shared_ptr<const TwoCat>& M,
                                          const std::shared_ptr<const TwoCat>& N);

}  // namespace gk
