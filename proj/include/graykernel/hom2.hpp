#pragma once

#include "graykernel/twocat.hpp"

namespace gk {

// A strict functor between finite 2-categories, stored as total assignment
// tables on objects, 1-cells, and 2-cells.
struct StrictFunctor {
  std::shared_ptr<const TwoCat> dom, cod;
  std::vector<int> on_obj, on_one, on_two;

  int obj(int o) const { return on_obj[o]; }
  int one(int f) const { return on_one[f]; }
  int two(int a) const { return on_two[a]; }

  bool operator==(const StrictFunctor& other) const {
    return dom == other.dom && cod == other.cod && on_obj == other.on_obj &&
           on_one == other.on_one && on_two == other.on_two;
  }
  bool operator<(const StrictFunctor& other) const {
    return std::tie(on_obj, on_one, on_two) <
           std::tie(other.on_obj, other.on_one, other.on_two);
  }
};

StrictFunctor identity_functor(const std::shared_ptr<const TwoCat>& X);
StrictFunctor compose_functors(const StrictFunctor& g, const StrictFunctor& f);  // g∘f
// constant functor at an object (everything to identities)
StrictFunctor constant_functor(const std::shared_ptr<const TwoCat>& X,
                               const std::shared_ptr<const TwoCat>& Y, int obj);

ValidationReport validate_strict_functor(const StrictFunctor& F);

// θ: F ⇒ G. components[x]: 1-cell Fx→Gx in cod; nat2[f]: invertible 2-cell
// θ_{x'} ∗ F(f) ⇒ G(f) ∗ θ_x, stored for every 1-cell f of dom.
struct PseudoNat {
  StrictFunctor dom_f, cod_f;
  std::vector<int> components;  // per object of dom cat
  std::vector<int> nat2;        // per 1-cell of dom cat

  const std::shared_ptr<const TwoCat>& X() const { return dom_f.dom; }
  const std::shared_ptr<const TwoCat>& Y() const { return dom_f.cod; }
  int comp(int x) const { return components[x]; }
  int nat(int f) const { return nat2[f]; }

  bool operator==(const PseudoNat& o) const {
    return dom_f == o.dom_f && cod_f == o.cod_f && components == o.components && nat2 == o.nat2;
  }
  bool operator<(const PseudoNat& o) const {
    return std::tie(dom_f, cod_f, components, nat2) <
           std::tie(o.dom_f, o.cod_f, o.components, o.nat2);
  }
};

// Γ: θ ⇒ θ'. components[x]: 2-cell θ_x ⇒ θ'_x.
struct Modification {
  PseudoNat dom_t, cod_t;
  std::vector<int> components;

  int comp(int x) const { return components[x]; }
  bool operator==(const Modification& o) const {
    return dom_t == o.dom_t && cod_t == o.cod_t && components == o.components;
  }
  bool operator<(const Modification& o) const {
    return std::tie(dom_t, cod_t, components) < std::tie(o.dom_t, o.cod_t, o.components);
  }
};

ValidationReport validate_pseudonat(const PseudoNat& t);
ValidationReport validate_modification(const Modification& m);

PseudoNat identity_pseudonat(const StrictFunctor& F);
Modification identity_modification(const PseudoNat& t);

// τ∗σ for σ: F⇒G, τ: G⇒H.
PseudoNat hcompose_pseudonat(const PseudoNat& tau, const PseudoNat& sigma);
// componentwise vertical / horizontal composite of modifications
Modification vcompose_mod(const Modification& b, const Modification& a);
Modification hcompose_mod(const Modification& b, const Modification& a);

// G^∗θ = θ∘G (precompose: components θ_{Gx}) and F_∗θ = F∘θ (postcompose:
// components F(θ_x)). These are the whiskers used by the composition law of
// the internal-hom 2-category structure.
PseudoNat whisker_functor_pre(const PseudoNat& theta, const StrictFunctor& G);
PseudoNat whisker_functor_post(const StrictFunctor& F, const PseudoNat& theta);
Modification whisker_functor_pre(const Modification& m, const StrictFunctor& G);
Modification whisker_functor_post(const StrictFunctor& F, const Modification& m);

// Strict inverse (σ∗σ⁻¹ = 1 and σ⁻¹∗σ = 1); requires every component to have a
// strict two-sided inverse 1-cell. Identity components always qualify.
PseudoNat invert_pseudonat_strict(const PseudoNat& t);
Modification invert_modification(const Modification& m);

// An adjoint equivalence internal to a 2-category K: e ⊣ e_adj with invertible
// unit 1_A ⇒ e_adj∘e and counit e∘e_adj ⇒ 1_B.
struct AdjointEquivalence {
  std::shared_ptr<const TwoCat> K;
  int left = -1;   // e: A→B
  int right = -1;  // e_adj: B→A
  int unit = -1;   // 2-cell 1_A ⇒ e_adj∘e
  int counit = -1; // 2-cell e∘e_adj ⇒ 1_B
};

ValidationReport check_adjoint_equivalence(const AdjointEquivalence& ae);

// ---------------------------------------------------------------------------
// Materialized internal hom [X,Y].

struct Hom2 {
  std::shared_ptr<const TwoCat> cat;  // the internal hom as a 2-category
  std::shared_ptr<const TwoCat> X, Y;
  std::vector<StrictFunctor> objects;
  std::vector<PseudoNat> ones;
  std::vector<Modification> twos;

  int index_of(const StrictFunctor& F) const;
  int index_of(const PseudoNat& t) const;
  int index_of(const Modification& m) const;
};

std::vector<StrictFunctor> enumerate_strict_functors(const std::shared_ptr<const TwoCat>& X,
                                                     const std::shared_ptr<const TwoCat>& Y);
std::vector<PseudoNat> enumerate_pseudonats(const StrictFunctor& F, const StrictFunctor& G);
std::vector<Modification> enumerate_modifications(const PseudoNat& s, const PseudoNat& t);

std::shared_ptr<const Hom2> internal_hom(const std::shared_ptr<const TwoCat>& X,
                                         const std::shared_ptr<const TwoCat>& Y);

// Evaluation at an object x of X, as a strict functor [X,Y] → Y.
StrictFunctor evaluation_at(const Hom2& hom, int x);

}  // namespace gk
