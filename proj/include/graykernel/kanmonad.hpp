#pragma once

#include "graykernel/grayclosed.hpp"

namespace gk {

// A finitely presented Gray-enriched category: hom 2-categories with
// composition laws given as strict functors out of Gray products.
struct GrayCategory {
  std::vector<std::string> objects;
  std::map<std::pair<int, int>, std::shared_ptr<const TwoCat>> homs;
  // comp_dom[(P,Q,R)] = hom(Q,R) ⊗ hom(P,Q); comp[(P,Q,R)] out of its cat
  std::map<std::tuple<int, int, int>, std::shared_ptr<const GrayProductView>> comp_dom;
  std::map<std::tuple<int, int, int>, StrictFunctor> comp;
  std::vector<int> units;  // object j_P of hom(P,P)

  const std::shared_ptr<const TwoCat>& hom(int P, int Q) const { return homs.at({P, Q}); }
  int size() const { return static_cast<int>(objects.size()); }
};

ValidationReport validate_graycategory(const GrayCategory& P);

// zoo: the one-object Gray-category with terminal hom, and the two-object
// Gray-category with hom(p,q) = H, terminal endo-homs, empty hom(q,p).
std::shared_ptr<const GrayCategory> graycat_one_object();
std::shared_ptr<const GrayCategory> graycat_two_object(const std::shared_ptr<const TwoCat>& H);

// A functor obP → Gray identified with its family of values.
struct ObFamily {
  std::vector<std::shared_ptr<const TwoCat>> values;
};

// cells of the functor Gray-category [obP, Gray]: families per object of P
using FamFunctor = std::vector<StrictFunctor>;
using FamNat = std::vector<PseudoNat>;
using FamMod = std::vector<Modification>;

FamFunctor fam_identity(const ObFamily& A);
FamFunctor fam_compose(const FamFunctor& g, const FamFunctor& f);
FamNat fam_identity_nat(const FamFunctor& f);
FamNat fam_hcompose(const FamNat& t, const FamNat& s);
FamMod fam_identity_mod(const FamNat& t);
FamMod fam_vcompose(const FamMod& b, const FamMod& a);
FamMod fam_hcompose_mod(const FamMod& b, const FamMod& a);
// M_K whiskers: precompose by an object-level 1-cell family u / postcompose
FamNat fam_whisker_pre(const FamNat& t, const FamFunctor& u);
FamNat fam_whisker_post(const FamFunctor& u, const FamNat& t);
FamMod fam_whisker_pre(const FamMod& m, const FamFunctor& u);
FamMod fam_whisker_post(const FamFunctor& u, const FamMod& m);
// M_K(Σ_{f,g}) for 1-cell families f: u⇒u' in K(B,C), g: v⇒v' in K(A,B)
FamMod fam_sigma(const FamNat& f, const FamNat& g);
FamNat fam_invert(const FamNat& t);
FamMod fam_invert(const FamMod& m);

// tagged disjoint union of 2-categories with offset bookkeeping
struct Coproduct {
  std::shared_ptr<const TwoCat> cat;
  std::vector<int> obj_base, one_base, two_base;  // per summand
  std::vector<std::shared_ptr<const TwoCat>> summands;

  int glob_obj(int s, int local) const { return obj_base[s] + local; }
  int glob_one(int s, int local) const { return one_base[s] + local; }
  int glob_two(int s, int local) const { return two_base[s] + local; }
  std::pair<int, int> loc_obj(int g) const;
  std::pair<int, int> loc_one(int g) const;
  std::pair<int, int> loc_two(int g) const;
};
Coproduct coproduct_twocat(const std::vector<std::shared_ptr<const TwoCat>>& parts,
                           const std::string& name);

// (TA)(Q) = ⊔_P hom(P,Q) ⊗ A(P), with the summand structure retained.
struct TValue {
  Coproduct co;  // summand s = gray product view below
  std::vector<std::shared_ptr<const GrayProductView>> summands;
};

// one application of T to a family
struct TFam {
  ObFamily family;            // values (TA)(Q) = co.cat per Q
  std::vector<TValue> views;  // per Q
};

class KanSetup {
 public:
  KanSetup(std::shared_ptr<const GrayCategory> P, ObFamily A);

  const GrayCategory& P() const { return *P_; }
  const ObFamily& A() const { return A_; }
  const TFam& TA() const { return TA_; }
  const TFam& TTA() const;   // built lazily
  const TFam& TTTA() const;  // built lazily
  const TFam& T4A() const;   // built lazily

  // η_{A,Q}: A(Q) → (TA)(Q) and μ_{A,Q}: (TTA)(Q) → (TA)(Q)
  StrictFunctor unit_component(int Q) const;
  StrictFunctor mult_component(int Q) const;
  // η at the family TA (i.e. (ηT)_A) and T(η_A), T(μ_A), μ at TA
  StrictFunctor unit_at_TA(int Q) const;
  StrictFunctor unit_at_TTA(int Q) const;
  StrictFunctor T_of_unit(int Q) const;
  StrictFunctor mult_at_TA(int Q) const;
  StrictFunctor mult_at_TTA(int Q) const;
  StrictFunctor T_of_mult(int Q) const;

  // T action on cells of [obP, Gray]
  FamFunctor T_onecell(const FamFunctor& f, const ObFamily& domA, const TFam& Tdom,
                       const TFam& Tcod) const;
  FamNat T_twocell(const FamNat& t, const TFam& Tdom, const TFam& Tcod) const;
  FamMod T_threecell(const FamMod& m, const TFam& Tdom, const TFam& Tcod) const;

  ValidationReport check_monad_axioms() const;

  std::shared_ptr<const GrayCategory> P_;
  ObFamily A_;
  TFam TA_;
  mutable std::optional<TFam> TTA_, TTTA_, T4A_;
  mutable std::map<std::pair<int, int>, StrictFunctor> mult_cache_;

  StrictFunctor unit_generic(const ObFamily& fam, const TFam& tfam, int Q) const;
  StrictFunctor mult_generic(const TFam& lower, const TFam& upper, int Q, int level) const;
};

TFam apply_T(const GrayCategory& P, const ObFamily& A);

// a T-algebra on the fixed setup: a_Q: (TA)(Q) → A(Q)
struct TAlgebra {
  std::shared_ptr<KanSetup> setup;
  FamFunctor a;  // per Q, dom = (TA)(Q)

  StrictFunctor component(int P, int Q) const;  // a_{PQ}: hom(P,Q)⊗A(P) → A(Q)
};

ValidationReport validate_talgebra(const TAlgebra& alg);

// the transform: a Gray-functor P → Gray with values A
struct GrayFunctor {
  std::shared_ptr<const GrayCategory> P;
  ObFamily values;
  std::map<std::pair<int, int>, std::shared_ptr<const Hom2>> hom_ap_aq;  // [A(P),A(Q)]
  std::map<std::pair<int, int>, StrictFunctor> hom_functors;             // A_{PQ}
};

ValidationReport validate_grayfunctor(const GrayFunctor& gf);

GrayFunctor algebra_to_grayfunctor(const TAlgebra& alg);
TAlgebra grayfunctor_to_algebra(const GrayFunctor& gf, std::shared_ptr<KanSetup> setup);

// algebra cells and their functor-Gray-category transforms
ValidationReport check_algebra_onecell(const TAlgebra& xalg, const TAlgebra& yalg,
                                       const FamFunctor& f);
ValidationReport check_graynat(const GrayFunctor& X, const GrayFunctor& Y, const FamFunctor& f);
ValidationReport check_algebra_twocell(const TAlgebra& xalg, const TAlgebra& yalg,
                                       const FamFunctor& f, const FamFunctor& g,
                                       const FamNat& al);
ValidationReport check_em_twocell(const GrayFunctor& X, const GrayFunctor& Y,
                                  const FamFunctor& f, const FamFunctor& g, const FamNat& al);
ValidationReport check_algebra_threecell(const TAlgebra& xalg, const TAlgebra& yalg,
                                         const FamNat& al, const FamNat& be, const FamMod& Ga);
ValidationReport check_em_threecell(const GrayFunctor& X, const GrayFunctor& Y,
                                    const FamNat& al, const FamNat& be, const FamMod& Ga);

// desk-scale strict monadicity: full enumerations over the fixed setup
std::vector<TAlgebra> enumerate_talgebras(std::shared_ptr<KanSetup> setup);
std::vector<GrayFunctor> enumerate_grayfunctors(std::shared_ptr<const GrayCategory> P,
                                                const ObFamily& A);

}  // namespace gk
