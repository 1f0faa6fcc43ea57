#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graykernel/kanmonad.hpp"

using namespace gk;

TEST_CASE("gray category zoo validates") {
  auto P1 = graycat_one_object();
  CHECK(validate_graycategory(*P1).ok());
  auto P2 = graycat_two_object(zoo_walking_arrow());
  CHECK(validate_graycategory(*P2).ok());
}

TEST_CASE("T of the one-object terminal category is a relabeling") {
  auto P = graycat_one_object();
  ObFamily A{{zoo_walking_2cell()}};
  KanSetup s(P, A);
  CHECK(s.TA().family.values[0]->objects().size() == A.values[0]->objects().size());
  CHECK(s.TA().family.values[0]->ones().size() == A.values[0]->ones().size());
  CHECK(s.TA().family.values[0]->twos().size() == A.values[0]->twos().size());
  CHECK(s.check_monad_axioms().ok());
}

TEST_CASE("T of the empty family is empty") {
  auto P = graycat_one_object();
  ObFamily A{{zoo_empty()}};
  KanSetup s(P, A);
  CHECK(s.TA().family.values[0]->objects().empty());
}

TEST_CASE("summand counting for the two-object walking-arrow P") {
  auto P = graycat_two_object(zoo_walking_arrow());
  ObFamily A{{zoo_walking_arrow(), zoo_walking_2cell()}};
  KanSetup s(P, A);
  // (TA)(q) = hom(p,q)⊗A(p) ⊔ hom(q,q)⊗A(q)
  auto wa = zoo_walking_arrow();
  auto gp1 = gray_product(P->hom(0, 1), A.values[0]);
  auto gp2 = gray_product(P->hom(1, 1), A.values[1]);
  CHECK(s.TA().family.values[1]->objects().size() ==
        gp1->cat->objects().size() + gp2->cat->objects().size());
  CHECK(s.TA().family.values[1]->ones().size() ==
        gp1->cat->ones().size() + gp2->cat->ones().size());
  // (TA)(p) = hom(p,p)⊗A(p)  (the q→p hom is empty)
  CHECK(s.TA().family.values[0]->objects().size() == A.values[0]->objects().size());
  (void)wa;
}

TEST_CASE("unit lands in normal form and is natural") {
  auto P = graycat_two_object(zoo_walking_arrow());
  ObFamily A{{zoo_walking_arrow(), zoo_walking_2cell()}};
  KanSetup s(P, A);
  for (int q = 0; q < 2; ++q) {
    auto eta = s.unit_component(q);
    CHECK(validate_strict_functor(eta).ok());
  }
  // naturality of η against a sampled transformation A ⇒ A
  const auto& AQ = *A.values[0];
  auto idF = identity_functor(A.values[0]);
  auto nats = enumerate_pseudonats(idF, idF);
  for (const auto& t : nats) {
    FamNat fam{t, identity_pseudonat(identity_functor(A.values[1]))};
    FamFunctor idfam = fam_identity(A);
    auto Tt = s.T_twocell(fam, s.TA(), s.TA());
    // η ∘ t = T(t) ∘ η as pseudonats whiskered: components match cellwise
    for (int q = 0; q < 2; ++q) {
      auto lhs = whisker_functor_post(s.unit_component(q), fam[q]);
      auto rhs = whisker_functor_pre(Tt[q], s.unit_component(q));
      CHECK(lhs == rhs);
    }
    (void)idfam;
  }
  (void)AQ;
}

TEST_CASE("monad axioms on the acceptance instance") {
  auto P = graycat_two_object(zoo_walking_arrow());
  ObFamily A{{zoo_walking_arrow(), zoo_walking_2cell()}};
  KanSetup s(P, A);
  CHECK(s.check_monad_axioms().ok());
}

TEST_CASE("algebras and Gray functors: bijection at desk scale") {
  auto P = graycat_two_object(zoo_walking_arrow());
  ObFamily A{{zoo_walking_arrow(), zoo_walking_arrow()}};
  auto setup = std::make_shared<KanSetup>(P, A);
  auto algebras = enumerate_talgebras(setup);
  auto functors = enumerate_grayfunctors(P, A);
  CHECK(!algebras.empty());
  CHECK(algebras.size() == functors.size());
  // the transform is a bijection onto the enumerated functors
  std::vector<bool> hit(functors.size(), false);
  for (const auto& alg : algebras) {
    auto gf = algebra_to_grayfunctor(alg);
    CHECK(validate_grayfunctor(gf).ok());
    bool found = false;
    for (size_t i = 0; i < functors.size(); ++i) {
      bool eq = true;
      for (auto& [k, v] : gf.hom_functors)
        if (!(functors[i].hom_functors.at(k).on_obj == v.on_obj &&
              functors[i].hom_functors.at(k).on_one == v.on_one &&
              functors[i].hom_functors.at(k).on_two == v.on_two))
          eq = false;
      if (eq) {
        CHECK(!hit[i]);
        hit[i] = true;
        found = true;
        break;
      }
    }
    CHECK(found);
    // round trip
    auto back = grayfunctor_to_algebra(gf, setup);
    for (int q = 0; q < 2; ++q) CHECK(back.a[q] == alg.a[q]);
  }
  for (bool h : hit) CHECK(h);
}

TEST_CASE("algebra cells: identity passes, planted violation detected") {
  auto P = graycat_two_object(zoo_walking_arrow());
  ObFamily A{{zoo_walking_arrow(), zoo_walking_arrow()}};
  auto setup = std::make_shared<KanSetup>(P, A);
  auto algebras = enumerate_talgebras(setup);
  REQUIRE(!algebras.empty());
  const auto& alg = algebras.front();
  auto gf = algebra_to_grayfunctor(alg);
  auto idc = fam_identity(A);
  CHECK(check_algebra_onecell(alg, alg, idc).ok());
  CHECK(check_graynat(gf, gf, idc).ok());
  // identity 2-cell level
  FamNat idn = fam_identity_nat(idc);
  CHECK(check_algebra_twocell(alg, alg, idc, idc, idn).ok());
  CHECK(check_em_twocell(gf, gf, idc, idc, idn).ok());
  FamMod idm = fam_identity_mod(idn);
  CHECK(check_algebra_threecell(alg, alg, idn, idn, idm).ok());
  CHECK(check_em_threecell(gf, gf, idn, idn, idm).ok());
  // plant: sweep all endo families over all algebra pairs; the two conditions
  // must agree everywhere and at least one family must fail.
  auto endos0 = enumerate_strict_functors(A.values[0], A.values[0]);
  auto endos1 = enumerate_strict_functors(A.values[1], A.values[1]);
  bool planted = false;
  for (const auto& algx : algebras)
    for (const auto& algy : algebras) {
      auto gx = algebra_to_grayfunctor(algx);
      auto gy = algebra_to_grayfunctor(algy);
      for (const auto& e0 : endos0)
        for (const auto& e1 : endos1) {
          FamFunctor f{e0, e1};
          auto rep1 = check_algebra_onecell(algx, algy, f);
          auto rep2 = check_graynat(gx, gy, f);
          CHECK(rep1.ok() == rep2.ok());
          if (!rep1.ok()) planted = true;
        }
    }
  CHECK(planted);
}

TEST_CASE("algebra axioms equivalent to functor axioms (plant-and-detect)") {
  auto P = graycat_two_object(zoo_walking_arrow());
  ObFamily A{{zoo_walking_arrow(), zoo_walking_arrow()}};
  auto setup = std::make_shared<KanSetup>(P, A);
  // sweep all unit-compatible candidate families; algebra validity must match
  // Gray-functor validity of the transform
  const auto& s = *setup;
  std::vector<std::vector<StrictFunctor>> cands(2);
  for (int q = 0; q < 2; ++q)
    cands[q] = enumerate_strict_functors(s.TA().family.values[q], s.A().values[q]);
  int mismatches = 0, bad = 0, total = 0;
  for (size_t i = 0; i < cands[0].size(); ++i)
    for (size_t j = 0; j < cands[1].size(); ++j) {
      if ((i + j) % 3 != 0) continue;  // deterministic subsample
      TAlgebra alg{setup, {cands[0][i], cands[1][j]}};
      bool alg_ok = validate_talgebra(alg).ok();
      auto gf = algebra_to_grayfunctor(alg);
      bool gf_ok = validate_grayfunctor(gf).ok();
      if (alg_ok != gf_ok) ++mismatches;
      if (!alg_ok) ++bad;
      ++total;
    }
  CHECK(mismatches == 0);
  CHECK(bad > 0);  // the sweep does contain nonalgebras
  CHECK(total > 0);
}
