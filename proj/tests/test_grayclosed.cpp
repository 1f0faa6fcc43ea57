#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graykernel/grayclosed.hpp"

using namespace gk;

TEST_CASE("curry/uncurry round trip on an enumerated family") {
  auto wa = zoo_walking_arrow();
  auto d1 = zoo_discrete(1);
  auto XL = gray_product(wa, wa);
  auto homLM = internal_hom(wa, wa);
  auto family = enumerate_strict_functors(XL->cat, wa);
  REQUIRE(!family.empty());
  for (const auto& F : family) {
    auto G = curry(F, *XL, *homLM);
    CHECK(validate_strict_functor(G).ok());
    auto F2 = uncurry(G, *XL, *homLM);
    CHECK(F2 == F);
  }
  // curry∘uncurry = id on [X,[L,M]]
  auto homX_LM = internal_hom(wa, homLM->cat);
  for (const auto& G : homX_LM->objects) {
    auto F = uncurry(G, *XL, *homLM);
    auto G2 = curry(F, *XL, *homLM);
    CHECK(G2 == G);
  }
  (void)d1;
}

TEST_CASE("n_functor is an isomorphism of 2-categories") {
  auto wa = zoo_walking_arrow();
  auto XL = gray_product(wa, wa);
  auto homLM = internal_hom(wa, wa);
  auto homXL_M = internal_hom(XL->cat, wa);
  auto homX_LM = internal_hom(wa, homLM->cat);
  auto nf = n_functor(*XL, *homXL_M, *homLM, *homX_LM);
  CHECK(validate_strict_functor(nf).ok());
  auto ni = n_inverse_functor(*XL, *homXL_M, *homLM, *homX_LM);
  CHECK(validate_strict_functor(ni).ok());
  CHECK(compose_functors(ni, nf) == identity_functor(homXL_M->cat));
  CHECK(compose_functors(nf, ni) == identity_functor(homX_LM->cat));
}

TEST_CASE("curry naturality cell is the image of the interchanger") {
  auto wa = zoo_walking_arrow();
  auto XL = gray_product(wa, wa);
  auto homLM = internal_hom(wa, wa);
  auto family = enumerate_strict_functors(XL->cat, wa);
  int f = wa->one_index("f");
  for (const auto& F : family) {
    auto G = curry(F, *XL, *homLM);
    // naturality cell of G(f) at g equals F(Σ_{f,g})
    const auto& nat = homLM->ones[G.one(f)];
    for (int g = 0; g < (int)wa->ones().size(); ++g)
      CHECK(nat.nat(g) == F.two(XL->sigma_index(f, g)));
  }
}

TEST_CASE("m_gray: units, MGraySigma components, associativity sample") {
  auto wa = zoo_walking_arrow();
  auto hom = internal_hom(wa, wa);
  auto P = gray_product(hom->cat, hom->cat);
  auto ml = m_gray(*hom, *hom, *hom, *P);
  CHECK(validate_strict_functor(ml).ok());
  // m_gray(1_G, 1_F) = 1_{GF}
  for (const auto& G : hom->objects)
    for (const auto& F : hom->objects) {
      GrayWord w{hom->index_of(G), hom->index_of(F), {}};
      int o = P->obj(hom->index_of(G), hom->index_of(F));
      CHECK(ml.one(P->cat->id1(o)) == hom->cat->id1(hom->index_of(compose_functors(G, F))));
      (void)w;
    }
  // interchanger component: (M(Σ_{θ,σ}))_x = θ_{σ_x}
  for (size_t i = 0; i < hom->ones.size(); ++i)
    for (size_t j = 0; j < hom->ones.size(); ++j) {
      if (P->X->is_id1((int)i) || P->Y->is_id1((int)j)) continue;
      int img = ml.two(P->sigma_index((int)i, (int)j));
      const auto& md = hom->twos[img];
      const auto& th = hom->ones[i];
      const auto& sg = hom->ones[j];
      for (int x = 0; x < (int)wa->objects().size(); ++x)
        CHECK(md.comp(x) == th.nat(sg.comp(x)));
    }
}

TEST_CASE("m_gray associativity on a sampled triple") {
  // hom triple [Z,W]⊗([Y,Z]⊗[X,Y]) with X = Y = discrete(1), Z = W = arrow
  auto wa = zoo_walking_arrow();
  auto d1 = zoo_discrete(1);
  auto homXY = internal_hom(d1, d1);
  auto homYZ = internal_hom(d1, wa);
  auto homZW = internal_hom(wa, wa);
  auto homXZ = internal_hom(d1, wa);
  auto homYW = internal_hom(d1, wa);
  auto homXW = internal_hom(d1, wa);
  auto P_ZW_YZ = gray_product(homZW->cat, homYZ->cat);
  auto ml1 = m_gray(*homZW, *homYZ, *homYW, *P_ZW_YZ);
  auto PP = gray_product(P_ZW_YZ->cat, homXY->cat);
  auto P_YW_XY = gray_product(homYW->cat, homXY->cat);
  auto t1 = tensor_functor(ml1, identity_functor(homXY->cat), *PP, *P_YW_XY);
  auto ml2 = m_gray(*homYW, *homXY, *homXW, *P_YW_XY);
  auto lhs = compose_functors(ml2, t1);

  auto P_YZ_XY = gray_product(homYZ->cat, homXY->cat);
  auto P_ZW_rest = gray_product(homZW->cat, P_YZ_XY->cat);
  auto A = gray_assoc(P_ZW_YZ, PP, P_YZ_XY, P_ZW_rest);
  auto ml3 = m_gray(*homYZ, *homXY, *homXZ, *P_YZ_XY);
  auto P_ZW_XZ = gray_product(homZW->cat, homXZ->cat);
  auto t2 = tensor_functor(identity_functor(homZW->cat), ml3, *P_ZW_rest, *P_ZW_XZ);
  auto ml4 = m_gray(*homZW, *homXZ, *homXW, *P_ZW_XZ);
  auto rhs = compose_functors(ml4, compose_functors(t2, A.fwd));
  CHECK(compare_functors(lhs, rhs, "mgray_assoc").ok());
}

TEST_CASE("ten: objects and TenSigma components") {
  auto wa = zoo_walking_arrow();
  auto d1 = zoo_discrete(1);
  auto homA = internal_hom(d1, wa);
  auto homB = internal_hom(wa, wa);
  auto XY = gray_product(d1, wa);
  auto XpYp = gray_product(wa, wa);
  TenAction act{homA, homB, XY, XpYp};
  auto P = gray_product(homA->cat, homB->cat);
  auto homTen = internal_hom(XY->cat, XpYp->cat);
  auto T = ten_functor(act, *P, *homTen);
  CHECK(validate_strict_functor(T).ok());
  for (const auto& F : homA->objects)
    for (const auto& G : homB->objects) {
      int o = P->obj(homA->index_of(F), homB->index_of(G));
      CHECK(T.one(P->cat->id1(o)) ==
            homTen->cat->id1(homTen->index_of(tensor_functor(F, G, *XY, *XpYp))));
    }
  for (size_t i = 0; i < homA->ones.size(); ++i)
    for (size_t j = 0; j < homB->ones.size(); ++j) {
      if (P->X->is_id1((int)i) || P->Y->is_id1((int)j)) continue;
      int img = T.two(P->sigma_index((int)i, (int)j));
      const auto& md = homTen->twos[img];
      const auto& th = homA->ones[i];
      const auto& io = homB->ones[j];
      for (int x = 0; x < (int)d1->objects().size(); ++x)
        for (int y = 0; y < (int)wa->objects().size(); ++y)
          CHECK(md.comp(XY->obj(x, y)) ==
                XpYp->cell_index(XpYp->sigma(th.comp(x), io.comp(y))));
    }
}

TEST_CASE("evaluation identity (Tenhom)") {
  // acyclic-hom instance: X = discrete(2), X' = arrow, Y = discrete(1), Y' = arrow
  auto wa = zoo_walking_arrow();
  auto d1 = zoo_discrete(1);
  auto d2 = zoo_discrete(2);
  auto homA = internal_hom(d2, wa);
  auto homB = internal_hom(d1, wa);
  auto XY = gray_product(d2, d1);
  auto XpYp = gray_product(wa, wa);
  TenAction act{homA, homB, XY, XpYp};
  auto P = gray_product(homA->cat, homB->cat);
  auto homTen = internal_hom(XY->cat, XpYp->cat);
  auto T = ten_functor(act, *P, *homTen);
  CHECK(validate_strict_functor(T).ok());

  auto PXY = gray_product(P->cat, XY->cat);
  auto homTen_XY = gray_product(homTen->cat, XY->cat);
  auto evTen = tensor_counit(*homTen, *homTen_XY);
  auto lhs = compose_functors(
      evTen, tensor_functor(T, identity_functor(XY->cat), *PXY, *homTen_XY));

  auto Acat = homA->cat;
  auto Bcat = homB->cat;
  auto Ccat = XY->X;
  auto Dcat = XY->Y;
  auto CD = XY;
  auto B_CD = gray_product(Bcat, CD->cat);
  auto A1 = gray_assoc(P, PXY, B_CD, gray_product(Acat, B_CD->cat));
  auto BC = gray_product(Bcat, Ccat);
  auto BC_D = gray_product(BC->cat, Dcat);
  auto A2 = gray_assoc(BC, BC_D, CD, B_CD);
  auto A_BC_D = gray_product(Acat, BC_D->cat);
  auto s1 = tensor_functor(identity_functor(Acat), A2.bwd, *A1.X_YZ, *A_BC_D);
  auto CB = gray_product(Ccat, Bcat);
  auto cBC = gray_symmetry(*BC, *CB);
  auto CB_D = gray_product(CB->cat, Dcat);
  auto s2in = tensor_functor(cBC, identity_functor(Dcat), *BC_D, *CB_D);
  auto A_CB_D = gray_product(Acat, CB_D->cat);
  auto s2 = tensor_functor(identity_functor(Acat), s2in, *A_BC_D, *A_CB_D);
  auto BD = gray_product(Bcat, Dcat);
  auto C_BD = gray_product(Ccat, BD->cat);
  auto A3 = gray_assoc(CB, CB_D, BD, C_BD);
  auto A_C_BD = gray_product(Acat, C_BD->cat);
  auto s3 = tensor_functor(identity_functor(Acat), A3.fwd, *A_CB_D, *A_C_BD);
  auto AC = gray_product(Acat, Ccat);
  auto AC_BD = gray_product(AC->cat, BD->cat);
  auto A4 = gray_assoc(AC, AC_BD, C_BD, A_C_BD);
  auto m4 = compose_functors(
      A4.bwd, compose_functors(s3, compose_functors(s2, compose_functors(s1, A1.fwd))));
  auto eA = tensor_counit(*homA, *AC);
  auto eB = tensor_counit(*homB, *BD);
  auto rhs = compose_functors(tensor_functor(eA, eB, *AC_BD, *XpYp), m4);
  CHECK(compare_functors(lhs, rhs, "tenhom").ok());
}

TEST_CASE("tensor adjunction triangle identities") {
  auto wa = zoo_walking_arrow();
  auto d2 = zoo_discrete(2);
  auto XL = gray_product(d2, wa);  // X = discrete(2), L = wa
  auto homL_XL = internal_hom(wa, XL->cat);
  auto eta = tensor_unit(*XL, *homL_XL);
  CHECK(validate_strict_functor(eta).ok());
  // triangle 1: ε_{X⊗L} ∘ (η_X⊗1_L) = 1_{X⊗L}
  auto homL_XL_L = gray_product(homL_XL->cat, wa);
  auto eps = tensor_counit(*homL_XL, *homL_XL_L);
  auto t = tensor_functor(eta, identity_functor(wa), *XL, *homL_XL_L);
  CHECK(compare_functors(compose_functors(eps, t), identity_functor(XL->cat), "triangle1").ok());
  // triangle 2: [L, ε_M] ∘ η_{[L,M]} = 1_{[L,M]} with M = X⊗L
  auto homLM = homL_XL;
  auto homLM_L = homL_XL_L;
  auto epsM = eps;
  auto homL_LML = internal_hom(wa, homLM_L->cat);
  auto eta2 = tensor_unit(*homLM_L, *homL_LML);
  auto post = hom_postcompose(epsM, *homL_LML, *homLM);
  CHECK(compare_functors(compose_functors(post, eta2), identity_functor(homLM->cat), "triangle2").ok());
}

TEST_CASE("pentagon and triangle for the tensor") {
  auto wa = zoo_walking_arrow();
  auto d1 = zoo_discrete(1);
  auto d2 = zoo_discrete(2);
  CHECK(verify_pentagon_triangle(d1, d1, d1, d1).ok());
  CHECK(verify_pentagon_triangle(wa, d2, wa, d1).ok());
}

TEST_CASE("M_L identification") {
  auto wa = zoo_walking_arrow();
  auto d1 = zoo_discrete(1);
  CHECK(verify_ml_identification(d1, wa, wa).ok());
  CHECK(verify_ml_identification(wa, wa, d1).ok());
}

TEST_CASE("transformation lemmas: trivial instances") {
  auto d1 = zoo_discrete(1);
  CHECK(verify_transformation_lemma_1(d1, d1, d1, d1, d1).ok());
  CHECK(verify_transformation_lemma_2(d1, d1, d1, d1).ok());
}
