#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graykernel/hom2.hpp"

using namespace gk;

TEST_CASE("functor enumeration counts") {
  auto wa = zoo_walking_arrow();
  auto fs = enumerate_strict_functors(wa, wa);
  CHECK(fs.size() == 3);
  for (const auto& F : fs) CHECK(validate_strict_functor(F).ok());
}

TEST_CASE("internal hom of walking arrows") {
  auto wa = zoo_walking_arrow();
  auto hom = internal_hom(wa, wa);
  CHECK(hom->objects.size() == 3);
  CHECK(hom->cat->validate().ok());
  for (const auto& F : hom->objects) CHECK(validate_pseudonat(identity_pseudonat(F)).ok());
  for (int x = 0; x < static_cast<int>(wa->objects().size()); ++x)
    CHECK(validate_strict_functor(evaluation_at(*hom, x)).ok());
}

TEST_CASE("internal hom unit and terminal laws") {
  auto d1 = zoo_discrete(1);
  auto w2 = zoo_walking_2cell();
  auto hom = internal_hom(d1, w2);
  CHECK(hom->objects.size() == w2->objects().size());
  CHECK(hom->ones.size() == w2->ones().size());
  CHECK(hom->twos.size() == w2->twos().size());
  CHECK(hom->cat->validate().ok());

  auto homT = internal_hom(w2, d1);
  CHECK(homT->objects.size() == 1);
  CHECK(homT->ones.size() == 1);
  CHECK(homT->twos.size() == 1);
}

TEST_CASE("pseudonat validation detects planted wrong entry") {
  auto w2 = zoo_walking_2cell();
  auto wi = zoo_walking_iso_2cell();
  auto fs = enumerate_strict_functors(w2, wi);
  REQUIRE(!fs.empty());
  StrictFunctor emb = fs.front();
  bool found = false;
  for (const auto& F : fs)
    if (F.one(w2->one_index("f")) == wi->one_index("f") &&
        F.one(w2->one_index("g")) == wi->one_index("g") &&
        F.two(w2->two_index("alpha")) == wi->two_index("alpha")) {
      emb = F;
      found = true;
    }
  REQUIRE(found);
  auto t = identity_pseudonat(emb);
  CHECK(validate_pseudonat(t).ok());
  PseudoNat broken = t;
  broken.nat2[w2->one_index("f")] = wi->two_index("alpha");
  auto rep = validate_pseudonat(broken);
  CHECK_FALSE(rep.ok());
  bool names_f = false;
  for (const auto& v : rep.violations())
    for (const auto& w : v.witness)
      if (w == "f") names_f = true;
  CHECK(names_f);
}

TEST_CASE("whiskers and hcompose associativity sample") {
  auto wa = zoo_walking_arrow();
  auto hom = internal_hom(wa, wa);
  for (int i = 0; i < static_cast<int>(hom->ones.size()); ++i)
    for (int j = 0; j < static_cast<int>(hom->ones.size()); ++j) {
      if (!(hom->ones[i].cod_f == hom->ones[j].dom_f)) continue;
      for (int k = 0; k < static_cast<int>(hom->ones.size()); ++k) {
        if (!(hom->ones[j].cod_f == hom->ones[k].dom_f)) continue;
        auto lhs = hcompose_pseudonat(hom->ones[k], hcompose_pseudonat(hom->ones[j], hom->ones[i]));
        auto rhs = hcompose_pseudonat(hcompose_pseudonat(hom->ones[k], hom->ones[j]), hom->ones[i]);
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("middle-four interchange holds in internal hom") {
  auto wa = zoo_walking_arrow();
  auto hom = internal_hom(wa, wa);
  CHECK(hom->cat->validate().ok());
}

TEST_CASE("adjoint equivalences") {
  auto wi = zoo_walking_iso_2cell();
  AdjointEquivalence idae{wi, wi->one_index("1_a"), wi->one_index("1_a"),
                          wi->id2(wi->one_index("1_a")), wi->id2(wi->one_index("1_a"))};
  CHECK(check_adjoint_equivalence(idae).ok());

  auto om = zoo_two_group_arrow();
  auto hom = internal_hom(om, om);
  auto idF = identity_functor(om);
  auto nats = enumerate_pseudonats(idF, idF);
  REQUIRE(nats.size() == 2);
  int e = -1;
  const auto& H = *hom->cat;
  for (const auto& t : nats)
    if (!(t == identity_pseudonat(idF))) e = hom->index_of(t);
  REQUIRE(e >= 0);
  int obj = H.one_src(e);
  REQUIRE(H.compose1(e, e) == H.id1(obj));
  AdjointEquivalence ae{hom->cat, e, e, H.id2(H.id1(obj)), H.id2(H.id1(obj))};
  CHECK(check_adjoint_equivalence(ae).ok());

  auto broken = idae;
  broken.counit = wi->two_index("alpha");
  auto rep = check_adjoint_equivalence(broken);
  CHECK_FALSE(rep.ok());
}
