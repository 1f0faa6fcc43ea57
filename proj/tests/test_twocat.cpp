#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graykernel/hom2.hpp"
#include "graykernel/twocat.hpp"

using namespace gk;

TEST_CASE("zoo categories validate") {
  for (const auto& name : standard_names()) {
    auto C = standard(name);
    auto rep = C->validate();
    INFO(name, ": ", rep.pretty());
    CHECK(rep.ok());
  }
}

TEST_CASE("zoo cell counts") {
  auto d1 = zoo_discrete(1);
  CHECK(d1->objects().size() == 1);
  CHECK(d1->ones().size() == 1);
  CHECK(d1->twos().size() == 1);

  auto wa = zoo_walking_arrow();
  CHECK(wa->objects().size() == 2);
  CHECK(wa->ones().size() == 3);
  CHECK(wa->twos().size() == 3);

  auto w2 = zoo_walking_2cell();
  CHECK(w2->objects().size() == 2);
  CHECK(w2->ones().size() == 4);
  CHECK(w2->twos().size() == 5);

  auto wi = zoo_walking_iso_2cell();
  CHECK(wi->twos().size() == 6);

  auto sq = zoo_free_square();
  CHECK(sq->objects().size() == 4);
  CHECK(sq->ones().size() == 10);
  CHECK(sq->twos().size() == 10);
}

TEST_CASE("validate detects a planted associativity break") {
  // strand f⇒g⇒h⇒k with an extra parallel cell d: f⇒k; plant (cb)⋄a = d
  // while c⋄(ba) = cba, so the triple (c,b,a) breaks associativity.
  TwoCatBuilder b("broken");
  int x = b.add_object("x"), y = b.add_object("y");
  std::vector<int> ones;
  for (auto n : {"f", "g", "h", "k"}) ones.push_back(b.add_one(n, x, y));
  int one_x = b.add_one("1_x", x, x), one_y = b.add_one("1_y", y, y);
  int f = ones[0], g = ones[1], h = ones[2], k = ones[3];
  int a = b.add_two("a", f, g);
  int bb = b.add_two("b", g, h);
  int c = b.add_two("c", h, k);
  int ba = b.add_two("ba", f, h);
  int cb = b.add_two("cb", g, k);
  int cba = b.add_two("cba", f, k);
  int d = b.add_two("d", f, k);
  std::map<int, int> id2;
  for (int ff : {f, g, h, k, one_x, one_y}) id2[ff] = b.add_two("1_" + b.one(ff).id, ff, ff);
  b.set_id1(x, one_x);
  b.set_id1(y, one_y);
  for (auto [ff, aa] : id2) b.set_id2(ff, aa);
  b.set_vcomp2(bb, a, ba);
  b.set_vcomp2(c, bb, cb);
  b.set_vcomp2(c, ba, cba);
  b.set_vcomp2(cb, a, d);  // planted; should be cba
  // identity composites
  for (int ff : {f, g, h, k}) {
    b.set_hcomp1(ff, one_x, ff);
    b.set_hcomp1(one_y, ff, ff);
  }
  b.set_hcomp1(one_x, one_x, one_x);
  b.set_hcomp1(one_y, one_y, one_y);
  for (int aa : {a, bb, c, ba, cb, cba, d, id2[f], id2[g], id2[h], id2[k]}) {
    b.set_vcomp2(aa, id2[b.two(aa).src], aa);
    b.set_vcomp2(id2[b.two(aa).tgt], aa, aa);
    b.set_hcomp2(aa, id2[one_x], aa);
    b.set_hcomp2(id2[one_y], aa, aa);
  }
  for (int ii : {id2[one_x], id2[one_y]}) {
    b.set_vcomp2(ii, ii, ii);
    b.set_hcomp2(ii, ii, ii);
  }
  auto C = b.finish();
  auto rep = C->validate();
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& v : rep.violations())
    if (v.law == "vcomp2.assoc" &&
        v.witness == std::vector<std::string>{"c", "b", "a"})
      found = true;
  CHECK(found);
}

TEST_CASE("product counts and unit") {
  auto wa = zoo_walking_arrow();
  auto p = TwoCat::product(wa, wa);
  CHECK(p->objects().size() == 4);
  CHECK(p->ones().size() == 9);
  CHECK(p->twos().size() == 9);
  CHECK(p->validate().ok());

  auto d1 = zoo_discrete(1);
  auto q = TwoCat::product(d1, wa);
  CHECK(q->objects().size() == wa->objects().size());
  CHECK(q->ones().size() == wa->ones().size());
  CHECK(q->twos().size() == wa->twos().size());
  CHECK(q->validate().ok());

  auto r = TwoCat::product(wa, zoo_discrete(2));
  CHECK(r->objects().size() == 4);
  CHECK(r->validate().ok());
}

TEST_CASE("dual_checks agrees with inverse table") {
  for (const auto& name : standard_names()) {
    auto C = standard(name);
    for (int a = 0; a < static_cast<int>(C->twos().size()); ++a) {
      if (C->inverse2(a)) CHECK(C->dual_checks(a));
      if (C->is_id2(a)) CHECK(C->dual_checks(a));
    }
  }
  auto w2 = zoo_walking_2cell();
  CHECK_FALSE(w2->dual_checks(w2->two_index("alpha")));
  auto wi = zoo_walking_iso_2cell();
  CHECK(wi->dual_checks(wi->two_index("alpha")));
}

TEST_CASE("product projections are strict functors") {
  auto wa = zoo_walking_arrow();
  auto w2 = zoo_walking_2cell();
  auto p = TwoCat::product(wa, w2);
  // projection onto the first factor
  StrictFunctor prj{p, wa, {}, {}, {}};
  prj.on_obj.resize(p->objects().size());
  prj.on_one.resize(p->ones().size());
  prj.on_two.resize(p->twos().size());
  auto left_of = [](const std::string& id) {
    // ids look like "(x|y)"
    auto bar = id.find('|');
    return id.substr(1, bar - 1);
  };
  for (size_t i = 0; i < p->objects().size(); ++i)
    prj.on_obj[i] = wa->obj_index(left_of(p->objects()[i]));
  for (size_t i = 0; i < p->ones().size(); ++i)
    prj.on_one[i] = wa->one_index(left_of(p->ones()[i].id));
  for (size_t i = 0; i < p->twos().size(); ++i)
    prj.on_two[i] = wa->two_index(left_of(p->twos()[i].id));
  CHECK(validate_strict_functor(prj).ok());
}
