#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graykernel/grayproduct.hpp"

using namespace gk;

TEST_CASE("normalize: generating relations") {
  auto sq = zoo_free_square();
  auto wa = zoo_walking_arrow();
  auto gp = gray_product(sq, wa);
  int l = sq->one_index("left"), t = sq->one_index("top");
  // [Left l, Left t] with t∘l defined → [Left(t∘l)]
  GrayWord w{sq->obj_index("sw"), 0, {Letter{true, l}, Letter{true, t}}};
  auto n = gp->normalize(w);
  REQUIRE(n.letters.size() == 1);
  CHECK(n.letters[0].cell == sq->compose1(t, l));
  // [Right 1_b] → empty word
  GrayWord w2{0, wa->obj_index("b"), {Letter{false, wa->one_index("1_b")}}};
  CHECK(gp->normalize(w2).letters.empty());
  // idempotence on all enumerated words
  for (const auto& word : gp->words) CHECK(gp->normalize(word) == word);
  // non-threading input throws
  GrayWord bad{sq->obj_index("ne"), 0, {Letter{true, l}}};
  CHECK_THROWS_AS(gp->normalize(bad), NonThreadingWord);
}

TEST_CASE("normalize deletes words composing to an identity") {
  // in walking_iso's hom there is no f'∘f = 1; use a custom category with an
  // invertible 1-cell pair u: a→b, v: b→a, v∘u = 1_a, u∘v = 1_b.
  TwoCatBuilder b("invertible_arrow");
  int a = b.add_object("a"), c = b.add_object("b");
  int u = b.add_one("u", a, c), v = b.add_one("v", c, a);
  int oa = b.add_one("1_a", a, a), ob = b.add_one("1_b", c, c);
  std::map<int, int> id2;
  for (int f : {u, v, oa, ob}) id2[f] = b.add_two("1_" + b.one(f).id, f, f);
  b.set_hcomp1(v, u, oa);
  b.set_hcomp1(u, v, ob);
  b.set_hcomp2(id2[v], id2[u], id2[oa]);
  b.set_hcomp2(id2[u], id2[v], id2[ob]);
  b.set_id1(a, oa);
  b.set_id1(c, ob);
  for (auto [f, i] : id2) b.set_id2(f, i);
  for (int f : {u, v, oa, ob}) {
    b.set_hcomp1(f, b.one(f).src == a ? oa : ob, f);
    b.set_hcomp1(b.one(f).tgt == a ? oa : ob, f, f);
    b.set_vcomp2(id2[f], id2[f], id2[f]);
    b.set_hcomp2(id2[f], id2[b.one(f).src == a ? oa : ob], id2[f]);
    b.set_hcomp2(id2[b.one(f).tgt == a ? oa : ob], id2[f], id2[f]);
  }
  // NOTE: this category has a directed 1-cell cycle, so the Gray product is
  // not enumerable; normalize_word still works on raw words.
  auto C = b.finish();
  REQUIRE(C->validate().ok());
  auto wa = zoo_walking_arrow();
  GrayWord w{a, 0, {Letter{true, u}, Letter{true, v}}};
  auto n = normalize_word(*C, *wa, w);
  CHECK(n.letters.empty());
  CHECK_THROWS_AS(gray_product(C, wa), InfiniteEnumeration);
}

TEST_CASE("arrow ⊗ arrow cell counts") {
  auto wa = zoo_walking_arrow();
  auto gp = gray_product(wa, wa);
  CHECK(gp->cat->objects().size() == 4);
  CHECK(gp->cat->ones().size() == 10);
  CHECK(gp->cat->twos().size() == 12);
  CHECK(gp->cat->validate().ok());
}

TEST_CASE("interchangers") {
  auto wa = zoo_walking_arrow();
  auto gp = gray_product(wa, wa);
  int f = wa->one_index("f");
  // identity when either side is an identity
  auto s1 = gp->sigma(wa->one_index("1_a"), f);
  CHECK(s1.src == s1.tgt);
  CHECK(gp->cell_index(s1) == gp->cat->id2(gp->word_index(s1.src)));
  auto s2 = gp->sigma(f, wa->one_index("1_b"));
  CHECK(s2.src == s2.tgt);
  // the unique nonidentity cell between the diagonal words
  auto s = gp->sigma(f, f);
  CHECK_FALSE(s.src == s.tgt);
  int count = 0;
  for (const auto& c : gp->cells)
    if (c.src == s.src && c.tgt == s.tgt) ++count;
  CHECK(count == 1);
  // Σ ⋄ Σ⁻¹ = identity
  int si = gp->cell_index(s);
  auto inv = gp->cat->inverse2(si);
  REQUIRE(inv.has_value());
  CHECK(gp->cat->vcomp(*inv, si) == gp->cat->id2(gp->word_index(s.src)));
}

namespace {
// relation (7): Σ_{f'∗f,g} = (Σ_{f',g} ∗ (1_f,1)) ⋄ ((1_{f'},1) ∗ Σ_{f,g})
bool relation7(const GrayProductView& gp, int f, int fp, int g) {
  const auto& X = *gp.X;
  auto lhs = gp.sigma(X.compose1(fp, f), g);
  GrayWord wf{X.one_src(f), gp.sigma(f, g).src.sy, {}};
  if (!X.is_id1(f)) wf.letters.push_back(Letter{true, f});
  auto step1 = gp.whisker_r(gp.sigma(fp, g), wf);  // Σ_{f',g} ∗ (1_f,1)
  GrayWord wfp{X.one_src(fp), gp.sigma(f, g).tgt.sy, {}};
  // (1_{f'},1) ∗ Σ_{f,g}: whisker the f' letter on the outside (applied last)
  GrayWord wl{X.one_src(fp), word_target(*gp.X, *gp.Y, gp.sigma(f, g).src).second, {}};
  if (!X.is_id1(fp)) wl.letters.push_back(Letter{true, fp});
  auto step0 = gp.whisker_l(wl, gp.sigma(f, g));
  auto rhs = gp.vcomp_cell(step1, step0);
  (void)wfp;
  return lhs == rhs;
}

// relation (8): Σ_{f,g'∗g} = ((1_{g'},1) ∗ Σ_{f,g}) ⋄ (Σ_{f,g'} ∗ (1,1_g))
bool relation8(const GrayProductView& gp, int f, int g, int gp2) {
  const auto& Y = *gp.Y;
  auto lhs = gp.sigma(f, Y.compose1(gp2, g));
  GrayWord wg{gp.sigma(f, g).src.sx, Y.one_src(g), {}};
  if (!Y.is_id1(g)) wg.letters.push_back(Letter{false, g});
  auto part1 = gp.whisker_r(gp.sigma(f, gp2), wg);  // Σ_{f,g'} ∗ (1,1_g)
  GrayWord wgp{word_target(*gp.X, *gp.Y, gp.sigma(f, g).src).first, Y.one_src(gp2), {}};
  if (!Y.is_id1(gp2)) wgp.letters.push_back(Letter{false, gp2});
  auto part2 = gp.whisker_l(wgp, gp.sigma(f, g));  // (1_{g'},1) ∗ Σ_{f,g}
  auto rhs = gp.vcomp_cell(part2, part1);
  return lhs == rhs;
}

// naturality: ((1,β) ∗ (α,1)) ⋄ Σ_{f,g} = Σ_{f',g'} ⋄ ((α,1) ∗ (1,β))
bool relation_nat(const GrayProductView& gp, int alpha, int beta) {
  const auto& X = *gp.X;
  const auto& Y = *gp.Y;
  int f = X.two_src(alpha), fp = X.two_tgt(alpha);
  int g = Y.two_src(beta), gpp = Y.two_tgt(beta);
  auto sig = gp.sigma(f, g);
  auto sig2 = gp.sigma(fp, gpp);
  // (α,1): between words [Lf] and [Lf'] at the target of g
  int ytgt = Y.one_tgt(g);
  GrayWord wf{X.one_src(f), ytgt, {}};
  GrayWord wfp{X.one_src(f), ytgt, {}};
  if (!X.is_id1(f)) wf.letters.push_back(Letter{true, f});
  if (!X.is_id1(fp)) wfp.letters.push_back(Letter{true, fp});
  auto alpha_cell = gp.make_cell(wf, wfp, alpha, Y.id2(Y.id1(ytgt)));
  // (1,β): between words [Rg] and [Rg'] at the source of f
  GrayWord wg{X.one_src(f), Y.one_src(g), {}};
  GrayWord wgp{X.one_src(f), Y.one_src(g), {}};
  if (!Y.is_id1(g)) wg.letters.push_back(Letter{false, g});
  if (!Y.is_id1(gpp)) wgp.letters.push_back(Letter{false, gpp});
  auto beta_cell = gp.make_cell(wg, wgp, X.id2(X.id1(X.one_src(f))), beta);
  // In hcomp_cell(b, a), a is applied first. The left side ((1,β)∗(α,1))⋄Σ
  // needs (α,1) at (x0,y0) then (1,β) at (x1,y0); the right side has (1,β)
  // at (x0,y0) then (α,1) at (x0,y1).
  GrayWord wf_at_src{X.one_src(f), Y.one_src(g), {}};
  GrayWord wfp_at_src{X.one_src(f), Y.one_src(g), {}};
  if (!X.is_id1(f)) wf_at_src.letters.push_back(Letter{true, f});
  if (!X.is_id1(fp)) wfp_at_src.letters.push_back(Letter{true, fp});
  auto alpha_first = gp.make_cell(wf_at_src, wfp_at_src, alpha, Y.id2(Y.id1(Y.one_src(g))));
  GrayWord wg_at_tgt{X.one_tgt(f), Y.one_src(g), {}};
  GrayWord wgp_at_tgt{X.one_tgt(f), Y.one_src(g), {}};
  if (!Y.is_id1(g)) wg_at_tgt.letters.push_back(Letter{false, g});
  if (!Y.is_id1(gpp)) wgp_at_tgt.letters.push_back(Letter{false, gpp});
  auto beta_second = gp.make_cell(wg_at_tgt, wgp_at_tgt, X.id2(X.id1(X.one_tgt(f))), beta);
  auto lhs = gp.vcomp_cell(gp.hcomp_cell(beta_second, alpha_first), sig);
  auto rhs = gp.vcomp_cell(sig2, gp.hcomp_cell(alpha_cell, beta_cell));
  return lhs == rhs;
}
}  // namespace

TEST_CASE("Gray product relations (7), (8), naturality on zoo pairs") {
  std::vector<std::shared_ptr<const TwoCat>> zoo = {
      zoo_discrete(1), zoo_walking_arrow(), zoo_walking_2cell(), zoo_walking_iso_2cell(),
      zoo_free_square()};
  for (const auto& X : zoo)
    for (const auto& Y : zoo) {
      auto gp = gray_product(X, Y);
      for (int f = 0; f < (int)X->ones().size(); ++f)
        for (int fp = 0; fp < (int)X->ones().size(); ++fp) {
          if (X->one_tgt(f) != X->one_src(fp)) continue;
          for (int g = 0; g < (int)Y->ones().size(); ++g) CHECK(relation7(*gp, f, fp, g));
        }
      for (int f = 0; f < (int)X->ones().size(); ++f)
        for (int g = 0; g < (int)Y->ones().size(); ++g)
          for (int gp2 = 0; gp2 < (int)Y->ones().size(); ++gp2) {
            if (Y->one_tgt(g) != Y->one_src(gp2)) continue;
            CHECK(relation8(*gp, f, g, gp2));
          }
      for (int al = 0; al < (int)X->twos().size(); ++al)
        for (int be = 0; be < (int)Y->twos().size(); ++be)
          CHECK(relation_nat(*gp, al, be));
    }
}

TEST_CASE("tensor functor") {
  auto wa = zoo_walking_arrow();
  auto w2 = zoo_walking_2cell();
  auto gpa = gray_product(wa, wa);
  auto gpb = gray_product(w2, wa);
  // identity ⊗ identity = identity
  auto idT = tensor_functor(identity_functor(wa), identity_functor(wa), *gpa, *gpa);
  CHECK(idT == identity_functor(gpa->cat));
  // (F⊗G)(Σ_{f,g}) = Σ_{Ff,Gg} for all F: wa→w2, G: wa→wa
  auto Fs = enumerate_strict_functors(wa, w2);
  auto Gs = enumerate_strict_functors(wa, wa);
  for (const auto& F : Fs)
    for (const auto& G : Gs) {
      auto T = tensor_functor(F, G, *gpa, *gpb);
      CHECK(validate_strict_functor(T).ok());
      for (int f = 0; f < (int)wa->ones().size(); ++f)
        for (int g = 0; g < (int)wa->ones().size(); ++g)
          CHECK(T.two(gpa->sigma_index(f, g)) == gpb->sigma_index(F.one(f), G.one(g)));
    }
  // functoriality (F'⊗G')(F⊗G) = (F'F ⊗ G'G) on all cells
  auto gpc = gray_product(w2, w2);
  auto F2s = enumerate_strict_functors(w2, w2);
  const auto& F = Fs.front();
  const auto& G = Gs.back();
  const auto& Fp = F2s.front();
  const auto& G2 = Fs.back();
  auto T1 = tensor_functor(F, G, *gpa, *gpb);
  auto T2 = tensor_functor(Fp, G2, *gpb, *gpc);
  auto T12 = tensor_functor(compose_functors(Fp, F), compose_functors(G2, G), *gpa, *gpc);
  CHECK(compose_functors(T2, T1) == T12);
}

TEST_CASE("symmetry involution and eq (6)") {
  auto wa = zoo_walking_arrow();
  auto w2 = zoo_walking_2cell();
  auto XY = gray_product(wa, w2);
  auto YX = gray_product(w2, wa);
  auto c1 = gray_symmetry(*XY, *YX);
  auto c2 = gray_symmetry(*YX, *XY);
  CHECK(compose_functors(c2, c1) == identity_functor(XY->cat));
  CHECK(compose_functors(c1, c2) == identity_functor(YX->cat));
  // c(Σ_{f,g}) = Σ⁻¹_{g,f}
  for (int f = 0; f < (int)wa->ones().size(); ++f)
    for (int g = 0; g < (int)w2->ones().size(); ++g) {
      int img = c1.two(XY->sigma_index(f, g));
      auto inv = YX->cat->inverse2(YX->sigma_index(g, f));
      REQUIRE(inv.has_value());
      CHECK(img == *inv);
    }
}

TEST_CASE("associator actions on interchangers: eqs (3), (4), (5)") {
  auto wa = zoo_walking_arrow();
  auto w2 = zoo_walking_2cell();
  auto A = gray_assoc(wa, w2, wa);
  CHECK(validate_strict_functor(A.fwd).ok());
  CHECK(validate_strict_functor(A.bwd).ok());
  CHECK(compose_functors(A.bwd, A.fwd) == identity_functor(A.XY_Z->cat));
  const auto& X = *wa;
  const auto& Y = *w2;
  const auto& Z = *wa;
  // eq (3): a(Σ_{f,g},1) = Σ_{f,(g,1)} — interchanger of XY in (X⊗Y)⊗Z,
  // whiskered as the Left-component cell.
  for (int f = 0; f < (int)X.ones().size(); ++f)
    for (int g = 0; g < (int)Y.ones().size(); ++g)
      for (int z = 0; z < (int)Z.objects().size(); ++z) {
        auto sig = A.XY->sigma(f, g);
        int sig_idx = A.XY->cell_index(sig);
        // (Σ_{f,g},1): the cell with a single Left letter at z
        GrayWord ws{A.XY->word_index(sig.src), z, {}};
        GrayWord wt{A.XY->word_index(sig.tgt), z, {}};
        int srcw = A.XY->word_index(sig.src);
        if (!A.XY->cat->is_id1(srcw)) ws.letters.push_back(Letter{true, srcw});
        int tgtw = A.XY->word_index(sig.tgt);
        if (!A.XY->cat->is_id1(tgtw)) wt.letters.push_back(Letter{true, tgtw});
        ws.sx = A.XY->obj(A.XY->words[srcw].sx, A.XY->words[srcw].sy);
        wt.sx = A.XY->obj(A.XY->words[tgtw].sx, A.XY->words[tgtw].sy);
        auto cell = A.XY_Z->make_cell(ws, wt, sig_idx, Z.id2(Z.id1(z)));
        int img = A.fwd.two(A.XY_Z->cell_index(cell));
        // Σ_{f,(g,1)}: interchanger of f with the YZ-word [Lg] at z
        GrayWord yzw{Y.one_src(g), z, {}};
        if (!Y.is_id1(g)) yzw.letters.push_back(Letter{true, g});
        int yz1 = A.YZ->word_index(yzw);
        if (A.YZ->cat->is_id1(yz1) || X.is_id1(f)) {
          // degenerate: both sides identities
          CHECK(A.X_YZ->cat->is_id2(img));
        } else {
          CHECK(img == A.X_YZ->sigma_index(f, yz1));
        }
      }
  // eq (4): a(Σ_{(f,1),h}) = Σ_{f,(1,h)}
  for (int f = 0; f < (int)X.ones().size(); ++f)
    for (int h = 0; h < (int)Z.ones().size(); ++h)
      for (int y = 0; y < (int)Y.objects().size(); ++y) {
        GrayWord xyw{X.one_src(f), y, {}};
        if (!X.is_id1(f)) xyw.letters.push_back(Letter{true, f});
        int u = A.XY->word_index(xyw);
        int img = A.fwd.two(A.XY_Z->sigma_index(u, h));
        GrayWord yzw{y, Z.one_src(h), {}};
        if (!Z.is_id1(h)) yzw.letters.push_back(Letter{false, h});
        int v = A.YZ->word_index(yzw);
        if (A.XY->cat->is_id1(u) || Z.is_id1(h)) {
          CHECK(A.X_YZ->cat->is_id2(img));
        } else if (X.is_id1(f) || A.YZ->cat->is_id1(v)) {
          CHECK(A.X_YZ->cat->is_id2(img));
        } else {
          CHECK(img == A.X_YZ->sigma_index(f, v));
        }
      }
  // eq (5): a(Σ_{(1,g),h}) = (1, Σ_{g,h})
  for (int g = 0; g < (int)Y.ones().size(); ++g)
    for (int h = 0; h < (int)Z.ones().size(); ++h)
      for (int x = 0; x < (int)X.objects().size(); ++x) {
        GrayWord xyw{x, Y.one_src(g), {}};
        if (!Y.is_id1(g)) xyw.letters.push_back(Letter{false, g});
        int u = A.XY->word_index(xyw);
        int img = A.fwd.two(A.XY_Z->sigma_index(u, h));
        // (1, Σ_{g,h}): Right-component cell of the YZ interchanger at x
        auto sig = A.YZ->sigma(g, h);
        int ss = A.YZ->word_index(sig.src), tt = A.YZ->word_index(sig.tgt);
        GrayWord ws{x, A.YZ->cat->one_src(ss), {}};
        if (!A.YZ->cat->is_id1(ss)) ws.letters.push_back(Letter{false, ss});
        GrayWord wt{x, A.YZ->cat->one_src(tt), {}};
        if (!A.YZ->cat->is_id1(tt)) wt.letters.push_back(Letter{false, tt});
        auto expect = A.X_YZ->make_cell(ws, wt, X.id2(X.id1(x)), A.YZ->cell_index(sig));
        CHECK(img == A.X_YZ->cell_index(expect));
      }
}

TEST_CASE("unitors") {
  auto w2 = zoo_walking_2cell();
  auto L = gray_lunitor(w2);
  CHECK(validate_strict_functor(L.fwd).ok());
  CHECK(compose_functors(L.fwd, L.bwd) == identity_functor(w2));
  CHECK(compose_functors(L.bwd, L.fwd) == identity_functor(L.prod->cat));
  auto R = gray_runitor(w2);
  CHECK(validate_strict_functor(R.fwd).ok());
  CHECK(compose_functors(R.fwd, R.bwd) == identity_functor(w2));
  CHECK(compose_functors(R.bwd, R.fwd) == identity_functor(R.prod->cat));
}

TEST_CASE("comparison: m and i") {
  auto wa = zoo_walking_arrow();
  auto gp = gray_product(wa, wa);
  auto cmp = comparison(*gp);
  CHECK(cmp.report.ok());
  // i is NOT injective on 1-cells: both diagonal words map to (f,f)
  int f = wa->one_index("f");
  auto s = gp->sigma(f, f);
  CHECK(cmp.i.one(gp->word_index(s.src)) == cmp.i.one(gp->word_index(s.tgt)));
  CHECK(gp->word_index(s.src) != gp->word_index(s.tgt));
  // i(Σ_{f,g}) is the identity of (f,g)
  int img = cmp.i.two(gp->sigma_index(f, f));
  CHECK(cmp.cartesian->is_id2(img));
}

TEST_CASE("interchanger diagrams commute (pure-interchanger paths)") {
  // all parallel pure-interchanger composites agree: projection pairs are
  // identities, so equal boundaries imply equal cells in the model; verify the
  // table agrees for a sampled pair of paths in (arrow ⊗ arrow) ⊗ arrow words.
  auto wa = zoo_walking_arrow();
  auto w2 = zoo_walking_2cell();
  auto gp = gray_product(wa, w2);
  int f = wa->one_index("f");
  for (int g = 0; g < (int)w2->ones().size(); ++g) {
    auto sig = gp->sigma(f, g);
    // path 1: Σ; path 2: Σ then identity
    int si = gp->cell_index(sig);
    CHECK(gp->cat->vcomp(gp->cat->id2(gp->word_index(sig.tgt)), si) == si);
  }
}
