#include "graykernel/grayclosed.hpp"

#include <algorithm>
#include <functional>

namespace gk {

namespace {

// the L→M functor obtained by restricting F: X⊗L → M to {x}⊗L
StrictFunctor restrict_at(const StrictFunctor& F, const GrayProductView& XL, int x) {
  const TwoCat& L = *XL.Y;
  StrictFunctor r{XL.Y, F.cod, {}, {}, {}};
  r.on_obj.resize(L.objects().size());
  r.on_one.resize(L.ones().size());
  r.on_two.resize(L.twos().size());
  for (int b = 0; b < static_cast<int>(L.objects().size()); ++b)
    r.on_obj[b] = F.obj(XL.obj(x, b));
  for (int g = 0; g < static_cast<int>(L.ones().size()); ++g) {
    GrayWord w{x, L.one_src(g), {}};
    if (!L.is_id1(g)) w.letters.push_back(Letter{false, g});
    r.on_one[g] = F.one(XL.word_index(w));
  }
  for (int be = 0; be < static_cast<int>(L.twos().size()); ++be) {
    int g = L.two_src(be), gp = L.two_tgt(be);
    GrayWord ws{x, L.one_src(g), {}};
    if (!L.is_id1(g)) ws.letters.push_back(Letter{false, g});
    GrayWord wt{x, L.one_src(gp), {}};
    if (!L.is_id1(gp)) wt.letters.push_back(Letter{false, gp});
    r.on_two[be] =
        F.two(XL.cell_index(GrayCell2{ws, wt, XL.X->id2(XL.X->id1(x)), be}));
  }
  return r;
}

// the pseudonat curry(F)(f): curry(F)(x) ⇒ curry(F)(x')
PseudoNat curry_one(const StrictFunctor& F, const GrayProductView& XL, int f) {
  const TwoCat& X = *XL.X;
  const TwoCat& L = *XL.Y;
  int x = X.one_src(f), xp = X.one_tgt(f);
  PseudoNat t{restrict_at(F, XL, x), restrict_at(F, XL, xp), {}, {}};
  t.components.resize(L.objects().size());
  t.nat2.resize(L.ones().size());
  for (int b = 0; b < static_cast<int>(L.objects().size()); ++b) {
    GrayWord w{x, b, {}};
    if (!X.is_id1(f)) w.letters.push_back(Letter{true, f});
    t.components[b] = F.one(XL.word_index(w));
  }
  for (int g = 0; g < static_cast<int>(L.ones().size()); ++g)
    t.nat2[g] = F.two(XL.cell_index(XL.sigma(f, g)));
  return t;
}

Modification curry_two(const StrictFunctor& F, const GrayProductView& XL, int al) {
  const TwoCat& X = *XL.X;
  const TwoCat& L = *XL.Y;
  int f = X.two_src(al), fp = X.two_tgt(al);
  Modification m{curry_one(F, XL, f), curry_one(F, XL, fp), {}};
  m.components.resize(L.objects().size());
  for (int b = 0; b < static_cast<int>(L.objects().size()); ++b) {
    GrayWord ws{X.one_src(f), b, {}};
    if (!X.is_id1(f)) ws.letters.push_back(Letter{true, f});
    GrayWord wt{X.one_src(fp), b, {}};
    if (!X.is_id1(fp)) wt.letters.push_back(Letter{true, fp});
    m.components[b] = F.two(XL.cell_index(GrayCell2{ws, wt, al, L.id2(L.id1(b))}));
  }
  return m;
}

}  // namespace

StrictFunctor curry(const StrictFunctor& F, const GrayProductView& XL, const Hom2& homLM) {
  if (F.dom != XL.cat) throw BoundaryMismatch("curry: domain is not the Gray product");
  const TwoCat& X = *XL.X;
  StrictFunctor G{XL.X, homLM.cat, {}, {}, {}};
  G.on_obj.resize(X.objects().size());
  G.on_one.resize(X.ones().size());
  G.on_two.resize(X.twos().size());
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x)
    G.on_obj[x] = homLM.index_of(restrict_at(F, XL, x));
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    G.on_one[f] = homLM.index_of(curry_one(F, XL, f));
  for (int al = 0; al < static_cast<int>(X.twos().size()); ++al)
    G.on_two[al] = homLM.index_of(curry_two(F, XL, al));
  return G;
}

namespace {

// the cubical evaluation-composite functor X×L → M induced by G: X → [L,M]
CubicalFunctor eval_cubical(const StrictFunctor& G, const GrayProductView& XL,
                            const Hom2& homLM) {
  CubicalFunctor Fh;
  Fh.X = XL.X;
  Fh.Y = XL.Y;
  Fh.prod = TwoCat::product(XL.X, XL.Y);
  Fh.cod = homLM.Y;
  const TwoCat& X = *XL.X;
  const TwoCat& L = *XL.Y;
  const TwoCat& M = *homLM.Y;
  Fh.on_obj.resize(Fh.prod->objects().size());
  Fh.on_one.resize(Fh.prod->ones().size());
  Fh.on_two.resize(Fh.prod->twos().size());
  auto fun = [&](int x) -> const StrictFunctor& { return homLM.objects[G.obj(x)]; };
  auto nat = [&](int f) -> const PseudoNat& { return homLM.ones[G.one(f)]; };
  auto mod = [&](int al) -> const Modification& { return homLM.twos[G.two(al)]; };
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x)
    for (int b = 0; b < static_cast<int>(L.objects().size()); ++b)
      Fh.on_obj[Fh.oidx(x, b)] = fun(x).obj(b);
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int g = 0; g < static_cast<int>(L.ones().size()); ++g) {
      int xp = X.one_tgt(f), b = L.one_src(g);
      Fh.on_one[Fh.fidx(f, g)] = M.compose1(fun(xp).one(g), nat(f).comp(b));
    }
  for (int al = 0; al < static_cast<int>(X.twos().size()); ++al)
    for (int be = 0; be < static_cast<int>(L.twos().size()); ++be) {
      int f = X.two_src(al);
      int xp = X.one_tgt(f);
      int g = L.two_src(be), gp = L.two_tgt(be);
      int b = L.one_src(g);
      // (1_{G(x')(g')} ∗ G(α)_b) ⋄ (G(x')(β) ∗ 1_{G(f)_b})
      Fh.on_two[Fh.aidx(al, be)] =
          M.vcomp(M.hcomp(M.id2(fun(xp).one(gp)), mod(al).comp(b)),
                  M.hcomp(fun(xp).two(be), M.id2(nat(X.two_src(al)).comp(b))));
    }
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int g = 0; g < static_cast<int>(L.ones().size()); ++g) {
      if (X.is_id1(f) || L.is_id1(g)) continue;
      Fh.sigma_map[{f, g}] = nat(f).nat(g);
    }
  return Fh;
}

}  // namespace

StrictFunctor uncurry(const StrictFunctor& G, const GrayProductView& XL, const Hom2& homLM) {
  if (G.cod != homLM.cat) throw BoundaryMismatch("uncurry: codomain is not the hom");
  return strictify(eval_cubical(G, XL, homLM), XL);
}

PseudoNat curry_cells(const PseudoNat& s, const GrayProductView& XL, const Hom2& homLM) {
  const TwoCat& X = *XL.X;
  const TwoCat& L = *XL.Y;
  PseudoNat r{curry(s.dom_f, XL, homLM), curry(s.cod_f, XL, homLM), {}, {}};
  r.components.resize(X.objects().size());
  r.nat2.resize(X.ones().size());
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x) {
    PseudoNat comp{restrict_at(s.dom_f, XL, x), restrict_at(s.cod_f, XL, x), {}, {}};
    comp.components.resize(L.objects().size());
    comp.nat2.resize(L.ones().size());
    for (int b = 0; b < static_cast<int>(L.objects().size()); ++b)
      comp.components[b] = s.comp(XL.obj(x, b));
    for (int g = 0; g < static_cast<int>(L.ones().size()); ++g) {
      GrayWord w{x, L.one_src(g), {}};
      if (!L.is_id1(g)) w.letters.push_back(Letter{false, g});
      comp.nat2[g] = s.nat(XL.word_index(w));
    }
    r.components[x] = homLM.index_of(comp);
  }
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f) {
    Modification natf{hcompose_pseudonat(homLM.ones[r.components[X.one_tgt(f)]],
                                         curry_one(s.dom_f, XL, f)),
                      hcompose_pseudonat(curry_one(s.cod_f, XL, f),
                                         homLM.ones[r.components[X.one_src(f)]]),
                      {}};
    natf.components.resize(L.objects().size());
    for (int b = 0; b < static_cast<int>(L.objects().size()); ++b) {
      GrayWord w{X.one_src(f), b, {}};
      if (!X.is_id1(f)) w.letters.push_back(Letter{true, f});
      natf.components[b] = s.nat(XL.word_index(w));
    }
    r.nat2[f] = homLM.index_of(natf);
  }
  return r;
}

PseudoNat uncurry_cells(const PseudoNat& s, const GrayProductView& XL, const Hom2& homLM) {
  const TwoCat& X = *XL.X;
  const TwoCat& L = *XL.Y;
  CubicalPseudoNat sh;
  sh.dom_f = eval_cubical(s.dom_f, XL, homLM);
  sh.cod_f = eval_cubical(s.cod_f, XL, homLM);
  const TwoCat& M = *homLM.Y;
  sh.components.resize(sh.dom_f.prod->objects().size());
  sh.nat2.resize(sh.dom_f.prod->ones().size());
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x)
    for (int b = 0; b < static_cast<int>(L.objects().size()); ++b)
      sh.components[sh.dom_f.oidx(x, b)] = homLM.ones[s.comp(x)].comp(b);
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int g = 0; g < static_cast<int>(L.ones().size()); ++g) {
      // respect for composition along (1,g)∘(f,1) with identity constraints:
      // σ̂_{(f,g)} = (1_{Ĝ(1,g)@x'} ∗ σ̂_{(f,1)@b}) ⋄ (σ̂_{(1,g)@x'} ∗ 1_{F̂(f,1)@b})
      int x = X.one_src(f), xp = X.one_tgt(f);
      int b = L.one_src(g);
      int nat_f_at_b = homLM.twos[s.nat(f)].comp(b);
      int nat_g_at_xp = homLM.ones[s.comp(xp)].nat(g);
      int gl = sh.cod_f.right_one(xp, g);
      int fl = sh.dom_f.left_one(f, b);
      sh.nat2[sh.dom_f.fidx(f, g)] =
          M.vcomp(M.hcomp(M.id2(gl), nat_f_at_b), M.hcomp(nat_g_at_xp, M.id2(fl)));
    }
  return transform_pseudonat(sh, XL);
}

Modification curry_cells(const Modification& m, const GrayProductView& XL, const Hom2& homLM) {
  const TwoCat& X = *XL.X;
  const TwoCat& L = *XL.Y;
  Modification r{curry_cells(m.dom_t, XL, homLM), curry_cells(m.cod_t, XL, homLM), {}};
  r.components.resize(X.objects().size());
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x) {
    Modification comp{homLM.ones[r.dom_t.comp(x)], homLM.ones[r.cod_t.comp(x)], {}};
    comp.components.resize(L.objects().size());
    for (int b = 0; b < static_cast<int>(L.objects().size()); ++b)
      comp.components[b] = m.comp(XL.obj(x, b));
    r.components[x] = homLM.index_of(comp);
  }
  return r;
}

Modification uncurry_cells(const Modification& m, const GrayProductView& XL,
                           const Hom2& homLM) {
  Modification r{uncurry_cells(m.dom_t, XL, homLM), uncurry_cells(m.cod_t, XL, homLM), {}};
  const TwoCat& X = *XL.X;
  const TwoCat& L = *XL.Y;
  r.components.resize(XL.cat->objects().size());
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x)
    for (int b = 0; b < static_cast<int>(L.objects().size()); ++b)
      r.components[XL.obj(x, b)] = homLM.twos[m.comp(x)].comp(b);
  auto rep = validate_modification(r);
  if (!rep.ok()) throw NotInImage("uncurry_cells: invalid modification:\n" + rep.pretty());
  return r;
}

StrictFunctor n_functor(const GrayProductView& XL, const Hom2& homXL_M, const Hom2& homLM,
                        const Hom2& homX_LM) {
  StrictFunctor N{homXL_M.cat, homX_LM.cat, {}, {}, {}};
  N.on_obj.resize(homXL_M.objects.size());
  N.on_one.resize(homXL_M.ones.size());
  N.on_two.resize(homXL_M.twos.size());
  for (size_t i = 0; i < homXL_M.objects.size(); ++i)
    N.on_obj[i] = homX_LM.index_of(curry(homXL_M.objects[i], XL, homLM));
  for (size_t i = 0; i < homXL_M.ones.size(); ++i)
    N.on_one[i] = homX_LM.index_of(curry_cells(homXL_M.ones[i], XL, homLM));
  for (size_t i = 0; i < homXL_M.twos.size(); ++i)
    N.on_two[i] = homX_LM.index_of(curry_cells(homXL_M.twos[i], XL, homLM));
  return N;
}

StrictFunctor n_inverse_functor(const GrayProductView& XL, const Hom2& homXL_M,
                                const Hom2& homLM, const Hom2& homX_LM) {
  StrictFunctor N{homX_LM.cat, homXL_M.cat, {}, {}, {}};
  N.on_obj.resize(homX_LM.objects.size());
  N.on_one.resize(homX_LM.ones.size());
  N.on_two.resize(homX_LM.twos.size());
  for (size_t i = 0; i < homX_LM.objects.size(); ++i)
    N.on_obj[i] = homXL_M.index_of(uncurry(homX_LM.objects[i], XL, homLM));
  for (size_t i = 0; i < homX_LM.ones.size(); ++i)
    N.on_one[i] = homXL_M.index_of(uncurry_cells(homX_LM.ones[i], XL, homLM));
  for (size_t i = 0; i < homX_LM.twos.size(); ++i)
    N.on_two[i] = homXL_M.index_of(uncurry_cells(homX_LM.twos[i], XL, homLM));
  return N;
}

StrictFunctor hom_postcompose(const StrictFunctor& h, const Hom2& src, const Hom2& dst) {
  StrictFunctor r{src.cat, dst.cat, {}, {}, {}};
  r.on_obj.resize(src.objects.size());
  r.on_one.resize(src.ones.size());
  r.on_two.resize(src.twos.size());
  for (size_t i = 0; i < src.objects.size(); ++i)
    r.on_obj[i] = dst.index_of(compose_functors(h, src.objects[i]));
  for (size_t i = 0; i < src.ones.size(); ++i)
    r.on_one[i] = dst.index_of(whisker_functor_post(h, src.ones[i]));
  for (size_t i = 0; i < src.twos.size(); ++i)
    r.on_two[i] = dst.index_of(whisker_functor_post(h, src.twos[i]));
  return r;
}

StrictFunctor hom_precompose(const StrictFunctor& k, const Hom2& src, const Hom2& dst) {
  StrictFunctor r{src.cat, dst.cat, {}, {}, {}};
  r.on_obj.resize(src.objects.size());
  r.on_one.resize(src.ones.size());
  r.on_two.resize(src.twos.size());
  for (size_t i = 0; i < src.objects.size(); ++i)
    r.on_obj[i] = dst.index_of(compose_functors(src.objects[i], k));
  for (size_t i = 0; i < src.ones.size(); ++i)
    r.on_one[i] = dst.index_of(whisker_functor_pre(src.ones[i], k));
  for (size_t i = 0; i < src.twos.size(); ++i)
    r.on_two[i] = dst.index_of(whisker_functor_pre(src.twos[i], k));
  return r;
}

// ---------------------------------------------------------------------------

StrictFunctor m_gray(const Hom2& homYZ, const Hom2& homXY, const Hom2& homXZ,
                     const GrayProductView& P) {
  if (P.X != homYZ.cat || P.Y != homXY.cat)
    throw BoundaryMismatch("m_gray: product factors mismatch");
  CubicalFunctor comp;
  comp.X = homYZ.cat;
  comp.Y = homXY.cat;
  comp.prod = TwoCat::product(homYZ.cat, homXY.cat);
  comp.cod = homXZ.cat;
  const TwoCat& HZ = *homXZ.cat;
  comp.on_obj.resize(comp.prod->objects().size());
  comp.on_one.resize(comp.prod->ones().size());
  comp.on_two.resize(comp.prod->twos().size());
  auto left_one_at = [&](int theta, int Gi) {
    return homXZ.index_of(whisker_functor_pre(homYZ.ones[theta], homXY.objects[Gi]));
  };
  auto right_one_at = [&](int Fi, int sg) {
    return homXZ.index_of(whisker_functor_post(homYZ.objects[Fi], homXY.ones[sg]));
  };
  for (size_t i = 0; i < homYZ.objects.size(); ++i)
    for (size_t j = 0; j < homXY.objects.size(); ++j)
      comp.on_obj[comp.oidx(static_cast<int>(i), static_cast<int>(j))] =
          homXZ.index_of(compose_functors(homYZ.objects[i], homXY.objects[j]));
  for (size_t i = 0; i < homYZ.ones.size(); ++i)
    for (size_t j = 0; j < homXY.ones.size(); ++j) {
      const auto& th = homYZ.ones[i];
      const auto& sg = homXY.ones[j];
      int Fp = homYZ.index_of(th.cod_f);
      int G = homXY.index_of(sg.dom_f);
      comp.on_one[comp.fidx(static_cast<int>(i), static_cast<int>(j))] = HZ.compose1(
          right_one_at(Fp, static_cast<int>(j)), left_one_at(static_cast<int>(i), G));
    }
  for (size_t i = 0; i < homYZ.twos.size(); ++i)
    for (size_t j = 0; j < homXY.twos.size(); ++j) {
      const auto& Ga = homYZ.twos[i];
      const auto& De = homXY.twos[j];
      int Fp = homYZ.index_of(Ga.dom_t.cod_f);
      int G = homXY.index_of(De.dom_t.dom_f);
      int theta = homYZ.index_of(Ga.dom_t), theta2 = homYZ.index_of(Ga.cod_t);
      int sg = homXY.index_of(De.dom_t), sg2 = homXY.index_of(De.cod_t);
      (void)theta;
      (void)sg2;
      // (1_{F'_*σ'} ∗ G^*Γ) ⋄ (F'^*Δ ∗ 1_{G^*θ dom})
      int gl = homXZ.index_of(whisker_functor_pre(homYZ.twos[i], homXY.objects[G]));
      int fr = homXZ.index_of(whisker_functor_post(homYZ.objects[Fp], homXY.twos[j]));
      int right_prime = right_one_at(Fp, sg2);
      int left_dom = left_one_at(theta, G);
      comp.on_two[comp.aidx(static_cast<int>(i), static_cast<int>(j))] =
          HZ.vcomp(HZ.hcomp(HZ.id2(right_prime), gl), HZ.hcomp(fr, HZ.id2(left_dom)));
      (void)theta2;
    }
  for (size_t i = 0; i < homYZ.ones.size(); ++i)
    for (size_t j = 0; j < homXY.ones.size(); ++j) {
      if (P.X->is_id1(static_cast<int>(i)) || P.Y->is_id1(static_cast<int>(j))) continue;
      const auto& th = homYZ.ones[i];
      const auto& sg = homXY.ones[j];
      // σ_{θ,σ}: modification with components θ_{σ_x}
      Modification sig{hcompose_pseudonat(whisker_functor_pre(th, sg.cod_f),
                                          whisker_functor_post(th.dom_f, sg)),
                       hcompose_pseudonat(whisker_functor_post(th.cod_f, sg),
                                          whisker_functor_pre(th, sg.dom_f)),
                       {}};
      sig.components.resize(sg.X()->objects().size());
      for (size_t x = 0; x < sig.components.size(); ++x)
        sig.components[x] = th.nat(sg.comp(static_cast<int>(x)));
      comp.sigma_map[{static_cast<int>(i), static_cast<int>(j)}] = homXZ.index_of(sig);
    }
  return strictify(comp, P);
}

// ---------------------------------------------------------------------------

StrictFunctor TenAction::obj(const StrictFunctor& F, const StrictFunctor& G) const {
  return tensor_functor(F, G, *XY, *XpYp);
}

PseudoNat TenAction::one_left(const PseudoNat& theta, const StrictFunctor& G) const {
  const TwoCat& X = *XY->X;
  const TwoCat& Y = *XY->Y;
  PseudoNat r{obj(theta.dom_f, G), obj(theta.cod_f, G), {}, {}};
  r.components.resize(XY->cat->objects().size());
  r.nat2.resize(XY->cat->ones().size());
  for (size_t o = 0; o < r.components.size(); ++o) {
    auto [x, y] = XY->obj_pair(static_cast<int>(o));
    GrayWord w{theta.dom_f.obj(x), G.obj(y), {}};
    int tc = theta.comp(x);
    if (!XpYp->X->is_id1(tc)) w.letters.push_back(Letter{true, tc});
    r.components[o] = XpYp->word_index(w);
  }
  // generate naturality cells along words by respect for composition
  const TwoCat& Zc = *XpYp->cat;
  for (size_t i = 0; i < XY->words.size(); ++i) {
    const auto& w = XY->words[i];
    int cx = w.sx, cy = w.sy;
    int acc = Zc.id2(r.components[XY->obj(cx, cy)]);
    int facc = Zc.id1(r.dom_f.obj(XY->obj(cx, cy)));
    for (const auto& l : w.letters) {
      int ln, gcell;
      if (l.left) {
        // nat at [Lf]: the projection-pair cell (θ_f, 1)
        int f = l.cell;
        int xp = X.one_tgt(f);
        GrayWord ws{theta.dom_f.obj(cx), G.obj(cy), {}};
        int Ff = theta.dom_f.one(f);
        if (!XpYp->X->is_id1(Ff)) ws.letters.push_back(Letter{true, Ff});
        int th_xp = theta.comp(xp);
        if (!XpYp->X->is_id1(th_xp)) ws.letters.push_back(Letter{true, th_xp});
        GrayWord wt{theta.dom_f.obj(cx), G.obj(cy), {}};
        int th_x = theta.comp(cx);
        if (!XpYp->X->is_id1(th_x)) wt.letters.push_back(Letter{true, th_x});
        int Fpf = theta.cod_f.one(f);
        if (!XpYp->X->is_id1(Fpf)) wt.letters.push_back(Letter{true, Fpf});
        ln = XpYp->cell_index(XpYp->make_cell(ws, wt, theta.nat(f),
                                              XpYp->Y->id2(XpYp->Y->id1(G.obj(cy)))));
        gcell = XY->word_index(GrayWord{cx, cy, {Letter{true, f}}});
        cx = xp;
      } else {
        // nat at [Rg]: Σ_{θ_x, Gg}
        int g = l.cell;
        int th_x = theta.comp(cx);
        int Gg = G.one(g);
        ln = XpYp->cell_index(XpYp->sigma(th_x, Gg));
        gcell = XY->word_index(GrayWord{cx, cy, {Letter{false, g}}});
        cy = Y.one_tgt(g);
      }
      int gl = r.cod_f.one(gcell);
      acc = Zc.vcomp(Zc.hcomp(Zc.id2(gl), acc), Zc.hcomp(ln, Zc.id2(facc)));
      facc = Zc.compose1(r.dom_f.one(gcell), facc);
    }
    r.nat2[i] = acc;
  }
  return r;
}

PseudoNat TenAction::one_right(const StrictFunctor& F, const PseudoNat& iota) const {
  const TwoCat& X = *XY->X;
  const TwoCat& Y = *XY->Y;
  PseudoNat r{obj(F, iota.dom_f), obj(F, iota.cod_f), {}, {}};
  r.components.resize(XY->cat->objects().size());
  r.nat2.resize(XY->cat->ones().size());
  for (size_t o = 0; o < r.components.size(); ++o) {
    auto [x, y] = XY->obj_pair(static_cast<int>(o));
    GrayWord w{F.obj(x), iota.dom_f.obj(y), {}};
    int ic = iota.comp(y);
    if (!XpYp->Y->is_id1(ic)) w.letters.push_back(Letter{false, ic});
    r.components[o] = XpYp->word_index(w);
  }
  const TwoCat& Zc = *XpYp->cat;
  for (size_t i = 0; i < XY->words.size(); ++i) {
    const auto& w = XY->words[i];
    int cx = w.sx, cy = w.sy;
    int acc = Zc.id2(r.components[XY->obj(cx, cy)]);
    int facc = Zc.id1(r.dom_f.obj(XY->obj(cx, cy)));
    for (const auto& l : w.letters) {
      int ln, gcell;
      if (l.left) {
        // nat at [Lf]: Σ⁻¹_{Ff, ι_y}
        int f = l.cell;
        int Ff = F.one(f);
        int ic = iota.comp(cy);
        int sidx = XpYp->cell_index(XpYp->sigma(Ff, ic));
        auto inv = XpYp->cat->inverse2(sidx);
        if (!inv) throw NotInImage("interchanger without inverse");
        ln = *inv;
        gcell = XY->word_index(GrayWord{cx, cy, {Letter{true, f}}});
        cx = X.one_tgt(f);
      } else {
        // nat at [Rg]: the projection-pair cell (1, ι_g)
        int g = l.cell;
        int yp = Y.one_tgt(g);
        GrayWord ws{F.obj(cx), iota.dom_f.obj(cy), {}};
        int Gg = iota.dom_f.one(g);
        if (!XpYp->Y->is_id1(Gg)) ws.letters.push_back(Letter{false, Gg});
        int io_yp = iota.comp(yp);
        if (!XpYp->Y->is_id1(io_yp)) ws.letters.push_back(Letter{false, io_yp});
        GrayWord wt{F.obj(cx), iota.dom_f.obj(cy), {}};
        int io_y = iota.comp(cy);
        if (!XpYp->Y->is_id1(io_y)) wt.letters.push_back(Letter{false, io_y});
        int Gpg = iota.cod_f.one(g);
        if (!XpYp->Y->is_id1(Gpg)) wt.letters.push_back(Letter{false, Gpg});
        ln = XpYp->cell_index(XpYp->make_cell(ws, wt, XpYp->X->id2(XpYp->X->id1(F.obj(cx))),
                                              iota.nat(g)));
        gcell = XY->word_index(GrayWord{cx, cy, {Letter{false, g}}});
        cy = yp;
      }
      int gl = r.cod_f.one(gcell);
      acc = Zc.vcomp(Zc.hcomp(Zc.id2(gl), acc), Zc.hcomp(ln, Zc.id2(facc)));
      facc = Zc.compose1(r.dom_f.one(gcell), facc);
    }
    r.nat2[i] = acc;
  }
  return r;
}

Modification TenAction::two_left(const Modification& m, const StrictFunctor& G) const {
  Modification r{one_left(m.dom_t, G), one_left(m.cod_t, G), {}};
  r.components.resize(XY->cat->objects().size());
  for (size_t o = 0; o < r.components.size(); ++o) {
    auto [x, y] = XY->obj_pair(static_cast<int>(o));
    int th = m.dom_t.comp(x), th2 = m.cod_t.comp(x);
    GrayWord ws{m.dom_t.dom_f.obj(x), G.obj(y), {}};
    if (!XpYp->X->is_id1(th)) ws.letters.push_back(Letter{true, th});
    GrayWord wt{m.dom_t.dom_f.obj(x), G.obj(y), {}};
    if (!XpYp->X->is_id1(th2)) wt.letters.push_back(Letter{true, th2});
    r.components[o] = XpYp->cell_index(
        XpYp->make_cell(ws, wt, m.comp(x), XpYp->Y->id2(XpYp->Y->id1(G.obj(y)))));
  }
  return r;
}

Modification TenAction::two_right(const StrictFunctor& F, const Modification& m) const {
  Modification r{one_right(F, m.dom_t), one_right(F, m.cod_t), {}};
  r.components.resize(XY->cat->objects().size());
  for (size_t o = 0; o < r.components.size(); ++o) {
    auto [x, y] = XY->obj_pair(static_cast<int>(o));
    int io = m.dom_t.comp(y), io2 = m.cod_t.comp(y);
    GrayWord ws{F.obj(x), m.dom_t.dom_f.obj(y), {}};
    if (!XpYp->Y->is_id1(io)) ws.letters.push_back(Letter{false, io});
    GrayWord wt{F.obj(x), m.dom_t.dom_f.obj(y), {}};
    if (!XpYp->Y->is_id1(io2)) wt.letters.push_back(Letter{false, io2});
    r.components[o] = XpYp->cell_index(
        XpYp->make_cell(ws, wt, XpYp->X->id2(XpYp->X->id1(F.obj(x))), m.comp(y)));
  }
  return r;
}

Modification TenAction::sigma(const PseudoNat& theta, const PseudoNat& iota) const {
  Modification r{hcompose_pseudonat(one_left(theta, iota.cod_f),
                                    one_right(theta.dom_f, iota)),
                 hcompose_pseudonat(one_right(theta.cod_f, iota),
                                    one_left(theta, iota.dom_f)),
                 {}};
  r.components.resize(XY->cat->objects().size());
  for (size_t o = 0; o < r.components.size(); ++o) {
    auto [x, y] = XY->obj_pair(static_cast<int>(o));
    r.components[o] = XpYp->cell_index(XpYp->sigma(theta.comp(x), iota.comp(y)));
  }
  return r;
}

StrictFunctor ten_functor(const TenAction& act, const GrayProductView& P, const Hom2& homTen) {
  CubicalFunctor T;
  T.X = act.homA->cat;
  T.Y = act.homB->cat;
  T.prod = TwoCat::product(T.X, T.Y);
  T.cod = homTen.cat;
  const TwoCat& H = *homTen.cat;
  T.on_obj.resize(T.prod->objects().size());
  T.on_one.resize(T.prod->ones().size());
  T.on_two.resize(T.prod->twos().size());
  for (size_t i = 0; i < act.homA->objects.size(); ++i)
    for (size_t j = 0; j < act.homB->objects.size(); ++j)
      T.on_obj[T.oidx(static_cast<int>(i), static_cast<int>(j))] =
          homTen.index_of(act.obj(act.homA->objects[i], act.homB->objects[j]));
  for (size_t i = 0; i < act.homA->ones.size(); ++i)
    for (size_t j = 0; j < act.homB->ones.size(); ++j) {
      const auto& th = act.homA->ones[i];
      const auto& io = act.homB->ones[j];
      int l = homTen.index_of(act.one_left(th, io.dom_f));
      int rr = homTen.index_of(act.one_right(th.cod_f, io));
      T.on_one[T.fidx(static_cast<int>(i), static_cast<int>(j))] = H.compose1(rr, l);
    }
  for (size_t i = 0; i < act.homA->twos.size(); ++i)
    for (size_t j = 0; j < act.homB->twos.size(); ++j) {
      const auto& Ga = act.homA->twos[i];
      const auto& De = act.homB->twos[j];
      int gl = homTen.index_of(act.two_left(Ga, De.dom_t.dom_f));
      int fr = homTen.index_of(act.two_right(Ga.dom_t.cod_f, De));
      int right_prime = homTen.index_of(act.one_right(Ga.dom_t.cod_f, De.cod_t));
      int left_dom = homTen.index_of(act.one_left(Ga.dom_t, De.dom_t.dom_f));
      T.on_two[T.aidx(static_cast<int>(i), static_cast<int>(j))] =
          H.vcomp(H.hcomp(H.id2(right_prime), gl), H.hcomp(fr, H.id2(left_dom)));
    }
  for (size_t i = 0; i < act.homA->ones.size(); ++i)
    for (size_t j = 0; j < act.homB->ones.size(); ++j) {
      if (T.X->is_id1(static_cast<int>(i)) || T.Y->is_id1(static_cast<int>(j))) continue;
      T.sigma_map[{static_cast<int>(i), static_cast<int>(j)}] =
          homTen.index_of(act.sigma(act.homA->ones[i], act.homB->ones[j]));
    }
  return strictify(T, P);
}

// ---------------------------------------------------------------------------

StrictFunctor tensor_unit(const GrayProductView& XL, const Hom2& homL_XL) {
  return curry(identity_functor(XL.cat), XL, homL_XL);
}

StrictFunctor tensor_counit(const Hom2& homLM, const GrayProductView& homLM_L) {
  return uncurry(identity_functor(homLM.cat), homLM_L, homLM);
}

// ---------------------------------------------------------------------------

ValidationReport compare_functors(const StrictFunctor& lhs, const StrictFunctor& rhs,
                                  const std::string& label) {
  ValidationReport rep;
  if (lhs.dom != rhs.dom || lhs.cod != rhs.cod) {
    rep.add(label + ".boundary", {});
    return rep;
  }
  for (size_t o = 0; o < lhs.on_obj.size(); ++o)
    if (lhs.on_obj[o] != rhs.on_obj[o]) rep.add(label + ".obj", {lhs.dom->objects()[o]});
  for (size_t f = 0; f < lhs.on_one.size(); ++f)
    if (lhs.on_one[f] != rhs.on_one[f]) rep.add(label + ".one", {lhs.dom->ones()[f].id});
  for (size_t a = 0; a < lhs.on_two.size(); ++a)
    if (lhs.on_two[a] != rhs.on_two[a]) rep.add(label + ".two", {lhs.dom->twos()[a].id});
  return rep;
}

std::pair<StrictFunctor, StrictFunctor> transformation_lemma_1_sides(
    const std::shared_ptr<const TwoCat>& X, const std::shared_ptr<const TwoCat>& Y,
    const std::shared_ptr<const TwoCat>& L, const std::shared_ptr<const TwoCat>& M,
    const std::shared_ptr<const TwoCat>& N) {
  // shared structure
  auto XM = gray_product(X, M);
  auto YL = gray_product(Y, L);
  auto homXM_N = internal_hom(XM->cat, N);
  auto homYL_M = internal_hom(YL->cat, M);
  auto D = gray_product(homXM_N->cat, homYL_M->cat);

  auto XY = gray_product(X, Y);
  auto YLv = YL;
  auto A = gray_assoc(XY, gray_product(XY->cat, L), YLv, gray_product(X, YLv->cat));
  auto X_YL = A.X_YZ;    // X⊗(Y⊗L)
  auto XY_L = A.XY_Z;    // (X⊗Y)⊗L
  auto homLN = internal_hom(L, N);
  auto homXY_LN = internal_hom(XY->cat, homLN->cat);

  // LHS -------------------------------------------------------------------
  // (X⊗−): [Y⊗L, M] → [X⊗(Y⊗L), X⊗M]
  auto homXYL_XM = internal_hom(X_YL->cat, XM->cat);
  TenAction tl{nullptr, nullptr, X_YL, XM};
  StrictFunctor tensor_left{homYL_M->cat, homXYL_XM->cat, {}, {}, {}};
  {
    auto idX = identity_functor(X);
    tensor_left.on_obj.resize(homYL_M->objects.size());
    tensor_left.on_one.resize(homYL_M->ones.size());
    tensor_left.on_two.resize(homYL_M->twos.size());
    TenAction act{nullptr, nullptr, X_YL, XM};
    for (size_t i = 0; i < homYL_M->objects.size(); ++i)
      tensor_left.on_obj[i] = homXYL_XM->index_of(act.obj(idX, homYL_M->objects[i]));
    for (size_t i = 0; i < homYL_M->ones.size(); ++i)
      tensor_left.on_one[i] = homXYL_XM->index_of(act.one_right(idX, homYL_M->ones[i]));
    for (size_t i = 0; i < homYL_M->twos.size(); ++i)
      tensor_left.on_two[i] = homXYL_XM->index_of(act.two_right(idX, homYL_M->twos[i]));
  }
  (void)tl;
  // 1 ⊗ (X⊗−): D → homXM_N ⊗ homXYL_XM
  auto D2 = gray_product(homXM_N->cat, homXYL_XM->cat);
  auto one_tensor = tensor_functor(identity_functor(homXM_N->cat), tensor_left, *D, *D2);
  // M_L: homXM_N ⊗ homXYL_XM → [X⊗(Y⊗L), N]
  auto homXYL_N = internal_hom(X_YL->cat, N);
  auto ML = m_gray(*homXM_N, *homXYL_XM, *homXYL_N, *D2);
  // L(α,1): [X⊗(Y⊗L), N] → [(X⊗Y)⊗L, N]
  auto homXYL_N2 = internal_hom(XY_L->cat, N);
  auto La = hom_precompose(A.fwd, *homXYL_N, *homXYL_N2);
  // n: [(X⊗Y)⊗L, N] → [X⊗Y, [L,N]]
  auto nf = n_functor(*XY_L, *homXYL_N2, *homLN, *homXY_LN);
  auto lhs = compose_functors(nf, compose_functors(La, compose_functors(ML, one_tensor)));

  // RHS -------------------------------------------------------------------
  auto homMN = internal_hom(M, N);
  auto homLM = internal_hom(L, M);
  auto homX_MN = internal_hom(X, homMN->cat);
  auto homY_LM = internal_hom(Y, homLM->cat);
  auto nA = n_functor(*XM, *homXM_N, *homMN, *homX_MN);
  auto nB = n_functor(*YL, *homYL_M, *homLM, *homY_LM);
  auto D3 = gray_product(homX_MN->cat, homY_LM->cat);
  auto nn = tensor_functor(nA, nB, *D, *D3);
  // Ten: [X,[M,N]]⊗[Y,[L,M]] → [X⊗Y, [M,N]⊗[L,M]]
  auto homsP = gray_product(homMN->cat, homLM->cat);
  auto homXY_homsP = internal_hom(XY->cat, homsP->cat);
  TenAction act2{homX_MN, homY_LM, XY, homsP};
  auto Ten = ten_functor(act2, *D3, *homXY_homsP);
  // [1, M_L]: postcompose with M_L: [M,N]⊗[L,M] → [L,N]
  auto ML2 = m_gray(*homMN, *homLM, *homLN, *homsP);
  auto post = hom_postcompose(ML2, *homXY_homsP, *homXY_LN);
  auto rhs = compose_functors(post, compose_functors(Ten, nn));
  return {lhs, rhs};
}

ValidationReport verify_transformation_lemma_1(
    const std::shared_ptr<const TwoCat>& X, const std::shared_ptr<const TwoCat>& Y,
    const std::shared_ptr<const TwoCat>& L, const std::shared_ptr<const TwoCat>& M,
    const std::shared_ptr<const TwoCat>& N) {
  auto [lhs, rhs] = transformation_lemma_1_sides(X, Y, L, M, N);
  return compare_functors(lhs, rhs, "transformation_lemma_1");
}

std::pair<StrictFunctor, StrictFunctor> transformation_lemma_2_sides(
    const std::shared_ptr<const TwoCat>& X, const std::shared_ptr<const TwoCat>& L,
    const std::shared_ptr<const TwoCat>& M, const std::shared_ptr<const TwoCat>& N) {
  auto XM = gray_product(X, M);
  auto XL = gray_product(X, L);
  auto homXM_N = internal_hom(XM->cat, N);
  auto homLM = internal_hom(L, M);
  auto D = gray_product(homXM_N->cat, homLM->cat);
  auto homLN = internal_hom(L, N);
  auto homX_LN = internal_hom(X, homLN->cat);

  // LHS: n ∘ M_L ∘ (1 ⊗ (X⊗−)_{L,M})
  auto homXL_XM = internal_hom(XL->cat, XM->cat);
  StrictFunctor tensor_left{homLM->cat, homXL_XM->cat, {}, {}, {}};
  {
    auto idX = identity_functor(X);
    TenAction act{nullptr, nullptr, XL, XM};
    tensor_left.on_obj.resize(homLM->objects.size());
    tensor_left.on_one.resize(homLM->ones.size());
    tensor_left.on_two.resize(homLM->twos.size());
    for (size_t i = 0; i < homLM->objects.size(); ++i)
      tensor_left.on_obj[i] = homXL_XM->index_of(act.obj(idX, homLM->objects[i]));
    for (size_t i = 0; i < homLM->ones.size(); ++i)
      tensor_left.on_one[i] = homXL_XM->index_of(act.one_right(idX, homLM->ones[i]));
    for (size_t i = 0; i < homLM->twos.size(); ++i)
      tensor_left.on_two[i] = homXL_XM->index_of(act.two_right(idX, homLM->twos[i]));
  }
  auto D2 = gray_product(homXM_N->cat, homXL_XM->cat);
  auto one_tensor = tensor_functor(identity_functor(homXM_N->cat), tensor_left, *D, *D2);
  auto homXL_N = internal_hom(XL->cat, N);
  auto ML = m_gray(*homXM_N, *homXL_XM, *homXL_N, *D2);
  auto nf = n_functor(*XL, *homXL_N, *homLN, *homX_LN);
  auto lhs = compose_functors(nf, compose_functors(ML, one_tensor));

  // RHS: M_V ∘ (L(−,N) ⊗ n) ∘ c
  auto Dswap = gray_product(homLM->cat, homXM_N->cat);
  auto c = gray_symmetry(*D, *Dswap);
  // L(−,N): [L,M] → [[M,N],[L,N]]  (curry of M_L∘c on the hom level)
  auto homMN = internal_hom(M, N);
  auto homMN_LN = internal_hom(homMN->cat, homLN->cat);
  auto PHom = gray_product(homMN->cat, homLM->cat);
  auto ML3 = m_gray(*homMN, *homLM, *homLN, *PHom);
  auto PHomSwap = gray_product(homLM->cat, homMN->cat);
  auto cH = gray_symmetry(*PHomSwap, *PHom);
  auto MLc = compose_functors(ML3, cH);
  auto contra = curry(MLc, *PHomSwap, *homMN_LN);
  // n: [X⊗M, N] → [X, [M,N]]
  auto homX_MN = internal_hom(X, homMN->cat);
  auto nA = n_functor(*XM, *homXM_N, *homMN, *homX_MN);
  auto D3 = gray_product(homMN_LN->cat, homX_MN->cat);
  auto pair_f = tensor_functor(contra, nA, *Dswap, *D3);
  // M_V: [[M,N],[L,N]] ⊗ [X,[M,N]] → [X,[L,N]]
  auto MV = m_gray(*homMN_LN, *homX_MN, *homX_LN, *D3);
  auto rhs = compose_functors(MV, compose_functors(pair_f, c));
  return {lhs, rhs};
}

ValidationReport verify_transformation_lemma_2(
    const std::shared_ptr<const TwoCat>& X, const std::shared_ptr<const TwoCat>& L,
    const std::shared_ptr<const TwoCat>& M, const std::shared_ptr<const TwoCat>& N) {
  auto [lhs, rhs] = transformation_lemma_2_sides(X, L, M, N);
  return compare_functors(lhs, rhs, "transformation_lemma_2");
}

ValidationReport verify_pentagon_triangle(const std::shared_ptr<const TwoCat>& W,
                                          const std::shared_ptr<const TwoCat>& X,
                                          const std::shared_ptr<const TwoCat>& Y,
                                          const std::shared_ptr<const TwoCat>& L) {
  ValidationReport rep;
  // pentagon
  auto WX = gray_product(W, X);
  auto XY = gray_product(X, Y);
  auto YL = gray_product(Y, L);
  auto WX_Y = gray_product(WX->cat, Y);
  auto WXY_L = gray_product(WX_Y->cat, L);
  auto W_XY = gray_product(W, XY->cat);
  auto XY_L = gray_product(XY->cat, L);
  auto X_YL = gray_product(X, YL->cat);
  auto WX_YL = gray_product(WX->cat, YL->cat);
  auto W_XY_L = gray_product(W_XY->cat, L);
  auto W_XYL = gray_product(W, XY_L->cat);
  auto W_X_YL = gray_product(W, X_YL->cat);

  auto A1 = gray_assoc(WX_Y, WXY_L, YL, WX_YL);       // ((WX)Y)L → (WX)(YL)
  auto A2 = gray_assoc(WX, WX_YL, X_YL, W_X_YL);      // (WX)(YL) → W(X(YL))
  auto lhs = compose_functors(A2.fwd, A1.fwd);

  auto A3 = gray_assoc(WX, WX_Y, XY, W_XY);           // (WX)Y → W(XY)
  auto t1 = tensor_functor(A3.fwd, identity_functor(L), *WXY_L, *W_XY_L);
  auto A4 = gray_assoc(W_XY, W_XY_L, XY_L, W_XYL);    // (W(XY))L → W((XY)L)
  auto A5 = gray_assoc(XY, XY_L, YL, X_YL);           // (XY)L → X(YL)
  auto t2 = tensor_functor(identity_functor(W), A5.fwd, *W_XYL, *W_X_YL);
  auto rhs = compose_functors(t2, compose_functors(A4.fwd, t1));
  rep.merge(compare_functors(lhs, rhs, "pentagon"));

  // triangle: (r_X ⊗ 1_L) ∘ α⁻¹_{X,I,L} = 1_X ⊗ λ_L on X⊗(I⊗L)
  auto A = gray_assoc(X, unit_twocat(), L);
  auto r = gray_runitor(A.XY);
  auto lam = gray_lunitor(A.YZ);
  auto XLv = gray_product(X, L);
  auto tl = tensor_functor(r.fwd, identity_functor(L), *A.XY_Z, *XLv);
  auto tr = tensor_functor(identity_functor(X), lam.fwd, *A.X_YZ, *XLv);
  rep.merge(compare_functors(compose_functors(tl, A.bwd), tr, "triangle"));
  return rep;
}

ValidationReport verify_ml_identification(const std::shared_ptr<const TwoCat>& L,
                                          const std::shared_ptr<const TwoCat>& M,
                                          const std::shared_ptr<const TwoCat>& N) {
  // M_L = curry(ε^M_N ∘ (1⊗ε^L_M) ∘ α) on [M,N]⊗[L,M]
  auto homMN = internal_hom(M, N);
  auto homLM = internal_hom(L, M);
  auto homLN = internal_hom(L, N);
  auto Z = gray_product(homMN->cat, homLM->cat);
  auto ml = m_gray(*homMN, *homLM, *homLN, *Z);
  auto homLM_L = gray_product(homLM->cat, L);
  auto ZL = gray_product(Z->cat, L);
  auto MN_LML = gray_product(homMN->cat, homLM_L->cat);
  auto A = gray_assoc(Z, ZL, homLM_L, MN_LML);
  auto epsM = tensor_counit(*homLM, *homLM_L);
  auto homMN_M = gray_product(homMN->cat, M);
  auto t = tensor_functor(identity_functor(homMN->cat), epsM, *A.X_YZ, *homMN_M);
  auto epsN = tensor_counit(*homMN, *homMN_M);
  auto h = compose_functors(epsN, compose_functors(t, A.fwd));
  auto curried = curry(h, *ZL, *homLN);
  return compare_functors(ml, curried, "ml_identification");
}

}  // namespace gk
