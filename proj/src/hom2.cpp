#include "graykernel/hom2.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gk {

StrictFunctor identity_functor(const std::shared_ptr<const TwoCat>& X) {
  StrictFunctor F{X, X, {}, {}, {}};
  F.on_obj.resize(X->objects().size());
  F.on_one.resize(X->ones().size());
  F.on_two.resize(X->twos().size());
  for (size_t i = 0; i < F.on_obj.size(); ++i) F.on_obj[i] = static_cast<int>(i);
  for (size_t i = 0; i < F.on_one.size(); ++i) F.on_one[i] = static_cast<int>(i);
  for (size_t i = 0; i < F.on_two.size(); ++i) F.on_two[i] = static_cast<int>(i);
  return F;
}

StrictFunctor compose_functors(const StrictFunctor& g, const StrictFunctor& f) {
  if (f.cod != g.dom) throw NotComposable("compose_functors: codomain/domain mismatch");
  StrictFunctor h{f.dom, g.cod, f.on_obj, f.on_one, f.on_two};
  for (auto& v : h.on_obj) v = g.on_obj[v];
  for (auto& v : h.on_one) v = g.on_one[v];
  for (auto& v : h.on_two) v = g.on_two[v];
  return h;
}

StrictFunctor constant_functor(const std::shared_ptr<const TwoCat>& X,
                               const std::shared_ptr<const TwoCat>& Y, int obj) {
  StrictFunctor F{X, Y, {}, {}, {}};
  F.on_obj.assign(X->objects().size(), obj);
  F.on_one.assign(X->ones().size(), Y->id1(obj));
  F.on_two.assign(X->twos().size(), Y->id2(Y->id1(obj)));
  return F;
}

ValidationReport validate_strict_functor(const StrictFunctor& F) {
  ValidationReport rep;
  const TwoCat& X = *F.dom;
  const TwoCat& Y = *F.cod;
  if (F.on_obj.size() != X.objects().size() || F.on_one.size() != X.ones().size() ||
      F.on_two.size() != X.twos().size())
    throw MalformedTable("functor tables have wrong arity");
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f) {
    if (Y.one_src(F.one(f)) != F.obj(X.one_src(f)) || Y.one_tgt(F.one(f)) != F.obj(X.one_tgt(f)))
      rep.add("functor.boundary1", {X.ones()[f].id});
  }
  for (int a = 0; a < static_cast<int>(X.twos().size()); ++a) {
    if (Y.two_src(F.two(a)) != F.one(X.two_src(a)) || Y.two_tgt(F.two(a)) != F.one(X.two_tgt(a)))
      rep.add("functor.boundary2", {X.twos()[a].id});
  }
  for (int o = 0; o < static_cast<int>(X.objects().size()); ++o)
    if (F.one(X.id1(o)) != Y.id1(F.obj(o))) rep.add("functor.id1", {X.objects()[o]});
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    if (F.two(X.id2(f)) != Y.id2(F.one(f))) rep.add("functor.id2", {X.ones()[f].id});
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int g = 0; g < static_cast<int>(X.ones().size()); ++g) {
      if (X.one_tgt(f) != X.one_src(g)) continue;
      if (F.one(X.compose1(g, f)) != Y.compose1(F.one(g), F.one(f)))
        rep.add("functor.compose1", {X.ones()[g].id, X.ones()[f].id});
    }
  for (int a = 0; a < static_cast<int>(X.twos().size()); ++a)
    for (int c = 0; c < static_cast<int>(X.twos().size()); ++c) {
      if (X.two_tgt(a) == X.two_src(c) &&
          F.two(X.vcomp(c, a)) != Y.vcomp(F.two(c), F.two(a)))
        rep.add("functor.vcomp", {X.twos()[c].id, X.twos()[a].id});
      if (X.one_tgt(X.two_src(a)) == X.one_src(X.two_src(c)) &&
          F.two(X.hcomp(c, a)) != Y.hcomp(F.two(c), F.two(a)))
        rep.add("functor.hcomp", {X.twos()[c].id, X.twos()[a].id});
    }
  return rep;
}

ValidationReport validate_pseudonat(const PseudoNat& t) {
  ValidationReport rep;
  const TwoCat& X = *t.X();
  const TwoCat& Y = *t.Y();
  const StrictFunctor& F = t.dom_f;
  const StrictFunctor& G = t.cod_f;
  if (!(F.dom == G.dom && F.cod == G.cod)) throw BoundaryMismatch("pseudonat between non-parallel functors");
  if (t.components.size() != X.objects().size() || t.nat2.size() != X.ones().size())
    throw MalformedTable("pseudonat tables have wrong arity");
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x) {
    int c = t.comp(x);
    if (Y.one_src(c) != F.obj(x) || Y.one_tgt(c) != G.obj(x))
      rep.add("pseudonat.component_boundary", {X.objects()[x]});
  }
  std::vector<bool> bad(X.ones().size(), false);
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f) {
    int x = X.one_src(f), xp = X.one_tgt(f);
    int n = t.nat(f);
    int want_src = Y.compose1(t.comp(xp), F.one(f));
    int want_tgt = Y.compose1(G.one(f), t.comp(x));
    if (Y.two_src(n) != want_src || Y.two_tgt(n) != want_tgt) {
      rep.add("pseudonat.nat_boundary", {X.ones()[f].id});
      bad[f] = true;
      continue;
    }
    if (!Y.dual_checks(n)) rep.add("pseudonat.nat_invertible", {X.ones()[f].id});
  }
  // unit: θ_{1_x} = 1_{θ_x}
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x) {
    int f = X.id1(x);
    if (!bad[f] && t.nat(f) != Y.id2(t.comp(x))) rep.add("pseudonat.unit", {X.objects()[x]});
  }
  // composition: θ_{g∗f} = (1_{Gg} ∗ θ_f) ⋄ (θ_g ∗ 1_{Ff})
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int g = 0; g < static_cast<int>(X.ones().size()); ++g) {
      if (X.one_tgt(f) != X.one_src(g)) continue;
      if (bad[f] || bad[g] || bad[X.compose1(g, f)]) continue;
      int lhs = t.nat(X.compose1(g, f));
      int rhs = Y.vcomp(Y.hcomp(Y.id2(G.one(g)), t.nat(f)), Y.hcomp(t.nat(g), Y.id2(F.one(f))));
      if (lhs != rhs) rep.add("pseudonat.composition", {X.ones()[g].id, X.ones()[f].id});
    }
  // 2-naturality: (G(α) ∗ 1_{θ_x}) ⋄ θ_f = θ_{f'} ⋄ (1_{θ_{x'}} ∗ F(α))
  for (int al = 0; al < static_cast<int>(X.twos().size()); ++al) {
    int f = X.two_src(al), fp = X.two_tgt(al);
    if (bad[f] || bad[fp]) continue;
    int x = X.one_src(f), xp = X.one_tgt(f);
    int lhs = Y.vcomp(Y.hcomp(G.two(al), Y.id2(t.comp(x))), t.nat(f));
    int rhs = Y.vcomp(t.nat(fp), Y.hcomp(Y.id2(t.comp(xp)), F.two(al)));
    if (lhs != rhs) rep.add("pseudonat.naturality2", {X.twos()[al].id});
  }
  return rep;
}

ValidationReport validate_modification(const Modification& m) {
  ValidationReport rep;
  const PseudoNat& s = m.dom_t;
  const PseudoNat& t = m.cod_t;
  const TwoCat& X = *s.X();
  const TwoCat& Y = *s.Y();
  if (!(s.dom_f == t.dom_f && s.cod_f == t.cod_f))
    throw BoundaryMismatch("modification between non-parallel pseudonats");
  if (m.components.size() != X.objects().size())
    throw MalformedTable("modification table has wrong arity");
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x) {
    int c = m.comp(x);
    if (Y.two_src(c) != s.comp(x) || Y.two_tgt(c) != t.comp(x))
      rep.add("modification.component_boundary", {X.objects()[x]});
  }
  // (1_{Gf} ∗ Γ_x) ⋄ θ_f = θ'_f ⋄ (Γ_{x'} ∗ 1_{Ff})
  const StrictFunctor& F = s.dom_f;
  const StrictFunctor& G = s.cod_f;
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f) {
    int x = X.one_src(f), xp = X.one_tgt(f);
    int lhs = Y.vcomp(Y.hcomp(Y.id2(G.one(f)), m.comp(x)), s.nat(f));
    int rhs = Y.vcomp(t.nat(f), Y.hcomp(m.comp(xp), Y.id2(F.one(f))));
    if (lhs != rhs) rep.add("modification.compat", {X.ones()[f].id});
  }
  return rep;
}

PseudoNat identity_pseudonat(const StrictFunctor& F) {
  PseudoNat t{F, F, {}, {}};
  const TwoCat& X = *F.dom;
  const TwoCat& Y = *F.cod;
  t.components.resize(X.objects().size());
  t.nat2.resize(X.ones().size());
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x)
    t.components[x] = Y.id1(F.obj(x));
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f) t.nat2[f] = Y.id2(F.one(f));
  return t;
}

Modification identity_modification(const PseudoNat& t) {
  Modification m{t, t, {}};
  m.components.resize(t.components.size());
  for (size_t x = 0; x < t.components.size(); ++x)
    m.components[x] = t.Y()->id2(t.components[x]);
  return m;
}

PseudoNat hcompose_pseudonat(const PseudoNat& tau, const PseudoNat& sigma) {
  if (!(sigma.cod_f == tau.dom_f)) throw NotComposable("hcompose_pseudonat: boundary mismatch");
  const TwoCat& X = *sigma.X();
  const TwoCat& Y = *sigma.Y();
  PseudoNat r{sigma.dom_f, tau.cod_f, {}, {}};
  r.components.resize(X.objects().size());
  r.nat2.resize(X.ones().size());
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x)
    r.components[x] = Y.compose1(tau.comp(x), sigma.comp(x));
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f) {
    int x = X.one_src(f);
    int xp = X.one_tgt(f);
    // (τ_f ∗ 1_{σ_x}) ⋄ (1_{τ_{x'}} ∗ σ_f)
    r.nat2[f] = Y.vcomp(Y.hcomp(tau.nat(f), Y.id2(sigma.comp(x))),
                        Y.hcomp(Y.id2(tau.comp(xp)), sigma.nat(f)));
  }
  return r;
}

Modification vcompose_mod(const Modification& b, const Modification& a) {
  if (!(a.cod_t == b.dom_t)) throw NotComposable("vcompose_mod: boundary mismatch");
  Modification r{a.dom_t, b.cod_t, a.components};
  const TwoCat& Y = *a.dom_t.Y();
  for (size_t x = 0; x < r.components.size(); ++x)
    r.components[x] = Y.vcomp(b.components[x], a.components[x]);
  return r;
}

Modification hcompose_mod(const Modification& b, const Modification& a) {
  // a: σ⇒σ': F⇒G,  b: τ⇒τ': G⇒H.
  if (!(a.dom_t.cod_f == b.dom_t.dom_f)) throw NotComposable("hcompose_mod: boundary mismatch");
  Modification r{hcompose_pseudonat(b.dom_t, a.dom_t), hcompose_pseudonat(b.cod_t, a.cod_t), {}};
  const TwoCat& Y = *a.dom_t.Y();
  r.components.resize(a.components.size());
  for (size_t x = 0; x < r.components.size(); ++x)
    r.components[x] = Y.hcomp(b.components[x], a.components[x]);
  return r;
}

PseudoNat whisker_functor_pre(const PseudoNat& theta, const StrictFunctor& G) {
  if (G.cod != theta.X()) throw NotComposable("whisker_functor_pre: boundary mismatch");
  PseudoNat r{compose_functors(theta.dom_f, G), compose_functors(theta.cod_f, G), {}, {}};
  r.components.resize(G.dom->objects().size());
  r.nat2.resize(G.dom->ones().size());
  for (size_t x = 0; x < r.components.size(); ++x) r.components[x] = theta.comp(G.obj(static_cast<int>(x)));
  for (size_t f = 0; f < r.nat2.size(); ++f) r.nat2[f] = theta.nat(G.one(static_cast<int>(f)));
  return r;
}

PseudoNat whisker_functor_post(const StrictFunctor& F, const PseudoNat& theta) {
  if (theta.Y() != F.dom) throw NotComposable("whisker_functor_post: boundary mismatch");
  PseudoNat r{compose_functors(F, theta.dom_f), compose_functors(F, theta.cod_f), {}, {}};
  r.components = theta.components;
  r.nat2 = theta.nat2;
  for (auto& c : r.components) c = F.one(c);
  for (auto& n : r.nat2) n = F.two(n);
  return r;
}

Modification whisker_functor_pre(const Modification& m, const StrictFunctor& G) {
  Modification r{whisker_functor_pre(m.dom_t, G), whisker_functor_pre(m.cod_t, G), {}};
  r.components.resize(G.dom->objects().size());
  for (size_t x = 0; x < r.components.size(); ++x) r.components[x] = m.comp(G.obj(static_cast<int>(x)));
  return r;
}

Modification whisker_functor_post(const StrictFunctor& F, const Modification& m) {
  Modification r{whisker_functor_post(F, m.dom_t), whisker_functor_post(F, m.cod_t), m.components};
  for (auto& c : r.components) c = F.two(c);
  return r;
}

PseudoNat invert_pseudonat_strict(const PseudoNat& t) {
  const TwoCat& X = *t.X();
  const TwoCat& Y = *t.Y();
  PseudoNat r{t.cod_f, t.dom_f, {}, {}};
  r.components.resize(X.objects().size());
  r.nat2.resize(X.ones().size());
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x) {
    int c = t.comp(x);
    // strict two-sided inverse 1-cell
    int inv = -1;
    for (int d = 0; d < static_cast<int>(Y.ones().size()); ++d) {
      if (Y.one_src(d) != Y.one_tgt(c) || Y.one_tgt(d) != Y.one_src(c)) continue;
      if (Y.compose1(d, c) == Y.id1(Y.one_src(c)) && Y.compose1(c, d) == Y.id1(Y.one_tgt(c))) {
        inv = d;
        break;
      }
    }
    if (inv < 0) throw NotEquivalence("pseudonat component has no strict inverse");
    r.components[x] = inv;
  }
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f) {
    int x = X.one_src(f), xp = X.one_tgt(f);
    // conjugate the inverse of θ_f by the inverse components
    int n = t.nat(f);
    int ninv = -1;
    for (int d = 0; d < static_cast<int>(Y.twos().size()); ++d) {
      if (Y.two_src(d) != Y.two_tgt(n) || Y.two_tgt(d) != Y.two_src(n)) continue;
      if (Y.vcomp(d, n) == Y.id2(Y.two_src(n)) && Y.vcomp(n, d) == Y.id2(Y.two_tgt(n))) {
        ninv = d;
        break;
      }
    }
    if (ninv < 0) throw NotEquivalence("pseudonat nat-cell is not invertible");
    // r_f := 1_{r_{x'}} ∗ ninv ∗ 1_{r_x}; the strict invertibility of the
    // components collapses the padded composites to the right boundaries.
    const StrictFunctor& F = t.dom_f;
    const StrictFunctor& G = t.cod_f;
    int want_src = Y.compose1(r.comp(xp), G.one(f));
    int want_tgt = Y.compose1(F.one(f), r.comp(x));
    int cell = Y.hcomp(Y.id2(r.comp(xp)), Y.hcomp(ninv, Y.id2(r.comp(x))));
    if (Y.two_src(cell) != want_src || Y.two_tgt(cell) != want_tgt)
      throw NotEquivalence("strict pseudonat inverse does not exist");
    r.nat2[f] = cell;
  }
  PseudoNat check = hcompose_pseudonat(r, t);
  if (!(check == identity_pseudonat(t.dom_f)))
    throw NotEquivalence("pseudonat has no strict inverse (left)");
  check = hcompose_pseudonat(t, r);
  if (!(check == identity_pseudonat(t.cod_f)))
    throw NotEquivalence("pseudonat has no strict inverse (right)");
  return r;
}

Modification invert_modification(const Modification& m) {
  const TwoCat& Y = *m.dom_t.Y();
  Modification r{m.cod_t, m.dom_t, m.components};
  for (auto& c : r.components) {
    int inv = -1;
    for (int d = 0; d < static_cast<int>(Y.twos().size()); ++d) {
      if (Y.two_src(d) != Y.two_tgt(c) || Y.two_tgt(d) != Y.two_src(c)) continue;
      if (Y.vcomp(d, c) == Y.id2(Y.two_src(c)) && Y.vcomp(c, d) == Y.id2(Y.two_tgt(c))) {
        inv = d;
        break;
      }
    }
    if (inv < 0) throw NotEquivalence("modification component not invertible");
    c = inv;
  }
  return r;
}

ValidationReport check_adjoint_equivalence(const AdjointEquivalence& ae) {
  ValidationReport rep;
  const TwoCat& K = *ae.K;
  int e = ae.left, d = ae.right;
  if (K.one_src(d) != K.one_tgt(e) || K.one_tgt(d) != K.one_src(e))
    throw BoundaryMismatch("adjoint equivalence 1-cells do not compose");
  int A = K.one_src(e), B = K.one_tgt(e);
  int de = K.compose1(d, e), ed = K.compose1(e, d);
  if (K.two_src(ae.unit) != K.id1(A) || K.two_tgt(ae.unit) != de)
    rep.add("adjequiv.unit_boundary", {K.twos()[ae.unit].id});
  if (K.two_src(ae.counit) != ed || K.two_tgt(ae.counit) != K.id1(B))
    rep.add("adjequiv.counit_boundary", {K.twos()[ae.counit].id});
  if (!rep.ok()) return rep;
  if (!K.dual_checks(ae.unit)) rep.add("adjequiv.unit_invertible", {K.twos()[ae.unit].id});
  if (!K.dual_checks(ae.counit)) rep.add("adjequiv.counit_invertible", {K.twos()[ae.counit].id});
  // (ε ∗ 1_e) ⋄ (1_e ∗ η) = 1_e
  int t1 = K.vcomp(K.hcomp(ae.counit, K.id2(e)), K.hcomp(K.id2(e), ae.unit));
  if (t1 != K.id2(e)) rep.add("adjequiv.triangle_left", {K.ones()[e].id});
  // (1_{e•} ∗ ε) ⋄ (η ∗ 1_{e•}) = 1_{e•}
  int t2 = K.vcomp(K.hcomp(K.id2(d), ae.counit), K.hcomp(ae.unit, K.id2(d)));
  if (t2 != K.id2(d)) rep.add("adjequiv.triangle_right", {K.ones()[d].id});
  return rep;
}

// ---------------------------------------------------------------------------
// Enumeration.

std::vector<StrictFunctor> enumerate_strict_functors(const std::shared_ptr<const TwoCat>& X,
                                                     const std::shared_ptr<const TwoCat>& Y) {
  std::vector<StrictFunctor> out;
  const int nobj = static_cast<int>(X->objects().size());
  const int none = static_cast<int>(X->ones().size());
  const int ntwo = static_cast<int>(X->twos().size());
  StrictFunctor F{X, Y, std::vector<int>(nobj, -1), std::vector<int>(none, -1),
                  std::vector<int>(ntwo, -1)};

  // nonidentity cells in canonical order; identities are forced
  std::vector<int> free_ones, free_twos;
  for (int f = 0; f < none; ++f)
    if (!X->is_id1(f)) free_ones.push_back(f);
  for (int a = 0; a < ntwo; ++a)
    if (!X->is_id2(a)) free_twos.push_back(a);

  std::function<void(size_t)> pick_two = [&](size_t k) {
    if (k == free_twos.size()) {
      // verify compositions on 2-cells
      for (int a = 0; a < ntwo; ++a)
        for (int b = 0; b < ntwo; ++b) {
          if (X->two_tgt(a) == X->two_src(b) &&
              F.two(X->vcomp(b, a)) != Y->vcomp(F.two(b), F.two(a)))
            return;
          if (X->one_tgt(X->two_src(a)) == X->one_src(X->two_src(b)) &&
              F.two(X->hcomp(b, a)) != Y->hcomp(F.two(b), F.two(a)))
            return;
        }
      out.push_back(F);
      if (out.size() > max_cells())
        throw EnumerationTooLarge("strict functor enumeration exceeds cap");
      return;
    }
    int a = free_twos[k];
    int sf = F.one(X->two_src(a)), tf = F.one(X->two_tgt(a));
    for (int img = 0; img < static_cast<int>(Y->twos().size()); ++img) {
      if (Y->two_src(img) != sf || Y->two_tgt(img) != tf) continue;
      F.on_two[a] = img;
      // eager partial check: composites with already-assigned cells
      bool ok = true;
      for (size_t j = 0; j <= k && ok; ++j) {
        int c = free_twos[j];
        if (X->two_tgt(a) == X->two_src(c) && F.on_two[X->vcomp(c, a)] >= 0 &&
            F.on_two[X->vcomp(c, a)] != Y->vcomp(F.two(c), F.two(a)))
          ok = false;
        if (ok && X->two_tgt(c) == X->two_src(a) && F.on_two[X->vcomp(a, c)] >= 0 &&
            F.on_two[X->vcomp(a, c)] != Y->vcomp(F.two(a), F.two(c)))
          ok = false;
      }
      if (ok) pick_two(k + 1);
    }
    F.on_two[a] = -1;
  };

  std::function<void(size_t)> pick_one = [&](size_t k) {
    if (k == free_ones.size()) {
      // verify 1-cell composition, then fill forced identity 2-cells
      for (int f = 0; f < none; ++f)
        for (int g = 0; g < none; ++g) {
          if (X->one_tgt(f) != X->one_src(g)) continue;
          if (F.one(X->compose1(g, f)) != Y->compose1(F.one(g), F.one(f))) return;
        }
      for (int f = 0; f < none; ++f) F.on_two[X->id2(f)] = Y->id2(F.one(f));
      pick_two(0);
      for (int f = 0; f < none; ++f) F.on_two[X->id2(f)] = -1;
      return;
    }
    int f = free_ones[k];
    int so = F.obj(X->one_src(f)), to = F.obj(X->one_tgt(f));
    for (int img = 0; img < static_cast<int>(Y->ones().size()); ++img) {
      if (Y->one_src(img) != so || Y->one_tgt(img) != to) continue;
      F.on_one[f] = img;
      bool ok = true;
      for (size_t j = 0; j <= k && ok; ++j) {
        int g = free_ones[j];
        if (X->one_tgt(f) == X->one_src(g) && F.on_one[X->compose1(g, f)] >= 0 &&
            F.on_one[X->compose1(g, f)] != Y->compose1(F.one(g), F.one(f)))
          ok = false;
        if (ok && X->one_tgt(g) == X->one_src(f) && F.on_one[X->compose1(f, g)] >= 0 &&
            F.on_one[X->compose1(f, g)] != Y->compose1(F.one(f), F.one(g)))
          ok = false;
      }
      if (ok) pick_one(k + 1);
    }
    F.on_one[f] = -1;
  };

  std::function<void(int)> pick_obj = [&](int k) {
    if (k == nobj) {
      for (int o = 0; o < nobj; ++o) F.on_one[X->id1(o)] = Y->id1(F.obj(o));
      pick_one(0);
      for (int o = 0; o < nobj; ++o) F.on_one[X->id1(o)] = -1;
      return;
    }
    for (int img = 0; img < static_cast<int>(Y->objects().size()); ++img) {
      F.on_obj[k] = img;
      pick_obj(k + 1);
    }
    F.on_obj[k] = -1;
  };
  pick_obj(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PseudoNat> enumerate_pseudonats(const StrictFunctor& F, const StrictFunctor& G) {
  std::vector<PseudoNat> out;
  const TwoCat& X = *F.dom;
  const TwoCat& Y = *F.cod;
  const int nobj = static_cast<int>(X.objects().size());
  const int none = static_cast<int>(X.ones().size());
  PseudoNat t{F, G, std::vector<int>(nobj, -1), std::vector<int>(none, -1)};
  std::vector<int> free_ones;
  for (int f = 0; f < none; ++f)
    if (!X.is_id1(f)) free_ones.push_back(f);

  std::function<void(size_t)> pick_nat = [&](size_t k) {
    if (k == free_ones.size()) {
      PseudoNat cand = t;
      for (int x = 0; x < nobj; ++x) cand.nat2[X.id1(x)] = Y.id2(cand.comp(x));
      if (validate_pseudonat(cand).ok()) {
        out.push_back(cand);
        if (out.size() > max_cells()) throw EnumerationTooLarge("pseudonat enumeration exceeds cap");
      }
      return;
    }
    int f = free_ones[k];
    int x = X.one_src(f), xp = X.one_tgt(f);
    int s = Y.compose1(t.comp(xp), F.one(f));
    int tg = Y.compose1(G.one(f), t.comp(x));
    for (int n = 0; n < static_cast<int>(Y.twos().size()); ++n) {
      if (Y.two_src(n) != s || Y.two_tgt(n) != tg) continue;
      if (!Y.dual_checks(n)) continue;
      t.nat2[f] = n;
      pick_nat(k + 1);
    }
    t.nat2[f] = -1;
  };

  std::function<void(int)> pick_comp = [&](int x) {
    if (x == nobj) {
      pick_nat(0);
      return;
    }
    for (int c = 0; c < static_cast<int>(Y.ones().size()); ++c) {
      if (Y.one_src(c) != F.obj(x) || Y.one_tgt(c) != G.obj(x)) continue;
      t.components[x] = c;
      pick_comp(x + 1);
    }
    t.components[x] = -1;
  };
  pick_comp(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Modification> enumerate_modifications(const PseudoNat& s, const PseudoNat& t) {
  std::vector<Modification> out;
  const TwoCat& X = *s.X();
  const TwoCat& Y = *s.Y();
  const int nobj = static_cast<int>(X.objects().size());
  Modification m{s, t, std::vector<int>(nobj, -1)};
  std::function<void(int)> pick = [&](int x) {
    if (x == nobj) {
      if (validate_modification(m).ok()) {
        out.push_back(m);
        if (out.size() > max_cells())
          throw EnumerationTooLarge("modification enumeration exceeds cap");
      }
      return;
    }
    for (int c = 0; c < static_cast<int>(Y.twos().size()); ++c) {
      if (Y.two_src(c) != s.comp(x) || Y.two_tgt(c) != t.comp(x)) continue;
      m.components[x] = c;
      pick(x + 1);
    }
    m.components[x] = -1;
  };
  pick(0);
  std::sort(out.begin(), out.end());
  return out;
}

int Hom2::index_of(const StrictFunctor& F) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), F);
  if (it == objects.end() || !(*it == F)) throw NotInImage("functor not an object of the hom");
  return static_cast<int>(it - objects.begin());
}
int Hom2::index_of(const PseudoNat& t) const {
  for (size_t i = 0; i < ones.size(); ++i)
    if (ones[i] == t) return static_cast<int>(i);
  throw NotInImage("pseudonat not a 1-cell of the hom");
}
int Hom2::index_of(const Modification& m) const {
  for (size_t i = 0; i < twos.size(); ++i)
    if (twos[i] == m) return static_cast<int>(i);
  throw NotInImage("modification not a 2-cell of the hom");
}

std::shared_ptr<const Hom2> internal_hom(const std::shared_ptr<const TwoCat>& X,
                                         const std::shared_ptr<const TwoCat>& Y) {
  auto hom = std::make_shared<Hom2>();
  hom->X = X;
  hom->Y = Y;
  hom->objects = enumerate_strict_functors(X, Y);
  if (hom->objects.size() > max_cells())
    throw EnumerationTooLarge("internal_hom object count " + std::to_string(hom->objects.size()));
  for (size_t i = 0; i < hom->objects.size(); ++i)
    for (size_t j = 0; j < hom->objects.size(); ++j) {
      auto nats = enumerate_pseudonats(hom->objects[i], hom->objects[j]);
      hom->ones.insert(hom->ones.end(), nats.begin(), nats.end());
    }
  for (const auto& s : hom->ones)
    for (const auto& t : hom->ones) {
      if (!(s.dom_f == t.dom_f && s.cod_f == t.cod_f)) continue;
      auto mods = enumerate_modifications(s, t);
      hom->twos.insert(hom->twos.end(), mods.begin(), mods.end());
    }

  TwoCatBuilder b("[" + X->name() + "," + Y->name() + "]");
  for (size_t i = 0; i < hom->objects.size(); ++i) b.add_object("F" + std::to_string(i));
  std::map<PseudoNat, int> one_idx;
  for (size_t i = 0; i < hom->ones.size(); ++i) {
    one_idx[hom->ones[i]] = static_cast<int>(i);
    b.add_one("t" + std::to_string(i), hom->index_of(hom->ones[i].dom_f),
              hom->index_of(hom->ones[i].cod_f));
  }
  std::map<Modification, int> two_idx;
  for (size_t i = 0; i < hom->twos.size(); ++i) {
    two_idx[hom->twos[i]] = static_cast<int>(i);
    b.add_two("m" + std::to_string(i), one_idx.at(hom->twos[i].dom_t),
              one_idx.at(hom->twos[i].cod_t));
  }
  for (size_t i = 0; i < hom->objects.size(); ++i)
    b.set_id1(static_cast<int>(i), one_idx.at(identity_pseudonat(hom->objects[i])));
  for (size_t i = 0; i < hom->ones.size(); ++i)
    b.set_id2(static_cast<int>(i), two_idx.at(identity_modification(hom->ones[i])));
  for (size_t i = 0; i < hom->ones.size(); ++i)
    for (size_t j = 0; j < hom->ones.size(); ++j) {
      const auto& s = hom->ones[i];
      const auto& t = hom->ones[j];
      if (s.cod_f == t.dom_f)
        b.set_hcomp1(static_cast<int>(j), static_cast<int>(i),
                     one_idx.at(hcompose_pseudonat(t, s)));
    }
  for (size_t i = 0; i < hom->twos.size(); ++i)
    for (size_t j = 0; j < hom->twos.size(); ++j) {
      const auto& a = hom->twos[i];
      const auto& c = hom->twos[j];
      if (a.cod_t == c.dom_t)
        b.set_vcomp2(static_cast<int>(j), static_cast<int>(i), two_idx.at(vcompose_mod(c, a)));
      if (a.dom_t.cod_f == c.dom_t.dom_f)
        b.set_hcomp2(static_cast<int>(j), static_cast<int>(i), two_idx.at(hcompose_mod(c, a)));
    }
  for (size_t i = 0; i < hom->twos.size(); ++i) {
    bool inv = true;
    for (int c : hom->twos[i].components)
      if (!Y->dual_checks(c)) {
        inv = false;
        break;
      }
    if (inv) b.set_inverse2(static_cast<int>(i), two_idx.at(invert_modification(hom->twos[i])));
  }
  hom->cat = b.finish();
  return hom;
}

StrictFunctor evaluation_at(const Hom2& hom, int x) {
  StrictFunctor F{hom.cat, hom.Y, {}, {}, {}};
  F.on_obj.resize(hom.objects.size());
  F.on_one.resize(hom.ones.size());
  F.on_two.resize(hom.twos.size());
  for (size_t i = 0; i < hom.objects.size(); ++i) F.on_obj[i] = hom.objects[i].obj(x);
  for (size_t i = 0; i < hom.ones.size(); ++i) F.on_one[i] = hom.ones[i].comp(x);
  for (size_t i = 0; i < hom.twos.size(); ++i) F.on_two[i] = hom.twos[i].comp(x);
  return F;
}

}  // namespace gk
