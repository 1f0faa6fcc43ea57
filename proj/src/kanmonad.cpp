#include "graykernel/kanmonad.hpp"

#include <algorithm>
#include <functional>

namespace gk {

FamFunctor fam_identity(const ObFamily& A) {
  FamFunctor f;
  for (const auto& v : A.values) f.push_back(identity_functor(v));
  return f;
}
FamFunctor fam_compose(const FamFunctor& g, const FamFunctor& f) {
  FamFunctor r;
  for (size_t i = 0; i < f.size(); ++i) r.push_back(compose_functors(g[i], f[i]));
  return r;
}
FamNat fam_identity_nat(const FamFunctor& f) {
  FamNat r;
  for (const auto& v : f) r.push_back(identity_pseudonat(v));
  return r;
}
FamNat fam_hcompose(const FamNat& t, const FamNat& s) {
  FamNat r;
  for (size_t i = 0; i < s.size(); ++i) r.push_back(hcompose_pseudonat(t[i], s[i]));
  return r;
}
FamMod fam_identity_mod(const FamNat& t) {
  FamMod r;
  for (const auto& v : t) r.push_back(identity_modification(v));
  return r;
}
FamMod fam_vcompose(const FamMod& b, const FamMod& a) {
  FamMod r;
  for (size_t i = 0; i < a.size(); ++i) r.push_back(vcompose_mod(b[i], a[i]));
  return r;
}
FamMod fam_hcompose_mod(const FamMod& b, const FamMod& a) {
  FamMod r;
  for (size_t i = 0; i < a.size(); ++i) r.push_back(hcompose_mod(b[i], a[i]));
  return r;
}
FamNat fam_whisker_pre(const FamNat& t, const FamFunctor& u) {
  FamNat r;
  for (size_t i = 0; i < t.size(); ++i) r.push_back(whisker_functor_pre(t[i], u[i]));
  return r;
}
FamNat fam_whisker_post(const FamFunctor& u, const FamNat& t) {
  FamNat r;
  for (size_t i = 0; i < t.size(); ++i) r.push_back(whisker_functor_post(u[i], t[i]));
  return r;
}
FamMod fam_whisker_pre(const FamMod& m, const FamFunctor& u) {
  FamMod r;
  for (size_t i = 0; i < m.size(); ++i) r.push_back(whisker_functor_pre(m[i], u[i]));
  return r;
}
FamMod fam_whisker_post(const FamFunctor& u, const FamMod& m) {
  FamMod r;
  for (size_t i = 0; i < m.size(); ++i) r.push_back(whisker_functor_post(u[i], m[i]));
  return r;
}

FamMod fam_sigma(const FamNat& f, const FamNat& g) {
  // M_K(Σ_{f,g}): per P the modification with component f_{(g)_x}
  FamMod r;
  for (size_t i = 0; i < f.size(); ++i) {
    const auto& th = f[i];
    const auto& sg = g[i];
    Modification m{hcompose_pseudonat(whisker_functor_pre(th, sg.cod_f),
                                      whisker_functor_post(th.dom_f, sg)),
                   hcompose_pseudonat(whisker_functor_post(th.cod_f, sg),
                                      whisker_functor_pre(th, sg.dom_f)),
                   {}};
    m.components.resize(sg.X()->objects().size());
    for (size_t x = 0; x < m.components.size(); ++x)
      m.components[x] = th.nat(sg.comp(static_cast<int>(x)));
    r.push_back(std::move(m));
  }
  return r;
}

FamNat fam_invert(const FamNat& t) {
  FamNat r;
  for (const auto& v : t) r.push_back(invert_pseudonat_strict(v));
  return r;
}
FamMod fam_invert(const FamMod& m) {
  FamMod r;
  for (const auto& v : m) r.push_back(invert_modification(v));
  return r;
}

// ---------------------------------------------------------------------------

std::pair<int, int> Coproduct::loc_obj(int g) const {
  for (size_t s = obj_base.size(); s-- > 0;)
    if (g >= obj_base[s]) return {static_cast<int>(s), g - obj_base[s]};
  throw MalformedTable("coproduct object out of range");
}
std::pair<int, int> Coproduct::loc_one(int g) const {
  for (size_t s = one_base.size(); s-- > 0;)
    if (g >= one_base[s]) return {static_cast<int>(s), g - one_base[s]};
  throw MalformedTable("coproduct 1-cell out of range");
}
std::pair<int, int> Coproduct::loc_two(int g) const {
  for (size_t s = two_base.size(); s-- > 0;)
    if (g >= two_base[s]) return {static_cast<int>(s), g - two_base[s]};
  throw MalformedTable("coproduct 2-cell out of range");
}

Coproduct coproduct_twocat(const std::vector<std::shared_ptr<const TwoCat>>& parts,
                           const std::string& name) {
  Coproduct co;
  co.summands = parts;
  TwoCatBuilder b(name);
  for (size_t s = 0; s < parts.size(); ++s) {
    const TwoCat& C = *parts[s];
    co.obj_base.push_back(b.obj_count());
    co.one_base.push_back(b.one_count());
    co.two_base.push_back(b.two_count());
    std::string pre = "S" + std::to_string(s) + ".";
    for (const auto& o : C.objects()) b.add_object(pre + o);
    for (const auto& f : C.ones())
      b.add_one(pre + f.id, co.obj_base[s] + f.src, co.obj_base[s] + f.tgt);
    for (const auto& a : C.twos())
      b.add_two(pre + a.id, co.one_base[s] + a.src, co.one_base[s] + a.tgt);
    for (int o = 0; o < static_cast<int>(C.objects().size()); ++o)
      b.set_id1(co.obj_base[s] + o, co.one_base[s] + C.id1(o));
    for (int f = 0; f < static_cast<int>(C.ones().size()); ++f)
      b.set_id2(co.one_base[s] + f, co.two_base[s] + C.id2(f));
    for (int f = 0; f < static_cast<int>(C.ones().size()); ++f)
      for (int g = 0; g < static_cast<int>(C.ones().size()); ++g)
        if (C.one_tgt(f) == C.one_src(g))
          b.set_hcomp1(co.one_base[s] + g, co.one_base[s] + f,
                       co.one_base[s] + C.compose1(g, f));
    for (int x = 0; x < static_cast<int>(C.twos().size()); ++x)
      for (int y = 0; y < static_cast<int>(C.twos().size()); ++y) {
        if (C.two_tgt(x) == C.two_src(y))
          b.set_vcomp2(co.two_base[s] + y, co.two_base[s] + x, co.two_base[s] + C.vcomp(y, x));
        if (C.one_tgt(C.two_src(x)) == C.one_src(C.two_src(y)))
          b.set_hcomp2(co.two_base[s] + y, co.two_base[s] + x, co.two_base[s] + C.hcomp(y, x));
      }
    for (int a = 0; a < static_cast<int>(C.twos().size()); ++a)
      if (auto inv = C.inverse2(a)) b.set_inverse2(co.two_base[s] + a, co.two_base[s] + *inv);
  }
  co.cat = b.finish();
  return co;
}

TFam apply_T(const GrayCategory& P, const ObFamily& A) {
  TFam out;
  const int n = P.size();
  for (int q = 0; q < n; ++q) {
    TValue tv;
    std::vector<std::shared_ptr<const TwoCat>> parts;
    for (int p = 0; p < n; ++p) {
      auto view = gray_product(P.hom(p, q), A.values[p]);
      tv.summands.push_back(view);
      parts.push_back(view->cat);
    }
    tv.co = coproduct_twocat(parts, "T[" + std::to_string(q) + "]");
    out.family.values.push_back(tv.co.cat);
    out.views.push_back(std::move(tv));
  }
  return out;
}

// assemble a functor out of a coproduct from per-summand functors (all with
// the same codomain)
namespace {
StrictFunctor union_functor(const TValue& tv, const std::vector<StrictFunctor>& per,
                            const std::shared_ptr<const TwoCat>& cod) {
  StrictFunctor f{tv.co.cat, cod, {}, {}, {}};
  f.on_obj.resize(tv.co.cat->objects().size());
  f.on_one.resize(tv.co.cat->ones().size());
  f.on_two.resize(tv.co.cat->twos().size());
  for (size_t s = 0; s < per.size(); ++s) {
    for (size_t o = 0; o < per[s].on_obj.size(); ++o)
      f.on_obj[tv.co.glob_obj(static_cast<int>(s), static_cast<int>(o))] = per[s].on_obj[o];
    for (size_t i = 0; i < per[s].on_one.size(); ++i)
      f.on_one[tv.co.glob_one(static_cast<int>(s), static_cast<int>(i))] = per[s].on_one[i];
    for (size_t i = 0; i < per[s].on_two.size(); ++i)
      f.on_two[tv.co.glob_two(static_cast<int>(s), static_cast<int>(i))] = per[s].on_two[i];
  }
  return f;
}

// functor into a coproduct: inject a functor landing in summand s
StrictFunctor into_summand(const TValue& tv, int s, const StrictFunctor& f) {
  StrictFunctor r = f;
  r.cod = tv.co.cat;
  for (auto& v : r.on_obj) v = tv.co.glob_obj(s, v);
  for (auto& v : r.on_one) v = tv.co.glob_one(s, v);
  for (auto& v : r.on_two) v = tv.co.glob_two(s, v);
  return r;
}
}  // namespace

KanSetup::KanSetup(std::shared_ptr<const GrayCategory> P, ObFamily A)
    : P_(std::move(P)), A_(std::move(A)), TA_(apply_T(*P_, A_)) {}

const TFam& KanSetup::TTA() const {
  if (!TTA_) TTA_ = apply_T(*P_, TA_.family);
  return *TTA_;
}
const TFam& KanSetup::TTTA() const {
  if (!TTTA_) TTTA_ = apply_T(*P_, TTA().family);
  return *TTTA_;
}
const TFam& KanSetup::T4A() const {
  if (!T4A_) T4A_ = apply_T(*P_, TTTA().family);
  return *T4A_;
}

StrictFunctor KanSetup::unit_generic(const ObFamily& fam, const TFam& tfam, int Q) const {
  const auto& tv = tfam.views[Q];
  const auto& view = *tv.summands[Q];
  const TwoCat& AQ = *fam.values[Q];
  int j = P_->units[Q];
  StrictFunctor f{fam.values[Q], tv.co.cat, {}, {}, {}};
  f.on_obj.resize(AQ.objects().size());
  f.on_one.resize(AQ.ones().size());
  f.on_two.resize(AQ.twos().size());
  for (int b = 0; b < static_cast<int>(AQ.objects().size()); ++b)
    f.on_obj[b] = tv.co.glob_obj(Q, view.obj(j, b));
  for (int g = 0; g < static_cast<int>(AQ.ones().size()); ++g) {
    GrayWord w{j, AQ.one_src(g), {}};
    if (!AQ.is_id1(g)) w.letters.push_back(Letter{false, g});
    f.on_one[g] = tv.co.glob_one(Q, view.word_index(w));
  }
  for (int be = 0; be < static_cast<int>(AQ.twos().size()); ++be) {
    int g = AQ.two_src(be), gp = AQ.two_tgt(be);
    GrayWord ws{j, AQ.one_src(g), {}};
    if (!AQ.is_id1(g)) ws.letters.push_back(Letter{false, g});
    GrayWord wt{j, AQ.one_src(gp), {}};
    if (!AQ.is_id1(gp)) wt.letters.push_back(Letter{false, gp});
    f.on_two[be] = tv.co.glob_two(
        Q, view.cell_index(GrayCell2{ws, wt, view.X->id2(view.X->id1(j)), be}));
  }
  return f;
}

StrictFunctor KanSetup::unit_component(int Q) const { return unit_generic(A_, TA_, Q); }
StrictFunctor KanSetup::unit_at_TA(int Q) const { return unit_generic(TA_.family, TTA(), Q); }
StrictFunctor KanSetup::unit_at_TTA(int Q) const {
  return unit_generic(TTA().family, TTTA(), Q);
}

StrictFunctor KanSetup::mult_generic(const TFam& lower, const TFam& upper, int Q,
                                     int level) const {
  auto it = mult_cache_.find({level, Q});
  if (it != mult_cache_.end()) return it->second;
  const auto& outer = upper.views[Q];
  const auto& ta_q = lower.views[Q];
  StrictFunctor f{outer.co.cat, ta_q.co.cat, {}, {}, {}};
  f.on_obj.assign(outer.co.cat->objects().size(), -1);
  f.on_one.assign(outer.co.cat->ones().size(), -1);
  f.on_two.assign(outer.co.cat->twos().size(), -1);
  const int n = P_->size();
  for (int p = 0; p < n; ++p) {
    const auto& SP = *outer.summands[p];
    const auto& ta_p = lower.views[p];
    for (int o = 0; o < n; ++o) {
      const auto& inner = *ta_p.summands[o];
      auto base_o = inner.Y;  // the base value at o of the lower family
      auto compv = P_->comp_dom.at({o, p, Q});
      auto left = gray_product(compv->cat, base_o);
      auto right = gray_product(P_->hom(p, Q), inner.cat);
      auto As = gray_assoc(compv, left, ta_p.summands[o], right);
      auto tf = tensor_functor(P_->comp.at({o, p, Q}), identity_functor(base_o), *left,
                               *ta_q.summands[o]);
      auto remap_word = [&](const GrayWord& w) {
        GrayWord r{w.sx, ta_p.co.loc_obj(w.sy).second, {}};
        for (const auto& l : w.letters) {
          if (l.left)
            r.letters.push_back(l);
          else
            r.letters.push_back(Letter{false, ta_p.co.loc_one(l.cell).second});
        }
        return r;
      };
      for (size_t go = 0; go < SP.cat->objects().size(); ++go) {
        auto [x, y] = SP.obj_pair(static_cast<int>(go));
        if (ta_p.co.loc_obj(y).first != o) continue;
        int robj = right->obj(x, ta_p.co.loc_obj(y).second);
        int img = tf.obj(As.bwd.obj(robj));
        f.on_obj[outer.co.glob_obj(p, static_cast<int>(go))] = ta_q.co.glob_obj(o, img);
      }
      for (size_t gi = 0; gi < SP.words.size(); ++gi) {
        const auto& w = SP.words[gi];
        if (ta_p.co.loc_obj(w.sy).first != o) continue;
        int rone = right->word_index(remap_word(w));
        int img = tf.one(As.bwd.one(rone));
        f.on_one[outer.co.glob_one(p, static_cast<int>(gi))] = ta_q.co.glob_one(o, img);
      }
      for (size_t gi = 0; gi < SP.cells.size(); ++gi) {
        const auto& c = SP.cells[gi];
        if (ta_p.co.loc_obj(c.src.sy).first != o) continue;
        auto [ps, ploc] = ta_p.co.loc_two(c.py);
        if (ps != o) throw MalformedTable("mult: projection crosses summands");
        int rtwo =
            right->cell_index(GrayCell2{remap_word(c.src), remap_word(c.tgt), c.px, ploc});
        int img = tf.two(As.bwd.two(rtwo));
        f.on_two[outer.co.glob_two(p, static_cast<int>(gi))] = ta_q.co.glob_two(o, img);
      }
    }
  }
  for (int v : f.on_obj)
    if (v < 0) throw MalformedTable("mult_component: uncovered object");
  mult_cache_[{level, Q}] = f;
  return f;
}

StrictFunctor KanSetup::mult_component(int Q) const { return mult_generic(TA_, TTA(), Q, 0); }
StrictFunctor KanSetup::mult_at_TA(int Q) const { return mult_generic(TTA(), TTTA(), Q, 1); }
StrictFunctor KanSetup::mult_at_TTA(int Q) const {
  return mult_generic(TTTA(), T4A(), Q, 2);
}

FamFunctor KanSetup::T_onecell(const FamFunctor& f, const ObFamily& domA, const TFam& Tdom,
                               const TFam& Tcod) const {
  (void)domA;
  FamFunctor out;
  const int n = P_->size();
  for (int q = 0; q < n; ++q) {
    std::vector<StrictFunctor> per;
    for (int p = 0; p < n; ++p) {
      auto tf = tensor_functor(identity_functor(P_->hom(p, q)), f[p],
                               *Tdom.views[q].summands[p], *Tcod.views[q].summands[p]);
      per.push_back(into_summand(Tcod.views[q], p, tf));
    }
    out.push_back(union_functor(Tdom.views[q], per, Tcod.views[q].co.cat));
  }
  return out;
}

StrictFunctor KanSetup::T_of_unit(int Q) const {
  // T(η_A)_Q: per summand P: 1 ⊗ η_{A,P}
  FamFunctor eta;
  for (int p = 0; p < P_->size(); ++p) eta.push_back(unit_component(p));
  return T_onecell(eta, A_, TA_, TTA())[Q];
}


StrictFunctor KanSetup::T_of_mult(int Q) const {
  FamFunctor mu;
  for (int p = 0; p < P_->size(); ++p) mu.push_back(mult_component(p));
  return T_onecell(mu, TTA().family, TTTA(), TTA())[Q];
}

FamNat KanSetup::T_twocell(const FamNat& t, const TFam& Tdom, const TFam& Tcod) const {
  FamNat out;
  const int n = P_->size();
  for (int q = 0; q < n; ++q) {
    // assemble a pseudonat on the union blockwise
    FamFunctor domf, codf;
    std::vector<PseudoNat> blocks;
    std::vector<StrictFunctor> perd, perc;
    for (int p = 0; p < n; ++p) {
      TenAction act{nullptr, nullptr, Tdom.views[q].summands[p], Tcod.views[q].summands[p]};
      auto block = act.one_right(identity_functor(P_->hom(p, q)), t[p]);
      blocks.push_back(block);
      perd.push_back(into_summand(Tcod.views[q], p, block.dom_f));
      perc.push_back(into_summand(Tcod.views[q], p, block.cod_f));
    }
    PseudoNat r{union_functor(Tdom.views[q], perd, Tcod.views[q].co.cat),
                union_functor(Tdom.views[q], perc, Tcod.views[q].co.cat),
                {},
                {}};
    r.components.resize(Tdom.views[q].co.cat->objects().size());
    r.nat2.resize(Tdom.views[q].co.cat->ones().size());
    for (int p = 0; p < n; ++p) {
      const auto& co = Tdom.views[q].co;
      for (size_t o = 0; o < blocks[p].components.size(); ++o)
        r.components[co.glob_obj(p, static_cast<int>(o))] =
            Tcod.views[q].co.glob_one(p, blocks[p].components[o]);
      for (size_t i = 0; i < blocks[p].nat2.size(); ++i)
        r.nat2[co.glob_one(p, static_cast<int>(i))] =
            Tcod.views[q].co.glob_two(p, blocks[p].nat2[i]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

FamMod KanSetup::T_threecell(const FamMod& m, const TFam& Tdom, const TFam& Tcod) const {
  FamNat doms, cods;
  for (const auto& v : m) doms.push_back(v.dom_t);
  for (const auto& v : m) cods.push_back(v.cod_t);
  FamNat tdom = T_twocell(doms, Tdom, Tcod);
  FamNat tcod = T_twocell(cods, Tdom, Tcod);
  FamMod out;
  const int n = P_->size();
  for (int q = 0; q < n; ++q) {
    Modification r{tdom[q], tcod[q], {}};
    r.components.resize(Tdom.views[q].co.cat->objects().size());
    for (int p = 0; p < n; ++p) {
      TenAction act{nullptr, nullptr, Tdom.views[q].summands[p], Tcod.views[q].summands[p]};
      auto block = act.two_right(identity_functor(P_->hom(p, q)), m[p]);
      const auto& co = Tdom.views[q].co;
      for (size_t o = 0; o < block.components.size(); ++o)
        r.components[co.glob_obj(p, static_cast<int>(o))] =
            Tcod.views[q].co.glob_two(p, block.components[o]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

ValidationReport KanSetup::check_monad_axioms() const {
  ValidationReport rep;
  for (int q = 0; q < P_->size(); ++q) {
    auto mu = mult_component(q);
    // μ (ηT) = 1
    rep.merge(compare_functors(compose_functors(mu, unit_at_TA(q)),
                               identity_functor(TA_.family.values[q]), "monad.unit_left"));
    // μ (Tη) = 1
    rep.merge(compare_functors(compose_functors(mu, T_of_unit(q)),
                               identity_functor(TA_.family.values[q]), "monad.unit_right"));
    // μ (μT) = μ (Tμ)
    auto lhs = compose_functors(mu, mult_at_TA(q));
    auto rhs = compose_functors(mu, T_of_mult(q));
    rep.merge(compare_functors(lhs, rhs, "monad.assoc"));
  }
  return rep;
}

// ---------------------------------------------------------------------------

StrictFunctor TAlgebra::component(int P, int Q) const {
  const auto& tv = setup->TA().views[Q];
  const auto& view = *tv.summands[P];
  StrictFunctor r{view.cat, setup->A().values[Q], {}, {}, {}};
  r.on_obj.resize(view.cat->objects().size());
  r.on_one.resize(view.cat->ones().size());
  r.on_two.resize(view.cat->twos().size());
  for (size_t o = 0; o < r.on_obj.size(); ++o)
    r.on_obj[o] = a[Q].on_obj[tv.co.glob_obj(P, static_cast<int>(o))];
  for (size_t i = 0; i < r.on_one.size(); ++i)
    r.on_one[i] = a[Q].on_one[tv.co.glob_one(P, static_cast<int>(i))];
  for (size_t i = 0; i < r.on_two.size(); ++i)
    r.on_two[i] = a[Q].on_two[tv.co.glob_two(P, static_cast<int>(i))];
  return r;
}

ValidationReport validate_talgebra(const TAlgebra& alg) {
  ValidationReport rep;
  const auto& s = *alg.setup;
  for (int q = 0; q < s.P().size(); ++q) {
    rep.merge(validate_strict_functor(alg.a[q]));
    // unit axiom 1_A = a ∘ η
    rep.merge(compare_functors(compose_functors(alg.a[q], s.unit_component(q)),
                               identity_functor(s.A().values[q]), "algebra.unit"));
    // assoc axiom a ∘ Ta = a ∘ μ
    auto Ta = s.T_onecell(alg.a, s.TA().family, s.TTA(), s.TA());
    rep.merge(compare_functors(compose_functors(alg.a[q], Ta[q]),
                               compose_functors(alg.a[q], s.mult_component(q)),
                               "algebra.assoc"));
  }
  return rep;
}

ValidationReport validate_grayfunctor(const GrayFunctor& gf) {
  ValidationReport rep;
  const auto& P = *gf.P;
  for (int p = 0; p < P.size(); ++p)
    for (int q = 0; q < P.size(); ++q) {
      const auto& F = gf.hom_functors.at({p, q});
      rep.merge(validate_strict_functor(F));
      if (F.dom != P.hom(p, q) || F.cod != gf.hom_ap_aq.at({p, q})->cat)
        rep.add("grayfunctor.boundary", {P.objects[p], P.objects[q]});
    }
  if (!rep.ok()) return rep;
  // unit axiom: A_{PP}(j_P) = identity functor
  for (int p = 0; p < P.size(); ++p) {
    const auto& hom = *gf.hom_ap_aq.at({p, p});
    int img = gf.hom_functors.at({p, p}).obj(P.units[p]);
    if (!(hom.objects[img] == identity_functor(gf.values.values[p])))
      rep.add("grayfunctor.unit", {P.objects[p]});
  }
  // functor axiom: M_L(A_{QR} ⊗ A_{PQ}) = A_{PR} ∘ M_P
  for (int p = 0; p < P.size(); ++p)
    for (int q = 0; q < P.size(); ++q)
      for (int r = 0; r < P.size(); ++r) {
        auto view = P.comp_dom.at({p, q, r});
        if (view->cat->objects().empty()) continue;
        auto homQR = gf.hom_ap_aq.at({q, r});
        auto homPQ = gf.hom_ap_aq.at({p, q});
        auto homPR = gf.hom_ap_aq.at({p, r});
        auto HP = gray_product(homQR->cat, homPQ->cat);
        auto t = tensor_functor(gf.hom_functors.at({q, r}), gf.hom_functors.at({p, q}), *view,
                                *HP);
        auto ml = m_gray(*homQR, *homPQ, *homPR, *HP);
        auto lhs = compose_functors(ml, t);
        auto rhs = compose_functors(gf.hom_functors.at({p, r}), P.comp.at({p, q, r}));
        rep.merge(compare_functors(lhs, rhs, "grayfunctor.comp"));
      }
  return rep;
}

GrayFunctor algebra_to_grayfunctor(const TAlgebra& alg) {
  GrayFunctor gf;
  const auto& s = *alg.setup;
  gf.P = s.P_;
  gf.values = s.A();
  for (int p = 0; p < s.P().size(); ++p)
    for (int q = 0; q < s.P().size(); ++q) {
      auto hom = internal_hom(s.A().values[p], s.A().values[q]);
      gf.hom_ap_aq[{p, q}] = hom;
      gf.hom_functors[{p, q}] =
          curry(alg.component(p, q), *s.TA().views[q].summands[p], *hom);
    }
  return gf;
}

TAlgebra grayfunctor_to_algebra(const GrayFunctor& gf, std::shared_ptr<KanSetup> setup) {
  TAlgebra alg{setup, {}};
  const auto& s = *setup;
  for (int q = 0; q < s.P().size(); ++q) {
    std::vector<StrictFunctor> per;
    for (int p = 0; p < s.P().size(); ++p)
      per.push_back(uncurry(gf.hom_functors.at({p, q}), *s.TA().views[q].summands[p],
                            *gf.hom_ap_aq.at({p, q})));
    alg.a.push_back(union_functor(s.TA().views[q], per, s.A().values[q]));
  }
  return alg;
}

// ---------------------------------------------------------------------------

ValidationReport check_algebra_onecell(const TAlgebra& xalg, const TAlgebra& yalg,
                                       const FamFunctor& f) {
  ValidationReport rep;
  const auto& sx = *xalg.setup;
  const auto& sy = *yalg.setup;
  auto Tf = sx.T_onecell(f, sx.A(), sx.TA(), sy.TA());
  for (int q = 0; q < sx.P().size(); ++q) {
    auto lhs = compose_functors(f[q], xalg.a[q]);
    auto rhs = compose_functors(yalg.a[q], Tf[q]);
    rep.merge(compare_functors(lhs, rhs, "algebra1.fx_eq_yTf"));
  }
  return rep;
}

ValidationReport check_graynat(const GrayFunctor& X, const GrayFunctor& Y,
                               const FamFunctor& f) {
  ValidationReport rep;
  const auto& P = *X.P;
  for (int p = 0; p < P.size(); ++p)
    for (int q = 0; q < P.size(); ++q) {
      auto homXX = X.hom_ap_aq.at({p, q});
      auto homYY = Y.hom_ap_aq.at({p, q});
      auto homXY = internal_hom(X.values.values[p], Y.values.values[q]);
      auto lhs = compose_functors(hom_postcompose(f[q], *homXX, *homXY),
                                  X.hom_functors.at({p, q}));
      auto rhs = compose_functors(hom_precompose(f[p], *homYY, *homXY),
                                  Y.hom_functors.at({p, q}));
      rep.merge(compare_functors(lhs, rhs, "graynat"));
    }
  return rep;
}

ValidationReport check_algebra_twocell(const TAlgebra& xalg, const TAlgebra& yalg,
                                       const FamFunctor& f, const FamFunctor& g,
                                       const FamNat& al) {
  ValidationReport rep;
  const auto& sx = *xalg.setup;
  const auto& sy = *yalg.setup;
  auto Tal = sx.T_twocell(al, sx.TA(), sy.TA());
  (void)f;
  (void)g;
  for (int q = 0; q < sx.P().size(); ++q) {
    // 1_y Tα = α 1_x
    auto lhs = whisker_functor_post(yalg.a[q], Tal[q]);
    auto rhs = whisker_functor_pre(al[q], xalg.a[q]);
    if (!(lhs == rhs)) rep.add("algebra2.whisker", {std::to_string(q)});
  }
  return rep;
}

ValidationReport check_em_twocell(const GrayFunctor& X, const GrayFunctor& Y,
                                  const FamFunctor& f, const FamFunctor& g, const FamNat& al) {
  ValidationReport rep;
  (void)f;
  (void)g;
  const auto& P = *X.P;
  for (int p = 0; p < P.size(); ++p)
    for (int q = 0; q < P.size(); ++q) {
      const TwoCat& HP = *P.hom(p, q);
      const auto& XF = X.hom_functors.at({p, q});
      const auto& YF = Y.hom_functors.at({p, q});
      auto homXX = X.hom_ap_aq.at({p, q});
      auto homYY = Y.hom_ap_aq.at({p, q});
      // the two induced pseudonats over hom(P,Q) must agree:
      // component at k: (α_Q) pre-whiskered with X_{PQ}(k)  vs  post with Y
      for (int k = 0; k < static_cast<int>(HP.objects().size()); ++k) {
        auto lhs = whisker_functor_pre(al[q], homXX->objects[XF.obj(k)]);
        auto rhs = whisker_functor_post(homYY->objects[YF.obj(k)], al[p]);
        if (!(lhs == rhs)) rep.add("em2.component", {P.objects[p], P.objects[q], std::to_string(k)});
      }
      // naturality square at 1-cells κ of hom(P,Q): the nat cells of the two
      // whiskered transformations agree
      for (int kp = 0; kp < static_cast<int>(HP.ones().size()); ++kp) {
        auto lhs = whisker_functor_pre(al[q], homXX->ones[XF.one(kp)].dom_f);
        (void)lhs;
        // cellwise: α_Q at the component of X_{PQ}(κ) equals Y_{PQ}(κ) at α_P
        const auto& Xk = homXX->ones[XF.one(kp)];
        const auto& Yk = homYY->ones[YF.one(kp)];
        const TwoCat& YQ = *Y.values.values[q];
        for (int x = 0; x < static_cast<int>(X.values.values[p]->objects().size()); ++x) {
          int lhs2 = al[q].nat(Xk.comp(x));
          int rhs2 = Yk.nat(al[p].comp(x));
          if (lhs2 != rhs2)
            rep.add("em2.naturality", {P.objects[p], P.objects[q], HP.ones()[kp].id});
          (void)YQ;
        }
      }
    }
  return rep;
}

ValidationReport check_algebra_threecell(const TAlgebra& xalg, const TAlgebra& yalg,
                                         const FamNat& al, const FamNat& be, const FamMod& Ga) {
  ValidationReport rep;
  (void)al;
  (void)be;
  const auto& sx = *xalg.setup;
  const auto& sy = *yalg.setup;
  auto TGa = sx.T_threecell(Ga, sx.TA(), sy.TA());
  for (int q = 0; q < sx.P().size(); ++q) {
    auto lhs = whisker_functor_post(yalg.a[q], TGa[q]);
    auto rhs = whisker_functor_pre(Ga[q], xalg.a[q]);
    if (!(lhs == rhs)) rep.add("algebra3.whisker", {std::to_string(q)});
  }
  return rep;
}

ValidationReport check_em_threecell(const GrayFunctor& X, const GrayFunctor& Y,
                                    const FamNat& al, const FamNat& be, const FamMod& Ga) {
  ValidationReport rep;
  (void)al;
  (void)be;
  const auto& P = *X.P;
  for (int p = 0; p < P.size(); ++p)
    for (int q = 0; q < P.size(); ++q) {
      const auto& XF = X.hom_functors.at({p, q});
      auto homXX = X.hom_ap_aq.at({p, q});
      const TwoCat& HP = *P.hom(p, q);
      for (int k = 0; k < static_cast<int>(HP.objects().size()); ++k) {
        // component modifications agree after whiskering
        auto lhs = whisker_functor_pre(Ga[q], homXX->objects[XF.obj(k)]);
        auto rhs = whisker_functor_post(
            Y.hom_ap_aq.at({p, q})->objects[Y.hom_functors.at({p, q}).obj(k)], Ga[p]);
        if (!(lhs == rhs)) rep.add("em3.component", {P.objects[p], P.objects[q], std::to_string(k)});
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<TAlgebra> enumerate_talgebras(std::shared_ptr<KanSetup> setup) {
  const auto& s = *setup;
  const int n = s.P().size();
  // candidates per Q: strict functors (TA)(Q) → A(Q) with a∘η = 1
  std::vector<std::vector<StrictFunctor>> cands(n);
  for (int q = 0; q < n; ++q) {
    auto all = enumerate_strict_functors(s.TA().family.values[q], s.A().values[q]);
    auto eta = s.unit_component(q);
    for (const auto& f : all)
      if (compose_functors(f, eta) == identity_functor(s.A().values[q]))
        cands[q].push_back(f);
  }
  std::vector<TAlgebra> out;
  std::vector<int> pick(n, 0);
  std::function<void(int)> go = [&](int q) {
    if (q == n) {
      TAlgebra alg{setup, {}};
      for (int i = 0; i < n; ++i) alg.a.push_back(cands[i][pick[i]]);
      if (validate_talgebra(alg).ok()) out.push_back(alg);
      return;
    }
    for (size_t c = 0; c < cands[q].size(); ++c) {
      pick[q] = static_cast<int>(c);
      go(q + 1);
    }
  };
  go(0);
  return out;
}

std::vector<GrayFunctor> enumerate_grayfunctors(std::shared_ptr<const GrayCategory> P,
                                                const ObFamily& A) {
  const int n = P->size();
  std::map<std::pair<int, int>, std::shared_ptr<const Hom2>> homs;
  std::map<std::pair<int, int>, std::vector<StrictFunctor>> cands;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      homs[{p, q}] = internal_hom(A.values[p], A.values[q]);
      cands[{p, q}] = enumerate_strict_functors(P->hom(p, q), homs[{p, q}]->cat);
    }
  std::vector<GrayFunctor> out;
  std::vector<std::pair<int, int>> keys;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) keys.push_back({p, q});
  std::map<std::pair<int, int>, int> pick;
  std::function<void(size_t)> go = [&](size_t k) {
    if (k == keys.size()) {
      GrayFunctor gf;
      gf.P = P;
      gf.values = A;
      gf.hom_ap_aq = homs;
      for (const auto& key : keys) gf.hom_functors[key] = cands[key][pick[key]];
      if (validate_grayfunctor(gf).ok()) out.push_back(gf);
      return;
    }
    for (size_t c = 0; c < cands[keys[k]].size(); ++c) {
      pick[keys[k]] = static_cast<int>(c);
      go(k + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace gk
