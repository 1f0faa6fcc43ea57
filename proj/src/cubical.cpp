#include "graykernel/cubical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gk {

namespace {

int find_inverse2(const TwoCat& Z, int a) {
  if (auto inv = Z.inverse2(a)) return *inv;
  int f = Z.two_src(a), g = Z.two_tgt(a);
  for (int d = 0; d < static_cast<int>(Z.twos().size()); ++d) {
    if (Z.two_src(d) != g || Z.two_tgt(d) != f) continue;
    if (Z.vcomp(d, a) == Z.id2(f) && Z.vcomp(a, d) == Z.id2(g)) return d;
  }
  throw NotCubical("constraint 2-cell " + Z.twos()[a].id + " is not invertible");
}

}  // namespace

int CubicalFunctor::sigma(int f, int g) const {
  if (X->is_id1(f) || Y->is_id1(g)) {
    // identity constraint on the composite 1-cell image
    return cod->id2(one(f, g));
  }
  auto it = sigma_map.find({f, g});
  if (it == sigma_map.end()) throw NotCubical("missing constraint sigma");
  return it->second;
}

int CubicalFunctor::constraint(std::pair<int, int> cp, std::pair<int, int> c) const {
  auto [fp, gp] = cp;
  auto [f, g] = c;
  const TwoCat& Z = *cod;
  int xpp = X->one_tgt(fp);
  int y = Y->one_src(g);
  // 1_{F̂(1,g')@x''} ∗ σ_{f',g} ∗ 1_{F̂(f,1)@y}
  int mid = sigma(fp, g);
  return Z.hcomp(Z.id2(right_one(xpp, gp)), Z.hcomp(mid, Z.id2(left_one(f, y))));
}

ValidationReport validate_cubical(const CubicalFunctor& F) {
  ValidationReport rep;
  const TwoCat& X = *F.X;
  const TwoCat& Y = *F.Y;
  const TwoCat& P = *F.prod;
  const TwoCat& Z = *F.cod;
  // underlying globular data and strict laws that hold for any functor of
  // 2-categories (vertical composition, identities, boundaries)
  for (int f = 0; f < static_cast<int>(P.ones().size()); ++f)
    if (Z.one_src(F.on_one[f]) != F.on_obj[P.one_src(f)] ||
        Z.one_tgt(F.on_one[f]) != F.on_obj[P.one_tgt(f)])
      rep.add("cubical.boundary1", {P.ones()[f].id});
  for (int a = 0; a < static_cast<int>(P.twos().size()); ++a)
    if (Z.two_src(F.on_two[a]) != F.on_one[P.two_src(a)] ||
        Z.two_tgt(F.on_two[a]) != F.on_one[P.two_tgt(a)])
      rep.add("cubical.boundary2", {P.twos()[a].id});
  if (!rep.ok()) return rep;
  for (int o = 0; o < static_cast<int>(P.objects().size()); ++o)
    if (F.on_one[P.id1(o)] != Z.id1(F.on_obj[o])) rep.add("cubical.id1", {P.objects()[o]});
  for (int f = 0; f < static_cast<int>(P.ones().size()); ++f)
    if (F.on_two[P.id2(f)] != Z.id2(F.on_one[f])) rep.add("cubical.id2", {P.ones()[f].id});
  for (int a = 0; a < static_cast<int>(P.twos().size()); ++a)
    for (int b = 0; b < static_cast<int>(P.twos().size()); ++b)
      if (P.two_tgt(a) == P.two_src(b) &&
          F.on_two[P.vcomp(b, a)] != Z.vcomp(F.on_two[b], F.on_two[a]))
        rep.add("cubical.vcomp", {P.twos()[b].id, P.twos()[a].id});

  // degenerate constraints are identities:
  //   F̂(f,g) = F̂(1,g)@x' ∗ F̂(f,1)@y, same-side composites strict.
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int g = 0; g < static_cast<int>(Y.ones().size()); ++g) {
      int xp = X.one_tgt(f), y = Y.one_src(g);
      if (F.one(f, g) != Z.compose1(F.right_one(xp, g), F.left_one(f, y)))
        rep.add("cubical.degenerate", {X.ones()[f].id, Y.ones()[g].id});
    }
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int fp = 0; fp < static_cast<int>(X.ones().size()); ++fp) {
      if (X.one_tgt(f) != X.one_src(fp)) continue;
      for (int y = 0; y < static_cast<int>(Y.objects().size()); ++y)
        if (F.left_one(X.compose1(fp, f), y) !=
            Z.compose1(F.left_one(fp, y), F.left_one(f, y)))
          rep.add("cubical.left_strict", {X.ones()[fp].id, X.ones()[f].id});
    }
  for (int g = 0; g < static_cast<int>(Y.ones().size()); ++g)
    for (int gp = 0; gp < static_cast<int>(Y.ones().size()); ++gp) {
      if (Y.one_tgt(g) != Y.one_src(gp)) continue;
      for (int x = 0; x < static_cast<int>(X.objects().size()); ++x)
        if (F.right_one(x, Y.compose1(gp, g)) !=
            Z.compose1(F.right_one(x, gp), F.right_one(x, g)))
          rep.add("cubical.right_strict", {Y.ones()[gp].id, Y.ones()[g].id});
    }
  // horizontal composition along degenerate directions is strict
  for (int a = 0; a < static_cast<int>(P.twos().size()); ++a)
    for (int b = 0; b < static_cast<int>(P.twos().size()); ++b) {
      if (P.one_tgt(P.two_src(a)) != P.one_src(P.two_src(b))) continue;
      // whenever the canonical constraint of the pair is an identity, the
      // functor must preserve this horizontal composite strictly; the general
      // case is covered by constraint naturality below.
      const auto sa = P.two_src(a);
      const auto sb = P.two_src(b);
      int fa = sa / static_cast<int>(Y.ones().size());
      int ga = sa % static_cast<int>(Y.ones().size());
      int fb = sb / static_cast<int>(Y.ones().size());
      int gb = sb % static_cast<int>(Y.ones().size());
      bool degenerate = (X.is_id1(fb) || Y.is_id1(ga));
      if (!degenerate) continue;
      const auto ta = P.two_tgt(a);
      const auto tb = P.two_tgt(b);
      int fa2 = ta / static_cast<int>(Y.ones().size());
      int ga2 = ta % static_cast<int>(Y.ones().size());
      int fb2 = tb / static_cast<int>(Y.ones().size());
      int gb2 = tb % static_cast<int>(Y.ones().size());
      bool degenerate2 = (X.is_id1(fb2) || Y.is_id1(ga2));
      if (!degenerate2) continue;
      (void)fa;
      (void)gb;
      (void)fa2;
      (void)gb2;
      if (F.on_two[P.hcomp(b, a)] != Z.hcomp(F.on_two[b], F.on_two[a]))
        rep.add("cubical.hcomp_degenerate", {P.twos()[b].id, P.twos()[a].id});
    }

  // σ boundaries, invertibility, naturality, cocycles
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int g = 0; g < static_cast<int>(Y.ones().size()); ++g) {
      int s = F.sigma(f, g);
      int x = X.one_src(f), y = Y.one_src(g);
      int xp = X.one_tgt(f);
      int want_src = Z.compose1(F.left_one(f, Y.one_tgt(g)), F.right_one(x, g));
      int want_tgt = Z.compose1(F.right_one(xp, g), F.left_one(f, y));
      if (Z.two_src(s) != want_src || Z.two_tgt(s) != want_tgt) {
        rep.add("cubical.sigma_boundary", {X.ones()[f].id, Y.ones()[g].id});
        continue;
      }
      if (!Z.dual_checks(s)) rep.add("cubical.sigma_invertible", {X.ones()[f].id, Y.ones()[g].id});
    }
  if (!rep.ok()) return rep;
  for (int al = 0; al < static_cast<int>(X.twos().size()); ++al)
    for (int be = 0; be < static_cast<int>(Y.twos().size()); ++be) {
      int f = X.two_src(al), fp = X.two_tgt(al);
      int g = Y.two_src(be), gp = Y.two_tgt(be);
      int x = X.one_src(f), y = Y.one_src(g);
      int xp = X.one_tgt(f), yp = Y.one_tgt(g);
      // F̂(α,1)@y' ∗ F̂(1,β)@x then σ_{f',g'}  ==  σ_{f,g} then F̂(1,β)@x' ∗ F̂(α,1)@y
      int top = F.on_two[F.aidx(al, Y.id2(Y.id1(yp)))];
      int bottom = F.on_two[F.aidx(X.id2(X.id1(x)), be)];
      int lhs = Z.vcomp(F.sigma(fp, gp), Z.hcomp(top, bottom));
      int right = F.on_two[F.aidx(X.id2(X.id1(xp)), be)];
      int left = F.on_two[F.aidx(al, Y.id2(Y.id1(y)))];
      int rhs = Z.vcomp(Z.hcomp(right, left), F.sigma(f, g));
      if (lhs != rhs) rep.add("cubical.sigma_natural", {X.twos()[al].id, Y.twos()[be].id});
    }
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int fp = 0; fp < static_cast<int>(X.ones().size()); ++fp) {
      if (X.one_tgt(f) != X.one_src(fp)) continue;
      for (int g = 0; g < static_cast<int>(Y.ones().size()); ++g) {
        int y = Y.one_src(g), yp = Y.one_tgt(g);
        int lhs = F.sigma(X.compose1(fp, f), g);
        int rhs = Z.vcomp(Z.hcomp(F.sigma(fp, g), Z.id2(F.left_one(f, y))),
                          Z.hcomp(Z.id2(F.left_one(fp, yp)), F.sigma(f, g)));
        if (lhs != rhs) rep.add("cubical.cocycle_left", {X.ones()[fp].id, X.ones()[f].id, Y.ones()[g].id});
      }
    }
  for (int g = 0; g < static_cast<int>(Y.ones().size()); ++g)
    for (int gp = 0; gp < static_cast<int>(Y.ones().size()); ++gp) {
      if (Y.one_tgt(g) != Y.one_src(gp)) continue;
      for (int f = 0; f < static_cast<int>(X.ones().size()); ++f) {
        int x = X.one_src(f), xp = X.one_tgt(f);
        int lhs = F.sigma(f, Y.compose1(gp, g));
        int rhs = Z.vcomp(Z.hcomp(Z.id2(F.right_one(xp, gp)), F.sigma(f, g)),
                          Z.hcomp(F.sigma(f, gp), Z.id2(F.right_one(x, g))));
        if (lhs != rhs)
          rep.add("cubical.cocycle_right", {Y.ones()[gp].id, Y.ones()[g].id, X.ones()[f].id});
      }
    }
  return rep;
}

CubicalFunctor universal_C(const std::shared_ptr<const GrayProductView>& XY) {
  CubicalFunctor C;
  C.X = XY->X;
  C.Y = XY->Y;
  C.prod = TwoCat::product(XY->X, XY->Y);
  C.cod = XY->cat;
  const TwoCat& X = *C.X;
  const TwoCat& Y = *C.Y;
  C.on_obj.resize(C.prod->objects().size());
  C.on_one.resize(C.prod->ones().size());
  C.on_two.resize(C.prod->twos().size());
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x)
    for (int y = 0; y < static_cast<int>(Y.objects().size()); ++y)
      C.on_obj[C.oidx(x, y)] = XY->obj(x, y);
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int g = 0; g < static_cast<int>(Y.ones().size()); ++g) {
      GrayWord w{X.one_src(f), Y.one_src(g), {}};
      if (!X.is_id1(f)) w.letters.push_back(Letter{true, f});
      if (!Y.is_id1(g)) w.letters.push_back(Letter{false, g});
      C.on_one[C.fidx(f, g)] = XY->word_index(w);
    }
  for (int a = 0; a < static_cast<int>(X.twos().size()); ++a)
    for (int b = 0; b < static_cast<int>(Y.twos().size()); ++b) {
      int f = X.two_src(a), fp = X.two_tgt(a);
      int g = Y.two_src(b), gp = Y.two_tgt(b);
      GrayWord ws{X.one_src(f), Y.one_src(g), {}};
      if (!X.is_id1(f)) ws.letters.push_back(Letter{true, f});
      if (!Y.is_id1(g)) ws.letters.push_back(Letter{false, g});
      GrayWord wt{X.one_src(fp), Y.one_src(gp), {}};
      if (!X.is_id1(fp)) wt.letters.push_back(Letter{true, fp});
      if (!Y.is_id1(gp)) wt.letters.push_back(Letter{false, gp});
      C.on_two[C.aidx(a, b)] = XY->cell_index(GrayCell2{ws, wt, a, b});
    }
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int g = 0; g < static_cast<int>(Y.ones().size()); ++g) {
      if (X.is_id1(f) || Y.is_id1(g)) continue;
      C.sigma_map[{f, g}] = XY->sigma_index(f, g);
    }
  return C;
}

namespace {

// Letters of a (possibly non-normal) word over X,Y used during sliding.
struct Slider {
  const CubicalFunctor& F;
  const TwoCat& X;
  const TwoCat& Y;
  const TwoCat& Z;

  // image of a letter sequence under the strictification
  int image(const std::vector<Letter>& ls, int x0, int y0) const {
    int cx = x0, cy = y0;
    int acc = Z.id1(F.obj(x0, y0));
    for (const auto& l : ls) {
      if (l.left) {
        acc = Z.compose1(F.left_one(l.cell, cy), acc);
        cx = X.one_tgt(l.cell);
      } else {
        acc = Z.compose1(F.right_one(cx, l.cell), acc);
        cy = Y.one_tgt(l.cell);
      }
    }
    return acc;
  }

  // slide the word to all-Left-then-all-Right order, returning the composite
  // 2-cell F(w) ⇒ F̂(π_X w, π_Y w)
  int slide(std::vector<Letter> ls, int x0, int y0) const {
    int total = -1;  // identity until a swap happens
    auto compose_step = [&](int step) {
      total = (total < 0) ? step : Z.vcomp(step, total);
    };
    bool moved = true;
    while (moved) {
      moved = false;
      // positions: scan for the first (Right, Left) adjacency
      int cx = x0, cy = y0;
      for (size_t i = 0; i + 1 < ls.size(); ++i) {
        if (!ls[i].left && ls[i + 1].left) {
          int g = ls[i].cell, f = ls[i + 1].cell;
          // prefix = ls[0..i), suffix = ls[i+2..)
          std::vector<Letter> prefix(ls.begin(), ls.begin() + i);
          std::vector<Letter> suffix(ls.begin() + i + 2, ls.end());
          int pre_img = image(prefix, x0, y0);
          // coordinates at the start of the pair
          int sx = cx, sy = cy;
          int sig = F.sigma(f, g);
          // suffix image starts at the pair's end (same for both orders)
          int ex = X.one_tgt(f), ey = Y.one_tgt(g);
          int suf_img = image(suffix, ex, ey);
          (void)sx;
          (void)sy;
          int step = Z.hcomp(Z.id2(suf_img), Z.hcomp(sig, Z.id2(pre_img)));
          compose_step(step);
          std::swap(ls[i], ls[i + 1]);
          moved = true;
          break;
        }
        // advance coordinates
        if (ls[i].left)
          cx = X.one_tgt(ls[i].cell);
        else
          cy = Y.one_tgt(ls[i].cell);
      }
    }
    if (total < 0) total = Z.id2(image(ls, x0, y0));
    return total;
  }
};

}  // namespace

StrictFunctor strictify(const CubicalFunctor& Fhat, const GrayProductView& XY) {
  if (Fhat.X != XY.X || Fhat.Y != XY.Y) throw BoundaryMismatch("strictify: factor mismatch");
  auto rep = validate_cubical(Fhat);
  if (!rep.ok()) throw NotCubical("strictify: invalid cubical functor:\n" + rep.pretty());
  const TwoCat& X = *Fhat.X;
  const TwoCat& Y = *Fhat.Y;
  const TwoCat& Z = *Fhat.cod;
  Slider S{Fhat, X, Y, Z};
  StrictFunctor F{XY.cat, Fhat.cod, {}, {}, {}};
  F.on_obj.resize(XY.cat->objects().size());
  F.on_one.resize(XY.cat->ones().size());
  F.on_two.resize(XY.cat->twos().size());
  for (size_t o = 0; o < F.on_obj.size(); ++o) {
    auto [x, y] = XY.obj_pair(static_cast<int>(o));
    F.on_obj[o] = Fhat.obj(x, y);
  }
  for (size_t i = 0; i < XY.words.size(); ++i)
    F.on_one[i] = S.image(XY.words[i].letters, XY.words[i].sx, XY.words[i].sy);
  for (size_t i = 0; i < XY.cells.size(); ++i) {
    const auto& c = XY.cells[i];
    int slide_src = S.slide(c.src.letters, c.src.sx, c.src.sy);
    int slide_tgt = S.slide(c.tgt.letters, c.tgt.sx, c.tgt.sy);
    int mediator = Fhat.on_two[Fhat.aidx(c.px, c.py)];
    F.on_two[i] = Z.vcomp(find_inverse2(Z, slide_tgt), Z.vcomp(mediator, slide_src));
  }
  return F;
}

CubicalFunctor cubify(const StrictFunctor& F, const GrayProductView& XY) {
  if (F.dom != XY.cat) throw BoundaryMismatch("cubify: domain is not the Gray product");
  CubicalFunctor Fh;
  Fh.X = XY.X;
  Fh.Y = XY.Y;
  Fh.prod = TwoCat::product(XY.X, XY.Y);
  Fh.cod = F.cod;
  auto C = universal_C(std::make_shared<GrayProductView>(XY));
  Fh.on_obj = C.on_obj;
  Fh.on_one = C.on_one;
  Fh.on_two = C.on_two;
  for (auto& v : Fh.on_obj) v = F.on_obj[v];
  for (auto& v : Fh.on_one) v = F.on_one[v];
  for (auto& v : Fh.on_two) v = F.on_two[v];
  for (int f = 0; f < static_cast<int>(XY.X->ones().size()); ++f)
    for (int g = 0; g < static_cast<int>(XY.Y->ones().size()); ++g) {
      if (XY.X->is_id1(f) || XY.Y->is_id1(g)) continue;
      Fh.sigma_map[{f, g}] = F.two(XY.sigma_index(f, g));
    }
  return Fh;
}

ValidationReport validate_cubical_pseudonat(const CubicalPseudoNat& t) {
  ValidationReport rep;
  const CubicalFunctor& F = t.dom_f;
  const CubicalFunctor& G = t.cod_f;
  const TwoCat& P = *F.prod;
  const TwoCat& Z = *F.cod;
  if (F.X != G.X || F.Y != G.Y || F.cod != G.cod)
    throw BoundaryMismatch("cubical pseudonat between incompatible functors");
  for (int o = 0; o < static_cast<int>(P.objects().size()); ++o)
    if (Z.one_src(t.components[o]) != F.on_obj[o] || Z.one_tgt(t.components[o]) != G.on_obj[o])
      rep.add("cubnat.component_boundary", {P.objects()[o]});
  for (int c = 0; c < static_cast<int>(P.ones().size()); ++c) {
    int o = P.one_src(c), op = P.one_tgt(c);
    int want_src = Z.compose1(t.components[op], F.on_one[c]);
    int want_tgt = Z.compose1(G.on_one[c], t.components[o]);
    if (Z.two_src(t.nat2[c]) != want_src || Z.two_tgt(t.nat2[c]) != want_tgt) {
      rep.add("cubnat.nat_boundary", {P.ones()[c].id});
      continue;
    }
    if (!Z.dual_checks(t.nat2[c])) rep.add("cubnat.nat_invertible", {P.ones()[c].id});
  }
  if (!rep.ok()) return rep;
  for (int o = 0; o < static_cast<int>(P.objects().size()); ++o)
    if (t.nat2[P.id1(o)] != Z.id2(t.components[o])) rep.add("cubnat.unit", {P.objects()[o]});
  // respect for composition with constraints
  const int ny1 = static_cast<int>(F.Y->ones().size());
  for (int c = 0; c < static_cast<int>(P.ones().size()); ++c)
    for (int cp = 0; cp < static_cast<int>(P.ones().size()); ++cp) {
      if (P.one_tgt(c) != P.one_src(cp)) continue;
      int o = P.one_src(c);
      std::pair<int, int> cc{c / ny1, c % ny1}, ccp{cp / ny1, cp % ny1};
      int lhs = Z.vcomp(
          Z.hcomp(G.constraint(ccp, cc), Z.id2(t.components[o])),
          Z.vcomp(Z.hcomp(Z.id2(G.on_one[cp]), t.nat2[c]),
                  Z.hcomp(t.nat2[cp], Z.id2(F.on_one[c]))));
      int o2 = P.one_tgt(cp);
      int rhs = Z.vcomp(t.nat2[P.compose1(cp, c)],
                        Z.hcomp(Z.id2(t.components[o2]), F.constraint(ccp, cc)));
      if (lhs != rhs) rep.add("cubnat.composition", {P.ones()[cp].id, P.ones()[c].id});
    }
  // naturality at 2-cells
  for (int a = 0; a < static_cast<int>(P.twos().size()); ++a) {
    int c = P.two_src(a), c2 = P.two_tgt(a);
    int o = P.one_src(c), op = P.one_tgt(c);
    int lhs = Z.vcomp(Z.hcomp(G.on_two[a], Z.id2(t.components[o])), t.nat2[c]);
    int rhs = Z.vcomp(t.nat2[c2], Z.hcomp(Z.id2(t.components[op]), F.on_two[a]));
    if (lhs != rhs) rep.add("cubnat.naturality2", {P.twos()[a].id});
  }
  return rep;
}

ValidationReport validate_cubical_modification(const CubicalModification& m) {
  ValidationReport rep;
  const auto& s = m.dom_t;
  const auto& t = m.cod_t;
  const TwoCat& P = *s.dom_f.prod;
  const TwoCat& Z = *s.dom_f.cod;
  for (int o = 0; o < static_cast<int>(P.objects().size()); ++o)
    if (Z.two_src(m.components[o]) != s.components[o] ||
        Z.two_tgt(m.components[o]) != t.components[o])
      rep.add("cubmod.component_boundary", {P.objects()[o]});
  if (!rep.ok()) return rep;
  for (int c = 0; c < static_cast<int>(P.ones().size()); ++c) {
    int o = P.one_src(c), op = P.one_tgt(c);
    int lhs = Z.vcomp(Z.hcomp(Z.id2(s.cod_f.on_one[c]), m.components[o]), s.nat2[c]);
    int rhs = Z.vcomp(t.nat2[c], Z.hcomp(m.components[op], Z.id2(s.dom_f.on_one[c])));
    if (lhs != rhs) rep.add("cubmod.compat", {P.ones()[c].id});
  }
  return rep;
}

PseudoNat transform_pseudonat(const CubicalPseudoNat& t, const GrayProductView& XY) {
  const TwoCat& X = *XY.X;
  const TwoCat& Y = *XY.Y;
  const TwoCat& Z = *t.dom_f.cod;
  StrictFunctor F = strictify(t.dom_f, XY);
  StrictFunctor G = strictify(t.cod_f, XY);
  PseudoNat r{F, G, {}, {}};
  r.components.resize(XY.cat->objects().size());
  r.nat2.resize(XY.cat->ones().size());
  for (size_t o = 0; o < r.components.size(); ++o) {
    auto [x, y] = XY.obj_pair(static_cast<int>(o));
    r.components[o] = t.components[t.dom_f.oidx(x, y)];
  }
  for (size_t i = 0; i < XY.words.size(); ++i) {
    const auto& w = XY.words[i];
    // fold respect-for-composition along the letters
    int cx = w.sx, cy = w.sy;
    int acc = Z.id2(r.components[XY.obj(cx, cy)]);
    int facc = Z.id1(t.dom_f.obj(cx, cy));  // F-image of the prefix
    for (const auto& l : w.letters) {
      int pc = l.left ? t.dom_f.fidx(l.cell, Y.id1(cy)) : t.dom_f.fidx(X.id1(cx), l.cell);
      int gl = t.cod_f.on_one[pc];
      // σ_{l∗w} = (1_{G(l)} ∗ σ_w) ⋄ (σ̂_l ∗ 1_{F(w)})
      acc = Z.vcomp(Z.hcomp(Z.id2(gl), acc), Z.hcomp(t.nat2[pc], Z.id2(facc)));
      facc = Z.compose1(t.dom_f.on_one[pc], facc);
      if (l.left)
        cx = X.one_tgt(l.cell);
      else
        cy = Y.one_tgt(l.cell);
    }
    r.nat2[i] = acc;
  }
  auto rep = validate_pseudonat(r);
  if (!rep.ok())
    throw NotInImage("transform_pseudonat: data violates derived constraints:\n" + rep.pretty());
  return r;
}

CubicalPseudoNat restrict_pseudonat(const PseudoNat& s, const GrayProductView& XY) {
  CubicalPseudoNat r;
  r.dom_f = cubify(s.dom_f, XY);
  r.cod_f = cubify(s.cod_f, XY);
  const TwoCat& X = *XY.X;
  const TwoCat& Y = *XY.Y;
  r.components.resize(r.dom_f.prod->objects().size());
  r.nat2.resize(r.dom_f.prod->ones().size());
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x)
    for (int y = 0; y < static_cast<int>(Y.objects().size()); ++y)
      r.components[r.dom_f.oidx(x, y)] = s.comp(XY.obj(x, y));
  for (int f = 0; f < static_cast<int>(X.ones().size()); ++f)
    for (int g = 0; g < static_cast<int>(Y.ones().size()); ++g) {
      GrayWord w{X.one_src(f), Y.one_src(g), {}};
      if (!X.is_id1(f)) w.letters.push_back(Letter{true, f});
      if (!Y.is_id1(g)) w.letters.push_back(Letter{false, g});
      r.nat2[r.dom_f.fidx(f, g)] = s.nat(XY.word_index(w));
    }
  return r;
}

Modification transform_modification(const CubicalModification& m, const GrayProductView& XY) {
  Modification r{transform_pseudonat(m.dom_t, XY), transform_pseudonat(m.cod_t, XY), {}};
  r.components.resize(XY.cat->objects().size());
  for (size_t o = 0; o < r.components.size(); ++o) {
    auto [x, y] = XY.obj_pair(static_cast<int>(o));
    r.components[o] = m.components[m.dom_t.dom_f.oidx(x, y)];
  }
  auto rep = validate_modification(r);
  if (!rep.ok()) throw NotInImage("transform_modification: invalid:\n" + rep.pretty());
  return r;
}

CubicalModification restrict_modification(const Modification& m, const GrayProductView& XY) {
  CubicalModification r{restrict_pseudonat(m.dom_t, XY), restrict_pseudonat(m.cod_t, XY), {}};
  const TwoCat& X = *XY.X;
  const TwoCat& Y = *XY.Y;
  r.components.resize(r.dom_t.dom_f.prod->objects().size());
  for (int x = 0; x < static_cast<int>(X.objects().size()); ++x)
    for (int y = 0; y < static_cast<int>(Y.objects().size()); ++y)
      r.components[r.dom_t.dom_f.oidx(x, y)] = m.comp(XY.obj(x, y));
  return r;
}

// ---------------------------------------------------------------------------
// n-variable machinery.

IterGray iter_gray(const std::vector<std::shared_ptr<const TwoCat>>& factors) {
  if (factors.size() < 2 || factors.size() > kMaxArity)
    throw ArityBound("iter_gray supports 2.." + std::to_string(kMaxArity) + " factors");
  IterGray ig;
  ig.factors = factors;
  ig.chain.push_back(gray_product(factors[0], factors[1]));
  for (size_t k = 2; k < factors.size(); ++k)
    ig.chain.push_back(gray_product(ig.chain.back()->cat, factors[k]));
  return ig;
}

namespace {

std::vector<int> expand_object(const IterGray& ig, size_t level, int obj) {
  // object of chain[level] → tuple over factors[0..level+1]
  if (level == 0) {
    auto [x, y] = ig.chain[0]->obj_pair(obj);
    return {x, y};
  }
  auto [a, b] = ig.chain[level]->obj_pair(obj);
  auto t = expand_object(ig, level - 1, a);
  t.push_back(b);
  return t;
}

int pack_object(const IterGray& ig, size_t level, const std::vector<int>& t) {
  if (level == 0) return ig.chain[0]->obj(t[0], t[1]);
  std::vector<int> head(t.begin(), t.end() - 1);
  return ig.chain[level]->obj(pack_object(ig, level - 1, head), t.back());
}

std::vector<FlatLetter> flatten_letters(const IterGray& ig, size_t level, const GrayWord& w) {
  std::vector<FlatLetter> out;
  if (level == 0) {
    for (const auto& l : w.letters) out.push_back(FlatLetter{l.left ? 0 : 1, l.cell});
    return out;
  }
  for (const auto& l : w.letters) {
    if (l.left) {
      auto sub = flatten_letters(ig, level - 1, ig.chain[level - 1]->word_of(l.cell));
      out.insert(out.end(), sub.begin(), sub.end());
    } else {
      out.push_back(FlatLetter{static_cast<int>(level) + 1, l.cell});
    }
  }
  return out;
}

}  // namespace

FlatWord flatten_word(const IterGray& ig, int one_cell) {
  const size_t lv = ig.chain.size() - 1;
  const auto& w = ig.top().word_of(one_cell);
  FlatWord fw;
  auto lt = expand_object(ig, lv - 0, ig.top().obj(w.sx, w.sy) /*unused*/);
  (void)lt;
  // source tuple: expand the pair (w.sx over chain[lv-1]? no: w.sx is an
  // object of the left factor of chain[lv])
  if (lv == 0) {
    fw.src = {w.sx, w.sy};
  } else {
    fw.src = expand_object(ig, lv - 1, w.sx);
    fw.src.push_back(w.sy);
  }
  fw.letters = flatten_letters(ig, lv, w);
  return fw;
}

FlatCell flatten_cell(const IterGray& ig, int two_cell) {
  FlatCell fc;
  size_t lv = ig.chain.size() - 1;
  GrayCell2 cur = ig.top().cell_of(two_cell);
  {
    const auto& c = cur;
    FlatWord s, t;
    if (lv == 0) {
      s.src = {c.src.sx, c.src.sy};
      t.src = {c.tgt.sx, c.tgt.sy};
    } else {
      s.src = expand_object(ig, lv - 1, c.src.sx);
      s.src.push_back(c.src.sy);
      t.src = expand_object(ig, lv - 1, c.tgt.sx);
      t.src.push_back(c.tgt.sy);
    }
    s.letters = flatten_letters(ig, lv, c.src);
    t.letters = flatten_letters(ig, lv, c.tgt);
    fc.src = s;
    fc.tgt = t;
  }
  std::vector<int> projs;
  while (true) {
    projs.push_back(cur.py);
    if (lv == 0) {
      projs.push_back(cur.px);
      break;
    }
    --lv;
    cur = ig.chain[lv]->cell_of(cur.px);
  }
  std::reverse(projs.begin(), projs.end());
  fc.proj = projs;
  return fc;
}

namespace {

GrayWord unflatten_word_rec(const IterGray& ig, size_t level, const std::vector<int>& src,
                            const std::vector<FlatLetter>& letters) {
  const auto& view = *ig.chain[level];
  if (level == 0) {
    GrayWord w{src[0], src[1], {}};
    for (const auto& l : letters) w.letters.push_back(Letter{l.coord == 0, l.cell});
    return view.normalize(std::move(w));
  }
  const int right_factor = static_cast<int>(level) + 1;
  std::vector<int> lsrc(src.begin(), src.end() - 1);
  GrayWord w{pack_object(ig, level - 1, lsrc), src.back(), {}};
  std::vector<int> coords = src;
  size_t i = 0;
  while (i < letters.size()) {
    if (letters[i].coord == right_factor) {
      w.letters.push_back(Letter{false, letters[i].cell});
      coords[right_factor] = ig.factors[right_factor]->one_tgt(letters[i].cell);
      ++i;
      continue;
    }
    std::vector<FlatLetter> run;
    std::vector<int> run_src(coords.begin(), coords.end() - 1);
    while (i < letters.size() && letters[i].coord < right_factor) {
      run.push_back(letters[i]);
      coords[letters[i].coord] = ig.factors[letters[i].coord]->one_tgt(letters[i].cell);
      ++i;
    }
    GrayWord sub = unflatten_word_rec(ig, level - 1, run_src, run);
    int sub_idx = ig.chain[level - 1]->word_index(sub);
    if (!ig.chain[level - 1]->cat->is_id1(sub_idx)) w.letters.push_back(Letter{true, sub_idx});
  }
  return view.normalize(std::move(w));
}

GrayCell2 unflatten_cell_rec(const IterGray& ig, size_t level, const FlatCell& c) {
  GrayWord s = unflatten_word_rec(ig, level, c.src.src, c.src.letters);
  GrayWord t = unflatten_word_rec(ig, level, c.tgt.src, c.tgt.letters);
  if (level == 0) return GrayCell2{s, t, c.proj[0], c.proj[1]};
  auto restrict_word = [&](const FlatWord& fw) {
    FlatWord r;
    r.src = std::vector<int>(fw.src.begin(), fw.src.end() - 1);
    for (const auto& l : fw.letters)
      if (l.coord < static_cast<int>(level) + 1) r.letters.push_back(l);
    return r;
  };
  FlatCell sub;
  sub.src = restrict_word(c.src);
  sub.tgt = restrict_word(c.tgt);
  sub.proj = std::vector<int>(c.proj.begin(), c.proj.end() - 1);
  GrayCell2 left = unflatten_cell_rec(ig, level - 1, sub);
  int left_idx = ig.chain[level - 1]->cell_index(left);
  return GrayCell2{s, t, left_idx, c.proj.back()};
}

}  // namespace

int unflatten_word(const IterGray& ig, const FlatWord& w) {
  return ig.top().word_index(unflatten_word_rec(ig, ig.chain.size() - 1, w.src, w.letters));
}

int unflatten_cell(const IterGray& ig, const FlatCell& c) {
  return ig.top().cell_index(unflatten_cell_rec(ig, ig.chain.size() - 1, c));
}

// ---------------------------------------------------------------------------

int MultiCubicalFunctor::oidx(const std::vector<int>& t) const {
  int acc = 0;
  for (size_t i = 0; i < factors.size(); ++i)
    acc = acc * static_cast<int>(factors[i]->objects().size()) + t[i];
  return acc;
}
int MultiCubicalFunctor::fidx(const std::vector<int>& t) const {
  int acc = 0;
  for (size_t i = 0; i < factors.size(); ++i)
    acc = acc * static_cast<int>(factors[i]->ones().size()) + t[i];
  return acc;
}
int MultiCubicalFunctor::aidx(const std::vector<int>& t) const {
  int acc = 0;
  for (size_t i = 0; i < factors.size(); ++i)
    acc = acc * static_cast<int>(factors[i]->twos().size()) + t[i];
  return acc;
}

int MultiCubicalFunctor::elem_one(int i, int f, const std::vector<int>& at) const {
  std::vector<int> t(factors.size());
  for (size_t k = 0; k < factors.size(); ++k)
    t[k] = (static_cast<int>(k) == i) ? f : factors[k]->id1(at[k]);
  return on_one[fidx(t)];
}

int MultiCubicalFunctor::sigma_at(int i, int fi, int j, int fj, std::vector<int> at) const {
  at[i] = factors[i]->one_src(fi);
  at[j] = factors[j]->one_src(fj);
  if (factors[i]->is_id1(fi) || factors[j]->is_id1(fj)) {
    // identity constraint on the image of the two-letter composite
    const TwoCat& Z = *cod;
    std::vector<int> mid = at;
    mid[j] = factors[j]->one_tgt(fj);
    int composite = Z.compose1(elem_one(i, fi, mid), elem_one(j, fj, at));
    return Z.id2(composite);
  }
  auto it = sigma_map.find({i, j, fi, fj, oidx(at)});
  if (it == sigma_map.end()) throw NotCubical("missing multicubical constraint");
  return it->second;
}

namespace {

struct MultiSlider {
  const MultiCubicalFunctor& F;
  const TwoCat& Z;

  int image(const std::vector<FlatLetter>& ls, std::vector<int> coords) const {
    int acc = Z.id1(F.on_obj[F.oidx(coords)]);
    for (const auto& l : ls) {
      acc = Z.compose1(F.elem_one(l.coord, l.cell, coords), acc);
      coords[l.coord] = F.factors[l.coord]->one_tgt(l.cell);
    }
    return acc;
  }

  // stable-sort letters by coordinate via adjacent swaps, composing the
  // whiskered σ's. pick_last selects the rightmost inversion instead of the
  // leftmost (used to verify path-independence).
  int slide(std::vector<FlatLetter> ls, const std::vector<int>& coords0,
            bool pick_last = false) const {
    int total = -1;
    while (true) {
      // find inversions
      std::vector<size_t> invs;
      {
        for (size_t p = 0; p + 1 < ls.size(); ++p)
          if (ls[p].coord > ls[p + 1].coord) invs.push_back(p);
      }
      if (invs.empty()) break;
      size_t p = pick_last ? invs.back() : invs.front();
      auto coords = coords0;
      for (size_t q = 0; q < p; ++q)
        coords[ls[q].coord] = F.factors[ls[q].coord]->one_tgt(ls[q].cell);
      int j = ls[p].coord, g = ls[p].cell;
      int i = ls[p + 1].coord, f = ls[p + 1].cell;
      std::vector<FlatLetter> prefix(ls.begin(), ls.begin() + p);
      std::vector<FlatLetter> suffix(ls.begin() + p + 2, ls.end());
      int pre = image(prefix, coords0);
      auto pair_end = coords;
      pair_end[j] = F.factors[j]->one_tgt(g);
      pair_end[i] = F.factors[i]->one_tgt(f);
      int suf = image(suffix, pair_end);
      int sig = F.sigma_at(i, f, j, g, coords);
      int step = Z.hcomp(Z.id2(suf), Z.hcomp(sig, Z.id2(pre)));
      total = (total < 0) ? step : Z.vcomp(step, total);
      std::swap(ls[p], ls[p + 1]);
    }
    if (total < 0) total = Z.id2(image(ls, coords0));
    return total;
  }
};

}  // namespace

ValidationReport validate_multicubical(const MultiCubicalFunctor& F) {
  ValidationReport rep;
  const size_t n = F.factors.size();
  std::vector<int> objs(n, 0);
  std::function<void(size_t, int, int)> sweep = [&](size_t pos, int i, int j) {
    if (pos == n) {
      CubicalFunctor part;
      part.X = F.factors[i];
      part.Y = F.factors[j];
      part.prod = TwoCat::product(part.X, part.Y);
      part.cod = F.cod;
      part.on_obj.resize(part.prod->objects().size());
      part.on_one.resize(part.prod->ones().size());
      part.on_two.resize(part.prod->twos().size());
      const TwoCat& Xi = *part.X;
      const TwoCat& Xj = *part.Y;
      for (int x = 0; x < static_cast<int>(Xi.objects().size()); ++x)
        for (int y = 0; y < static_cast<int>(Xj.objects().size()); ++y) {
          std::vector<int> t = objs;
          t[i] = x;
          t[j] = y;
          part.on_obj[part.oidx(x, y)] = F.on_obj[F.oidx(t)];
        }
      for (int f = 0; f < static_cast<int>(Xi.ones().size()); ++f)
        for (int g = 0; g < static_cast<int>(Xj.ones().size()); ++g) {
          std::vector<int> t(n);
          for (size_t k = 0; k < n; ++k) t[k] = F.factors[k]->id1(objs[k]);
          t[i] = f;
          t[j] = g;
          part.on_one[part.fidx(f, g)] = F.on_one[F.fidx(t)];
        }
      for (int a = 0; a < static_cast<int>(Xi.twos().size()); ++a)
        for (int b = 0; b < static_cast<int>(Xj.twos().size()); ++b) {
          std::vector<int> t(n);
          for (size_t k = 0; k < n; ++k) t[k] = F.factors[k]->id2(F.factors[k]->id1(objs[k]));
          t[i] = a;
          t[j] = b;
          part.on_two[part.aidx(a, b)] = F.on_two[F.aidx(t)];
        }
      for (int f = 0; f < static_cast<int>(Xi.ones().size()); ++f)
        for (int g = 0; g < static_cast<int>(Xj.ones().size()); ++g) {
          if (Xi.is_id1(f) || Xj.is_id1(g)) continue;
          std::vector<int> at = objs;
          part.sigma_map[{f, g}] = F.sigma_at(i, f, j, g, at);
        }
      auto r = validate_cubical(part);
      if (!r.ok())
        rep.add("multicubical.partial", {std::to_string(i), std::to_string(j)}, r.pretty());
      return;
    }
    if (static_cast<int>(pos) == i || static_cast<int>(pos) == j) {
      sweep(pos + 1, i, j);
      return;
    }
    for (int o = 0; o < static_cast<int>(F.factors[pos]->objects().size()); ++o) {
      objs[pos] = o;
      sweep(pos + 1, i, j);
    }
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) sweep(0, static_cast<int>(i), static_cast<int>(j));

  // compatibility of the constraints: slide-path independence on all
  // three-letter descending words (the generating case; "any diagram of
  // interchange cells commutes")
  MultiSlider S{F, *F.cod};
  std::function<void(size_t, std::vector<int>&, std::vector<FlatLetter>&)> tri =
      [&](size_t depth, std::vector<int>& base, std::vector<FlatLetter>& picked) {
        if (picked.size() == 3) {
          // base currently holds source objects for the picked letters
          std::vector<FlatLetter> word = {picked[2], picked[1], picked[0]};  // descending
          int a = S.slide(word, base, false);
          int b = S.slide(word, base, true);
          if (a != b)
            rep.add("multicubical.slide_compat",
                    {F.factors[picked[0].coord]->ones()[picked[0].cell].id,
                     F.factors[picked[1].coord]->ones()[picked[1].cell].id,
                     F.factors[picked[2].coord]->ones()[picked[2].cell].id});
          return;
        }
        size_t start = picked.empty() ? 0 : picked.back().coord + 1;
        for (size_t c = start; c < n; ++c)
          for (int f = 0; f < static_cast<int>(F.factors[c]->ones().size()); ++f) {
            if (F.factors[c]->is_id1(f)) continue;
            int save = base[c];
            base[c] = F.factors[c]->one_src(f);
            picked.push_back(FlatLetter{static_cast<int>(c), f});
            tri(depth + 1, base, picked);
            picked.pop_back();
            base[c] = save;
          }
      };
  if (n >= 3) {
    // sweep spectator objects too
    std::vector<int> base(n, 0);
    std::function<void(size_t)> go = [&](size_t p) {
      if (p == n) {
        std::vector<FlatLetter> picked;
        auto b2 = base;
        tri(0, b2, picked);
        return;
      }
      for (int o = 0; o < static_cast<int>(F.factors[p]->objects().size()); ++o) {
        base[p] = o;
        go(p + 1);
      }
    };
    go(0);
  }
  return rep;
}

StrictFunctor strictify_n(const MultiCubicalFunctor& Fhat, const IterGray& ig) {
  if (Fhat.factors != ig.factors) throw BoundaryMismatch("strictify_n: factor mismatch");
  const TwoCat& Z = *Fhat.cod;
  MultiSlider S{Fhat, Z};
  const auto& top = ig.top();
  StrictFunctor F{top.cat, Fhat.cod, {}, {}, {}};
  F.on_obj.resize(top.cat->objects().size());
  F.on_one.resize(top.cat->ones().size());
  F.on_two.resize(top.cat->twos().size());
  for (size_t o = 0; o < F.on_obj.size(); ++o) {
    FlatWord fw = flatten_word(ig, top.cat->id1(static_cast<int>(o)));
    F.on_obj[o] = Fhat.on_obj[Fhat.oidx(fw.src)];
  }
  for (size_t i = 0; i < top.words.size(); ++i) {
    FlatWord fw = flatten_word(ig, static_cast<int>(i));
    F.on_one[i] = S.image(fw.letters, fw.src);
  }
  for (size_t i = 0; i < top.cells.size(); ++i) {
    FlatCell fc = flatten_cell(ig, static_cast<int>(i));
    int slide_src = S.slide(fc.src.letters, fc.src.src);
    int slide_tgt = S.slide(fc.tgt.letters, fc.tgt.src);
    int mediator = Fhat.on_two[Fhat.aidx(fc.proj)];
    F.on_two[i] = Z.vcomp(find_inverse2(Z, slide_tgt), Z.vcomp(mediator, slide_src));
  }
  return F;
}

MultiCubicalFunctor cubify_n(const StrictFunctor& F, const IterGray& ig) {
  const auto& top = ig.top();
  if (F.dom != top.cat) throw BoundaryMismatch("cubify_n: domain mismatch");
  MultiCubicalFunctor Fh;
  Fh.factors = ig.factors;
  Fh.cod = F.cod;
  const size_t n = ig.factors.size();
  size_t nobj = 1, none = 1, ntwo = 1;
  for (const auto& X : ig.factors) {
    nobj *= X->objects().size();
    none *= X->ones().size();
    ntwo *= X->twos().size();
  }
  Fh.on_obj.resize(nobj);
  Fh.on_one.resize(none);
  Fh.on_two.resize(ntwo);
  std::vector<int> t(n, 0);
  std::function<void(size_t)> go_obj = [&](size_t p) {
    if (p == n) {
      FlatWord fw{t, {}};
      Fh.on_obj[Fh.oidx(t)] = F.on_obj[top.cat->one_src(unflatten_word(ig, fw))];
      return;
    }
    for (int o = 0; o < static_cast<int>(ig.factors[p]->objects().size()); ++o) {
      t[p] = o;
      go_obj(p + 1);
    }
  };
  go_obj(0);
  std::function<void(size_t)> go_one = [&](size_t p) {
    if (p == n) {
      std::vector<int> src(n);
      for (size_t k = 0; k < n; ++k) src[k] = ig.factors[k]->one_src(t[k]);
      FlatWord fw{src, {}};
      for (size_t k = 0; k < n; ++k)
        if (!ig.factors[k]->is_id1(t[k]))
          fw.letters.push_back(FlatLetter{static_cast<int>(k), t[k]});
      Fh.on_one[Fh.fidx(t)] = F.on_one[unflatten_word(ig, fw)];
      return;
    }
    for (int f = 0; f < static_cast<int>(ig.factors[p]->ones().size()); ++f) {
      t[p] = f;
      go_one(p + 1);
    }
  };
  go_one(0);
  std::function<void(size_t)> go_two = [&](size_t p) {
    if (p == n) {
      std::vector<int> sfs(n), tfs(n), ssrc(n), tsrc(n);
      for (size_t k = 0; k < n; ++k) {
        sfs[k] = ig.factors[k]->two_src(t[k]);
        tfs[k] = ig.factors[k]->two_tgt(t[k]);
        ssrc[k] = ig.factors[k]->one_src(sfs[k]);
        tsrc[k] = ig.factors[k]->one_src(tfs[k]);
      }
      FlatWord ws{ssrc, {}}, wt{tsrc, {}};
      for (size_t k = 0; k < n; ++k) {
        if (!ig.factors[k]->is_id1(sfs[k]))
          ws.letters.push_back(FlatLetter{static_cast<int>(k), sfs[k]});
        if (!ig.factors[k]->is_id1(tfs[k]))
          wt.letters.push_back(FlatLetter{static_cast<int>(k), tfs[k]});
      }
      FlatCell fc{ws, wt, t};
      Fh.on_two[Fh.aidx(t)] = F.on_two[unflatten_cell(ig, fc)];
      return;
    }
    for (int a = 0; a < static_cast<int>(ig.factors[p]->twos().size()); ++a) {
      t[p] = a;
      go_two(p + 1);
    }
  };
  go_two(0);
  // σ^{(i,j)} at every spectator tuple: image of the nested interchanger
  std::function<void(size_t, size_t, size_t, int, int, std::vector<int>&)> put_sigma =
      [&](size_t i, size_t j, size_t pos, int fi, int fj, std::vector<int>& at) {
        if (pos == n) {
          std::vector<int> src = at;
          src[i] = ig.factors[i]->one_src(fi);
          src[j] = ig.factors[j]->one_src(fj);
          FlatWord ws{src,
                      {FlatLetter{static_cast<int>(j), fj}, FlatLetter{static_cast<int>(i), fi}}};
          FlatWord wt{src,
                      {FlatLetter{static_cast<int>(i), fi}, FlatLetter{static_cast<int>(j), fj}}};
          std::vector<int> projs(n);
          for (size_t k = 0; k < n; ++k) {
            int one = (k == i) ? fi : (k == j) ? fj : ig.factors[k]->id1(src[k]);
            projs[k] = ig.factors[k]->id2(one);
          }
          FlatCell fc{ws, wt, projs};
          Fh.sigma_map[{static_cast<int>(i), static_cast<int>(j), fi, fj, Fh.oidx(src)}] =
              F.on_two[unflatten_cell(ig, fc)];
          return;
        }
        if (pos == i || pos == j) {
          put_sigma(i, j, pos + 1, fi, fj, at);
          return;
        }
        for (int o = 0; o < static_cast<int>(ig.factors[pos]->objects().size()); ++o) {
          at[pos] = o;
          put_sigma(i, j, pos + 1, fi, fj, at);
        }
      };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (int fi = 0; fi < static_cast<int>(ig.factors[i]->ones().size()); ++fi) {
        if (ig.factors[i]->is_id1(fi)) continue;
        for (int fj = 0; fj < static_cast<int>(ig.factors[j]->ones().size()); ++fj) {
          if (ig.factors[j]->is_id1(fj)) continue;
          std::vector<int> at(n, 0);
          put_sigma(i, j, 0, fi, fj, at);
        }
      }
  return Fh;
}

}  // namespace gk
