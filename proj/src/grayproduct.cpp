#include "graykernel/grayproduct.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gk {

namespace {

std::string word_id(const TwoCat& X, const TwoCat& Y, const GrayWord& w) {
  std::string s = "w(" + X.objects()[w.sx] + "|" + Y.objects()[w.sy] + ")";
  for (const auto& l : w.letters)
    s += (l.left ? ".L[" : ".R[") + (l.left ? X.ones()[l.cell].id : Y.ones()[l.cell].id) + "]";
  return s;
}

std::string cell_id(const TwoCat& X, const TwoCat& Y, const GrayCell2& c) {
  return "c[" + word_id(X, Y, c.src) + ">" + word_id(X, Y, c.tgt) + ";" + X.twos()[c.px].id +
         "," + Y.twos()[c.py].id + "]";
}

}  // namespace

GrayWord normalize_word(const TwoCat& X, const TwoCat& Y, GrayWord raw) {
  int cx = raw.sx, cy = raw.sy;
  for (const auto& l : raw.letters) {
    if (l.left) {
      if (X.one_src(l.cell) != cx)
        throw NonThreadingWord("left letter " + X.ones()[l.cell].id + " does not thread");
      cx = X.one_tgt(l.cell);
    } else {
      if (Y.one_src(l.cell) != cy)
        throw NonThreadingWord("right letter " + Y.ones()[l.cell].id + " does not thread");
      cy = Y.one_tgt(l.cell);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Letter> out;
    for (const auto& l : raw.letters) {
      bool ident = l.left ? X.is_id1(l.cell) : Y.is_id1(l.cell);
      if (ident) {
        changed = true;
        continue;
      }
      if (!out.empty() && out.back().left == l.left) {
        out.back().cell = l.left ? X.compose1(l.cell, out.back().cell)
                                 : Y.compose1(l.cell, out.back().cell);
        changed = true;
        continue;
      }
      out.push_back(l);
    }
    raw.letters = std::move(out);
  }
  return raw;
}

std::pair<int, int> word_target(const TwoCat& X, const TwoCat& Y, const GrayWord& w) {
  int cx = w.sx, cy = w.sy;
  for (const auto& l : w.letters) {
    if (l.left)
      cx = X.one_tgt(l.cell);
    else
      cy = Y.one_tgt(l.cell);
  }
  return {cx, cy};
}

int word_pi_x(const TwoCat& X, const GrayWord& w) {
  int acc = X.id1(w.sx);
  for (const auto& l : w.letters)
    if (l.left) acc = X.compose1(l.cell, acc);
  return acc;
}

int word_pi_y(const TwoCat& Y, const GrayWord& w) {
  int acc = Y.id1(w.sy);
  for (const auto& l : w.letters)
    if (!l.left) acc = Y.compose1(l.cell, acc);
  return acc;
}

int GrayProductView::word_index(const GrayWord& w) const {
  for (size_t i = 0; i < words.size(); ++i)
    if (words[i] == w) return static_cast<int>(i);
  throw NotInImage("word not found: " + word_id(*X, *Y, w));
}

int GrayProductView::cell_index(const GrayCell2& c) const {
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i] == c) return static_cast<int>(i);
  throw NotInImage("cell not found: " + cell_id(*X, *Y, c));
}

GrayCell2 GrayProductView::sigma(int f, int g) const {
  GrayWord src{X->one_src(f), Y->one_src(g), {Letter{false, g}, Letter{true, f}}};
  GrayWord tgt{X->one_src(f), Y->one_src(g), {Letter{true, f}, Letter{false, g}}};
  src = normalize(std::move(src));
  tgt = normalize(std::move(tgt));
  return GrayCell2{src, tgt, X->id2(pi_x(src)), Y->id2(pi_y(src))};
}

GrayCell2 GrayProductView::identity_cell(const GrayWord& w) const {
  return GrayCell2{w, w, X->id2(pi_x(w)), Y->id2(pi_y(w))};
}

GrayCell2 GrayProductView::make_cell(GrayWord src, GrayWord tgt, int px, int py) const {
  src = normalize(std::move(src));
  tgt = normalize(std::move(tgt));
  if (src.sx != tgt.sx || src.sy != tgt.sy ||
      word_target(*X, *Y, src) != word_target(*X, *Y, tgt))
    throw BoundaryMismatch("cell between words with different endpoints");
  if (X->two_src(px) != pi_x(src) || X->two_tgt(px) != pi_x(tgt) ||
      Y->two_src(py) != pi_y(src) || Y->two_tgt(py) != pi_y(tgt))
    throw BoundaryMismatch("projection pair does not match word projections");
  return GrayCell2{std::move(src), std::move(tgt), px, py};
}

GrayCell2 GrayProductView::vcomp_cell(const GrayCell2& b, const GrayCell2& a) const {
  if (!(a.tgt == b.src)) throw BoundaryMismatch("vcomp_cell: words do not match");
  return GrayCell2{a.src, b.tgt, X->vcomp(b.px, a.px), Y->vcomp(b.py, a.py)};
}

GrayCell2 GrayProductView::hcomp_cell(const GrayCell2& b, const GrayCell2& a) const {
  auto end_a = word_target(*X, *Y, a.src);
  if (end_a != std::make_pair(b.src.sx, b.src.sy))
    throw BoundaryMismatch("hcomp_cell: endpoints do not compose");
  auto concat = [&](const GrayWord& w1, const GrayWord& w2) {
    GrayWord r{w1.sx, w1.sy, w1.letters};
    r.letters.insert(r.letters.end(), w2.letters.begin(), w2.letters.end());
    return normalize(std::move(r));
  };
  return GrayCell2{concat(a.src, b.src), concat(a.tgt, b.tgt), X->hcomp(b.px, a.px),
                   Y->hcomp(b.py, a.py)};
}

GrayCell2 GrayProductView::whisker_l(const GrayWord& w, const GrayCell2& c) const {
  return hcomp_cell(identity_cell(w), c);
}

GrayCell2 GrayProductView::whisker_r(const GrayCell2& c, const GrayWord& w) const {
  return hcomp_cell(c, identity_cell(w));
}

std::shared_ptr<const GrayProductView> gray_product(const std::shared_ptr<const TwoCat>& X,
                                                    const std::shared_ptr<const TwoCat>& Y) {
  if (!X->acyclic_ones() || !Y->acyclic_ones())
    throw InfiniteEnumeration("Gray product of a factor with 1-cell cycles");
  auto view = std::make_shared<GrayProductView>();
  view->X = X;
  view->Y = Y;

  const int nx = static_cast<int>(X->objects().size());
  const int ny = static_cast<int>(Y->objects().size());

  std::vector<GrayWord> nonidentity;
  std::function<void(GrayWord&, int, int)> extend = [&](GrayWord& w, int cx, int cy) {
    if (!w.letters.empty()) {
      nonidentity.push_back(w);
      if (nonidentity.size() > max_cells())
        throw EnumerationTooLarge("Gray product word enumeration exceeds cap");
    }
    for (int f = 0; f < static_cast<int>(X->ones().size()); ++f) {
      if (X->is_id1(f) || X->one_src(f) != cx) continue;
      if (!w.letters.empty() && w.letters.back().left) continue;
      w.letters.push_back(Letter{true, f});
      extend(w, X->one_tgt(f), cy);
      w.letters.pop_back();
    }
    for (int g = 0; g < static_cast<int>(Y->ones().size()); ++g) {
      if (Y->is_id1(g) || Y->one_src(g) != cy) continue;
      if (!w.letters.empty() && !w.letters.back().left) continue;
      w.letters.push_back(Letter{false, g});
      extend(w, cx, Y->one_tgt(g));
      w.letters.pop_back();
    }
  };
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      GrayWord w{x, y, {}};
      extend(w, x, y);
    }
  std::sort(nonidentity.begin(), nonidentity.end());

  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) view->words.push_back(GrayWord{x, y, {}});
  view->words.insert(view->words.end(), nonidentity.begin(), nonidentity.end());

  for (const auto& w : view->words) {
    auto tgt_w = word_target(*X, *Y, w);
    for (const auto& v : view->words) {
      if (v.sx != w.sx || v.sy != w.sy || word_target(*X, *Y, v) != tgt_w) continue;
      int pxs = view->pi_x(w), pxt = view->pi_x(v);
      int pys = view->pi_y(w), pyt = view->pi_y(v);
      for (int px = 0; px < static_cast<int>(X->twos().size()); ++px) {
        if (X->two_src(px) != pxs || X->two_tgt(px) != pxt) continue;
        for (int py = 0; py < static_cast<int>(Y->twos().size()); ++py) {
          if (Y->two_src(py) != pys || Y->two_tgt(py) != pyt) continue;
          view->cells.push_back(GrayCell2{w, v, px, py});
          if (view->cells.size() > max_cells())
            throw EnumerationTooLarge("Gray product 2-cell enumeration exceeds cap");
        }
      }
    }
  }

  TwoCatBuilder b("(" + X->name() + ")o(" + Y->name() + ")");
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      b.add_object("(" + X->objects()[x] + "|" + Y->objects()[y] + ")");
  std::map<GrayWord, int> widx;
  for (size_t i = 0; i < view->words.size(); ++i) {
    widx[view->words[i]] = static_cast<int>(i);
    auto tgt = word_target(*X, *Y, view->words[i]);
    b.add_one(word_id(*X, *Y, view->words[i]), view->obj(view->words[i].sx, view->words[i].sy),
              view->obj(tgt.first, tgt.second));
  }
  std::map<GrayCell2, int> cidx;
  for (size_t i = 0; i < view->cells.size(); ++i) {
    cidx[view->cells[i]] = static_cast<int>(i);
    b.add_two(cell_id(*X, *Y, view->cells[i]), widx.at(view->cells[i].src),
              widx.at(view->cells[i].tgt));
  }
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) b.set_id1(view->obj(x, y), widx.at(GrayWord{x, y, {}}));
  for (size_t i = 0; i < view->words.size(); ++i)
    b.set_id2(static_cast<int>(i), cidx.at(view->identity_cell(view->words[i])));
  for (size_t i = 0; i < view->words.size(); ++i) {
    auto end_i = word_target(*X, *Y, view->words[i]);
    for (size_t j = 0; j < view->words.size(); ++j) {
      if (view->words[j].sx != end_i.first || view->words[j].sy != end_i.second) continue;
      GrayWord cc{view->words[i].sx, view->words[i].sy, view->words[i].letters};
      cc.letters.insert(cc.letters.end(), view->words[j].letters.begin(),
                        view->words[j].letters.end());
      b.set_hcomp1(static_cast<int>(j), static_cast<int>(i),
                   widx.at(normalize_word(*X, *Y, std::move(cc))));
    }
  }
  for (size_t i = 0; i < view->cells.size(); ++i) {
    const auto& a = view->cells[i];
    auto end_a = word_target(*X, *Y, a.src);
    for (size_t j = 0; j < view->cells.size(); ++j) {
      const auto& c = view->cells[j];
      if (a.tgt == c.src)
        b.set_vcomp2(static_cast<int>(j), static_cast<int>(i),
                     cidx.at(view->vcomp_cell(c, a)));
      if (c.src.sx == end_a.first && c.src.sy == end_a.second)
        b.set_hcomp2(static_cast<int>(j), static_cast<int>(i),
                     cidx.at(view->hcomp_cell(c, a)));
    }
  }
  for (size_t i = 0; i < view->cells.size(); ++i) {
    const auto& c = view->cells[i];
    auto ix = X->inverse2(c.px);
    auto iy = Y->inverse2(c.py);
    bool okx = ix.has_value() || X->is_id2(c.px);
    bool oky = iy.has_value() || Y->is_id2(c.py);
    if (okx && oky)
      b.set_inverse2(static_cast<int>(i),
                     cidx.at(GrayCell2{c.tgt, c.src, ix.value_or(c.px), iy.value_or(c.py)}));
  }
  view->cat = b.finish();
  return view;
}

StrictFunctor tensor_functor(const StrictFunctor& F, const StrictFunctor& G,
                             const GrayProductView& dom, const GrayProductView& cod) {
  if (F.dom != dom.X || G.dom != dom.Y || F.cod != cod.X || G.cod != cod.Y)
    throw BoundaryMismatch("tensor_functor: factor mismatch");
  StrictFunctor H{dom.cat, cod.cat, {}, {}, {}};
  H.on_obj.resize(dom.cat->objects().size());
  H.on_one.resize(dom.cat->ones().size());
  H.on_two.resize(dom.cat->twos().size());
  for (size_t o = 0; o < H.on_obj.size(); ++o) {
    auto [x, y] = dom.obj_pair(static_cast<int>(o));
    H.on_obj[o] = cod.obj(F.obj(x), G.obj(y));
  }
  auto map_word = [&](const GrayWord& w) {
    GrayWord r{F.obj(w.sx), G.obj(w.sy), {}};
    for (const auto& l : w.letters)
      r.letters.push_back(Letter{l.left, l.left ? F.one(l.cell) : G.one(l.cell)});
    return cod.normalize(std::move(r));
  };
  for (size_t i = 0; i < dom.words.size(); ++i)
    H.on_one[i] = cod.word_index(map_word(dom.words[i]));
  for (size_t i = 0; i < dom.cells.size(); ++i) {
    const auto& c = dom.cells[i];
    H.on_two[i] =
        cod.cell_index(GrayCell2{map_word(c.src), map_word(c.tgt), F.two(c.px), G.two(c.py)});
  }
  return H;
}

// ---------------------------------------------------------------------------

GrayAssoc gray_assoc(const std::shared_ptr<const GrayProductView>& XY,
                     const std::shared_ptr<const GrayProductView>& XY_Z,
                     const std::shared_ptr<const GrayProductView>& YZ,
                     const std::shared_ptr<const GrayProductView>& X_YZ) {
  GrayAssoc A;
  A.XY = XY;
  A.XY_Z = XY_Z;
  A.YZ = YZ;
  A.X_YZ = X_YZ;
  const auto& Y = *XY->Y;
  const auto& Z = *XY_Z->Y;

  // ((x,y),z) ↦ (x,(y,z)); a Left(u) letter (u a word of X⊗Y) expands into
  // its letters, with the Y-parts re-tagged as Right([L g]) letters of Y⊗Z;
  // Right(h) letters become Right([R h]).
  auto fwd_word = [&](const GrayWord& w) {
    auto [x0, y0] = XY->obj_pair(w.sx);
    int z0 = w.sy;
    GrayWord r{x0, YZ->obj(y0, z0), {}};
    int cy = y0, cz = z0;
    for (const auto& l : w.letters) {
      if (l.left) {
        for (const auto& il : XY->word_of(l.cell).letters) {
          if (il.left) {
            r.letters.push_back(Letter{true, il.cell});
          } else {
            GrayWord yzw{cy, cz, {Letter{true, il.cell}}};
            r.letters.push_back(Letter{false, YZ->word_index(yzw)});
            cy = Y.one_tgt(il.cell);
          }
        }
      } else {
        GrayWord yzw{cy, cz, {Letter{false, l.cell}}};
        r.letters.push_back(Letter{false, YZ->word_index(yzw)});
        cz = Z.one_tgt(l.cell);
      }
    }
    return X_YZ->normalize(std::move(r));
  };

  // The (Y⊗Z)-projection of an image word: concatenate the inner letters of
  // its Right components.
  auto yz_proj = [&](const GrayWord& iw) {
    auto [yy, zz] = YZ->obj_pair(iw.sy);
    GrayWord acc{yy, zz, {}};
    for (const auto& l : iw.letters) {
      if (l.left) continue;
      const auto& inner = YZ->word_of(l.cell);
      acc.letters.insert(acc.letters.end(), inner.letters.begin(), inner.letters.end());
    }
    return YZ->normalize(std::move(acc));
  };

  StrictFunctor F{XY_Z->cat, X_YZ->cat, {}, {}, {}};
  F.on_obj.resize(XY_Z->cat->objects().size());
  F.on_one.resize(XY_Z->cat->ones().size());
  F.on_two.resize(XY_Z->cat->twos().size());
  for (size_t o = 0; o < F.on_obj.size(); ++o) {
    auto [xy, z] = XY_Z->obj_pair(static_cast<int>(o));
    auto [x, y] = XY->obj_pair(xy);
    F.on_obj[o] = X_YZ->obj(x, YZ->obj(y, z));
  }
  for (size_t i = 0; i < XY_Z->words.size(); ++i)
    F.on_one[i] = X_YZ->word_index(fwd_word(XY_Z->words[i]));
  for (size_t i = 0; i < XY_Z->cells.size(); ++i) {
    const auto& c = XY_Z->cells[i];
    const GrayCell2& pc = XY->cell_of(c.px);
    GrayWord s = fwd_word(c.src), t = fwd_word(c.tgt);
    int pyz = YZ->cell_index(GrayCell2{yz_proj(s), yz_proj(t), pc.py, c.py});
    F.on_two[i] = X_YZ->cell_index(GrayCell2{s, t, pc.px, pyz});
  }
  A.fwd = F;

  StrictFunctor B{X_YZ->cat, XY_Z->cat, {}, {}, {}};
  B.on_obj.assign(X_YZ->cat->objects().size(), -1);
  B.on_one.assign(X_YZ->cat->ones().size(), -1);
  B.on_two.assign(X_YZ->cat->twos().size(), -1);
  for (size_t o = 0; o < F.on_obj.size(); ++o) B.on_obj[F.on_obj[o]] = static_cast<int>(o);
  for (size_t i = 0; i < F.on_one.size(); ++i) B.on_one[F.on_one[i]] = static_cast<int>(i);
  for (size_t i = 0; i < F.on_two.size(); ++i) B.on_two[F.on_two[i]] = static_cast<int>(i);
  for (int v : B.on_obj)
    if (v < 0) throw AxiomViolation("assoc is not bijective on objects");
  for (int v : B.on_one)
    if (v < 0) throw AxiomViolation("assoc is not bijective on 1-cells");
  for (int v : B.on_two)
    if (v < 0) throw AxiomViolation("assoc is not bijective on 2-cells");
  A.bwd = B;
  return A;
}

GrayAssoc gray_assoc(const std::shared_ptr<const TwoCat>& X,
                     const std::shared_ptr<const TwoCat>& Y,
                     const std::shared_ptr<const TwoCat>& Z) {
  auto XY = gray_product(X, Y);
  auto YZ = gray_product(Y, Z);
  auto XY_Z = gray_product(XY->cat, Z);
  auto X_YZ = gray_product(X, YZ->cat);
  return gray_assoc(XY, XY_Z, YZ, X_YZ);
}

std::shared_ptr<const TwoCat> unit_twocat() {
  static std::shared_ptr<const TwoCat> I = zoo_discrete(1);
  return I;
}

GrayUnitor gray_lunitor(const std::shared_ptr<const GrayProductView>& IX) {
  GrayUnitor U;
  U.prod = IX;
  auto X = IX->Y;
  StrictFunctor F{IX->cat, X, {}, {}, {}};
  F.on_obj.resize(IX->cat->objects().size());
  F.on_one.resize(IX->cat->ones().size());
  F.on_two.resize(IX->cat->twos().size());
  for (size_t o = 0; o < F.on_obj.size(); ++o)
    F.on_obj[o] = IX->obj_pair(static_cast<int>(o)).second;
  for (size_t i = 0; i < IX->words.size(); ++i) F.on_one[i] = IX->pi_y(IX->words[i]);
  for (size_t i = 0; i < IX->cells.size(); ++i) F.on_two[i] = IX->cells[i].py;
  U.fwd = F;
  StrictFunctor B{X, IX->cat, {}, {}, {}};
  B.on_obj.resize(X->objects().size());
  B.on_one.resize(X->ones().size());
  B.on_two.resize(X->twos().size());
  for (size_t o = 0; o < B.on_obj.size(); ++o) B.on_obj[o] = IX->obj(0, static_cast<int>(o));
  for (size_t f = 0; f < B.on_one.size(); ++f) {
    GrayWord w{0, X->one_src(static_cast<int>(f)), {}};
    if (!X->is_id1(static_cast<int>(f))) w.letters.push_back(Letter{false, static_cast<int>(f)});
    B.on_one[f] = IX->word_index(w);
  }
  for (size_t a = 0; a < B.on_two.size(); ++a) {
    int sf = X->two_src(static_cast<int>(a)), tf = X->two_tgt(static_cast<int>(a));
    GrayWord ws{0, X->one_src(sf), {}};
    if (!X->is_id1(sf)) ws.letters.push_back(Letter{false, sf});
    GrayWord wt{0, X->one_src(tf), {}};
    if (!X->is_id1(tf)) wt.letters.push_back(Letter{false, tf});
    B.on_two[a] =
        IX->cell_index(GrayCell2{ws, wt, IX->X->id2(IX->X->id1(0)), static_cast<int>(a)});
  }
  U.bwd = B;
  return U;
}

GrayUnitor gray_lunitor(const std::shared_ptr<const TwoCat>& X) {
  return gray_lunitor(gray_product(unit_twocat(), X));
}

GrayUnitor gray_runitor(const std::shared_ptr<const GrayProductView>& XI) {
  GrayUnitor U;
  U.prod = XI;
  auto X = XI->X;
  StrictFunctor F{XI->cat, X, {}, {}, {}};
  F.on_obj.resize(XI->cat->objects().size());
  F.on_one.resize(XI->cat->ones().size());
  F.on_two.resize(XI->cat->twos().size());
  for (size_t o = 0; o < F.on_obj.size(); ++o)
    F.on_obj[o] = XI->obj_pair(static_cast<int>(o)).first;
  for (size_t i = 0; i < XI->words.size(); ++i) F.on_one[i] = XI->pi_x(XI->words[i]);
  for (size_t i = 0; i < XI->cells.size(); ++i) F.on_two[i] = XI->cells[i].px;
  U.fwd = F;
  StrictFunctor B{X, XI->cat, {}, {}, {}};
  B.on_obj.resize(X->objects().size());
  B.on_one.resize(X->ones().size());
  B.on_two.resize(X->twos().size());
  for (size_t o = 0; o < B.on_obj.size(); ++o) B.on_obj[o] = XI->obj(static_cast<int>(o), 0);
  for (size_t f = 0; f < B.on_one.size(); ++f) {
    GrayWord w{X->one_src(static_cast<int>(f)), 0, {}};
    if (!X->is_id1(static_cast<int>(f))) w.letters.push_back(Letter{true, static_cast<int>(f)});
    B.on_one[f] = XI->word_index(w);
  }
  for (size_t a = 0; a < B.on_two.size(); ++a) {
    int sf = X->two_src(static_cast<int>(a)), tf = X->two_tgt(static_cast<int>(a));
    GrayWord ws{X->one_src(sf), 0, {}};
    if (!X->is_id1(sf)) ws.letters.push_back(Letter{true, sf});
    GrayWord wt{X->one_src(tf), 0, {}};
    if (!X->is_id1(tf)) wt.letters.push_back(Letter{true, tf});
    B.on_two[a] =
        XI->cell_index(GrayCell2{ws, wt, static_cast<int>(a), XI->Y->id2(XI->Y->id1(0))});
  }
  U.bwd = B;
  return U;
}

GrayUnitor gray_runitor(const std::shared_ptr<const TwoCat>& X) {
  return gray_runitor(gray_product(X, unit_twocat()));
}

StrictFunctor gray_symmetry(const GrayProductView& XY, const GrayProductView& YX) {
  if (XY.X != YX.Y || XY.Y != YX.X) throw BoundaryMismatch("gray_symmetry: factor mismatch");
  StrictFunctor F{XY.cat, YX.cat, {}, {}, {}};
  F.on_obj.resize(XY.cat->objects().size());
  F.on_one.resize(XY.cat->ones().size());
  F.on_two.resize(XY.cat->twos().size());
  for (size_t o = 0; o < F.on_obj.size(); ++o) {
    auto [x, y] = XY.obj_pair(static_cast<int>(o));
    F.on_obj[o] = YX.obj(y, x);
  }
  auto map_word = [&](const GrayWord& w) {
    GrayWord r{w.sy, w.sx, {}};
    for (const auto& l : w.letters) r.letters.push_back(Letter{!l.left, l.cell});
    return YX.normalize(std::move(r));
  };
  for (size_t i = 0; i < XY.words.size(); ++i) F.on_one[i] = YX.word_index(map_word(XY.words[i]));
  for (size_t i = 0; i < XY.cells.size(); ++i) {
    const auto& c = XY.cells[i];
    F.on_two[i] = YX.cell_index(GrayCell2{map_word(c.src), map_word(c.tgt), c.py, c.px});
  }
  return F;
}

GrayComparison comparison(const GrayProductView& XY) {
  GrayComparison out;
  out.cartesian = TwoCat::product(XY.X, XY.Y);
  const auto& P = *out.cartesian;
  const auto& X = *XY.X;
  const auto& Y = *XY.Y;
  const int ny1 = static_cast<int>(Y.ones().size());
  const int ny2 = static_cast<int>(Y.twos().size());
  StrictFunctor I{XY.cat, out.cartesian, {}, {}, {}};
  I.on_obj.resize(XY.cat->objects().size());
  I.on_one.resize(XY.cat->ones().size());
  I.on_two.resize(XY.cat->twos().size());
  for (size_t o = 0; o < I.on_obj.size(); ++o) {
    auto [x, y] = XY.obj_pair(static_cast<int>(o));
    I.on_obj[o] = x * static_cast<int>(Y.objects().size()) + y;
  }
  for (size_t i = 0; i < XY.words.size(); ++i)
    I.on_one[i] = XY.pi_x(XY.words[i]) * ny1 + XY.pi_y(XY.words[i]);
  for (size_t i = 0; i < XY.cells.size(); ++i)
    I.on_two[i] = XY.cells[i].px * ny2 + XY.cells[i].py;
  out.i = I;
  out.report.merge(validate_strict_functor(I));

  for (size_t i = 0; i < XY.words.size(); ++i)
    for (size_t j = 0; j < XY.words.size(); ++j) {
      const auto& w = XY.words[i];
      const auto& v = XY.words[j];
      if (w.sx != v.sx || w.sy != v.sy || word_target(X, Y, w) != word_target(X, Y, v))
        continue;
      std::size_t gray_count = 0;
      for (const auto& c : XY.cells)
        if (c.src == w && c.tgt == v) ++gray_count;
      std::size_t cart_count = 0;
      int iw = I.on_one[i], iv = I.on_one[j];
      for (int a = 0; a < static_cast<int>(P.twos().size()); ++a)
        if (P.two_src(a) == iw && P.two_tgt(a) == iv) ++cart_count;
      if (gray_count != cart_count)
        out.report.add("comparison.locally_fully_faithful",
                       {XY.cat->ones()[i].id, XY.cat->ones()[j].id},
                       std::to_string(gray_count) + " vs " + std::to_string(cart_count));
    }

  out.funny_objects = XY.cat->objects().size();
  out.funny_ones = XY.cat->ones().size();
  return out;
}

}  // namespace gk
