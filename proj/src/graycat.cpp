#include "graykernel/kanmonad.hpp"

namespace gk {

ValidationReport validate_graycategory(const GrayCategory& P) {
  ValidationReport rep;
  const int n = P.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      auto it = P.homs.find({p, q});
      if (it == P.homs.end()) {
        rep.add("graycat.missing_hom", {P.objects[p], P.objects[q]});
        continue;
      }
      rep.merge(it->second->validate());
    }
  if (!rep.ok()) return rep;
  for (int p = 0; p < n; ++p) {
    if (P.units[p] < 0 || P.units[p] >= static_cast<int>(P.hom(p, p)->objects().size()))
      rep.add("graycat.missing_unit", {P.objects[p]});
  }
  // composition functors validate and have the stated boundaries
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        const auto& view = P.comp_dom.at({p, q, r});
        const auto& f = P.comp.at({p, q, r});
        if (view->X != P.hom(q, r) || view->Y != P.hom(p, q) || f.dom != view->cat ||
            f.cod != P.hom(p, r)) {
          rep.add("graycat.comp_boundary", {P.objects[p], P.objects[q], P.objects[r]});
          continue;
        }
        rep.merge(validate_strict_functor(f));
      }
  if (!rep.ok()) return rep;

  // unit laws: comp_{PQQ}(j_Q ⊗ 1) l⁻¹ = 1 and comp_{PPQ}(1 ⊗ j_P) r⁻¹ = 1
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      {
        auto IH = gray_product(unit_twocat(), P.hom(p, q));
        auto l = gray_lunitor(IH);
        auto ins = tensor_functor(
            constant_functor(unit_twocat(), P.hom(q, q), P.units[q]),
            identity_functor(P.hom(p, q)), *IH, *P.comp_dom.at({p, q, q}));
        auto lhs = compose_functors(P.comp.at({p, q, q}), compose_functors(ins, l.bwd));
        rep.merge(compare_functors(lhs, identity_functor(P.hom(p, q)), "graycat.left_unit"));
      }
      {
        auto HI = gray_product(P.hom(p, q), unit_twocat());
        auto r = gray_runitor(HI);
        auto ins = tensor_functor(identity_functor(P.hom(p, q)),
                                  constant_functor(unit_twocat(), P.hom(p, p), P.units[p]),
                                  *HI, *P.comp_dom.at({p, p, q}));
        auto lhs = compose_functors(P.comp.at({p, p, q}), compose_functors(ins, r.bwd));
        rep.merge(compare_functors(lhs, identity_functor(P.hom(p, q)), "graycat.right_unit"));
      }
    }

  // associativity on every object quadruple
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          auto QRS = P.comp_dom.at({q, r, s});
          auto PQR = P.comp_dom.at({p, q, r});
          auto D = gray_product(QRS->cat, P.hom(p, q));
          auto rest = gray_product(P.hom(r, s), PQR->cat);
          auto A = gray_assoc(QRS, D, PQR, rest);
          auto t1 = tensor_functor(P.comp.at({q, r, s}), identity_functor(P.hom(p, q)), *D,
                                   *P.comp_dom.at({p, q, s}));
          auto lhs = compose_functors(P.comp.at({p, q, s}), t1);
          auto t2 = tensor_functor(identity_functor(P.hom(r, s)), P.comp.at({p, q, r}), *rest,
                                   *P.comp_dom.at({p, r, s}));
          auto rhs = compose_functors(P.comp.at({p, r, s}), compose_functors(t2, A.fwd));
          rep.merge(compare_functors(lhs, rhs, "graycat.assoc"));
        }
  return rep;
}

namespace {

std::shared_ptr<GrayCategory> make_skeleton(std::vector<std::string> objects) {
  auto P = std::make_shared<GrayCategory>();
  P->objects = std::move(objects);
  return P;
}

// fill a composition functor where one factor hom is terminal, via unitors
void fill_unit_comps(GrayCategory& P) {
  const int n = P.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        if (P.comp.count({p, q, r})) continue;
        auto view = gray_product(P.hom(q, r), P.hom(p, q));
        P.comp_dom[{p, q, r}] = view;
        if (view->cat->objects().empty()) {
          StrictFunctor empty{view->cat, P.hom(p, r), {}, {}, {}};
          P.comp[{p, q, r}] = empty;
          continue;
        }
        if (q == r && P.hom(q, q)->objects().size() == 1 && P.hom(q, q)->ones().size() == 1 &&
            P.hom(q, q)->twos().size() == 1) {
          // terminal left factor: lunitor-like projection
          StrictFunctor f{view->cat, P.hom(p, r), {}, {}, {}};
          f.on_obj.resize(view->cat->objects().size());
          f.on_one.resize(view->cat->ones().size());
          f.on_two.resize(view->cat->twos().size());
          for (size_t o = 0; o < f.on_obj.size(); ++o)
            f.on_obj[o] = view->obj_pair(static_cast<int>(o)).second;
          for (size_t i = 0; i < view->words.size(); ++i)
            f.on_one[i] = view->pi_y(view->words[i]);
          for (size_t i = 0; i < view->cells.size(); ++i) f.on_two[i] = view->cells[i].py;
          P.comp[{p, q, r}] = f;
          continue;
        }
        if (p == q && P.hom(p, p)->objects().size() == 1 && P.hom(p, p)->ones().size() == 1 &&
            P.hom(p, p)->twos().size() == 1) {
          StrictFunctor f{view->cat, P.hom(p, r), {}, {}, {}};
          f.on_obj.resize(view->cat->objects().size());
          f.on_one.resize(view->cat->ones().size());
          f.on_two.resize(view->cat->twos().size());
          for (size_t o = 0; o < f.on_obj.size(); ++o)
            f.on_obj[o] = view->obj_pair(static_cast<int>(o)).first;
          for (size_t i = 0; i < view->words.size(); ++i)
            f.on_one[i] = view->pi_x(view->words[i]);
          for (size_t i = 0; i < view->cells.size(); ++i) f.on_two[i] = view->cells[i].px;
          P.comp[{p, q, r}] = f;
          continue;
        }
        throw MalformedTable("fill_unit_comps: nontrivial composition left unspecified");
      }
}

}  // namespace

std::shared_ptr<const GrayCategory> graycat_one_object() {
  auto P = make_skeleton({"p"});
  P->homs[{0, 0}] = unit_twocat();
  P->units = {0};
  fill_unit_comps(*P);
  return P;
}

std::shared_ptr<const GrayCategory> graycat_two_object(const std::shared_ptr<const TwoCat>& H) {
  auto P = make_skeleton({"p", "q"});
  P->homs[{0, 0}] = unit_twocat();
  P->homs[{1, 1}] = unit_twocat();
  P->homs[{0, 1}] = H;
  P->homs[{1, 0}] = zoo_empty();
  P->units = {0, 0};
  fill_unit_comps(*P);
  return P;
}

}  // namespace gk
