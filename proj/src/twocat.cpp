#include "graykernel/twocat.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace gk {

namespace {
std::atomic<std::size_t> g_max_cells{0};
}

std::size_t max_cells() {
  std::size_t v = g_max_cells.load();
  if (v != 0) return v;
  if (const char* env = std::getenv("GRAYKERNEL_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return 10000;
}

void set_max_cells(std::size_t cap) { g_max_cells.store(cap); }

int TwoCat::obj_index(const std::string& id) const {
  auto it = obj_by_id_.find(id);
  if (it == obj_by_id_.end()) throw MalformedTable("unknown object id '" + id + "' in " + name_);
  return it->second;
}
int TwoCat::one_index(const std::string& id) const {
  auto it = one_by_id_.find(id);
  if (it == one_by_id_.end()) throw MalformedTable("unknown 1-cell id '" + id + "' in " + name_);
  return it->second;
}
int TwoCat::two_index(const std::string& id) const {
  auto it = two_by_id_.find(id);
  if (it == two_by_id_.end()) throw MalformedTable("unknown 2-cell id '" + id + "' in " + name_);
  return it->second;
}

int TwoCat::compose1(int g, int f) const {
  if (one_tgt(f) != one_src(g))
    throw NotComposable("compose1 " + ones_[g].id + " after " + ones_[f].id + " in " + name_);
  auto it = hcomp1_.find({g, f});
  if (it == hcomp1_.end())
    throw MalformedTable("hcomp1 missing entry (" + ones_[g].id + "," + ones_[f].id + ") in " + name_);
  return it->second;
}

int TwoCat::vcomp(int b, int a) const {
  if (two_tgt(a) != two_src(b))
    throw NotComposable("vcomp " + twos_[b].id + " after " + twos_[a].id + " in " + name_);
  auto it = vcomp2_.find({b, a});
  if (it == vcomp2_.end())
    throw MalformedTable("vcomp2 missing entry (" + twos_[b].id + "," + twos_[a].id + ") in " + name_);
  return it->second;
}

int TwoCat::hcomp(int b, int a) const {
  if (one_tgt(two_src(a)) != one_src(two_src(b)))
    throw NotComposable("hcomp " + twos_[b].id + " after " + twos_[a].id + " in " + name_);
  auto it = hcomp2_.find({b, a});
  if (it == hcomp2_.end())
    throw MalformedTable("hcomp2 missing entry (" + twos_[b].id + "," + twos_[a].id + ") in " + name_);
  return it->second;
}

bool TwoCat::dual_checks(int a) const {
  if (a < 0 || a >= static_cast<int>(twos_.size())) throw NotATwoCell("index out of range");
  int f = two_src(a), g = two_tgt(a);
  int idf = id2(f), idg = id2(g);
  for (int d = 0; d < static_cast<int>(twos_.size()); ++d) {
    if (two_src(d) != g || two_tgt(d) != f) continue;
    if (vcomp(d, a) == idf && vcomp(a, d) == idg) return true;
  }
  return false;
}

bool TwoCat::acyclic_ones() const {
  // Kahn over objects with edges = nonidentity 1-cells.
  std::vector<int> indeg(objects_.size(), 0);
  for (const auto& f : ones_) {
    int idx = &f - ones_.data();
    if (is_id1(idx)) continue;
    if (f.src == f.tgt) return false;
    ++indeg[f.tgt];
  }
  std::vector<int> queue;
  for (size_t o = 0; o < objects_.size(); ++o)
    if (indeg[o] == 0) queue.push_back(static_cast<int>(o));
  size_t seen = 0;
  while (!queue.empty()) {
    int o = queue.back();
    queue.pop_back();
    ++seen;
    for (int f = 0; f < static_cast<int>(ones_.size()); ++f) {
      if (is_id1(f) || one_src(f) != o) continue;
      if (--indeg[one_tgt(f)] == 0) queue.push_back(one_tgt(f));
    }
  }
  return seen == objects_.size();
}

ValidationReport TwoCat::validate() const {
  ValidationReport rep;
  auto oid = [&](int f) { return ones_[f].id; };
  auto tid = [&](int a) { return twos_[a].id; };

  // totality + boundary compatibility of hcomp1
  for (int f = 0; f < static_cast<int>(ones_.size()); ++f)
    for (int g = 0; g < static_cast<int>(ones_.size()); ++g) {
      if (one_tgt(f) != one_src(g)) continue;
      auto it = hcomp1_.find({g, f});
      if (it == hcomp1_.end()) {
        rep.add("hcomp1.total", {oid(g), oid(f)});
        continue;
      }
      int gf = it->second;
      if (one_src(gf) != one_src(f) || one_tgt(gf) != one_tgt(g))
        rep.add("hcomp1.boundary", {oid(g), oid(f), oid(gf)});
    }
  // unit and associativity of hcomp1
  for (int f = 0; f < static_cast<int>(ones_.size()); ++f) {
    if (hcomp1_.count({id1(one_tgt(f)), f}) && compose1(id1(one_tgt(f)), f) != f)
      rep.add("hcomp1.left_unit", {oid(f)});
    if (hcomp1_.count({f, id1(one_src(f))}) && compose1(f, id1(one_src(f))) != f)
      rep.add("hcomp1.right_unit", {oid(f)});
  }
  for (int f = 0; f < static_cast<int>(ones_.size()); ++f)
    for (int g = 0; g < static_cast<int>(ones_.size()); ++g) {
      if (one_tgt(f) != one_src(g)) continue;
      if (!hcomp1_.count({g, f})) continue;
      for (int h = 0; h < static_cast<int>(ones_.size()); ++h) {
        if (one_tgt(g) != one_src(h)) continue;
        if (!hcomp1_.count({h, g}) || !hcomp1_.count({h, compose1(g, f)}) ||
            !hcomp1_.count({compose1(h, g), f}))
          continue;
        if (compose1(h, compose1(g, f)) != compose1(compose1(h, g), f))
          rep.add("hcomp1.assoc", {oid(h), oid(g), oid(f)});
      }
    }

  // vcomp2: totality, boundary, unit, associativity
  for (int a = 0; a < static_cast<int>(twos_.size()); ++a)
    for (int b = 0; b < static_cast<int>(twos_.size()); ++b) {
      if (two_tgt(a) != two_src(b)) continue;
      auto it = vcomp2_.find({b, a});
      if (it == vcomp2_.end()) {
        rep.add("vcomp2.total", {tid(b), tid(a)});
        continue;
      }
      int ba = it->second;
      if (two_src(ba) != two_src(a) || two_tgt(ba) != two_tgt(b))
        rep.add("vcomp2.boundary", {tid(b), tid(a), tid(ba)});
    }
  for (int a = 0; a < static_cast<int>(twos_.size()); ++a) {
    if (vcomp2_.count({id2(two_tgt(a)), a}) && vcomp(id2(two_tgt(a)), a) != a)
      rep.add("vcomp2.left_unit", {tid(a)});
    if (vcomp2_.count({a, id2(two_src(a))}) && vcomp(a, id2(two_src(a))) != a)
      rep.add("vcomp2.right_unit", {tid(a)});
  }
  for (int a = 0; a < static_cast<int>(twos_.size()); ++a)
    for (int b = 0; b < static_cast<int>(twos_.size()); ++b) {
      if (two_tgt(a) != two_src(b) || !vcomp2_.count({b, a})) continue;
      for (int c = 0; c < static_cast<int>(twos_.size()); ++c) {
        if (two_tgt(b) != two_src(c)) continue;
        if (!vcomp2_.count({c, b}) || !vcomp2_.count({c, vcomp(b, a)}) ||
            !vcomp2_.count({vcomp(c, b), a}))
          continue;
        if (vcomp(c, vcomp(b, a)) != vcomp(vcomp(c, b), a))
          rep.add("vcomp2.assoc", {tid(c), tid(b), tid(a)});
      }
    }

  // hcomp2: totality, boundary, functoriality wrt hcomp1, unit, associativity
  for (int a = 0; a < static_cast<int>(twos_.size()); ++a)
    for (int b = 0; b < static_cast<int>(twos_.size()); ++b) {
      if (one_tgt(two_src(a)) != one_src(two_src(b))) continue;
      auto it = hcomp2_.find({b, a});
      if (it == hcomp2_.end()) {
        rep.add("hcomp2.total", {tid(b), tid(a)});
        continue;
      }
      int ba = it->second;
      if (two_src(ba) != compose1(two_src(b), two_src(a)) ||
          two_tgt(ba) != compose1(two_tgt(b), two_tgt(a)))
        rep.add("hcomp2.boundary", {tid(b), tid(a), tid(ba)});
    }
  for (int a = 0; a < static_cast<int>(twos_.size()); ++a) {
    int sa = two_src(a);
    int lu = id2(id1(one_tgt(sa)));
    int ru = id2(id1(one_src(sa)));
    if (hcomp2_.count({lu, a}) && hcomp(lu, a) != a) rep.add("hcomp2.left_unit", {tid(a)});
    if (hcomp2_.count({a, ru}) && hcomp(a, ru) != a) rep.add("hcomp2.right_unit", {tid(a)});
  }
  for (int a = 0; a < static_cast<int>(twos_.size()); ++a)
    for (int b = 0; b < static_cast<int>(twos_.size()); ++b) {
      if (one_tgt(two_src(a)) != one_src(two_src(b)) || !hcomp2_.count({b, a})) continue;
      for (int c = 0; c < static_cast<int>(twos_.size()); ++c) {
        if (one_tgt(two_src(b)) != one_src(two_src(c))) continue;
        if (!hcomp2_.count({c, b}) || !hcomp2_.count({c, hcomp(b, a)}) ||
            !hcomp2_.count({hcomp(c, b), a}))
          continue;
        if (hcomp(c, hcomp(b, a)) != hcomp(hcomp(c, b), a))
          rep.add("hcomp2.assoc", {tid(c), tid(b), tid(a)});
      }
    }

  // identity 2-cells of identity 1-cells behave as units for hcomp2 already;
  // id2 must respect boundaries and id1 likewise
  for (size_t o = 0; o < objects_.size(); ++o) {
    int f = id1_[o];
    if (one_src(f) != static_cast<int>(o) || one_tgt(f) != static_cast<int>(o))
      rep.add("id1.boundary", {objects_[o], ones_[f].id});
  }
  for (size_t f = 0; f < ones_.size(); ++f) {
    int a = id2_[f];
    if (two_src(a) != static_cast<int>(f) || two_tgt(a) != static_cast<int>(f))
      rep.add("id2.boundary", {ones_[f].id, twos_[a].id});
  }

  // middle-four interchange: (d⋄c)∗(b⋄a) = (d∗b)⋄(c∗a)
  for (int a = 0; a < static_cast<int>(twos_.size()); ++a)
    for (int b = 0; b < static_cast<int>(twos_.size()); ++b) {
      if (two_tgt(a) != two_src(b)) continue;  // b⋄a defined (left side pair)
      for (int c = 0; c < static_cast<int>(twos_.size()); ++c) {
        if (one_tgt(two_src(a)) != one_src(two_src(c))) continue;
        for (int d = 0; d < static_cast<int>(twos_.size()); ++d) {
          if (two_tgt(c) != two_src(d)) continue;
          if (!vcomp2_.count({b, a}) || !vcomp2_.count({d, c}) || !hcomp2_.count({c, a}) ||
              !hcomp2_.count({d, b}))
            continue;
          int lhs_ok = 1;
          int lhs = -1, rhs = -1;
          if (!hcomp2_.count({vcomp(d, c), vcomp(b, a)}) ||
              !vcomp2_.count({hcomp(d, b), hcomp(c, a)}))
            lhs_ok = 0;
          if (lhs_ok) {
            lhs = hcomp(vcomp(d, c), vcomp(b, a));
            rhs = vcomp(hcomp(d, b), hcomp(c, a));
            if (lhs != rhs) rep.add("interchange", {tid(d), tid(c), tid(b), tid(a)});
          }
        }
      }
    }

  // inverse table entries
  for (int a = 0; a < static_cast<int>(twos_.size()); ++a) {
    if (!inv2_[a]) continue;
    int d = *inv2_[a];
    if (two_src(d) != two_tgt(a) || two_tgt(d) != two_src(a)) {
      rep.add("inverse2.boundary", {tid(a), tid(d)});
      continue;
    }
    if (vcomp(d, a) != id2(two_src(a)) || vcomp(a, d) != id2(two_tgt(a)))
      rep.add("inverse2.law", {tid(a), tid(d)});
  }
  return rep;
}

// ---------------------------------------------------------------------------

int TwoCatBuilder::add_object(const std::string& id) {
  if (obj_by_id_.count(id)) throw MalformedTable("duplicate object id '" + id + "'");
  objects_.push_back(id);
  obj_by_id_[id] = static_cast<int>(objects_.size()) - 1;
  return static_cast<int>(objects_.size()) - 1;
}

int TwoCatBuilder::add_one(const std::string& id, int src, int tgt) {
  if (one_by_id_.count(id)) throw MalformedTable("duplicate 1-cell id '" + id + "'");
  if (src < 0 || src >= obj_count() || tgt < 0 || tgt >= obj_count())
    throw MalformedTable("1-cell '" + id + "' references missing object");
  ones_.push_back({id, src, tgt});
  one_by_id_[id] = static_cast<int>(ones_.size()) - 1;
  return static_cast<int>(ones_.size()) - 1;
}

int TwoCatBuilder::add_two(const std::string& id, int src_one, int tgt_one) {
  if (two_by_id_.count(id)) throw MalformedTable("duplicate 2-cell id '" + id + "'");
  if (src_one < 0 || src_one >= one_count() || tgt_one < 0 || tgt_one >= one_count())
    throw MalformedTable("2-cell '" + id + "' references missing 1-cell");
  if (ones_[src_one].src != ones_[tgt_one].src || ones_[src_one].tgt != ones_[tgt_one].tgt)
    throw MalformedTable("2-cell '" + id + "' between non-parallel 1-cells");
  twos_.push_back({id, src_one, tgt_one});
  two_by_id_[id] = static_cast<int>(twos_.size()) - 1;
  return static_cast<int>(twos_.size()) - 1;
}

void TwoCatBuilder::set_id1(int obj, int one) { id1_[obj] = one; }
void TwoCatBuilder::set_id2(int one, int two) { id2_[one] = two; }
void TwoCatBuilder::set_hcomp1(int g, int f, int result) { hcomp1_[{g, f}] = result; }
void TwoCatBuilder::set_vcomp2(int b, int a, int result) { vcomp2_[{b, a}] = result; }
void TwoCatBuilder::set_hcomp2(int b, int a, int result) { hcomp2_[{b, a}] = result; }
void TwoCatBuilder::set_inverse2(int a, int inv) { inv2_[a] = inv; }

void TwoCatBuilder::add_identities() {
  for (int o = 0; o < obj_count(); ++o) {
    if (id1_.count(o)) continue;
    int f = add_one("1_" + objects_[o], o, o);
    set_id1(o, f);
  }
  for (int f = 0; f < one_count(); ++f) {
    if (id2_.count(f)) continue;
    int a = add_two("1_" + ones_[f].id, f, f);
    set_id2(f, a);
  }
}

std::shared_ptr<const TwoCat> TwoCatBuilder::finish() {
  auto cat = std::make_shared<TwoCat>();
  cat->name_ = name_;
  cat->objects_ = objects_;
  cat->ones_ = ones_;
  cat->twos_ = twos_;
  cat->obj_by_id_ = obj_by_id_;
  cat->one_by_id_ = one_by_id_;
  cat->two_by_id_ = two_by_id_;
  cat->id1_.assign(objects_.size(), -1);
  for (auto [o, f] : id1_) cat->id1_[o] = f;
  cat->id2_.assign(ones_.size(), -1);
  for (auto [f, a] : id2_) cat->id2_[f] = a;
  for (size_t o = 0; o < objects_.size(); ++o)
    if (cat->id1_[o] < 0) throw MalformedTable("object '" + objects_[o] + "' has no identity 1-cell");
  for (size_t f = 0; f < ones_.size(); ++f)
    if (cat->id2_[f] < 0) throw MalformedTable("1-cell '" + ones_[f].id + "' has no identity 2-cell");
  cat->inv2_.assign(twos_.size(), std::nullopt);
  for (auto [a, d] : inv2_) cat->inv2_[a] = d;
  cat->hcomp1_ = hcomp1_;
  cat->vcomp2_ = vcomp2_;
  cat->hcomp2_ = hcomp2_;
  for (auto& [k, v] : hcomp1_)
    if (v < 0 || v >= one_count()) throw MalformedTable("hcomp1 entry references missing 1-cell");
  for (auto& [k, v] : vcomp2_)
    if (v < 0 || v >= two_count()) throw MalformedTable("vcomp2 entry references missing 2-cell");
  for (auto& [k, v] : hcomp2_)
    if (v < 0 || v >= two_count()) throw MalformedTable("hcomp2 entry references missing 2-cell");
  return cat;
}

// ---------------------------------------------------------------------------
// Zoo. Small categories are specified with explicit tables; composites with an
// identity factor are filled in mechanically.

namespace {

// Completes the tables of a hand-specified category: all composites where a
// factor is an identity, plus horizontal composites of identity 2-cells over
// already-known 1-cell composites. Genuinely new composites (nonidentity with
// nonidentity) must have been set explicitly beforehand.
std::shared_ptr<const TwoCat> complete_with_identities(
    TwoCatBuilder& b, const std::map<int, int>& id1, const std::map<int, int>& id2,
    std::map<std::pair<int, int>, int> h1 = {}, std::map<std::pair<int, int>, int> v2 = {},
    std::map<std::pair<int, int>, int> h2 = {}) {
  for (auto [o, f] : id1) b.set_id1(o, f);
  for (auto [f, a] : id2) b.set_id2(f, a);
  auto is_id1 = [&](int f) { return id1.at(b.one(f).src) == f && b.one(f).src == b.one(f).tgt; };
  for (int f = 0; f < b.one_count(); ++f) {
    h1.insert({{f, id1.at(b.one(f).src)}, f});
    h1.insert({{id1.at(b.one(f).tgt), f}, f});
  }
  for (int a = 0; a < b.two_count(); ++a) {
    v2.insert({{a, id2.at(b.two(a).src)}, a});
    v2.insert({{id2.at(b.two(a).tgt), a}, a});
  }
  // identity 2-cells over composable 1-cells
  for (int f = 0; f < b.one_count(); ++f)
    for (int g = 0; g < b.one_count(); ++g) {
      if (b.one(f).tgt != b.one(g).src) continue;
      auto it = h1.find({g, f});
      if (it == h1.end()) continue;
      h2.insert({{id2.at(g), id2.at(f)}, id2.at(it->second)});
    }
  // whiskering by identity 2-cells of identity 1-cells
  for (int a = 0; a < b.two_count(); ++a) {
    int sa = b.two(a).src;
    h2.insert({{a, id2.at(id1.at(b.one(sa).src))}, a});
    h2.insert({{id2.at(id1.at(b.one(sa).tgt)), a}, a});
  }
  (void)is_id1;
  for (auto& [k, v] : h1) b.set_hcomp1(k.first, k.second, v);
  for (auto& [k, v] : v2) b.set_vcomp2(k.first, k.second, v);
  for (auto& [k, v] : h2) b.set_hcomp2(k.first, k.second, v);
  return b.finish();
}

}  // namespace

std::shared_ptr<const TwoCat> zoo_discrete(int n) {
  TwoCatBuilder b("discrete(" + std::to_string(n) + ")");
  std::map<int, int> id1, id2;
  for (int i = 0; i < n; ++i) b.add_object("o" + std::to_string(i));
  for (int i = 0; i < n; ++i) id1[i] = b.add_one("1_o" + std::to_string(i), i, i);
  for (int i = 0; i < n; ++i) id2[i] = b.add_two("1_1_o" + std::to_string(i), i, i);
  return complete_with_identities(b, id1, id2);
}

std::shared_ptr<const TwoCat> zoo_empty() {
  TwoCatBuilder b("empty");
  return b.finish();
}

std::shared_ptr<const TwoCat> zoo_walking_arrow() {
  TwoCatBuilder b("walking_arrow");
  int a = b.add_object("a"), c = b.add_object("b");
  int f = b.add_one("f", a, c);
  int one_a = b.add_one("1_a", a, a), one_b = b.add_one("1_b", c, c);
  int i_f = b.add_two("1_f", f, f);
  int i1a = b.add_two("1_1_a", one_a, one_a), i1b = b.add_two("1_1_b", one_b, one_b);
  (void)i_f;
  std::map<int, int> id1{{a, one_a}, {c, one_b}};
  std::map<int, int> id2{{f, i_f}, {one_a, i1a}, {one_b, i1b}};
  return complete_with_identities(b, id1, id2);
}

std::shared_ptr<const TwoCat> zoo_walking_2cell() {
  TwoCatBuilder b("walking_2cell");
  int a = b.add_object("a"), c = b.add_object("b");
  int f = b.add_one("f", a, c), g = b.add_one("g", a, c);
  int one_a = b.add_one("1_a", a, a), one_b = b.add_one("1_b", c, c);
  int al = b.add_two("alpha", f, g);
  int i_f = b.add_two("1_f", f, f), i_g = b.add_two("1_g", g, g);
  int i1a = b.add_two("1_1_a", one_a, one_a), i1b = b.add_two("1_1_b", one_b, one_b);
  (void)i_f;
  (void)i_g;
  (void)i1a;
  (void)i1b;
  (void)al;
  std::map<int, int> id1{{a, one_a}, {c, one_b}};
  std::map<int, int> id2{{f, i_f}, {g, i_g}, {one_a, i1a}, {one_b, i1b}};
  return complete_with_identities(b, id1, id2);
}

std::shared_ptr<const TwoCat> zoo_walking_iso_2cell() {
  TwoCatBuilder b("walking_iso_2cell");
  int a = b.add_object("a"), c = b.add_object("b");
  int f = b.add_one("f", a, c), g = b.add_one("g", a, c);
  int one_a = b.add_one("1_a", a, a), one_b = b.add_one("1_b", c, c);
  int al = b.add_two("alpha", f, g);
  int ali = b.add_two("alpha_inv", g, f);
  int i_f = b.add_two("1_f", f, f), i_g = b.add_two("1_g", g, g);
  int i1a = b.add_two("1_1_a", one_a, one_a), i1b = b.add_two("1_1_b", one_b, one_b);
  b.set_vcomp2(ali, al, i_f);
  b.set_vcomp2(al, ali, i_g);
  b.set_inverse2(al, ali);
  b.set_inverse2(ali, al);
  std::map<int, int> id1{{a, one_a}, {c, one_b}};
  std::map<int, int> id2{{f, i_f}, {g, i_g}, {one_a, i1a}, {one_b, i1b}};
  return complete_with_identities(b, id1, id2);
}

std::shared_ptr<const TwoCat> zoo_free_square() {
  TwoCatBuilder b("free_square");
  int o00 = b.add_object("sw"), o01 = b.add_object("nw"), o10 = b.add_object("se"),
      o11 = b.add_object("ne");
  int t = b.add_one("top", o01, o11);     // nw -> ne
  int l = b.add_one("left", o00, o01);    // sw -> nw
  int bo = b.add_one("bottom", o00, o10);  // sw -> se
  int r = b.add_one("right", o10, o11);   // se -> ne
  int tl = b.add_one("top.left", o00, o11);
  int rb = b.add_one("right.bottom", o00, o11);
  std::vector<int> ids1;
  for (auto [name, o] : std::vector<std::pair<std::string, int>>{
           {"1_sw", o00}, {"1_nw", o01}, {"1_se", o10}, {"1_ne", o11}})
    ids1.push_back(b.add_one(name, o, o));
  std::map<std::pair<int, int>, int> h1{{{t, l}, tl}, {{r, bo}, rb}};
  std::map<int, int> id1{{o00, ids1[0]}, {o01, ids1[1]}, {o10, ids1[2]}, {o11, ids1[3]}};
  std::map<int, int> id2;
  for (int f = 0; f < b.one_count(); ++f)
    id2[f] = b.add_two("1_" + b.one(f).id, f, f);
  return complete_with_identities(b, id1, id2, h1);
}

std::shared_ptr<const TwoCat> zoo_two_group_arrow() {
  TwoCatBuilder b("two_group_arrow");
  int a = b.add_object("a"), c = b.add_object("b");
  int f = b.add_one("f", a, c);
  int one_a = b.add_one("1_a", a, a), one_b = b.add_one("1_b", c, c);
  int om = b.add_two("omega", f, f);
  int i_f = b.add_two("1_f", f, f);
  int i1a = b.add_two("1_1_a", one_a, one_a), i1b = b.add_two("1_1_b", one_b, one_b);
  b.set_vcomp2(om, om, i_f);
  b.set_inverse2(om, om);
  std::map<int, int> id1{{a, one_a}, {c, one_b}};
  std::map<int, int> id2{{f, i_f}, {one_a, i1a}, {one_b, i1b}};
  return complete_with_identities(b, id1, id2);
}

std::shared_ptr<const TwoCat> zoo_two_group_object() {
  TwoCatBuilder b("two_group_object");
  int a = b.add_object("a");
  int one_a = b.add_one("1_a", a, a);
  int tau = b.add_two("tau", one_a, one_a);
  int i1a = b.add_two("1_1_a", one_a, one_a);
  b.set_vcomp2(tau, tau, i1a);
  b.set_inverse2(tau, tau);
  // hcomp1 of the identity loop with itself
  b.set_hcomp1(one_a, one_a, one_a);
  // horizontal composites of tau: Eckmann-Hilton forces tau∗tau = tau⋄tau = 1
  b.set_hcomp2(tau, tau, i1a);
  std::map<int, int> id1{{a, one_a}};
  std::map<int, int> id2{{one_a, i1a}};
  return complete_with_identities(b, id1, id2);
}

namespace {
std::shared_ptr<const TwoCat> product_impl(const std::shared_ptr<const TwoCat>& X,
                                           const std::shared_ptr<const TwoCat>& Y) {
  TwoCatBuilder b("(" + X->name() + "x" + Y->name() + ")");
  const int ny_o = static_cast<int>(Y->objects().size());
  const int ny_1 = static_cast<int>(Y->ones().size());
  const int ny_2 = static_cast<int>(Y->twos().size());
  auto oidx = [&](int x, int y) { return x * ny_o + y; };
  auto fidx = [&](int x, int y) { return x * ny_1 + y; };
  auto aidx = [&](int x, int y) { return x * ny_2 + y; };
  for (const auto& xo : X->objects())
    for (const auto& yo : Y->objects()) b.add_object("(" + xo + "|" + yo + ")");
  for (int xf = 0; xf < static_cast<int>(X->ones().size()); ++xf)
    for (int yf = 0; yf < ny_1; ++yf)
      b.add_one("(" + X->ones()[xf].id + "|" + Y->ones()[yf].id + ")",
                oidx(X->one_src(xf), Y->one_src(yf)), oidx(X->one_tgt(xf), Y->one_tgt(yf)));
  for (int xa = 0; xa < static_cast<int>(X->twos().size()); ++xa)
    for (int ya = 0; ya < ny_2; ++ya)
      b.add_two("(" + X->twos()[xa].id + "|" + Y->twos()[ya].id + ")",
                fidx(X->two_src(xa), Y->two_src(ya)), fidx(X->two_tgt(xa), Y->two_tgt(ya)));
  for (int xo = 0; xo < static_cast<int>(X->objects().size()); ++xo)
    for (int yo = 0; yo < ny_o; ++yo) b.set_id1(oidx(xo, yo), fidx(X->id1(xo), Y->id1(yo)));
  for (int xf = 0; xf < static_cast<int>(X->ones().size()); ++xf)
    for (int yf = 0; yf < ny_1; ++yf) b.set_id2(fidx(xf, yf), aidx(X->id2(xf), Y->id2(yf)));
  for (int xf = 0; xf < static_cast<int>(X->ones().size()); ++xf)
    for (int yf = 0; yf < ny_1; ++yf)
      for (int xg = 0; xg < static_cast<int>(X->ones().size()); ++xg)
        for (int yg = 0; yg < ny_1; ++yg) {
          if (X->one_tgt(xf) != X->one_src(xg) || Y->one_tgt(yf) != Y->one_src(yg)) continue;
          b.set_hcomp1(fidx(xg, yg), fidx(xf, yf),
                       fidx(X->compose1(xg, xf), Y->compose1(yg, yf)));
        }
  for (int xa = 0; xa < static_cast<int>(X->twos().size()); ++xa)
    for (int ya = 0; ya < ny_2; ++ya)
      for (int xb = 0; xb < static_cast<int>(X->twos().size()); ++xb)
        for (int yb = 0; yb < ny_2; ++yb) {
          if (X->two_tgt(xa) == X->two_src(xb) && Y->two_tgt(ya) == Y->two_src(yb))
            b.set_vcomp2(aidx(xb, yb), aidx(xa, ya),
                         aidx(X->vcomp(xb, xa), Y->vcomp(yb, ya)));
          if (X->one_tgt(X->two_src(xa)) == X->one_src(X->two_src(xb)) &&
              Y->one_tgt(Y->two_src(ya)) == Y->one_src(Y->two_src(yb)))
            b.set_hcomp2(aidx(xb, yb), aidx(xa, ya),
                         aidx(X->hcomp(xb, xa), Y->hcomp(yb, ya)));
        }
  for (int xa = 0; xa < static_cast<int>(X->twos().size()); ++xa)
    for (int ya = 0; ya < ny_2; ++ya) {
      auto xi = X->inverse2(xa);
      auto yi = Y->inverse2(ya);
      bool xinv = xi.has_value() || X->is_id2(xa);
      bool yinv = yi.has_value() || Y->is_id2(ya);
      if (xinv && yinv)
        b.set_inverse2(aidx(xa, ya), aidx(xi.value_or(xa), yi.value_or(ya)));
    }
  return b.finish();
}
}  // namespace

std::shared_ptr<const TwoCat> TwoCat::product(const std::shared_ptr<const TwoCat>& X,
                                              const std::shared_ptr<const TwoCat>& Y) {
  return product_impl(X, Y);
}

std::shared_ptr<const TwoCat> standard(const std::string& name) {
  if (name.rfind("discrete(", 0) == 0 && name.back() == ')')
    return zoo_discrete(std::stoi(name.substr(9, name.size() - 10)));
  if (name == "walking_arrow") return zoo_walking_arrow();
  if (name == "walking_2cell") return zoo_walking_2cell();
  if (name == "walking_iso_2cell") return zoo_walking_iso_2cell();
  if (name == "free_square") return zoo_free_square();
  if (name == "two_group_arrow") return zoo_two_group_arrow();
  if (name == "two_group_object") return zoo_two_group_object();
  if (name == "empty") return zoo_empty();
  throw ParseError("unknown standard 2-category '" + name + "'");
}

std::vector<std::string> standard_names() {
  return {"discrete(1)",     "discrete(2)",        "walking_arrow", "walking_2cell",
          "walking_iso_2cell", "free_square",      "two_group_arrow", "two_group_object"};
}

}  // namespace gk
