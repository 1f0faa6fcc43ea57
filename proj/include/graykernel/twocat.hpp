#pragma once

#include <functional>
#include <map>
#include <memory>
#include <unordered_map>

#include "graykernel/base.hpp"

namespace gk {

// A finite 2-category as fully tabulated data. Cells are referenced by index
// into the tables; every composite of composable cells is stored explicitly.
// hcomp1(g,f) = g∘f (f applied first), vcomp(b,a) = b⋄a, hcomp2(b,a) = b∗a.
class TwoCat {
 public:
  struct OneCell {
    std::string id;
    int src = -1, tgt = -1;
  };
  struct TwoCell {
    std::string id;
    int src = -1, tgt = -1;  // parallel 1-cells
  };

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<OneCell>& ones() const { return ones_; }
  const std::vector<TwoCell>& twos() const { return twos_; }
  const std::string& name() const { return name_; }

  int obj_index(const std::string& id) const;
  int one_index(const std::string& id) const;
  int two_index(const std::string& id) const;
  bool has_obj(const std::string& id) const { return obj_by_id_.count(id) != 0; }
  bool has_one(const std::string& id) const { return one_by_id_.count(id) != 0; }
  bool has_two(const std::string& id) const { return two_by_id_.count(id) != 0; }

  int one_src(int f) const { return ones_[f].src; }
  int one_tgt(int f) const { return ones_[f].tgt; }
  int two_src(int a) const { return twos_[a].src; }
  int two_tgt(int a) const { return twos_[a].tgt; }

  int id1(int obj) const { return id1_[obj]; }
  int id2(int one) const { return id2_[one]; }
  bool is_id1(int f) const { return id1_[one_src(f)] == f; }
  bool is_id2(int a) const { return id2_[two_src(a)] == a && two_src(a) == two_tgt(a); }

  // g∘f with f: a→b, g: b→c.
  int compose1(int g, int f) const;
  // b⋄a with a: f⇒g, b: g⇒h.
  int vcomp(int b, int a) const;
  // b∗a with a: f⇒f' : x→y, b: g⇒g' : y→z.
  int hcomp(int b, int a) const;

  std::optional<int> inverse2(int a) const { return inv2_[a]; }

  // whiskering helpers
  int whisker_l(int f, int a) const { return hcomp(id2(f), a); }  // 1_f ∗ a
  int whisker_r(int a, int f) const { return hcomp(a, id2(f)); }  // a ∗ 1_f

  std::size_t cell_count() const { return objects_.size() + ones_.size() + twos_.size(); }

  // Decides invertibility of a 2-cell by table search; consistent with the
  // populated inverse table.
  bool dual_checks(int a) const;

  ValidationReport validate() const;

  // true when the directed graph of nonidentity 1-cells has no cycle
  bool acyclic_ones() const;

  static std::shared_ptr<const TwoCat> product(const std::shared_ptr<const TwoCat>& X,
                                               const std::shared_ptr<const TwoCat>& Y);

 private:
  friend class TwoCatBuilder;
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<OneCell> ones_;
  std::vector<TwoCell> twos_;
  std::map<std::string, int> obj_by_id_, one_by_id_, two_by_id_;
  std::vector<int> id1_, id2_;
  std::vector<std::optional<int>> inv2_;
  std::map<std::pair<int, int>, int> hcomp1_, vcomp2_, hcomp2_;
};

// Incremental construction; `finish` freezes the tables into an immutable
// TwoCat. Throws MalformedTable on dangling references or boundary nonsense
// that makes the tables unusable (validate() reports law violations instead).
class TwoCatBuilder {
 public:
  explicit TwoCatBuilder(std::string name) : name_(std::move(name)) {}

  int add_object(const std::string& id);
  int add_one(const std::string& id, int src, int tgt);
  int add_two(const std::string& id, int src_one, int tgt_one);
  void set_id1(int obj, int one);
  void set_id2(int one, int two);
  void set_hcomp1(int g, int f, int result);
  void set_vcomp2(int b, int a, int result);
  void set_hcomp2(int b, int a, int result);
  void set_inverse2(int a, int inv);

  int obj_count() const { return static_cast<int>(objects_.size()); }
  int one_count() const { return static_cast<int>(ones_.size()); }
  int two_count() const { return static_cast<int>(twos_.size()); }
  const TwoCat::OneCell& one(int f) const { return ones_[f]; }
  const TwoCat::TwoCell& two(int a) const { return twos_[a]; }

  // Adds identity cells (ids "1_<obj>", "1_<one>") and every composite of
  // identities, then autocompletes whiskered composites that are forced by
  // identities. Leaves genuinely new composites to the caller.
  void add_identities();

  // Fill tables by closure: repeatedly compose known cells, using `mul1`,
  // `mulv`, `mulh` callbacks to name freshly needed composites. Used by the
  // derived-category constructors which know their own composition law.
  std::shared_ptr<const TwoCat> finish();

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<TwoCat::OneCell> ones_;
  std::vector<TwoCat::TwoCell> twos_;
  std::map<std::string, int> obj_by_id_, one_by_id_, two_by_id_;
  std::map<int, int> id1_, id2_;
  std::map<std::pair<int, int>, int> hcomp1_, vcomp2_, hcomp2_;
  std::map<int, int> inv2_;
};

// The example zoo.
std::shared_ptr<const TwoCat> zoo_discrete(int n);
std::shared_ptr<const TwoCat> zoo_walking_arrow();
std::shared_ptr<const TwoCat> zoo_walking_2cell();
std::shared_ptr<const TwoCat> zoo_walking_iso_2cell();
std::shared_ptr<const TwoCat> zoo_free_square();
// Z/2 worth of automorphisms on a nonidentity 1-cell: ω: f⇒f, ω⋄ω = 1.
std::shared_ptr<const TwoCat> zoo_two_group_arrow();
// Z/2 on an identity 1-cell: τ: 1_a⇒1_a, τ⋄τ = 1.
std::shared_ptr<const TwoCat> zoo_two_group_object();
std::shared_ptr<const TwoCat> zoo_empty();

std::shared_ptr<const TwoCat> standard(const std::string& name);
std::vector<std::string> standard_names();

}  // namespace gk
