#pragma once

#include "graykernel/grayproduct.hpp"

namespace gk {

// A cubical functor in two variables F̂: X×Y → Z. Tables are indexed over the
// cartesian product (row-major in the second factor, matching
// TwoCat::product); the free constraint data is σ_{f,g}: F̂(f,1)∗F̂(1,g) ⇒
// F̂(f,g) for nonidentity f,g — every other composition constraint is the
// identity or derived.
struct CubicalFunctor {
  std::shared_ptr<const TwoCat> X, Y, prod, cod;
  std::vector<int> on_obj, on_one, on_two;
  std::map<std::pair<int, int>, int> sigma_map;

  int oidx(int x, int y) const { return x * static_cast<int>(Y->objects().size()) + y; }
  int fidx(int f, int g) const { return f * static_cast<int>(Y->ones().size()) + g; }
  int aidx(int a, int b) const { return a * static_cast<int>(Y->twos().size()) + b; }

  int obj(int x, int y) const { return on_obj[oidx(x, y)]; }
  int one(int f, int g) const { return on_one[fidx(f, g)]; }
  int two(int a, int b) const { return on_two[aidx(a, b)]; }
  int left_one(int f, int y) const { return one(f, Y->id1(y)); }
  int right_one(int x, int g) const { return one(X->id1(x), g); }

  // σ_{f,g}; identity when f or g is an identity.
  int sigma(int f, int g) const;
  // the general composition constraint F̂(c')∗F̂(c) ⇒ F̂(c'∘c) at composable
  // product 1-cells c' = (f',g'), c = (f,g)
  int constraint(std::pair<int, int> cp, std::pair<int, int> c) const;
};

ValidationReport validate_cubical(const CubicalFunctor& F);

// The universal cubical functor C: X×Y → X⊗Y (identity on objects, letters on
// generators, constraint Σ).
CubicalFunctor universal_C(const std::shared_ptr<const GrayProductView>& XY);

// Prop.-1 correspondence: the unique strict functor F with F∘C = F̂, computed
// by sliding Right letters past Left letters with the constraints; and its
// inverse F ↦ F∘C.
StrictFunctor strictify(const CubicalFunctor& Fhat, const GrayProductView& XY);
CubicalFunctor cubify(const StrictFunctor& F, const GrayProductView& XY);

// Pseudonatural transformations between cubical functors (components over
// product objects, naturality cells over product 1-cells), and modifications.
struct CubicalPseudoNat {
  CubicalFunctor dom_f, cod_f;
  std::vector<int> components;  // over product objects
  std::vector<int> nat2;        // over product 1-cells
};
struct CubicalModification {
  CubicalPseudoNat dom_t, cod_t;
  std::vector<int> components;
};

ValidationReport validate_cubical_pseudonat(const CubicalPseudoNat& t);
ValidationReport validate_cubical_modification(const CubicalModification& m);

// the transforms of Prop. 1 on the two higher cell levels
PseudoNat transform_pseudonat(const CubicalPseudoNat& s, const GrayProductView& XY);
CubicalPseudoNat restrict_pseudonat(const PseudoNat& s, const GrayProductView& XY);
Modification transform_modification(const CubicalModification& m, const GrayProductView& XY);
CubicalModification restrict_modification(const Modification& m, const GrayProductView& XY);

// ---------------------------------------------------------------------------
// n-variable correspondence onto left-bracketed iterated Gray products.

// chain[0] = gray_product(X1, X2), chain[k] = gray_product(chain[k-1]->cat,
// X_{k+2}); the full product is chain.back().
struct IterGray {
  std::vector<std::shared_ptr<const TwoCat>> factors;
  std::vector<std::shared_ptr<const GrayProductView>> chain;
  const GrayProductView& top() const { return *chain.back(); }
};
IterGray iter_gray(const std::vector<std::shared_ptr<const TwoCat>>& factors);

struct FlatLetter {
  int coord = 0;  // 0-based factor index
  int cell = -1;  // nonidentity 1-cell of that factor
  auto operator<=>(const FlatLetter& o) const = default;
};
struct FlatWord {
  std::vector<int> src;  // object tuple
  std::vector<FlatLetter> letters;
};
struct FlatCell {
  FlatWord src, tgt;
  std::vector<int> proj;  // one 2-cell per factor
};

FlatWord flatten_word(const IterGray& ig, int one_cell);
FlatCell flatten_cell(const IterGray& ig, int two_cell);
int unflatten_word(const IterGray& ig, const FlatWord& w);
int unflatten_cell(const IterGray& ig, const FlatCell& c);

// A cubical functor in n variables: full tables over cell tuples plus the
// pairwise constraints σ^{(i,j)} for i<j.
struct MultiCubicalFunctor {
  std::vector<std::shared_ptr<const TwoCat>> factors;
  std::shared_ptr<const TwoCat> cod;
  std::vector<int> on_obj, on_one, on_two;  // mixed-radix over tuples
  // (i,j,f_i,f_j, object tuple index of the spectator coordinates); the i/j
  // entries of the tuple hold the sources of f_i/f_j
  std::map<std::tuple<int, int, int, int, int>, int> sigma_map;

  int oidx(const std::vector<int>& t) const;
  int fidx(const std::vector<int>& t) const;
  int aidx(const std::vector<int>& t) const;
  // σ^{(i,j)}_{fi,fj} whiskered at the given coordinates
  int sigma_at(int i, int fi, int j, int fj, std::vector<int> at) const;
  // image of the 1-cell that is f at coordinate i and the identity of the
  // given object tuple elsewhere
  int elem_one(int i, int f, const std::vector<int>& at) const;
};

ValidationReport validate_multicubical(const MultiCubicalFunctor& F);

constexpr int kMaxArity = 4;

StrictFunctor strictify_n(const MultiCubicalFunctor& Fhat, const IterGray& ig);
MultiCubicalFunctor cubify_n(const StrictFunctor& F, const IterGray& ig);

}  // namespace gk
