#pragma once

#include "graykernel/hom2.hpp"

namespace gk {

// One letter of a Gray-product word: a nonidentity 1-cell of the left or the
// right factor.
struct Letter {
  bool left = true;
  int cell = -1;
  bool operator==(const Letter& o) const { return left == o.left && cell == o.cell; }
  auto operator<=>(const Letter& o) const = default;
};

// A 1-cell of X⊗Y: a normal-form word of alternating-side letters, written in
// diagrammatic order (first applied first). The empty word is the identity.
struct GrayWord {
  int sx = -1, sy = -1;  // source object pair
  std::vector<Letter> letters;
  bool operator==(const GrayWord& o) const {
    return sx == o.sx && sy == o.sy && letters == o.letters;
  }
  auto operator<=>(const GrayWord& o) const = default;
};

// A 2-cell of X⊗Y as a projection pair: px/py are 2-cells of X/Y between the
// projections of the boundary words. Soundness and completeness of this model
// is local full faithfulness of i: X⊗Y → X×Y.
struct GrayCell2 {
  GrayWord src, tgt;
  int px = -1, py = -1;
  bool operator==(const GrayCell2& o) const {
    return src == o.src && tgt == o.tgt && px == o.px && py == o.py;
  }
  auto operator<=>(const GrayCell2& o) const = default;
};

// Merge adjacent same-side letters and delete identity letters until a
// fixpoint is reached (left-to-right scan). Throws NonThreadingWord when the
// letters do not thread from the source pair.
GrayWord normalize_word(const TwoCat& X, const TwoCat& Y, GrayWord raw);

std::pair<int, int> word_target(const TwoCat& X, const TwoCat& Y, const GrayWord& w);
int word_pi_x(const TwoCat& X, const GrayWord& w);  // composite of Left letters
int word_pi_y(const TwoCat& Y, const GrayWord& w);

class GrayProductView {
 public:
  std::shared_ptr<const TwoCat> X, Y;
  std::shared_ptr<const TwoCat> cat;  // materialized X⊗Y
  std::vector<GrayWord> words;        // indexed like cat 1-cells
  std::vector<GrayCell2> cells;       // indexed like cat 2-cells

  int obj(int x, int y) const { return x * static_cast<int>(Y->objects().size()) + y; }
  std::pair<int, int> obj_pair(int o) const {
    int ny = static_cast<int>(Y->objects().size());
    return {o / ny, o % ny};
  }
  int word_index(const GrayWord& w) const;
  int cell_index(const GrayCell2& c) const;
  const GrayWord& word_of(int one) const { return words[one]; }
  const GrayCell2& cell_of(int two) const { return cells[two]; }

  GrayWord normalize(GrayWord raw) const { return normalize_word(*X, *Y, std::move(raw)); }
  int pi_x(const GrayWord& w) const { return word_pi_x(*X, w); }
  int pi_y(const GrayWord& w) const { return word_pi_y(*Y, w); }

  // Σ_{f,g} as a structured cell; identity cell when f or g is an identity.
  GrayCell2 sigma(int f, int g) const;
  int sigma_index(int f, int g) const { return cell_index(sigma(f, g)); }
  GrayCell2 identity_cell(const GrayWord& w) const;
  GrayCell2 make_cell(GrayWord src, GrayWord tgt, int px, int py) const;

  // structural operations on projection pairs (agree with the tables of cat)
  GrayCell2 vcomp_cell(const GrayCell2& b, const GrayCell2& a) const;
  GrayCell2 hcomp_cell(const GrayCell2& b, const GrayCell2& a) const;
  GrayCell2 whisker_l(const GrayWord& w, const GrayCell2& c) const;  // 1_w ∗ c
  GrayCell2 whisker_r(const GrayCell2& c, const GrayWord& w) const;  // c ∗ 1_w
};

// Materializes X⊗Y. Throws InfiniteEnumeration when a factor has a directed
// 1-cell cycle, EnumerationTooLarge past the cap.
std::shared_ptr<const GrayProductView> gray_product(const std::shared_ptr<const TwoCat>& X,
                                                    const std::shared_ptr<const TwoCat>& Y);

// F⊗G acting letterwise on words and componentwise on projection pairs.
StrictFunctor tensor_functor(const StrictFunctor& F, const StrictFunctor& G,
                             const GrayProductView& dom, const GrayProductView& cod);

// The structural isomorphisms.
struct GrayAssoc {
  std::shared_ptr<const GrayProductView> XY, XY_Z, YZ, X_YZ;
  StrictFunctor fwd;  // (X⊗Y)⊗Z → X⊗(Y⊗Z)
  StrictFunctor bwd;
};
GrayAssoc gray_assoc(const std::shared_ptr<const TwoCat>& X,
                     const std::shared_ptr<const TwoCat>& Y,
                     const std::shared_ptr<const TwoCat>& Z);
GrayAssoc gray_assoc(const std::shared_ptr<const GrayProductView>& XY,
                     const std::shared_ptr<const GrayProductView>& XY_Z,
                     const std::shared_ptr<const GrayProductView>& YZ,
                     const std::shared_ptr<const GrayProductView>& X_YZ);

// l: I⊗X → X and r: X⊗I → X with their inverses.
struct GrayUnitor {
  std::shared_ptr<const GrayProductView> prod;  // I⊗X resp. X⊗I
  StrictFunctor fwd, bwd;
};
GrayUnitor gray_lunitor(const std::shared_ptr<const TwoCat>& X);
GrayUnitor gray_lunitor(const std::shared_ptr<const GrayProductView>& IX);
GrayUnitor gray_runitor(const std::shared_ptr<const TwoCat>& X);
GrayUnitor gray_runitor(const std::shared_ptr<const GrayProductView>& XI);
std::shared_ptr<const TwoCat> unit_twocat();  // the terminal 2-category I

// c: X⊗Y → Y⊗X.
StrictFunctor gray_symmetry(const GrayProductView& XY, const GrayProductView& YX);

// The factorization characterization: m: X□Y → X⊗Y bijective on the
// underlying category, i: X⊗Y → X×Y locally fully faithful.
struct GrayComparison {
  std::shared_ptr<const TwoCat> cartesian;  // X×Y
  StrictFunctor i;                          // X⊗Y → X×Y
  std::size_t funny_objects = 0, funny_ones = 0;  // underlying category of X□Y
  ValidationReport report;                  // failures of the characterization
};
GrayComparison comparison(const GrayProductView& XY);

}  // namespace gk
