#pragma once

#include <optional>

#include "upmorph/algebra.hpp"
#include "upmorph/word.hpp"

namespace upmorph {

/// A morphism from {0,1}* determined by the images of the two letters.
/// Images may be over any byte alphabet, including one containing '0' and
/// '1' themselves; no disjointness is assumed anywhere.
struct BinaryMorphism {
  Word image0;  // h('0')
  Word image1;  // h('1')

  /// h(a): the concatenation of images along a. The input must be over
  /// {'0','1'}; anything else throws DomainError naming the position.
  Word apply(const Word& a) const;

  friend bool operator==(const BinaryMorphism&,
                         const BinaryMorphism&) = default;
};

/// Everything classify() can tell about a morphism. `injective` is always
/// the negation of `commuting`: non-commuting images make the morphism
/// injective, and commuting images always produce the collision
/// h(01) == h(10).
struct MorphismReport {
  bool commuting = false;
  bool injective = false;
  std::optional<RootDecomposition> root0;  // set when image0 is nonempty
  std::optional<RootDecomposition> root1;  // set when image1 is nonempty
  std::optional<Word> shared_root;  // set when commuting with nonempty images
};

MorphismReport classify(const BinaryMorphism& h);

/// The unique a with h.apply(a) == s, for a morphism whose images do not
/// commute (PreconditionError otherwise — commuting images have no unique
/// preimages). Throws NoDecodeError carrying the leftmost failure position
/// when s is not in the image of h.
///
/// The decoder works by cases on the images x = h(0), y = h(1):
///  (i)  equal lengths: read s in |x|-sized blocks, each block is x or y;
///  (ii) the shorter image is a proper prefix of the longer, say y = x·y':
///       decode s under g = (x, y'), then undo the letter code
///       f(0) = 0, f(1) = 01 (so h = g∘f); the mirrored case swaps the
///       images first and complements the result once at the end;
///  (iii) otherwise greedy: at most one image can match at any position,
///       since two matches would make the shorter image a prefix of the
///       longer one.
Word decode(const BinaryMorphism& h, const Word& s);

}  // namespace upmorph
