#pragma once

#include <cstddef>
#include <optional>

#include "upmorph/word.hpp"

namespace upmorph {

/// A word written as root^exponent with the root primitive (not itself a
/// proper power). Every nonempty word has exactly one such decomposition.
struct RootDecomposition {
  Word root;
  std::size_t exponent = 1;

  friend bool operator==(const RootDecomposition&,
                         const RootDecomposition&) = default;
};

/// True iff u·v == v·u. Deliberately implemented by comparing the two
/// concatenations, NOT via primitive roots, so the classical equivalence
/// (u and v commute iff they share a primitive root) stays a checkable
/// cross-property of this module rather than a tautology.
bool commutes(const Word& u, const Word& v);

/// The primitive root of a nonempty word, via the smallest period computed
/// from the longest border: u is a power of its length-p prefix iff p
/// divides |u|. Throws DomainError on the empty word.
RootDecomposition primitive_root(const Word& u);

/// The shared primitive word b with u = b^k and v = b^l, when u and v
/// commute; nullopt when they do not. Both inputs must be nonempty
/// (DomainError otherwise).
std::optional<Word> common_root(const Word& u, const Word& v);

}  // namespace upmorph
