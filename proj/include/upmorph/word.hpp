#pragma once

#include <cstddef>
#include <string>

namespace upmorph {

/// A finite word over an alphabet of at most 256 symbols. Words are plain
/// byte strings: the empty word is valid, concatenation is operator+, and
/// equality is symbol-by-symbol. All library indexing is 0-based half-open
/// except factor(), which is the 1-based inclusive convention used when
/// checking worked examples by hand.
using Word = std::string;

/// The factor w[i,j]: symbols of w from position i to position j, 1-based
/// and inclusive, so factor("0100110", 2, 5) == "1001". Throws RangeError
/// naming the offending index unless 1 <= i <= j <= |w|.
Word factor(const Word& w, std::size_t i, std::size_t j);

/// w repeated k times; power(w, 0) is the empty word.
Word power(const Word& w, std::size_t k);

}  // namespace upmorph
