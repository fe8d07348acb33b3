#include "upmorph/word.hpp"

#include "upmorph/errors.hpp"

namespace upmorph {

Word factor(const Word& w, std::size_t i, std::size_t j) {
  if (i < 1 || i > w.size()) {
    throw RangeError("factor: index i = " + std::to_string(i) +
                         " outside 1.." + std::to_string(w.size()),
                     i);
  }
  if (j < i || j > w.size()) {
    throw RangeError("factor: index j = " + std::to_string(j) +
                         " outside " + std::to_string(i) + ".." +
                         std::to_string(w.size()),
                     j);
  }
  return w.substr(i - 1, j - i + 1);
}

Word power(const Word& w, std::size_t k) {
  Word out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += w;
  return out;
}

}  // namespace upmorph
