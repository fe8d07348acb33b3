#include "upmorph/morphism.hpp"

#include <algorithm>
#include <string>

#include "upmorph/errors.hpp"

namespace upmorph {

Word BinaryMorphism::apply(const Word& a) const {
  const std::size_t ones = std::count(a.begin(), a.end(), '1');
  Word out;
  out.reserve((a.size() - ones) * image0.size() + ones * image1.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    switch (a[i]) {
      case '0':
        out += image0;
        break;
      case '1':
        out += image1;
        break;
      default:
        throw DomainError("apply: symbol '" + std::string(1, a[i]) +
                              "' at position " + std::to_string(i) +
                              " is not 0 or 1",
                          i);
    }
  }
  return out;
}

MorphismReport classify(const BinaryMorphism& h) {
  MorphismReport report;
  report.commuting = commutes(h.image0, h.image1);
  report.injective = !report.commuting;
  if (!h.image0.empty()) report.root0 = primitive_root(h.image0);
  if (!h.image1.empty()) report.root1 = primitive_root(h.image1);
  if (report.commuting && !h.image0.empty() && !h.image1.empty()) {
    report.shared_root = common_root(h.image0, h.image1);
  }
  return report;
}

namespace {

Word complement(const Word& a) {
  Word out = a;
  for (char& c : out) c = (c == '0') ? '1' : '0';
  return out;
}

// Inverse of the letter code f(0) = 0, f(1) = 01. A word is an f-image iff
// it neither starts with 1 nor contains 11; a violation at t-index j maps
// back to image position |g(t[0,j))|.
Word undo_letter_code(const Word& t, const BinaryMorphism& g) {
  Word out;
  std::size_t image_pos = 0;
  std::size_t j = 0;
  while (j < t.size()) {
    if (t[j] == '1') {
      throw NoDecodeError(
          "decode: no preimage, intermediate word leaves a bare 1 at image "
          "position " +
              std::to_string(image_pos),
          image_pos);
    }
    if (j + 1 < t.size() && t[j + 1] == '1') {
      out += '1';
      image_pos += g.image0.size() + g.image1.size();
      j += 2;
    } else {
      out += '0';
      image_pos += g.image0.size();
      j += 1;
    }
  }
  return out;
}

// decode() after the commutation precondition has been established; the
// reduction in case (ii) preserves non-commutation (if x and y' commuted,
// x and y = x·y' would be powers of the same root and commute too), so no
// recheck is needed down the recursion.
Word decode_noncommuting(const BinaryMorphism& h, const Word& s) {
  const Word& x = h.image0;
  const Word& y = h.image1;

  if (x.size() == y.size()) {
    // x != y here, so every block decides one letter.
    const std::size_t k = x.size();
    Word out;
    for (std::size_t pos = 0; pos < s.size(); pos += k) {
      if (s.compare(pos, k, x) == 0) {
        out += '0';
      } else if (s.compare(pos, k, y) == 0) {
        out += '1';
      } else {
        throw NoDecodeError("decode: no preimage, block at image position " +
                                std::to_string(pos) + " matches neither image",
                            pos);
      }
    }
    return out;
  }

  if (x.size() < y.size() && y.starts_with(x)) {
    const BinaryMorphism g{x, y.substr(x.size())};
    return undo_letter_code(decode_noncommuting(g, s), g);
  }
  if (y.size() < x.size() && x.starts_with(y)) {
    // Mirror of the case above: decode under the letter-swapped morphism
    // and complement once at the end.
    return complement(decode_noncommuting(BinaryMorphism{y, x}, s));
  }

  // Neither image is a prefix of the other; greedy is deterministic.
  Word out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s.compare(pos, x.size(), x) == 0) {
      out += '0';
      pos += x.size();
    } else if (s.compare(pos, y.size(), y) == 0) {
      out += '1';
      pos += y.size();
    } else {
      throw NoDecodeError("decode: no preimage, neither image matches at " +
                              std::to_string(pos),
                          pos);
    }
  }
  return out;
}

}  // namespace

Word decode(const BinaryMorphism& h, const Word& s) {
  if (commutes(h.image0, h.image1)) {
    throw PreconditionError(
        "decode: the images commute, so preimages are not unique");
  }
  return decode_noncommuting(h, s);
}

}  // namespace upmorph
