#include "upmorph/algebra.hpp"

#include <vector>

#include "upmorph/errors.hpp"

namespace upmorph {

bool commutes(const Word& u, const Word& v) { return u + v == v + u; }

RootDecomposition primitive_root(const Word& u) {
  if (u.empty()) {
    throw DomainError("primitive_root: the empty word has no primitive root");
  }
  // Longest proper border via the KMP failure function.
  std::vector<std::size_t> border(u.size() + 1, 0);
  for (std::size_t i = 1; i < u.size(); ++i) {
    std::size_t b = border[i];
    while (b > 0 && u[i] != u[b]) b = border[b];
    border[i + 1] = (u[i] == u[b]) ? b + 1 : 0;
  }
  const std::size_t p = u.size() - border[u.size()];  // smallest period
  if (u.size() % p == 0) {
    return RootDecomposition{u.substr(0, p), u.size() / p};
  }
  return RootDecomposition{u, 1};
}

std::optional<Word> common_root(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) {
    throw DomainError("common_root: both words must be nonempty");
  }
  if (!commutes(u, v)) return std::nullopt;
  Word root = primitive_root(u).root;
  if (primitive_root(v).root != root) {
    throw InvariantViolationError(
        "common_root: commuting words with distinct primitive roots");
  }
  return root;
}

}  // namespace upmorph
