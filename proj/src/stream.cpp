#include "upmorph/stream.hpp"

#include <utility>

#include "upmorph/errors.hpp"

namespace upmorph {

Word Substitution::apply(const Word& w) const {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto it = rules.find(w[i]);
    if (it == rules.end()) {
      throw DomainError("substitution: no rule for symbol '" +
                            std::string(1, w[i]) + "' at position " +
                            std::to_string(i),
                        i);
    }
    out += it->second;
  }
  return out;
}

WordStream WordStream::morphic(Substitution rules, char seed) {
  auto it = rules.rules.find(seed);
  if (it == rules.rules.end()) {
    throw DomainError("morphic stream: no rule for seed symbol '" +
                      std::string(1, seed) + "'");
  }
  const Word& image = it->second;
  if (image.size() < 2 || image[0] != seed) {
    throw DomainError(
        "morphic stream: rule for seed '" + std::string(1, seed) +
        "' must begin with the seed and have length >= 2, got \"" + image +
        "\"");
  }
  return WordStream(Morphic{std::move(rules), seed});
}

WordStream WordStream::ultimately_periodic(Word preperiod, Word period) {
  if (period.empty()) {
    throw DomainError("ultimately periodic stream: period must be nonempty");
  }
  return WordStream(Periodic{std::move(preperiod), std::move(period)});
}

WordStream WordStream::explicit_word(Word w) {
  return WordStream(Explicit{std::move(w)});
}

Word WordStream::prefix(std::size_t n) const {
  if (const auto* m = std::get_if<Morphic>(&kind_)) {
    Word current(1, m->seed);
    while (current.size() < n) {
      Word next = m->rules.apply(current);
      if (next.size() <= current.size()) {
        throw StreamExhaustedError(
            "morphic stream: fixed point stalled at length " +
            std::to_string(next.size()) + ", cannot supply " +
            std::to_string(n) + " symbols");
      }
      current = std::move(next);
    }
    current.resize(n);
    return current;
  }
  if (const auto* p = std::get_if<Periodic>(&kind_)) {
    Word out =
        n < p->preperiod.size() ? p->preperiod.substr(0, n) : p->preperiod;
    while (out.size() < n) out += p->period;
    out.resize(n);
    return out;
  }
  const auto& e = std::get<Explicit>(kind_);
  if (n > e.word.size()) {
    throw StreamExhaustedError("explicit stream: asked for " +
                               std::to_string(n) + " symbols but only " +
                               std::to_string(e.word.size()) + " stored");
  }
  return e.word.substr(0, n);
}

WordStream thue_morse() {
  return WordStream::morphic(Substitution{{{'0', "01"}, {'1', "10"}}}, '0');
}

WordStream fibonacci() {
  return WordStream::morphic(Substitution{{{'0', "01"}, {'1', "0"}}}, '0');
}

std::optional<WordStream> named_stream(const std::string& name) {
  if (name == "thue-morse") return thue_morse();
  if (name == "fibonacci") return fibonacci();
  return std::nullopt;
}

}  // namespace upmorph
