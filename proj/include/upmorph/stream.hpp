#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "upmorph/word.hpp"

namespace upmorph {

/// Symbol-to-word rules applied in lockstep to every position of a word
/// (a D0L substitution). Every symbol that occurs must have a rule; there
/// is no silent pass-through.
struct Substitution {
  std::map<char, Word> rules;

  /// Image of w under the rules. Throws DomainError naming the position of
  /// the first symbol without a rule.
  Word apply(const Word& w) const;
};

/// Bounded-prefix supplier for an infinite word. Three kinds:
///
///  - morphic: the fixed point of a substitution at a prolongable seed,
///    computed by iterating whole-word images until enough symbols exist;
///  - ultimately periodic: preperiod followed by endless period repeats;
///  - explicit: a stored finite word posing as a stream.
///
/// prefix(n) is deterministic: prefix(n) == prefix(m).substr(0, n) for
/// every n <= m a given stream can supply. Streams hold no mutable state;
/// copies are independent and const access is safe to share.
class WordStream {
 public:
  /// Requires rules[seed] to begin with seed and have length >= 2, so the
  /// iterates converge to an infinite fixed point. Throws DomainError
  /// otherwise.
  static WordStream morphic(Substitution rules, char seed);

  /// Requires a nonempty period (DomainError otherwise).
  static WordStream ultimately_periodic(Word preperiod, Word period);

  static WordStream explicit_word(Word w);

  /// The first n symbols. Explicit streams throw StreamExhaustedError when
  /// n exceeds the stored length; morphic streams throw it if the iterates
  /// stop growing before reaching n (an erasing rule can stall the fixed
  /// point at a finite word).
  Word prefix(std::size_t n) const;

 private:
  struct Morphic {
    Substitution rules;
    char seed;
  };
  struct Periodic {
    Word preperiod;
    Word period;
  };
  struct Explicit {
    Word word;
  };

  explicit WordStream(std::variant<Morphic, Periodic, Explicit> kind)
      : kind_(std::move(kind)) {}

  std::variant<Morphic, Periodic, Explicit> kind_;
};

/// Fixed point of 0 -> 01, 1 -> 10 at seed 0 ("01101001...").
WordStream thue_morse();

/// Fixed point of 0 -> 01, 1 -> 0 at seed 0 ("01001010...").
WordStream fibonacci();

/// The built-in fixtures by their registered names "thue-morse" and
/// "fibonacci"; nullopt for anything else.
std::optional<WordStream> named_stream(const std::string& name);

}  // namespace upmorph
