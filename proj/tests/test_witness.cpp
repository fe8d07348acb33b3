#include <doctest.h>

#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "upmorph/algebra.hpp"
#include "upmorph/errors.hpp"
#include "upmorph/witness.hpp"

using namespace upmorph;

namespace {

// Image length of every prefix of p, recomputed from scratch.
std::vector<std::size_t> prefix_image_lengths(const BinaryMorphism& h,
                                              const Word& p) {
  std::vector<std::size_t> out(p.size() + 1, 0);
  for (std::size_t m = 0; m < p.size(); ++m) {
    out[m + 1] = out[m] + h.apply(Word(1, p[m])).size();
  }
  return out;
}

const PhaseTrace& expect_trace(const ExtractResult& r) {
  REQUIRE(std::holds_alternative<PhaseTrace>(r));
  return std::get<PhaseTrace>(r);
}

}  // namespace

TEST_CASE("extract_phases on a periodic stream under an injective morphism") {
  // h(01) = "aba" = the candidate period, so every even prefix (including
  // the empty one) lands on phase 0; the odd prefixes form the losing
  // phase-1 class.
  const BinaryMorphism h{"a", "ba"};
  const WordStream w = WordStream::ultimately_periodic("", "01");
  const UPDecomposition d{"", "aba"};

  const PhaseTrace t = expect_trace(extract_phases(h, w, d, 12));
  CHECK(t.z1 == "");
  CHECK(t.z2 == "aba");
  CHECK(t.anchor == "");
  CHECK(t.hit_count == 7);
  REQUIRE(t.blocks.size() == 6);
  for (const TraceBlock& step : t.blocks) {
    CHECK(step.block == "01");
    CHECK(step.period_reps == 0);
    CHECK(h.apply(step.block) == t.z2 + power(d.period, step.period_reps) + t.z1);
  }

  const TraceVerdict v = classify_trace(h, t);
  REQUIRE(std::holds_alternative<PeriodicityEvidence>(v));
  const auto& evidence = std::get<PeriodicityEvidence>(v);
  CHECK(evidence.preperiod == "");
  CHECK(evidence.period == "01");
  CHECK(canonicalize_up({evidence.preperiod, evidence.period}) ==
        UPDecomposition{"", "01"});
  // The evidence reconstructs the examined prefix.
  CHECK(check_up_fit(w.prefix(12), {evidence.preperiod, evidence.period}).fits);
}

TEST_CASE("extract_phases under a commuting morphism finds a witness") {
  // Unit period: every prefix is a hit and the blocks are the single
  // letters, with one phase step per 1 and none per 0.
  const BinaryMorphism h{"a", "aa"};
  const WordStream w = WordStream::explicit_word("010110111");
  const UPDecomposition d{"", "a"};

  const PhaseTrace t = expect_trace(extract_phases(h, w, d, 9));
  CHECK(t.z1 == "");
  CHECK(t.z2 == "a");
  CHECK(t.anchor == "");
  CHECK(t.hit_count == 10);
  REQUIRE(t.blocks.size() == 9);
  const Word letters = "010110111";
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(t.blocks[i].block == Word(1, letters[i]));
    CHECK(t.blocks[i].period_reps == (letters[i] == '0' ? 0 : 1));
  }

  const TraceVerdict v = classify_trace(h, t);
  REQUIRE(std::holds_alternative<CommutationWitness>(v));
  const auto& witness = std::get<CommutationWitness>(v);
  CHECK(witness.block_index == 1);
  CHECK(witness.block == "0");
  CHECK(witness.next_block == "1");
  CHECK(witness.image == "aaa");
  CHECK(h.apply("01") == "aaa");
  CHECK(h.apply("10") == "aaa");
}

TEST_CASE("extract_phases refutes a wrong candidate") {
  // The image starts "abba..."; the candidate demands "abab...".
  const BinaryMorphism h{"ab", "ba"};
  const ExtractResult r = extract_phases(h, thue_morse(), {"", "ab"}, 8);
  REQUIRE(std::holds_alternative<CandidateRefuted>(r));
  CHECK(std::get<CandidateRefuted>(r).image_mismatch_index == 2);
}

TEST_CASE("extract_phases with a nonempty anchor and preperiod") {
  const BinaryMorphism h{"ab", "a"};
  const WordStream w = WordStream::ultimately_periodic("1", "0");
  const UPDecomposition d{"a", "ab"};

  const PhaseTrace t = expect_trace(extract_phases(h, w, d, 6));
  CHECK(t.z1 == "");
  CHECK(t.z2 == "ab");
  CHECK(t.anchor == "1");
  CHECK(t.hit_count == 6);
  REQUIRE(t.blocks.size() == 5);
  for (const TraceBlock& step : t.blocks) {
    CHECK(step.block == "0");
    CHECK(step.period_reps == 0);
  }
  const TraceVerdict v = classify_trace(h, t);
  REQUIRE(std::holds_alternative<PeriodicityEvidence>(v));
  CHECK(std::get<PeriodicityEvidence>(v) == PeriodicityEvidence{"1", "0"});
}

TEST_CASE("trace reconstruction and block minimality") {
  struct Scenario {
    BinaryMorphism h;
    WordStream w;
    UPDecomposition d;
    std::size_t n;
  };
  const Scenario scenarios[] = {
      {{"a", "ba"}, WordStream::ultimately_periodic("", "01"), {"", "aba"}, 12},
      {{"a", "aa"}, WordStream::explicit_word("010110111"), {"", "a"}, 9},
      {{"ab", "a"}, WordStream::ultimately_periodic("1", "0"), {"a", "ab"}, 9},
      {{"ab", "abab"}, thue_morse(), {"", "ab"}, 16},
      {{"ba", "baba"}, fibonacci(), {"", "ba"}, 21},
  };

  for (const Scenario& sc : scenarios) {
    CAPTURE(sc.h.image0);
    CAPTURE(sc.h.image1);
    const PhaseTrace t = expect_trace(extract_phases(sc.h, sc.w, sc.d, sc.n));
    const Word prefix = sc.w.prefix(sc.n);

    // Reconstruction: the image of anchor·blocks equals the
    // anchor image followed by one z2·z^p·z1 chunk per block, and the
    // whole thing is a prefix of the candidate's unrolling.
    Word from_blocks = sc.h.apply(t.anchor);
    Word examined = t.anchor;
    for (const TraceBlock& step : t.blocks) {
      CHECK(sc.h.apply(step.block) ==
            t.z2 + power(sc.d.period, step.period_reps) + t.z1);
      from_blocks += t.z2 + power(sc.d.period, step.period_reps) + t.z1;
      examined += step.block;
    }
    CHECK(sc.h.apply(examined) == from_blocks);
    CHECK(oracles::unroll(sc.d.preperiod, sc.d.period, from_blocks.size()) ==
          from_blocks);
    CHECK(prefix.compare(0, examined.size(), examined) == 0);

    // Minimality: no proper nonempty prefix of a block reaches another
    // recorded hit.
    const auto image_len = prefix_image_lengths(sc.h, prefix);
    const std::size_t ylen = sc.d.preperiod.size();
    const std::size_t zlen = sc.d.period.size();
    const std::size_t phase = t.z1.size();
    std::size_t hit = t.anchor.size();
    for (const TraceBlock& step : t.blocks) {
      for (std::size_t cut = 1; cut < step.block.size(); ++cut) {
        const std::size_t len = image_len[hit + cut];
        const bool recorded_hit = len >= ylen &&
                                  (len - ylen) % zlen == phase &&
                                  len > image_len[hit];
        CHECK(!recorded_hit);
      }
      hit += step.block.size();
    }
  }
}

TEST_CASE("extract_phases demands enough hits") {
  try {
    extract_phases({"a", "ba"}, WordStream::ultimately_periodic("", "01"),
                   {"", "aba"}, 3);
    FAIL("expected InsufficientEvidenceError");
  } catch (const InsufficientEvidenceError& e) {
    CHECK(e.hits() == 2);
  }
}

TEST_CASE("extract_phases validates its arguments") {
  const WordStream w = thue_morse();
  CHECK_THROWS_AS(extract_phases({"a", "b"}, w, {"", ""}, 4), DomainError);
  CHECK_THROWS_AS(extract_phases({"a", "b"}, w, {"", "ab"}, 0), DomainError);
}

TEST_CASE("an erasing image collapses repeated hit lengths onto the first") {
  const BinaryMorphism h{"", "a"};
  const PhaseTrace t = expect_trace(
      extract_phases(h, WordStream::explicit_word("0011"), {"", "a"}, 4));
  CHECK(t.anchor == "");
  CHECK(t.hit_count == 3);
  REQUIRE(t.blocks.size() == 2);
  CHECK(t.blocks[0] == TraceBlock{"001", 0});
  CHECK(t.blocks[1] == TraceBlock{"1", 0});

  // Commuting morphism: the periodicity verdict is reported but makes no
  // validated claim about the examined word.
  const TraceVerdict v = classify_trace(h, t);
  REQUIRE(std::holds_alternative<PeriodicityEvidence>(v));
  CHECK(std::get<PeriodicityEvidence>(v) == PeriodicityEvidence{"", "001"});
}

TEST_CASE("classify_trace requires two blocks") {
  PhaseTrace t;
  t.z2 = "a";
  t.anchor = "0";
  t.blocks = {{"0", 0}};
  t.hit_count = 2;
  CHECK_THROWS_AS(classify_trace({"a", "aa"}, t), PreconditionError);
}

TEST_CASE("classify_trace verifies witnesses before returning them") {
  // Fabricated trace: distinct steps but images that do not commute.
  PhaseTrace bogus;
  bogus.z2 = "aba";
  bogus.blocks = {{"0", 0}, {"1", 1}};
  bogus.hit_count = 3;
  CHECK_THROWS_AS(classify_trace({"a", "ba"}, bogus), InvariantViolationError);
}

TEST_CASE("classify_trace rejects unequal blocks under an injective morphism") {
  PhaseTrace bogus;
  bogus.z2 = "aba";
  bogus.blocks = {{"01", 0}, {"10", 0}};
  bogus.hit_count = 3;
  CHECK_THROWS_AS(classify_trace({"a", "ba"}, bogus), InvariantViolationError);
}

TEST_CASE("witness blocks that commute share a root with distinct exponents") {
  // The endgame of the classification: when a commutation witness pairs
  // two distinct commuting blocks, they are powers of one primitive word
  // with different exponents (which is what makes the minimality
  // contradiction tick for injective morphisms).
  const BinaryMorphism h{"a", "aa"};
  const std::pair<Word, Word> pairs[] = {
      {"01", "0101"}, {"0", "00"}, {"10", "101010"}, {"110", "110110"}};
  for (const auto& [u, v] : pairs) {
    REQUIRE(commutes(u, v));
    PhaseTrace t;
    t.z2 = "a";
    t.blocks = {{u, h.apply(u).size() - 1}, {v, h.apply(v).size() - 1}};
    t.hit_count = 3;

    const TraceVerdict verdict = classify_trace(h, t);
    REQUIRE(std::holds_alternative<CommutationWitness>(verdict));
    const auto& witness = std::get<CommutationWitness>(verdict);
    CHECK(h.apply(witness.block + witness.next_block) == witness.image);
    CHECK(h.apply(witness.next_block + witness.block) == witness.image);

    const auto root = common_root(witness.block, witness.next_block);
    REQUIRE(root.has_value());
    CHECK(primitive_root(witness.block).exponent !=
          primitive_root(witness.next_block).exponent);
  }
}

TEST_CASE("injective morphisms on periodic words never yield witnesses") {
  const BinaryMorphism morphisms[] = {
      {"a", "ba"}, {"ab", "a"}, {"0", "01"}, {"ab", "ba"}};
  const WordStream streams[] = {
      WordStream::ultimately_periodic("", "01"),
      WordStream::ultimately_periodic("", "001"),
      WordStream::ultimately_periodic("1", "0"),
      WordStream::ultimately_periodic("", "0"),
  };
  for (const BinaryMorphism& h : morphisms) {
    REQUIRE(classify(h).injective);
    for (const WordStream& w : streams) {
      const Word image = h.apply(w.prefix(48));
      const auto d = search_min_up(image, 8, 16, 3);
      if (!d) continue;
      ExtractResult r = [&] {
        try {
          return extract_phases(h, w, *d, 48);
        } catch (const InsufficientEvidenceError&) {
          return ExtractResult{CandidateRefuted{0}};  // skip sentinel
        }
      }();
      if (!std::holds_alternative<PhaseTrace>(r)) continue;
      const PhaseTrace& t = std::get<PhaseTrace>(r);
      if (t.blocks.size() < 2) continue;
      const TraceVerdict v = classify_trace(h, t);
      REQUIRE(std::holds_alternative<PeriodicityEvidence>(v));
      for (const TraceBlock& step : t.blocks) {
        CHECK(step.block == t.blocks.front().block);
      }
    }
  }
}

TEST_CASE("falsify: empty run") {
  const FalsifyReport report = falsify({});
  CHECK(report.trials.empty());
  CHECK(report.summary.trials == 0);
  CHECK(report.summary.noncommuting_fits == 0);
  CHECK(report.summary.control_fits == 0);
}

TEST_CASE("falsify validates its configuration") {
  FalsifyConfig config;
  config.trials = 1;
  config.alphabet_size = 1;
  CHECK_THROWS_AS(falsify(config), DomainError);
  config.alphabet_size = 3;
  config.max_image_length = 0;
  CHECK_THROWS_AS(falsify(config), DomainError);
}

TEST_CASE("falsify: small deterministic run") {
  FalsifyConfig config;
  config.trials = 6;
  config.prefix_length = 512;
  config.alphabet_size = 3;
  config.max_image_length = 3;
  config.max_preperiod = 16;
  config.max_period = 32;
  config.seed = 7;

  const FalsifyReport report = falsify(config);
  REQUIRE(report.trials.size() == 12);
  CHECK(report.summary.noncommuting_fits == 0);
  CHECK(report.summary.control_fits == 6);
  CHECK(report.summary.control_root_matches == 6);
  for (const FalsifyTrial& trial : report.trials) {
    CHECK(trial.as_predicted);
    if (trial.control) {
      REQUIRE(trial.canonical_fit.has_value());
      CHECK(trial.canonical_fit->preperiod == "");
      CHECK(trial.canonical_fit->period ==
            primitive_root(trial.control_root).root);
    } else {
      CHECK(!trial.fit.has_value());
      CHECK(!commutes(trial.morphism.image0, trial.morphism.image1));
    }
  }

  // Same seed, same report.
  const FalsifyReport again = falsify(config);
  REQUIRE(again.trials.size() == report.trials.size());
  for (std::size_t i = 0; i < report.trials.size(); ++i) {
    CHECK(again.trials[i].morphism == report.trials[i].morphism);
    CHECK(again.trials[i].stream == report.trials[i].stream);
    CHECK(again.trials[i].fit == report.trials[i].fit);
  }
}

TEST_CASE("the worked falsification scenarios") {
  // A fixed non-commuting morphism on a long aperiodic prefix: no fit.
  const Word tm_image = BinaryMorphism{"ab", "a"}.apply(thue_morse().prefix(4096));
  CHECK(!search_min_up(tm_image, 64, 128, 3).has_value());

  // The commuting control on the same scale: the canonical fit is the
  // shared primitive root with no preperiod.
  const Word fib_image = BinaryMorphism{"ab", "abab"}.apply(fibonacci().prefix(4096));
  const auto fit = search_min_up(fib_image, 64, 128, 3);
  REQUIRE(fit.has_value());
  CHECK(canonicalize_up(*fit) == UPDecomposition{"", "ab"});
}
