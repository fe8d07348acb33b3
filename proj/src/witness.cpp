#include "upmorph/witness.hpp"

#include <algorithm>
#include <utility>

#include "upmorph/algebra.hpp"
#include "upmorph/errors.hpp"

namespace upmorph {

ExtractResult extract_phases(const BinaryMorphism& h, const WordStream& w,
                             const UPDecomposition& d, std::size_t n) {
  if (d.period.empty()) {
    throw DomainError("extract_phases: period must be nonempty");
  }
  if (n < 1) {
    throw DomainError("extract_phases: prefix length must be >= 1");
  }

  const Word prefix = w.prefix(n);
  const Word image = h.apply(prefix);
  const FitVerdict fit = check_up_fit(image, d);
  if (!fit.fits) {
    return CandidateRefuted{*fit.mismatch_index};
  }

  // Image length of every prefix of the examined word.
  std::vector<std::size_t> image_len(prefix.size() + 1, 0);
  for (std::size_t m = 0; m < prefix.size(); ++m) {
    const Word& letter_image = prefix[m] == '0' ? h.image0 : h.image1;
    image_len[m + 1] = image_len[m] + letter_image.size();
  }

  const std::size_t ylen = d.preperiod.size();
  const std::size_t zlen = d.period.size();

  // Recorded hits per phase class: first prefix at each image length.
  std::vector<std::vector<std::size_t>> hits_by_phase(zlen);
  for (std::size_t m = 0; m <= prefix.size(); ++m) {
    if (image_len[m] < ylen) continue;
    auto& hits = hits_by_phase[(image_len[m] - ylen) % zlen];
    if (hits.empty() || image_len[m] > image_len[hits.back()]) {
      hits.push_back(m);
    }
  }

  std::size_t phase = 0;
  for (std::size_t k = 1; k < zlen; ++k) {
    if (hits_by_phase[k].size() > hits_by_phase[phase].size()) phase = k;
  }
  const auto& hits = hits_by_phase[phase];
  if (hits.size() < 3) {
    throw InsufficientEvidenceError(
        "extract_phases: only " + std::to_string(hits.size()) +
            " hits in the best phase class; raise the prefix length",
        hits.size());
  }

  PhaseTrace trace;
  trace.z1 = d.period.substr(0, phase);
  trace.z2 = d.period.substr(phase);
  trace.anchor = prefix.substr(0, hits.front());
  trace.hit_count = hits.size();
  trace.blocks.reserve(hits.size() - 1);
  for (std::size_t i = 1; i < hits.size(); ++i) {
    TraceBlock step;
    step.block = prefix.substr(hits[i - 1], hits[i] - hits[i - 1]);
    // Image lengths within one class differ by a positive multiple of |z|.
    step.period_reps = (image_len[hits[i]] - image_len[hits[i - 1]]) / zlen - 1;
    trace.blocks.push_back(std::move(step));
  }
  return trace;
}

TraceVerdict classify_trace(const BinaryMorphism& h, const PhaseTrace& t) {
  if (t.blocks.size() < 2) {
    throw PreconditionError("classify_trace: need at least 2 blocks, got " +
                            std::to_string(t.blocks.size()));
  }

  const auto unequal = std::adjacent_find(
      t.blocks.begin(), t.blocks.end(),
      [](const TraceBlock& a, const TraceBlock& b) {
        return a.period_reps != b.period_reps;
      });

  if (unequal == t.blocks.end()) {
    // Equal steps mean equal block images; injectivity then forces the
    // blocks themselves to be equal.
    if (classify(h).injective) {
      for (const TraceBlock& step : t.blocks) {
        if (step.block != t.blocks.front().block) {
          throw InvariantViolationError(
              "classify_trace: injective morphism with equal phase steps "
              "but unequal blocks");
        }
      }
    }
    return PeriodicityEvidence{t.anchor, t.blocks.front().block};
  }

  const auto next = std::next(unequal);
  const Word forward = h.apply(unequal->block + next->block);
  const Word backward = h.apply(next->block + unequal->block);
  if (forward != backward) {
    throw InvariantViolationError(
        "classify_trace: adjacent blocks with distinct steps whose images "
        "do not commute");
  }
  CommutationWitness witness;
  witness.block_index =
      static_cast<std::size_t>(unequal - t.blocks.begin()) + 1;
  witness.block = unequal->block;
  witness.next_block = next->block;
  witness.image = forward;
  return witness;
}

namespace {

// Deterministic generator independent of any standard-library distribution
// details, so reports are byte-identical across toolchains.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t arm,
                         std::uint64_t index) {
  SplitMix64 mix(seed ^ (arm * 0xA24BAED4963EE407ULL));
  mix.next();
  return mix.next() ^ SplitMix64(index).next();
}

Word random_word(SplitMix64& rng, std::size_t alphabet_size,
                 std::size_t min_length, std::size_t max_length) {
  const std::size_t length =
      min_length + static_cast<std::size_t>(
                       rng.below(max_length - min_length + 1));
  Word out(length, 'a');
  for (char& c : out) {
    c = static_cast<char>('a' + rng.below(alphabet_size));
  }
  return out;
}

}  // namespace

FalsifyReport falsify(const FalsifyConfig& config) {
  FalsifyReport report;
  report.summary.trials = config.trials;
  report.summary.seed = config.seed;

  if (config.trials == 0) return report;

  // Over a unary alphabet (or with only empty images) every pair commutes
  // and rejection sampling cannot terminate.
  if (config.alphabet_size < 2 || config.alphabet_size > 26) {
    throw DomainError("falsify: alphabet_size must be in 2..26");
  }
  if (config.max_image_length < 1) {
    throw DomainError("falsify: max_image_length must be >= 1");
  }
  if (config.prefix_length < 1) {
    throw DomainError("falsify: prefix_length must be >= 1");
  }

  // The examined prefixes do not vary across trials.
  const Word stream_prefixes[2] = {
      thue_morse().prefix(config.prefix_length),
      fibonacci().prefix(config.prefix_length),
  };
  const char* stream_names[2] = {"thue-morse", "fibonacci"};

  for (int arm = 0; arm < 2; ++arm) {
    const bool control = arm == 1;
    for (std::size_t index = 0; index < config.trials; ++index) {
      SplitMix64 rng(trial_seed(config.seed, static_cast<std::uint64_t>(arm),
                                index));
      FalsifyTrial trial;
      trial.index = index;
      trial.control = control;

      if (!control) {
        do {
          trial.morphism.image0 =
              random_word(rng, config.alphabet_size, 0,
                          config.max_image_length);
          trial.morphism.image1 =
              random_word(rng, config.alphabet_size, 0,
                          config.max_image_length);
        } while (commutes(trial.morphism.image0, trial.morphism.image1));
      } else {
        trial.control_root =
            random_word(rng, config.alphabet_size, 1,
                        config.max_image_length);
        trial.morphism.image0 =
            power(trial.control_root, 1 + rng.below(3));
        trial.morphism.image1 =
            power(trial.control_root, 1 + rng.below(3));
      }

      const std::size_t pick = rng.below(2);
      trial.stream = stream_names[pick];
      const Word image = trial.morphism.apply(stream_prefixes[pick]);
      trial.fit = search_min_up(image, config.max_preperiod,
                                config.max_period, 3);
      if (trial.fit) {
        trial.canonical_fit = canonicalize_up(*trial.fit);
      }

      if (!control) {
        trial.as_predicted = !trial.fit.has_value();
        if (trial.fit) ++report.summary.noncommuting_fits;
      } else {
        if (trial.fit) ++report.summary.control_fits;
        const Word expected_root = primitive_root(trial.control_root).root;
        trial.root_match = trial.canonical_fit &&
                           trial.canonical_fit->preperiod.empty() &&
                           trial.canonical_fit->period == expected_root;
        if (trial.root_match) ++report.summary.control_root_matches;
        trial.as_predicted = trial.root_match;
      }
      report.trials.push_back(std::move(trial));
    }
  }
  return report;
}

}  // namespace upmorph
