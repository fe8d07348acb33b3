#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "upmorph/morphism.hpp"
#include "upmorph/periodicity.hpp"
#include "upmorph/stream.hpp"
#include "upmorph/word.hpp"

namespace upmorph {

/// One step of a phase trace: the w-symbols between two consecutive
/// recorded hits. Its image under h is exactly z2 · z^period_reps · z1.
struct TraceBlock {
  Word block;
  std::size_t period_reps = 0;

  friend bool operator==(const TraceBlock&, const TraceBlock&) = default;
};

/// The phase structure of h over a prefix of w, relative to a candidate
/// decomposition (y, z) of the image: the chosen split z = z1·z2, the first
/// recorded hit (anchor) and the blocks between subsequent hits.
///
/// A hit is a prefix Q of the examined w-prefix whose image length reaches
/// the preperiod (|h.apply(Q)| >= |y|); its phase is that length's residue
/// mod |z|. Recorded hits are the hits of the most-populated phase class
/// (ties to the smallest phase), keeping only the first prefix at each
/// image length — an erasing image can repeat a length, and later
/// duplicates contribute no block material. Blocks are minimal by
/// construction: no shorter nonempty extension of one recorded hit reaches
/// the next.
struct PhaseTrace {
  Word z1;  // first |phase| symbols of z
  Word z2;  // remainder, z == z1·z2
  Word anchor;
  std::vector<TraceBlock> blocks;
  std::size_t hit_count = 0;  // recorded hits; == blocks.size() + 1

  friend bool operator==(const PhaseTrace&, const PhaseTrace&) = default;
};

/// All blocks repeat with the same phase step, so the examined w-prefix is
/// anchor·period^ω-shaped. For an injective morphism the blocks are
/// provably all equal and the fit holds; for a commuting morphism this
/// verdict is reported as-is and is NOT validated against the prefix.
struct PeriodicityEvidence {
  Word preperiod;  // the anchor
  Word period;     // the first block

  friend bool operator==(const PeriodicityEvidence&,
                         const PeriodicityEvidence&) = default;
};

/// Two adjacent blocks with different phase steps; their images commute by
/// direct verification: h.apply(block·next_block) == image ==
/// h.apply(next_block·block).
struct CommutationWitness {
  std::size_t block_index = 0;  // 1-based position of `block` in the trace
  Word block;
  Word next_block;
  Word image;

  friend bool operator==(const CommutationWitness&,
                         const CommutationWitness&) = default;
};

/// The image of the examined w-prefix disagrees with preperiod·period^ω at
/// this image position; no trace exists for the candidate.
struct CandidateRefuted {
  std::size_t image_mismatch_index = 0;

  friend bool operator==(const CandidateRefuted&,
                         const CandidateRefuted&) = default;
};

using ExtractResult = std::variant<PhaseTrace, CandidateRefuted>;
using TraceVerdict =
    std::variant<PeriodicityEvidence, CommutationWitness, CandidateRefuted>;

/// Build the phase trace of h over the first n symbols of w against the
/// candidate decomposition d, or refute the candidate with the leftmost
/// image mismatch. Throws InsufficientEvidenceError when the chosen class
/// records fewer than 3 hits (raise n and retry), and DomainError for an
/// empty period or n < 1.
ExtractResult extract_phases(const BinaryMorphism& h, const WordStream& w,
                             const UPDecomposition& d, std::size_t n);

/// Decide what a trace proves: equal phase steps everywhere give
/// periodicity evidence, any unequal adjacent pair gives a commutation
/// witness (verified by direct word comparison). Requires at least 2
/// blocks (PreconditionError). Throws InvariantViolationError if witness
/// verification fails or an injective morphism produced unequal blocks
/// with equal steps — both indicate a bug, never a valid outcome.
TraceVerdict classify_trace(const BinaryMorphism& h, const PhaseTrace& t);

/// Falsification harness configuration. Everything is driven by `seed`;
/// per-trial generators are derived by counter, so runs are reproducible
/// and trials are order-independent.
struct FalsifyConfig {
  std::size_t trials = 0;
  std::size_t prefix_length = 4096;   // symbols of w examined per trial
  std::size_t alphabet_size = 3;      // image symbols drawn from 'a', 'b', ...
  std::size_t max_image_length = 4;
  std::size_t max_preperiod = 64;     // search_min_up bound
  std::size_t max_period = 128;       // search_min_up bound
  std::uint64_t seed = 0;
};

/// One falsification trial. The sampled arm draws non-commuting morphisms,
/// where no fit is predicted; the control arm draws commuting morphisms
/// built from a shared root, where a fit with canonical period equal to
/// that root's primitive root (and empty canonical preperiod) is predicted.
struct FalsifyTrial {
  std::size_t index = 0;
  bool control = false;
  std::string stream;  // "thue-morse" or "fibonacci"
  BinaryMorphism morphism;
  Word control_root;  // control arm only
  std::optional<UPDecomposition> fit;
  std::optional<UPDecomposition> canonical_fit;
  bool root_match = false;  // control arm only
  bool as_predicted = false;
};

struct FalsifySummary {
  std::size_t trials = 0;
  std::size_t noncommuting_fits = 0;     // predicted 0
  std::size_t control_fits = 0;          // predicted == trials
  std::size_t control_root_matches = 0;  // predicted == trials
  std::uint64_t seed = 0;
};

struct FalsifyReport {
  std::vector<FalsifyTrial> trials;
  FalsifySummary summary;
};

/// Run config.trials trials per arm. A fit in the sampled arm is reported
/// data, not an error — it would be either a counterexample or a harness
/// bug, and the full reproduction tuple is in the trial record.
FalsifyReport falsify(const FalsifyConfig& config);

}  // namespace upmorph
