#pragma once

#include <cstddef>
#include <optional>

#include "upmorph/word.hpp"

namespace upmorph {

/// A decomposition preperiod·period^ω of an (intended) infinite word. The
/// period must be nonempty; operations taking one throw DomainError when it
/// is not. Canonical form: primitive period, shortest preperiod (see
/// canonicalize_up). Two decompositions denote the same infinite word iff
/// their canonical forms are equal.
struct UPDecomposition {
  Word preperiod;
  Word period;

  friend bool operator==(const UPDecomposition&,
                         const UPDecomposition&) = default;
};

/// Outcome of matching a finite word against a decomposition. All verdicts
/// are statements about the examined word only, never about any infinite
/// extension.
struct FitVerdict {
  bool fits = false;
  /// Leftmost disagreement; set exactly when !fits.
  std::optional<std::size_t> mismatch_index;
  /// Complete period repetitions matched after the preperiod (up to the
  /// mismatch, when there is one).
  std::size_t full_periods_observed = 0;
};

/// Does s look like a prefix of preperiod·period^ω?
FitVerdict check_up_fit(const Word& s, const UPDecomposition& d);

/// First decomposition, scanning period length ascending then preperiod
/// length ascending, whose candidate (read off s itself) fits all of s with
/// at least min_full_periods complete repetitions. min_full_periods guards
/// against vacuous fits: any word "fits" a period at least as long as its
/// tail. Requires max_period >= 1 and min_full_periods >= 1.
std::optional<UPDecomposition> search_min_up(const Word& s,
                                             std::size_t max_preperiod,
                                             std::size_t max_period,
                                             std::size_t min_full_periods);

/// The unique normal form denoting the same infinite word: the period is
/// replaced by its primitive root, then trailing preperiod symbols equal to
/// the period's last symbol migrate into the period by rotation
/// (u·c·(v·c)^ω == u·(c·v)^ω). Idempotent.
UPDecomposition canonicalize_up(const UPDecomposition& d);

/// preperiod·period^ω truncated to n symbols.
Word up_prefix(const UPDecomposition& d, std::size_t n);

}  // namespace upmorph
