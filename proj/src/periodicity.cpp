#include "upmorph/periodicity.hpp"

#include <utility>

#include "upmorph/algebra.hpp"
#include "upmorph/errors.hpp"

namespace upmorph {

namespace {

void require_period(const UPDecomposition& d, const char* who) {
  if (d.period.empty()) {
    throw DomainError(std::string(who) + ": period must be nonempty");
  }
}

}  // namespace

FitVerdict check_up_fit(const Word& s, const UPDecomposition& d) {
  require_period(d, "check_up_fit");
  const Word& y = d.preperiod;
  const Word& z = d.period;

  FitVerdict verdict;
  std::size_t matched = s.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char expected = i < y.size() ? y[i] : z[(i - y.size()) % z.size()];
    if (s[i] != expected) {
      verdict.mismatch_index = i;
      matched = i;
      break;
    }
  }
  verdict.fits = !verdict.mismatch_index.has_value();
  verdict.full_periods_observed =
      matched > y.size() ? (matched - y.size()) / z.size() : 0;
  return verdict;
}

std::optional<UPDecomposition> search_min_up(const Word& s,
                                             std::size_t max_preperiod,
                                             std::size_t max_period,
                                             std::size_t min_full_periods) {
  if (max_period < 1) {
    throw DomainError("search_min_up: max_period must be >= 1");
  }
  if (min_full_periods < 1) {
    throw DomainError("search_min_up: min_full_periods must be >= 1");
  }
  // Period length is the dominant quantity, so it is the outer loop; the
  // first fit in this scan order is the minimal one.
  for (std::size_t zlen = 1; zlen <= max_period; ++zlen) {
    for (std::size_t ylen = 0; ylen <= max_preperiod; ++ylen) {
      if (ylen + zlen > s.size()) break;  // no candidate material left in s
      UPDecomposition candidate{s.substr(0, ylen), s.substr(ylen, zlen)};
      const FitVerdict verdict = check_up_fit(s, candidate);
      if (verdict.fits && verdict.full_periods_observed >= min_full_periods) {
        return candidate;
      }
    }
  }
  return std::nullopt;
}

UPDecomposition canonicalize_up(const UPDecomposition& d) {
  require_period(d, "canonicalize_up");
  Word z = primitive_root(d.period).root;
  Word y = d.preperiod;
  // Rotation keeps the period primitive, so absorption cannot reopen the
  // root reduction.
  while (!y.empty() && y.back() == z.back()) {
    y.pop_back();
    z.insert(z.begin(), z.back());
    z.pop_back();
  }
  return UPDecomposition{std::move(y), std::move(z)};
}

Word up_prefix(const UPDecomposition& d, std::size_t n) {
  require_period(d, "up_prefix");
  Word out =
      n < d.preperiod.size() ? d.preperiod.substr(0, n) : d.preperiod;
  while (out.size() < n) out += d.period;
  out.resize(n);
  return out;
}

}  // namespace upmorph
