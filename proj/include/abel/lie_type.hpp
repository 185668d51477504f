#ifndef ABEL_LIE_TYPE_HPP
#define ABEL_LIE_TYPE_HPP

#include <string>
#include <string_view>

#include "abel/errors.hpp"

namespace abel {

// Default cap on the rank accepted for exhaustive ideal enumeration.
inline constexpr int kEnumerationRankCap = 24;

// Default cap on the rank accepted anywhere else (closed forms, root
// system construction).  Coefficients of every closed form stay well
// below 2^63 up to this rank.
inline constexpr int kClosedFormRankCap = 60;

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

/// Identifies a simple Lie algebra: family letter plus rank.
///
/// Rank bounds: A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4,
/// G = 2, and rank <= max_rank (default kClosedFormRankCap).
struct LieType {
  Family family = Family::A;
  int rank = 1;

  static LieType make(Family family, int rank,
                      int max_rank = kClosedFormRankCap);

  // Parses strings like "A3", "E8".  Throws UsageError on malformed
  // input and RankBoundsError on out-of-range ranks.
  static LieType parse(std::string_view text,
                       int max_rank = kClosedFormRankCap);

  std::string to_string() const;

  bool is_classical() const {
    return family == Family::A || family == Family::B ||
           family == Family::C || family == Family::D;
  }
  bool is_exceptional() const { return !is_classical(); }

  friend bool operator==(const LieType&, const LieType&) = default;
};

// Smallest rank allowed for a family.
int min_rank(Family family);

// Largest rank intrinsically allowed for a family (before the
// configurable cap); unbounded families return max_rank_cap.
int max_rank(Family family, int max_rank_cap = kClosedFormRankCap);

} // namespace abel

#endif
