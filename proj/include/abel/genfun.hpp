#ifndef ABEL_GENFUN_HPP
#define ABEL_GENFUN_HPP

#include <string>
#include <vector>

#include "abel/distribution.hpp"
#include "abel/ideal_enum.hpp"
#include "abel/lie_type.hpp"
#include "abel/polynomial.hpp"

namespace abel {

// Number of partitions of total into exactly `parts` parts, each at
// most `max_part`.  All arguments must be >= 1.
long long restricted_partition(int parts, int max_part, int total);

// Number of abelian ideals of dimension m (m >= 1) in type A of the
// given rank.  The m = 0 count is always the single empty ideal.
long long type_a_count(int rank, int m);

// Dimension generating polynomials of the classical families.
// genfun_type_c accepts rank >= -1 (ranks 0 and -1 give the constant 1,
// which the B/C/D recurrences rely on).
Polynomial genfun_type_c(int rank);
Polynomial genfun_type_b(int rank); // rank >= 2
Polynomial genfun_type_d(int rank); // rank >= 3

// Stored dimension tables of the five exceptional types.  Throws
// UnsupportedTypeError for classical input.
DimensionDistribution exceptional_table(const LieType& type);

// Dispatch: type A summed from the restricted partition counts, B/C/D
// from the generating polynomials, exceptional from the stored tables.
DimensionDistribution closed_form_distribution(const LieType& type);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Outcome of cross-checking the enumerated distribution against the
/// closed form for one type.  Mismatches are reported here, never
/// thrown.
struct VerificationReport {
  LieType type;
  DimensionDistribution enumerated;
  DimensionDistribution closed_form;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

// Builds the report from explicit distributions (also the hook tests
// use to exercise the mismatch path with a corrupted table).
VerificationReport build_report(const LieType& type,
                                const DimensionDistribution& enumerated,
                                const DimensionDistribution& closed_form);

// Enumerates, evaluates the closed form, and cross-checks: coefficient
// equality, both totals equal to 2^rank, the type C product recurrence
// and the B/D polynomial identity where they apply.
VerificationReport verify_type(const LieType& type,
                               const EnumOptions& opts = {});

} // namespace abel

#endif
