#ifndef ABEL_DISTRIBUTION_HPP
#define ABEL_DISTRIBUTION_HPP

#include <vector>

#include "abel/polynomial.hpp"

namespace abel {

/// Number of abelian ideals per dimension, index = dimension, trailing
/// zero counts trimmed.  counts[0] is always 1 (the empty ideal).
struct DimensionDistribution {
  std::vector<long long> counts;

  long long total() const;
  int max_dimension() const { return static_cast<int>(counts.size()) - 1; }

  friend bool operator==(const DimensionDistribution&,
                         const DimensionDistribution&) = default;
};

Polynomial to_polynomial(const DimensionDistribution& d);
DimensionDistribution distribution_from_polynomial(const Polynomial& p);

} // namespace abel

#endif
