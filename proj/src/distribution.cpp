#include "abel/distribution.hpp"

namespace abel {

long long DimensionDistribution::total() const {
  long long t = 0;
  for (long long c : counts) t = checked_add(t, c);
  return t;
}

Polynomial to_polynomial(const DimensionDistribution& d) {
  return Polynomial(d.counts);
}

DimensionDistribution distribution_from_polynomial(const Polynomial& p) {
  for (long long c : p.coeffs()) {
    if (c < 0) {
      throw Error("distribution coefficients must be nonnegative");
    }
  }
  return DimensionDistribution{p.coeffs()};
}

} // namespace abel
