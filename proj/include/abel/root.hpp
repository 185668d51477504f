#ifndef ABEL_ROOT_HPP
#define ABEL_ROOT_HPP

#include <string>
#include <vector>

#include "abel/errors.hpp"

namespace abel {

/// An element of the positive root lattice, stored as the sequence of
/// nonnegative coefficients over the simple roots.  Sums of positive
/// roots (which need not be roots themselves) use the same type so
/// they can be compared under the dominance order.
class Root {
public:
  explicit Root(std::vector<int> coeffs);

  const std::vector<int>& coeffs() const { return coeffs_; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  int operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }

  // Sum of the coefficients.
  int height() const;

  Root doubled() const;

  // Digit string like "1232102"; falls back to comma separation if a
  // coefficient ever exceeds 9 (none of the supported types do).
  std::string shorthand() const;

  friend Root operator+(const Root& a, const Root& b);
  friend bool operator==(const Root&, const Root&) = default;

private:
  std::vector<int> coeffs_;
};

// Dominance order: a precedes b iff b - a has no negative coefficient.
// Reflexive.  Throws DimensionError when the lengths differ.
bool precedes(const Root& a, const Root& b);

// (height, lexicographic) order used everywhere roots are listed.
bool canonical_less(const Root& a, const Root& b);

} // namespace abel

#endif
