#ifndef ABEL_OMEGA_POSET_HPP
#define ABEL_OMEGA_POSET_HPP

#include <string>
#include <utility>
#include <vector>

#include "abel/root_system.hpp"

namespace abel {

/// The subposet of positive roots whose double is not dominated by the
/// highest root.  Every abelian-ideal root set lives inside it.
///
/// Immutable after construction; safe for concurrent reads.
struct OmegaPoset {
  LieType lie_type;
  // Subset of the positive system, canonical order.
  std::vector<Root> elements;
  // Indices into positive_roots() for each element, ascending.
  std::vector<int> root_indices;
  // Covering pairs (lower, upper) as indices into elements; no
  // transitive edges.  Sorted by (lower, upper).
  std::vector<std::pair<int, int>> covers;

  int size() const { return static_cast<int>(elements.size()); }
};

OmegaPoset compute_omega(const RootSystem& rs);

// True iff a + b is not dominated by the highest root.  The sum need
// not be a root.
bool sum_not_preceding_theta(const Root& a, const Root& b,
                             const RootSystem& rs);

// DOT rendering of the Hasse diagram, one node statement per line in
// canonical order, edges pointing from smaller to larger elements so
// maximal elements sit at the bottom of the drawing.
std::string hasse_to_dot(const OmegaPoset& p);

} // namespace abel

#endif
