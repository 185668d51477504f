#ifndef ABEL_IDEAL_ENUM_HPP
#define ABEL_IDEAL_ENUM_HPP

#include <string>
#include <vector>

#include "abel/distribution.hpp"
#include "abel/omega_poset.hpp"
#include "abel/polynomial.hpp"
#include "abel/root_system.hpp"

namespace abel {

/// Root set of an abelian ideal of the Borel subalgebra: upward closed
/// in the positive system, with no two (not necessarily distinct)
/// members whose sum is dominated by the highest root.  The dimension
/// of the ideal is the number of roots.
struct AbelianIdeal {
  // Canonical order.
  std::vector<Root> roots;

  int dimension() const { return static_cast<int>(roots.size()); }
  friend bool operator==(const AbelianIdeal&, const AbelianIdeal&) = default;
};

/// The antichain of minimal roots of an ideal; determines the ideal by
/// upward closure.
struct MinimalGenerators {
  // Canonical order.
  std::vector<Root> roots;

  friend bool operator==(const MinimalGenerators&,
                         const MinimalGenerators&) = default;
};

struct EnumOptions {
  // Ranks above this cap raise ResourceBoundError.
  int max_rank = kEnumerationRankCap;
  // When set, the search splits into independent subtrees that run on
  // std::async tasks; results are aggregated and re-sorted, so output
  // is identical to the single-threaded run.
  bool parallel = false;
};

// True iff s (a subset of the positive system) is upward closed and
// every pair of its members, identical ones included, has a sum not
// dominated by the highest root.  Throws InvalidRootError when s
// contains something outside the positive system.
bool is_abelian_set(const RootSystem& rs, const std::vector<Root>& s);

// All abelian ideals, ordered by (dimension, lexicographic on the
// canonical root lists).  There are exactly 2^rank of them.
std::vector<AbelianIdeal> enumerate_ideals(const RootSystem& rs,
                                           const EnumOptions& opts = {});

// The antichain of minimal elements of the ideal.
MinimalGenerators minimal_roots(const RootSystem& rs,
                                const AbelianIdeal& ideal);

// Upward closure of a pairwise incomparable, pairwise admissible
// generator set.  Throws AdmissibilityError naming the violating pair
// when the preconditions fail.
AbelianIdeal ideal_from_minimal(const RootSystem& rs,
                                const MinimalGenerators& gens);

// Ideal counts per dimension; sums to 2^rank.
DimensionDistribution dimension_distribution(const RootSystem& rs,
                                             const EnumOptions& opts = {});

// Size of the upward closure, in type A of the given rank, of the
// interval antichain with starts i_1 < ... < i_k and ends
// j_1 < ... < j_k (each i_s <= j_s <= rank).  When the intervals
// pairwise overlap this is the dimension of the abelian ideal they
// generate.  Throws InvalidAntichainError on malformed sequences.
long long type_a_dimension(int rank, const std::vector<int>& i_seq,
                           const std::vector<int>& j_seq);

/// One generating polynomial per stratum of the classical-type
/// partition of ideals by marker-root membership.
struct Stratum {
  // Marker index identifying the stratum.
  int n = 0;
  // ' ' for plain strata; '+', '-', '0' for the split top stratum of
  // type D.
  char variant = ' ';
  Polynomial poly;

  std::string label() const;
};

// Partitions the ideals of a B/C/D system into strata determined by
// which marker roots (in orthonormal coordinates) the ideal contains,
// and returns the per-stratum dimension generating polynomials.
// Throws UnsupportedTypeError for other families.
std::vector<Stratum> stratify_classical(const RootSystem& rs,
                                        const EnumOptions& opts = {});

} // namespace abel

#endif
