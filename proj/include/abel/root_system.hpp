#ifndef ABEL_ROOT_SYSTEM_HPP
#define ABEL_ROOT_SYSTEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abel/lie_type.hpp"
#include "abel/root.hpp"

namespace abel {

using IntMatrix = std::vector<std::vector<int>>;

/// Coordinates of a root in the orthonormal-basis realization, stored
/// doubled so the F4 half-integer roots stay exact.
struct EpsilonVector {
  std::vector<int> twice;

  std::string to_string() const;
  friend bool operator==(const EpsilonVector&, const EpsilonVector&) = default;
  friend bool operator<(const EpsilonVector& a, const EpsilonVector& b) {
    return a.twice < b.twice;
  }
};

// Convenience constructors for the common coordinate shapes.
EpsilonVector eps_diff(int i, int j, int dim);     // e_i - e_j
EpsilonVector eps_sum(int i, int j, int dim);      // e_i + e_j (i == j gives 2e_i)
EpsilonVector eps_single(int i, int dim);          // e_i

// Cartan matrix under the labeling that reproduces the explicit root
// lists of all nine families: classical chains with the B/C/D end-node
// conventions, E chains with the last simple root attached to the
// third node, F4 with the two long roots first.  Entry (i, j) is the
// pairing of the i-th simple root with the j-th simple coroot.
IntMatrix cartan_matrix(const LieType& type);

/// Positive root system of a simple Lie algebra: simple roots, the
/// full positive system in canonical (height, lexicographic) order,
/// the highest root, and for A/B/C/D/F4 the orthonormal-coordinate
/// view of every root.
///
/// Immutable after construction; safe to share across threads.
class RootSystem {
public:
  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // alpha_1 .. alpha_r in index order.
  const std::vector<Root>& simple_roots() const { return simple_roots_; }

  // Canonical order: height ascending, then lexicographic.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  const Root& highest_root() const { return positive_roots_[theta_index_]; }
  int highest_root_index() const { return theta_index_; }

  const IntMatrix& cartan() const { return cartan_; }

  bool contains(const Root& r) const { return index_of(r).has_value(); }
  std::optional<int> index_of(const Root& r) const;

  bool has_epsilon_view() const { return !epsilon_.empty(); }
  // Indexed like positive_roots(); only valid when has_epsilon_view().
  const EpsilonVector& epsilon_of(int index) const {
    return epsilon_[static_cast<size_t>(index)];
  }
  std::optional<int> index_by_epsilon(const EpsilonVector& e) const;

private:
  friend RootSystem build_root_system(const LieType& type);

  LieType type_;
  IntMatrix cartan_;
  std::vector<Root> simple_roots_;
  std::vector<Root> positive_roots_;
  int theta_index_ = -1;
  std::map<std::vector<int>, int> index_;
  std::vector<EpsilonVector> epsilon_;
  std::map<EpsilonVector, int> epsilon_index_;
};

// Generates the positive system by root-string closure over the Cartan
// matrix and fixes the canonical order.
RootSystem build_root_system(const LieType& type);

} // namespace abel

#endif
