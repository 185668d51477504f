#include "abel/omega_poset.hpp"

#include <algorithm>

namespace abel {

bool sum_not_preceding_theta(const Root& a, const Root& b,
                             const RootSystem& rs) {
  return !precedes(a + b, rs.highest_root());
}

OmegaPoset compute_omega(const RootSystem& rs) {
  OmegaPoset p;
  p.lie_type = rs.type();
  const Root& theta = rs.highest_root();
  const auto& all = rs.positive_roots();
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    const Root& a = all[static_cast<size_t>(i)];
    if (!precedes(a.doubled(), theta)) {
      p.elements.push_back(a);
      p.root_indices.push_back(i);
    }
  }

  const int n = p.size();
  // strictly-less matrix on the restricted poset
  std::vector<std::vector<bool>> less(static_cast<size_t>(n),
                                      std::vector<bool>(static_cast<size_t>(n), false));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && precedes(p.elements[static_cast<size_t>(a)],
                             p.elements[static_cast<size_t>(b)])) {
        less[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
      }
    }
  }
  // transitive reduction by the triple scan; the posets involved stay
  // small enough that nothing smarter pays off
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!less[static_cast<size_t>(a)][static_cast<size_t>(b)]) continue;
      bool covered = true;
      for (int c = 0; c < n; ++c) {
        if (less[static_cast<size_t>(a)][static_cast<size_t>(c)] &&
            less[static_cast<size_t>(c)][static_cast<size_t>(b)]) {
          covered = false;
          break;
        }
      }
      if (covered) p.covers.emplace_back(a, b);
    }
  }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

std::string hasse_to_dot(const OmegaPoset& p) {
  std::string dot;
  dot += "digraph omega_" + p.lie_type.to_string() + " {\n";
  dot += "  rankdir=TB;\n";
  dot += "  node [shape=box];\n";
  for (const Root& e : p.elements) {
    dot += "  \"" + e.shorthand() + "\";\n";
  }
  for (const auto& [lo, hi] : p.covers) {
    dot += "  \"" + p.elements[static_cast<size_t>(lo)].shorthand() +
           "\" -> \"" + p.elements[static_cast<size_t>(hi)].shorthand() +
           "\";\n";
  }
  dot += "}\n";
  return dot;
}

} // namespace abel
