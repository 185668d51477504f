#include "abel/root_system.hpp"

#include <algorithm>
#include <set>

namespace abel {

namespace {

// r x r matrix with 2 on the diagonal.
IntMatrix diagonal_two(int r) {
  IntMatrix m(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(r), 0));
  for (int i = 0; i < r; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
  return m;
}

void link_simple(IntMatrix& m, int i, int j) {
  // simply laced edge between nodes i and j (0-based)
  m[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
  m[static_cast<size_t>(j)][static_cast<size_t>(i)] = -1;
}

} // namespace

IntMatrix cartan_matrix(const LieType& type) {
  const int r = type.rank;
  IntMatrix m = diagonal_two(r);
  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) link_simple(m, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < r; ++i) link_simple(m, i, i + 1);
      // alpha_r is the short end node: the string of alpha_r through
      // alpha_{r-1} has length 2.
      m[static_cast<size_t>(r - 2)][static_cast<size_t>(r - 1)] = -2;
      m[static_cast<size_t>(r - 1)][static_cast<size_t>(r - 2)] = -1;
      break;
    case Family::C:
      for (int i = 0; i + 1 < r; ++i) link_simple(m, i, i + 1);
      // alpha_r is the long end node.
      m[static_cast<size_t>(r - 2)][static_cast<size_t>(r - 1)] = -1;
      m[static_cast<size_t>(r - 1)][static_cast<size_t>(r - 2)] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) link_simple(m, i, i + 1);
      link_simple(m, r - 3, r - 1);
      break;
    case Family::E:
      // Chain alpha_1 .. alpha_{r-1} with alpha_r attached to alpha_3.
      for (int i = 0; i + 2 < r; ++i) link_simple(m, i, i + 1);
      link_simple(m, 2, r - 1);
      break;
    case Family::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
      link_simple(m, 0, 1);
      m[1][2] = -2;
      m[2][1] = -1;
      link_simple(m, 2, 3);
      break;
    case Family::G:
      // alpha_1 long, alpha_2 short: alpha_1 + 3 alpha_2 is a root.
      m[0][1] = -3;
      m[1][0] = -1;
      break;
  }
  return m;
}

namespace {

// Pairing of beta with the i-th simple coroot (0-based i).
int coroot_pairing(const std::vector<int>& beta, const IntMatrix& cartan,
                   int i) {
  int s = 0;
  for (size_t j = 0; j < beta.size(); ++j) {
    s += beta[j] * cartan[j][static_cast<size_t>(i)];
  }
  return s;
}

// Positive roots as coefficient vectors, by root-string closure.
std::vector<std::vector<int>> close_positive_roots(const IntMatrix& cartan) {
  const int r = static_cast<int>(cartan.size());
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < r; ++i) {
    std::vector<int> unit(static_cast<size_t>(r), 0);
    unit[static_cast<size_t>(i)] = 1;
    known.insert(unit);
    frontier.push_back(std::move(unit));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < r; ++i) {
        // p = how far the string extends downward from beta
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[static_cast<size_t>(i)] -= 1;
          if (down[static_cast<size_t>(i)] < 0 || !known.count(down)) break;
          ++p;
        }
        const int q = p - coroot_pairing(beta, cartan, i);
        if (q > 0) {
          std::vector<int> up = beta;
          up[static_cast<size_t>(i)] += 1;
          if (known.insert(up).second) next.push_back(std::move(up));
        }
      }
    }
    frontier = std::move(next);
  }
  return {known.begin(), known.end()};
}

// Orthonormal-coordinate forms of the simple roots, doubled.
std::vector<std::vector<int>> simple_epsilon_forms(const LieType& type) {
  const int r = type.rank;
  std::vector<std::vector<int>> eps;
  auto zero = [](int dim) { return std::vector<int>(static_cast<size_t>(dim), 0); };
  switch (type.family) {
    case Family::A:
      for (int i = 0; i < r; ++i) {
        auto v = zero(r + 1);
        v[static_cast<size_t>(i)] = 2;
        v[static_cast<size_t>(i + 1)] = -2;
        eps.push_back(std::move(v));
      }
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (int i = 0; i + 1 < r; ++i) {
        auto v = zero(r);
        v[static_cast<size_t>(i)] = 2;
        v[static_cast<size_t>(i + 1)] = -2;
        eps.push_back(std::move(v));
      }
      {
        auto v = zero(r);
        if (type.family == Family::B) {
          v[static_cast<size_t>(r - 1)] = 2; // e_r
        } else if (type.family == Family::C) {
          v[static_cast<size_t>(r - 1)] = 4; // 2 e_r
        } else {
          v[static_cast<size_t>(r - 2)] = 2; // e_{r-1} + e_r
          v[static_cast<size_t>(r - 1)] = 2;
        }
        eps.push_back(std::move(v));
      }
      break;
    case Family::F:
      eps.push_back({0, 2, -2, 0});  // e2 - e3
      eps.push_back({0, 0, 2, -2});  // e3 - e4
      eps.push_back({0, 0, 0, 2});   // e4
      eps.push_back({1, -1, -1, -1}); // (e1 - e2 - e3 - e4) / 2
      break;
    case Family::E:
    case Family::G:
      break; // no coordinate view
  }
  return eps;
}

} // namespace

std::string EpsilonVector::to_string() const {
  bool all_even = true;
  for (int c : twice) {
    if (c % 2 != 0) {
      all_even = false;
      break;
    }
  }
  std::string body;
  const int div = all_even ? 2 : 1;
  for (size_t i = 0; i < twice.size(); ++i) {
    const int c = twice[i] / div;
    if (c == 0) continue;
    if (c > 0 && !body.empty()) body += '+';
    if (c == -1) {
      body += '-';
    } else if (c != 1) {
      body += std::to_string(c);
    }
    body += 'e';
    body += std::to_string(i + 1);
  }
  if (body.empty()) body = "0";
  return all_even ? body : "(" + body + ")/2";
}

EpsilonVector eps_diff(int i, int j, int dim) {
  std::vector<int> v(static_cast<size_t>(dim), 0);
  v[static_cast<size_t>(i - 1)] += 2;
  v[static_cast<size_t>(j - 1)] -= 2;
  return EpsilonVector{std::move(v)};
}

EpsilonVector eps_sum(int i, int j, int dim) {
  std::vector<int> v(static_cast<size_t>(dim), 0);
  v[static_cast<size_t>(i - 1)] += 2;
  v[static_cast<size_t>(j - 1)] += 2;
  return EpsilonVector{std::move(v)};
}

EpsilonVector eps_single(int i, int dim) {
  std::vector<int> v(static_cast<size_t>(dim), 0);
  v[static_cast<size_t>(i - 1)] = 2;
  return EpsilonVector{std::move(v)};
}

std::optional<int> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r.coeffs());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootSystem::index_by_epsilon(const EpsilonVector& e) const {
  auto it = epsilon_index_.find(e);
  if (it == epsilon_index_.end()) return std::nullopt;
  return it->second;
}

RootSystem build_root_system(const LieType& type) {
  RootSystem rs;
  rs.type_ = LieType::make(type.family, type.rank);
  rs.cartan_ = cartan_matrix(rs.type_);

  auto vectors = close_positive_roots(rs.cartan_);
  rs.positive_roots_.reserve(vectors.size());
  for (auto& v : vectors) rs.positive_roots_.emplace_back(std::move(v));
  std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
            canonical_less);

  const int r = type.rank;
  for (int i = 0; i < static_cast<int>(rs.positive_roots_.size()); ++i) {
    rs.index_[rs.positive_roots_[static_cast<size_t>(i)].coeffs()] = i;
  }
  for (int i = 0; i < r; ++i) {
    std::vector<int> unit(static_cast<size_t>(r), 0);
    unit[static_cast<size_t>(i)] = 1;
    rs.simple_roots_.emplace_back(std::move(unit));
  }
  // The highest root is the unique root of maximal height; canonical
  // order places it last.
  rs.theta_index_ = static_cast<int>(rs.positive_roots_.size()) - 1;

  const auto simple_eps = simple_epsilon_forms(type);
  if (!simple_eps.empty()) {
    const size_t dim = simple_eps.front().size();
    for (int k = 0; k < static_cast<int>(rs.positive_roots_.size()); ++k) {
      const Root& root = rs.positive_roots_[static_cast<size_t>(k)];
      std::vector<int> acc(dim, 0);
      for (int i = 0; i < r; ++i) {
        const int c = root[i];
        if (c == 0) continue;
        for (size_t d = 0; d < dim; ++d) {
          acc[d] += c * simple_eps[static_cast<size_t>(i)][d];
        }
      }
      EpsilonVector ev{std::move(acc)};
      rs.epsilon_index_[ev] = k;
      rs.epsilon_.push_back(std::move(ev));
    }
  }
  return rs;
}

} // namespace abel
