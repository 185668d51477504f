#include "abel/ideal_enum.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <thread>

namespace abel {

namespace {

// Fixed-width bitset over the elements of the restricted poset.
class Bits {
public:
  explicit Bits(int n) : words_((static_cast<size_t>(n) + 63) / 64, 0) {}

  void set(int i) { words_[static_cast<size_t>(i) >> 6] |= mask(i); }
  bool test(int i) const {
    return (words_[static_cast<size_t>(i) >> 6] & mask(i)) != 0;
  }
  bool intersects(const Bits& o) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }
  // true iff every bit of `sub` is set here
  bool contains_all(const Bits& sub) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      if (sub.words_[w] & ~words_[w]) return false;
    }
    return true;
  }
  std::vector<int> to_indices(int n) const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

private:
  static std::uint64_t mask(int i) {
    return std::uint64_t{1} << (static_cast<unsigned>(i) & 63u);
  }
  std::vector<std::uint64_t> words_;
};

struct EnumContext {
  OmegaPoset omega;
  // conflicts[e]: elements d with e + d dominated by the highest root
  std::vector<Bits> conflicts;
  // upper_covers[e]: elements covering e
  std::vector<Bits> upper_covers;
};

EnumContext make_context(const RootSystem& rs) {
  EnumContext ctx{compute_omega(rs), {}, {}};
  const int n = ctx.omega.size();
  const Root& theta = rs.highest_root();
  ctx.conflicts.assign(static_cast<size_t>(n), Bits(n));
  ctx.upper_covers.assign(static_cast<size_t>(n), Bits(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Root sum = ctx.omega.elements[static_cast<size_t>(a)] +
                       ctx.omega.elements[static_cast<size_t>(b)];
      if (precedes(sum, theta)) {
        ctx.conflicts[static_cast<size_t>(a)].set(b);
        ctx.conflicts[static_cast<size_t>(b)].set(a);
      }
    }
  }
  for (const auto& [lo, hi] : ctx.omega.covers) {
    ctx.upper_covers[static_cast<size_t>(lo)].set(hi);
  }
  return ctx;
}

// Walks every upward-closed admissible subset.  Elements are decided
// in descending canonical order, so everything above the current
// element is already settled; an element may join only when all of its
// upper covers are in and no chosen element conflicts with it.
void dfs(const EnumContext& ctx, int idx, Bits& chosen, int dim,
         const std::function<void(const Bits&, int)>& emit) {
  if (idx < 0) {
    emit(chosen, dim);
    return;
  }
  dfs(ctx, idx - 1, chosen, dim, emit);
  const size_t e = static_cast<size_t>(idx);
  if (chosen.contains_all(ctx.upper_covers[e]) &&
      !chosen.intersects(ctx.conflicts[e])) {
    Bits next = chosen;
    next.set(idx);
    dfs(ctx, idx - 1, next, dim + 1, emit);
  }
}

// Seed states after the first `depth` decisions, in deterministic
// (exclude-first) order; used to fan the search out over tasks.
struct Seed {
  Bits chosen;
  int dim;
};

std::vector<Seed> expand_seeds(const EnumContext& ctx, int depth) {
  const int n = ctx.omega.size();
  std::vector<Seed> seeds{Seed{Bits(n), 0}};
  for (int idx = n - 1; idx >= n - depth; --idx) {
    std::vector<Seed> next;
    for (const Seed& s : seeds) {
      next.push_back(s);
      const size_t e = static_cast<size_t>(idx);
      if (s.chosen.contains_all(ctx.upper_covers[e]) &&
          !s.chosen.intersects(ctx.conflicts[e])) {
        Seed in = s;
        in.chosen.set(idx);
        in.dim += 1;
        next.push_back(std::move(in));
      }
    }
    seeds = std::move(next);
  }
  return seeds;
}

void check_cap(const RootSystem& rs, const EnumOptions& opts) {
  if (rs.rank() > opts.max_rank) {
    throw ResourceBoundError("rank " + std::to_string(rs.rank()) +
                             " exceeds the enumeration cap of " +
                             std::to_string(opts.max_rank));
  }
}

// Runs the full search, serial or fanned out, feeding every ideal to
// `emit`.  With parallel enabled, emit is called from worker threads
// (one task at a time per seed) and must be independently mergeable.
template <typename PerTaskState>
std::vector<PerTaskState> run_enumeration(
    const EnumContext& ctx, const EnumOptions& opts,
    const std::function<void(PerTaskState&, const Bits&, int)>& emit) {
  const int n = ctx.omega.size();
  if (!opts.parallel) {
    std::vector<PerTaskState> states(1);
    Bits empty(n);
    dfs(ctx, n - 1, empty, 0,
        [&](const Bits& b, int dim) { emit(states[0], b, dim); });
    return states;
  }
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  int depth = 0;
  while ((1 << depth) < static_cast<int>(2 * hw) && depth < n) ++depth;
  auto seeds = expand_seeds(ctx, depth);
  std::vector<PerTaskState> states(seeds.size());
  std::vector<std::future<void>> tasks;
  tasks.reserve(seeds.size());
  for (size_t s = 0; s < seeds.size(); ++s) {
    tasks.push_back(std::async(std::launch::async, [&, s] {
      Bits start = seeds[s].chosen;
      dfs(ctx, n - 1 - depth, start, seeds[s].dim,
          [&](const Bits& b, int dim) { emit(states[s], b, dim); });
    }));
  }
  for (auto& t : tasks) t.get();
  return states;
}

} // namespace

bool is_abelian_set(const RootSystem& rs, const std::vector<Root>& s) {
  for (const Root& r : s) {
    if (!rs.contains(r)) {
      throw InvalidRootError("set member " + r.shorthand() +
                             " is not a positive root of " +
                             rs.type().to_string());
    }
  }
  const Root& theta = rs.highest_root();
  for (const Root& a : s) {
    for (const Root& b : s) {
      if (precedes(a + b, theta)) return false;
    }
  }
  // upward closure within the full positive system
  for (const Root& a : s) {
    for (const Root& b : rs.positive_roots()) {
      if (precedes(a, b) &&
          std::find(s.begin(), s.end(), b) == s.end()) {
        return false;
      }
    }
  }
  return true;
}

std::vector<AbelianIdeal> enumerate_ideals(const RootSystem& rs,
                                           const EnumOptions& opts) {
  check_cap(rs, opts);
  const EnumContext ctx = make_context(rs);
  const int n = ctx.omega.size();

  using IndexList = std::vector<int>;
  std::function<void(std::vector<IndexList>&, const Bits&, int)> emit =
      [&](std::vector<IndexList>& acc, const Bits& b, int) {
        acc.push_back(b.to_indices(n));
      };
  auto states = run_enumeration<std::vector<IndexList>>(ctx, opts, emit);

  std::vector<IndexList> all;
  for (auto& st : states) {
    all.insert(all.end(), std::make_move_iterator(st.begin()),
               std::make_move_iterator(st.end()));
  }
  std::sort(all.begin(), all.end(),
            [](const IndexList& a, const IndexList& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  std::vector<AbelianIdeal> out;
  out.reserve(all.size());
  for (const IndexList& idxs : all) {
    AbelianIdeal ideal;
    ideal.roots.reserve(idxs.size());
    for (int i : idxs) ideal.roots.push_back(ctx.omega.elements[static_cast<size_t>(i)]);
    out.push_back(std::move(ideal));
  }
  return out;
}

MinimalGenerators minimal_roots(const RootSystem& rs,
                                const AbelianIdeal& ideal) {
  (void)rs;
  MinimalGenerators gens;
  for (const Root& a : ideal.roots) {
    bool minimal = true;
    for (const Root& b : ideal.roots) {
      if (!(b == a) && precedes(b, a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) gens.roots.push_back(a);
  }
  return gens;
}

AbelianIdeal ideal_from_minimal(const RootSystem& rs,
                                const MinimalGenerators& gens) {
  const Root& theta = rs.highest_root();
  for (const Root& g : gens.roots) {
    if (!rs.contains(g)) {
      throw InvalidRootError("generator " + g.shorthand() +
                             " is not a positive root of " +
                             rs.type().to_string());
    }
    if (precedes(g.doubled(), theta)) {
      throw AdmissibilityError("generator pair (" + g.shorthand() + ", " +
                               g.shorthand() + ") has a dominated sum");
    }
  }
  for (size_t i = 0; i < gens.roots.size(); ++i) {
    for (size_t j = i + 1; j < gens.roots.size(); ++j) {
      const Root& a = gens.roots[i];
      const Root& b = gens.roots[j];
      if (precedes(a, b) || precedes(b, a)) {
        throw AdmissibilityError("generators (" + a.shorthand() + ", " +
                                 b.shorthand() + ") are comparable");
      }
      if (precedes(a + b, theta)) {
        throw AdmissibilityError("generator pair (" + a.shorthand() + ", " +
                                 b.shorthand() + ") has a dominated sum");
      }
    }
  }
  AbelianIdeal ideal;
  for (const Root& b : rs.positive_roots()) {
    for (const Root& g : gens.roots) {
      if (precedes(g, b)) {
        ideal.roots.push_back(b);
        break;
      }
    }
  }
  return ideal;
}

DimensionDistribution dimension_distribution(const RootSystem& rs,
                                             const EnumOptions& opts) {
  check_cap(rs, opts);
  const EnumContext ctx = make_context(rs);
  using Counts = std::vector<long long>;
  std::function<void(Counts&, const Bits&, int)> emit =
      [](Counts& acc, const Bits&, int dim) {
        if (static_cast<int>(acc.size()) <= dim) acc.resize(static_cast<size_t>(dim) + 1, 0);
        acc[static_cast<size_t>(dim)] += 1;
      };
  auto states = run_enumeration<Counts>(ctx, opts, emit);
  Counts counts;
  for (const Counts& st : states) {
    if (st.size() > counts.size()) counts.resize(st.size(), 0);
    for (size_t i = 0; i < st.size(); ++i) counts[i] += st[i];
  }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return DimensionDistribution{std::move(counts)};
}

long long type_a_dimension(int rank, const std::vector<int>& i_seq,
                           const std::vector<int>& j_seq) {
  if (rank < 1) throw RankBoundsError("type A rank must be >= 1");
  if (i_seq.size() != j_seq.size()) {
    throw InvalidAntichainError("row-start and row-end lists differ in length");
  }
  const size_t k = i_seq.size();
  // Each (i_s, j_s) must span a valid interval inside 1..rank, and the
  // two sequences must rise strictly, which is exactly incomparability
  // of the interval roots.
  for (size_t s = 0; s < k; ++s) {
    if (i_seq[s] < 1 || j_seq[s] < i_seq[s] || j_seq[s] > rank) {
      throw InvalidAntichainError("generator " + std::to_string(s + 1) +
                                  " does not span an interval inside 1.." +
                                  std::to_string(rank));
    }
  }
  for (size_t s = 0; s + 1 < k; ++s) {
    if (i_seq[s] >= i_seq[s + 1] || j_seq[s] >= j_seq[s + 1]) {
      throw InvalidAntichainError("index sequences must be strictly increasing");
    }
  }
  long long dim = 0;
  for (size_t s = 0; s < k; ++s) {
    const long long next_j = (s + 1 < k) ? j_seq[s + 1] : rank + 1;
    dim += static_cast<long long>(i_seq[s]) * (next_j - j_seq[s]);
  }
  return dim;
}

std::string Stratum::label() const {
  std::string s = "n=" + std::to_string(n);
  if (variant != ' ') {
    s += '(';
    s += variant;
    s += ')';
  }
  return s;
}

std::vector<Stratum> stratify_classical(const RootSystem& rs,
                                        const EnumOptions& opts) {
  const Family fam = rs.type().family;
  if (fam != Family::B && fam != Family::C && fam != Family::D) {
    throw UnsupportedTypeError("stratification is defined for types B, C, D "
                               "only; got " + rs.type().to_string());
  }
  check_cap(rs, opts);
  const int r = rs.rank();
  const EnumContext ctx = make_context(rs);

  // Positions in the restricted poset of the marker roots, looked up
  // through the orthonormal-coordinate view.
  auto omega_pos = [&](const EpsilonVector& e) {
    auto root_idx = rs.index_by_epsilon(e);
    if (!root_idx) throw Error("marker root missing from the root system");
    auto it = std::find(ctx.omega.root_indices.begin(),
                        ctx.omega.root_indices.end(), *root_idx);
    if (it == ctx.omega.root_indices.end()) {
      throw Error("marker root missing from the restricted poset");
    }
    return static_cast<int>(it - ctx.omega.root_indices.begin());
  };

  struct Key {
    int n;
    char variant;
    bool operator<(const Key& o) const {
      if (n != o.n) return n < o.n;
      return variant < o.variant;
    }
  };

  std::vector<Key> keys;           // stratum order
  std::function<Key(const Bits&)> classify;

  if (fam == Family::C) {
    // markers e1+e_n for n = 1..r; membership is a prefix in n, so the
    // stratum is the largest marker present (0 when empty).
    std::vector<int> marker(static_cast<size_t>(r) + 1, -1);
    for (int n = 1; n <= r; ++n) marker[static_cast<size_t>(n)] = omega_pos(eps_sum(1, n, r));
    for (int n = 0; n <= r; ++n) keys.push_back({n, ' '});
    classify = [marker, r](const Bits& b) -> Key {
      int cls = 0;
      for (int n = r; n >= 1; --n) {
        if (b.test(marker[static_cast<size_t>(n)])) {
          cls = n;
          break;
        }
      }
      return {cls, ' '};
    };
  } else if (fam == Family::B) {
    // markers e1-e_n for n = 2..r plus e1 itself
    std::vector<int> marker(static_cast<size_t>(r) + 1, -1);
    for (int n = 2; n <= r; ++n) marker[static_cast<size_t>(n)] = omega_pos(eps_diff(1, n, r));
    const int e1 = omega_pos(eps_single(1, r));
    for (int n = 2; n <= r + 2; ++n) keys.push_back({n, ' '});
    classify = [marker, e1, r](const Bits& b) -> Key {
      if (!b.test(e1)) return {r + 2, ' '};
      for (int n = 2; n <= r; ++n) {
        if (b.test(marker[static_cast<size_t>(n)])) return {n, ' '};
      }
      return {r + 1, ' '};
    };
  } else {
    // type D: markers e1-e_n for n = 2..r-1 and the pair e1 +- e_r
    std::vector<int> marker(static_cast<size_t>(r), -1);
    for (int n = 2; n <= r - 1; ++n) marker[static_cast<size_t>(n)] = omega_pos(eps_diff(1, n, r));
    const int plus = omega_pos(eps_sum(1, r, r));
    const int minus = omega_pos(eps_diff(1, r, r));
    for (int n = 2; n <= r; ++n) keys.push_back({n, ' '});
    keys.push_back({r + 1, '+'});
    keys.push_back({r + 1, '-'});
    keys.push_back({r + 1, '0'});
    classify = [marker, plus, minus, r](const Bits& b) -> Key {
      for (int n = 2; n <= r - 1; ++n) {
        if (b.test(marker[static_cast<size_t>(n)])) return {n, ' '};
      }
      const bool p = b.test(plus);
      const bool m = b.test(minus);
      if (p && m) return {r, ' '};
      if (p) return {r + 1, '+'};
      if (m) return {r + 1, '-'};
      return {r + 1, '0'};
    };
  }

  using CountsByKey = std::map<Key, std::vector<long long>>;
  std::function<void(CountsByKey&, const Bits&, int)> emit =
      [&classify](CountsByKey& acc, const Bits& b, int dim) {
        auto& counts = acc[classify(b)];
        if (static_cast<int>(counts.size()) <= dim) {
          counts.resize(static_cast<size_t>(dim) + 1, 0);
        }
        counts[static_cast<size_t>(dim)] += 1;
      };
  auto states = run_enumeration<CountsByKey>(ctx, opts, emit);

  CountsByKey merged;
  for (const CountsByKey& st : states) {
    for (const auto& [key, counts] : st) {
      auto& acc = merged[key];
      if (counts.size() > acc.size()) acc.resize(counts.size(), 0);
      for (size_t i = 0; i < counts.size(); ++i) acc[i] += counts[i];
    }
  }

  std::vector<Stratum> out;
  for (const Key& key : keys) {
    Stratum s;
    s.n = key.n;
    s.variant = key.variant;
    auto it = merged.find(key);
    s.poly = it == merged.end() ? Polynomial() : Polynomial(it->second);
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace abel
