#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "abel/genfun.hpp"
#include "abel/ideal_enum.hpp"
#include "test_util.hpp"

using namespace abel;
using abel_test::supported_types;

namespace {

Root root(std::vector<int> c) { return Root(std::move(c)); }

long long pow2(int r) { return 1LL << r; }

std::set<std::string> shorthand_set(const std::vector<Root>& roots) {
  std::set<std::string> out;
  for (const Root& r : roots) out.insert(r.shorthand());
  return out;
}

// Subsets of the positive system that are closed under adding any
// positive root and have no internal sum landing back in the system;
// the check works directly with root sums, independent of the
// optimized search.
std::vector<std::set<int>> brute_force_ideals(const RootSystem& rs) {
  const auto& roots = rs.positive_roots();
  const int n = static_cast<int>(roots.size());
  REQUIRE(n <= 20);
  // sum_index[a][b] = position of roots[a] + roots[b], or -1
  std::vector<std::vector<int>> sum_index(static_cast<size_t>(n),
                                          std::vector<int>(static_cast<size_t>(n), -1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto idx = rs.index_of(roots[static_cast<size_t>(a)] + roots[static_cast<size_t>(b)]);
      if (idx) sum_index[static_cast<size_t>(a)][static_cast<size_t>(b)] = *idx;
    }
  }
  std::vector<std::set<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!(mask & (1u << a))) continue;
      for (int b = 0; b < n && ok; ++b) {
        const int s = sum_index[static_cast<size_t>(a)][static_cast<size_t>(b)];
        if (s < 0) continue;
        // adding any positive root must stay inside the subset
        if (!(mask & (1u << s))) ok = false;
        // no two members may sum to a root
        if ((mask & (1u << b)) != 0u) ok = false;
      }
    }
    if (!ok) continue;
    std::set<int> ideal;
    for (int a = 0; a < n; ++a) {
      if (mask & (1u << a)) ideal.insert(a);
    }
    out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<std::set<int>> enumerated_as_index_sets(const RootSystem& rs) {
  std::vector<std::set<int>> out;
  for (const AbelianIdeal& ideal : enumerate_ideals(rs)) {
    std::set<int> s;
    for (const Root& r : ideal.roots) s.insert(*rs.index_of(r));
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace

TEST_CASE("abelian set predicate on the smallest types") {
  const RootSystem a2 = build_root_system(LieType::parse("A2"));
  const Root a1({1, 0});
  const Root a2r({0, 1});
  const Root theta({1, 1});

  CHECK(is_abelian_set(a2, {}));
  CHECK(is_abelian_set(a2, {theta}));
  CHECK(is_abelian_set(a2, {a1, theta}));
  CHECK(is_abelian_set(a2, {a2r, theta}));
  CHECK(!is_abelian_set(a2, {a1}));                // not upward closed
  CHECK(!is_abelian_set(a2, {a1, a2r, theta}));    // two members sum to theta

  int valid = 0;
  const std::vector<Root> all = a2.positive_roots();
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<Root> subset;
    for (int i = 0; i < 3; ++i) {
      if (mask & (1u << i)) subset.push_back(all[static_cast<size_t>(i)]);
    }
    if (is_abelian_set(a2, subset)) ++valid;
  }
  CHECK(valid == 4);

  CHECK_THROWS_AS(is_abelian_set(a2, {root({2, 0})}), InvalidRootError);

  for (const LieType& t : supported_types(6)) {
    const RootSystem rs = build_root_system(t);
    CHECK(is_abelian_set(rs, {rs.highest_root()}));
  }
}

TEST_CASE("G2 has exactly four ideals, forming a chain of chains") {
  const RootSystem rs = build_root_system(LieType::parse("G2"));
  const auto ideals = enumerate_ideals(rs);
  REQUIRE(ideals.size() == 4);
  CHECK(shorthand_set(ideals[0].roots) == std::set<std::string>{});
  CHECK(shorthand_set(ideals[1].roots) == std::set<std::string>{"23"});
  CHECK(shorthand_set(ideals[2].roots) == std::set<std::string>{"13", "23"});
  CHECK(shorthand_set(ideals[3].roots) ==
        std::set<std::string>{"12", "13", "23"});
}

TEST_CASE("A1 has the empty ideal and the full one") {
  const RootSystem rs = build_root_system(LieType::parse("A1"));
  const auto ideals = enumerate_ideals(rs);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].roots.empty());
  CHECK(ideals[1].roots == std::vector<Root>{root({1})});
}

TEST_CASE("ideal counts are exactly a power of two") {
  for (const LieType& t : supported_types(8)) {
    CAPTURE(t.to_string());
    const RootSystem rs = build_root_system(t);
    CHECK(static_cast<long long>(enumerate_ideals(rs).size()) == pow2(t.rank));
  }
}

TEST_CASE("enumeration order is by dimension then root list") {
  for (const char* name : {"C3", "F4", "A4"}) {
    const RootSystem rs = build_root_system(LieType::parse(name));
    const auto ideals = enumerate_ideals(rs);
    auto key = [&](const AbelianIdeal& ideal) {
      std::vector<int> idx;
      for (const Root& r : ideal.roots) idx.push_back(*rs.index_of(r));
      return idx;
    };
    for (size_t i = 0; i + 1 < ideals.size(); ++i) {
      const auto a = key(ideals[i]);
      const auto b = key(ideals[i + 1]);
      const bool ordered =
          a.size() < b.size() || (a.size() == b.size() && a < b);
      CHECK(ordered);
      // roots listed canonically within each ideal
      CHECK(std::is_sorted(a.begin(), a.end()));
    }
  }
}

TEST_CASE("every enumerated ideal satisfies the defining properties") {
  for (const LieType& t : supported_types(6)) {
    CAPTURE(t.to_string());
    const RootSystem rs = build_root_system(t);
    const OmegaPoset omega = compute_omega(rs);
    const std::set<std::string> omega_names = shorthand_set(omega.elements);
    for (const AbelianIdeal& ideal : enumerate_ideals(rs)) {
      CHECK(is_abelian_set(rs, ideal.roots));
      for (const Root& r : ideal.roots) {
        CHECK(omega_names.count(r.shorthand()) == 1);
      }
    }
  }
}

TEST_CASE("brute force over all subsets agrees with the optimized search") {
  for (const char* name : {"A1", "A2", "A3", "B2", "C2", "B3", "C3", "D3", "G2"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(LieType::parse(name));
    auto brute = brute_force_ideals(rs);
    auto fast = enumerated_as_index_sets(rs);
    std::sort(brute.begin(), brute.end());
    std::sort(fast.begin(), fast.end());
    CHECK(brute == fast);
  }
}

TEST_CASE("minimal generators and upward closure are mutually inverse") {
  const RootSystem g2 = build_root_system(LieType::parse("G2"));
  const auto g2_ideals = enumerate_ideals(g2);
  // the full chain is generated by its bottom element
  CHECK(shorthand_set(minimal_roots(g2, g2_ideals[3]).roots) ==
        std::set<std::string>{"12"});
  MinimalGenerators bottom{{root({1, 2})}};
  CHECK(shorthand_set(ideal_from_minimal(g2, bottom).roots) ==
        std::set<std::string>{"12", "13", "23"});
  CHECK(minimal_roots(g2, AbelianIdeal{}).roots.empty());
  CHECK(ideal_from_minimal(g2, MinimalGenerators{}).roots.empty());

  for (const LieType& t : supported_types(6)) {
    CAPTURE(t.to_string());
    const RootSystem rs = build_root_system(t);
    for (const AbelianIdeal& ideal : enumerate_ideals(rs)) {
      const MinimalGenerators gens = minimal_roots(rs, ideal);
      // generators form an antichain
      for (const Root& a : gens.roots) {
        for (const Root& b : gens.roots) {
          if (!(a == b)) {
            CHECK(!precedes(a, b));
          }
        }
      }
      const AbelianIdeal back = ideal_from_minimal(rs, gens);
      CHECK(back == ideal);
      CHECK(is_abelian_set(rs, back.roots));
      CHECK(minimal_roots(rs, back) == gens);
    }
  }
}

TEST_CASE("inadmissible generators are rejected with the pair named") {
  const RootSystem a2 = build_root_system(LieType::parse("A2"));
  // two simple roots summing exactly to the highest root
  try {
    ideal_from_minimal(a2, MinimalGenerators{{root({1, 0}), root({0, 1})}});
    FAIL("expected AdmissibilityError");
  } catch (const AdmissibilityError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("10") != std::string::npos);
    CHECK(msg.find("01") != std::string::npos);
  }
  // comparable generators
  CHECK_THROWS_AS(
      ideal_from_minimal(a2, MinimalGenerators{{root({1, 0}), root({1, 1})}}),
      AdmissibilityError);
  // a generator whose double is dominated
  const RootSystem c2 = build_root_system(LieType::parse("C2"));
  CHECK_THROWS_AS(
      ideal_from_minimal(c2, MinimalGenerators{{root({1, 0})}}),
      AdmissibilityError);
  // a generator outside the positive system
  CHECK_THROWS_AS(
      ideal_from_minimal(a2, MinimalGenerators{{root({2, 0})}}),
      InvalidRootError);
}

TEST_CASE("type A ideal dimensions from index sequences") {
  CHECK(type_a_dimension(4, {1}, {4}) == 1);
  CHECK(type_a_dimension(7, {1}, {7}) == 1);
  CHECK(type_a_dimension(2, {1}, {1}) == 2);
  CHECK(type_a_dimension(3, {1, 2}, {1, 2}) == 5);
  CHECK(type_a_dimension(3, {}, {}) == 0);

  CHECK_THROWS_AS(type_a_dimension(3, {1, 2}, {1}), InvalidAntichainError);
  CHECK_THROWS_AS(type_a_dimension(3, {2, 1}, {2, 3}), InvalidAntichainError);
  CHECK_THROWS_AS(type_a_dimension(3, {1, 2}, {3, 2}), InvalidAntichainError);
  CHECK_THROWS_AS(type_a_dimension(3, {2}, {1}), InvalidAntichainError);
  CHECK_THROWS_AS(type_a_dimension(3, {1}, {4}), InvalidAntichainError);
  CHECK_THROWS_AS(type_a_dimension(3, {0}, {2}), InvalidAntichainError);

  // against a direct union of interval up-sets, for every interval
  // antichain of small rank
  for (int r = 1; r <= 4; ++r) {
    CAPTURE(r);
    std::vector<std::pair<int, int>> intervals;
    for (int i = 1; i <= r; ++i) {
      for (int j = i; j <= r; ++j) intervals.emplace_back(i, j);
    }
    const size_t n = intervals.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> i_seq;
      std::vector<int> j_seq;
      for (size_t b = 0; b < n; ++b) {
        if (mask & (1u << b)) {
          i_seq.push_back(intervals[b].first);
          j_seq.push_back(intervals[b].second);
        }
      }
      bool antichain = true;
      for (size_t s = 0; s + 1 < i_seq.size(); ++s) {
        if (i_seq[s] >= i_seq[s + 1] || j_seq[s] >= j_seq[s + 1]) {
          antichain = false;
        }
      }
      if (!antichain) continue;
      std::set<std::pair<int, int>> closure;
      for (size_t s = 0; s < i_seq.size(); ++s) {
        for (int i = 1; i <= i_seq[s]; ++i) {
          for (int j = j_seq[s]; j <= r; ++j) closure.insert({i, j});
        }
      }
      CHECK(type_a_dimension(r, i_seq, j_seq) ==
            static_cast<long long>(closure.size()));
    }
  }

  // cross-check against the actual closure size, reading the index
  // sequences off the minimal generators of every type A ideal
  for (int r = 1; r <= 5; ++r) {
    CAPTURE(r);
    const RootSystem rs = build_root_system(LieType::make(Family::A, r));
    for (const AbelianIdeal& ideal : enumerate_ideals(rs)) {
      const MinimalGenerators gens = minimal_roots(rs, ideal);
      std::vector<std::pair<int, int>> spans;
      for (const Root& g : gens.roots) {
        int first = -1;
        int last = -1;
        for (int k = 0; k < r; ++k) {
          if (g[k] == 1) {
            if (first < 0) first = k + 1;
            last = k + 1;
          }
        }
        // each generator is a contiguous run of unit coefficients
        CHECK(g.height() == last - first + 1);
        spans.emplace_back(first, last);
      }
      std::sort(spans.begin(), spans.end());
      std::vector<int> i_seq;
      std::vector<int> j_seq;
      for (const auto& [i, j] : spans) {
        i_seq.push_back(i);
        j_seq.push_back(j);
      }
      // starts and ends both rise strictly, and all spans overlap
      for (size_t s = 0; s + 1 < i_seq.size(); ++s) {
        CHECK(i_seq[s] < i_seq[s + 1]);
        CHECK(j_seq[s] < j_seq[s + 1]);
      }
      if (!i_seq.empty()) {
        CHECK(i_seq.back() <= j_seq.front());
      }
      CHECK(type_a_dimension(r, i_seq, j_seq) == ideal.dimension());
    }
  }
}

TEST_CASE("dimension distributions match the stored tables") {
  auto dist = [](const char* name) {
    return dimension_distribution(build_root_system(LieType::parse(name)));
  };
  CHECK(dist("G2").counts == std::vector<long long>{1, 1, 1, 1});
  CHECK(dist("C2").counts == std::vector<long long>{1, 1, 1, 1});
  CHECK(dist("A2").counts == std::vector<long long>{1, 1, 2});
  CHECK(dist("F4").counts ==
        std::vector<long long>{1, 1, 1, 1, 1, 2, 2, 3, 3, 1});
  CHECK(dist("E6").counts ==
        std::vector<long long>{1, 1, 1, 1, 2, 3, 3, 4, 6, 7, 8, 10, 7, 4, 2, 2,
                               2});
  for (const LieType& t : supported_types(8)) {
    CAPTURE(t.to_string());
    const DimensionDistribution d =
        dimension_distribution(build_root_system(t));
    CHECK(d.counts[0] == 1);
    CHECK(d.counts.back() != 0);
    CHECK(d.total() == pow2(t.rank));
  }
}

TEST_CASE("excluded pairs never appear together in an ideal") {
  struct Case {
    const char* type;
    std::vector<std::pair<std::string, std::string>> pairs;
  };
  const std::vector<Case> cases = {
      {"F4", {{"1220", "1122"}}},
      {"E6",
       {{"111001", "012211"},
        {"001111", "122101"},
        {"111101", "012111"},
        {"011111", "112101"},
        {"012101", "111111"}}},
      {"E7",
       {{"1111110", "1232102"},
        {"1111111", "1232101"},
        {"1221001", "1122211"},
        {"1121111", "1222101"},
        {"1122101", "1221111"},
        {"1221101", "1122111"}}},
      {"E8",
       {{"01222211", "23432112"},
        {"11222211", "13432112"},
        {"12222211", "12432112"},
        {"12322211", "12332112"},
        {"12321112", "12333211"},
        {"12332111", "12322212"},
        {"12322112", "12332211"}}},
  };
  for (const Case& c : cases) {
    CAPTURE(c.type);
    const RootSystem rs = build_root_system(LieType::parse(c.type));
    // each such pair sums exactly to the highest root
    for (const auto& [x, y] : c.pairs) {
      Root rx({1});
      Root ry({1});
      bool fx = false;
      bool fy = false;
      for (const Root& r : rs.positive_roots()) {
        if (r.shorthand() == x) {
          rx = r;
          fx = true;
        }
        if (r.shorthand() == y) {
          ry = r;
          fy = true;
        }
      }
      REQUIRE(fx);
      REQUIRE(fy);
      CHECK(rx + ry == rs.highest_root());
    }
    for (const AbelianIdeal& ideal : enumerate_ideals(rs)) {
      const std::set<std::string> names = shorthand_set(ideal.roots);
      for (const auto& [x, y] : c.pairs) {
        CHECK(!(names.count(x) && names.count(y)));
      }
    }
  }

  // type B: the second-row elements cannot join the first-row chain
  for (int r = 3; r <= 6; ++r) {
    CAPTURE(r);
    const RootSystem rs = build_root_system(LieType::make(Family::B, r));
    auto named = [&](const EpsilonVector& e) {
      return rs.positive_roots()[static_cast<size_t>(*rs.index_by_epsilon(e))]
          .shorthand();
    };
    const std::string first = named(eps_diff(1, 2, r));
    const std::string second = named(eps_sum(2, 3, r));
    for (const AbelianIdeal& ideal : enumerate_ideals(rs)) {
      const std::set<std::string> names = shorthand_set(ideal.roots);
      CHECK(!(names.count(first) && names.count(second)));
    }
  }
}

TEST_CASE("classical stratification by marker membership") {
  auto monomial_times = [](int d, const Polynomial& p) {
    return Polynomial::monomial(d) * p;
  };

  for (int r = 2; r <= 6; ++r) {
    CAPTURE(r);
    const RootSystem rs = build_root_system(LieType::make(Family::C, r));
    const auto strata = stratify_classical(rs);
    REQUIRE(static_cast<int>(strata.size()) == r + 1);
    Polynomial sum;
    for (int n = 0; n <= r; ++n) {
      CHECK(strata[static_cast<size_t>(n)].n == n);
      CHECK(strata[static_cast<size_t>(n)].poly ==
            monomial_times(n, genfun_type_c(n - 1)));
      sum = sum + strata[static_cast<size_t>(n)].poly;
    }
    CHECK(sum == to_polynomial(dimension_distribution(rs)));
  }

  for (int r = 2; r <= 6; ++r) {
    CAPTURE(r);
    const RootSystem rs = build_root_system(LieType::make(Family::B, r));
    const auto strata = stratify_classical(rs);
    REQUIRE(static_cast<int>(strata.size()) == r + 1);
    Polynomial sum;
    for (const Stratum& s : strata) sum = sum + s.poly;
    CHECK(strata[0].n == 2);
    CHECK(strata[0].poly == Polynomial::monomial(2 * r - 1));
    for (int n = 3; n <= r + 1; ++n) {
      CHECK(strata[static_cast<size_t>(n - 2)].poly ==
            monomial_times(2 * r - n + 1, genfun_type_c(n - 3)));
    }
    CHECK(strata.back().n == r + 2);
    CHECK(strata.back().poly == genfun_type_c(r - 1));
    CHECK(sum == to_polynomial(dimension_distribution(rs)));
  }

  for (int r = 3; r <= 6; ++r) {
    CAPTURE(r);
    const RootSystem rs = build_root_system(LieType::make(Family::D, r));
    const auto strata = stratify_classical(rs);
    REQUIRE(static_cast<int>(strata.size()) == r + 2);
    Polynomial sum;
    for (const Stratum& s : strata) sum = sum + s.poly;
    CHECK(strata[0].n == 2);
    CHECK(strata[0].poly == Polynomial::monomial(2 * r - 2));
    for (int n = 3; n <= r; ++n) {
      CHECK(strata[static_cast<size_t>(n - 2)].poly ==
            monomial_times(2 * r - n, genfun_type_c(n - 3)));
    }
    const Stratum& plus = strata[static_cast<size_t>(r - 1)];
    const Stratum& minus = strata[static_cast<size_t>(r)];
    const Stratum& zero = strata[static_cast<size_t>(r + 1)];
    CHECK(plus.variant == '+');
    CHECK(minus.variant == '-');
    CHECK(zero.variant == '0');
    CHECK(plus.poly == monomial_times(r - 1, genfun_type_c(r - 2)));
    CHECK(minus.poly == plus.poly);
    CHECK(zero.poly == genfun_type_c(r - 2));
    CHECK(zero.label() == "n=" + std::to_string(r + 1) + "(0)");
    CHECK(sum == to_polynomial(dimension_distribution(rs)));
  }

  CHECK_THROWS_AS(
      stratify_classical(build_root_system(LieType::parse("A3"))),
      UnsupportedTypeError);
  CHECK_THROWS_AS(
      stratify_classical(build_root_system(LieType::parse("G2"))),
      UnsupportedTypeError);
}

TEST_CASE("parallel enumeration reproduces the serial output exactly") {
  for (const char* name : {"C6", "B5", "D5", "E6"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(LieType::parse(name));
    EnumOptions serial;
    EnumOptions parallel;
    parallel.parallel = true;
    CHECK(enumerate_ideals(rs, serial) == enumerate_ideals(rs, parallel));
    CHECK(dimension_distribution(rs, serial) ==
          dimension_distribution(rs, parallel));
  }
  const RootSystem b5 = build_root_system(LieType::parse("B5"));
  EnumOptions parallel;
  parallel.parallel = true;
  const auto serial_strata = stratify_classical(b5);
  const auto parallel_strata = stratify_classical(b5, parallel);
  REQUIRE(serial_strata.size() == parallel_strata.size());
  for (size_t i = 0; i < serial_strata.size(); ++i) {
    CHECK(serial_strata[i].poly == parallel_strata[i].poly);
  }
}

TEST_CASE("enumeration refuses ranks above the cap") {
  const RootSystem rs = build_root_system(LieType::parse("C5"));
  EnumOptions opts;
  opts.max_rank = 4;
  CHECK_THROWS_AS(enumerate_ideals(rs, opts), ResourceBoundError);
  CHECK_THROWS_AS(dimension_distribution(rs, opts), ResourceBoundError);
  CHECK_THROWS_AS(stratify_classical(rs, opts), ResourceBoundError);
  opts.max_rank = 5;
  CHECK_NOTHROW(dimension_distribution(rs, opts));
}
