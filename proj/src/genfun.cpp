#include "abel/genfun.hpp"

#include <algorithm>

namespace abel {

namespace {

// Counts of partitions into exactly `parts` parts bounded by
// `max_part`, for every total at once (index = total).
std::vector<long long> exact_partition_row(int parts, int max_part) {
  const int width = parts * max_part;
  std::vector<std::vector<long long>> table(
      static_cast<size_t>(parts) + 1,
      std::vector<long long>(static_cast<size_t>(width) + 1, 0));
  table[0][0] = 1;
  for (int k = 1; k <= max_part; ++k) {
    for (int a = 1; a <= parts; ++a) {
      for (int b = k; b <= width; ++b) {
        table[static_cast<size_t>(a)][static_cast<size_t>(b)] = checked_add(
            table[static_cast<size_t>(a)][static_cast<size_t>(b)],
            table[static_cast<size_t>(a - 1)][static_cast<size_t>(b - k)]);
      }
    }
  }
  return table[static_cast<size_t>(parts)];
}

} // namespace

long long restricted_partition(int parts, int max_part, int total) {
  if (parts < 1 || max_part < 1 || total < 1) {
    throw Error("restricted_partition arguments must be >= 1");
  }
  if (total < parts || total > static_cast<long long>(parts) * max_part) {
    return 0;
  }
  // table[a][b] = partitions of b into exactly a parts drawn from the
  // values admitted so far; admitting part value k multiplies the
  // generating function by 1/(1 - s t^k), which the in-place ascending
  // update below performs.
  std::vector<std::vector<long long>> table(
      static_cast<size_t>(parts) + 1,
      std::vector<long long>(static_cast<size_t>(total) + 1, 0));
  table[0][0] = 1;
  for (int k = 1; k <= max_part; ++k) {
    for (int a = 1; a <= parts; ++a) {
      for (int b = k; b <= total; ++b) {
        table[static_cast<size_t>(a)][static_cast<size_t>(b)] = checked_add(
            table[static_cast<size_t>(a)][static_cast<size_t>(b)],
            table[static_cast<size_t>(a - 1)][static_cast<size_t>(b - k)]);
      }
    }
  }
  return table[static_cast<size_t>(parts)][static_cast<size_t>(total)];
}

long long type_a_count(int rank, int m) {
  if (rank < 1) throw RankBoundsError("type A rank must be >= 1");
  if (m < 1) throw Error("dimension must be >= 1");
  long long total = 0;
  for (int i = 1; i <= rank; ++i) {
    total = checked_add(total, restricted_partition(i, rank + 1 - i, m));
  }
  return total;
}

Polynomial genfun_type_c(int rank) {
  if (rank < -1) throw RankBoundsError("type C generating polynomial needs rank >= -1");
  if (rank > kClosedFormRankCap) {
    throw RankBoundsError("rank exceeds the closed-form cap of " +
                          std::to_string(kClosedFormRankCap));
  }
  Polynomial p = Polynomial::constant(1);
  for (int i = 1; i <= rank; ++i) {
    p = p * (Polynomial::constant(1) + Polynomial::monomial(i));
  }
  return p;
}

Polynomial genfun_type_b(int rank) {
  if (rank < 2) throw RankBoundsError("type B generating polynomial needs rank >= 2");
  if (rank > kClosedFormRankCap) {
    throw RankBoundsError("rank exceeds the closed-form cap of " +
                          std::to_string(kClosedFormRankCap));
  }
  Polynomial p = Polynomial::monomial(2 * rank - 1);
  for (int k = 0; k <= rank - 2; ++k) {
    p = p + Polynomial::monomial(2 * rank - k - 2) * genfun_type_c(k);
  }
  return p + genfun_type_c(rank - 1);
}

Polynomial genfun_type_d(int rank) {
  if (rank < 3) throw RankBoundsError("type D generating polynomial needs rank >= 3");
  if (rank > kClosedFormRankCap) {
    throw RankBoundsError("rank exceeds the closed-form cap of " +
                          std::to_string(kClosedFormRankCap));
  }
  Polynomial p = Polynomial::monomial(2 * rank - 2);
  for (int k = 0; k <= rank - 2; ++k) {
    p = p + Polynomial::monomial(2 * rank - k - 3) * genfun_type_c(k);
  }
  return p + genfun_type_c(rank - 1);
}

DimensionDistribution exceptional_table(const LieType& type) {
  switch (type.family) {
    case Family::G:
      return {{1, 1, 1, 1}};
    case Family::F:
      return {{1, 1, 1, 1, 1, 2, 2, 3, 3, 1}};
    case Family::E:
      if (type.rank == 6) {
        return {{1, 1, 1, 1, 2, 3, 3, 4, 6, 7, 8, 10, 7, 4, 2, 2, 2}};
      }
      if (type.rank == 7) {
        return {{1, 1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 8,
                 10, 11, 13, 15, 11, 7, 5, 3, 3, 1, 1, 1, 1, 1}};
      }
      return {{1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3,
               4, 5, 5, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15,
               17, 18, 20, 22, 17, 12, 8, 5, 3, 1, 1}};
    default:
      throw UnsupportedTypeError("no stored table for classical type " +
                                 type.to_string());
  }
}

DimensionDistribution closed_form_distribution(const LieType& type) {
  switch (type.family) {
    case Family::A: {
      const int r = type.rank;
      // largest ideal dimension: the deepest i-by-(r+1-i) box
      const int max_dim = (r + 1) * (r + 1) / 4;
      std::vector<long long> counts(static_cast<size_t>(max_dim) + 1, 0);
      counts[0] = 1;
      for (int i = 1; i <= r; ++i) {
        const auto row = exact_partition_row(i, r + 1 - i);
        for (size_t m = 1; m < row.size(); ++m) {
          counts[m] = checked_add(counts[m], row[m]);
        }
      }
      while (!counts.empty() && counts.back() == 0) counts.pop_back();
      return DimensionDistribution{std::move(counts)};
    }
    case Family::B:
      return distribution_from_polynomial(genfun_type_b(type.rank));
    case Family::C:
      return distribution_from_polynomial(genfun_type_c(type.rank));
    case Family::D:
      return distribution_from_polynomial(genfun_type_d(type.rank));
    default:
      return exceptional_table(type);
  }
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

VerificationReport build_report(const LieType& type,
                                const DimensionDistribution& enumerated,
                                const DimensionDistribution& closed_form) {
  VerificationReport report;
  report.type = type;
  report.enumerated = enumerated;
  report.closed_form = closed_form;

  long long expected = 1;
  for (int i = 0; i < type.rank; ++i) expected = checked_mul(expected, 2);

  {
    CheckResult c{"distribution", enumerated == closed_form, ""};
    if (!c.pass) {
      c.detail = "enumerated " + to_polynomial(enumerated).to_string() +
                 " vs closed form " + to_polynomial(closed_form).to_string();
    }
    report.checks.push_back(std::move(c));
  }
  {
    const long long t = enumerated.total();
    CheckResult c{"peterson_enumerated", t == expected,
                  t == expected ? "" : "total " + std::to_string(t)};
    report.checks.push_back(std::move(c));
  }
  {
    const long long t = to_polynomial(closed_form).eval(1);
    CheckResult c{"peterson_closed_form", t == expected,
                  t == expected ? "" : "value at 1 is " + std::to_string(t)};
    report.checks.push_back(std::move(c));
  }
  if (type.family == Family::C) {
    const Polynomial lhs = genfun_type_c(type.rank);
    const Polynomial rhs =
        (Polynomial::constant(1) + Polynomial::monomial(type.rank)) *
        genfun_type_c(type.rank - 1);
    report.checks.push_back({"c_recurrence", lhs == rhs, ""});
  }
  if ((type.family == Family::B || type.family == Family::D) &&
      type.rank >= 3) {
    const int r = type.rank;
    const Polynomial lhs = genfun_type_b(r);
    const Polynomial rhs =
        Polynomial::monomial(1) * genfun_type_d(r) +
        (Polynomial::constant(1) + Polynomial::monomial(1, -1)) *
            genfun_type_c(r - 1);
    report.checks.push_back({"bd_identity", lhs == rhs, ""});
  }
  return report;
}

VerificationReport verify_type(const LieType& type, const EnumOptions& opts) {
  const RootSystem rs = build_root_system(type);
  return build_report(type, dimension_distribution(rs, opts),
                      closed_form_distribution(type));
}

} // namespace abel
