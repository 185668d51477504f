#include "abel/lie_type.hpp"

#include <cctype>

namespace abel {

int min_rank(Family family) {
  switch (family) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 3;
    case Family::E: return 6;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 1;
}

int max_rank(Family family, int max_rank_cap) {
  switch (family) {
    case Family::E: return 8;
    case Family::F: return 4;
    case Family::G: return 2;
    default: return max_rank_cap;
  }
}

LieType LieType::make(Family family, int rank, int max_rank_cap) {
  const int lo = min_rank(family);
  const int hi = max_rank(family, max_rank_cap);
  if (rank < lo || rank > hi) {
    throw RankBoundsError("rank " + std::to_string(rank) + " out of bounds [" +
                          std::to_string(lo) + ", " + std::to_string(hi) +
                          "] for family " +
                          std::string(1, static_cast<char>(family)));
  }
  return LieType{family, rank};
}

LieType LieType::parse(std::string_view text, int max_rank_cap) {
  if (text.size() < 2) {
    throw UsageError("type string too short: \"" + std::string(text) + "\"");
  }
  const char letter = text[0];
  if (letter < 'A' || letter > 'G') {
    throw UsageError("unknown family letter in \"" + std::string(text) + "\"");
  }
  int rank = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw UsageError("malformed rank in \"" + std::string(text) + "\"");
    }
    rank = rank * 10 + (text[i] - '0');
    if (rank > 10000) {
      throw RankBoundsError("rank in \"" + std::string(text) + "\" is absurd");
    }
  }
  return make(static_cast<Family>(letter), rank, max_rank_cap);
}

std::string LieType::to_string() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

} // namespace abel
