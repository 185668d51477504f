#include "abel/root.hpp"

#include <algorithm>
#include <numeric>

namespace abel {

Root::Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  bool all_zero = true;
  for (int c : coeffs_) {
    if (c < 0) {
      throw InvalidRootError("negative coefficient in root");
    }
    if (c != 0) all_zero = false;
  }
  if (coeffs_.empty() || all_zero) {
    throw InvalidRootError("root must have a nonzero coefficient");
  }
}

int Root::height() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), 0);
}

Root Root::doubled() const {
  std::vector<int> c = coeffs_;
  for (int& x : c) x *= 2;
  return Root(std::move(c));
}

std::string Root::shorthand() const {
  bool digits = std::all_of(coeffs_.begin(), coeffs_.end(),
                            [](int c) { return c <= 9; });
  std::string s;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (digits) {
      s += static_cast<char>('0' + coeffs_[i]);
    } else {
      if (i > 0) s += ',';
      s += std::to_string(coeffs_[i]);
    }
  }
  return s;
}

Root operator+(const Root& a, const Root& b) {
  if (a.size() != b.size()) {
    throw DimensionError("adding roots of different lengths");
  }
  std::vector<int> c(a.coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return Root(std::move(c));
}

bool precedes(const Root& a, const Root& b) {
  if (a.size() != b.size()) {
    throw DimensionError("comparing coefficient sequences of lengths " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
  for (int i = 0; i < a.size(); ++i) {
    if (b[i] - a[i] < 0) return false;
  }
  return true;
}

bool canonical_less(const Root& a, const Root& b) {
  const int ha = a.height();
  const int hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs() < b.coeffs();
}

} // namespace abel
