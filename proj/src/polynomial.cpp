#include "abel/polynomial.hpp"

namespace abel {

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ArithmeticCapacityError("integer addition overflow");
  }
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ArithmeticCapacityError("integer multiplication overflow");
  }
  return out;
}

Polynomial::Polynomial(std::vector<long long> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(long long c) {
  return Polynomial(std::vector<long long>{c});
}

Polynomial Polynomial::monomial(int degree, long long c) {
  std::vector<long long> v(static_cast<size_t>(degree) + 1, 0);
  v.back() = c;
  return Polynomial(std::move(v));
}

long long Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

long long Polynomial::eval(long long x) const {
  long long acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, x), *it);
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += coeffs_[i] > 0 ? " + " : " - ";
    else if (coeffs_[i] < 0) s += "-";
    const long long mag = coeffs_[i] > 0 ? coeffs_[i] : -coeffs_[i];
    if (mag != 1 || i == 0) s += std::to_string(mag);
    if (i >= 1) {
      s += "t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<long long> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    long long x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
    long long y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
    out[i] = checked_add(x, y);
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<long long> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Polynomial(std::move(out));
}

} // namespace abel
