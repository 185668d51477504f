#ifndef ABEL_POLYNOMIAL_HPP
#define ABEL_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "abel/errors.hpp"

namespace abel {

// Checked 64-bit arithmetic; throws ArithmeticCapacityError instead of
// wrapping.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

/// Dense univariate polynomial with exact 64-bit integer coefficients.
/// The leading coefficient is nonzero except for the zero polynomial,
/// which has an empty coefficient vector and degree -1.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<long long> coeffs);

  static Polynomial constant(long long c);
  static Polynomial monomial(int degree, long long c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  long long coeff(int i) const;
  const std::vector<long long>& coeffs() const { return coeffs_; }

  long long eval(long long x) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void normalize();
  std::vector<long long> coeffs_;
};

} // namespace abel

#endif
