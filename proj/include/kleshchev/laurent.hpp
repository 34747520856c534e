#pragma once

// Integer Laurent polynomials in a single variable v.

#include "kleshchev/combinatorics.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kleshchev {

class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: integers embed as constants
  LaurentPoly(const BigInt& constant);  // NOLINT
  static LaurentPoly monomial(int exponent, BigInt coeff = 1);
  static LaurentPoly from_terms(Terms terms);

  /// Exponent -> coefficient, ascending, no zero coefficients.
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coeff(int exponent) const;
  int min_degree() const;
  int max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  /// v -> v^{-1}.
  LaurentPoly bar() const;
  /// Exact quotient; throws InexactDivision when the divisor does not divide.
  LaurentPoly divided_by(const LaurentPoly& divisor) const;

  bool is_bar_symmetric() const;
  /// True when every exponent is >= 1, i.e. the value lies in vZ[v].
  bool in_positive_v_span() const;
  bool has_nonnegative_coefficients() const;
  BigInt evaluate_at_one() const;

 private:
  void prune();
  Terms terms_;
};

/// Balanced quantum integer [n] = (v^n - v^{-n}) / (v - v^{-1}); [-n] = -[n].
LaurentPoly quantum_integer(int n);
/// [n]! = [1][2]...[n]; requires n >= 0.
LaurentPoly quantum_factorial(int n);

/// Ascending exponents, e.g. "v^-1 + 2 + v", "-v^2 + 3v^-1" becomes
/// "3v^-1 - v^2". Zero prints as "0".
std::string to_string(const LaurentPoly& p);
LaurentPoly parse_laurent(std::string_view text);

}  // namespace kleshchev
