#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tetralab {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in one variable (u = e^t for spin weights, or t
/// itself for polynomial R-matrices).  Terms are kept sorted by exponent with
/// no zero coefficients, so equality is structural.
class Laurent {
 public:
  using Term = std::pair<int, BigInt>;

  Laurent() = default;
  Laurent(long long constant);  // NOLINT(google-explicit-constructor)
  static Laurent monomial(int exponent, BigInt coefficient = 1);
  static Laurent from_terms(const std::map<int, BigInt>& terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  BigInt coefficient(int exponent) const;
  int min_exponent() const;  // requires non-zero
  int max_exponent() const;

  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  bool operator==(const Laurent& other) const = default;

  /// u -> 1.
  BigInt at_one() const;
  /// Integer evaluation at an integer point (exponents must be >= 0 unless x = +-1).
  BigInt evaluate(long long x) const;
  /// u -> u^k.
  Laurent substitute_power(int k) const;
  /// u -> 1/u.
  Laurent reflect() const;

  /// "2", "u^4", "3u^-2 + u^2", ... using `var` as the variable name.
  std::string str(const std::string& var = "u") const;

 private:
  std::vector<Term> terms_;
};

}  // namespace tetralab
