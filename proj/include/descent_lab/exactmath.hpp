/*
   Copyright 2026 The descent-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DESCENT_LAB_EXACTMATH_HPP
#define DESCENT_LAB_EXACTMATH_HPP

/*
  Exact arithmetic substrate: arbitrary precision integers and rationals
  (GMP backed), dense univariate polynomials over Q, binomial and multinomial
  coefficients, and conversions between the monomial basis and the Newton
  bases {C(n - c, k)} and {n(n-1)...(n-k+1)}.

  All types are values; every function here is pure.
*/

#include <gmpxx.h>

#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace descent_lab {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// Thrown when a result that is guaranteed by theory fails to hold, which
/// can only mean a defect in this library (e.g. a non-integral coefficient
/// where integrality is a theorem).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A composition of some n: a nonempty list of positive parts.
class Composition {
 public:
  explicit Composition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long sum() const;
  std::size_t size() const { return parts_.size(); }
  long operator[](std::size_t i) const { return parts_[i]; }

  bool operator==(const Composition&) const = default;

 private:
  std::vector<long> parts_;
};

ExactInt factorial(long n);

/// C(n, k) with the polynomial extension n(n-1)...(n-k+1)/k! for n < 0.
/// Zero when k < 0, or when n >= 0 and k > n.
ExactInt binomial(const ExactInt& n, const ExactInt& k);
ExactInt binomial(long n, long k);

/// n! / (d_1! ... d_r!). Throws std::invalid_argument unless the parts sum
/// to n.
ExactInt multinomial(long n, const Composition& delta);

/// Consecutive differences of 0 < i_1 < ... < i_k < n. The set need not be
/// sorted. Throws std::invalid_argument if n <= max(set) or the set holds a
/// nonpositive entry.
Composition difference_composition(std::span<const int> set, long n);

/// Dense polynomial with rational coefficients, coefficient i multiplying
/// x^i. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree kZeroDegree.
class ExactPoly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  ExactPoly() = default;
  explicit ExactPoly(std::vector<ExactRational> coeffs);

  static ExactPoly constant(const ExactRational& c);
  /// The polynomial x - root.
  static ExactPoly linear_factor(const ExactRational& root);

  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i; zero past the degree.
  ExactRational coeff(std::size_t i) const;
  const std::vector<ExactRational>& coeffs() const { return coeffs_; }
  const ExactRational& leading() const;

  ExactRational operator()(const ExactRational& x) const;

  ExactPoly operator-() const;
  ExactPoly& operator+=(const ExactPoly& rhs);
  ExactPoly& operator-=(const ExactPoly& rhs);
  ExactPoly& operator*=(const ExactRational& s);
  friend ExactPoly operator+(ExactPoly lhs, const ExactPoly& rhs) { return lhs += rhs; }
  friend ExactPoly operator-(ExactPoly lhs, const ExactPoly& rhs) { return lhs -= rhs; }
  friend ExactPoly operator*(ExactPoly p, const ExactRational& s) { return p *= s; }
  friend ExactPoly operator*(const ExactRational& s, ExactPoly p) { return p *= s; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);

  /// Synthetic division by (x - r): returns the quotient and stores p(r) in
  /// *remainder.
  ExactPoly divide_linear(const ExactRational& r, ExactRational* remainder) const;

  bool operator==(const ExactPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  /// Human readable form, highest power first, e.g. "1/2*n^2 - 1/2*n - 1".
  std::string to_string(const std::string& var = "n") const;

 private:
  void trim();

  std::vector<ExactRational> coeffs_;
};

/// C(n, m) as a polynomial in n, i.e. n(n-1)...(n-m+1)/m!.
ExactPoly binom_poly(int m);

/// C(n - center, k) as a polynomial in n.
ExactPoly shifted_binom_poly(int k, long center);

/// Coefficients of a polynomial in the basis C(n - center, k), k = 0, 1, ...
struct BinomExpansion {
  long center = 0;
  std::vector<ExactRational> coeffs;

  bool operator==(const BinomExpansion&) const = default;
};

BinomExpansion to_binom_basis(const ExactPoly& p, long center);
ExactPoly from_binom_basis(const BinomExpansion& e);

/// Coefficients c_k with p(n) = sum_k c_k n(n-1)...(n-k+1).
std::vector<ExactRational> to_falling_factorial_basis(const ExactPoly& p);
ExactPoly from_falling_factorial_basis(std::span<const ExactRational> coeffs);

/// Converts to an integer, throwing InternalError if q is not integral.
ExactInt require_integer(const ExactRational& q, const std::string& what);

}  // namespace descent_lab

#endif  // DESCENT_LAB_EXACTMATH_HPP
