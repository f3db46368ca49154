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

#ifndef DESCENT_LAB_SIGNED_HPP
#define DESCENT_LAB_SIGNED_HPP

/*
  Descent counts over the hyperoctahedral group B_n and its even-signed
  subgroup D_n (descent sets may contain 0, since b_0 = 0):

    d_B(I;n) = C(n,m) 2^(n-m)   d_B(I-;m) - d_B(I-;n)
    d_D(I;n) = C(n,m) 2^(n-m-1) d_B(I-;m) - d_D(I-;n)

  with d_B(empty;n) = d_D(empty;n) = 1 (including n = 0 for type B). The
  inclusion-exclusion closed forms are carried as A(n) 2^n + B(n).
*/

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "descent_lab/descent.hpp"
#include "descent_lab/exactmath.hpp"

namespace descent_lab {

/// A finite set of nonnegative integers, kept sorted.
class SignedDescentSet {
 public:
  SignedDescentSet() = default;
  /// Sorts and deduplicates; throws std::invalid_argument on entries < 0.
  explicit SignedDescentSet(std::vector<int> elems);
  /// I, or I u {0} when with_zero is set.
  SignedDescentSet(const DescentSet& positive, bool with_zero);

  /// Parses "0,2,3"; the empty string is the empty set.
  static SignedDescentSet parse(const std::string& text);
  /// Every subset of {0} u [max_elem].
  static std::vector<SignedDescentSet> all_subsets(int max_elem);

  const std::vector<int>& elems() const { return elems_; }
  operator std::span<const int>() const { return elems_; }
  int max() const { return elems_.empty() ? 0 : elems_.back(); }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  bool has_zero() const { return !elems_.empty() && elems_.front() == 0; }
  /// I+ = I - {0}.
  DescentSet positive_part() const;
  /// I with its maximum removed.
  SignedDescentSet minus() const;

  std::string to_string() const;

  auto operator<=>(const SignedDescentSet&) const = default;

 private:
  std::vector<int> elems_;
};

/// expo(n) 2^n + plain(n).
struct BinaryExpPoly {
  ExactPoly expo;
  ExactPoly plain;

  /// Exact value at an integer (2^n is rational for n < 0).
  ExactRational at(long n) const;
  /// 2^z taken as exp(z ln 2).
  std::complex<double> at(std::complex<double> z) const;

  bool operator==(const BinaryExpPoly&) const = default;
};

/// Recursion value; requires n > m.
ExactInt dB_value(const SignedDescentSet& I, long n);
/// Inclusion-exclusion closed form.
BinaryExpPoly dB_pie(const SignedDescentSet& I);
ExactRational dB_at(const SignedDescentSet& I, long x);
std::complex<double> dB_at(const SignedDescentSet& I, std::complex<double> x);

/// Recursion value over D_n; requires n > m and n >= 2.
ExactInt dD_value(const SignedDescentSet& I, long n);
/// Closed form for d_D. Values below n = 2 are formal extensions only.
BinaryExpPoly dD_pie(const SignedDescentSet& I);
ExactRational dD_at(const SignedDescentSet& I, long x);

struct CorollaryReport {
  bool type_b_sum = false;    // d_B(I;n) + d_B(I0;n) = 2^n d(I;n)
  bool type_d_sum = false;    // d_D(I;n) + d_D(I0;n) = 2^(n-1) d(I;n)
  bool type_d_vanish = false; // d_D(I;i) = d_D(I0;i) = 0 for i in I-
  /// d_D(I;i) + d_D(I0;i) = 0 for i in I-. Holds even where the individual
  /// values are +-1/2 (the closed form is d_B/2 +- (-1)^k/2).
  bool type_d_vanish_sum = false;
  std::string witness;
  /// Reported, not asserted: d_D(I;m) and d_D(I0;m) from the closed form.
  ExactRational d_at_max;
  ExactRational d0_at_max;

  bool all_pass() const { return type_b_sum && type_d_sum && type_d_vanish; }
};

/// Checks the 2^n and 2^(n-1) identities at n with I0 = I u {0}, plus the
/// type D vanishing on I-. Requires I nonempty and n > m (n >= 2).
CorollaryReport corollary_checks(const DescentSet& I, long n);

}  // namespace descent_lab

#endif  // DESCENT_LAB_SIGNED_HPP
