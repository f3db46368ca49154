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

#ifndef DESCENT_LAB_DESCENT_HPP
#define DESCENT_LAB_DESCENT_HPP

/*
  The type A descent polynomial d(I;n) = #{pi in S_n : Des pi = I}, built
  three independent ways:

    d_poly          d(I;n) = C(n,m) d(I-;m) - d(I-;n), I- = I minus its max
    d_pie           alternating sum over J subset of I of C(n; delta(J))
    d_positive_rec  insertion of n+1 into D(I;n+1), no subtraction

  Throughout, m = max(I u {0}) and d(empty;n) = 1.
*/

#include <span>
#include <string>
#include <vector>

#include "descent_lab/exactmath.hpp"

namespace descent_lab {

/// A finite set of positive integers, kept sorted.
class DescentSet {
 public:
  DescentSet() = default;
  /// Sorts and deduplicates; throws std::invalid_argument on entries < 1.
  explicit DescentSet(std::vector<int> elems);

  /// Parses "1,3,4"; the empty string is the empty set.
  static DescentSet parse(const std::string& text);

  /// Every subset of [1, max_elem], in order of increasing bitmask.
  static std::vector<DescentSet> all_subsets(int max_elem);
  /// Every set whose maximum is exactly m (m >= 1).
  static std::vector<DescentSet> all_with_max(int m);
  /// The interval {lo, lo+1, ..., hi}.
  static DescentSet interval(int lo, int hi);

  const std::vector<int>& elems() const { return elems_; }
  operator std::span<const int>() const { return elems_; }
  int max() const { return elems_.empty() ? 0 : elems_.back(); }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  bool contains(int i) const;

  std::string to_string() const;

  auto operator<=>(const DescentSet&) const = default;

 private:
  std::vector<int> elems_;
};

/// I with its maximum removed. Throws std::invalid_argument on the empty set.
DescentSet i_minus(const DescentSet& I);

/// Sets obtained by deleting n+1 from a permutation in D(I;n+1).
///   lowered[k-1]  = I_k  = {i_1..i_{k-1}, i_k - 1, ..., i_l - 1} - {0}
///   skipped[k-1]  = Î_k  = {i_1..i_{k-1}, i_{k+1} - 1, ..., i_l - 1}
///   primed        = I'   = {i_k : i_k - 1 not in I}
///   double_primed = I''  = I' - {1}
struct DerivedSets {
  std::vector<DescentSet> lowered;
  std::vector<DescentSet> skipped;
  DescentSet primed;
  DescentSet double_primed;
};

DerivedSets derived_sets(const DescentSet& I);

/// d(I;n) as a polynomial in n (degree m). Memoized; safe to call
/// concurrently.
ExactPoly d_poly(const DescentSet& I);

/// Inclusion-exclusion value at n. Throws std::invalid_argument if n <= m.
ExactInt d_pie(const DescentSet& I, long n);

/// d(I;n+1) from the subtraction-free recursion, with d_poly supplying the
/// right-hand values. Requires I nonempty and n_plus_1 > m + 1.
ExactInt d_positive_rec(const DescentSet& I, long n_plus_1);

/// Exact evaluation of the descent polynomial at any rational point.
ExactRational d_at(const DescentSet& I, const ExactRational& x);

}  // namespace descent_lab

#endif  // DESCENT_LAB_DESCENT_HPP
