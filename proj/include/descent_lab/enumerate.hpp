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

#ifndef DESCENT_LAB_ENUMERATE_HPP
#define DESCENT_LAB_ENUMERATE_HPP

/*
  Brute-force ground truth. Permutations are generated in lexicographic
  order (std::next_permutation); signed permutations are a permutation times
  a sign mask, and the even-signed subgroup D_n keeps the masks of even
  popcount. Counting streams through the group and never materializes it.

  Parallel runs split the work on the first entry of the permutation and sum
  integer histograms in a fixed order, so results do not depend on the
  thread count.
*/

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "descent_lab/exactmath.hpp"

namespace descent_lab {

/// Sorted set of indices, e.g. a descent set.
using IndexSet = std::vector<int>;

/// A permutation of [n] in one-line notation.
class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless entries are a permutation of 1..n.
  explicit Perm(std::vector<int> entries);

  static Perm identity(int n);
  /// Parses one-line notation with single digits, e.g. "2413".
  static Perm parse(const std::string& word);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  operator std::span<const int>() const { return entries_; }

  std::string to_string() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> entries_;
};

enum class Group { A, B, D };

const char* group_name(Group g);

/// Largest n accepted by the exhaustive counters for each group.
int max_enumerable_n(Group g);

/// {i : p_i > p_{i+1}}, 1-based, for any integer sequence.
IndexSet descent_set(std::span<const int> p);

/// {i : p_{i-1} < p_i > p_{i+1}}, 1-based.
IndexSet peak_set(std::span<const int> p);

/// Descent set of a signed permutation with the convention b_0 = 0, so 0 is
/// a descent iff b_1 < 0.
IndexSet signed_descent_set(std::span<const int> b);

/// True iff a and b have the same length and the same relative order.
bool order_isomorphic(std::span<const int> a, std::span<const int> b);

/// Indices i (1-based) at which p_i ... p_{i+k-1} is order isomorphic to
/// one of the patterns. All patterns must share a length k.
IndexSet occurrence_set(std::span<const int> p, std::span<const Perm> patterns);

/// Calls f on every permutation of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(std::span<const int>)>& f);

/// Calls f on every element of B_n (or D_n) as a signed one-line word.
void for_each_signed_permutation(int n, Group g,
                                 const std::function<void(std::span<const int>)>& f);

/// Bitmask encoding of an index set: bit i for index i.
std::uint64_t index_mask(std::span<const int> set);
IndexSet mask_to_set(std::uint64_t mask);

/// Histogram over descent-set masks for the whole group, indexed by
/// index_mask(Des). Size 2^n.
std::vector<std::uint64_t> descent_histogram(int n, Group g, unsigned threads = 1);

/// Number of group elements with descent set exactly I. For type A the set
/// must lie in [n-1]; for B and D it may also contain 0. Throws
/// std::invalid_argument when n is outside [1, max_enumerable_n(g)] (n >= 2
/// for D) or n <= max(I).
ExactInt count_by_descents(std::span<const int> I, int n, Group g, unsigned threads = 1);

/// Every permutation of [n] accepted by the predicate, in lexicographic
/// order. Throws std::length_error once more than `cap` are collected.
std::vector<Perm> collect_permutations(int n,
                                       const std::function<bool(std::span<const int>)>& keep,
                                       std::size_t cap = 1'000'000);

/// Histogram of the map p -> occurrence_set(p, patterns) over S_n, keyed by
/// the occurrence mask.
std::vector<std::uint64_t> occurrence_histogram(int n, std::span<const Perm> patterns,
                                                unsigned threads = 1);

/// Histogram of peak-set masks over S_n.
std::vector<std::uint64_t> peak_histogram(int n, unsigned threads = 1);

}  // namespace descent_lab

#endif  // DESCENT_LAB_ENUMERATE_HPP
