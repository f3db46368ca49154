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

#ifndef DESCENT_LAB_PATTERNS_HPP
#define DESCENT_LAB_PATTERNS_HPP

/*
  Consecutive patterns. For a set P of patterns of common length k,
  Pi(I;n) is the set of pi in S_n whose consecutive occurrences of P start
  exactly at the indices in I, and av_P(n) = #Pi(empty;n). Descents are the
  case P = {21}; peaks (shifted by one) are P = {132, 231}.

  When P is nonoverlapping the counts satisfy

    #Pi(I;n) = C(n,m) av(n-m) #Pi(I-;m) - #Pi(I-;n)
               - sum_{i=1}^{k-2} #Pi(I- u {m-i};n)
*/

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "descent_lab/descent.hpp"
#include "descent_lab/enumerate.hpp"
#include "descent_lab/exactmath.hpp"

namespace descent_lab {

class PatternSet {
 public:
  /// Throws std::invalid_argument when empty, when lengths differ, when
  /// k < 2 or on duplicates.
  explicit PatternSet(std::vector<Perm> patterns);
  /// "132,231". Single-digit entries only, so k <= 9.
  static PatternSet parse(const std::string& text);

  const std::vector<Perm>& patterns() const { return patterns_; }
  operator std::span<const Perm>() const { return patterns_; }
  int length() const { return patterns_.front().size(); }
  bool nonoverlapping() const { return nonoverlapping_; }
  std::string to_string() const;

  bool operator==(const PatternSet& o) const { return patterns_ == o.patterns_; }

 private:
  std::vector<Perm> patterns_;
  bool nonoverlapping_ = false;
};

/// No length-l prefix of any sigma is order isomorphic to a length-l suffix
/// of any tau (sigma = tau included), 1 < l < k.
bool is_nonoverlapping(std::span<const Perm> patterns);

/// Brute-force av_P(n). Memoized; av(0) = 1.
ExactInt av_count(const PatternSet& P, int n, unsigned threads = 1);

/// Brute-force #Pi(I;n).
ExactInt pi_count(const PatternSet& P, const DescentSet& I, int n, unsigned threads = 1);

/// #Pi(I;n) by the recursion above, with brute-force av values. Throws
/// std::invalid_argument for an overlapping P.
ExactInt pi_count_rec(const PatternSet& P, const DescentSet& I, int n, unsigned threads = 1);

/// #{pi in S_n : Peak pi = I}, by dynamic programming over relative ranks.
ExactInt peak_count(const DescentSet& I, int n);

/// Realized by some permutation, decided by brute force at n = m + 1.
bool peak_admissible(const DescentSet& I);

enum class PeakOutcome { Pass, Fail, Inadmissible };

struct PeakCheck {
  DescentSet set;
  PeakOutcome outcome = PeakOutcome::Fail;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<ExactInt> counts;     // #P(I;n) for n = n_lo..n_hi
  std::vector<ExactInt> quotients;  // counts / 2^(n - #I - 1)
  ExactPoly poly;                   // interpolant of the quotients
  std::string detail;
};

const char* peak_outcome_name(PeakOutcome o);

/// Checks 2^(n-#I-1) | #P(I;n) on [n_lo, n_hi] and that a single polynomial
/// of degree <= m fits every quotient. Defaults to n = m+1 .. 2m+3.
/// Throws std::invalid_argument on a range with n_lo <= m.
PeakCheck peak_poly_check(const DescentSet& I, int n_lo = 0, int n_hi = 0);

}  // namespace descent_lab

#endif  // DESCENT_LAB_PATTERNS_HPP
