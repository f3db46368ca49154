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

#ifndef DESCENT_LAB_COEFFS_HPP
#define DESCENT_LAB_COEFFS_HPP

/*
  Coefficients of d(I;n) in two shifted binomial bases:

    d(I;n) = sum_k a_k(I) C(n - m, k)                 (a_0 = 0, a_k > 0)
    d(I;n) = sum_k (-1)^(m-k) c_k(I) C(n + 1, k)

  a_k(I) also counts pi in D(I;2m) with
  {pi_1..pi_m} n [m+1, 2m] = [m+1, m+k].
*/

#include <map>
#include <span>
#include <string>
#include <vector>

#include "descent_lab/descent.hpp"
#include "descent_lab/exactmath.hpp"

namespace descent_lab {

/// Integer coefficients a_0..a_m at center m. Throws InternalError if a
/// coefficient is not integral.
std::vector<ExactInt> a_coeffs(const DescentSet& I);

/// Brute-force count over S_{2m}; requires 1 <= k <= m.
ExactInt a_k_combinatorial(const DescentSet& I, int k);

/// The permutations counted by a_k_combinatorial, in lexicographic order.
std::vector<std::vector<int>> a_k_witnesses(const DescentSet& I, int k);

/// a_1..a_m for every I with max(I) = m from one pass over S_{2m}.
/// Entry k-1 of each vector is a_k.
std::map<DescentSet, std::vector<ExactInt>> a_combinatorial_table(int m, unsigned threads = 1);

/// Closed form for I = {ell, ell+1, ..., m}:
///   sum_{i=1}^{m-ell+1} C(k-1, i-1) C(m, ell-k+i-1) C(m-ell+k-i, k-1)
/// Requires 1 <= ell <= m and 1 <= k <= m.
ExactInt a_interval_formula(int ell, int m, int k);

/// c_0..c_m with the sign convention above.
std::vector<ExactInt> c_coeffs(const DescentSet& I);

/// seq[k-1] * seq[k+1] <= seq[k]^2 for every interior k.
bool is_log_concave(std::span<const ExactInt> seq);

struct CoeffReport {
  DescentSet set;
  std::vector<ExactInt> a;
  std::vector<ExactInt> c;
  bool a_log_concave = true;  // tested on a_1..a_m
  bool c_all_nonneg = true;
};

CoeffReport coeff_report(const DescentSet& I);

/// One failed conjecture instance; scans emit these instead of aborting.
struct Violation {
  DescentSet set;
  std::string check;
  int index = -1;
  std::string detail;
};

/// Violations of a_k log-concavity, a_k positivity, and c_k >= 0 in a report.
std::vector<Violation> coeff_violations(const CoeffReport& report);

}  // namespace descent_lab

#endif  // DESCENT_LAB_COEFFS_HPP
