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

#include "descent_lab/coeffs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "descent_lab/enumerate.hpp"
#include "descent_lab/parallel.hpp"

namespace descent_lab {

namespace {

std::vector<ExactInt> integer_coeffs(const BinomExpansion& e, std::size_t length,
                                     const std::string& what) {
  std::vector<ExactInt> out(length, 0);
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    if (k >= length) throw InternalError(what + ": expansion longer than degree + 1");
    out[k] = require_integer(e.coeffs[k], what);
  }
  return out;
}

// For pi in S_{2m}: if Des pi has maximum m and the large values among the
// first m entries are exactly m+1..m+k for some k >= 1, returns k. Else 0.
int witness_index(std::span<const int> p, int m) {
  std::uint64_t large = 0;
  for (int i = 0; i < m; ++i) {
    const int v = p[static_cast<std::size_t>(i)];
    if (v > m) large |= std::uint64_t{1} << (v - m - 1);
  }
  if (large == 0 || (large & (large + 1)) != 0) return 0;
  return std::popcount(large);
}

}  // namespace

std::vector<ExactInt> a_coeffs(const DescentSet& I) {
  const BinomExpansion e = to_binom_basis(d_poly(I), I.max());
  return integer_coeffs(e, static_cast<std::size_t>(I.max()) + 1, "a_coeffs");
}

ExactInt a_k_combinatorial(const DescentSet& I, int k) {
  const int m = I.max();
  if (k < 1 || k > m) throw std::invalid_argument("a_k_combinatorial needs 1 <= k <= m");
  unsigned long count = 0;
  const IndexSet target = I.elems();
  for_each_permutation(2 * m, [&](std::span<const int> p) {
    if (witness_index(p, m) == k && descent_set(p) == target) ++count;
  });
  return ExactInt(count);
}

std::vector<std::vector<int>> a_k_witnesses(const DescentSet& I, int k) {
  const int m = I.max();
  if (k < 1 || k > m) throw std::invalid_argument("a_k_witnesses needs 1 <= k <= m");
  const IndexSet target = I.elems();
  std::vector<std::vector<int>> out;
  for (const Perm& p : collect_permutations(2 * m, [&](std::span<const int> q) {
         return witness_index(q, m) == k && descent_set(q) == target;
       })) {
    out.push_back(p.entries());
  }
  return out;
}

std::map<DescentSet, std::vector<ExactInt>> a_combinatorial_table(int m, unsigned threads) {
  if (m < 1 || m > 5) throw std::invalid_argument("a_combinatorial_table supports 1 <= m <= 5");
  const int n = 2 * m;
  const std::size_t sets = std::size_t{1} << (m - 1);
  // counts[(lower mask) * m + (k - 1)], lower mask = descents below m.
  auto partial = parallel_map(static_cast<std::size_t>(n), threads, [&](std::size_t first) {
    std::vector<unsigned long> counts(sets * static_cast<std::size_t>(m), 0);
    std::vector<int> perm{static_cast<int>(first) + 1};
    for (int v = 1; v <= n; ++v) {
      if (v != static_cast<int>(first) + 1) perm.push_back(v);
    }
    do {
      const int k = witness_index(perm, m);
      if (k == 0) continue;
      std::uint64_t des = 0;
      for (int i = 0; i + 1 < n; ++i) {
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i) + 1]) {
          des |= std::uint64_t{1} << i;  // bit i-1 <-> descent at i
        }
      }
      // Exactly m must be the largest descent.
      if (!((des >> (m - 1)) & 1) || (des >> m) != 0) continue;
      const std::uint64_t lower = des & ((std::uint64_t{1} << (m - 1)) - 1);
      ++counts[lower * static_cast<std::size_t>(m) + static_cast<std::size_t>(k - 1)];
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return counts;
  });

  std::map<DescentSet, std::vector<ExactInt>> table;
  for (std::size_t lower = 0; lower < sets; ++lower) {
    std::vector<int> elems;
    for (int b = 0; b < m - 1; ++b) {
      if ((lower >> b) & 1) elems.push_back(b + 1);
    }
    elems.push_back(m);
    std::vector<ExactInt> a(static_cast<std::size_t>(m), 0);
    for (const auto& counts : partial) {
      for (int k = 0; k < m; ++k) {
        a[static_cast<std::size_t>(k)] +=
            counts[lower * static_cast<std::size_t>(m) + static_cast<std::size_t>(k)];
      }
    }
    table.emplace(DescentSet(std::move(elems)), std::move(a));
  }
  return table;
}

ExactInt a_interval_formula(int ell, int m, int k) {
  if (ell < 1 || ell > m) throw std::invalid_argument("a_interval_formula needs 1 <= ell <= m");
  if (k < 1 || k > m) throw std::invalid_argument("a_interval_formula needs 1 <= k <= m");
  ExactInt total = 0;
  for (int i = 1; i <= m - ell + 1; ++i) {
    total += binomial(k - 1, i - 1) * binomial(m, ell - k + i - 1) *
             binomial(m - ell + k - i, k - 1);
  }
  return total;
}

std::vector<ExactInt> c_coeffs(const DescentSet& I) {
  const int m = I.max();
  const BinomExpansion e = to_binom_basis(d_poly(I), -1);
  std::vector<ExactInt> c = integer_coeffs(e, static_cast<std::size_t>(m) + 1, "c_coeffs");
  for (int k = 0; k <= m; ++k) {
    if ((m - k) % 2 != 0) c[static_cast<std::size_t>(k)] = -c[static_cast<std::size_t>(k)];
  }
  return c;
}

bool is_log_concave(std::span<const ExactInt> seq) {
  for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
    if (seq[k - 1] * seq[k + 1] > seq[k] * seq[k]) return false;
  }
  return true;
}

CoeffReport coeff_report(const DescentSet& I) {
  CoeffReport r;
  r.set = I;
  r.a = a_coeffs(I);
  r.c = c_coeffs(I);
  if (r.a.size() > 1) {
    r.a_log_concave = is_log_concave(std::span<const ExactInt>(r.a).subspan(1));
  }
  r.c_all_nonneg = std::all_of(r.c.begin(), r.c.end(), [](const ExactInt& v) { return v >= 0; });
  return r;
}

std::vector<Violation> coeff_violations(const CoeffReport& report) {
  std::vector<Violation> out;
  const auto& a = report.a;
  if (!report.set.empty()) {
    if (a[0] != 0) out.push_back({report.set, "a0-zero", 0, "a_0 = " + a[0].get_str()});
    for (std::size_t k = 1; k < a.size(); ++k) {
      if (a[k] <= 0) {
        out.push_back({report.set, "a-positive", static_cast<int>(k), "a_k = " + a[k].get_str()});
      }
    }
  }
  for (std::size_t k = 2; k + 1 < a.size(); ++k) {
    if (a[k - 1] * a[k + 1] > a[k] * a[k]) {
      out.push_back({report.set, "log-concave", static_cast<int>(k),
                     a[k - 1].get_str() + "*" + a[k + 1].get_str() + " > " + a[k].get_str() + "^2"});
    }
  }
  for (std::size_t k = 0; k < report.c.size(); ++k) {
    if (report.c[k] < 0) {
      out.push_back({report.set, "c-nonneg", static_cast<int>(k),
                     "c_k = " + report.c[k].get_str()});
    }
  }
  return out;
}

}  // namespace descent_lab
