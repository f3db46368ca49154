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

#include "descent_lab/patterns.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace descent_lab {

namespace {

void require_enumerable(int n) {
  if (n < 0 || n > max_enumerable_n(Group::A)) {
    throw std::invalid_argument("n = " + std::to_string(n) + " is outside [0, " +
                                std::to_string(max_enumerable_n(Group::A)) + "]");
  }
}

// Histograms are shared between pi_count calls on the same (P, n).
const std::vector<std::uint64_t>& cached_histogram(const PatternSet& P, int n, unsigned threads) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, std::vector<std::uint64_t>> cache;
  const auto key = std::make_pair(P.to_string(), n);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto h = occurrence_histogram(n, P, threads);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(h)).first->second;
}

using RecMemo = std::map<std::pair<DescentSet, int>, ExactInt>;

ExactInt rec(const PatternSet& P, const DescentSet& I, int n, unsigned threads, RecMemo& memo) {
  if (I.empty()) return av_count(P, n, threads);
  const int k = P.length();
  const int m = I.max();
  if (n < m + k - 1) return 0;
  const auto& e = I.elems();
  for (std::size_t j = 1; j < e.size(); ++j) {
    // Two occurrences closer than k - 1 would overlap in 2..k-1 entries.
    if (e[j] - e[j - 1] <= k - 2) return 0;
  }
  const auto key = std::make_pair(I, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const DescentSet lower = i_minus(I);
  ExactInt total = binomial(n, m) * av_count(P, n - m, threads) * rec(P, lower, m, threads, memo) -
                   rec(P, lower, n, threads, memo);
  for (int i = 1; i <= k - 2; ++i) {
    if (m - i < 1) break;
    std::vector<int> with = lower.elems();
    with.push_back(m - i);
    total -= rec(P, DescentSet(std::move(with)), n, threads, memo);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

PatternSet::PatternSet(std::vector<Perm> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw std::invalid_argument("pattern set is empty");
  const int k = patterns_.front().size();
  if (k < 2) throw std::invalid_argument("patterns must have length >= 2");
  for (const Perm& p : patterns_) {
    if (p.size() != k) throw std::invalid_argument("patterns must share a length");
  }
  std::sort(patterns_.begin(), patterns_.end());
  if (std::adjacent_find(patterns_.begin(), patterns_.end()) != patterns_.end()) {
    throw std::invalid_argument("duplicate pattern");
  }
  nonoverlapping_ = is_nonoverlapping(patterns_);
}

PatternSet PatternSet::parse(const std::string& text) {
  std::vector<Perm> out;
  std::stringstream ss(text);
  std::string word;
  while (std::getline(ss, word, ',')) {
    word.erase(0, word.find_first_not_of(" \t"));
    word.erase(word.find_last_not_of(" \t") + 1);
    out.push_back(Perm::parse(word));
  }
  return PatternSet(std::move(out));
}

std::string PatternSet::to_string() const {
  std::string s;
  for (const Perm& p : patterns_) {
    if (!s.empty()) s += ",";
    s += p.to_string();
  }
  return s;
}

bool is_nonoverlapping(std::span<const Perm> patterns) {
  for (const Perm& sigma : patterns) {
    for (const Perm& tau : patterns) {
      const std::span<const int> s = sigma;
      const std::span<const int> t = tau;
      const int k = static_cast<int>(s.size());
      if (static_cast<int>(t.size()) != k) return false;
      for (int l = 2; l < k; ++l) {
        if (order_isomorphic(s.first(static_cast<std::size_t>(l)),
                             t.last(static_cast<std::size_t>(l)))) {
          return false;
        }
      }
    }
  }
  return true;
}

ExactInt av_count(const PatternSet& P, int n, unsigned threads) {
  require_enumerable(n);
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, ExactInt> memo;
  const auto key = std::make_pair(P.to_string(), n);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const ExactInt value(cached_histogram(P, n, threads)[0]);
  std::lock_guard lock(mutex);
  memo.emplace(key, value);
  return value;
}

ExactInt pi_count(const PatternSet& P, const DescentSet& I, int n, unsigned threads) {
  require_enumerable(n);
  if (I.max() > n) return 0;
  return ExactInt(cached_histogram(P, n, threads)[index_mask(I)]);
}

ExactInt pi_count_rec(const PatternSet& P, const DescentSet& I, int n, unsigned threads) {
  if (!P.nonoverlapping()) {
    throw std::invalid_argument("pattern set " + P.to_string() + " is overlapping");
  }
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  RecMemo memo;
  return rec(P, I, n, threads, memo);
}

ExactInt peak_count(const DescentSet& I, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) return I.empty() ? 1 : 0;
  if (I.max() >= n || I.contains(1)) return 0;
  // f[a][j]: prefixes of length len whose last entry has relative rank j
  // (0-based); a = 1 when the last step was an ascent.
  std::vector<std::vector<ExactInt>> f(2, std::vector<ExactInt>(1, 0));
  f[0][0] = 1;
  for (int len = 1; len < n; ++len) {
    const std::size_t size = static_cast<std::size_t>(len) + 1;
    std::vector<std::vector<ExactInt>> g(2, std::vector<ExactInt>(size, 0));
    const bool peak_here = I.contains(len);
    for (int a = 0; a < 2; ++a) {
      for (int j = 0; j < len; ++j) {
        const ExactInt& v = f[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
        if (v == 0) continue;
        for (int r = 0; r <= len; ++r) {
          const bool ascent = j < r;
          // Position len is a peak iff it was entered by an ascent and left by a descent.
          const bool is_peak = a == 1 && !ascent && len >= 2;
          if (is_peak != peak_here) continue;
          g[ascent ? 1 : 0][static_cast<std::size_t>(r)] += v;
        }
      }
    }
    f = std::move(g);
  }
  ExactInt total = 0;
  for (const auto& row : f) {
    for (const ExactInt& v : row) total += v;
  }
  return total;
}

bool peak_admissible(const DescentSet& I) {
  const int n = I.max() + 1;
  require_enumerable(n);
  return peak_histogram(n)[index_mask(I)] != 0;
}

const char* peak_outcome_name(PeakOutcome o) {
  switch (o) {
    case PeakOutcome::Pass: return "pass";
    case PeakOutcome::Fail: return "fail";
    case PeakOutcome::Inadmissible: return "inadmissible";
  }
  return "?";
}

PeakCheck peak_poly_check(const DescentSet& I, int n_lo, int n_hi) {
  const int m = I.max();
  PeakCheck r;
  r.set = I;
  r.n_lo = n_lo == 0 ? m + 1 : n_lo;
  r.n_hi = n_hi == 0 ? 2 * m + 3 : n_hi;
  if (r.n_lo <= m || r.n_hi < r.n_lo) {
    throw std::invalid_argument("peak range must satisfy max(I) < n_lo <= n_hi");
  }
  if (!peak_admissible(I)) {
    r.outcome = PeakOutcome::Inadmissible;
    r.detail = "no permutation has peak set " + I.to_string();
    return r;
  }

  std::vector<ExactRational> xs;
  std::vector<ExactRational> ys;
  for (int n = r.n_lo; n <= r.n_hi; ++n) {
    const ExactInt count = peak_count(I, n);
    const long shift = n - I.size() - 1;
    ExactInt q = count;
    if (shift > 0) {
      const ExactInt pow = ExactInt(1) << static_cast<mp_bitcnt_t>(shift);
      if (count % pow != 0) {
        r.outcome = PeakOutcome::Fail;
        r.detail = "2^" + std::to_string(shift) + " does not divide #P at n = " + std::to_string(n);
        r.counts.push_back(count);
        return r;
      }
      q = count / pow;
    } else if (shift < 0) {
      q = count << static_cast<mp_bitcnt_t>(-shift);
    }
    r.counts.push_back(count);
    r.quotients.push_back(q);
    xs.emplace_back(n);
    ys.emplace_back(q);
  }

  // Newton interpolation through the first min(m+1, #points) quotients.
  const std::size_t used = std::min<std::size_t>(static_cast<std::size_t>(m) + 1, xs.size());
  std::vector<ExactRational> dd(ys.begin(), ys.begin() + static_cast<long>(used));
  for (std::size_t level = 1; level < used; ++level) {
    for (std::size_t i = used - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  ExactPoly poly;
  for (std::size_t i = used; i-- > 0;) {
    poly = poly * ExactPoly::linear_factor(xs[i]) + ExactPoly::constant(dd[i]);
  }
  r.poly = poly;
  for (std::size_t i = used; i < xs.size(); ++i) {
    if (poly(xs[i]) != ys[i]) {
      r.outcome = PeakOutcome::Fail;
      r.detail = "quotients at n = " + xs[i].get_str() + " leave the degree " +
                 std::to_string(m) + " interpolant";
      return r;
    }
  }
  r.outcome = PeakOutcome::Pass;
  return r;
}

}  // namespace descent_lab
