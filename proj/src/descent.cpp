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

#include "descent_lab/descent.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace descent_lab {

DescentSet::DescentSet(std::vector<int> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.front() < 1) {
    throw std::invalid_argument("descent set entries must be positive integers");
  }
}

DescentSet DescentSet::parse(const std::string& text) {
  std::vector<int> elems;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw std::invalid_argument("malformed set '" + text + "'");
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed set '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("malformed set '" + text + "'");
    elems.push_back(v);
  }
  return DescentSet(std::move(elems));
}

std::vector<DescentSet> DescentSet::all_subsets(int max_elem) {
  std::vector<DescentSet> out;
  const unsigned long count = 1UL << max_elem;
  out.reserve(count);
  for (unsigned long mask = 0; mask < count; ++mask) {
    std::vector<int> e;
    for (int i = 0; i < max_elem; ++i) {
      if ((mask >> i) & 1) e.push_back(i + 1);
    }
    out.emplace_back(std::move(e));
  }
  return out;
}

std::vector<DescentSet> DescentSet::all_with_max(int m) {
  if (m < 1) throw std::invalid_argument("all_with_max needs m >= 1");
  std::vector<DescentSet> out;
  for (const DescentSet& lower : all_subsets(m - 1)) {
    std::vector<int> e = lower.elems();
    e.push_back(m);
    out.emplace_back(std::move(e));
  }
  return out;
}

DescentSet DescentSet::interval(int lo, int hi) {
  std::vector<int> e;
  for (int i = lo; i <= hi; ++i) e.push_back(i);
  return DescentSet(std::move(e));
}

bool DescentSet::contains(int i) const {
  return std::binary_search(elems_.begin(), elems_.end(), i);
}

std::string DescentSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(elems_[i]);
  }
  return s + "}";
}

DescentSet i_minus(const DescentSet& I) {
  if (I.empty()) throw std::invalid_argument("I- is undefined for the empty set");
  std::vector<int> e = I.elems();
  e.pop_back();
  return DescentSet(std::move(e));
}

DerivedSets derived_sets(const DescentSet& I) {
  if (I.empty()) throw std::invalid_argument("derived sets need a nonempty I");
  const auto& e = I.elems();
  const std::size_t len = e.size();
  DerivedSets out;
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<int> lowered(e.begin(), e.begin() + static_cast<long>(k));
    std::vector<int> skipped = lowered;
    for (std::size_t j = k; j < len; ++j) {
      if (e[j] - 1 > 0) lowered.push_back(e[j] - 1);
      if (j > k) skipped.push_back(e[j] - 1);
    }
    out.lowered.emplace_back(std::move(lowered));
    out.skipped.emplace_back(std::move(skipped));
  }
  std::vector<int> primed;
  for (int i : e) {
    if (!I.contains(i - 1)) primed.push_back(i);
  }
  std::vector<int> double_primed;
  for (int i : primed) {
    if (i != 1) double_primed.push_back(i);
  }
  out.primed = DescentSet(std::move(primed));
  out.double_primed = DescentSet(std::move(double_primed));
  return out;
}

namespace {

std::shared_mutex memo_mutex;
std::map<std::vector<int>, ExactPoly>& memo() {
  static std::map<std::vector<int>, ExactPoly> table;
  return table;
}

ExactPoly compute_d_poly(const DescentSet& I) {
  if (I.empty()) return ExactPoly::constant(1);
  const DescentSet lower = i_minus(I);
  const ExactPoly lower_poly = d_poly(lower);
  const ExactRational at_m = lower_poly(ExactRational(I.max()));
  return binom_poly(I.max()) * at_m - lower_poly;
}

}  // namespace

ExactPoly d_poly(const DescentSet& I) {
  {
    std::shared_lock lock(memo_mutex);
    auto it = memo().find(I.elems());
    if (it != memo().end()) return it->second;
  }
  ExactPoly p = compute_d_poly(I);
  std::unique_lock lock(memo_mutex);
  memo().emplace(I.elems(), p);
  return p;
}

ExactInt d_pie(const DescentSet& I, long n) {
  if (n <= I.max()) throw std::invalid_argument("d_pie needs n > max(I)");
  const auto& e = I.elems();
  const int k = I.size();
  ExactInt total = 0;
  // Gray-code order: consecutive subsets differ in a single element.
  const std::uint64_t count = std::uint64_t{1} << k;
  std::vector<int> J;
  for (std::uint64_t step = 0; step < count; ++step) {
    const std::uint64_t gray = step ^ (step >> 1);
    J.clear();
    for (int b = 0; b < k; ++b) {
      if ((gray >> b) & 1) J.push_back(e[static_cast<std::size_t>(b)]);
    }
    const ExactInt term = multinomial(n, difference_composition(J, n));
    if ((k - std::popcount(gray)) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

ExactInt d_positive_rec(const DescentSet& I, long n_plus_1) {
  if (I.empty()) throw std::invalid_argument("positive recursion needs a nonempty I");
  if (n_plus_1 <= I.max() + 1) {
    throw std::invalid_argument("positive recursion needs n+1 > max(I) + 1");
  }
  const ExactRational n(n_plus_1 - 1);
  const DerivedSets derived = derived_sets(I);
  const auto& e = I.elems();

  ExactRational total = d_poly(I)(n);
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (derived.double_primed.contains(e[k])) total += d_poly(derived.lowered[k])(n);
    if (derived.primed.contains(e[k])) total += d_poly(derived.skipped[k])(n);
  }
  return require_integer(total, "d_positive_rec");
}

ExactRational d_at(const DescentSet& I, const ExactRational& x) { return d_poly(I)(x); }

}  // namespace descent_lab
