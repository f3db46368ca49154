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

#include "descent_lab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "descent_lab/parallel.hpp"

namespace descent_lab {

Perm::Perm(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
  }
}

Perm Perm::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Perm(std::move(e));
}

Perm Perm::parse(const std::string& word) {
  std::vector<int> e;
  for (char ch : word) {
    if (ch < '1' || ch > '9') {
      throw std::invalid_argument("permutation word must consist of digits 1-9: '" + word + "'");
    }
    e.push_back(ch - '0');
  }
  return Perm(std::move(e));
}

std::string Perm::to_string() const {
  std::string s;
  const bool compact = entries_.size() <= 9;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

const char* group_name(Group g) {
  switch (g) {
    case Group::A: return "A";
    case Group::B: return "B";
    case Group::D: return "D";
  }
  return "?";
}

int max_enumerable_n(Group g) {
  switch (g) {
    case Group::A: return 11;
    case Group::B: return 8;
    case Group::D: return 9;
  }
  return 0;
}

IndexSet descent_set(std::span<const int> p) {
  IndexSet out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

IndexSet peak_set(std::span<const int> p) {
  IndexSet out;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (p[i - 1] < p[i] && p[i] > p[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

IndexSet signed_descent_set(std::span<const int> b) {
  IndexSet out;
  int prev = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (prev > b[i]) out.push_back(static_cast<int>(i));
    prev = b[i];
  }
  return out;
}

bool order_isomorphic(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

namespace {

std::uint64_t occurrence_mask(std::span<const int> p, std::span<const Perm> patterns) {
  if (patterns.empty()) return 0;
  const std::size_t k = static_cast<std::size_t>(patterns.front().size());
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i + k <= p.size(); ++i) {
    auto window = p.subspan(i, k);
    for (const Perm& sigma : patterns) {
      if (order_isomorphic(window, sigma)) {
        mask |= std::uint64_t{1} << (i + 1);
        break;
      }
    }
  }
  return mask;
}

std::uint64_t descent_mask(std::span<const int> p) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) mask |= std::uint64_t{1} << (i + 1);
  }
  return mask;
}

std::uint64_t peak_mask(std::span<const int> p) {
  std::uint64_t mask = 0;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (p[i - 1] < p[i] && p[i] > p[i + 1]) mask |= std::uint64_t{1} << (i + 1);
  }
  return mask;
}

// Runs visit(perm) over S_n, split into n tasks by first entry. Each task
// fills its own histogram; they are summed in task order.
template <class Visit>
std::vector<std::uint64_t> histogram_over_sn(int n, std::size_t bins, unsigned threads,
                                             Visit visit) {
  if (n == 0) {
    std::vector<std::uint64_t> h(bins, 0);
    visit(std::span<const int>(), h);
    return h;
  }
  auto partial = parallel_map(static_cast<std::size_t>(n), threads, [&](std::size_t first) {
    std::vector<std::uint64_t> h(bins, 0);
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    perm.push_back(static_cast<int>(first) + 1);
    for (int v = 1; v <= n; ++v) {
      if (v != static_cast<int>(first) + 1) perm.push_back(v);
    }
    do {
      visit(std::span<const int>(perm), h);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return h;
  });
  std::vector<std::uint64_t> total(bins, 0);
  for (const auto& h : partial) {
    for (std::size_t i = 0; i < bins; ++i) total[i] += h[i];
  }
  return total;
}

void check_enumerable(int n, Group g) {
  const int lo = (g == Group::D) ? 2 : 1;
  if (n < lo || n > max_enumerable_n(g)) {
    throw std::invalid_argument(std::string("n = ") + std::to_string(n) +
                                " is outside the enumerable range for type " + group_name(g));
  }
}

}  // namespace

IndexSet occurrence_set(std::span<const int> p, std::span<const Perm> patterns) {
  if (!patterns.empty()) {
    const int k = patterns.front().size();
    for (const Perm& sigma : patterns) {
      if (sigma.size() != k) throw std::invalid_argument("patterns must share a length");
    }
  }
  return mask_to_set(occurrence_mask(p, patterns));
}

void for_each_permutation(int n, const std::function<void(std::span<const int>)>& f) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    f(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void for_each_signed_permutation(int n, Group g,
                                 const std::function<void(std::span<const int>)>& f) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> word(perm.size());
  const std::uint64_t masks = std::uint64_t{1} << n;
  do {
    for (std::uint64_t signs = 0; signs < masks; ++signs) {
      if (g == Group::D && (std::popcount(signs) & 1)) continue;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        word[i] = ((signs >> i) & 1) ? -perm[i] : perm[i];
      }
      f(word);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::uint64_t index_mask(std::span<const int> set) {
  std::uint64_t mask = 0;
  for (int i : set) {
    if (i < 0 || i > 63) throw std::invalid_argument("index out of mask range");
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

IndexSet mask_to_set(std::uint64_t mask) {
  IndexSet out;
  for (int i = 0; i < 64; ++i) {
    if ((mask >> i) & 1) out.push_back(i);
  }
  return out;
}

std::vector<std::uint64_t> descent_histogram(int n, Group g, unsigned threads) {
  const std::size_t bins = std::size_t{1} << n;
  if (g == Group::A) {
    return histogram_over_sn(n, bins, threads, [](std::span<const int> p, auto& h) {
      ++h[descent_mask(p)];
    });
  }
  const std::uint64_t sign_masks = std::uint64_t{1} << n;
  return histogram_over_sn(n, bins, threads, [&](std::span<const int> p, auto& h) {
    for (std::uint64_t signs = 0; signs < sign_masks; ++signs) {
      if (g == Group::D && (std::popcount(signs) & 1)) continue;
      std::uint64_t mask = 0;
      int prev = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const int b = ((signs >> i) & 1) ? -p[i] : p[i];
        if (prev > b) mask |= std::uint64_t{1} << i;
        prev = b;
      }
      ++h[mask];
    }
  });
}

ExactInt count_by_descents(std::span<const int> I, int n, Group g, unsigned threads) {
  check_enumerable(n, g);
  for (int i : I) {
    if (i < 0 || (i == 0 && g == Group::A)) {
      throw std::invalid_argument("descent index out of range for this group");
    }
    if (i >= n) throw std::invalid_argument("n must exceed max(I)");
  }
  const auto h = descent_histogram(n, g, threads);
  return ExactInt(static_cast<unsigned long>(h[index_mask(I)]));
}

std::vector<Perm> collect_permutations(int n,
                                       const std::function<bool(std::span<const int>)>& keep,
                                       std::size_t cap) {
  std::vector<Perm> out;
  for_each_permutation(n, [&](std::span<const int> p) {
    if (!keep(p)) return;
    if (out.size() >= cap) throw std::length_error("permutation collector cap exceeded");
    out.emplace_back(std::vector<int>(p.begin(), p.end()));
  });
  return out;
}

std::vector<std::uint64_t> occurrence_histogram(int n, std::span<const Perm> patterns,
                                                unsigned threads) {
  const std::size_t bins = std::size_t{1} << (n + 1);
  return histogram_over_sn(n, bins, threads, [&](std::span<const int> p, auto& h) {
    ++h[occurrence_mask(p, patterns)];
  });
}

std::vector<std::uint64_t> peak_histogram(int n, unsigned threads) {
  const std::size_t bins = std::size_t{1} << (n + 1);
  return histogram_over_sn(n, bins, threads, [](std::span<const int> p, auto& h) {
    ++h[peak_mask(p)];
  });
}

}  // namespace descent_lab
