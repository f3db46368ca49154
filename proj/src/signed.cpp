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

#include "descent_lab/signed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace descent_lab {

SignedDescentSet::SignedDescentSet(std::vector<int> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.front() < 0) {
    throw std::invalid_argument("signed descent set entries must be nonnegative");
  }
}

SignedDescentSet::SignedDescentSet(const DescentSet& positive, bool with_zero)
    : SignedDescentSet([&] {
        std::vector<int> e = positive.elems();
        if (with_zero) e.push_back(0);
        return e;
      }()) {}

SignedDescentSet SignedDescentSet::parse(const std::string& text) {
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
  return SignedDescentSet(std::move(elems));
}

std::vector<SignedDescentSet> SignedDescentSet::all_subsets(int max_elem) {
  std::vector<SignedDescentSet> out;
  const unsigned long count = 1UL << (max_elem + 1);
  for (unsigned long mask = 0; mask < count; ++mask) {
    std::vector<int> e;
    for (int i = 0; i <= max_elem; ++i) {
      if ((mask >> i) & 1) e.push_back(i);
    }
    out.emplace_back(std::move(e));
  }
  return out;
}

DescentSet SignedDescentSet::positive_part() const {
  std::vector<int> e;
  for (int i : elems_) {
    if (i > 0) e.push_back(i);
  }
  return DescentSet(std::move(e));
}

SignedDescentSet SignedDescentSet::minus() const {
  if (elems_.empty()) throw std::invalid_argument("I- is undefined for the empty set");
  std::vector<int> e = elems_;
  e.pop_back();
  return SignedDescentSet(std::move(e));
}

std::string SignedDescentSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(elems_[i]);
  }
  return s + "}";
}

namespace {

ExactRational power_of_two(long e) {
  ExactInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? ExactRational(p) : ExactRational(1) / ExactRational(p);
}

std::complex<double> eval_poly(const ExactPoly& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i].get_d();
  return acc;
}

// C(n; delta(J)) as a polynomial in n, for J nonempty and sorted.
ExactPoly multinomial_poly(const std::vector<int>& J) {
  const int top = J.back();
  const std::vector<int> below(J.begin(), J.end() - 1);
  const ExactInt inner = multinomial(top, difference_composition(below, top));
  return binom_poly(top) * ExactRational(inner);
}

enum class Kind { B, D };

// Shared inclusion-exclusion assembly. For J nonempty with j = min J the
// 2-power factor is 2^n times `scale(j)`; the J = empty term is handled by
// the caller-supplied constants.
BinaryExpPoly closed_form(const SignedDescentSet& I, Kind kind) {
  const DescentSet positive = I.positive_part();
  const auto& e = positive.elems();
  const int k = positive.size();
  const bool zero = I.has_zero();
  const ExactRational sign_empty = (k % 2 == 0) ? 1 : -1;
  const ExactRational half(1, 2);

  BinaryExpPoly out;
  if (kind == Kind::B) {
    // J = empty: delta_1 = n, so 2^(n-n) = 1, or 2^n - 1 when 0 in I.
    if (zero) {
      out.expo += ExactPoly::constant(sign_empty);
      out.plain -= ExactPoly::constant(sign_empty);
    } else {
      out.plain += ExactPoly::constant(sign_empty);
    }
  } else {
    // (-1)^k, or (-1)^k (2^(n-1) - 1) when 0 in I.
    if (zero) {
      out.expo += ExactPoly::constant(sign_empty * half);
      out.plain -= ExactPoly::constant(sign_empty);
    } else {
      out.plain += ExactPoly::constant(sign_empty);
    }
  }

  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    std::vector<int> J;
    for (int b = 0; b < k; ++b) {
      if ((mask >> b) & 1) J.push_back(e[static_cast<std::size_t>(b)]);
    }
    const int first = J.front();
    ExactRational scale = power_of_two(-first);  // 2^(n - first) / 2^n
    if (kind == Kind::D) scale *= half;
    if (zero) scale = (kind == Kind::B ? ExactRational(1) : half) - scale;
    const ExactRational sign = ((k - std::popcount(mask)) % 2 == 0) ? 1 : -1;
    out.expo += multinomial_poly(J) * ExactRational(sign * scale);
  }
  return out;
}

}  // namespace

ExactRational BinaryExpPoly::at(long n) const {
  const ExactRational x(n);
  return expo(x) * power_of_two(n) + plain(x);
}

std::complex<double> BinaryExpPoly::at(std::complex<double> z) const {
  return eval_poly(expo, z) * std::exp(z * std::numbers::ln2) + eval_poly(plain, z);
}

ExactInt dB_value(const SignedDescentSet& I, long n) {
  if (I.empty()) {
    if (n < 0) throw std::invalid_argument("d_B needs n >= 0");
    return 1;
  }
  const int m = I.max();
  if (n <= m) throw std::invalid_argument("d_B needs n > max(I)");
  const SignedDescentSet lower = I.minus();
  ExactInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - m));
  return binomial(n, m) * two_pow * dB_value(lower, m) - dB_value(lower, n);
}

BinaryExpPoly dB_pie(const SignedDescentSet& I) { return closed_form(I, Kind::B); }

ExactRational dB_at(const SignedDescentSet& I, long x) { return dB_pie(I).at(x); }

std::complex<double> dB_at(const SignedDescentSet& I, std::complex<double> x) {
  return dB_pie(I).at(x);
}

ExactInt dD_value(const SignedDescentSet& I, long n) {
  if (n < 2) throw std::invalid_argument("d_D needs n >= 2");
  if (I.empty()) return 1;
  const int m = I.max();
  if (n <= m) throw std::invalid_argument("d_D needs n > max(I)");
  const SignedDescentSet lower = I.minus();
  ExactInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - m - 1));
  return binomial(n, m) * two_pow * dB_value(lower, m) - dD_value(lower, n);
}

BinaryExpPoly dD_pie(const SignedDescentSet& I) { return closed_form(I, Kind::D); }

ExactRational dD_at(const SignedDescentSet& I, long x) { return dD_pie(I).at(x); }

CorollaryReport corollary_checks(const DescentSet& I, long n) {
  const int m = I.max();
  if (n <= m || n < 2) throw std::invalid_argument("corollary checks need n > max(I) and n >= 2");
  const SignedDescentSet plain(I, false);
  const SignedDescentSet with_zero(I, true);
  const ExactRational d = d_at(I, ExactRational(n));

  CorollaryReport r;
  std::ostringstream w;
  const ExactInt b_sum = dB_value(plain, n) + dB_value(with_zero, n);
  r.type_b_sum = ExactRational(b_sum) == power_of_two(n) * d;
  w << "dB sum " << b_sum.get_str() << " vs " << ExactRational(power_of_two(n) * d).get_str();
  const ExactInt d_sum = dD_value(plain, n) + dD_value(with_zero, n);
  r.type_d_sum = ExactRational(d_sum) == power_of_two(n - 1) * d;
  w << "; dD sum " << d_sum.get_str() << " vs " << ExactRational(power_of_two(n - 1) * d).get_str();

  r.type_d_vanish = true;
  r.type_d_vanish_sum = true;
  const BinaryExpPoly d_form = dD_pie(plain);
  const BinaryExpPoly d0_form = dD_pie(with_zero);
  if (!I.empty()) {
    const DescentSet lower = i_minus(I);
    for (int i : lower.elems()) {
      const ExactRational a = d_form.at(i);
      const ExactRational b = d0_form.at(i);
      if (a + b != 0) r.type_d_vanish_sum = false;
      if (a != 0 || b != 0) {
        r.type_d_vanish = false;
        w << "; d_D at i=" << i << ": " << a.get_str() << ", " << b.get_str();
      }
    }
  }
  r.d_at_max = d_form.at(m);
  r.d0_at_max = d0_form.at(m);
  r.witness = w.str();
  return r;
}

}  // namespace descent_lab
