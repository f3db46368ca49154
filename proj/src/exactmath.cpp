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

#include "descent_lab/exactmath.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace descent_lab {

Composition::Composition(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("composition must have at least one part");
  }
  for (long p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  }
}

long Composition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

ExactInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactInt binomial(const ExactInt& n, const ExactInt& k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  if (!k.fits_ulong_p()) throw std::invalid_argument("binomial: k too large");
  // mpz_bin_ui already implements the negative-n extension.
  ExactInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

ExactInt binomial(long n, long k) { return binomial(ExactInt(n), ExactInt(k)); }

ExactInt multinomial(long n, const Composition& delta) {
  if (delta.sum() != n) {
    throw std::invalid_argument("multinomial: parts do not sum to n");
  }
  // Product of binomials C(d_1 + ... + d_j, d_j) avoids the large n!.
  ExactInt r = 1;
  long running = 0;
  for (long part : delta.parts()) {
    running += part;
    r *= binomial(running, part);
  }
  return r;
}

Composition difference_composition(std::span<const int> set, long n) {
  std::vector<int> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.front() < 1) {
    throw std::invalid_argument("difference_composition: entries must be positive");
  }
  if (!sorted.empty() && n <= sorted.back()) {
    throw std::invalid_argument("difference_composition: n must exceed max(I)");
  }
  if (sorted.empty() && n < 1) {
    throw std::invalid_argument("difference_composition: n must be positive");
  }
  std::vector<long> parts;
  parts.reserve(sorted.size() + 1);
  long prev = 0;
  for (int i : sorted) {
    parts.push_back(i - prev);
    prev = i;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

// ExactPoly

ExactPoly::ExactPoly(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

ExactPoly ExactPoly::constant(const ExactRational& c) { return ExactPoly({c}); }

ExactPoly ExactPoly::linear_factor(const ExactRational& root) {
  return ExactPoly({-root, ExactRational(1)});
}

void ExactPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int ExactPoly::degree() const {
  return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
}

ExactRational ExactPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ExactRational(0);
}

const ExactRational& ExactPoly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

ExactRational ExactPoly::operator()(const ExactRational& x) const {
  ExactRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator*=(const ExactRational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() || b.is_zero()) return ExactPoly();
  std::vector<ExactRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::divide_linear(const ExactRational& r, ExactRational* remainder) const {
  if (coeffs_.empty()) {
    *remainder = 0;
    return ExactPoly();
  }
  std::vector<ExactRational> q(coeffs_.size() - 1);
  ExactRational carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    carry = carry * r + coeffs_[i];
    if (i > 0) q[i - 1] = carry;
  }
  *remainder = carry;
  return ExactPoly(std::move(q));
}

std::string ExactPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const ExactRational& c = coeffs_[i];
    if (c == 0) continue;
    ExactRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (i == 0 || !unit) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

ExactPoly binom_poly(int m) { return shifted_binom_poly(m, 0); }

ExactPoly shifted_binom_poly(int k, long center) {
  if (k < 0) throw std::invalid_argument("binomial polynomial needs k >= 0");
  ExactPoly p = ExactPoly::constant(1);
  for (int j = 0; j < k; ++j) {
    p = p * ExactPoly::linear_factor(ExactRational(center + j));
  }
  p *= ExactRational(1) / ExactRational(factorial(k));
  return p;
}

namespace {

// Newton-basis coefficients with nodes center, center + 1, ...: repeated
// synthetic division by (n - center - k).
std::vector<ExactRational> newton_coefficients(const ExactPoly& p, long center) {
  std::vector<ExactRational> out;
  ExactPoly rest = p;
  for (long k = 0; !rest.is_zero(); ++k) {
    ExactRational value;
    rest = rest.divide_linear(ExactRational(center + k), &value);
    out.push_back(value);
  }
  return out;
}

ExactPoly from_newton_coefficients(std::span<const ExactRational> coeffs, long center) {
  ExactPoly acc;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * ExactPoly::linear_factor(ExactRational(center + static_cast<long>(k)));
    acc += ExactPoly::constant(coeffs[k]);
  }
  return acc;
}

}  // namespace

BinomExpansion to_binom_basis(const ExactPoly& p, long center) {
  BinomExpansion e;
  e.center = center;
  e.coeffs = newton_coefficients(p, center);
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    e.coeffs[k] *= ExactRational(factorial(static_cast<long>(k)));
  }
  return e;
}

ExactPoly from_binom_basis(const BinomExpansion& e) {
  std::vector<ExactRational> newton = e.coeffs;
  for (std::size_t k = 0; k < newton.size(); ++k) {
    newton[k] /= ExactRational(factorial(static_cast<long>(k)));
  }
  return from_newton_coefficients(newton, e.center);
}

std::vector<ExactRational> to_falling_factorial_basis(const ExactPoly& p) {
  return newton_coefficients(p, 0);
}

ExactPoly from_falling_factorial_basis(std::span<const ExactRational> coeffs) {
  return from_newton_coefficients(coeffs, 0);
}

ExactInt require_integer(const ExactRational& q, const std::string& what) {
  ExactRational c = q;
  c.canonicalize();
  if (c.get_den() != 1) {
    throw InternalError(what + ": expected an integer, got " + c.get_str());
  }
  return c.get_num();
}

}  // namespace descent_lab
