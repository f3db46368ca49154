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

#include "descent_lab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace descent_lab {

namespace {

using LComplex = std::complex<long double>;

long double to_long_double(const ExactInt& z) {
  long double r = 0.0L;
  for (std::size_t i = mpz_size(z.get_mpz_t()); i-- > 0;) {
    r = std::ldexp(r, GMP_NUMB_BITS) +
        static_cast<long double>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i)));
  }
  return sgn(z) < 0 ? -r : r;
}

long double to_long_double(const ExactRational& q) {
  return to_long_double(ExactInt(q.get_num())) / to_long_double(ExactInt(q.get_den()));
}

std::vector<long double> to_long_double(std::span<const ExactRational> coeffs) {
  std::vector<long double> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(to_long_double(c));
  return out;
}

LComplex horner(std::span<const long double> a, LComplex z) {
  LComplex acc = 0.0L;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
  return acc;
}

// Value, derivative, and a rounding-error bound for p(z).
struct Evaluation {
  LComplex value;
  LComplex derivative;
  long double error_bound;
};

Evaluation evaluate(std::span<const long double> a, LComplex z) {
  LComplex p = 0.0L;
  LComplex dp = 0.0L;
  long double abs_sum = 0.0L;
  const long double r = std::abs(z);
  for (std::size_t i = a.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
    abs_sum = abs_sum * r + std::fabs(a[i]);
  }
  const long double eps = std::numeric_limits<long double>::epsilon();
  return {p, dp, 4.0L * static_cast<long double>(a.size()) * eps * abs_sum};
}

long double max_abs_coeff(const ExactPoly& p) {
  long double best = 0.0L;
  for (const auto& c : p.coeffs()) best = std::max(best, std::fabs(to_long_double(c)));
  return best;
}

std::vector<ComplexPoint> to_double(const std::vector<LComplex>& zs) {
  std::vector<ComplexPoint> out;
  out.reserve(zs.size());
  for (const auto& z : zs) {
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return out;
}

// Aberth-Ehrlich on a monic polynomial with nonzero constant term.
std::vector<LComplex> aberth(std::span<const long double> monic, double radius) {
  const std::size_t d = monic.size() - 1;
  std::vector<LComplex> z(d);
  const long double offset = 0.4L;  // keeps the start off the real axis
  for (std::size_t i = 0; i < d; ++i) {
    const long double angle =
        2.0L * std::numbers::pi_v<long double> * static_cast<long double>(i) /
            static_cast<long double>(d) + offset;
    z[i] = std::polar(static_cast<long double>(radius), angle);
  }

  for (int iter = 1; iter <= kMaxAberthIterations; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < d; ++i) {
      const Evaluation e = evaluate(monic, z[i]);
      if (std::abs(e.value) <= e.error_bound) continue;
      LComplex ratio;
      if (std::abs(e.derivative) == 0.0L) {
        ratio = LComplex(1e-6L, 1e-6L);
      } else {
        ratio = e.value / e.derivative;
      }
      LComplex repulsion = 0.0L;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) repulsion += 1.0L / (z[i] - z[j]);
      }
      const LComplex w = ratio / (1.0L - ratio * repulsion);
      z[i] -= w;
      if (std::abs(w) > kAberthTolerance * std::max(1.0L, std::abs(z[i]))) converged = false;
    }
    if (converged) return z;
  }
  throw RootFindingError("Aberth iteration did not converge", to_double(z),
                         kMaxAberthIterations);
}

// Snaps near-real roots onto the axis and averages conjugate partners so
// the output is exactly conjugate symmetric.
std::vector<LComplex> symmetrize(std::vector<LComplex> zs) {
  std::vector<LComplex> real;
  std::vector<LComplex> upper;
  std::vector<LComplex> lower;
  for (const auto& z : zs) {
    const long double tol = kPairingTolerance * std::max(1.0L, std::abs(z));
    if (std::fabs(z.imag()) <= tol) {
      real.emplace_back(z.real(), 0.0L);
    } else if (z.imag() > 0) {
      upper.push_back(z);
    } else {
      lower.push_back(z);
    }
  }
  if (upper.size() != lower.size()) {
    throw RootFindingError("computed roots are not closed under conjugation", to_double(zs), 0);
  }
  std::vector<LComplex> out = real;
  std::vector<bool> used(lower.size(), false);
  for (const auto& u : upper) {
    std::size_t best = lower.size();
    long double best_dist = std::numeric_limits<long double>::infinity();
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      const long double dist = std::abs(u - std::conj(lower[j]));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best_dist > kPairingTolerance * std::max(1.0L, std::abs(u))) {
      throw RootFindingError("no conjugate partner for a nonreal root", to_double(zs), 0);
    }
    used[best] = true;
    const LComplex mid = 0.5L * (u + std::conj(lower[best]));
    out.push_back(mid);
    out.push_back(std::conj(mid));
  }
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

ComplexPoint eval_complex(const ExactPoly& p, ComplexPoint z) {
  const auto a = to_long_double(p.coeffs());
  const LComplex v = horner(a, LComplex(z.real(), z.imag()));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double residual_tolerance(const ExactPoly& p) {
  return kResidualScale * (1.0 + static_cast<double>(max_abs_coeff(p)));
}

std::vector<ComplexPoint> find_roots(const ExactPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("find_roots needs degree >= 1");
  const std::size_t d = static_cast<std::size_t>(p.degree());

  std::size_t zeros = 0;
  while (p.coeff(zeros) == 0) ++zeros;
  std::vector<LComplex> roots(zeros, LComplex(0.0L, 0.0L));

  if (zeros < d) {
    std::vector<ExactRational> monic;
    for (std::size_t i = zeros; i <= d; ++i) monic.push_back(p.coeff(i) / p.leading());
    const auto a = to_long_double(monic);
    if (a.size() == 2) {
      roots.emplace_back(-a[0], 0.0L);
    } else {
      const double radius = cauchy_bound(monic);
      auto found = aberth(a, radius);
      roots.insert(roots.end(), found.begin(), found.end());
    }
  }

  roots = symmetrize(std::move(roots));
  std::sort(roots.begin(), roots.end(), [](const LComplex& x, const LComplex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });

  const auto coeffs = to_long_double(p.coeffs());
  const long double tol = residual_tolerance(p);
  for (const auto& z : roots) {
    if (std::abs(horner(coeffs, z)) > tol) {
      throw RootFindingError("root residual above tolerance", to_double(roots),
                             kMaxAberthIterations);
    }
  }
  return to_double(roots);
}

double cauchy_bound(std::span<const ExactRational> coeffs) {
  std::size_t d = coeffs.size();
  while (d > 0 && coeffs[d - 1] == 0) --d;
  if (d == 0) throw std::invalid_argument("cauchy_bound of the zero polynomial");
  if (d == 1) throw std::invalid_argument("cauchy_bound needs degree >= 1");
  d -= 1;  // degree
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  if (low == d) return 0.0;  // monomial

  // 1 + max |c_i / c_d| is a strict upper bound.
  const ExactRational lead = abs(coeffs[d]);
  ExactRational max_ratio = 0;
  for (std::size_t i = 0; i < d; ++i) max_ratio = std::max(max_ratio, ExactRational(abs(coeffs[i]) / lead));
  std::vector<long double> mag;  // |c_i| / |c_d| for i = low..d
  for (std::size_t i = low; i <= d; ++i) mag.push_back(to_long_double(ExactRational(abs(coeffs[i]) / lead)));
  const std::size_t deg = d - low;

  // f(z) = z^deg - sum_{i<deg} mag_i z^i: negative on (0, rho), positive after.
  auto f = [&](long double z) {
    long double lower = 0.0L;
    for (std::size_t i = deg; i-- > 0;) lower = lower * z + mag[i];
    return std::pow(z, static_cast<long double>(deg)) - lower * 1.0L;
  };
  auto fprime = [&](long double z) {
    long double lower = 0.0L;
    for (std::size_t i = deg; i-- > 1;) lower = lower * z + static_cast<long double>(i) * mag[i];
    return static_cast<long double>(deg) * std::pow(z, static_cast<long double>(deg) - 1) - lower;
  };

  long double lo = 0.0L;
  long double hi = 1.0L + to_long_double(max_ratio);
  for (int it = 0; it < 400 && (hi - lo) > 1e-16L * hi; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (f(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  long double z = 0.5L * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    const long double slope = fprime(z);
    if (slope <= 0) break;
    const long double next = z - f(z) / slope;
    if (next < lo || next > hi) break;
    z = next;
  }
  return static_cast<double>(z);
}

Check falling_coeffs_check(const DescentSet& I) {
  const auto c = to_falling_factorial_basis(d_poly(I));
  Check check{"falling_coeffs", true, ""};
  std::ostringstream witness;
  witness << "c = [";
  for (std::size_t k = 0; k < c.size(); ++k) witness << (k ? ", " : "") << c[k].get_str();
  witness << "]";
  for (std::size_t k = 0; k < c.size(); ++k) {
    const int idx = static_cast<int>(k);
    const bool in_support = (idx == 0) || I.contains(idx);
    if (!in_support) {
      if (c[k] != 0) {
        check.pass = false;
        witness << "; nonzero c_" << k << " outside I u {0}";
      }
      continue;
    }
    const ExactRational mag = abs(c[k]);
    const ExactRational lower = ExactRational(1) / ExactRational(factorial(idx));
    if (mag < lower || mag > 1) {
      check.pass = false;
      witness << "; |c_" << k << "| = " << mag.get_str() << " outside [1/" << k << "!, 1]";
    }
  }
  for (int i : I.elems()) {
    if (static_cast<std::size_t>(i) >= c.size()) {
      check.pass = false;
      witness << "; c_" << i << " missing";
    }
  }
  check.witness = witness.str();
  return check;
}

double bound_rho_m(int m) {
  if (m < 1) throw std::invalid_argument("rho_m needs m >= 1");
  const long double lm = std::log(static_cast<long double>(m));
  const long double rho = std::exp(lm - 1.0L + (lm + 1.0L) / static_cast<long double>(m));
  const long double lower = static_cast<long double>(m) / std::numbers::e_v<long double>;
  if (!(rho > lower && rho <= static_cast<long double>(m) * (1.0L + 1e-15L))) {
    throw InternalError("rho_m outside (m/e, m]");
  }
  return std::min(static_cast<double>(rho), static_cast<double>(m));
}

double bound_general_rho(const DescentSet& I) {
  if (I.size() < 2) throw std::invalid_argument("general bound needs #I >= 2");
  const int m = I.max();
  const int m_minus = i_minus(I).max();
  long double m_fact = 1.0L;
  for (int i = 2; i <= m; ++i) m_fact *= static_cast<long double>(i);
  const long double first = m_fact + 1.0L;
  const long double second = std::exp(std::log(m_fact * static_cast<long double>(I.size())) /
                                      static_cast<long double>(m - m_minus));
  return static_cast<double>(std::min(first, second));
}

double disc_radius(const DescentSet& I, std::string* rule) {
  if (I.empty()) throw std::invalid_argument("disc radius needs #I >= 1");
  std::string name;
  double r = 0.0;
  if (I.size() == 1) {
    name = "rho_m";
    r = bound_rho_m(I.max());
  } else if (I.size() == 2) {
    name = "m";
    r = static_cast<double>(I.max());
  } else {
    name = "general";
    r = bound_general_rho(I);
  }
  if (rule) *rule = name;
  return r;
}

double principal_arg(ComplexPoint v) {
  if (v.real() == 0.0 && v.imag() == 0.0) return std::numeric_limits<double>::infinity();
  if (v.imag() == 0.0) return v.real() > 0 ? 0.0 : std::numbers::pi;
  return std::atan2(v.imag(), v.real());
}

std::vector<double> region_partial_sums(ComplexPoint z, int m) {
  std::vector<double> s{0.0};
  double acc = 0.0;
  for (int i = 1; i <= m; ++i) {
    acc += principal_arg(z - ComplexPoint(i - 1, 0.0));
    s.push_back(acc);
  }
  return s;
}

bool region_membership(ComplexPoint z, int m) {
  if (m < 1) throw std::invalid_argument("region membership needs m >= 1");
  ComplexPoint w = z - ComplexPoint(m, 0.0);
  const double a = principal_arg(w);
  if (std::isinf(a)) return false;
  if (a < 0) w = std::conj(w);
  double sum = 0.0;
  for (int i = 1; i <= m; ++i) {
    const double term = principal_arg(w - ComplexPoint(i - 1, 0.0));
    if (std::isinf(term)) return false;
    sum += term;
  }
  return sum < std::numbers::pi;
}

bool robust_region_membership(ComplexPoint z, int m) {
  double re = z.real();
  double im = z.imag();
  if (std::fabs(im) <= kSlack) im = 0.0;
  if (im == 0.0 && std::fabs(re - std::round(re)) <= kSlack) re = std::round(re);
  const ComplexPoint snapped(re, im);
  if (!region_membership(snapped, m)) return false;
  const ComplexPoint offsets[] = {{kSlack, 0.0}, {-kSlack, 0.0}, {0.0, kSlack}, {0.0, -kSlack}};
  for (const auto& d : offsets) {
    if (!region_membership(snapped + d, m)) return false;
  }
  return true;
}

bool RootCertificate::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* RootCertificate::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

RootCertificate disc_certificate(const DescentSet& I) {
  if (I.empty()) throw std::invalid_argument("root certificate needs #I >= 1");
  const int m = I.max();
  const ExactPoly p = d_poly(I);

  RootCertificate cert;
  cert.set = I;
  cert.roots = find_roots(p);
  for (const auto& z : cert.roots) cert.residuals.push_back(std::abs(eval_complex(p, z)));
  const double radius = disc_radius(I, &cert.radius_rule);
  for (int k = 0; k < m; ++k) cert.discs.push_back({ComplexPoint(k, 0.0), radius});

  auto is_real = [](ComplexPoint z) {
    return std::fabs(z.imag()) <= kPairingTolerance * std::max(1.0, std::abs(z));
  };

  cert.checks.push_back({"root_count", static_cast<int>(cert.roots.size()) == m,
                         std::to_string(cert.roots.size()) + " roots, degree " + std::to_string(m)});

  {
    const double tol = residual_tolerance(p);
    double worst = 0.0;
    for (double r : cert.residuals) worst = std::max(worst, r);
    cert.checks.push_back({"residual", worst <= tol,
                           "max residual " + format_double(worst) + " <= " + format_double(tol)});
  }

  {
    bool closed = true;
    for (const auto& z : cert.roots) {
      if (is_real(z)) continue;
      const bool partner = std::any_of(cert.roots.begin(), cert.roots.end(), [&](ComplexPoint w) {
        return std::abs(w - std::conj(z)) <= kPairingTolerance * std::max(1.0, std::abs(z));
      });
      closed = closed && partner;
    }
    cert.checks.push_back({"conjugate_closure", closed, ""});
  }

  {
    double worst_margin = std::numeric_limits<double>::infinity();
    for (const auto& z : cert.roots) {
      double margin = -std::numeric_limits<double>::infinity();
      for (const auto& disc : cert.discs) margin = std::max(margin, disc.radius - std::abs(z - disc.center));
      worst_margin = std::min(worst_margin, margin);
    }
    cert.checks.push_back({"disc_coverage", worst_margin >= -kSlack,
                           "radius " + format_double(radius) + " (" + cert.radius_rule +
                               "), min margin " + format_double(worst_margin)});
  }

  {
    bool exact = true;
    bool numeric = true;
    for (int i : I.elems()) {
      exact = exact && d_at(I, ExactRational(i)) == 0;
      numeric = numeric && std::any_of(cert.roots.begin(), cert.roots.end(), [&](ComplexPoint z) {
                  return std::abs(z - ComplexPoint(i, 0.0)) <= 1e-6;
                });
    }
    cert.checks.push_back({"root_theorem_exact", exact, "d(I;i) = 0 for every i in I"});
    cert.checks.push_back({"root_theorem_numeric", numeric, "every i in I found within 1e-6"});
  }

  {
    double max_mod = 0.0;
    double min_re = std::numeric_limits<double>::infinity();
    for (const auto& z : cert.roots) {
      max_mod = std::max(max_mod, std::abs(z));
      min_re = std::min(min_re, z.real());
    }
    cert.checks.push_back({"conjecture_modulus", max_mod <= m + kSlack,
                           "max |z| = " + format_double(max_mod)});
    cert.checks.push_back({"conjecture_real_part", min_re >= -1.0 - kSlack,
                           "min Re z = " + format_double(min_re)});
  }

  {
    double max_real_root = -std::numeric_limits<double>::infinity();
    for (const auto& z : cert.roots) {
      if (is_real(z)) max_real_root = std::max(max_real_root, z.real());
    }
    cert.checks.push_back({"real_root_bound", max_real_root <= 2.0 * m - 1.0 + kSlack,
                           "max real root " + format_double(max_real_root) + " <= " +
                               std::to_string(2 * m - 1)});
  }

  {
    int inside = 0;
    for (const auto& z : cert.roots) {
      if (robust_region_membership(z, m)) ++inside;
    }
    cert.checks.push_back({"region_exclusion", inside == 0,
                           std::to_string(inside) + " roots inside R + " + std::to_string(m)});
  }

  cert.checks.push_back(falling_coeffs_check(I));
  return cert;
}

}  // namespace descent_lab
