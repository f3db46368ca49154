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

#ifndef DESCENT_LAB_ROOTS_HPP
#define DESCENT_LAB_ROOTS_HPP

/*
  Complex roots of d(I;z) and the bounds that localize them.

  Roots come from Aberth-Ehrlich simultaneous iteration in long double,
  started on a circle whose radius is the Cauchy bound. A root certificate
  records every computed root with its residual and a pass/fail entry per
  localization statement:

    - discs |z - k| <= rho, k = 0..m-1, with rho = rho_m when #I = 1,
      rho = m when #I = 2 and min(m! + 1, (m! #I)^(1/(m - m-))) otherwise
    - |z| <= m and Re z >= -1
    - real roots are at most 2m - 1
    - no root lies in the region R + m (falling-factorial positivity)
    - the elements of I are roots (exact check)

  Floating-point comparisons carry an additive slack of kSlack.
*/

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent_lab/descent.hpp"
#include "descent_lab/exactmath.hpp"

namespace descent_lab {

using ComplexPoint = std::complex<double>;

inline constexpr double kSlack = 1e-8;
inline constexpr double kResidualScale = 1e-8;
inline constexpr double kPairingTolerance = 1e-6;
inline constexpr int kMaxAberthIterations = 500;
inline constexpr double kAberthTolerance = 1e-12;

struct Disc {
  ComplexPoint center;
  double radius = 0.0;
};

/// Root finder failure; carries the iterate at the point of failure.
class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, std::vector<ComplexPoint> partial, int iterations)
      : std::runtime_error(what), partial_(std::move(partial)), iterations_(iterations) {}

  const std::vector<ComplexPoint>& partial_roots() const { return partial_; }
  int iterations() const { return iterations_; }

 private:
  std::vector<ComplexPoint> partial_;
  int iterations_;
};

ComplexPoint eval_complex(const ExactPoly& p, ComplexPoint z);

/// All complex roots with multiplicity, conjugate symmetric, sorted by
/// (real, imaginary). Throws std::invalid_argument for constant polynomials
/// and RootFindingError on non-convergence or a residual above
/// kResidualScale * (1 + max |coeff|).
std::vector<ComplexPoint> find_roots(const ExactPoly& p);

/// Tolerance used by find_roots and the certificate for |p(z0)|.
double residual_tolerance(const ExactPoly& p);

/// Unique positive root of |c_d| z^d = sum_{i<d} |c_i| z^i (0 when the
/// polynomial is a monomial). coeffs[i] multiplies z^i. Throws
/// std::invalid_argument for the zero or a constant polynomial.
double cauchy_bound(std::span<const ExactRational> coeffs);

/// Falling-factorial support and coefficient bounds.
struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

/// d(I;z) = c_0 + sum_{k in I} c_k z(z-1)...(z-k+1) with 1/k! <= |c_k| <= 1.
Check falling_coeffs_check(const DescentSet& I);

/// (m/e) (m e)^(1/m), for m >= 1.
double bound_rho_m(int m);

/// min(m! + 1, (m! #I)^(1/(m - m-))) with m- = max(I-). Needs #I >= 2.
double bound_general_rho(const DescentSet& I);

/// Radius of the localization discs for I (#I >= 1) and the rule used.
double disc_radius(const DescentSet& I, std::string* rule = nullptr);

/// Principal argument in (-pi, pi]; +infinity at the origin.
double principal_arg(ComplexPoint v);

/// s_k = sum_{i=1}^{k} Arg(z - i + 1) for k = 0..m.
std::vector<double> region_partial_sums(ComplexPoint z, int m);

/// True iff z - m lies in R = S u conj(S) with
/// S = {Arg w >= 0 and sum_{i=1}^m Arg(w - i + 1) < pi}.
bool region_membership(ComplexPoint z, int m);

/// Membership that survives a perturbation of size kSlack, after snapping
/// near-real and near-integer points. A computed root only counts as lying
/// in R + m when this holds.
bool robust_region_membership(ComplexPoint z, int m);

struct RootCertificate {
  DescentSet set;
  std::vector<ComplexPoint> roots;
  std::vector<double> residuals;
  std::vector<Disc> discs;
  std::string radius_rule;
  std::vector<Check> checks;

  bool all_pass() const;
  const Check* find(const std::string& name) const;
};

/// Finds the roots of d(I;z) and runs every localization check. Needs
/// #I >= 1; propagates RootFindingError.
RootCertificate disc_certificate(const DescentSet& I);

}  // namespace descent_lab

#endif  // DESCENT_LAB_ROOTS_HPP
