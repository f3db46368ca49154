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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "descent_lab/roots.hpp"

using namespace descent_lab;

namespace {

bool has_root(const std::vector<ComplexPoint>& roots, ComplexPoint z) {
  for (const auto& r : roots) {
    if (std::abs(r - z) < 1e-9) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("roots") {
  TEST_CASE("complex evaluation") {
    CHECK(std::abs(eval_complex(d_poly(DescentSet({1, 2})), 2.0)) < 1e-15);
    CHECK(std::abs(eval_complex(d_poly(DescentSet({1})), {1.0, 1.0}) - ComplexPoint(0, 1)) < 1e-15);
    CHECK(std::abs(eval_complex(d_poly(DescentSet({1, 3})), -1.0)) < 1e-15);
  }

  TEST_CASE("root finding") {
    auto r = find_roots(d_poly(DescentSet({1, 2})));
    REQUIRE(r.size() == 2);
    CHECK(has_root(r, 1.0));
    CHECK(has_root(r, 2.0));
    r = find_roots(d_poly(DescentSet({1, 3})));
    REQUIRE(r.size() == 3);
    CHECK(has_root(r, -1.0));
    CHECK(has_root(r, 1.0));
    CHECK(has_root(r, 3.0));
    r = find_roots(d_poly(DescentSet({2})));
    CHECK(has_root(r, -1.0));
    CHECK(has_root(r, 2.0));
    CHECK_THROWS_AS(find_roots(ExactPoly::constant(3)), std::invalid_argument);
    // x^2 + 1 has a conjugate pair and no real root.
    r = find_roots(ExactPoly({1, 0, 1}));
    CHECK(has_root(r, {0.0, 1.0}));
    CHECK(has_root(r, {0.0, -1.0}));
  }

  TEST_CASE("Cauchy bound") {
    const std::vector<ExactRational> c2{-2, 0, 1};
    CHECK(cauchy_bound(c2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    const std::vector<ExactRational> lin{-5, 1};
    CHECK(cauchy_bound(lin) == doctest::Approx(5.0));
    const std::vector<ExactRational> cubic{0, 5, 6, 2};
    CHECK(cauchy_bound(cubic) <= 4.0);
    for (int m = 1; m <= 7; ++m) {
      std::vector<ExactRational> c(static_cast<std::size_t>(m) + 1, 0);
      c[0] = -ExactRational(factorial(m));
      c.back() = 1;
      CHECK(cauchy_bound(c) == doctest::Approx(std::pow(factorial(m).get_d(), 1.0 / m)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(cauchy_bound(std::vector<ExactRational>{3}), std::invalid_argument);
  }

  TEST_CASE("falling factorial check") {
    CHECK(falling_coeffs_check(DescentSet({3})).pass);
    CHECK(falling_coeffs_check(DescentSet({1, 3})).pass);
    CHECK(falling_coeffs_check(DescentSet()).pass);
    const auto f = to_falling_factorial_basis(d_poly(DescentSet({1, 3})));
    CHECK(f[2] == 0);
  }

  TEST_CASE("radii") {
    CHECK(bound_rho_m(1) == 1.0);
    CHECK(bound_rho_m(2) == doctest::Approx(2.0 * std::sqrt(2.0 / std::numbers::e)).epsilon(1e-12));
    for (int m = 1; m <= 20; ++m) {
      CHECK(bound_rho_m(m) <= m);
      CHECK(bound_rho_m(m) > m / std::numbers::e);
    }
    CHECK(bound_general_rho(DescentSet({1, 3})) == doctest::Approx(std::sqrt(12.0)));
    CHECK(bound_general_rho(DescentSet({2, 3})) == doctest::Approx(7.0));
    std::string rule;
    disc_radius(DescentSet({4}), &rule);
    CHECK(rule == "rho_m");
    CHECK(disc_radius(DescentSet({1, 4}), &rule) == 4.0);
    CHECK(rule == "m");
    disc_radius(DescentSet({1, 2, 4}), &rule);
    CHECK(rule == "general");
  }

  TEST_CASE("region") {
    CHECK(region_membership({2.0, 1.0}, 1));
    CHECK_FALSE(region_membership({-1.0, 0.0}, 1));
    CHECK(principal_arg({-1.0, -0.0}) == doctest::Approx(std::numbers::pi));
    CHECK(std::isinf(principal_arg(0.0)));
    // Conjugate symmetry of R.
    for (double x = -3; x <= 6; x += 0.37) {
      for (double y = 0.05; y <= 4; y += 0.41) {
        CHECK(region_membership({x, y}, 3) == region_membership({x, -y}, 3));
      }
    }
  }

  TEST_CASE("certificates") {
    const RootCertificate c2 = disc_certificate(DescentSet({2}));
    CHECK(c2.all_pass());
    CHECK(c2.discs.size() == 2);
    CHECK(c2.discs[0].radius == doctest::Approx(1.7155).epsilon(1e-4));
    const RootCertificate c13 = disc_certificate(DescentSet({1, 3}));
    CHECK(c13.all_pass());
    CHECK(c13.radius_rule == "m");
    CHECK(disc_certificate(DescentSet({1, 2})).find("root_theorem_exact")->pass);
    CHECK_THROWS_AS(disc_certificate(DescentSet()), std::invalid_argument);
  }
}
