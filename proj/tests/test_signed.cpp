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

#include "descent_lab/enumerate.hpp"
#include "descent_lab/signed.hpp"

using namespace descent_lab;

namespace {

ExactInt pow2(int e) { return ExactInt(1) << static_cast<mp_bitcnt_t>(e); }

}  // namespace

TEST_SUITE("signed") {
  TEST_CASE("type B values") {
    CHECK(dB_value(SignedDescentSet({1}), 2) == 3);
    CHECK(dB_value(SignedDescentSet({0}), 3) == 7);
    CHECK(dB_value(SignedDescentSet({0, 1}), 2) == 1);
    CHECK(dB_value(SignedDescentSet(), 0) == 1);
    CHECK_THROWS_AS(dB_value(SignedDescentSet({2}), 2), std::invalid_argument);
  }

  TEST_CASE("type B closed forms") {
    BinaryExpPoly f = dB_pie(SignedDescentSet({1}));
    CHECK(f.expo == ExactPoly({0, ExactRational(1, 2)}));
    CHECK(f.plain == ExactPoly::constant(-1));
    f = dB_pie(SignedDescentSet({0}));
    CHECK(f.expo == ExactPoly::constant(1));
    CHECK(f.plain == ExactPoly::constant(-1));
    f = dB_pie(SignedDescentSet());
    CHECK(f.expo.is_zero());
    CHECK(f.plain == ExactPoly::constant(1));
  }

  TEST_CASE("type B root theorem") {
    CHECK(dB_at(SignedDescentSet({0, 2}), 2) == 0);
    CHECK(dB_at(SignedDescentSet({0, 2}), 0) == 0);
    CHECK(dB_at(SignedDescentSet({1}), 1) == 0);
    const auto z = dB_at(SignedDescentSet({0, 2}), std::complex<double>(2.0, 0.0));
    CHECK(std::abs(z) < 1e-12);
  }

  TEST_CASE("type D values") {
    CHECK(dD_value(SignedDescentSet({0}), 3) == 3);
    for (int n = 2; n <= 8; ++n) CHECK(dD_value(SignedDescentSet(), n) == 1);
    CHECK(dD_value(SignedDescentSet({1}), 3) ==
          count_by_descents(std::vector<int>{1}, 3, Group::D));
    CHECK_THROWS_AS(dD_value(SignedDescentSet(), 1), std::invalid_argument);
  }

  TEST_CASE("recursions and closed forms agree with enumeration") {
    for (int n = 2; n <= 7; ++n) {
      const auto hb = descent_histogram(n, Group::B);
      const auto hd = descent_histogram(n, Group::D);
      for (const auto& I : SignedDescentSet::all_subsets(4)) {
        if (I.max() >= n) continue;
        const ExactInt b(hb[index_mask(I.elems())]);
        const ExactInt d(hd[index_mask(I.elems())]);
        CHECK(dB_value(I, n) == b);
        CHECK(dB_pie(I).at(n) == ExactRational(b));
        CHECK(dD_value(I, n) == d);
        CHECK(dD_pie(I).at(n) == ExactRational(d));
      }
    }
  }

  TEST_CASE("partition sums") {
    for (int n = 2; n <= 6; ++n) {
      ExactInt b = 0, d = 0;
      for (const auto& I : SignedDescentSet::all_subsets(n - 1)) {
        b += dB_value(I, n);
        d += dD_value(I, n);
      }
      CHECK(b == factorial(n) * pow2(n));
      CHECK(d == factorial(n) * pow2(n - 1));
    }
  }

  TEST_CASE("corollary identities") {
    const CorollaryReport r = corollary_checks(DescentSet({1}), 2);
    CHECK(r.type_b_sum);
    CHECK(r.type_d_sum);
    CHECK(dB_value(SignedDescentSet({1}), 4) + dB_value(SignedDescentSet({0, 1}), 4) ==
          16 * d_at(DescentSet({1}), 4));
    CHECK(dB_value(SignedDescentSet({1, 2}), 4) + dB_value(SignedDescentSet({0, 1, 2}), 4) == 48);
    for (const auto& I : DescentSet::all_subsets(5)) {
      for (long n = std::max(2, I.max() + 1); n <= 7; ++n) {
        const CorollaryReport c = corollary_checks(I, n);
        CHECK(c.type_b_sum);
        CHECK(c.type_d_sum);
        CHECK(c.type_d_vanish_sum);
      }
    }
  }

  TEST_CASE("type D values on I- are +-1/2, not 0") {
    // d_D(I;n) = d_B(I;n)/2 + (-1)^#I/2 and d_D(I0;n) = d_B(I0;n)/2 - (-1)^#I/2,
    // so at i in I- (a root of the type B forms) the two values are opposite
    // halves. Only their sum vanishes.
    const DescentSet I({1, 3});
    const CorollaryReport r = corollary_checks(I, 4);
    CHECK_FALSE(r.type_d_vanish);
    CHECK(r.type_d_vanish_sum);
    CHECK(dD_at(SignedDescentSet(I, false), 1) == ExactRational(1, 2));
    CHECK(dD_at(SignedDescentSet(I, true), 1) == ExactRational(-1, 2));
    for (const auto& J : DescentSet::all_subsets(6)) {
      const SignedDescentSet plain(J, false);
      const SignedDescentSet zero(J, true);
      const ExactRational sign = J.size() % 2 == 0 ? 1 : -1;
      for (long n = -2; n <= 8; ++n) {
        CHECK(dD_at(plain, n) == dB_at(plain, n) / 2 + sign / 2);
        CHECK(dD_at(zero, n) == dB_at(zero, n) / 2 - sign / 2);
      }
    }
  }
}
