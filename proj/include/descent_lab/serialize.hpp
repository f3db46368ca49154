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

#ifndef DESCENT_LAB_SERIALIZE_HPP
#define DESCENT_LAB_SERIALIZE_HPP

// JSON, CSV and SVG renderings. All output is deterministic: JSON objects
// keep sorted keys and doubles print in shortest round-trip form.

#include <string>
#include <vector>

#include <json.hpp>

#include "descent_lab/coeffs.hpp"
#include "descent_lab/exactmath.hpp"
#include "descent_lab/roots.hpp"
#include "descent_lab/signed.hpp"

namespace descent_lab {

inline constexpr const char* kCsvVersionLine = "# descent-lab v1";

/// Coefficients from degree 0 up, as exact rational strings.
nlohmann::json poly_json(const ExactPoly& p);
nlohmann::json binary_exp_json(const BinaryExpPoly& f);
nlohmann::json certificate_json(const RootCertificate& cert);

/// Space separated values, e.g. "0 5 6 2".
std::string join_values(const std::vector<ExactInt>& v);
/// Elements separated by spaces; "" for the empty set.
std::string set_field(std::span<const int> set);

std::string coeff_csv_header();
std::string coeff_csv_row(const CoeffReport& r);

/// Roots as dots, discs shaded grey, the region R + m shaded and outlined.
std::string certificate_svg(const RootCertificate& cert, int pixels = 640);

}  // namespace descent_lab

#endif  // DESCENT_LAB_SERIALIZE_HPP
