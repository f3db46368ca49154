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

#ifndef DESCENT_LAB_CLI_HPP
#define DESCENT_LAB_CLI_HPP

/*
  descent-lab command-line driver.

    compute    polynomial, basis expansion and value table (types A, B, D)
    certify    root certificate as JSON, optional SVG figure
    scan       property scans over every I with max(I) <= --max-m
    enumerate  brute-force histograms
    patterns   consecutive-pattern counts and the peak polynomial check

  Exit codes: 0 success, 1 internal failure, 2 invalid input, 3 a check or
  scan found a violation.
*/

#include <ostream>
#include <string>
#include <utility>

namespace descent_lab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;

/// Parses "a..b" or a single integer. Throws std::invalid_argument on
/// malformed or empty ranges.
std::pair<long, long> parse_range(const std::string& text);

/// DESCENT_LAB_THREADS, or 1 when unset. Throws std::invalid_argument when
/// the variable is not a positive integer.
unsigned default_threads();

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace descent_lab

#endif  // DESCENT_LAB_CLI_HPP
