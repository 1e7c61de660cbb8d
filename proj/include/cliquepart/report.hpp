// Copyright 2026 The cliquepart Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLIQUEPART_REPORT_HPP_
#define CLIQUEPART_REPORT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliquepart/enumeration.hpp"

namespace cliquepart {

// One named acceptance check.
struct Check {
  std::string id;
  int criterion = 0;
  std::string params;
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed_seconds = 0;

  bool operator==(const Check&) const = default;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  bool operator==(const VerificationReport&) const = default;
};

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text form: a `key: value` summary, a blank line, then one graph6 per
// line, each followed by its aut order and group when known.
std::string to_text(const EnumerationReport& report, bool timings = true);

// JSON schema (keys in this order):
//   {"n", "v", "complete", "count", "nodes", "leaves", "jobs",
//    "elapsed_seconds" (omitted without timings),
//    "graphs": [{"graph6", "aut_order", "group"}]}
// aut_order is a decimal string so that large orders stay exact.
std::string to_json(const EnumerationReport& report, bool timings = true);
EnumerationReport enumeration_from_json(std::string_view text);

// {"passed", "checks": [{"id", "criterion", "params", "expected",
//  "computed", "pass", "elapsed_seconds"}]}
std::string to_json(const VerificationReport& report, bool timings = true);
VerificationReport verification_from_json(std::string_view text);

// One line per check: PASS/FAIL, id, params, expected vs computed.
std::string to_text(const VerificationReport& report, bool timings = true);

}  // namespace cliquepart

#endif  // CLIQUEPART_REPORT_HPP_
