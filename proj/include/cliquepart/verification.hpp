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

#ifndef CLIQUEPART_VERIFICATION_HPP_
#define CLIQUEPART_VERIFICATION_HPP_

#include <cstdint>
#include <functional>
#include <string>

#include "cliquepart/report.hpp"

namespace cliquepart {

struct AcceptanceOptions {
  // Adds the (5,4) count, the (6,4)/(7,4) lower bounds and 8-vertex scans.
  bool long_mode = false;
  std::uint64_t seed = 20260116;
  int jobs = 1;
  // Directory holding case-rows-3-4.txt, maximal-4-4.txt and cases-3-4.txt.
  std::string fixture_dir;
  // Wall-clock budget of each lower-bound run in long mode.
  double lower_bound_seconds = 1800;
  // Called after every check, in order.
  std::function<void(const Check&)> on_check;
};

// $CLIQUEPART_FIXTURES, else the directory configured at build time.
std::string default_fixture_dir();

// Runs every acceptance check. Each check is isolated: an exception
// (a malformed fixture, say) fails that check and the run continues.
VerificationReport run_acceptance(const AcceptanceOptions& options);

}  // namespace cliquepart

#endif  // CLIQUEPART_VERIFICATION_HPP_
