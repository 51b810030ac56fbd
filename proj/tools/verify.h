// Copyright 2026 The twopath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWOPATH_TOOLS_VERIFY_H
#define TWOPATH_TOOLS_VERIFY_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace twopath::tools {

/// Deliberate defects used to check that the suite notices them.
enum class InjectedFault {
    None,
    /// Beam splitter rotated away from the 50/50 setting.
    BeamSplitter,
    /// Wave eigenbasis replaced by one that is not unbiased w.r.t. the path basis.
    NonComplementaryBasis,
};

struct VerifyOptions {
    /// Monte Carlo shots per configuration; 0 runs the analytic checks only.
    uint64_t shots = 0;
    uint64_t seed = 1;
    InjectedFault fault = InjectedFault::None;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyOptions &options);

/// Writes one "PASS name (detail)" / "FAIL name (detail)" line per check and a
/// summary. Returns true iff every check passed.
bool print_report(const std::vector<CheckResult> &results, std::ostream &out);

}  // namespace twopath::tools

#endif
