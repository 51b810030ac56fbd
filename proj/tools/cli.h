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

#ifndef TWOPATH_TOOLS_CLI_H
#define TWOPATH_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twopath/measurement.h"

namespace twopath::tools {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

enum class OrderSelection { PathThenWave, WaveThenPath, Both };

struct RunConfig {
    double phi0 = 0;
    double phi_start = -3.141592653589793;
    double phi_end = 3.141592653589793;
    uint64_t steps = 101;
    uint64_t shots = 10000;
    uint64_t seed = 1;
    std::optional<std::string> output_path;
    OrderSelection order = OrderSelection::Both;
    unsigned workers = 1;

    /// Throws ValidationError when steps == 0 or phi_start > phi_end.
    void validate() const;
};

inline constexpr const char *kScanHeader = "phi,w_expectation,p_expectation,delta_p,delta_w,robertson_bound,gap";
inline constexpr const char *kSampleHeader =
    "phi,order,shots,first_mean,first_variance,second_mean,second_variance,second_plus,second_minus,chi2,pass";

/// 17 significant digits, enough to round-trip any double.
std::string format_number(double x);

/// Analytic fringe and uncertainty table, one row per grid point.
std::string cmd_scan(const RunConfig &config);

/// Monte Carlo table: one row per (grid point, selected order).
std::string cmd_sample(const RunConfig &config);

/// Entry point shared by the executable and the tests. Returns an ExitCode.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace twopath::tools

#endif
