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

#ifndef TWOPATH_TESTS_TEST_UTIL_H
#define TWOPATH_TESTS_TEST_UTIL_H

#include <cstdint>
#include <random>

#include "oracles.h"
#include "twopath/twopath.h"

namespace twopath::testing {

inline Observable to_observable(const oracle::Mat &m) {
    return Observable({m[0][0], m[0][1], m[1][0], m[1][1]});
}

inline StateVector to_state(const oracle::Vec &v) {
    return StateVector(v[0], v[1]);
}

inline oracle::Vec to_vec(const StateVector &s) {
    return {s[0], s[1]};
}

inline oracle::Mat to_mat(const Matrix2 &m) {
    return {{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}};
}

/// Fixed-seed engine so each test sees the same samples on every run.
inline std::mt19937_64 test_rng(uint64_t salt = 0) {
    return std::mt19937_64(0x5EED0000ULL + salt);
}

inline double uniform_angle(std::mt19937_64 &g) {
    return std::uniform_real_distribution<double>(-3.141592653589793, 3.141592653589793)(g);
}

}  // namespace twopath::testing

#endif
