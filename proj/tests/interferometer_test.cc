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

#include "twopath/interferometer.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "gtest/gtest.h"

#include "test_util.h"

using namespace twopath;
using namespace twopath::testing;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double s2 = std::numbers::sqrt2 / 2;
}  // namespace

TEST(interferometer, phase_angle_rejects_non_finite) {
    EXPECT_THROW(PhaseAngle{std::numeric_limits<double>::infinity()}, ValidationError);
    EXPECT_THROW(PhaseAngle{std::numeric_limits<double>::quiet_NaN()}, ValidationError);
    EXPECT_EQ(PhaseAngle(1e6).radians(), 1e6);
}

TEST(interferometer, path_operator_is_sigma_z) {
    Observable p = path_operator();
    PauliCoefficients c = pauli_decompose(p);
    EXPECT_EQ(c.c0, 0);
    EXPECT_EQ(c.cx, 0);
    EXPECT_EQ(c.cy, 0);
    EXPECT_EQ(c.cz, 1);

    Eigensystem es = eigensystem(p);
    EXPECT_EQ(es.plus_value, 1);
    EXPECT_EQ(es.minus_value, -1);
    EXPECT_TRUE(same_ray(es.plus, StateVector::up()));
    EXPECT_TRUE(same_ray(es.minus, StateVector::down()));
    EXPECT_EQ(expectation(p, StateVector::up()), 1);
}

TEST(interferometer, path_mean_vanishes_on_balanced_states) {
    auto g = test_rng(10);
    for (int k = 0; k < 32; k++) {
        EXPECT_NEAR(expectation(path_operator(), balanced_state(PhaseAngle(uniform_angle(g)))), 0, 1e-15);
    }
}

TEST(interferometer, phase_shifter_examples) {
    EXPECT_EQ(phase_shifter(PhaseAngle(0)).matrix(), Matrix2::identity());

    auto g = test_rng(11);
    for (int k = 0; k < 100; k++) {
        PhaseAngle a(uniform_angle(g));
        PhaseAngle b(uniform_angle(g));
        UnitaryGate ab = phase_shifter(a) * phase_shifter(b);
        UnitaryGate sum = phase_shifter(a + b);
        // Compare as operators up to a global phase: |tr(U^dagger V)| = 2.
        ASSERT_NEAR(std::abs((ab.matrix().adjoint() * sum.matrix()).trace()), 2, 1e-13);
        ASSERT_TRUE(same_ray(phase_shifter(a).apply(balanced_state(PhaseAngle(0))), balanced_state(a)));
    }
}

TEST(interferometer, beam_splitter_examples) {
    UnitaryGate b = beam_splitter();
    EXPECT_LT(max_abs_diff(b.conjugate(path_operator()).matrix(), Observable::sigma_x().matrix()), 1e-12);
    EXPECT_NEAR(std::norm(inner(StateVector::up(), b.apply(StateVector::down()))), 0.5, 1e-15);
    EXPECT_LT(b.unitarity_residual(), 1e-15);
    EXPECT_NEAR(b.matrix().determinant().real(), 1, 1e-15);
    // Lower-port input lands on the balanced state with phi = 0.
    EXPECT_TRUE(same_ray(b.apply(StateVector::down()), balanced_state(PhaseAngle(0))));
}

TEST(interferometer, balanced_state_examples) {
    EXPECT_TRUE(same_ray(balanced_state(PhaseAngle(0)), StateVector(s2, s2)));
    auto g = test_rng(12);
    for (int k = 0; k < 100; k++) {
        double phi0 = uniform_angle(g);
        StateVector s = balanced_state(PhaseAngle(phi0));
        ASSERT_NEAR(std::norm(s[0]), 0.5, 1e-15);
        ASSERT_NEAR(std::norm(s[1]), 0.5, 1e-15);
        // |omega_+> written out directly.
        StateVector omega_plus(std::polar(s2, -phi0 / 2), std::polar(s2, phi0 / 2));
        ASSERT_TRUE(same_ray(s, omega_plus));
    }
}

TEST(interferometer, wave_operator_examples) {
    EXPECT_LT(max_abs_diff(wave_operator(PhaseAngle(0)).matrix(), Observable::sigma_x().matrix()), 1e-15);
    EXPECT_LT(max_abs_diff(wave_operator(PhaseAngle(0)).matrix(), beam_splitter().conjugate(path_operator()).matrix()),
              1e-12);

    auto g = test_rng(13);
    for (int k = 0; k < 32; k++) {
        double phi0 = uniform_angle(g);
        Observable w = wave_operator(PhaseAngle(phi0));
        Eigensystem es = eigensystem(w);
        ASSERT_NEAR(es.plus_value, 1, 1e-15);
        ASSERT_NEAR(es.minus_value, -1, 1e-15);
        ASSERT_LT(std::abs(w.matrix().trace()), 1e-15);
        ASSERT_LT(w.hermiticity_residual(), 1e-15);
        // Periodic in phi0; the only difference is rounding of phi0 + 2 pi.
        ASSERT_LT(max_abs_diff(wave_operator(PhaseAngle(phi0 + 2 * pi)).matrix(), w.matrix()), 1e-14);
    }
}

TEST(interferometer, interference_scan_examples) {
    std::vector<PhaseAngle> grid{PhaseAngle(0), PhaseAngle(pi / 2), PhaseAngle(pi)};
    ScanResult r = interference_scan(PhaseAngle(0), grid);
    ASSERT_EQ(r.points.size(), 3u);
    EXPECT_NEAR(r.points[0].w_expect, 1, 1e-12);
    EXPECT_NEAR(r.points[1].w_expect, 0, 1e-12);
    EXPECT_NEAR(r.points[2].w_expect, -1, 1e-12);
    for (const auto &pt : r.points) {
        EXPECT_NEAR(pt.p_expect, 0, 1e-12);
    }

    std::vector<PhaseAngle> one{PhaseAngle(pi / 2)};
    EXPECT_NEAR(interference_scan(PhaseAngle(pi / 2), one).points[0].w_expect, 1, 1e-12);

    EXPECT_THROW(interference_scan(PhaseAngle(0), std::vector<PhaseAngle>{}), ValidationError);
}

TEST(interferometer, interference_scan_matches_explicit_sum) {
    auto g = test_rng(14);
    for (int k = 0; k < 16; k++) {
        double phi0 = uniform_angle(g);
        std::vector<PhaseAngle> grid = linspace(-4, 4, 257);
        ScanResult r = interference_scan(PhaseAngle(phi0), grid);
        oracle::Mat w{{{0, std::polar(1.0, -phi0)}, {std::polar(1.0, phi0), 0}}};
        for (const ScanPoint &pt : r.points) {
            double h = pt.phi.radians() / 2;
            oracle::Vec s{std::polar(s2, -h), std::polar(s2, h)};
            ASSERT_NEAR(pt.w_expect, oracle::sandwich(w, s).real(), 1e-14);
            ASSERT_NEAR(pt.w_expect, expectation(wave_operator(PhaseAngle(phi0)), balanced_state(pt.phi)), 1e-15);
            ASSERT_GE(pt.w_expect, -1);
            ASSERT_LE(pt.w_expect, 1);
        }
    }
}

TEST(interferometer, fringe_has_unit_visibility) {
    auto g = test_rng(15);
    for (int k = 0; k < 8; k++) {
        ScanResult r = interference_scan(PhaseAngle(uniform_angle(g)), linspace(-pi, pi, 100001));
        double best = 0;
        for (const auto &pt : r.points) {
            best = std::max(best, std::abs(pt.w_expect));
        }
        EXPECT_NEAR(best, 1, 1e-9);
    }
}

// Characterization: with B = [[1, 1], [-1, 1]]/sqrt2 the full Mach-Zehnder
// pipeline on the lower-port input gives <sigma_z> = cos(phi), zero offset.
TEST(interferometer, pipeline_fringe_is_unit_cosine) {
    for (PhaseAngle phi : linspace(-2 * pi, 2 * pi, 401)) {
        double z = expectation(path_operator(), mach_zehnder_output(phi));
        ASSERT_NEAR(z, std::cos(phi.radians()), 1e-14);
    }
}

TEST(interferometer, linspace_endpoints) {
    auto g = linspace(-1, 2, 4);
    ASSERT_EQ(g.size(), 4u);
    EXPECT_EQ(g.front().radians(), -1);
    EXPECT_EQ(g.back().radians(), 2);
    EXPECT_DOUBLE_EQ(g[1].radians(), 0);
    EXPECT_EQ(linspace(0.5, 9, 1).front().radians(), 0.5);
    EXPECT_THROW(linspace(0, 1, 0), ValidationError);
}
