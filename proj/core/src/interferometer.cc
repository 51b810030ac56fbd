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
#include <numbers>

namespace twopath {

PhaseAngle::PhaseAngle(double radians) : value_(radians) {
    require(std::isfinite(radians), "PhaseAngle: value must be finite");
}

Observable path_operator() {
    return Observable::sigma_z();
}

UnitaryGate phase_shifter(PhaseAngle phi) {
    double h = phi.radians() / 2;
    return UnitaryGate({std::polar(1.0, -h), 0.0, 0.0, std::polar(1.0, h)});
}

UnitaryGate beam_splitter() {
    constexpr double s = std::numbers::sqrt2 / 2;
    return UnitaryGate({s, s, -s, s});
}

StateVector balanced_state(PhaseAngle phi) {
    constexpr double s = std::numbers::sqrt2 / 2;
    double h = phi.radians() / 2;
    return StateVector(std::polar(s, -h), std::polar(s, h));
}

Observable wave_operator(PhaseAngle phi0) {
    double c = std::cos(phi0.radians());
    double s = std::sin(phi0.radians());
    return Observable({0.0, Complex(c, -s), Complex(c, s), 0.0});
}

ScanResult interference_scan(PhaseAngle phi0, std::span<const PhaseAngle> grid) {
    require(!grid.empty(), "interference_scan: grid must be non-empty");
    Observable w = wave_operator(phi0);
    Observable p = path_operator();
    ScanResult out;
    out.points.reserve(grid.size());
    for (PhaseAngle phi : grid) {
        StateVector s = balanced_state(phi);
        out.points.push_back({phi, expectation(w, s), expectation(p, s)});
    }
    return out;
}

StateVector mach_zehnder_output(PhaseAngle phi, const UnitaryGate &splitter) {
    return (splitter * phase_shifter(phi) * splitter).apply(StateVector::down());
}

std::vector<PhaseAngle> linspace(double start, double end, size_t steps) {
    require(steps >= 1, "linspace: steps must be >= 1");
    std::vector<PhaseAngle> out;
    out.reserve(steps);
    if (steps == 1) {
        out.emplace_back(start);
        return out;
    }
    double step = (end - start) / static_cast<double>(steps - 1);
    for (size_t k = 0; k + 1 < steps; k++) {
        out.emplace_back(start + step * static_cast<double>(k));
    }
    out.emplace_back(end);
    return out;
}

}  // namespace twopath
