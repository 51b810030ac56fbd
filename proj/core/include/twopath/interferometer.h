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

#ifndef TWOPATH_INTERFEROMETER_H
#define TWOPATH_INTERFEROMETER_H

#include <span>
#include <vector>

#include "twopath/qalgebra.h"

namespace twopath {

/// A phase in radians. Any finite value is accepted; no range reduction.
class PhaseAngle {
   public:
    constexpr PhaseAngle() = default;
    explicit PhaseAngle(double radians);

    constexpr double radians() const {
        return value_;
    }

    friend PhaseAngle operator+(PhaseAngle a, PhaseAngle b) {
        return PhaseAngle(a.value_ + b.value_);
    }
    friend PhaseAngle operator-(PhaseAngle a, PhaseAngle b) {
        return PhaseAngle(a.value_ - b.value_);
    }

   private:
    double value_ = 0;
};

struct ScanPoint {
    PhaseAngle phi;
    double w_expect = 0;
    double p_expect = 0;
};

struct ScanResult {
    std::vector<ScanPoint> points;
};

/// Which-path observable, sigma_z. Eigenvalue +1 on the upper path |psi_+>.
Observable path_operator();

/// exp(-i sigma_z phi / 2) = diag(e^{-i phi/2}, e^{+i phi/2}).
UnitaryGate phase_shifter(PhaseAngle phi);

/// Lossless 50/50 beam splitter (1/sqrt2) [[1, 1], [-1, 1]].
///
/// Chosen so that a path measurement behind it, B^dagger sigma_z B, is sigma_x:
/// the wave observable with zero setup offset.
UnitaryGate beam_splitter();

/// (e^{-i phi/2}, e^{+i phi/2}) / sqrt2. Equal probability in both arms.
StateVector balanced_state(PhaseAngle phi);

/// cos(phi0) sigma_x + sin(phi0) sigma_y
Observable wave_operator(PhaseAngle phi0);

/// Fringe <phi|W(phi0)|phi> and path mean <phi|P|phi> over a caller-supplied grid.
/// Throws ValidationError on an empty grid.
ScanResult interference_scan(PhaseAngle phi0, std::span<const PhaseAngle> grid);

/// Mach-Zehnder pipeline B . Phi(phi) . B applied to the lower-port input |psi_->.
StateVector mach_zehnder_output(PhaseAngle phi, const UnitaryGate &splitter = beam_splitter());

/// `steps` evenly spaced angles from `start` to `end` inclusive; one point when steps == 1.
std::vector<PhaseAngle> linspace(double start, double end, size_t steps);

}  // namespace twopath

#endif
