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

#ifndef TWOPATH_UNCERTAINTY_H
#define TWOPATH_UNCERTAINTY_H

#include "twopath/interferometer.h"
#include "twopath/qalgebra.h"

namespace twopath {

/// Path/wave uncertainty budget for the balanced state |phi> and setup offset phi0.
struct UncertaintyReport {
    PhaseAngle phi;
    PhaseAngle phi0;
    double delta_p = 0;
    double delta_w = 0;
    double product = 0;
    /// (1/2) |<[P, W]>|
    double bound = 0;
    /// product - bound
    double gap = 0;
    /// gap < Tolerances::var
    bool saturated = false;
};

/// (1/2) |<state|[a, b]|state>|
double robertson_bound(const Observable &a, const Observable &b, const StateVector &state);

/// |<cos(phi0) sigma_y - sin(phi0) sigma_x>| for an arbitrary state. Equal to
/// robertson_bound(sigma_z, W(phi0), state) but evaluated without a commutator.
double general_bound_rhs(PhaseAngle phi0, const StateVector &state);

UncertaintyReport duality_report(PhaseAngle phi, PhaseAngle phi0);

/// |d<W>/dphi| = |sin(phi - phi0)|, the fringe slope.
double sensitivity(PhaseAngle phi, PhaseAngle phi0);

}  // namespace twopath

#endif
