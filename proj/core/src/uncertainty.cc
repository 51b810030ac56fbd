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

#include "twopath/uncertainty.h"

#include <cmath>

namespace twopath {

double robertson_bound(const Observable &a, const Observable &b, const StateVector &state) {
    return 0.5 * std::abs(matrix_element(commutator(a, b), state));
}

double general_bound_rhs(PhaseAngle phi0, const StateVector &state) {
    double c = std::cos(phi0.radians());
    double s = std::sin(phi0.radians());
    return std::abs(c * expectation(Observable::sigma_y(), state) - s * expectation(Observable::sigma_x(), state));
}

UncertaintyReport duality_report(PhaseAngle phi, PhaseAngle phi0) {
    StateVector state = balanced_state(phi);
    Observable p = path_operator();
    Observable w = wave_operator(phi0);

    UncertaintyReport r;
    r.phi = phi;
    r.phi0 = phi0;
    r.delta_p = spread(p, state);
    r.delta_w = spread(w, state);
    r.product = r.delta_p * r.delta_w;
    r.bound = robertson_bound(p, w, state);
    r.gap = r.product - r.bound;
    r.saturated = std::abs(r.gap) < Tolerances::var;
    return r;
}

double sensitivity(PhaseAngle phi, PhaseAngle phi0) {
    return std::abs(std::sin(phi.radians() - phi0.radians()));
}

}  // namespace twopath
