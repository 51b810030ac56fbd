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

#include "twopath/complementarity.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace twopath {

namespace {

struct SquaredModuli {
    double upper;
    double lower;
};

// Squared amplitude moduli fixed by a prescribed path mean <sigma_z> = m and
// normalization:  |a0|^2 - |a1|^2 = m,  |a0|^2 + |a1|^2 = 1.
SquaredModuli solve_moduli(double path_mean) {
    return {(1 + path_mean) / 2, (1 - path_mean) / 2};
}

// (r0 e^{i alpha}, r1 e^{i beta})
StateVector from_polar(SquaredModuli moduli, double alpha, double beta) {
    return StateVector(std::polar(std::sqrt(moduli.upper), alpha), std::polar(std::sqrt(moduli.lower), beta));
}

}  // namespace

double wrap_angle(double radians) {
    constexpr double pi = std::numbers::pi;
    double r = std::remainder(radians, 2 * pi);
    if (r <= -pi) {
        r += 2 * pi;
    }
    return r;
}

EigenBasis::EigenBasis(StateVector plus, StateVector minus) : plus_(plus), minus_(minus) {
    require(std::abs(inner(plus_, minus_)) < Tolerances::norm, "EigenBasis: orthonormality <plus|minus> = 0 violated");
}

EigenBasis EigenBasis::computational() {
    return EigenBasis(StateVector::up(), StateVector::down());
}

EigenBasis EigenBasis::of(const Observable &obs) {
    Eigensystem es = eigensystem(obs);
    require(!es.degenerate(), "EigenBasis: observable must be non-degenerate");
    return EigenBasis(es.plus, es.minus);
}

EigenBasis derive_wave_eigenbasis(PhaseAngle phi0) {
    // Zero path mean: both moduli squared are 1/2.
    SquaredModuli moduli = solve_moduli(0);

    // The global phase is free; split the relative phase symmetrically.
    double alpha = -phi0.radians() / 2;
    double beta = phi0.radians() / 2;
    StateVector plus = from_polar(moduli, alpha, beta);

    // Same moduli; <plus|minus> = (e^{i(a'-a)} + e^{i(b'-b)}) / 2 vanishes iff
    // the relative phase moves by pi. Put the shift on the upper amplitude.
    StateVector minus = from_polar(moduli, alpha + std::numbers::pi, beta);
    return EigenBasis(plus, minus);
}

PhaseAngle wave_phase_of(const StateVector &state) {
    require(std::abs(expectation(Observable::sigma_z(), state)) < Tolerances::comp,
            "wave_phase_of: state must satisfy <sigma_z> = 0");
    return PhaseAngle(wrap_angle(std::arg(state[1]) - std::arg(state[0])));
}

Observable observable_from_eigensystem(const EigenBasis &basis) {
    Matrix2 m = EigenBasis::plus_label * outer(basis.plus()) + EigenBasis::minus_label * outer(basis.minus());
    // Rounding in the outer products can leave a ~1e-17 anti-Hermitian part.
    return Observable(0.5 * (m + m.adjoint()));
}

ComplementarityVerdict is_complementary(const EigenBasis &a, const EigenBasis &b) {
    const StateVector *as[] = {&a.plus(), &a.minus()};
    const StateVector *bs[] = {&b.plus(), &b.minus()};
    double worst = 0;
    for (const auto *u : as) {
        for (const auto *v : bs) {
            worst = std::max(worst, std::abs(std::norm(inner(*u, *v)) - 0.5));
        }
    }
    return {worst < Tolerances::comp, worst};
}

double MutualZeroResiduals::max_abs() const {
    return std::max({std::abs(p_on_wave_plus), std::abs(p_on_wave_minus), std::abs(w_on_path_plus),
                     std::abs(w_on_path_minus)});
}

MutualZeroResiduals check_mutual_zero_expectation(const Observable &path, const EigenBasis &wave_basis) {
    Eigensystem es = eigensystem(path);
    require(std::abs(es.plus_value - 1) < Tolerances::herm && std::abs(es.minus_value + 1) < Tolerances::herm,
            "check_mutual_zero_expectation: path observable must have eigenvalues +1 and -1");
    Observable wave = observable_from_eigensystem(wave_basis);
    return {
        expectation(path, wave_basis.plus()),
        expectation(path, wave_basis.minus()),
        expectation(wave, es.plus),
        expectation(wave, es.minus),
    };
}

}  // namespace twopath
