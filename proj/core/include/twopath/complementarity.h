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

#ifndef TWOPATH_COMPLEMENTARITY_H
#define TWOPATH_COMPLEMENTARITY_H

#include "twopath/interferometer.h"
#include "twopath/qalgebra.h"

namespace twopath {

/// Orthonormal pair of eigenvectors labelled +1 and -1.
class EigenBasis {
   public:
    /// Throws ValidationError unless <plus|minus> = 0 within Tolerances::norm.
    EigenBasis(StateVector plus, StateVector minus);

    /// {|psi_+>, |psi_->}, the eigenbasis of the path operator.
    static EigenBasis computational();

    /// Eigenvectors of a non-degenerate observable, ordered by eigenvalue.
    static EigenBasis of(const Observable &obs);

    const StateVector &plus() const {
        return plus_;
    }
    const StateVector &minus() const {
        return minus_;
    }
    static constexpr double plus_label = +1;
    static constexpr double minus_label = -1;

   private:
    StateVector plus_;
    StateVector minus_;
};

struct ComplementarityVerdict {
    bool complementary = false;
    /// max over the four cross pairs of | |<a_i|b_j>|^2 - 1/2 |
    double max_deviation = 0;
};

/// The four values that must vanish for complementary P and W:
/// <w+|P|w+>, <w-|P|w->, <p+|W|p+>, <p-|W|p->.
struct MutualZeroResiduals {
    double p_on_wave_plus = 0;
    double p_on_wave_minus = 0;
    double w_on_path_plus = 0;
    double w_on_path_minus = 0;

    double max_abs() const;
};

/// Solves <w|sigma_z|w> = 0 together with normalization and <w+|w-> = 0.
///
/// The constraints fix both amplitude moduli to 1/sqrt2 and leave one relative
/// phase free; that phase is `phi0`. The minus vector is the orthogonal
/// solution, with relative phase shifted by pi.
EigenBasis derive_wave_eigenbasis(PhaseAngle phi0);

/// Relative phase arg(a1) - arg(a0) of a state satisfying <w|sigma_z|w> = 0,
/// reduced to (-pi, pi]. Throws ValidationError if the path mean is not zero
/// within Tolerances::comp.
PhaseAngle wave_phase_of(const StateVector &state);

/// Spectral assembly (+1)|plus><plus| + (-1)|minus><minus|.
Observable observable_from_eigensystem(const EigenBasis &basis);

/// Mutual unbiasedness test: every cross overlap squared equals 1/2 within
/// Tolerances::comp.
ComplementarityVerdict is_complementary(const EigenBasis &a, const EigenBasis &b);

/// `path` must be Hermitian with eigenvalues +1 and -1 (ValidationError otherwise).
/// The wave observable is assembled from `wave_basis`.
MutualZeroResiduals check_mutual_zero_expectation(const Observable &path, const EigenBasis &wave_basis);

/// Wraps an angle to (-pi, pi].
double wrap_angle(double radians);

}  // namespace twopath

#endif
