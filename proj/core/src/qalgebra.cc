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

#include "twopath/qalgebra.h"

#include <algorithm>
#include <cmath>

namespace twopath {

namespace {

bool is_finite(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

bool is_finite(const Matrix2 &m) {
    return std::all_of(m.m.begin(), m.m.end(), [](Complex c) {
        return is_finite(c);
    });
}

}  // namespace

void require(bool ok, const std::string &message) {
    if (!ok) {
        throw ValidationError(message);
    }
}

Matrix2 Matrix2::adjoint() const {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

Complex Matrix2::trace() const {
    return m[0] + m[3];
}

Complex Matrix2::determinant() const {
    return m[0] * m[3] - m[1] * m[2];
}

double Matrix2::max_abs() const {
    double r = 0;
    for (const auto &c : m) {
        r = std::max(r, std::abs(c));
    }
    return r;
}

Matrix2 operator+(const Matrix2 &a, const Matrix2 &b) {
    Matrix2 r;
    for (size_t k = 0; k < 4; k++) {
        r.m[k] = a.m[k] + b.m[k];
    }
    return r;
}

Matrix2 operator-(const Matrix2 &a, const Matrix2 &b) {
    Matrix2 r;
    for (size_t k = 0; k < 4; k++) {
        r.m[k] = a.m[k] - b.m[k];
    }
    return r;
}

Matrix2 operator*(const Matrix2 &a, const Matrix2 &b) {
    return {
        a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0),
        a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
        a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0),
        a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1),
    };
}

Matrix2 operator*(Complex s, const Matrix2 &a) {
    Matrix2 r;
    for (size_t k = 0; k < 4; k++) {
        r.m[k] = s * a.m[k];
    }
    return r;
}

double max_abs_diff(const Matrix2 &a, const Matrix2 &b) {
    return (a - b).max_abs();
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(Complex a0, Complex a1) : amplitudes_{a0, a1} {
    require(is_finite(a0) && is_finite(a1), "StateVector: amplitudes must be finite");
    require(std::abs(norm_residual()) < Tolerances::norm, "StateVector: normalization |a0|^2 + |a1|^2 = 1 violated");
}

StateVector StateVector::normalized(Complex a0, Complex a1) {
    require(is_finite(a0) && is_finite(a1), "StateVector: amplitudes must be finite");
    double n = std::sqrt(std::norm(a0) + std::norm(a1));
    require(n > 0, "StateVector: cannot normalize the zero vector");
    return StateVector(a0 / n, a1 / n);
}

StateVector StateVector::up() {
    return StateVector(Unchecked{}, 1.0, 0.0);
}

StateVector StateVector::down() {
    return StateVector(Unchecked{}, 0.0, 1.0);
}

double StateVector::norm_residual() const {
    return std::norm(amplitudes_[0]) + std::norm(amplitudes_[1]) - 1.0;
}

Complex inner(const StateVector &s, const StateVector &t) {
    return std::conj(s[0]) * t[0] + std::conj(s[1]) * t[1];
}

bool same_ray(const StateVector &s, const StateVector &t) {
    return std::abs(inner(s, t)) > 1.0 - Tolerances::norm;
}

Matrix2 outer(const StateVector &s) {
    return {
        s[0] * std::conj(s[0]),
        s[0] * std::conj(s[1]),
        s[1] * std::conj(s[0]),
        s[1] * std::conj(s[1]),
    };
}

StateVector canonical_phase(const StateVector &state) {
    size_t k = std::abs(state[0]) > 0 ? 0 : 1;
    double magnitude = std::abs(state[k]);
    Complex phase = std::conj(state[k]) / magnitude;
    std::array<Complex, 2> a{phase * state[0], phase * state[1]};
    // The product leaves ~1e-17 in the imaginary part; pin it.
    a[k] = magnitude;
    return StateVector::normalized(a[0], a[1]);
}

// ---------------------------------------------------------------------------
// Observable

Observable::Observable(const Matrix2 &matrix) : matrix_(matrix) {
    require(is_finite(matrix), "Observable: matrix entries must be finite");
    require(hermiticity_residual() < Tolerances::herm, "Observable: Hermiticity M = M^dagger violated");
}

Observable Observable::identity() {
    return Observable(Matrix2::identity());
}

Observable Observable::sigma_x() {
    return Observable({0.0, 1.0, 1.0, 0.0});
}

Observable Observable::sigma_y() {
    return Observable({0.0, Complex(0, -1), Complex(0, 1), 0.0});
}

Observable Observable::sigma_z() {
    return Observable({1.0, 0.0, 0.0, -1.0});
}

double Observable::hermiticity_residual() const {
    return max_abs_diff(matrix_, matrix_.adjoint());
}

// ---------------------------------------------------------------------------
// UnitaryGate

UnitaryGate::UnitaryGate(const Matrix2 &matrix) : matrix_(matrix) {
    require(is_finite(matrix), "UnitaryGate: matrix entries must be finite");
    require(unitarity_residual() < Tolerances::unit, "UnitaryGate: unitarity U U^dagger = I violated");
}

UnitaryGate UnitaryGate::identity() {
    return UnitaryGate(Matrix2::identity());
}

UnitaryGate UnitaryGate::adjoint() const {
    return UnitaryGate(matrix_.adjoint());
}

double UnitaryGate::unitarity_residual() const {
    return max_abs_diff(matrix_ * matrix_.adjoint(), Matrix2::identity());
}

StateVector UnitaryGate::apply(const StateVector &state) const {
    const auto &u = matrix_;
    return StateVector(u(0, 0) * state[0] + u(0, 1) * state[1], u(1, 0) * state[0] + u(1, 1) * state[1]);
}

Observable UnitaryGate::conjugate(const Observable &obs) const {
    return Observable(matrix_.adjoint() * obs.matrix() * matrix_);
}

UnitaryGate operator*(const UnitaryGate &a, const UnitaryGate &b) {
    return UnitaryGate(a.matrix_ * b.matrix_);
}

// ---------------------------------------------------------------------------
// Measures

Complex matrix_element(const Matrix2 &m, const StateVector &state) {
    Complex m0 = m(0, 0) * state[0] + m(0, 1) * state[1];
    Complex m1 = m(1, 0) * state[0] + m(1, 1) * state[1];
    return std::conj(state[0]) * m0 + std::conj(state[1]) * m1;
}

double expectation(const Observable &obs, const StateVector &state) {
    // Hermiticity makes the imaginary part a rounding artifact. Rounding can
    // also step just past the spectrum, so clamp to [lambda_min, lambda_max].
    double e = matrix_element(obs.matrix(), state).real();
    PauliCoefficients c = pauli_decompose(obs);
    double r = std::sqrt(c.cx * c.cx + c.cy * c.cy + c.cz * c.cz);
    return std::clamp(e, c.c0 - r, c.c0 + r);
}

double variance(const Observable &obs, const StateVector &state) {
    // <A^2> - <A>^2 evaluated as |(A - <A>) psi|^2. The subtracted form loses
    // all significant digits of the standard deviation near eigenstates.
    const Matrix2 &m = obs.matrix();
    double mean = expectation(obs, state);
    Complex r0 = (m(0, 0) - mean) * state[0] + m(0, 1) * state[1];
    Complex r1 = m(1, 0) * state[0] + (m(1, 1) - mean) * state[1];
    double v = std::norm(r0) + std::norm(r1);
    if (v < 0 && v > -Tolerances::var) {
        return 0;
    }
    return v;
}

double spread(const Observable &obs, const StateVector &state) {
    return std::sqrt(variance(obs, state));
}

Matrix2 commutator(const Observable &a, const Observable &b) {
    return a.matrix() * b.matrix() - b.matrix() * a.matrix();
}

PauliCoefficients pauli_decompose(const Observable &obs) {
    const Matrix2 &m = obs.matrix();
    return {
        0.5 * (m(0, 0) + m(1, 1)).real(),
        0.5 * (m(0, 1) + m(1, 0)).real(),
        0.5 * (m(1, 0) - m(0, 1)).imag(),
        0.5 * (m(0, 0) - m(1, 1)).real(),
    };
}

Observable reconstruct(const PauliCoefficients &c) {
    return Observable({
        Complex(c.c0 + c.cz, 0),
        Complex(c.cx, -c.cy),
        Complex(c.cx, c.cy),
        Complex(c.c0 - c.cz, 0),
    });
}

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

BlochVector bloch_vector(const StateVector &state) {
    Complex cross = std::conj(state[0]) * state[1];
    return {
        2 * cross.real(),
        2 * cross.imag(),
        std::norm(state[0]) - std::norm(state[1]),
    };
}

namespace {

// Eigenvector of n.sigma with eigenvalue +1, for a unit vector n. Picks the
// better-conditioned of the two equivalent closed forms.
StateVector spin_up_along(double nx, double ny, double nz) {
    if (nz >= 0) {
        return canonical_phase(StateVector::normalized(1 + nz, Complex(nx, ny)));
    }
    return canonical_phase(StateVector::normalized(Complex(nx, -ny), 1 - nz));
}

}  // namespace

Eigensystem eigensystem(const Observable &obs) {
    PauliCoefficients c = pauli_decompose(obs);
    double r = std::sqrt(c.cx * c.cx + c.cy * c.cy + c.cz * c.cz);
    Eigensystem out;
    out.plus_value = c.c0 + r;
    out.minus_value = c.c0 - r;
    if (r == 0) {
        return out;
    }
    double nx = c.cx / r;
    double ny = c.cy / r;
    double nz = c.cz / r;
    out.plus = spin_up_along(nx, ny, nz);
    out.minus = spin_up_along(-nx, -ny, -nz);
    return out;
}

}  // namespace twopath
