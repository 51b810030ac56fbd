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

#ifndef TWOPATH_QALGEBRA_H
#define TWOPATH_QALGEBRA_H

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace twopath {

using Complex = std::complex<double>;

/// Shared numerical tolerances. All library checks read from here.
struct Tolerances {
    static constexpr double norm = 1e-12;
    static constexpr double herm = 1e-12;
    static constexpr double unit = 1e-12;
    static constexpr double var = 1e-10;
    static constexpr double comp = 1e-10;
};

/// Raised when an input violates a documented invariant. The message names the invariant.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Plain 2x2 complex matrix, row-major. No invariants.
struct Matrix2 {
    std::array<Complex, 4> m{};

    constexpr Matrix2() = default;
    constexpr Matrix2(Complex a00, Complex a01, Complex a10, Complex a11) : m{a00, a01, a10, a11} {
    }

    static constexpr Matrix2 identity() {
        return {1.0, 0.0, 0.0, 1.0};
    }
    static constexpr Matrix2 zero() {
        return {};
    }

    constexpr Complex &operator()(size_t row, size_t col) {
        return m[2 * row + col];
    }
    constexpr const Complex &operator()(size_t row, size_t col) const {
        return m[2 * row + col];
    }

    Matrix2 adjoint() const;
    Complex trace() const;
    Complex determinant() const;

    /// Largest elementwise modulus.
    double max_abs() const;

    friend Matrix2 operator+(const Matrix2 &a, const Matrix2 &b);
    friend Matrix2 operator-(const Matrix2 &a, const Matrix2 &b);
    friend Matrix2 operator*(const Matrix2 &a, const Matrix2 &b);
    friend Matrix2 operator*(Complex s, const Matrix2 &a);
    friend bool operator==(const Matrix2 &a, const Matrix2 &b) = default;
};

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Matrix2 &a, const Matrix2 &b);

/// Normalized pure state of a two-level system.
///
/// Construction validates normalization (residual below Tolerances::norm) and
/// finiteness. Use `normalized` to rescale arbitrary amplitudes on purpose.
class StateVector {
   public:
    StateVector(Complex a0, Complex a1);

    /// Rescales (a0, a1) to unit norm. Throws on a zero or non-finite vector.
    static StateVector normalized(Complex a0, Complex a1);

    /// |psi_+> = (1, 0).
    static StateVector up();
    /// |psi_-> = (0, 1).
    static StateVector down();

    const Complex &operator[](size_t k) const {
        return amplitudes_[k];
    }
    const std::array<Complex, 2> &amplitudes() const {
        return amplitudes_;
    }

    /// |a0|^2 + |a1|^2 - 1
    double norm_residual() const;

   private:
    struct Unchecked {};
    StateVector(Unchecked, Complex a0, Complex a1) : amplitudes_{a0, a1} {
    }

    std::array<Complex, 2> amplitudes_;
};

/// <s|t>
Complex inner(const StateVector &s, const StateVector &t);

/// Ray equality: |<s|t>| > 1 - Tolerances::norm. Insensitive to global phase.
bool same_ray(const StateVector &s, const StateVector &t);

/// |s><s|
Matrix2 outer(const StateVector &s);

/// Hermitian 2x2 operator.
class Observable {
   public:
    explicit Observable(const Matrix2 &matrix);

    static Observable identity();
    static Observable sigma_x();
    static Observable sigma_y();
    static Observable sigma_z();

    const Matrix2 &matrix() const {
        return matrix_;
    }

    /// max |M - M^dagger|
    double hermiticity_residual() const;

   private:
    Matrix2 matrix_;
};

/// Unitary 2x2 operator.
class UnitaryGate {
   public:
    explicit UnitaryGate(const Matrix2 &matrix);

    static UnitaryGate identity();

    const Matrix2 &matrix() const {
        return matrix_;
    }
    UnitaryGate adjoint() const;

    /// max |U U^dagger - I|
    double unitarity_residual() const;

    StateVector apply(const StateVector &state) const;

    /// U^dagger A U
    Observable conjugate(const Observable &obs) const;

    friend UnitaryGate operator*(const UnitaryGate &a, const UnitaryGate &b);

   private:
    Matrix2 matrix_;
};

/// Expansion H = c0 I + cx sigma_x + cy sigma_y + cz sigma_z.
struct PauliCoefficients {
    double c0 = 0;
    double cx = 0;
    double cy = 0;
    double cz = 0;
};

struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    double norm() const;
};

/// <state|obs|state>, real.
double expectation(const Observable &obs, const StateVector &state);

/// <obs^2> - <obs>^2. Values in (-Tolerances::var, 0) are clamped to zero.
double variance(const Observable &obs, const StateVector &state);

/// Standard deviation, sqrt(variance).
double spread(const Observable &obs, const StateVector &state);

/// ab - ba. The result is anti-Hermitian.
Matrix2 commutator(const Observable &a, const Observable &b);

/// <state|M|state> for an arbitrary matrix.
Complex matrix_element(const Matrix2 &m, const StateVector &state);

PauliCoefficients pauli_decompose(const Observable &obs);
Observable reconstruct(const PauliCoefficients &c);

/// (<sigma_x>, <sigma_y>, <sigma_z>)
BlochVector bloch_vector(const StateVector &state);

/// Closed-form spectral decomposition of a Hermitian 2x2 operator.
///
/// Eigenvalues are ordered `plus_value >= minus_value`. Each eigenvector has its
/// first nonzero component real and positive. For degenerate operators
/// (multiple of the identity) the computational basis is returned.
struct Eigensystem {
    double plus_value = 0;
    double minus_value = 0;
    StateVector plus = StateVector::up();
    StateVector minus = StateVector::down();

    bool degenerate() const {
        return plus_value - minus_value < Tolerances::herm;
    }
};

Eigensystem eigensystem(const Observable &obs);

/// Multiplies by the phase that makes the first nonzero amplitude real and positive.
StateVector canonical_phase(const StateVector &state);

/// Throws ValidationError(message) when `ok` is false.
void require(bool ok, const std::string &message);

}  // namespace twopath

#endif
