// Copyright 2026 The qfid Authors
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

// Fixed-size linear algebra for single-qubit work: 2x2 complex matrices for
// states/unitaries/Kraus operators, 3x3 real matrices for Bloch-ball maps and
// 4x4 complex matrices for Choi matrices.

#ifndef QFID_QMATH_H
#define QFID_QMATH_H

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace qfid {

using Complex = std::complex<double>;

/// Max entrywise deviation tolerated between h and h^dagger.
inline constexpr double kHermitianTolerance = 1e-10;
/// Eigenvalues down to -kPsdTolerance count as zero.
inline constexpr double kPsdTolerance = 1e-9;
/// Off-diagonal Frobenius norm at which the 4x4 Jacobi solver stops.
inline constexpr double kJacobiTolerance = 1e-12;

struct ComplexMatrix2 {
    // Row-major: a00, a01, a10, a11.
    std::array<Complex, 4> a{};

    constexpr Complex &operator()(size_t row, size_t col) {
        return a[2 * row + col];
    }
    constexpr const Complex &operator()(size_t row, size_t col) const {
        return a[2 * row + col];
    }

    static constexpr ComplexMatrix2 identity() {
        return {{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}}};
    }
    static constexpr ComplexMatrix2 diag(Complex d0, Complex d1) {
        return {{d0, Complex{0, 0}, Complex{0, 0}, d1}};
    }

    bool is_finite() const;

    ComplexMatrix2 &operator+=(const ComplexMatrix2 &other);
    ComplexMatrix2 &operator-=(const ComplexMatrix2 &other);
    ComplexMatrix2 &operator*=(Complex scale);
};

ComplexMatrix2 operator+(ComplexMatrix2 lhs, const ComplexMatrix2 &rhs);
ComplexMatrix2 operator-(ComplexMatrix2 lhs, const ComplexMatrix2 &rhs);
ComplexMatrix2 operator*(ComplexMatrix2 m, Complex scale);
ComplexMatrix2 operator*(Complex scale, ComplexMatrix2 m);
ComplexMatrix2 operator*(const ComplexMatrix2 &lhs, const ComplexMatrix2 &rhs);

ComplexMatrix2 mat_mul(const ComplexMatrix2 &lhs, const ComplexMatrix2 &rhs);
ComplexMatrix2 dagger(const ComplexMatrix2 &m);
Complex trace(const ComplexMatrix2 &m);
/// Tr(lhs * rhs) without forming the product.
Complex trace_of_product(const ComplexMatrix2 &lhs, const ComplexMatrix2 &rhs);
/// |v><w|
ComplexMatrix2 outer(const std::array<Complex, 2> &v, const std::array<Complex, 2> &w);
double max_abs(const ComplexMatrix2 &m);
double max_abs_diff(const ComplexMatrix2 &lhs, const ComplexMatrix2 &rhs);

inline constexpr ComplexMatrix2 kPauliI = ComplexMatrix2::identity();
inline constexpr ComplexMatrix2 kPauliX{{Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}}};
inline constexpr ComplexMatrix2 kPauliY{{Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}}};
inline constexpr ComplexMatrix2 kPauliZ{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}}};

/// sigma_x, sigma_y, sigma_z indexed 0..2.
const ComplexMatrix2 &pauli(size_t axis);

struct RealMatrix3 {
    // Row-major.
    std::array<double, 9> a{};

    constexpr double &operator()(size_t row, size_t col) {
        return a[3 * row + col];
    }
    constexpr double operator()(size_t row, size_t col) const {
        return a[3 * row + col];
    }

    static constexpr RealMatrix3 identity() {
        return {{1, 0, 0, 0, 1, 0, 0, 0, 1}};
    }
    static constexpr RealMatrix3 diag(double d0, double d1, double d2) {
        return {{d0, 0, 0, 0, d1, 0, 0, 0, d2}};
    }

    bool is_finite() const;
};

RealMatrix3 operator*(const RealMatrix3 &lhs, const RealMatrix3 &rhs);
std::array<double, 3> operator*(const RealMatrix3 &m, const std::array<double, 3> &v);
double max_abs_diff(const RealMatrix3 &lhs, const RealMatrix3 &rhs);

struct ComplexMatrix4 {
    // Row-major, 16 entries.
    std::array<Complex, 16> a{};

    constexpr Complex &operator()(size_t row, size_t col) {
        return a[4 * row + col];
    }
    constexpr const Complex &operator()(size_t row, size_t col) const {
        return a[4 * row + col];
    }

    static ComplexMatrix4 identity();
    bool is_finite() const;
};

ComplexMatrix4 operator*(const ComplexMatrix4 &lhs, const ComplexMatrix4 &rhs);
ComplexMatrix4 dagger(const ComplexMatrix4 &m);
Complex trace(const ComplexMatrix4 &m);
double max_abs_diff(const ComplexMatrix4 &lhs, const ComplexMatrix4 &rhs);

struct HermitianEigen2 {
    /// Ascending.
    std::array<double, 2> values;
    /// vectors[k] is the unit eigenvector for values[k].
    std::array<std::array<Complex, 2>, 2> vectors;
};

struct HermitianEigen4 {
    std::array<double, 4> values;
    std::array<std::array<Complex, 4>, 4> vectors;
};

/// Closed-form eigendecomposition of a 2x2 Hermitian matrix.
///
/// The matrix is split into mean * I + a . sigma; the eigenvalues are
/// mean -/+ |a|. Throws QfidError(not_hermitian) if ||h - h^dagger||_max
/// exceeds kHermitianTolerance.
HermitianEigen2 hermitian_eigen(const ComplexMatrix2 &h);

/// Cyclic complex Jacobi eigendecomposition of a 4x4 Hermitian matrix.
///
/// Sweeps until the off-diagonal Frobenius norm is at most kJacobiTolerance.
/// Throws QfidError(not_hermitian) on non-Hermitian input.
HermitianEigen4 hermitian_eigen(const ComplexMatrix4 &h);

/// Principal square root of a PSD matrix. Eigenvalues in [-kPsdTolerance, 0)
/// are clamped to zero; anything lower throws QfidError(not_psd).
ComplexMatrix2 psd_sqrt(const ComplexMatrix2 &p);

/// True iff every eigenvalue of c is >= -kPsdTolerance.
bool psd_check_4(const ComplexMatrix4 &c);

/// Sum of values in a fixed pairwise order. The result depends only on the
/// input sequence, not on how the caller produced it.
double pairwise_sum(std::span<const double> values);

}  // namespace qfid

#endif
