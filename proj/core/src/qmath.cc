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

#include "qfid/qmath.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qfid/error.h"

namespace qfid {

namespace {

template <size_t N>
bool all_finite(const std::array<Complex, N> &entries) {
    return std::all_of(entries.begin(), entries.end(), [](const Complex &c) {
        return std::isfinite(c.real()) && std::isfinite(c.imag());
    });
}

template <size_t N>
double max_abs_diff_entries(const std::array<Complex, N> &lhs, const std::array<Complex, N> &rhs) {
    double result = 0;
    for (size_t k = 0; k < N; k++) {
        result = std::max(result, std::abs(lhs[k] - rhs[k]));
    }
    return result;
}

[[noreturn]] void throw_not_hermitian(double defect) {
    throw QfidError(
        ErrorKind::not_hermitian, "matrix deviates from its adjoint by " + format_residual(defect), defect);
}

}  // namespace

bool ComplexMatrix2::is_finite() const {
    return all_finite(a);
}

ComplexMatrix2 &ComplexMatrix2::operator+=(const ComplexMatrix2 &other) {
    for (size_t k = 0; k < 4; k++) {
        a[k] += other.a[k];
    }
    return *this;
}

ComplexMatrix2 &ComplexMatrix2::operator-=(const ComplexMatrix2 &other) {
    for (size_t k = 0; k < 4; k++) {
        a[k] -= other.a[k];
    }
    return *this;
}

ComplexMatrix2 &ComplexMatrix2::operator*=(Complex scale) {
    for (auto &entry : a) {
        entry *= scale;
    }
    return *this;
}

ComplexMatrix2 operator+(ComplexMatrix2 lhs, const ComplexMatrix2 &rhs) {
    return lhs += rhs;
}

ComplexMatrix2 operator-(ComplexMatrix2 lhs, const ComplexMatrix2 &rhs) {
    return lhs -= rhs;
}

ComplexMatrix2 operator*(ComplexMatrix2 m, Complex scale) {
    return m *= scale;
}

ComplexMatrix2 operator*(Complex scale, ComplexMatrix2 m) {
    return m *= scale;
}

ComplexMatrix2 operator*(const ComplexMatrix2 &lhs, const ComplexMatrix2 &rhs) {
    return mat_mul(lhs, rhs);
}

ComplexMatrix2 mat_mul(const ComplexMatrix2 &lhs, const ComplexMatrix2 &rhs) {
    return {{
        lhs.a[0] * rhs.a[0] + lhs.a[1] * rhs.a[2],
        lhs.a[0] * rhs.a[1] + lhs.a[1] * rhs.a[3],
        lhs.a[2] * rhs.a[0] + lhs.a[3] * rhs.a[2],
        lhs.a[2] * rhs.a[1] + lhs.a[3] * rhs.a[3],
    }};
}

ComplexMatrix2 dagger(const ComplexMatrix2 &m) {
    return {{std::conj(m.a[0]), std::conj(m.a[2]), std::conj(m.a[1]), std::conj(m.a[3])}};
}

Complex trace(const ComplexMatrix2 &m) {
    return m.a[0] + m.a[3];
}

Complex trace_of_product(const ComplexMatrix2 &lhs, const ComplexMatrix2 &rhs) {
    return lhs.a[0] * rhs.a[0] + lhs.a[1] * rhs.a[2] + lhs.a[2] * rhs.a[1] + lhs.a[3] * rhs.a[3];
}

ComplexMatrix2 outer(const std::array<Complex, 2> &v, const std::array<Complex, 2> &w) {
    return {{v[0] * std::conj(w[0]), v[0] * std::conj(w[1]), v[1] * std::conj(w[0]), v[1] * std::conj(w[1])}};
}

double max_abs(const ComplexMatrix2 &m) {
    return max_abs_diff(m, ComplexMatrix2{});
}

double max_abs_diff(const ComplexMatrix2 &lhs, const ComplexMatrix2 &rhs) {
    return max_abs_diff_entries(lhs.a, rhs.a);
}

const ComplexMatrix2 &pauli(size_t axis) {
    static constexpr std::array<ComplexMatrix2, 3> paulis{kPauliX, kPauliY, kPauliZ};
    return paulis.at(axis);
}

bool RealMatrix3::is_finite() const {
    return std::all_of(a.begin(), a.end(), [](double v) {
        return std::isfinite(v);
    });
}

RealMatrix3 operator*(const RealMatrix3 &lhs, const RealMatrix3 &rhs) {
    RealMatrix3 result;
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c < 3; c++) {
            double acc = 0;
            for (size_t k = 0; k < 3; k++) {
                acc += lhs(r, k) * rhs(k, c);
            }
            result(r, c) = acc;
        }
    }
    return result;
}

std::array<double, 3> operator*(const RealMatrix3 &m, const std::array<double, 3> &v) {
    return {
        m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2],
        m(1, 0) * v[0] + m(1, 1) * v[1] + m(1, 2) * v[2],
        m(2, 0) * v[0] + m(2, 1) * v[1] + m(2, 2) * v[2],
    };
}

double max_abs_diff(const RealMatrix3 &lhs, const RealMatrix3 &rhs) {
    double result = 0;
    for (size_t k = 0; k < 9; k++) {
        result = std::max(result, std::abs(lhs.a[k] - rhs.a[k]));
    }
    return result;
}

ComplexMatrix4 ComplexMatrix4::identity() {
    ComplexMatrix4 result;
    for (size_t k = 0; k < 4; k++) {
        result(k, k) = 1;
    }
    return result;
}

bool ComplexMatrix4::is_finite() const {
    return all_finite(a);
}

ComplexMatrix4 operator*(const ComplexMatrix4 &lhs, const ComplexMatrix4 &rhs) {
    ComplexMatrix4 result;
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            Complex acc = 0;
            for (size_t k = 0; k < 4; k++) {
                acc += lhs(r, k) * rhs(k, c);
            }
            result(r, c) = acc;
        }
    }
    return result;
}

ComplexMatrix4 dagger(const ComplexMatrix4 &m) {
    ComplexMatrix4 result;
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            result(r, c) = std::conj(m(c, r));
        }
    }
    return result;
}

Complex trace(const ComplexMatrix4 &m) {
    return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
}

double max_abs_diff(const ComplexMatrix4 &lhs, const ComplexMatrix4 &rhs) {
    return max_abs_diff_entries(lhs.a, rhs.a);
}

HermitianEigen2 hermitian_eigen(const ComplexMatrix2 &h) {
    double defect = max_abs_diff(h, dagger(h));
    if (!(defect <= kHermitianTolerance)) {
        throw_not_hermitian(defect);
    }

    // h = mean * I + ax * X + ay * Y + az * Z, using the symmetrized entries.
    double mean = 0.5 * (h.a[0].real() + h.a[3].real());
    double az = 0.5 * (h.a[0].real() - h.a[3].real());
    Complex lower = 0.5 * (h.a[2] + std::conj(h.a[1]));
    double ax = lower.real();
    double ay = lower.imag();
    double radius = std::hypot(ax, ay, az);

    HermitianEigen2 result;
    if (radius == 0) {
        result.values = {mean, mean};
        result.vectors = {{{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{1, 0}}}};
        return result;
    }

    // Eigenvector of (a . sigma) for +radius; pick the branch that avoids
    // cancellation near the -z pole.
    std::array<Complex, 2> up;
    if (az >= 0) {
        up = {Complex{radius + az, 0}, Complex{ax, ay}};
    } else {
        up = {Complex{ax, -ay}, Complex{radius - az, 0}};
    }
    double norm = std::sqrt(std::norm(up[0]) + std::norm(up[1]));
    up[0] /= norm;
    up[1] /= norm;
    std::array<Complex, 2> down{-std::conj(up[1]), std::conj(up[0])};

    result.values = {mean - radius, mean + radius};
    result.vectors = {down, up};
    return result;
}

HermitianEigen4 hermitian_eigen(const ComplexMatrix4 &h) {
    double defect = max_abs_diff(h, dagger(h));
    if (!(defect <= kHermitianTolerance)) {
        throw_not_hermitian(defect);
    }

    ComplexMatrix4 a;
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));
        }
    }
    ComplexMatrix4 v = ComplexMatrix4::identity();

    auto off_diagonal_norm = [&]() {
        double acc = 0;
        for (size_t r = 0; r < 4; r++) {
            for (size_t c = 0; c < 4; c++) {
                if (r != c) {
                    acc += std::norm(a(r, c));
                }
            }
        }
        return std::sqrt(acc);
    };

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm() > kJacobiTolerance; sweep++) {
        for (size_t p = 0; p < 3; p++) {
            for (size_t q = p + 1; q < 4; q++) {
                double magnitude = std::abs(a(p, q));
                if (magnitude == 0) {
                    continue;
                }
                // A phase on column q makes a(p, q) real and positive, after
                // which an ordinary real Jacobi rotation zeroes it.
                Complex phase = a(p, q) / magnitude;
                double theta = (a(q, q).real() - a(p, p).real()) / (2 * magnitude);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;

                ComplexMatrix4 g = ComplexMatrix4::identity();
                g(p, p) = c;
                g(p, q) = s;
                g(q, p) = -s * std::conj(phase);
                g(q, q) = c * std::conj(phase);

                a = dagger(g) * a * g;
                a(p, q) = 0;
                a(q, p) = 0;
                v = v * g;
            }
        }
    }

    std::array<size_t, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    HermitianEigen4 result;
    for (size_t k = 0; k < 4; k++) {
        size_t src = order[k];
        result.values[k] = a(src, src).real();
        for (size_t r = 0; r < 4; r++) {
            result.vectors[k][r] = v(r, src);
        }
    }
    return result;
}

ComplexMatrix2 psd_sqrt(const ComplexMatrix2 &p) {
    auto eig = hermitian_eigen(p);
    if (eig.values[0] < -kPsdTolerance) {
        throw QfidError(
            ErrorKind::not_psd, "eigenvalue " + format_residual(eig.values[0]) + " is negative", eig.values[0]);
    }
    ComplexMatrix2 result;
    for (size_t k = 0; k < 2; k++) {
        double root = std::sqrt(std::max(eig.values[k], 0.0));
        result += outer(eig.vectors[k], eig.vectors[k]) * Complex{root, 0};
    }
    return result;
}

bool psd_check_4(const ComplexMatrix4 &c) {
    return hermitian_eigen(c).values[0] >= -kPsdTolerance;
}

double pairwise_sum(std::span<const double> values) {
    constexpr size_t kBlock = 8;
    if (values.size() <= kBlock) {
        return std::accumulate(values.begin(), values.end(), 0.0);
    }
    size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace qfid
