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

#include "qfid/states.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qfid/error.h"

namespace qfid {

namespace {

ComplexMatrix2 bloch_matrix(double x, double y, double z) {
    return {{
        Complex{0.5 * (1 + z), 0},
        Complex{0.5 * x, -0.5 * y},
        Complex{0.5 * x, 0.5 * y},
        Complex{0.5 * (1 - z), 0},
    }};
}

}  // namespace

double BlochVector::norm() const {
    return std::hypot(x, y, z);
}

double BlochVector::operator[](size_t axis) const {
    switch (axis) {
        case 0:
            return x;
        case 1:
            return y;
        case 2:
            return z;
    }
    throw std::out_of_range("BlochVector axis " + std::to_string(axis));
}

std::string_view axis_name(Axis axis) {
    switch (axis) {
        case Axis::plus_x:
            return "+x";
        case Axis::minus_x:
            return "-x";
        case Axis::plus_y:
            return "+y";
        case Axis::minus_y:
            return "-y";
        case Axis::plus_z:
            return "+z";
        case Axis::minus_z:
            return "-z";
    }
    return "?";
}

BlochVector axis_direction(Axis axis) {
    switch (axis) {
        case Axis::plus_x:
            return {1, 0, 0};
        case Axis::minus_x:
            return {-1, 0, 0};
        case Axis::plus_y:
            return {0, 1, 0};
        case Axis::minus_y:
            return {0, -1, 0};
        case Axis::plus_z:
            return {0, 0, 1};
        case Axis::minus_z:
            return {0, 0, -1};
    }
    return {};
}

Axis axis_for(size_t coordinate, bool positive) {
    static constexpr std::array<Axis, 3> plus{Axis::plus_x, Axis::plus_y, Axis::plus_z};
    static constexpr std::array<Axis, 3> minus{Axis::minus_x, Axis::minus_y, Axis::minus_z};
    return positive ? plus.at(coordinate) : minus.at(coordinate);
}

DensityMatrix bloch_to_density(const BlochVector &r) {
    double radius = r.norm();
    if (!(radius <= 1 + kBlochRadiusTolerance)) {
        throw QfidError(
            ErrorKind::outside_bloch_ball,
            "Bloch vector has length " + format_residual(radius),
            radius - 1);
    }
    return DensityMatrix::assume_valid(bloch_matrix(r.x, r.y, r.z));
}

BlochVector bloch_coordinates(const ComplexMatrix2 &m) {
    // Tr(m X) = m01 + m10, Tr(m Y) = i (m01 - m10), Tr(m Z) = m00 - m11.
    return {
        (m.a[1] + m.a[2]).real(),
        (Complex{0, 1} * (m.a[1] - m.a[2])).real(),
        (m.a[0] - m.a[3]).real(),
    };
}

BlochVector density_to_bloch(const DensityMatrix &rho) {
    return bloch_coordinates(rho.matrix());
}

DensityMatrix axial_state(Axis axis) {
    auto d = axis_direction(axis);
    return DensityMatrix::assume_valid(bloch_matrix(d.x, d.y, d.z));
}

DensityMatrix maximally_mixed() {
    return DensityMatrix::assume_valid(ComplexMatrix2::diag(0.5, 0.5));
}

PureSample sample_pure_uniform(Rng &rng) {
    double z = 2 * uniform01(rng) - 1;
    double phi = 2 * std::numbers::pi * uniform01(rng);
    double s = std::sqrt(std::max(0.0, 1 - z * z));
    BlochVector r{s * std::cos(phi), s * std::sin(phi), z};
    return {r, DensityMatrix::assume_valid(bloch_matrix(r.x, r.y, r.z))};
}

DensityMatrix validate_density(const ComplexMatrix2 &m) {
    if (!m.is_finite()) {
        throw QfidError(ErrorKind::not_hermitian, "matrix has non-finite entries");
    }
    double defect = max_abs_diff(m, dagger(m));
    if (!(defect <= kHermitianTolerance)) {
        throw QfidError(ErrorKind::not_hermitian, "Hermiticity defect " + format_residual(defect), defect);
    }
    double trace_defect = std::abs(trace(m) - Complex{1, 0});
    if (!(trace_defect <= kTraceTolerance)) {
        throw QfidError(ErrorKind::trace_not_one, "trace deviates from 1 by " + format_residual(trace_defect),
                        trace_defect);
    }
    double lowest = hermitian_eigen(m).values[0];
    if (lowest < -kPsdTolerance) {
        throw QfidError(ErrorKind::not_psd, "minimum eigenvalue " + format_residual(lowest), lowest);
    }
    return DensityMatrix::assume_valid(m);
}

}  // namespace qfid
