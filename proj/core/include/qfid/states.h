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

// Single-qubit states. Pure states are always carried as projectors, so no
// global phase ever needs tracking.

#ifndef QFID_STATES_H
#define QFID_STATES_H

#include <array>
#include <string_view>

#include "qfid/qmath.h"
#include "qfid/random.h"

namespace qfid {

/// Bloch radius above 1 tolerated before a vector is rejected as a state.
inline constexpr double kBlochRadiusTolerance = 1e-9;
inline constexpr double kTraceTolerance = 1e-10;

struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    double norm() const;
    std::array<double, 3> as_array() const {
        return {x, y, z};
    }
    static BlochVector from_array(const std::array<double, 3> &v) {
        return {v[0], v[1], v[2]};
    }
    double operator[](size_t axis) const;
};

/// Hermitian, unit-trace, PSD 2x2 matrix. Obtain one through
/// validate_density() or the constructors in this header.
class DensityMatrix {
   public:
    const ComplexMatrix2 &matrix() const {
        return m_;
    }

    /// Skips validation. Only for values that satisfy the invariants by
    /// construction (exact formulas on already valid inputs).
    static DensityMatrix assume_valid(const ComplexMatrix2 &m) {
        return DensityMatrix(m);
    }

   private:
    explicit DensityMatrix(const ComplexMatrix2 &m) : m_(m) {
    }
    ComplexMatrix2 m_;
};

enum class Axis { plus_x, minus_x, plus_y, minus_y, plus_z, minus_z };

inline constexpr std::array<Axis, 6> kAllAxes{
    Axis::plus_x, Axis::minus_x, Axis::plus_y, Axis::minus_y, Axis::plus_z, Axis::minus_z};

std::string_view axis_name(Axis axis);
/// Unit Bloch vector pointing along the axis.
BlochVector axis_direction(Axis axis);
/// Axis for coordinate index 0..2 with the given sign.
Axis axis_for(size_t coordinate, bool positive);

/// (I + x X + y Y + z Z) / 2. Throws QfidError(outside_bloch_ball) when
/// |r| > 1 + kBlochRadiusTolerance.
DensityMatrix bloch_to_density(const BlochVector &r);

/// r_j = Tr(rho sigma_j).
BlochVector density_to_bloch(const DensityMatrix &rho);
/// Same coordinates for an arbitrary 2x2 matrix (real parts only).
BlochVector bloch_coordinates(const ComplexMatrix2 &m);

/// (I +/- sigma_j) / 2.
DensityMatrix axial_state(Axis axis);

/// I / 2.
DensityMatrix maximally_mixed();

struct PureSample {
    BlochVector bloch;
    DensityMatrix state;
};

/// Uniform point on the Bloch sphere by inverse CDF: two uniform draws give
/// z = cos(theta) in [-1, 1) and phi in [0, 2 pi).
PureSample sample_pure_uniform(Rng &rng);

/// Throws QfidError naming the first violated invariant (not_hermitian,
/// trace_not_one, not_psd) and its residual.
DensityMatrix validate_density(const ComplexMatrix2 &m);

}  // namespace qfid

#endif
