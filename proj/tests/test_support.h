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

// Random generators and independent oracles shared by the unit and
// acceptance suites. Nothing here calls the average-fidelity estimators.

#ifndef QFID_TESTS_TEST_SUPPORT_H
#define QFID_TESTS_TEST_SUPPORT_H

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qfid/channels.h"
#include "qfid/qmath.h"
#include "qfid/random.h"
#include "qfid/states.h"

namespace qfid::testing {

inline Complex random_complex(Rng &rng) {
    std::normal_distribution<double> gauss;
    double re = gauss(rng);
    double im = gauss(rng);
    return {re, im};
}

inline ComplexMatrix2 random_matrix(Rng &rng) {
    ComplexMatrix2 m;
    for (auto &e : m.a) {
        e = random_complex(rng);
    }
    return m;
}

inline ComplexMatrix2 random_hermitian(Rng &rng) {
    auto m = random_matrix(rng);
    return (m + dagger(m)) * Complex{0.5, 0};
}

/// Uniform point in the Bloch ball.
inline BlochVector random_ball_point(Rng &rng) {
    auto direction = sample_pure_uniform(rng).bloch;
    double radius = std::cbrt(uniform01(rng));
    return {radius * direction.x, radius * direction.y, radius * direction.z};
}

inline DensityMatrix random_density(Rng &rng) {
    return bloch_to_density(random_ball_point(rng));
}

inline DensityMatrix random_pure(Rng &rng) {
    return sample_pure_uniform(rng).state;
}

/// Convex mixture of 2 to 4 Haar unitaries.
inline KrausChannel random_unital(Rng &rng) {
    size_t count = 2 + rng() % 3;
    std::vector<double> weights(count);
    double total = 0;
    for (auto &w : weights) {
        w = 0.05 + uniform01(rng);
        total += w;
    }
    std::vector<ComplexMatrix2> ops;
    for (double w : weights) {
        ops.push_back(random_unitary(rng).matrix() * Complex{std::sqrt(w / total), 0});
    }
    return KrausChannel::make(std::move(ops));
}

/// Random non-unital CPTP channel. Odd indices compose an amplitude damping
/// step with a random channel; even indices are plain random isometries.
inline Channel random_non_unital(Rng &rng, size_t index) {
    if (index % 2 == 1) {
        double gamma = 0.05 + 0.9 * uniform01(rng);
        Channel damping = preset("amplitude_damping", {{"gamma", gamma}});
        Channel inner = random_cptp(rng, 1 + rng() % 4);
        if (index % 4 == 1) {
            return compose(damping, inner);
        }
        return compose(inner, damping);
    }
    return random_cptp(rng, 2 + rng() % 3);
}

/// Reconstructs (m, t) by pushing the six axial states through qfid::apply() and
/// reading back Bloch vectors: m e_j = (r(+j) - r(-j)) / 2 and
/// t = (r(+j) + r(-j)) / 2.
inline AffineBlochMap affine_from_axial_probes(const Channel &s) {
    AffineBlochMap result;
    std::array<double, 3> t{};
    for (size_t j = 0; j < 3; j++) {
        auto plus = density_to_bloch(qfid::apply(s, axial_state(axis_for(j, true)))).as_array();
        auto minus = density_to_bloch(qfid::apply(s, axial_state(axis_for(j, false)))).as_array();
        for (size_t i = 0; i < 3; i++) {
            result.m(i, j) = 0.5 * (plus[i] - minus[i]);
            t[i] += 0.5 * (plus[i] + minus[i]) / 3;
        }
    }
    result.t = BlochVector::from_array(t);
    return result;
}

/// Brute-force midpoint rule over (theta, phi) of Tr(U psi U^dagger S[psi])
/// sin(theta) / 4 pi. Converges as O(h^2); independent of every estimator.
inline double grid_average_fidelity(const UnitaryGate &u, const Channel &s, int n_theta, int n_phi) {
    double total = 0;
    const double d_theta = std::numbers::pi / n_theta;
    const double d_phi = 2 * std::numbers::pi / n_phi;
    for (int a = 0; a < n_theta; a++) {
        double theta = (a + 0.5) * d_theta;
        for (int b = 0; b < n_phi; b++) {
            double phi = (b + 0.5) * d_phi;
            BlochVector r{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
            auto psi = bloch_to_density(r).matrix();
            auto target_out = u.matrix() * psi * dagger(u.matrix());
            auto actual_out = apply_linear(s, psi);
            total += trace(target_out * actual_out).real() * std::sin(theta) * d_theta * d_phi;
        }
    }
    return total / (4 * std::numbers::pi);
}

/// Average fidelity between two unitary gates: (2 + |Tr(u^dagger v)|^2) / 6.
inline double unitary_pair_fidelity(const UnitaryGate &u, const UnitaryGate &v) {
    return (2 + std::norm(trace(dagger(u.matrix()) * v.matrix()))) / 6;
}

struct NamedChannel {
    std::string label;
    Channel channel;
};

/// Every preset family on the parameter grid {0, 0.1, ..., 1}. Rotations use
/// angle 2 pi * g about a fixed oblique axis.
inline std::vector<NamedChannel> preset_grid() {
    std::vector<NamedChannel> result;
    for (int k = 0; k <= 10; k++) {
        double g = k / 10.0;
        std::string suffix = "(" + std::to_string(g).substr(0, 3) + ")";
        result.push_back({"depolarizing" + suffix, preset("depolarizing", {{"p", g}})});
        result.push_back({"amplitude_damping" + suffix, preset("amplitude_damping", {{"gamma", g}})});
        result.push_back({"phase_damping" + suffix, preset("phase_damping", {{"lambda", g}})});
        result.push_back({"bit_flip" + suffix, preset("bit_flip", {{"q", g}})});
        result.push_back({"phase_flip" + suffix, preset("phase_flip", {{"q", g}})});
        result.push_back(
            {"rotation" + suffix,
             preset("rotation", {{"nx", 0.3}, {"ny", -0.5}, {"nz", 0.8}, {"angle", 2 * std::numbers::pi * g}})});
    }
    return result;
}

/// Choi matrix of the transpose map, written out by hand: SWAP / 2.
inline ComplexMatrix4 transpose_map_choi() {
    ComplexMatrix4 c;
    c(0, 0) = 0.5;
    c(1, 2) = 0.5;
    c(2, 1) = 0.5;
    c(3, 3) = 0.5;
    return c;
}

inline AffineBlochMap transpose_map() {
    return {RealMatrix3::diag(1, -1, 1), {}};
}

}  // namespace qfid::testing

#endif
