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

// State fidelity and average gate fidelity of a single-qubit channel S with
// respect to a target unitary U:
//
//     F_avg = (1 / 4 pi) \int Tr(U psi U^dagger S[psi]) dOmega
//
// over pure inputs psi. Because the integrand is quadratic in the Bloch
// coordinates of psi, F_avg equals the mean of the integrand over the six
// axial states +/-x, +/-y, +/-z. The three-state, Pauli-trace and quadrature
// estimators are algebraically equivalent; Monte Carlo is a statistical
// check of the same integral.

#ifndef QFID_FIDELITY_H
#define QFID_FIDELITY_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfid/channels.h"
#include "qfid/states.h"

namespace qfid {

enum class Method {
    six_state,
    three_state_plus,
    three_state_minus,
    pauli_trace,
    monte_carlo,
    quadrature,
};

inline constexpr std::array<Method, 6> kAllMethods{
    Method::six_state,
    Method::three_state_plus,
    Method::three_state_minus,
    Method::pauli_trace,
    Method::monte_carlo,
    Method::quadrature,
};

std::string_view method_name(Method method);

struct FidelityReport {
    Method method = Method::six_state;
    /// Reported as computed; roundoff may put it a hair above 1.
    double value = 0;
    /// 1-sigma standard error; present only for Monte Carlo.
    std::optional<double> std_error;
    std::optional<int64_t> samples;
    std::vector<std::string> warnings;
};

/// Uhlmann fidelity (Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2, squared
/// convention.
double state_fidelity(const DensityMatrix &rho1, const DensityMatrix &rho2);

/// Tr(psi rho) for a rank-1 projector psi. Throws QfidError(not_pure) if
/// ||psi^2 - psi||_max > 1e-10.
double pure_state_fidelity(const DensityMatrix &psi, const DensityMatrix &rho);

/// The integrand Tr(U psi U^dagger S[psi]) for one input psi.
double input_fidelity(const UnitaryGate &u, const Channel &s, const ComplexMatrix2 &psi);

/// Warnings attached to every report for this channel (non-CPTP or
/// borderline inputs). Empty for valid channels.
std::vector<std::string> channel_warnings(const Channel &s);

/// Mean of the integrand over the six axial pure states.
FidelityReport avg_fidelity_six(const UnitaryGate &u, const Channel &s);

enum class AxisSign { plus, minus };

/// 1/2 + 1/3 sum_j Tr(U rho_j U^dagger (S[rho_j] - S[I/2])) over the three
/// axial states of one sign. Exact for every linear trace-preserving S; for
/// unital S the subtracted term is exactly 1/2 per axis.
FidelityReport avg_fidelity_three(const UnitaryGate &u, const Channel &s, AxisSign sign);

/// 1/2 + 1/3 sum_j Tr(U (sigma_j / 2) U^dagger S[sigma_j / 2]).
FidelityReport avg_fidelity_pauli(const UnitaryGate &u, const Channel &s);

struct MonteCarloOptions {
    int64_t samples = 100000;
    uint64_t seed = 0;
    /// Samples are split into contiguous blocks, one per worker; worker w
    /// draws from make_stream(seed, w). Results depend on (samples, seed,
    /// workers) only.
    int workers = 1;
};

inline constexpr int64_t kMinMonteCarloSamples = 100;

/// Averages the integrand over uniformly drawn pure inputs. std_error is the
/// sample standard deviation over sqrt(samples).
/// Throws QfidError(invalid_argument) if samples < kMinMonteCarloSamples or
/// workers < 1.
FidelityReport avg_fidelity_mc(const UnitaryGate &u, const Channel &s, const MonteCarloOptions &options = {});

struct QuadratureNode {
    BlochVector point;
    /// Weights sum to 1 (normalized by the sphere area).
    double weight;
};

/// 3-point Gauss-Legendre in cos(theta) times a 4-point trapezoid in phi.
/// Integrates every polynomial of degree <= 2 in the Bloch coordinates
/// exactly, which covers the fidelity integrand.
std::span<const QuadratureNode> sphere_quadrature();

FidelityReport avg_fidelity_quadrature(const UnitaryGate &u, const Channel &s);

/// Dispatches to the estimator for `method`; `mc` is used only for
/// Method::monte_carlo.
FidelityReport avg_fidelity(
    Method method, const UnitaryGate &u, const Channel &s, const MonteCarloOptions &mc = {});

}  // namespace qfid

#endif
