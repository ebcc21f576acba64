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

#include "qfid/fidelity.h"

#include <cmath>
#include <thread>

#include "qfid/error.h"

namespace qfid {

namespace {

constexpr double kPurityTolerance = 1e-10;

// Eigenvalues of sqrt(rho1) rho2 sqrt(rho1) at or below this are roundoff.
// Their square roots would otherwise leak about 1e-8 into F for pure inputs.
constexpr double kFidelityEigenvalueFloor = 1e-14;

FidelityReport make_report(Method method, double value, const Channel &s) {
    FidelityReport report;
    report.method = method;
    report.value = value;
    report.warnings = channel_warnings(s);
    return report;
}

/// Re Tr(U a U^dagger b).
double conjugated_overlap(const ComplexMatrix2 &u, const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
    return trace_of_product(u * a * dagger(u), b).real();
}

std::array<QuadratureNode, 12> build_sphere_quadrature() {
    const double edge = std::sqrt(3.0 / 5.0);
    const std::array<double, 3> z_nodes{-edge, 0.0, edge};
    const std::array<double, 3> z_weights{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
    // phi = 0, pi/2, pi, 3 pi/2 with exact trig values.
    const std::array<std::array<double, 2>, 4> phi_nodes{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

    std::array<QuadratureNode, 12> nodes{};
    size_t k = 0;
    for (size_t a = 0; a < 3; a++) {
        double z = z_nodes[a];
        double s = std::sqrt(1 - z * z);
        for (const auto &[cos_phi, sin_phi] : phi_nodes) {
            // (1 / 4 pi) * w_z * (2 pi / 4)
            nodes[k++] = {{s * cos_phi, s * sin_phi, z}, z_weights[a] / 8};
        }
    }
    return nodes;
}

}  // namespace

std::string_view method_name(Method method) {
    switch (method) {
        case Method::six_state:
            return "six_state";
        case Method::three_state_plus:
            return "three_state_plus";
        case Method::three_state_minus:
            return "three_state_minus";
        case Method::pauli_trace:
            return "pauli_trace";
        case Method::monte_carlo:
            return "monte_carlo";
        case Method::quadrature:
            return "quadrature";
    }
    return "unknown";
}

double state_fidelity(const DensityMatrix &rho1, const DensityMatrix &rho2) {
    auto root = psd_sqrt(rho1.matrix());
    auto inner = root * rho2.matrix() * root;
    auto eig = hermitian_eigen((inner + dagger(inner)) * Complex{0.5, 0});
    double t = 0;
    for (double lambda : eig.values) {
        if (lambda < -kPsdTolerance) {
            throw QfidError(ErrorKind::not_psd, "min eigenvalue " + format_residual(lambda), lambda);
        }
        if (lambda > kFidelityEigenvalueFloor) {
            t += std::sqrt(lambda);
        }
    }
    return t * t;
}

double pure_state_fidelity(const DensityMatrix &psi, const DensityMatrix &rho) {
    const auto &p = psi.matrix();
    double defect = max_abs_diff(p * p, p);
    if (!(defect <= kPurityTolerance)) {
        throw QfidError(ErrorKind::not_pure, "||psi^2 - psi||_max = " + format_residual(defect), defect);
    }
    return trace_of_product(p, rho.matrix()).real();
}

double input_fidelity(const UnitaryGate &u, const Channel &s, const ComplexMatrix2 &psi) {
    return conjugated_overlap(u.matrix(), psi, apply_linear(s, psi));
}

std::vector<std::string> channel_warnings(const Channel &s) {
    auto d = diagnose(s);
    std::vector<std::string> warnings;
    if (d.cptp) {
        return warnings;
    }
    std::string detail = "trace residual " + format_residual(d.trace_residual) + ", min Choi eigenvalue " +
                         format_residual(d.min_choi_eigenvalue) + ", max output radius " +
                         format_residual(d.max_output_radius);
    if (d.borderline) {
        warnings.push_back("channel is borderline CPTP (" + detail + ")");
    } else {
        warnings.push_back("channel is not CPTP (" + detail + ")");
    }
    return warnings;
}

FidelityReport avg_fidelity_six(const UnitaryGate &u, const Channel &s) {
    double total = 0;
    for (Axis axis : kAllAxes) {
        total += input_fidelity(u, s, axial_state(axis).matrix());
    }
    return make_report(Method::six_state, total / 6, s);
}

FidelityReport avg_fidelity_three(const UnitaryGate &u, const Channel &s, AxisSign sign) {
    auto image_of_mixed = apply_linear(s, maximally_mixed().matrix());
    double total = 0;
    for (size_t j = 0; j < 3; j++) {
        auto rho = axial_state(axis_for(j, sign == AxisSign::plus)).matrix();
        total += conjugated_overlap(u.matrix(), rho, apply_linear(s, rho) - image_of_mixed);
    }
    auto method = sign == AxisSign::plus ? Method::three_state_plus : Method::three_state_minus;
    return make_report(method, 0.5 + total / 3, s);
}

FidelityReport avg_fidelity_pauli(const UnitaryGate &u, const Channel &s) {
    double total = 0;
    for (size_t j = 0; j < 3; j++) {
        auto half_pauli = pauli(j) * Complex{0.5, 0};
        total += conjugated_overlap(u.matrix(), half_pauli, apply_linear(s, half_pauli));
    }
    return make_report(Method::pauli_trace, 0.5 + total / 3, s);
}

FidelityReport avg_fidelity_mc(const UnitaryGate &u, const Channel &s, const MonteCarloOptions &options) {
    if (options.samples < kMinMonteCarloSamples) {
        throw QfidError(ErrorKind::invalid_argument, "Monte Carlo needs at least 100 samples");
    }
    if (options.workers < 1) {
        throw QfidError(ErrorKind::invalid_argument, "Monte Carlo needs at least one worker");
    }

    size_t n = static_cast<size_t>(options.samples);
    size_t workers = static_cast<size_t>(options.workers);
    std::vector<double> values(n);

    auto run_block = [&](size_t worker, size_t begin, size_t end) {
        Rng rng = make_stream(options.seed, worker);
        for (size_t k = begin; k < end; k++) {
            values[k] = input_fidelity(u, s, sample_pure_uniform(rng).state.matrix());
        }
    };

    if (workers == 1) {
        run_block(0, 0, n);
    } else {
        std::vector<std::jthread> threads;
        size_t begin = 0;
        for (size_t w = 0; w < workers; w++) {
            size_t len = n / workers + (w < n % workers ? 1 : 0);
            threads.emplace_back(run_block, w, begin, begin + len);
            begin += len;
        }
    }

    double mean = pairwise_sum(values) / static_cast<double>(n);
    std::vector<double> squared_deviation(n);
    for (size_t k = 0; k < n; k++) {
        double d = values[k] - mean;
        squared_deviation[k] = d * d;
    }
    double variance = pairwise_sum(squared_deviation) / static_cast<double>(n - 1);

    auto report = make_report(Method::monte_carlo, mean, s);
    report.std_error = std::sqrt(variance / static_cast<double>(n));
    report.samples = options.samples;
    return report;
}

std::span<const QuadratureNode> sphere_quadrature() {
    static const std::array<QuadratureNode, 12> nodes = build_sphere_quadrature();
    return nodes;
}

FidelityReport avg_fidelity_quadrature(const UnitaryGate &u, const Channel &s) {
    double total = 0;
    for (const auto &node : sphere_quadrature()) {
        total += node.weight * input_fidelity(u, s, bloch_to_density(node.point).matrix());
    }
    return make_report(Method::quadrature, total, s);
}

FidelityReport avg_fidelity(Method method, const UnitaryGate &u, const Channel &s, const MonteCarloOptions &mc) {
    switch (method) {
        case Method::six_state:
            return avg_fidelity_six(u, s);
        case Method::three_state_plus:
            return avg_fidelity_three(u, s, AxisSign::plus);
        case Method::three_state_minus:
            return avg_fidelity_three(u, s, AxisSign::minus);
        case Method::pauli_trace:
            return avg_fidelity_pauli(u, s);
        case Method::monte_carlo:
            return avg_fidelity_mc(u, s, mc);
        case Method::quadrature:
            return avg_fidelity_quadrature(u, s);
    }
    throw QfidError(ErrorKind::invalid_argument, "unknown estimator");
}

}  // namespace qfid
