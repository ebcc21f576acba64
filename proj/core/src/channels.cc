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

#include "qfid/channels.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "qfid/error.h"

namespace qfid {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// c0 I + c1 X + c2 Y + c3 Z.
ComplexMatrix2 pauli_combination(Complex c0, Complex c1, Complex c2, Complex c3) {
    const Complex i{0, 1};
    return {{c0 + c3, c1 - i * c2, c1 + i * c2, c0 - c3}};
}

/// (Tr m, Tr(X m), Tr(Y m), Tr(Z m)) for an arbitrary complex m.
std::array<Complex, 4> pauli_traces(const ComplexMatrix2 &m) {
    const Complex i{0, 1};
    return {m.a[0] + m.a[3], m.a[1] + m.a[2], i * (m.a[1] - m.a[2]), m.a[0] - m.a[3]};
}

ComplexMatrix2 apply_ops(std::span<const ComplexMatrix2> ops, const ComplexMatrix2 &m) {
    ComplexMatrix2 result;
    for (const auto &k : ops) {
        result += k * m * dagger(k);
    }
    return result;
}

template <class ApplyFn>
ComplexMatrix4 choi_from(ApplyFn &&apply_fn) {
    ComplexMatrix4 result;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            ComplexMatrix2 basis;
            basis(i, j) = 1;
            ComplexMatrix2 image = apply_fn(basis);
            for (size_t k = 0; k < 2; k++) {
                for (size_t l = 0; l < 2; l++) {
                    result(2 * i + k, 2 * j + l) = 0.5 * image(k, l);
                }
            }
        }
    }
    return result;
}

ComplexMatrix4 choi_of_ops(std::span<const ComplexMatrix2> ops) {
    return choi_from([&](const ComplexMatrix2 &m) {
        return apply_ops(ops, m);
    });
}

/// Fixed probe directions for the ball-into-ball check.
const std::vector<BlochVector> &contraction_probes() {
    static const std::vector<BlochVector> probes = [] {
        std::vector<BlochVector> result;
        for (Axis axis : kAllAxes) {
            result.push_back(axis_direction(axis));
        }
        Rng rng = make_stream(0);
        for (int k = 0; k < 100; k++) {
            result.push_back(sample_pure_uniform(rng).bloch);
        }
        return result;
    }();
    return probes;
}

double require_param(
    std::string_view preset_name,
    const std::map<std::string, double> &params,
    const std::string &key,
    double lo,
    double hi) {
    auto it = params.find(key);
    if (it == params.end()) {
        throw QfidError(
            ErrorKind::param_out_of_range,
            "preset '" + std::string(preset_name) + "' requires parameter '" + key + "'");
    }
    double value = it->second;
    if (!std::isfinite(value) || value < lo || value > hi) {
        throw QfidError(
            ErrorKind::param_out_of_range,
            "preset '" + std::string(preset_name) + "' parameter " + key + "=" + format_residual(value) +
                " is outside [" + format_residual(lo) + ", " + format_residual(hi) + "]");
    }
    return value;
}

void reject_unknown_params(
    std::string_view preset_name, const std::map<std::string, double> &params, std::set<std::string> allowed) {
    for (const auto &[key, value] : params) {
        if (!allowed.contains(key)) {
            throw QfidError(
                ErrorKind::param_out_of_range,
                "preset '" + std::string(preset_name) + "' has no parameter '" + key + "'");
        }
    }
}

std::array<Complex, 2> normalized(std::array<Complex, 2> v) {
    double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    return {v[0] / n, v[1] / n};
}

}  // namespace

UnitaryGate UnitaryGate::make(const ComplexMatrix2 &u) {
    if (!u.is_finite()) {
        throw QfidError(ErrorKind::not_unitary, "matrix has non-finite entries");
    }
    double defect = max_abs_diff(dagger(u) * u, ComplexMatrix2::identity());
    if (!(defect <= kUnitaryTolerance)) {
        throw QfidError(ErrorKind::not_unitary, "||u^dagger u - I||_max = " + format_residual(defect), defect);
    }
    return UnitaryGate(u);
}

UnitaryGate rotation_gate(const BlochVector &axis, double angle) {
    double length = axis.norm();
    if (!std::isfinite(length) || length == 0 || !std::isfinite(angle)) {
        throw QfidError(ErrorKind::invalid_argument, "rotation needs a finite non-zero axis and a finite angle");
    }
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    Complex minus_i_s{0, -s};
    return UnitaryGate::make(pauli_combination(
        c, minus_i_s * (axis.x / length), minus_i_s * (axis.y / length), minus_i_s * (axis.z / length)));
}

KrausChannel KrausChannel::make(std::vector<ComplexMatrix2> ops) {
    if (ops.empty() || ops.size() > kMaxKrausOps) {
        throw QfidError(
            ErrorKind::invalid_argument,
            "a Kraus channel needs 1 to 4 operators, got " + std::to_string(ops.size()));
    }
    for (const auto &k : ops) {
        if (!k.is_finite()) {
            throw QfidError(ErrorKind::invalid_argument, "Kraus operator has non-finite entries");
        }
    }
    return KrausChannel(std::move(ops));
}

KrausChannel conjugation(const UnitaryGate &u) {
    return KrausChannel::make({u.matrix()});
}

ComplexMatrix2 apply_linear(const KrausChannel &s, const ComplexMatrix2 &m) {
    return apply_ops(s.ops(), m);
}

ComplexMatrix2 apply_linear(const AffineBlochMap &s, const ComplexMatrix2 &m) {
    // m = (a0 I + sum_k a_k sigma_k) / 2 maps to
    // (a0 (I + t.sigma) + sum_jk m_jk a_k sigma_j) / 2.
    auto a = pauli_traces(m);
    std::array<Complex, 3> out{};
    for (size_t j = 0; j < 3; j++) {
        out[j] = a[0] * s.t[j];
        for (size_t k = 0; k < 3; k++) {
            out[j] += s.m(j, k) * a[k + 1];
        }
    }
    return pauli_combination(0.5 * a[0], 0.5 * out[0], 0.5 * out[1], 0.5 * out[2]);
}

ComplexMatrix2 apply_linear(const Channel &s, const ComplexMatrix2 &m) {
    return std::visit(
        [&](const auto &channel) {
            return apply_linear(channel, m);
        },
        s);
}

DensityMatrix apply(const Channel &s, const DensityMatrix &rho) {
    return validate_density(apply_linear(s, rho.matrix()));
}

DensityMatrix apply(const UnitaryGate &u, const DensityMatrix &rho) {
    return validate_density(u.matrix() * rho.matrix() * dagger(u.matrix()));
}

AffineBlochMap kraus_to_affine(const KrausChannel &s) {
    AffineBlochMap result;
    auto image_of_identity = pauli_traces(apply_linear(s, ComplexMatrix2::identity()));
    result.t = {
        0.5 * image_of_identity[1].real(),
        0.5 * image_of_identity[2].real(),
        0.5 * image_of_identity[3].real(),
    };
    for (size_t k = 0; k < 3; k++) {
        auto image = pauli_traces(apply_linear(s, pauli(k)));
        for (size_t j = 0; j < 3; j++) {
            result.m(j, k) = 0.5 * image[j + 1].real();
        }
    }
    return result;
}

AffineBlochMap to_affine(const Channel &s) {
    return std::visit(
        overloaded{
            [](const KrausChannel &kraus) {
                return kraus_to_affine(kraus);
            },
            [](const AffineBlochMap &affine) {
                return affine;
            },
        },
        s);
}

KrausChannel kraus_from_choi(const ComplexMatrix4 &choi_trace_one) {
    ComplexMatrix4 unnormalized;
    for (size_t k = 0; k < 16; k++) {
        unnormalized.a[k] = 2.0 * choi_trace_one.a[k];
    }
    auto eig = hermitian_eigen(unnormalized);
    if (eig.values[0] < -kPsdTolerance) {
        throw QfidError(
            ErrorKind::not_cptp,
            "Choi matrix has eigenvalue " + format_residual(eig.values[0] / 2) + "; no Kraus form exists",
            eig.values[0] / 2);
    }

    std::vector<ComplexMatrix2> ops;
    for (size_t idx = 4; idx-- > 0;) {
        double lambda = eig.values[idx];
        if (lambda <= kKrausExtractionThreshold) {
            continue;
        }
        const auto &v = eig.vectors[idx];
        double root = std::sqrt(lambda);
        ComplexMatrix2 k;
        for (size_t i = 0; i < 2; i++) {
            for (size_t out = 0; out < 2; out++) {
                k(out, i) = root * v[2 * i + out];
            }
        }
        auto largest = std::max_element(k.a.begin(), k.a.end(), [](const Complex &x, const Complex &y) {
            return std::abs(x) < std::abs(y);
        });
        k *= std::conj(*largest) / std::abs(*largest);
        ops.push_back(k);
    }
    if (ops.empty()) {
        throw QfidError(ErrorKind::invalid_argument, "Choi matrix is zero; the map has no Kraus operators");
    }
    return KrausChannel::make(std::move(ops));
}

KrausChannel affine_to_kraus(const AffineBlochMap &s) {
    return kraus_from_choi(choi(Channel{s}));
}

KrausChannel to_kraus(const Channel &s) {
    return std::visit(
        overloaded{
            [](const KrausChannel &kraus) {
                return kraus;
            },
            [](const AffineBlochMap &affine) {
                return affine_to_kraus(affine);
            },
        },
        s);
}

ComplexMatrix4 choi(const Channel &s) {
    return choi_from([&](const ComplexMatrix2 &m) {
        return apply_linear(s, m);
    });
}

ChannelDiagnostics diagnose(const Channel &s) {
    ChannelDiagnostics d;
    if (const auto *kraus = std::get_if<KrausChannel>(&s)) {
        ComplexMatrix2 completeness;
        for (const auto &k : kraus->ops()) {
            completeness += dagger(k) * k;
        }
        d.trace_residual = max_abs_diff(completeness, ComplexMatrix2::identity());
    }
    d.min_choi_eigenvalue = hermitian_eigen(choi(s)).values[0];
    d.unital_residual = max_abs_diff(apply_linear(s, maximally_mixed().matrix()), maximally_mixed().matrix());

    auto affine = to_affine(s);
    for (const auto &r : contraction_probes()) {
        auto out = affine.m * r.as_array();
        BlochVector image{out[0] + affine.t.x, out[1] + affine.t.y, out[2] + affine.t.z};
        d.max_output_radius = std::max(d.max_output_radius, image.norm());
    }

    auto within = [&](double factor) {
        return d.trace_residual <= factor * kTracePreservationTolerance &&
               d.min_choi_eigenvalue >= -factor * kPsdTolerance &&
               d.max_output_radius <= 1 + factor * kBlochRadiusTolerance;
    };
    d.cptp = within(1);
    d.borderline = !d.cptp && within(kBorderlineFactor);
    d.unital = d.unital_residual <= kUnitalTolerance;
    return d;
}

bool is_cptp(const Channel &s) {
    return diagnose(s).cptp;
}

bool is_unital(const Channel &s) {
    return max_abs_diff(apply_linear(s, maximally_mixed().matrix()), maximally_mixed().matrix()) <=
           kUnitalTolerance;
}

Channel compose(const Channel &outer, const Channel &inner) {
    if (const auto *outer_affine = std::get_if<AffineBlochMap>(&outer)) {
        auto inner_affine = to_affine(inner);
        AffineBlochMap result;
        result.m = outer_affine->m * inner_affine.m;
        auto shifted = outer_affine->m * inner_affine.t.as_array();
        result.t = {shifted[0] + outer_affine->t.x, shifted[1] + outer_affine->t.y, shifted[2] + outer_affine->t.z};
        return result;
    }

    const auto &outer_kraus = std::get<KrausChannel>(outer);
    auto inner_kraus = to_kraus(inner);
    std::vector<ComplexMatrix2> product;
    for (const auto &a : outer_kraus.ops()) {
        for (const auto &b : inner_kraus.ops()) {
            product.push_back(a * b);
        }
    }
    if (product.size() <= kMaxKrausOps) {
        return KrausChannel::make(std::move(product));
    }
    return kraus_from_choi(choi_of_ops(product));
}

KrausChannel preset(std::string_view name, const std::map<std::string, double> &params) {
    auto scaled = [](const ComplexMatrix2 &m, double factor) {
        return m * Complex{factor, 0};
    };

    if (name == "depolarizing") {
        reject_unknown_params(name, params, {"p"});
        double p = require_param(name, params, "p", 0, 1);
        double a = std::sqrt(std::max(0.0, 1 - 0.75 * p));
        double b = std::sqrt(p / 4);
        return KrausChannel::make(
            {scaled(kPauliI, a), scaled(kPauliX, b), scaled(kPauliY, b), scaled(kPauliZ, b)});
    }
    if (name == "amplitude_damping") {
        reject_unknown_params(name, params, {"gamma"});
        double gamma = require_param(name, params, "gamma", 0, 1);
        return KrausChannel::make({
            ComplexMatrix2::diag(1, std::sqrt(1 - gamma)),
            ComplexMatrix2{{0, std::sqrt(gamma), 0, 0}},
        });
    }
    if (name == "phase_damping") {
        reject_unknown_params(name, params, {"lambda"});
        double lambda = require_param(name, params, "lambda", 0, 1);
        return KrausChannel::make({
            ComplexMatrix2::diag(1, std::sqrt(1 - lambda)),
            ComplexMatrix2::diag(0, std::sqrt(lambda)),
        });
    }
    if (name == "bit_flip" || name == "phase_flip") {
        reject_unknown_params(name, params, {"q"});
        double q = require_param(name, params, "q", 0, 1);
        const auto &flip = name == "bit_flip" ? kPauliX : kPauliZ;
        return KrausChannel::make({scaled(kPauliI, std::sqrt(1 - q)), scaled(flip, std::sqrt(q))});
    }
    if (name == "rotation") {
        reject_unknown_params(name, params, {"nx", "ny", "nz", "angle"});
        constexpr double kInf = std::numeric_limits<double>::infinity();
        BlochVector axis{
            require_param(name, params, "nx", -kInf, kInf),
            require_param(name, params, "ny", -kInf, kInf),
            require_param(name, params, "nz", -kInf, kInf),
        };
        double angle = require_param(name, params, "angle", -kInf, kInf);
        if (axis.norm() == 0) {
            throw QfidError(ErrorKind::param_out_of_range, "preset 'rotation' needs a non-zero axis");
        }
        return conjugation(rotation_gate(axis, angle));
    }
    throw QfidError(ErrorKind::unknown_preset, "no preset named '" + std::string(name) + "'");
}

KrausChannel random_cptp(Rng &rng, size_t kraus_count) {
    if (kraus_count < 1 || kraus_count > kMaxKrausOps) {
        throw QfidError(ErrorKind::invalid_argument, "kraus_count must be in 1..4");
    }
    std::normal_distribution<double> gauss;
    size_t rows = 2 * kraus_count;
    std::array<std::vector<Complex>, 2> cols;
    for (auto &col : cols) {
        col.resize(rows);
        for (auto &entry : col) {
            double re = gauss(rng);
            double im = gauss(rng);
            entry = {re, im};
        }
    }

    // Modified Gram-Schmidt on the two columns.
    auto normalize = [](std::vector<Complex> &col) {
        double n = 0;
        for (const auto &e : col) {
            n += std::norm(e);
        }
        n = std::sqrt(n);
        for (auto &e : col) {
            e /= n;
        }
    };
    normalize(cols[0]);
    Complex overlap = 0;
    for (size_t r = 0; r < rows; r++) {
        overlap += std::conj(cols[0][r]) * cols[1][r];
    }
    for (size_t r = 0; r < rows; r++) {
        cols[1][r] -= overlap * cols[0][r];
    }
    normalize(cols[1]);

    std::vector<ComplexMatrix2> ops(kraus_count);
    for (size_t i = 0; i < kraus_count; i++) {
        for (size_t r = 0; r < 2; r++) {
            for (size_t c = 0; c < 2; c++) {
                ops[i](r, c) = cols[c][2 * i + r];
            }
        }
    }
    return KrausChannel::make(std::move(ops));
}

UnitaryGate random_unitary(Rng &rng) {
    std::normal_distribution<double> gauss;
    std::array<std::array<Complex, 2>, 2> cols;
    for (auto &col : cols) {
        for (auto &entry : col) {
            double re = gauss(rng);
            double im = gauss(rng);
            entry = {re, im};
        }
    }
    auto q0 = normalized(cols[0]);
    Complex overlap = std::conj(q0[0]) * cols[1][0] + std::conj(q0[1]) * cols[1][1];
    auto q1 = normalized({cols[1][0] - overlap * q0[0], cols[1][1] - overlap * q0[1]});
    return UnitaryGate::make({{q0[0], q1[0], q0[1], q1[1]}});
}

}  // namespace qfid
