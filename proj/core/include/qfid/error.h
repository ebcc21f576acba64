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

#ifndef QFID_ERROR_H
#define QFID_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfid {

enum class ErrorKind {
    not_hermitian,
    not_psd,
    trace_not_one,
    outside_bloch_ball,
    not_pure,
    not_unitary,
    not_cptp,
    unknown_preset,
    param_out_of_range,
    invalid_argument,
};

std::string_view error_kind_name(ErrorKind kind);

/// Short %g rendering for residuals in error messages.
std::string format_residual(double value);

/// Raised when a value violates a documented invariant or precondition.
///
/// `residual()` carries the measured violation (e.g. the Hermiticity defect
/// or the most negative eigenvalue) when one is meaningful, otherwise 0.
class QfidError : public std::runtime_error {
   public:
    QfidError(ErrorKind kind, const std::string &message, double residual = 0.0);

    ErrorKind kind() const noexcept {
        return kind_;
    }
    double residual() const noexcept {
        return residual_;
    }

   private:
    ErrorKind kind_;
    double residual_;
};

}  // namespace qfid

#endif
