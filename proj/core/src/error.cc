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

#include "qfid/error.h"

#include <cstdio>

namespace qfid {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::not_hermitian:
            return "NotHermitian";
        case ErrorKind::not_psd:
            return "NotPSD";
        case ErrorKind::trace_not_one:
            return "TraceNotOne";
        case ErrorKind::outside_bloch_ball:
            return "OutsideBlochBall";
        case ErrorKind::not_pure:
            return "NotPure";
        case ErrorKind::not_unitary:
            return "NotUnitary";
        case ErrorKind::not_cptp:
            return "NotCPTP";
        case ErrorKind::unknown_preset:
            return "UnknownPreset";
        case ErrorKind::param_out_of_range:
            return "ParamOutOfRange";
        case ErrorKind::invalid_argument:
            return "InvalidArgument";
    }
    return "Unknown";
}

std::string format_residual(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

QfidError::QfidError(ErrorKind kind, const std::string &message, double residual)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind), residual_(residual) {
}

}  // namespace qfid
