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

// Channel and target spec files. Both are single JSON documents holding
// exactly one variant; complex numbers are [re, im] pairs.
//
// Channel:
//   {"kraus": [K0, K1, ...]}                 1 to 4 2x2 complex matrices
//   {"affine": {"matrix": [[..],[..],[..]], "translation": [x, y, z]}}
//   {"preset": {"name": "depolarizing", "params": {"p": 0.2}}}
//
// Target:
//   {"matrix": [[a, b], [c, d]]}
//   {"named": {"gate": "H"}}                 one of I X Y Z H S T
//   {"rotation": {"axis": [x, y, z], "angle": radians}}

#ifndef QFID_CLI_SPEC_IO_H
#define QFID_CLI_SPEC_IO_H

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qfid/channels.h"

namespace qfid::cli {

/// Syntax or schema error in a spec. what() reads "source:line: field: msg".
class ParseError : public std::runtime_error {
   public:
    ParseError(std::string source, int line, std::string field, const std::string &message);

    const std::string &source() const {
        return source_;
    }
    int line() const {
        return line_;
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string source_;
    int line_;
    std::string field_;
};

struct KrausSpec {
    std::vector<ComplexMatrix2> ops;
};
struct AffineSpec {
    AffineBlochMap map;
};
struct PresetSpec {
    std::string name;
    std::map<std::string, double> params;
};
using ChannelSpec = std::variant<KrausSpec, AffineSpec, PresetSpec>;

struct MatrixTarget {
    ComplexMatrix2 matrix;
};
struct NamedTarget {
    std::string gate;
};
struct RotationTarget {
    BlochVector axis;
    double angle = 0;
};
using TargetSpec = std::variant<MatrixTarget, NamedTarget, RotationTarget>;

ChannelSpec parse_channel_spec(std::string_view text, const std::string &source);
TargetSpec parse_target_spec(std::string_view text, const std::string &source);

/// "preset:name:k=v[,k=v...]"; the parameter list may be omitted.
PresetSpec parse_preset_inline(std::string_view arg);

/// Inline preset when the argument starts with "preset:", else a file path.
ChannelSpec load_channel_arg(const std::string &arg);
/// Named gate (I X Y Z H S T) when the argument is one, else a file path.
TargetSpec load_target_arg(const std::string &arg);

bool is_named_gate(std::string_view name);

/// Throws QfidError for invariant violations (unknown preset, out-of-range
/// parameters, non-unitary target, zero rotation axis).
Channel resolve_channel(const ChannelSpec &spec);
UnitaryGate resolve_target(const TargetSpec &spec);

/// %.17g, with negative zero printed as 0.
std::string format_number(double value);

std::string write_channel_spec(const KrausChannel &channel);
std::string write_channel_spec(const AffineBlochMap &channel);

}  // namespace qfid::cli

#endif
