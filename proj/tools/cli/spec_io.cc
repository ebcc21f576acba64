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

#include "cli/spec_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "qfid/error.h"

namespace qfid::cli {

using nlohmann::json;

namespace {

int line_of_offset(std::string_view text, size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

std::string join_path(const std::string &path, const std::string &key) {
    return path.empty() ? key : path + "." + key;
}

/// Finds the byte offset of the value at a field path such as
/// "affine.matrix[2][0]" in syntactically valid JSON text. Stops at the
/// deepest component it can resolve.
class PathLocator {
   public:
    explicit PathLocator(std::string_view text) : text_(text) {
    }

    size_t locate(std::string_view path) {
        size_t pos = skip_ws(0);
        while (!path.empty()) {
            if (path.front() == '.') {
                path.remove_prefix(1);
            }
            if (path.front() == '[') {
                auto close = path.find(']');
                size_t index = std::strtoul(std::string(path.substr(1, close - 1)).c_str(), nullptr, 10);
                path.remove_prefix(close + 1);
                auto next = element(pos, index);
                if (!next) {
                    return pos;
                }
                pos = *next;
            } else {
                auto end = path.find_first_of(".[");
                std::string key(path.substr(0, end));
                path.remove_prefix(end == std::string_view::npos ? path.size() : end);
                auto next = member(pos, key);
                if (!next) {
                    return pos;
                }
                pos = *next;
            }
        }
        return pos;
    }

   private:
    size_t skip_ws(size_t pos) const {
        while (pos < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos]))) {
            pos++;
        }
        return pos;
    }

    /// Position just past the string starting at pos (which is a quote).
    size_t skip_string(size_t pos) const {
        for (pos++; pos < text_.size(); pos++) {
            if (text_[pos] == '\\') {
                pos++;
            } else if (text_[pos] == '"') {
                return pos + 1;
            }
        }
        return pos;
    }

    size_t skip_value(size_t pos) const {
        if (pos >= text_.size()) {
            return pos;
        }
        char c = text_[pos];
        if (c == '"') {
            return skip_string(pos);
        }
        if (c == '{' || c == '[') {
            int depth = 0;
            for (; pos < text_.size(); pos++) {
                char d = text_[pos];
                if (d == '"') {
                    pos = skip_string(pos) - 1;
                } else if (d == '{' || d == '[') {
                    depth++;
                } else if (d == '}' || d == ']') {
                    if (--depth == 0) {
                        return pos + 1;
                    }
                }
            }
            return pos;
        }
        while (pos < text_.size() && text_[pos] != ',' && text_[pos] != '}' && text_[pos] != ']' &&
               !std::isspace(static_cast<unsigned char>(text_[pos]))) {
            pos++;
        }
        return pos;
    }

    std::optional<size_t> element(size_t pos, size_t index) const {
        if (pos >= text_.size() || text_[pos] != '[') {
            return std::nullopt;
        }
        pos = skip_ws(pos + 1);
        for (size_t k = 0; pos < text_.size() && text_[pos] != ']'; k++) {
            if (k == index) {
                return pos;
            }
            pos = skip_ws(skip_value(pos));
            if (pos < text_.size() && text_[pos] == ',') {
                pos = skip_ws(pos + 1);
            }
        }
        return std::nullopt;
    }

    std::optional<size_t> member(size_t pos, const std::string &key) const {
        if (pos >= text_.size() || text_[pos] != '{') {
            return std::nullopt;
        }
        pos = skip_ws(pos + 1);
        while (pos < text_.size() && text_[pos] == '"') {
            size_t key_end = skip_string(pos);
            std::string_view name = text_.substr(pos + 1, key_end - pos - 2);
            pos = skip_ws(key_end);
            if (pos < text_.size() && text_[pos] == ':') {
                pos = skip_ws(pos + 1);
            }
            if (name == key) {
                return pos;
            }
            pos = skip_ws(skip_value(pos));
            if (pos < text_.size() && text_[pos] == ',') {
                pos = skip_ws(pos + 1);
            }
        }
        return std::nullopt;
    }

    std::string_view text_;
};

/// Converts JSON into domain values, raising ParseError with the source,
/// line and field path of the first schema violation.
class Reader {
   public:
    Reader(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {
    }

    json parse_document() const {
        try {
            return json::parse(text_);
        } catch (const json::parse_error &e) {
            size_t byte = e.byte == 0 ? 0 : e.byte - 1;
            throw ParseError(source_, line_of_offset(text_, byte), "<document>", "invalid JSON syntax");
        }
    }

    [[noreturn]] void fail(const std::string &path, const std::string &message) const {
        size_t offset = path == "<document>" ? 0 : PathLocator(text_).locate(path);
        throw ParseError(source_, line_of_offset(text_, offset), path, message);
    }

    double number(const json &j, const std::string &path) const {
        if (!j.is_number()) {
            fail(path, "expected a number");
        }
        double value = j.get<double>();
        if (!std::isfinite(value)) {
            fail(path, "number is not finite");
        }
        return value;
    }

    Complex complex(const json &j, const std::string &path) const {
        if (!j.is_array() || j.size() != 2) {
            fail(path, "expected a complex number as [re, im]");
        }
        return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
    }

    ComplexMatrix2 matrix2(const json &j, const std::string &path) const {
        if (!j.is_array() || j.size() != 2) {
            fail(path, "expected a 2x2 matrix as two rows");
        }
        ComplexMatrix2 m;
        for (size_t r = 0; r < 2; r++) {
            std::string row_path = path + "[" + std::to_string(r) + "]";
            if (!j[r].is_array() || j[r].size() != 2) {
                fail(row_path, "expected a row of two complex numbers");
            }
            for (size_t c = 0; c < 2; c++) {
                m(r, c) = complex(j[r][c], row_path + "[" + std::to_string(c) + "]");
            }
        }
        return m;
    }

    std::array<double, 3> vector3(const json &j, const std::string &path) const {
        if (!j.is_array() || j.size() != 3) {
            fail(path, "expected three numbers");
        }
        return {
            number(j[0], path + "[0]"),
            number(j[1], path + "[1]"),
            number(j[2], path + "[2]"),
        };
    }

    const json &member(const json &obj, const std::string &path, const std::string &key) const {
        auto it = obj.find(key);
        if (it == obj.end()) {
            fail(join_path(path, key), "missing required field '" + key + "'");
        }
        return *it;
    }

    void only_keys(const json &obj, const std::string &path, std::initializer_list<std::string_view> allowed) const {
        for (const auto &[key, value] : obj.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
                fail(join_path(path, key), "unknown field");
            }
        }
    }

    /// Returns the single key of a one-variant document.
    std::string variant_key(const json &doc, std::initializer_list<std::string_view> variants) const {
        if (!doc.is_object()) {
            fail("<document>", "expected a JSON object");
        }
        only_keys(doc, "", variants);
        if (doc.size() != 1) {
            std::string names;
            for (auto v : variants) {
                names += (names.empty() ? "" : ", ") + std::string(v);
            }
            fail("<document>", "expected exactly one of: " + names);
        }
        return doc.begin().key();
    }

   private:
    std::string_view text_;
    std::string source_;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path, 0, "<file>", "cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

double parse_inline_number(std::string_view text, const std::string &field) {
    std::string owned(text);
    char *end = nullptr;
    double value = std::strtod(owned.c_str(), &end);
    if (owned.empty() || end != owned.c_str() + owned.size() || !std::isfinite(value)) {
        throw ParseError("<command line>", 1, field, "'" + owned + "' is not a finite number");
    }
    return value;
}

void append_matrix_row(std::string &out, const ComplexMatrix2 &m, size_t row) {
    out += "[[" + format_number(m(row, 0).real()) + ", " + format_number(m(row, 0).imag()) + "], [" +
           format_number(m(row, 1).real()) + ", " + format_number(m(row, 1).imag()) + "]]";
}

}  // namespace

ParseError::ParseError(std::string source, int line, std::string field, const std::string &message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + field + ": " + message),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {
}

ChannelSpec parse_channel_spec(std::string_view text, const std::string &source) {
    Reader reader(text, source);
    json doc = reader.parse_document();
    std::string key = reader.variant_key(doc, {"kraus", "affine", "preset"});
    const json &body = doc[key];

    if (key == "kraus") {
        if (!body.is_array() || body.empty() || body.size() > kMaxKrausOps) {
            reader.fail("kraus", "expected a list of 1 to 4 Kraus operators");
        }
        KrausSpec spec;
        for (size_t i = 0; i < body.size(); i++) {
            spec.ops.push_back(reader.matrix2(body[i], "kraus[" + std::to_string(i) + "]"));
        }
        return spec;
    }

    if (key == "affine") {
        if (!body.is_object()) {
            reader.fail("affine", "expected an object with matrix and translation");
        }
        reader.only_keys(body, "affine", {"matrix", "translation"});
        const json &rows = reader.member(body, "affine", "matrix");
        if (!rows.is_array() || rows.size() != 3) {
            reader.fail("affine.matrix", "expected three rows");
        }
        AffineSpec spec;
        for (size_t r = 0; r < 3; r++) {
            auto row = reader.vector3(rows[r], "affine.matrix[" + std::to_string(r) + "]");
            for (size_t c = 0; c < 3; c++) {
                spec.map.m(r, c) = row[c];
            }
        }
        spec.map.t = BlochVector::from_array(
            reader.vector3(reader.member(body, "affine", "translation"), "affine.translation"));
        return spec;
    }

    if (!body.is_object()) {
        reader.fail("preset", "expected an object with name and params");
    }
    reader.only_keys(body, "preset", {"name", "params"});
    const json &name = reader.member(body, "preset", "name");
    if (!name.is_string()) {
        reader.fail("preset.name", "expected a string");
    }
    PresetSpec spec{name.get<std::string>(), {}};
    if (auto it = body.find("params"); it != body.end()) {
        if (!it->is_object()) {
            reader.fail("preset.params", "expected an object of name: number");
        }
        for (const auto &[param, value] : it->items()) {
            spec.params[param] = reader.number(value, "preset.params." + param);
        }
    }
    return spec;
}

TargetSpec parse_target_spec(std::string_view text, const std::string &source) {
    Reader reader(text, source);
    json doc = reader.parse_document();
    std::string key = reader.variant_key(doc, {"matrix", "named", "rotation"});
    const json &body = doc[key];

    if (key == "matrix") {
        return MatrixTarget{reader.matrix2(body, "matrix")};
    }
    if (key == "named") {
        if (!body.is_object()) {
            reader.fail("named", "expected an object with a gate field");
        }
        reader.only_keys(body, "named", {"gate"});
        const json &gate = reader.member(body, "named", "gate");
        if (!gate.is_string() || !is_named_gate(gate.get<std::string>())) {
            reader.fail("named.gate", "expected one of I, X, Y, Z, H, S, T");
        }
        return NamedTarget{gate.get<std::string>()};
    }
    if (!body.is_object()) {
        reader.fail("rotation", "expected an object with axis and angle");
    }
    reader.only_keys(body, "rotation", {"axis", "angle"});
    RotationTarget target;
    target.axis = BlochVector::from_array(reader.vector3(reader.member(body, "rotation", "axis"), "rotation.axis"));
    target.angle = reader.number(reader.member(body, "rotation", "angle"), "rotation.angle");
    return target;
}

PresetSpec parse_preset_inline(std::string_view arg) {
    constexpr std::string_view kPrefix = "preset:";
    if (!arg.starts_with(kPrefix)) {
        throw ParseError("<command line>", 1, "channel", "inline presets start with 'preset:'");
    }
    arg.remove_prefix(kPrefix.size());
    auto colon = arg.find(':');
    PresetSpec spec;
    spec.name = std::string(arg.substr(0, colon));
    if (spec.name.empty()) {
        throw ParseError("<command line>", 1, "preset.name", "missing preset name");
    }
    if (colon == std::string_view::npos) {
        return spec;
    }
    std::string_view rest = arg.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw ParseError("<command line>", 1, "preset.params", "expected key=value, got '" + std::string(item) + "'");
        }
        std::string key(item.substr(0, eq));
        if (spec.params.contains(key)) {
            throw ParseError("<command line>", 1, "preset.params." + key, "parameter given twice");
        }
        spec.params[key] = parse_inline_number(item.substr(eq + 1), "preset.params." + key);
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    return spec;
}

ChannelSpec load_channel_arg(const std::string &arg) {
    if (arg.starts_with("preset:")) {
        return parse_preset_inline(arg);
    }
    return parse_channel_spec(read_file(arg), arg);
}

TargetSpec load_target_arg(const std::string &arg) {
    if (is_named_gate(arg)) {
        return NamedTarget{arg};
    }
    return parse_target_spec(read_file(arg), arg);
}

bool is_named_gate(std::string_view name) {
    static constexpr std::array<std::string_view, 7> kGates{"I", "X", "Y", "Z", "H", "S", "T"};
    return std::find(kGates.begin(), kGates.end(), name) != kGates.end();
}

Channel resolve_channel(const ChannelSpec &spec) {
    if (const auto *kraus = std::get_if<KrausSpec>(&spec)) {
        return KrausChannel::make(kraus->ops);
    }
    if (const auto *affine = std::get_if<AffineSpec>(&spec)) {
        return affine->map;
    }
    const auto &p = std::get<PresetSpec>(spec);
    return preset(p.name, p.params);
}

UnitaryGate resolve_target(const TargetSpec &spec) {
    if (const auto *m = std::get_if<MatrixTarget>(&spec)) {
        return UnitaryGate::make(m->matrix);
    }
    if (const auto *r = std::get_if<RotationTarget>(&spec)) {
        return rotation_gate(r->axis, r->angle);
    }
    const std::string &gate = std::get<NamedTarget>(spec).gate;
    const double h = 1 / std::numbers::sqrt2;
    if (gate == "I") {
        return UnitaryGate::make(kPauliI);
    }
    if (gate == "X") {
        return UnitaryGate::make(kPauliX);
    }
    if (gate == "Y") {
        return UnitaryGate::make(kPauliY);
    }
    if (gate == "Z") {
        return UnitaryGate::make(kPauliZ);
    }
    if (gate == "H") {
        return UnitaryGate::make({{h, h, h, -h}});
    }
    if (gate == "S") {
        return UnitaryGate::make(ComplexMatrix2::diag(1, Complex{0, 1}));
    }
    if (gate == "T") {
        return UnitaryGate::make(ComplexMatrix2::diag(1, std::polar(1.0, std::numbers::pi / 4)));
    }
    throw QfidError(ErrorKind::invalid_argument, "unknown gate '" + gate + "'");
}

std::string format_number(double value) {
    if (value == 0) {
        value = 0;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string write_channel_spec(const KrausChannel &channel) {
    std::string out = "{\n  \"kraus\": [\n";
    auto ops = channel.ops();
    for (size_t i = 0; i < ops.size(); i++) {
        out += "    [";
        append_matrix_row(out, ops[i], 0);
        out += ", ";
        append_matrix_row(out, ops[i], 1);
        out += i + 1 < ops.size() ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string write_channel_spec(const AffineBlochMap &channel) {
    std::string out = "{\n  \"affine\": {\n    \"matrix\": [";
    for (size_t r = 0; r < 3; r++) {
        out += "[" + format_number(channel.m(r, 0)) + ", " + format_number(channel.m(r, 1)) + ", " +
               format_number(channel.m(r, 2)) + "]";
        out += r < 2 ? ", " : "],\n";
    }
    out += "    \"translation\": [" + format_number(channel.t.x) + ", " + format_number(channel.t.y) + ", " +
           format_number(channel.t.z) + "]\n  }\n}\n";
    return out;
}

}  // namespace qfid::cli
