// Copyright 2026 The QDM Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <string>

namespace qdm::detail {

// Two-space indented JSON in which arrays of scalars, and objects of at most
// three scalar members, stay on one line.
template <class Json> void pretty_json(const Json &j, std::string &out, std::size_t indent = 0) {
    const auto scalar = [](const Json &e) { return !e.is_structured(); };
    const std::string pad(indent + 2, ' ');
    const bool flat = std::all_of(j.begin(), j.end(), scalar);
    if (j.is_array() && flat) {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += (i ? ", " : "") + j[i].dump();
        }
        out += ']';
    } else if (j.is_object() && flat && j.size() <= 3) {
        out += '{';
        std::size_t i = 0;
        for (const auto &item : j.items()) {
            out += (i++ ? ", " : "") + Json(item.key()).dump() + ": " + item.value().dump();
        }
        out += '}';
    } else if (j.is_array()) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            pretty_json(j[i], out, indent + 2);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(indent, ' ') + "]";
    } else if (j.is_object()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto &item : j.items()) {
            out += pad + Json(item.key()).dump() + ": ";
            pretty_json(item.value(), out, indent + 2);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += std::string(indent, ' ') + "}";
    } else {
        out += j.dump();
    }
}

template <class Json> std::string pretty_json_document(const Json &j) {
    std::string out;
    pretty_json(j, out);
    return out + "\n";
}

} // namespace qdm::detail
