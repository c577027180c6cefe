// Copyright 2026 The lrsched Authors
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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lrsched/model.hpp"

namespace lrsched {

/// Malformed instance document; the message names the offending field.
class InstanceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON instance format:
///
///   {"horizon": 16,                       // optional, recomputed if absent
///    "jobs": [{"id": 1, "p": 4, "r": 0,
///              "cost": {"type": "table", "values": [0, "1/2", "inf", ...]}}]}
///
/// Other cost forms, expanded to dense tables on load:
///   {"type": "step", "breaks": [[t, v], ...]}     // v from t on, 0 before
///   {"type": "weighted_completion", "w": w}       // w * max(0, t - r)
///   {"type": "weighted_tardiness", "w": w, "d": d} // w * max(0, t - d)
/// Values are integers, "num/den" strings, or "inf".
Instance parse_instance(std::string_view json_text);
std::string serialize_instance(const Instance& inst);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& inst, const std::filesystem::path& path);

}  // namespace lrsched
