// Copyright 2026 The supernorm Authors
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

#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "supernorm/matrix.hpp"
#include "supernorm/superop.hpp"

namespace supernorm::io {

using nlohmann::json;

/// {"rows": n, "cols": m, "entries": [[re, im], ...]} with n*m row-major entries.
json matrix_to_json(const ComplexMatrix& m);
/// Throws InvalidInput on any schema violation or non-finite number.
ComplexMatrix matrix_from_json(const json& j);

/// {"dim_in", "dim_out", "kraus_left": [...], "kraus_right": [...]}.
/// kraus_right is omitted when it equals kraus_left.
json channel_to_json(const SuperOp& phi);
/// kraus_right defaults to kraus_left when absent.
SuperOp channel_from_json(const json& j);

/// Throws InvalidInput if the file cannot be read or is not valid JSON.
json read_json_file(const std::filesystem::path& path);

ComplexMatrix load_matrix(const std::filesystem::path& path);
SuperOp load_channel(const std::filesystem::path& path);

}  // namespace supernorm::io
