// Copyright 2026 The kopt Authors.
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

#ifndef KOPT_IO_H_
#define KOPT_IO_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "kopt/instance.h"

namespace kopt {

// Reads the TSPLIB subset TYPE: TSP with EDGE_WEIGHT_TYPE EUC_2D, or
// EXPLICIT with EDGE_WEIGHT_FORMAT FULL_MATRIX. Errors carry line numbers.
absl::StatusOr<Instance> ParseTsplib(absl::string_view text);

// Inverse of ParseTsplib for both supported kinds.
std::string WriteTsplib(const Instance& inst, absl::string_view name = "kopt");

// {"n": int, "weights": [[int]]}, row-major with a zero diagonal.
nlohmann::json InstanceToJson(const Instance& inst);
absl::StatusOr<Instance> InstanceFromJson(const nlohmann::json& j);

// {"order": [int]} with 1-based vertices.
nlohmann::json TourToJson(const Tour& tour);
absl::StatusOr<Tour> TourFromJson(const nlohmann::json& j, int n);

// Instance files are JSON when the first non-blank character is '{', TSPLIB
// otherwise.
absl::StatusOr<Instance> ParseInstanceText(absl::string_view text);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, absl::string_view contents);

absl::StatusOr<Instance> LoadInstance(const std::string& path);
absl::StatusOr<Tour> LoadTour(const std::string& path, int n);

}  // namespace kopt

#endif  // KOPT_IO_H_
