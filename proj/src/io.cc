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

#include "kopt/io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace kopt {
namespace {

absl::Status LineError(int line, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", message));
}

template <typename T>
std::optional<T> ParseNumber(absl::string_view token) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    return std::nullopt;
  return value;
}

std::vector<absl::string_view> Tokens(absl::string_view line) {
  return absl::StrSplit(line, absl::ByAnyChar(" \t\r"), absl::SkipEmpty());
}

enum class Section { kHeader, kCoords, kWeights, kDone };

}  // namespace

absl::StatusOr<Instance> ParseTsplib(absl::string_view text) {
  std::optional<int> dimension;
  std::string type;
  std::string weight_type;
  std::string weight_format;
  std::vector<std::optional<Point>> coords;
  std::vector<Weight> entries;
  int weights_line = 0;
  Section section = Section::kHeader;

  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    const absl::string_view trimmed = absl::StripAsciiWhitespace(line);
    if (trimmed.empty()) continue;
    if (trimmed == "EOF") {
      section = Section::kDone;
      break;
    }
    const bool is_keyword =
        absl::ascii_isalpha(static_cast<unsigned char>(trimmed.front()));

    if (section == Section::kCoords && !is_keyword) {
      std::vector<absl::string_view> tok = Tokens(trimmed);
      if (tok.size() != 3) return LineError(line_no, "expected 'id x y'");
      auto id = ParseNumber<int>(tok[0]);
      auto x = ParseNumber<double>(tok[1]);
      auto y = ParseNumber<double>(tok[2]);
      if (!id || !x || !y) return LineError(line_no, "malformed coordinate");
      if (*id < 1 || *id > *dimension) {
        return LineError(line_no, absl::StrCat("node id ", *id,
                                               " outside DIMENSION ",
                                               *dimension));
      }
      if (coords[*id - 1].has_value()) {
        return LineError(line_no, absl::StrCat("duplicate node id ", *id));
      }
      coords[*id - 1] = Point{*x, *y};
      continue;
    }
    if (section == Section::kWeights && !is_keyword) {
      for (absl::string_view tok : Tokens(trimmed)) {
        auto w = ParseNumber<Weight>(tok);
        if (!w) {
          return LineError(line_no,
                           absl::StrCat("malformed weight '", tok, "'"));
        }
        entries.push_back(*w);
      }
      continue;
    }

    if (trimmed == "NODE_COORD_SECTION" || trimmed == "EDGE_WEIGHT_SECTION") {
      if (!dimension) return LineError(line_no, "section before DIMENSION");
      if (trimmed == "NODE_COORD_SECTION") {
        if (weight_type != "EUC_2D") {
          return LineError(line_no, "NODE_COORD_SECTION requires EUC_2D");
        }
        section = Section::kCoords;
        coords.assign(*dimension, std::nullopt);
      } else {
        if (weight_type != "EXPLICIT") {
          return LineError(line_no, "EDGE_WEIGHT_SECTION requires EXPLICIT");
        }
        section = Section::kWeights;
        weights_line = line_no;
      }
      continue;
    }

    const size_t colon = trimmed.find(':');
    if (colon == absl::string_view::npos) {
      return LineError(line_no,
                       absl::StrCat("unexpected line '", trimmed, "'"));
    }
    const std::string key(absl::StripAsciiWhitespace(trimmed.substr(0, colon)));
    const std::string value(
        absl::StripAsciiWhitespace(trimmed.substr(colon + 1)));
    if (key == "NAME" || key == "COMMENT") {
      continue;
    } else if (key == "TYPE") {
      if (value != "TSP") {
        return LineError(line_no, absl::StrCat("unsupported TYPE '", value,
                                               "'"));
      }
      type = value;
    } else if (key == "DIMENSION") {
      auto d = ParseNumber<int>(value);
      if (!d) return LineError(line_no, "malformed DIMENSION");
      if (*d < 3) return LineError(line_no, "n must be >= 3");
      dimension = *d;
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (value != "EUC_2D" && value != "EXPLICIT") {
        return LineError(line_no, absl::StrCat(
                                      "unsupported EDGE_WEIGHT_TYPE '",
                                      value, "'"));
      }
      weight_type = value;
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      if (value != "FULL_MATRIX") {
        return LineError(line_no, absl::StrCat(
                                      "unsupported EDGE_WEIGHT_FORMAT '",
                                      value, "'"));
      }
      weight_format = value;
    } else {
      return LineError(line_no, absl::StrCat("unsupported keyword '", key,
                                             "'"));
    }
  }

  if (!dimension) return absl::InvalidArgumentError("missing DIMENSION");
  if (type.empty()) return absl::InvalidArgumentError("missing TYPE");
  const int n = *dimension;
  if (weight_type == "EUC_2D") {
    std::vector<Point> points;
    points.reserve(n);
    for (int i = 0; i < n; ++i) {
      if (!coords.empty() && coords[i].has_value()) {
        points.push_back(*coords[i]);
        continue;
      }
      return absl::InvalidArgumentError(absl::StrCat(
          "DIMENSION mismatch: node ", i + 1, " has no coordinates"));
    }
    return Instance::FromCoordinates(std::move(points));
  }
  if (weight_type == "EXPLICIT") {
    if (weight_format.empty()) {
      return absl::InvalidArgumentError("EXPLICIT requires EDGE_WEIGHT_FORMAT");
    }
    if (entries.size() != static_cast<size_t>(n) * n) {
      return LineError(weights_line,
                       absl::StrCat("DIMENSION mismatch: FULL_MATRIX has ",
                                    entries.size(), " entries, expected ",
                                    n * n));
    }
    std::vector<std::vector<Weight>> rows(n, std::vector<Weight>(n));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) rows[u][v] = entries[u * n + v];
    return Instance::FromMatrix(rows);
  }
  return absl::InvalidArgumentError("missing EDGE_WEIGHT_TYPE");
}

std::string WriteTsplib(const Instance& inst, absl::string_view name) {
  std::string out = absl::StrCat("NAME : ", name, "\nTYPE : TSP\nDIMENSION : ",
                                 inst.size(), "\n");
  if (inst.kind() == Instance::Kind::kEuclidean2D) {
    absl::StrAppend(&out, "EDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n");
    for (int i = 0; i < inst.size(); ++i) {
      const Point& p = inst.coordinates()[i];
      absl::StrAppend(&out, absl::StrFormat("%d %.17g %.17g\n", i + 1, p.x,
                                            p.y));
    }
  } else {
    absl::StrAppend(&out,
                    "EDGE_WEIGHT_TYPE : EXPLICIT\nEDGE_WEIGHT_FORMAT : "
                    "FULL_MATRIX\nEDGE_WEIGHT_SECTION\n");
    for (int u = 0; u < inst.size(); ++u) {
      for (int v = 0; v < inst.size(); ++v) {
        absl::StrAppend(&out, v ? " " : "", inst.entry(u, v));
      }
      absl::StrAppend(&out, "\n");
    }
  }
  absl::StrAppend(&out, "EOF\n");
  return out;
}

nlohmann::json InstanceToJson(const Instance& inst) {
  nlohmann::json weights = nlohmann::json::array();
  for (int u = 0; u < inst.size(); ++u) {
    nlohmann::json row = nlohmann::json::array();
    for (int v = 0; v < inst.size(); ++v) row.push_back(inst.entry(u, v));
    weights.push_back(std::move(row));
  }
  return {{"n", inst.size()}, {"weights", std::move(weights)}};
}

absl::StatusOr<Instance> InstanceFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("weights") ||
      !j["n"].is_number_integer() || !j["weights"].is_array()) {
    return absl::InvalidArgumentError(
        "instance JSON must be {\"n\": int, \"weights\": [[int]]}");
  }
  const int n = j["n"].get<int>();
  const nlohmann::json& w = j["weights"];
  if (static_cast<int>(w.size()) != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "\"weights\" has ", w.size(), " rows but n = ", n));
  }
  std::vector<std::vector<Weight>> rows(n);
  for (int u = 0; u < n; ++u) {
    if (!w[u].is_array()) {
      return absl::InvalidArgumentError(
          absl::StrCat("weights row ", u + 1, " is not an array"));
    }
    for (const nlohmann::json& x : w[u]) {
      if (!x.is_number_integer()) {
        return absl::InvalidArgumentError(
            absl::StrCat("weights row ", u + 1, " has a non-integer entry"));
      }
      rows[u].push_back(x.get<Weight>());
    }
  }
  return Instance::FromMatrix(rows);
}

nlohmann::json TourToJson(const Tour& tour) {
  nlohmann::json order = nlohmann::json::array();
  for (Vertex v : tour.order()) order.push_back(v + 1);
  return {{"order", std::move(order)}};
}

absl::StatusOr<Tour> TourFromJson(const nlohmann::json& j, int n) {
  if (!j.is_object() || !j.contains("order") || !j["order"].is_array()) {
    return absl::InvalidArgumentError("tour JSON must be {\"order\": [int]}");
  }
  std::vector<Vertex> order;
  for (const nlohmann::json& x : j["order"]) {
    if (!x.is_number_integer()) {
      return absl::InvalidArgumentError("tour order has a non-integer entry");
    }
    order.push_back(x.get<int>() - 1);
  }
  return Tour::FromOrder(std::move(order), n);
}

absl::StatusOr<Instance> ParseInstanceText(absl::string_view text) {
  const absl::string_view trimmed = absl::StripLeadingAsciiWhitespace(text);
  if (!trimmed.empty() && trimmed.front() == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) {
      return absl::InvalidArgumentError("instance file is not valid JSON");
    }
    return InstanceFromJson(j);
  }
  return ParseTsplib(text);
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

absl::Status WriteFile(const std::string& path, absl::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  }
  out << contents;
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("short write to ", path));
}

absl::StatusOr<Instance> LoadInstance(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<Instance> inst = ParseInstanceText(*text);
  if (!inst.ok()) {
    return absl::Status(inst.status().code(),
                        absl::StrCat(path, ": ", inst.status().message()));
  }
  return inst;
}

absl::StatusOr<Tour> LoadTour(const std::string& path, int n) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  nlohmann::json j = nlohmann::json::parse(*text, nullptr, false);
  if (j.is_discarded()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": not valid JSON"));
  }
  return TourFromJson(j, n);
}

}  // namespace kopt
