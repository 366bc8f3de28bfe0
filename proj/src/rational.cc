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

#include "kopt/rational.h"

#include <charconv>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"

namespace kopt {
namespace {

absl::StatusOr<int64_t> ParseInt(absl::string_view text, absl::string_view whole) {
  int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed rational '", whole, "'"));
  }
  return value;
}

}  // namespace

absl::StatusOr<Rational> ParseRational(absl::string_view text) {
  const size_t slash = text.find('/');
  if (slash == absl::string_view::npos) {
    absl::StatusOr<int64_t> num = ParseInt(text, text);
    if (!num.ok()) return num.status();
    return Rational(*num);
  }
  absl::StatusOr<int64_t> num = ParseInt(text.substr(0, slash), text);
  if (!num.ok()) return num.status();
  absl::StatusOr<int64_t> den = ParseInt(text.substr(slash + 1), text);
  if (!den.ok()) return den.status();
  if (*den == 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("zero denominator in '", text, "'"));
  }
  return Rational(*num, *den);
}

std::string RationalToString(const Rational& r) {
  if (r.denominator() == 1) return absl::StrCat(r.numerator());
  return absl::StrCat(r.numerator(), "/", r.denominator());
}

double RationalToDouble(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

}  // namespace kopt
