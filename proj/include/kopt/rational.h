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

#ifndef KOPT_RATIONAL_H_
#define KOPT_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace kopt {

// Exact rationals for bucket exponents and runtime exponents.
using Rational = boost::rational<int64_t>;

// Accepts "p", "p/q" or "-p/q". Rejects zero denominators and trailing junk.
absl::StatusOr<Rational> ParseRational(absl::string_view text);

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string RationalToString(const Rational& r);

double RationalToDouble(const Rational& r);

}  // namespace kopt

#endif  // KOPT_RATIONAL_H_
