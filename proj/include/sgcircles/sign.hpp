// Copyright 2026 The sgcircles Authors
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

#include <stdexcept>
#include <string>

namespace sgc {

// Edge sign.  Multiplication follows the usual sign rule, so the sign of an
// edge multiset is the product of its members.
enum class Sign : signed char { Plus = 1, Minus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::Plus : Sign::Minus;
}

constexpr Sign& operator*=(Sign& a, Sign b) {
  a = a * b;
  return a;
}

constexpr Sign negated(Sign s) { return s * Sign::Minus; }

constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

inline Sign sign_from_char(char c) {
  if (c == '+') return Sign::Plus;
  if (c == '-') return Sign::Minus;
  throw std::invalid_argument(std::string("bad sign token '") + c + "'");
}

}  // namespace sgc
