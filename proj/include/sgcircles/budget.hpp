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

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sgc {

// Exhaustive searches fail loudly instead of truncating silently.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error("budget exceeded: " + what) {}
};

struct Budget {
  std::uint64_t max_circles = 1'000'000;
  std::uint64_t max_classes = std::uint64_t{1} << 22;
  std::uint64_t max_search_nodes = 50'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget with_wall_seconds(double secs) {
    Budget b;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(secs));
    return b;
  }

  void check_deadline(const char* where) const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw BudgetExceeded(std::string("wall clock limit hit in ") + where);
  }
};

}  // namespace sgc
