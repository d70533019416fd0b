// Copyright 2026 The Safe3Step Authors
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

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace s3s {

/// A team name. Whitespace is trimmed and internal runs of spaces collapse
/// to one; the display spelling is kept, but equality and ordering use the
/// ASCII case-folded key so "Penn State" and "penn  STATE" are one team.
class TeamId {
 public:
  TeamId() = default;
  explicit TeamId(std::string_view raw);

  const std::string& name() const noexcept { return name_; }
  const std::string& key() const noexcept { return key_; }
  bool empty() const noexcept { return key_.empty(); }

  friend bool operator==(const TeamId& a, const TeamId& b) noexcept {
    return a.key_ == b.key_;
  }
  friend std::strong_ordering operator<=>(const TeamId& a,
                                          const TeamId& b) noexcept {
    return a.key_ <=> b.key_;
  }

 private:
  std::string name_;
  std::string key_;
};

// Normalized display form of a raw name (trim + collapse spaces).
std::string normalize_team_name(std::string_view raw);

}  // namespace s3s

template <>
struct std::hash<s3s::TeamId> {
  std::size_t operator()(const s3s::TeamId& t) const noexcept {
    return std::hash<std::string>{}(t.key());
  }
};
