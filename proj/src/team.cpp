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

#include "s3s/team.hpp"

#include <cctype>

#include "s3s/error.hpp"

namespace s3s {

std::string normalize_team_name(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

TeamId::TeamId(std::string_view raw) : name_(normalize_team_name(raw)) {
  if (name_.empty()) throw ValidationError("empty team name");
  key_.reserve(name_.size());
  for (char c : name_) {
    key_.push_back(
        static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
}

}  // namespace s3s
