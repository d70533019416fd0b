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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "s3s/ingest.hpp"

namespace s3s {

/// A named test season: `<name>.csv` (optional, ingest format) plus a
/// `<name>.expected.json` sidecar of pinned values. Every number under
/// "expected" sits in an object carrying "source", usually as
/// {"value": x, "source": s}, where s is one of
/// "published" (printed in a published season table), "hand" (worked out by
/// hand from the definitions) or "oracle" (computed by an independent
/// method in the test suite).
struct Fixture {
  std::string name;
  std::string description;
  std::optional<SeasonDataset> dataset;
  nlohmann::json config;    // solver / run settings, may be empty
  nlohmann::json expected;  // provenance-wrapped values

  // Unwraps expected[path...]["value"].
  double pinned(const nlohmann::json::json_pointer& ptr) const;
};

std::filesystem::path default_fixture_dir();

// Throws DataError for a missing fixture or an unwrapped number.
Fixture load_fixture(const std::string& name,
                     const std::filesystem::path& dir = default_fixture_dir());

std::vector<std::string> list_fixtures(
    const std::filesystem::path& dir = default_fixture_dir());

}  // namespace s3s
