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

#include "s3s/fixtures.hpp"

#include <algorithm>
#include <fstream>

#include "s3s/error.hpp"

#ifndef S3S_FIXTURE_DIR
#define S3S_FIXTURE_DIR "fixtures"
#endif

namespace s3s {

using nlohmann::json;

namespace {

bool is_source(const json& j) {
  return j.is_string() && (j == "published" || j == "hand" || j == "oracle");
}

// Every number must sit directly inside an object that names its source.
void check_provenance(const json& node, const std::string& where,
                      const std::string& fixture) {
  if (node.is_object()) {
    const bool sourced = node.contains("source");
    if (sourced && !is_source(node["source"])) {
      throw DataError("fixture " + fixture + ": bad source at " + where);
    }
    for (const auto& [key, child] : node.items()) {
      if (sourced && child.is_number()) continue;
      check_provenance(child, where + "/" + key, fixture);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      check_provenance(node[i], where + "/" + std::to_string(i), fixture);
    }
  } else if (node.is_number()) {
    throw DataError("fixture " + fixture + ": value at " + where +
                    " has no source");
  }
}

}  // namespace

double Fixture::pinned(const json::json_pointer& ptr) const {
  const json& node = expected.at(ptr);
  return node.at("value").get<double>();
}

std::filesystem::path default_fixture_dir() { return S3S_FIXTURE_DIR; }

Fixture load_fixture(const std::string& name,
                     const std::filesystem::path& dir) {
  const auto sidecar = dir / (name + ".expected.json");
  std::ifstream in(sidecar);
  if (!in) throw DataError("no such fixture '" + name + "' in " + dir.string());

  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError("fixture " + name + ": " + e.what());
  }

  Fixture f;
  f.name = name;
  f.description = doc.value("description", "");
  f.config = doc.value("config", json::object());
  f.expected = doc.value("expected", json::object());
  check_provenance(f.expected, "", name);

  const auto data = dir / (name + ".csv");
  if (std::filesystem::exists(data)) f.dataset = load_dataset(data.string());
  return f;
}

std::vector<std::string> list_fixtures(const std::filesystem::path& dir) {
  std::vector<std::string> names;
  const std::string suffix = ".expected.json";
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string file = entry.path().filename().string();
    if (file.size() > suffix.size() && file.ends_with(suffix)) {
      names.push_back(file.substr(0, file.size() - suffix.size()));
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace s3s
