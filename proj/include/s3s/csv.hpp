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

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace s3s::csv {

struct Record {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

/// Minimal RFC 4180 reader: comma separated, double-quoted fields with ""
/// escapes, CRLF or LF line ends. A leading UTF-8 BOM is skipped.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Returns the next record, or nullopt at end of input. Blank lines are
  // skipped.
  std::optional<Record> next();

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  bool first_ = true;
};

// Quotes a field only when it contains a comma, quote or line break.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

}  // namespace s3s::csv
