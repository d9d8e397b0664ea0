// Copyright 2026 The merging-paths Authors
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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>

#include "merging/error.hpp"

namespace merging {

enum class Format { kText, kCsv, kJson, kOeisBfile, kSvg };

inline Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "oeis-bfile") return Format::kOeisBfile;
  if (name == "svg") return Format::kSvg;
  throw ValidationError("unknown format '" + std::string(name) + "' (expected text, csv, json, oeis-bfile or svg)");
}

inline std::string format_name(Format f) {
  switch (f) {
    case Format::kText: return "text";
    case Format::kCsv: return "csv";
    case Format::kJson: return "json";
    case Format::kOeisBfile: return "oeis-bfile";
    case Format::kSvg: return "svg";
  }
  return "text";
}

/// What the command produces, for format checks.
struct Artifact {
  bool path_drawing = false;
  bool integer_sequence = false;
};

struct OutputSpec {
  Format format = Format::kText;
  std::string destination;  // empty: standard output
  std::optional<int> digits;

  void validate(const Artifact& artifact) const {
    if (format == Format::kSvg && !artifact.path_drawing) {
      throw ValidationError("--format svg is only available for path rendering");
    }
    if (format == Format::kOeisBfile && !artifact.integer_sequence) {
      throw ValidationError("--format oeis-bfile is only available for integer sequences");
    }
    if (digits && (*digits < 0 || *digits > 1000)) throw ValidationError("--digits must be in 0..1000");
  }

  void emit(const std::string& content) const {
    if (destination.empty() || destination == "-") {
      std::cout << content;
      std::cout.flush();
      return;
    }
    std::ofstream file(destination, std::ios::binary);
    if (!file) throw ValidationError("cannot open '" + destination + "' for writing");
    file << content;
    if (!file) throw ValidationError("failed writing '" + destination + "'");
  }
};

}  // namespace merging
