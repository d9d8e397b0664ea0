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

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "merging/arrival.hpp"
#include "merging/bijections.hpp"
#include "merging/classes.hpp"
#include "merging/numeric.hpp"
#include "merging/oracle.hpp"
#include "merging/trails.hpp"

namespace merging::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kMergeResultSchema = "merging.merge_result/1";
inline constexpr const char* kVerificationSchema = "merging.verification/1";
inline constexpr const char* kClassesSchema = "merging.classes/1";
inline constexpr const char* kTrailSchema = "merging.trail/1";

/// Big integers go out as JSON numbers when they fit in 64 bits, as decimal strings otherwise.
inline Json big(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

inline Json to_json(const ArrivalSequence& b, const MergeResult& r) {
  Json j;
  j["schema"] = kMergeResultSchema;
  j["bits"] = b.str();
  j["length"] = b.size();
  j["zeros"] = b.zeros();
  j["right_lane"] = r.right_lane;
  j["left_lane"] = r.left_lane;
  j["bounce_positions"] = r.bounce_positions;
  j["touch_positions"] = r.touch_positions;
  j["parity"] = r.parity.str();
  j["endpoint"] = Json::array({r.endpoint.n, r.endpoint.m});
  j["r"] = r.r();
  j["path"] = merging_path(b).str();
  return j;
}

inline Json to_json(const oracle::VerificationReport& r) {
  Json j;
  j["claim"] = r.claim;
  j["range"] = r.range;
  j["status"] = r.passed ? "pass" : "fail";
  j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  j["compared"] = r.compared;
  return j;
}

inline Json to_json(const std::vector<oracle::VerificationReport>& reports) {
  Json j;
  j["schema"] = kVerificationSchema;
  j["status"] = oracle::all_passed(reports) ? "pass" : "fail";
  j["reports"] = Json::array();
  for (const auto& r : reports) j["reports"].push_back(to_json(r));
  return j;
}

inline Json to_json(const ColorBlindClass& cls) {
  Json j;
  j["representative"] = cls.representative.str();
  j["right_lane_vector"] = cls.right_lane_vector;
  j["touch_vector"] = cls.touch_vector;
  j["size"] = cls.size();
  j["members"] = Json::array();
  for (const auto& m : cls.members) j["members"].push_back(m.str());
  return j;
}

inline Json to_json(const std::vector<ColorBlindClass>& classes, std::int64_t len) {
  Json j;
  j["schema"] = kClassesSchema;
  j["length"] = len;
  j["class_count"] = classes.size();
  j["classes"] = Json::array();
  for (const auto& c : classes) j["classes"].push_back(to_json(c));
  return j;
}

inline Json to_json(const Edge& e) { return Json::array({e.i, e.j}); }

inline Json edges_json(const std::vector<Edge>& edges) {
  Json j = Json::array();
  for (const auto& e : edges) j.push_back(to_json(e));
  return j;
}

}  // namespace merging::io
