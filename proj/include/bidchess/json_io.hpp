// Copyright 2026 The bidchess Authors
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

#include <json.hpp>

#include "bidchess/analytics.hpp"
#include "bidchess/rational.hpp"

namespace bidchess {

/// {"num": "...", "den": "...", "value": <double>}; the strings are exact.
nlohmann::json rational_json(const Rational& q);
nlohmann::json move_json(const MoveValue& m);
nlohmann::json report_json(const PositionReport& r);
nlohmann::json options_json(const RichmanTable& t, const Position& p);
nlohmann::json trace_json(const Trace& t);

}  // namespace bidchess
