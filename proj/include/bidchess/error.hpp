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

#include <stdexcept>
#include <string>

namespace bidchess {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (FEN strings, piece-set identifiers, board sizes).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition (e.g. asked a terminal
/// position for its move options).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A position is not part of the space or table being queried.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// An action that the bidding protocol does not allow right now: wrong
/// phase or side, a bid out of range, an unaffordable choice, an illegal
/// move.
class ProtocolError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// A persisted file failed its checksum or version check.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace bidchess
