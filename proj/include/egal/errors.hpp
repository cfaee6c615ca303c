// Copyright 2026 The egal Authors
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

#ifndef EGAL_ERRORS_HPP
#define EGAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace egal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A partition is malformed or does not cover the game's player set.
class PartitionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation received an empty coalition where a nonempty one is needed.
class DegenerateCoalition : public Error {
 public:
  using Error::Error;
};

/// Two operands disagree on the player count (or an index is out of range).
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// A catalog variant was evaluated outside the domain where its formula
/// is well formed (p_k = 1, or Z_k = P_k).
class VariantDomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid generator or check configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A building specification violates its invariants.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (a computed column is not efficient).
class SelfCheckError : public Error {
 public:
  using Error::Error;
};

/// An input document could not be parsed. `where` names the offending field.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace egal

#endif  // EGAL_ERRORS_HPP
