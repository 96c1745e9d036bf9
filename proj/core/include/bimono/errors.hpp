// Copyright 2026 The bimono Authors
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
#include <exception>
#include <stdexcept>
#include <string>
#include <utility>

namespace bimono {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The value type ran out of capacity; retry with BigValue.
class ValueOverflow : public Error {
 public:
  using Error::Error;
};

class CountOverflow : public Error {
 public:
  using Error::Error;
};

/// A domain violates the bounding-function axioms, either at construction
/// or detected lazily during enumeration.
class DomainError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { Syntax, NegativeCoefficient, Improper, Limit };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : Error(what), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

class CheckpointError : public Error {
 public:
  enum class Kind { Format, FunctionMismatch, DomainMismatch, CorruptFrontier, Boundary, Io };

  CheckpointError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Raised by the partitioned runner after every earlier interval was drained.
class IntervalTaskError : public Error {
 public:
  IntervalTaskError(std::size_t interval, const std::string& what, std::exception_ptr cause = nullptr)
      : Error("interval " + std::to_string(interval) + ": " + what), interval_(interval), cause_(std::move(cause)) {}
  std::size_t interval() const { return interval_; }
  /// The exception thrown by the task itself.
  std::exception_ptr cause() const { return cause_; }

 private:
  std::size_t interval_;
  std::exception_ptr cause_;
};

}  // namespace bimono
