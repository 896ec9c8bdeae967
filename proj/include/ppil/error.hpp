// Copyright 2026 The PPIL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppil {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad modulus, mismatched rings,
/// invalid representative set, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The operation is well defined mathematically but not supported for this
/// input (e.g. refined non-linearity with a non-unit linear coefficient).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A map that was required to be a permutation is not. Carries the evidence:
/// two distinct inputs that collide on the same output.
class NotPermutationError : public Error {
 public:
  NotPermutationError(std::int64_t first, std::int64_t second,
                      std::int64_t value)
      : Error("not a permutation: f(" + std::to_string(first) + ") == f(" +
              std::to_string(second) + ") == " + std::to_string(value)),
        first_(first),
        second_(second),
        value_(value) {}

  std::int64_t first() const noexcept { return first_; }
  std::int64_t second() const noexcept { return second_; }
  std::int64_t value() const noexcept { return value_; }

 private:
  std::int64_t first_;
  std::int64_t second_;
  std::int64_t value_;
};

/// No quadratic permutation polynomial of irreducible degree exists for N.
class NoQppError : public Error {
 public:
  explicit NoQppError(std::int64_t n)
      : Error("no irreducible quadratic permutation polynomial exists for N=" +
              std::to_string(n)),
        n_(n) {}
  std::int64_t modulus() const noexcept { return n_; }

 private:
  std::int64_t n_;
};

/// The candidate space of a search was empty (e.g. restrictive bounds).
class EmptySearchError : public Error {
 public:
  using Error::Error;
};

/// Candidates exist, but none reaches the spread-factor floor.
class SpreadFloorError : public Error {
 public:
  SpreadFloorError(std::int64_t n, std::int64_t floor)
      : Error("no candidate for N=" + std::to_string(n) +
              " reaches the spread floor D >= " + std::to_string(floor)),
        floor_(floor) {}
  std::int64_t floor() const noexcept { return floor_; }

 private:
  std::int64_t floor_;
};

}  // namespace ppil
