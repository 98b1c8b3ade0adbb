// Copyright 2026 The qent Authors
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

#ifndef QENT_ERRORS_HPP
#define QENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qent {

/// A precondition or invariant of a library operation was violated.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A problem exceeds the configured dimension guard.
class DimensionGuard : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace qent

#endif  // QENT_ERRORS_HPP
