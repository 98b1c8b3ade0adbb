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


#ifndef QENT_CLI_DOCUMENT_HPP
#define QENT_CLI_DOCUMENT_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "qent/channel.hpp"

namespace qent::cli {

/// Malformed document: bad syntax, missing fields, wrong types.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

/// One of the four document kinds.
using Document = std::variant<AlgebraState, Channel, Coupling, Ensemble>;

/// Parses and validates a document. Syntax and layout problems raise
/// ParseError; violated invariants raise InvalidInput.
[[nodiscard]] Document parse_document(const std::string& text, const std::string& source = "<input>");
[[nodiscard]] Document read_document(const std::string& path);

[[nodiscard]] std::string serialize_document(const Document& doc);

[[nodiscard]] const char* kind_name(const Document& doc);

}  // namespace qent::cli

#endif  // QENT_CLI_DOCUMENT_HPP
