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


#ifndef QENT_CLI_REPORT_HPP
#define QENT_CLI_REPORT_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "qent/matcore.hpp"

namespace qent::cli {

/// Ordered key/value report rendered as "key = value" lines or as one JSON
/// object. Reals print with 9 significant digits; entries below 1e-12 in
/// magnitude print as 0.
class Report {
 public:
  /// An information quantity in nats; rescaled when rendering in bits.
  void info(const std::string& key, double nats);
  void real(const std::string& key, double value);
  void integer(const std::string& key, long long value);
  void flag(const std::string& key, bool value);
  void text(const std::string& key, std::string value);
  void matrix(const std::string& key, const CMatrix& m);

  void render(std::ostream& out, bool json, bool bits) const;

 private:
  struct Info {
    double nats;
  };
  using Value = std::variant<Info, double, long long, bool, std::string, CMatrix>;
  std::vector<std::pair<std::string, Value>> entries_;
};

/// The textual form used for every real in a report.
[[nodiscard]] std::string format_real(double x);

}  // namespace qent::cli

#endif  // QENT_CLI_REPORT_HPP
