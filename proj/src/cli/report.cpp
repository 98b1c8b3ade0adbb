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


#include "qent/cli/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace qent::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kPrintZero = 1e-12;

ojson json_real(double x) {
  if (!std::isfinite(x)) return format_real(x);
  return std::stod(format_real(x));
}

ojson json_matrix(const CMatrix& m) {
  ojson rows = ojson::array();
  for (Index r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back({json_real(m(r, c).real()), json_real(m(r, c).imag())});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::abs(x) < kPrintZero) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

void Report::info(const std::string& key, double nats) { entries_.emplace_back(key, Info{nats}); }
void Report::real(const std::string& key, double value) { entries_.emplace_back(key, value); }
void Report::integer(const std::string& key, long long value) { entries_.emplace_back(key, value); }
void Report::flag(const std::string& key, bool value) { entries_.emplace_back(key, value); }
void Report::text(const std::string& key, std::string value) {
  entries_.emplace_back(key, std::move(value));
}
void Report::matrix(const std::string& key, const CMatrix& m) { entries_.emplace_back(key, m); }

void Report::render(std::ostream& out, bool json, bool bits) const {
  const double scale = bits ? 1.0 / std::log(2.0) : 1.0;
  ojson obj = ojson::object();
  for (const auto& [key, value] : entries_) {
    ojson j;
    std::string line;
    if (const auto* i = std::get_if<Info>(&value)) {
      j = json_real(i->nats * scale);
      line = format_real(i->nats * scale);
    } else if (const auto* r = std::get_if<double>(&value)) {
      j = json_real(*r);
      line = format_real(*r);
    } else if (const auto* n = std::get_if<long long>(&value)) {
      j = *n;
      line = std::to_string(*n);
    } else if (const auto* b = std::get_if<bool>(&value)) {
      j = *b;
      line = *b ? "true" : "false";
    } else if (const auto* s = std::get_if<std::string>(&value)) {
      j = *s;
      line = *s;
    } else {
      j = json_matrix(std::get<CMatrix>(value));
      line = j.dump();
    }
    if (json) {
      obj[key] = std::move(j);
    } else {
      out << key << " = " << line << '\n';
    }
  }
  if (json) out << obj.dump(2) << '\n';
}

}  // namespace qent::cli
