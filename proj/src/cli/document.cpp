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


#include "qent/cli/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qent::cli {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& source, const std::string& msg) {
  throw ParseError(source + ": " + msg);
}

Index to_index(const json& j, const std::string& source, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    fail(source, std::string(what) + " must be a positive integer");
  }
  return static_cast<Index>(j.get<long long>());
}

BlockShape shape_of(const json& j, const std::string& source) {
  if (!j.is_array() || j.empty()) fail(source, "shape must be a non-empty array of block sizes");
  std::vector<Index> dims;
  for (const auto& d : j) dims.push_back(to_index(d, source, "block size"));
  return BlockShape(std::move(dims));
}

Complex complex_of(const json& j, const std::string& source) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(source, "complex entries must be [re, im] pairs of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CMatrix matrix_of(const json& j, const std::string& source) {
  if (!j.is_array() || j.empty()) fail(source, "matrix must be a non-empty array of rows");
  const auto rows = static_cast<Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) fail(source, "matrix rows must be non-empty arrays");
  const auto cols = static_cast<Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      fail(source, "matrix rows have different lengths");
    }
    for (Index c = 0; c < cols; ++c) m(r, c) = complex_of(row[static_cast<std::size_t>(c)], source);
  }
  return m;
}

ojson json_of(const BlockShape& s) { return ojson(s.dims()); }

ojson json_of(const CMatrix& m) {
  ojson rows = ojson::array();
  for (Index r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

const json& field(const json& j, const char* key, const std::string& source) {
  if (!j.is_object() || !j.contains(key)) fail(source, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Document parse_state(const json& doc, const std::string& source) {
  const BlockShape shape = shape_of(field(doc, "shape", source), source);
  const CMatrix m = matrix_of(field(doc, "data", source), source);
  if (m.rows() != shape.total_dim() || m.cols() != shape.total_dim()) {
    fail(source, "state matrix does not match shape " + shape.to_string());
  }
  return AlgebraState::from_density(m, shape);
}

Document parse_channel(const json& doc, const std::string& source) {
  const json& data = field(doc, "data", source);
  BlockShape in = shape_of(field(data, "shape_in", source), source);
  BlockShape out = shape_of(field(data, "shape_out", source), source);
  const json& kraus = field(data, "kraus", source);
  if (!kraus.is_array() || kraus.empty()) fail(source, "kraus must be a non-empty array");
  std::vector<CMatrix> ops;
  for (const auto& k : kraus) ops.push_back(matrix_of(k, source));
  return channel_from_kraus(std::move(ops), std::move(in), std::move(out));
}

Document parse_coupling(const json& doc, const std::string& source) {
  const json& shape = field(doc, "shape", source);
  const BlockShape a = shape_of(field(shape, "a", source), source);
  const BlockShape b = shape_of(field(shape, "b", source), source);
  const CMatrix m = matrix_of(field(doc, "data", source), source);
  const Index n = a.total_dim() * b.total_dim();
  if (m.rows() != n || m.cols() != n) fail(source, "coupling matrix does not match its shapes");
  return Coupling::from_density(m, a, b);
}

Document parse_ensemble(const json& doc, const std::string& source) {
  const BlockShape shape = shape_of(field(doc, "shape", source), source);
  const json& data = field(doc, "data", source);
  if (!data.is_array() || data.empty()) fail(source, "ensemble data must be a non-empty array");
  Ensemble e;
  for (const auto& item : data) {
    const json& w = field(item, "weight", source);
    if (!w.is_number()) fail(source, "ensemble weight must be a number");
    const CMatrix m = matrix_of(field(item, "state", source), source);
    if (m.rows() != shape.total_dim() || m.cols() != shape.total_dim()) {
      fail(source, "ensemble state does not match shape " + shape.to_string());
    }
    e.weights.push_back(w.get<double>());
    e.states.push_back(AlgebraState::from_density(m, shape));
  }
  e.validate();
  return e;
}

struct Serializer {
  ojson operator()(const AlgebraState& s) const {
    return ojson{{"version", kFormatVersion},
                 {"kind", "state"},
                 {"shape", json_of(s.shape())},
                 {"data", json_of(s.density())}};
  }
  ojson operator()(const Channel& ch) const {
    ojson kraus = ojson::array();
    for (const auto& k : ch.kraus()) kraus.push_back(json_of(k));
    return ojson{{"version", kFormatVersion},
                 {"kind", "channel"},
                 {"data",
                  {{"shape_in", json_of(ch.shape_in())},
                   {"shape_out", json_of(ch.shape_out())},
                   {"kraus", std::move(kraus)}}}};
  }
  ojson operator()(const Coupling& c) const {
    return ojson{{"version", kFormatVersion},
                 {"kind", "coupling"},
                 {"shape", {{"a", json_of(c.shape_a())}, {"b", json_of(c.shape_b())}}},
                 {"data", json_of(c.omega())}};
  }
  ojson operator()(const Ensemble& e) const {
    ojson data = ojson::array();
    for (std::size_t n = 0; n < e.weights.size(); ++n) {
      data.push_back({{"weight", e.weights[n]}, {"state", json_of(e.states[n].density())}});
    }
    return ojson{{"version", kFormatVersion},
                 {"kind", "ensemble"},
                 {"shape", json_of(e.states.front().shape())},
                 {"data", std::move(data)}};
  }
};

}  // namespace

Document parse_document(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source, e.what());
  }
  const json& version = field(doc, "version", source);
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion) {
    fail(source, "unsupported format version (expected 1)");
  }
  const json& kind = field(doc, "kind", source);
  if (!kind.is_string()) fail(source, "kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "state") return parse_state(doc, source);
  if (k == "channel") return parse_channel(doc, source);
  if (k == "coupling") return parse_coupling(doc, source);
  if (k == "ensemble") return parse_ensemble(doc, source);
  fail(source, "unknown kind \"" + k + "\"");
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

std::string serialize_document(const Document& doc) {
  return std::visit(Serializer{}, doc).dump(2) + "\n";
}

const char* kind_name(const Document& doc) {
  static constexpr const char* kNames[] = {"state", "channel", "coupling", "ensemble"};
  return kNames[doc.index()];
}

}  // namespace qent::cli
