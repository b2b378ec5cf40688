// Copyright 2026 The condiam Authors
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

#include "condiam/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <map>

namespace condiam {

using nlohmann::json;

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

json report_header(std::string_view command) {
  return json{{"schema", kReportSchema},
              {"tool", "condiam"},
              {"version", std::string(kToolVersion)},
              {"command", std::string(command)}};
}

json to_json(const Graph& g) {
  std::map<int, int> histogram;
  for (int d : g.degrees()) ++histogram[d];
  json hist = json::array();
  for (auto [degree, count] : histogram) hist.push_back({{"degree", degree}, {"count", count}});
  return json{{"n", g.order()},
              {"m", g.size()},
              {"min_degree", g.min_degree()},
              {"max_degree", g.max_degree()},
              {"regular", g.is_regular()},
              {"unicyclic", is_unicyclic(g)},
              {"degree_histogram", hist}};
}

json to_json(const Spectrum& s) {
  return json{{"kind", std::string(to_string(s.kind))}, {"eigenvalues", s.values}};
}

json to_json(const SpectralMesh& mesh) {
  return json{{"kind", std::string(to_string(mesh.kind()))},
              {"points", std::vector<double>(mesh.points().begin(), mesh.points().end())},
              {"b", mesh.size()},
              {"eval_point", mesh.eval_point()}};
}

json to_json(const AlternatingPolynomial& p) {
  return json{{"k", p.k},
              {"value", p.extremal_value},
              {"values_at_mesh", p.values_at_mesh},
              {"sup_norm", p.sup_norm()},
              {"alternation_count", p.alternation_count}};
}

json to_json(const BoundQuery& q) {
  return json{{"alpha", q.alpha}, {"beta", q.beta}, {"s", q.s}, {"t", q.t}};
}

json to_json(const BoundCertificate& c) {
  json rows = json::array();
  for (const auto& r : c.rows) {
    rows.push_back({{"k", r.k}, {"pk", r.pk_value}, {"certified", r.certified}});
  }
  return json{{"query", to_json(c.query)},
              {"matrix", std::string(to_string(c.kind))},
              {"source", std::string(to_string(c.source))},
              {"threshold", c.threshold},
              {"margin", c.margin},
              {"vacuous", c.vacuous},
              {"min_certified_k", c.min_certified_k ? json(*c.min_certified_k) : json(nullptr)},
              {"rows", rows}};
}

json to_json(const ExactResult& r) {
  return json{{"value", r.value}, {"first", r.first}, {"second", r.second}};
}

json to_json(const SeparatorResult& r) {
  return json{{"separator_size", r.separator_size},
              {"part_size", r.part_size},
              {"first", r.first},
              {"second", r.second},
              {"separator", r.separator}};
}

json to_json(const Violation& v) {
  return json{{"check", v.check},          {"query", to_json(v.query)},
              {"matrix", std::string(to_string(v.kind))},
              {"k", v.k},                  {"pk", v.pk_value},
              {"threshold", v.threshold},  {"bound", v.bound},
              {"exact", v.exact},          {"first", v.first},
              {"second", v.second}};
}

}  // namespace condiam
