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

#ifndef CONDIAM_REPORT_HPP_
#define CONDIAM_REPORT_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "condiam/altpoly.hpp"
#include "condiam/bounds.hpp"
#include "condiam/graph.hpp"
#include "condiam/oracle.hpp"
#include "condiam/spectral.hpp"

namespace condiam {

inline constexpr int kReportSchema = 1;
inline constexpr std::string_view kToolVersion = "0.3.0";

std::string sha256_hex(std::string_view bytes);

// Top-level object with schema, tool name and version.
nlohmann::json report_header(std::string_view command);

nlohmann::json to_json(const Graph& g);  // n, m, degree histogram
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const SpectralMesh& mesh);
nlohmann::json to_json(const AlternatingPolynomial& p);
nlohmann::json to_json(const BoundQuery& q);
nlohmann::json to_json(const BoundCertificate& c);
nlohmann::json to_json(const ExactResult& r);
nlohmann::json to_json(const SeparatorResult& r);
nlohmann::json to_json(const Violation& v);

}  // namespace condiam

#endif  // CONDIAM_REPORT_HPP_
