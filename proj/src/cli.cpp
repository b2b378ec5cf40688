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

#include "condiam/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "condiam/altpoly.hpp"
#include "condiam/bounds.hpp"
#include "condiam/error.hpp"
#include "condiam/graph.hpp"
#include "condiam/oracle.hpp"
#include "condiam/report.hpp"
#include "condiam/spectral.hpp"

namespace condiam::cli {

namespace {

using nlohmann::json;

struct InputOptions {
  std::string path;
  std::string format = "edgelist";
  std::string generate;
  double dedup_tol = kDefaultDedupTol;
  double convergence_tol = kDefaultConvergenceTol;
  bool json = false;
};

struct LoadedGraph {
  Graph graph;
  std::string digest;
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool with_file = true) {
  if (with_file) cmd->add_option("input", in.path, "Graph file");
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  cmd->add_option("--generate", in.generate,
                  "Built-in graph instead of a file: family:n[:seed[:p]] with family in "
                  "cycle, path, complete, star, petersen, random_connected");
  cmd->add_option("--dedup-tol", in.dedup_tol, "Eigenvalue merge tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", in.convergence_tol, "Eigensolver convergence tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--json", in.json, "Emit a JSON report on stdout");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, sep)) parts.push_back(part);
  return parts;
}

double to_double(const std::string& token) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw InputError("not a number: '" + token + "'");
  }
  if (used != token.size()) throw InputError("not a number: '" + token + "'");
  return value;
}

long long to_integer(const std::string& token) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw InputError("not an integer: '" + token + "'");
  }
  if (used != token.size()) throw InputError("not an integer: '" + token + "'");
  return value;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& token : split(text, ',')) {
    if (!token.empty()) out.push_back(to_double(token));
  }
  if (out.empty()) throw InputError("empty number list");
  return out;
}

bool has_graph_input(const InputOptions& in) { return !in.path.empty() || !in.generate.empty(); }

LoadedGraph load_graph(const InputOptions& in) {
  if (!in.path.empty() && !in.generate.empty()) {
    throw InputError("give either an input file or --generate, not both");
  }
  if (!in.generate.empty()) {
    auto parts = split(in.generate, ':');
    if (parts.size() < 2 || parts.size() > 4) {
      throw InputError("--generate expects family:n[:seed[:p]]");
    }
    const GraphFamily family = parse_family(parts[0]);
    const int n = static_cast<int>(to_integer(parts[1]));
    const auto seed = parts.size() > 2 ? static_cast<std::uint64_t>(to_integer(parts[2])) : 0;
    const double p = parts.size() > 3 ? to_double(parts[3]) : kDefaultExtraEdgeProbability;
    return {generate(family, n, seed, p), sha256_hex(in.generate)};
  }
  if (in.path.empty()) throw InputError("no input graph (file or --generate)");
  std::ifstream file(in.path, std::ios::binary);
  if (!file) throw InputError("cannot read '" + in.path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  Graph g = in.format == "dimacs" ? parse_dimacs(text) : parse_edge_list(text);
  return {std::move(g), sha256_hex(text)};
}

SpectralOptions spectral_options(const InputOptions& in) {
  SpectralOptions o;
  o.dedup_tol = in.dedup_tol;
  o.convergence_tol = in.convergence_tol;
  return o;
}

// Human-readable number; tiny magnitudes print as 0.
std::string fmt(double x) {
  if (std::fabs(x) < 1e-13) x = 0.0;
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

void print_list(std::ostream& out, std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << fmt(values[i]);
  out << "\n";
}

void print_graph_line(std::ostream& out, const Graph& g) {
  out << "graph: n=" << g.order() << " m=" << g.size() << " degrees " << g.min_degree() << ".."
      << g.max_degree() << (g.is_regular() ? " (regular)" : "") << "\n";
}

std::string query_text(const BoundQuery& q) {
  std::ostringstream os;
  os << "(alpha=" << q.alpha << ", beta=" << q.beta << ", s=" << q.s << ", t=" << q.t << ")";
  return os.str();
}

// ---------------------------------------------------------------- spectrum

struct SpectrumCommand {
  InputOptions in;
  std::string matrix = "degree-adjacency";
};

int run_spectrum(const SpectrumCommand& cmd, std::ostream& out) {
  LoadedGraph loaded = load_graph(cmd.in);
  const Graph& g = loaded.graph;
  const MatrixKind kind = parse_matrix_kind(cmd.matrix);
  Spectrum spectrum = sym_eigenvalues(matrix_of_kind(g, kind), kind, cmd.in.convergence_tol);
  std::optional<SpectralMesh> mesh;
  if (kind != MatrixKind::kStandardAdjacency) mesh = extract_mesh(spectrum, cmd.in.dedup_tol);

  if (cmd.in.json) {
    json report = report_header("spectrum");
    report["input_digest"] = loaded.digest;
    report["graph"] = to_json(g);
    report["spectrum"] = to_json(spectrum);
    report["dedup_tol"] = cmd.in.dedup_tol;
    report["mesh"] = mesh ? to_json(*mesh) : json(nullptr);
    out << report.dump(2) << "\n";
    return kOk;
  }
  print_graph_line(out, g);
  out << "matrix: " << to_string(kind) << "\n";
  out << "eigenvalues: ";
  print_list(out, spectrum.values);
  if (mesh) {
    out << "mesh (b=" << mesh->size() << ", eval " << fmt(mesh->eval_point()) << "): ";
    print_list(out, mesh->points());
  }
  return kOk;
}

// ----------------------------------------------------------------- altpoly

struct AltpolyCommand {
  InputOptions in;
  std::string matrix = "degree-adjacency";
  std::string mesh;
  std::string spectrum;
  std::optional<double> eval;
  std::string k = "all";
  bool lp_only = false;
};

int run_altpoly(const AltpolyCommand& cmd, std::ostream& out) {
  const MatrixKind kind = parse_matrix_kind(cmd.matrix);
  if (kind == MatrixKind::kStandardAdjacency) {
    throw InputError("alternating polynomials need --matrix degree-adjacency or laplacian");
  }
  const int sources = (has_graph_input(cmd.in) ? 1 : 0) + (cmd.mesh.empty() ? 0 : 1) +
                      (cmd.spectrum.empty() ? 0 : 1);
  if (sources != 1) throw InputError("give exactly one of: graph input, --mesh, --spectrum");
  if (cmd.eval && cmd.mesh.empty()) {
    throw InputError("--eval only applies to a literal --mesh");
  }

  json source;
  std::optional<SpectralMesh> mesh;
  if (!cmd.mesh.empty()) {
    const double eval = cmd.eval.value_or(kind == MatrixKind::kChungLaplacian ? 0.0 : 1.0);
    mesh = SpectralMesh::from_points(parse_number_list(cmd.mesh), eval, cmd.in.dedup_tol);
    source = {{"mesh", cmd.mesh}};
  } else if (!cmd.spectrum.empty()) {
    Spectrum s{kind, parse_number_list(cmd.spectrum)};
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    mesh = extract_mesh(s, cmd.in.dedup_tol);
    source = {{"spectrum", cmd.spectrum}};
  } else {
    LoadedGraph loaded = load_graph(cmd.in);
    Spectrum s = sym_eigenvalues(matrix_of_kind(loaded.graph, kind), kind,
                                 cmd.in.convergence_tol);
    mesh = extract_mesh(s, cmd.in.dedup_tol);
    source = {{"input_digest", loaded.digest}, {"graph", to_json(loaded.graph)}};
  }

  const int b = mesh->size();
  std::vector<int> ks;
  if (cmd.k == "all") {
    for (int k = 0; k < b; ++k) ks.push_back(k);
  } else {
    const long long k = to_integer(cmd.k);
    if (k < 0 || k > b - 1) {
      throw InputError("k=" + cmd.k + " out of range 0.." + std::to_string(b - 1));
    }
    ks.push_back(static_cast<int>(k));
  }
  AltPolyOptions options;
  options.force_lp = cmd.lp_only;
  std::vector<AlternatingPolynomial> polys;
  for (int k : ks) polys.push_back(alternating_polynomial(*mesh, k, options));

  const double interpolated = interpolated_pbminus1_value(*mesh);
  std::optional<double> p1_closed;
  if (b >= 2) p1_closed = closed_form_p1(*mesh).extremal_value;

  if (cmd.in.json) {
    json report = report_header("altpoly");
    report["source"] = source;
    report["mesh"] = to_json(*mesh);
    json table = json::array();
    for (const auto& p : polys) table.push_back(to_json(p));
    report["polynomials"] = table;
    report["closed_form_p1"] = p1_closed ? json(*p1_closed) : json(nullptr);
    report["interpolated_pbminus1"] = interpolated;
    out << report.dump(2) << "\n";
    return kOk;
  }
  out << "mesh (b=" << b << ", eval " << fmt(mesh->eval_point()) << "): ";
  print_list(out, mesh->points());
  out << std::left << std::setw(4) << "k" << std::setw(22) << "P_k(eval)" << std::setw(14)
      << "alternations"
      << "sup\n";
  for (const auto& p : polys) {
    out << std::setw(4) << p.k << std::setw(22) << fmt(p.extremal_value) << std::setw(14)
        << p.alternation_count << fmt(p.sup_norm()) << "\n";
  }
  if (p1_closed) out << "closed-form P_1(eval): " << fmt(*p1_closed) << "\n";
  out << "interpolated P_" << b - 1 << "(eval): " << fmt(interpolated) << "\n";
  return kOk;
}

// ----------------------------------------------------------------- certify

struct CertifyCommand {
  InputOptions in;
  std::string matrix = "degree-adjacency";
  std::vector<int> alpha;
  std::vector<int> beta;
  std::vector<int> s;
  std::vector<int> t;
  std::vector<std::string> corollaries;
  std::vector<std::string> separators;
  double margin = 0.0;
  bool oracle = false;
};

std::pair<Corollary, CorollaryParams> parse_corollary_spec(const std::string& text) {
  const auto eq = text.find('=');
  const Corollary which = parse_corollary(text.substr(0, eq));
  CorollaryParams params;
  const std::string args = eq == std::string::npos ? "" : text.substr(eq + 1);
  if (which == Corollary::kDegreePair) {
    if (args.empty()) throw InputError("--corollary a needs a degree: a=ALPHA");
    params.alpha = static_cast<int>(to_integer(args));
  } else if (which == Corollary::kRegularSetPair) {
    auto parts = split(args, ',');
    if (parts.size() != 2) throw InputError("--corollary e needs set sizes: e=S,T");
    params.s = static_cast<int>(to_integer(parts[0]));
    params.t = static_cast<int>(to_integer(parts[1]));
  } else if (!args.empty()) {
    throw InputError("--corollary " + text.substr(0, eq) + " takes no parameters");
  }
  return {which, params};
}

int run_certify(const CertifyCommand& cmd, std::ostream& out) {
  LoadedGraph loaded = load_graph(cmd.in);
  const Graph& g = loaded.graph;
  const MatrixKind kind = parse_matrix_kind(cmd.matrix);
  if (kind == MatrixKind::kStandardAdjacency) {
    throw InputError("certificates need --matrix degree-adjacency or laplacian");
  }
  const std::size_t groups = cmd.alpha.size();
  if (cmd.beta.size() != groups || cmd.s.size() != groups || cmd.t.size() != groups) {
    throw InputError("--alpha, --beta, --s and --t must be given the same number of times");
  }
  if (cmd.margin < 0.0) throw InputError("--margin must be nonnegative");

  std::vector<BoundQuery> queries;
  for (std::size_t i = 0; i < groups; ++i) {
    BoundQuery q{cmd.alpha[i], cmd.beta[i], cmd.s[i], cmd.t[i]};
    validate_query(g, q);
    threshold_general(g.size(), q);
    queries.push_back(q);
  }
  std::vector<std::pair<Corollary, CorollaryParams>> corollaries;
  for (const auto& text : cmd.corollaries) corollaries.push_back(parse_corollary_spec(text));
  std::vector<std::pair<int, int>> separators;
  for (const auto& text : cmd.separators) {
    auto parts = split(text, ',');
    if (parts.size() != 2) throw InputError("--separator expects ALPHA,K");
    separators.emplace_back(static_cast<int>(to_integer(parts[0])),
                            static_cast<int>(to_integer(parts[1])));
  }

  const SpectralAnalysis analysis = analyze(g, kind, spectral_options(cmd.in));
  const auto pk = analysis.extremal_values();
  std::optional<ExactOracle> oracle;
  if (cmd.oracle) oracle.emplace(g);

  json certificates = json::array();
  std::vector<std::string> lines;
  auto describe = [&](const BoundCertificate& cert, const std::string& label,
                      std::optional<ExactResult> exact) {
    json j = to_json(cert);
    j["label"] = label;
    if (exact) j["exact"] = to_json(*exact);
    certificates.push_back(j);
    std::ostringstream os;
    os << label << " " << query_text(cert.query) << ": threshold " << fmt(cert.threshold)
       << ", ";
    if (cert.min_certified_k) {
      os << "D <= " << *cert.min_certified_k << " (P_" << *cert.min_certified_k << " = "
         << fmt(pk[*cert.min_certified_k]) << ")";
    } else {
      os << "uncertified (max P = " << fmt(pk.back()) << ")";
    }
    if (cert.vacuous) os << " [vacuous]";
    if (exact) os << "; exact " << exact->value;
    lines.push_back(os.str());
  };
  auto exact_for = [&](const BoundQuery& q, bool vacuous) -> std::optional<ExactResult> {
    if (!oracle || vacuous) return std::nullopt;
    return oracle->conditional_diameter(q);
  };

  for (const auto& q : queries) {
    auto cert = certify(g, q, analysis, cmd.margin);
    describe(cert, "query", exact_for(q, cert.vacuous));
  }
  for (const auto& [which, params] : corollaries) {
    const double threshold = corollary_threshold(g, which, params);
    const BoundQuery q = corollary_query(g, which, params);
    auto cert = make_certificate(q, kind, source_of(which), threshold, pk, cmd.margin);
    cert.vacuous = is_vacuous(g, q);
    describe(cert, std::string(to_string(source_of(which))), exact_for(q, cert.vacuous));
  }

  json separator_rows = json::array();
  for (auto [alpha, k] : separators) {
    if (alpha < 1 || alpha > g.max_degree()) {
      throw InputError("--separator degree must lie in 1.." + std::to_string(g.max_degree()));
    }
    if (k < 0 || k >= static_cast<int>(pk.size())) {
      throw InputError("--separator k must lie in 0.." + std::to_string(pk.size() - 1));
    }
    json row{{"alpha", alpha},
             {"k", k},
             {"pk", pk[k]},
             {"max_separated_set_size", max_separated_set_size(g.size(), alpha, pk[k])},
             {"vertex_separator_lower_bound",
              vertex_separator_lower_bound(g.order(), g.size(), alpha, pk[k])}};
    if (g.is_regular()) row["regular_separated_size"] = regular_separated_size(g.order(), pk[k]);
    std::ostringstream os;
    os << "separator (alpha=" << alpha << ", k=" << k << "): P_k = " << fmt(pk[k])
       << ", separated sets of size <= " << row["max_separated_set_size"].get<long>()
       << ", vs >= " << row["vertex_separator_lower_bound"].get<long>();
    if (oracle) {
      ExactResult sep = oracle->max_separated_size(alpha, k);
      row["exact_max_separated_size"] = to_json(sep);
      os << "; exact max size " << sep.value;
      if (g.order() <= OracleLimits{}.max_separator_order) {
        auto vs = oracle->vertex_separator(alpha, k);
        row["exact_vertex_separator"] = vs ? to_json(*vs) : json(nullptr);
        os << ", exact vs " << (vs ? std::to_string(vs->separator_size) : std::string("none"));
      }
    }
    separator_rows.push_back(row);
    lines.push_back(os.str());
  }

  if (cmd.in.json) {
    json report = report_header("certify");
    report["input_digest"] = loaded.digest;
    report["graph"] = to_json(g);
    report["mesh"] = to_json(analysis.mesh);
    report["polynomials"] = pk;
    report["certificates"] = certificates;
    report["separators"] = separator_rows;
    out << report.dump(2) << "\n";
    return kOk;
  }
  print_graph_line(out, g);
  out << "mesh (" << to_string(kind) << ", b=" << analysis.mesh.size() << "): ";
  print_list(out, analysis.mesh.points());
  out << "P_k(eval): ";
  print_list(out, pk);
  for (const auto& line : lines) out << line << "\n";
  return kOk;
}

// ------------------------------------------------------------------ verify

struct VerifyCommand {
  InputOptions in;
  std::string seeds = "0..199";
  int max_n = 12;
  int max_st = 3;
  int jobs = 1;
  int lemma_pairs = 20;
  int separator_max_n = 10;
  double margin = 0.0;
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto seed = static_cast<std::uint64_t>(to_integer(text));
    return {seed, seed};
  }
  const long long first = to_integer(text.substr(0, dots));
  const long long last = to_integer(text.substr(dots + 2));
  if (first < 0 || last < first) throw InputError("--seeds expects FIRST..LAST with FIRST <= LAST");
  return {static_cast<std::uint64_t>(first), static_cast<std::uint64_t>(last)};
}

// The sweep's graph for one seed: order uniform in [3, max_n], extra-edge
// probability cycling through sparse, default and dense settings.
Graph sweep_graph(std::uint64_t seed, int max_n) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
  std::uniform_int_distribution<int> order(3, max_n);
  static constexpr double kDensities[] = {0.15, kDefaultExtraEdgeProbability, 0.5};
  return generate(GraphFamily::kRandomConnected, order(rng), seed, kDensities[seed % 3]);
}

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::optional<Graph> graph;
  SoundnessReport report;
  std::string error;
  bool numeric_error = false;
};

SoundnessOptions soundness_options(const VerifyCommand& cmd, std::uint64_t lemma_seed) {
  SoundnessOptions o;
  o.lemma_pairs = cmd.lemma_pairs;
  o.lemma_seed = lemma_seed;
  o.separator_max_order = cmd.separator_max_n;
  o.margin = cmd.margin;
  o.spectral = spectral_options(cmd.in);
  return o;
}

int run_verify_file(const VerifyCommand& cmd, std::ostream& out) {
  LoadedGraph loaded = load_graph(cmd.in);
  const Graph& g = loaded.graph;
  const OracleLimits limits;
  if (g.order() > limits.max_order) {
    throw OracleLimitError("verify limited to n <= " + std::to_string(limits.max_order));
  }
  auto queries = all_queries(g, cmd.max_st);
  const SoundnessReport report = verify_soundness(g, queries, soundness_options(cmd, 0));

  const SpectralOptions spectral = spectral_options(cmd.in);
  const SpectralAnalysis adjacency = analyze(g, MatrixKind::kDegreeAdjacency, spectral);
  const SpectralAnalysis laplacian = analyze(g, MatrixKind::kChungLaplacian, spectral);
  ExactOracle oracle(g);
  json rows = json::array();
  std::vector<std::string> lines;
  for (const auto& q : queries) {
    if (static_cast<long>(q.s) * q.alpha > 2L * g.size() ||
        static_cast<long>(q.t) * q.beta > 2L * g.size() || is_vacuous(g, q)) {
      rows.push_back({{"query", to_json(q)}, {"vacuous", true}});
      continue;
    }
    auto a = certify(g, q, adjacency, cmd.margin);
    auto l = certify(g, q, laplacian, cmd.margin);
    const int exact = oracle.conditional_diameter(q).value;
    auto opt = [](std::optional<int> k) { return k ? json(*k) : json(nullptr); };
    rows.push_back({{"query", to_json(q)},
                    {"vacuous", false},
                    {"threshold", a.threshold},
                    {"degree_adjacency_k", opt(a.min_certified_k)},
                    {"laplacian_k", opt(l.min_certified_k)},
                    {"exact", exact}});
    std::ostringstream os;
    os << std::left << std::setw(40) << query_text(q) << std::setw(12)
       << (a.min_certified_k ? std::to_string(*a.min_certified_k) : "-") << std::setw(12)
       << (l.min_certified_k ? std::to_string(*l.min_certified_k) : "-") << exact;
    lines.push_back(os.str());
  }

  if (cmd.in.json) {
    json report_json = report_header("verify");
    report_json["input_digest"] = loaded.digest;
    report_json["graph"] = to_json(g);
    report_json["queries"] = rows;
    report_json["checks"] = report.checks;
    json violations = json::array();
    for (const auto& v : report.violations) violations.push_back(to_json(v));
    report_json["violations"] = violations;
    report_json["violation_count"] = report.violations.size();
    out << report_json.dump(2) << "\n";
  } else {
    print_graph_line(out, g);
    out << std::left << std::setw(40) << "query" << std::setw(12) << "adjacency k" << std::setw(12)
        << "laplacian k"
        << "exact\n";
    for (const auto& line : lines) out << line << "\n";
    out << report.checks << " checks, " << report.violations.size() << " violations\n";
    for (const auto& v : report.violations) out << "VIOLATION " << to_json(v).dump() << "\n";
  }
  return report.violations.empty() ? kOk : kViolation;
}

int run_verify(const VerifyCommand& cmd, std::ostream& out, std::ostream& err) {
  if (has_graph_input(cmd.in)) return run_verify_file(cmd, out);
  const OracleLimits limits;
  if (cmd.max_n > limits.max_order) {
    throw OracleLimitError("--max-n " + std::to_string(cmd.max_n) + " exceeds the oracle limit " +
                           std::to_string(limits.max_order));
  }
  if (cmd.max_n < 3) throw InputError("--max-n must be at least 3");
  if (cmd.max_st < 1) throw InputError("--max-st must be at least 1");
  if (cmd.separator_max_n > limits.max_separator_order) {
    throw OracleLimitError("--separator-max-n exceeds the separator oracle limit " +
                           std::to_string(limits.max_separator_order));
  }
  if (cmd.jobs < 1) throw InputError("--jobs must be at least 1");
  if (cmd.margin < 0.0) throw InputError("--margin must be nonnegative");
  auto [first, last] = parse_seed_range(cmd.seeds);
  const std::size_t count = static_cast<std::size_t>(last - first + 1);

  const auto start = std::chrono::steady_clock::now();
  std::vector<SeedOutcome> outcomes(count);
  auto work = [&](std::size_t offset) {
    for (std::size_t i = offset; i < count; i += static_cast<std::size_t>(cmd.jobs)) {
      SeedOutcome& o = outcomes[i];
      o.seed = first + i;
      try {
        o.graph = sweep_graph(o.seed, cmd.max_n);
        o.report = verify_soundness(*o.graph, all_queries(*o.graph, cmd.max_st),
                                    soundness_options(cmd, o.seed));
      } catch (const NumericError& e) {
        o.error = e.what();
        o.numeric_error = true;
      } catch (const std::exception& e) {
        o.error = e.what();
      }
    }
  };
  if (cmd.jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < cmd.jobs; ++j) threads.emplace_back(work, static_cast<std::size_t>(j));
    for (auto& t : threads) t.join();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  long queries = 0;
  long vacuous = 0;
  long checks = 0;
  json violations = json::array();
  json errors = json::array();
  bool numeric_failure = false;
  for (const auto& o : outcomes) {
    if (!o.error.empty()) {
      errors.push_back({{"seed", o.seed}, {"error", o.error}});
      numeric_failure = numeric_failure || o.numeric_error;
      continue;
    }
    queries += o.report.queries;
    vacuous += o.report.vacuous;
    checks += o.report.checks;
    for (const auto& v : o.report.violations) {
      json j = to_json(v);
      j["seed"] = o.seed;
      j["graph"] = to_json(*o.graph);
      j["edges"] = o.graph->edges();
      violations.push_back(j);
    }
  }

  if (cmd.in.json) {
    json report = report_header("verify");
    report["seeds"] = {{"first", first}, {"last", last}};
    report["max_n"] = cmd.max_n;
    report["max_st"] = cmd.max_st;
    report["lemma_pairs"] = cmd.lemma_pairs;
    report["separator_max_n"] = cmd.separator_max_n;
    report["margin"] = cmd.margin;
    report["graphs"] = count;
    report["queries"] = queries;
    report["vacuous"] = vacuous;
    report["checks"] = checks;
    report["violation_count"] = violations.size();
    report["violations"] = violations;
    report["errors"] = errors;
    out << report.dump(2) << "\n";
  } else {
    out << "seeds " << first << ".." << last << ": " << count << " graphs, " << queries
        << " queries (" << vacuous << " vacuous), " << checks << " checks, "
        << violations.size() << " violations\n";
    for (const auto& v : violations) out << "VIOLATION " << v.dump() << "\n";
    for (const auto& e : errors) out << "ERROR " << e.dump() << "\n";
  }
  err << "verify: " << std::fixed << std::setprecision(2) << seconds << " s\n";

  if (!violations.empty()) return kViolation;
  if (!errors.empty()) return numeric_failure ? kNumericError : kInputError;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral certificates for conditional diameters and vertex separators"};
  app.name(args.empty() ? "condiam" : args[0]);
  app.require_subcommand(1);

  SpectrumCommand spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues and mesh of a graph matrix");
  add_input_options(spectrum_cmd, spectrum.in);
  spectrum_cmd->add_option("--matrix", spectrum.matrix, "degree-adjacency | laplacian | standard");

  AltpolyCommand altpoly;
  auto* altpoly_cmd = app.add_subcommand("altpoly", "k-alternating polynomials of a mesh");
  add_input_options(altpoly_cmd, altpoly.in);
  altpoly_cmd->add_option("--matrix", altpoly.matrix, "degree-adjacency | laplacian");
  altpoly_cmd->add_option("--mesh", altpoly.mesh, "Literal comma-separated mesh points");
  altpoly_cmd->add_option("--spectrum", altpoly.spectrum,
                          "Literal comma-separated eigenvalues including the Perron value");
  altpoly_cmd->add_option("--eval", altpoly.eval, "Evaluation point for --mesh");
  altpoly_cmd->add_option("--k", altpoly.k, "Degree, or 'all'");
  altpoly_cmd->add_flag("--lp-only", altpoly.lp_only, "Solve k = b-1 by LP too");

  CertifyCommand certify_args;
  auto* certify_cmd = app.add_subcommand("certify", "Spectral bounds for conditional diameters");
  add_input_options(certify_cmd, certify_args.in);
  certify_cmd->add_option("--matrix", certify_args.matrix, "degree-adjacency | laplacian");
  certify_cmd->add_option("--alpha", certify_args.alpha, "Min degree of the first set");
  certify_cmd->add_option("--beta", certify_args.beta, "Min degree of the second set");
  certify_cmd->add_option("--s", certify_args.s, "Min size of the first set");
  certify_cmd->add_option("--t", certify_args.t, "Min size of the second set");
  certify_cmd->add_option("--corollary", certify_args.corollaries,
                          "a=ALPHA | b | c | d | e=S,T");
  certify_cmd->add_option("--separator", certify_args.separators, "ALPHA,K");
  for (const char* name : {"--alpha", "--beta", "--s", "--t", "--corollary", "--separator"}) {
    certify_cmd->get_option(name)->allow_extra_args(false);
  }
  certify_cmd->add_option("--margin", certify_args.margin, "Extra certification margin");
  certify_cmd->add_flag("--oracle", certify_args.oracle, "Also compute exact values");

  VerifyCommand verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check certificates against exact values");
  add_input_options(verify_cmd, verify.in);
  verify_cmd->add_option("--seeds", verify.seeds, "Seed range FIRST..LAST");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest random graph order");
  verify_cmd->add_option("--max-st", verify.max_st, "Largest set size in queries");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads");
  verify_cmd->add_option("--lemma-pairs", verify.lemma_pairs, "Random set pairs per graph");
  verify_cmd->add_option("--separator-max-n", verify.separator_max_n,
                         "Largest order for separator checks");
  verify_cmd->add_option("--margin", verify.margin, "Extra certification margin");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*spectrum_cmd) return run_spectrum(spectrum, out);
    if (*altpoly_cmd) return run_altpoly(altpoly, out);
    if (*certify_cmd) return run_certify(certify_args, out);
    if (*verify_cmd) return run_verify(verify, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumericError;
  }
  return kInputError;
}

}  // namespace condiam::cli
