// gss — analyze graph-based secret sharing: access structures, protocol
// runs, exhaustive security audits and graph-state quantum reductions.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gss/access.hpp"
#include "gss/graph.hpp"
#include "gss/protocol.hpp"
#include "gss/quantum.hpp"
#include "gss/security.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;          // bad command line (from CLI11)
constexpr int kExitParse = 2;          // malformed graph/share/set input
constexpr int kExitSizeCap = 3;        // graph too large for an exhaustive command
constexpr int kExitHashMismatch = 4;   // share file belongs to a different graph
constexpr int kExitNotAuthorized = 5;  // coalition cannot reconstruct
constexpr int kExitAuditMismatch = 6;  // an audit found a violation

constexpr const char* kIndexNote = "note: vertex labels are 0-indexed";

struct Fatal {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Fatal{kExitParse, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Fatal{kExitParse, "cannot write '" + path + "'"};
  out << text;
}

gss::Graph load_graph(const std::string& path) {
  try {
    return gss::parse_graph(read_file(path));
  } catch (const gss::GraphParseError& e) {
    throw Fatal{kExitParse, path + ": " + e.what()};
  }
}

// Comma-separated 0-indexed vertices, e.g. "0,2,4"; "" is the empty set.
gss::VertexSet parse_set_spec(const std::string& spec, int n) {
  gss::VertexSet set(n);
  if (spec.empty()) return set;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      if (v < 0 || v >= n)
        throw Fatal{kExitParse, "vertex " + item + " is outside 0.." + std::to_string(n - 1)};
      set.set(v);
    } catch (const Fatal&) {
      throw;
    } catch (const std::exception&) {
      throw Fatal{kExitParse, "bad vertex '" + item + "' in set spec '" + spec + "'"};
    }
  }
  return set;
}

json set_to_json(const gss::VertexSet& s) { return json(s.indices()); }

const char* status_name(gss::AccessStatus s) {
  return s == gss::AccessStatus::Authorized ? "authorized" : "forbidden";
}

std::string describe_verdict(const gss::Graph& g, const gss::AccessVerdict& v) {
  std::ostringstream os;
  if (v.authorized()) {
    os << "authorized, witness D = " << v.witness_d->to_string() << ", Odd(D) = "
       << gss::odd_neighbourhood(g, *v.witness_d).to_string();
  } else {
    os << "forbidden, dual witness C = " << v.dual_witness_c->to_string()
       << ", Odd(C) = " << gss::odd_neighbourhood(g, *v.dual_witness_c).to_string();
  }
  return os.str();
}

json verdict_to_json(const gss::Graph& g, const gss::AccessVerdict& v) {
  json j;
  j["set"] = set_to_json(v.set);
  j["status"] = status_name(v.status);
  if (v.witness_d) {
    j["witness_d"] = set_to_json(*v.witness_d);
    j["odd_neighbourhood"] = set_to_json(gss::odd_neighbourhood(g, *v.witness_d));
  }
  if (v.dual_witness_c) j["dual_witness_c"] = set_to_json(*v.dual_witness_c);
  return j;
}

// ---- analyze ----------------------------------------------------------

struct AnalyzeConfig {
  std::string graph_path;
  bool with_witnesses = false;
  std::string format = "text";
};

int cmd_analyze(const AnalyzeConfig& cfg) {
  const gss::Graph g = load_graph(cfg.graph_path);
  if (g.order() > 24)
    throw Fatal{kExitSizeCap, "analyze enumerates 2^n subsets and is capped at n = 24 (got n = " +
                                  std::to_string(g.order()) + ")"};

  const gss::AccessStructure structure = gss::enumerate_access_structure(g);
  const auto minimal = structure.minimal_authorized_sets();

  if (cfg.format == "json") {
    json j;
    j["n"] = g.order();
    j["edges"] = g.edge_count();
    j["graph_hash"] = gss::graph_hash(g);
    j["subsets"] = structure.subset_count();
    j["authorized_count"] = structure.authorized_count();
    j["forbidden_count"] = structure.forbidden_count();
    j["minimal_authorized_sets"] = json::array();
    for (const auto& s : minimal) j["minimal_authorized_sets"].push_back(set_to_json(s));
    if (cfg.with_witnesses) {
      j["witnesses"] = json::array();
      for (const auto& s : minimal)
        j["witnesses"].push_back(verdict_to_json(g, gss::is_c_accessing(g, s)));
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "graph: " << g.order() << " vertices, " << g.edge_count() << " edges, hash "
            << gss::graph_hash(g) << "\n";
  std::cout << "subsets: " << structure.subset_count() << " (" << structure.authorized_count()
            << " authorized, " << structure.forbidden_count() << " forbidden)\n";
  std::cout << "minimal authorized sets:\n";
  for (const auto& s : minimal) {
    std::cout << "  " << s.to_string();
    if (cfg.with_witnesses) {
      const auto v = gss::is_c_accessing(g, s);
      std::cout << "  witness D = " << v.witness_d->to_string();
    }
    std::cout << "\n";
  }
  std::cout << kIndexNote << "\n";
  return kExitOk;
}

// ---- classify ---------------------------------------------------------

struct ClassifyConfig {
  std::string graph_path;
  std::string set_spec;
  std::string format = "text";
};

int cmd_classify(const ClassifyConfig& cfg) {
  const gss::Graph g = load_graph(cfg.graph_path);
  const gss::VertexSet b = parse_set_spec(cfg.set_spec, g.order());
  const gss::AccessVerdict v = gss::is_c_accessing(g, b);

  if (cfg.format == "json") {
    std::cout << verdict_to_json(g, v).dump(2) << "\n";
  } else {
    std::cout << "set " << b.to_string() << ": " << describe_verdict(g, v) << "\n"
              << kIndexNote << "\n";
  }
  return kExitOk;
}

// ---- share ------------------------------------------------------------

struct ShareConfig {
  std::string graph_path;
  int secret = 0;
  std::optional<uint64_t> seed;
  std::string keys_spec;
  std::string out_path;
  bool reveal = false;
};

int cmd_share(const ShareConfig& cfg) {
  const gss::Graph g = load_graph(cfg.graph_path);
  gss::KeyVector keys(g.order());
  if (!cfg.keys_spec.empty()) {
    if (static_cast<int>(cfg.keys_spec.size()) != g.order())
      throw Fatal{kExitParse, "--keys needs exactly " + std::to_string(g.order()) +
                                  " bits, got " + std::to_string(cfg.keys_spec.size())};
    for (int i = 0; i < g.order(); ++i) {
      const char c = cfg.keys_spec[static_cast<size_t>(i)];
      if (c != '0' && c != '1') throw Fatal{kExitParse, "--keys must be a bitstring of 0s and 1s"};
      keys.set(i, c == '1');
    }
  } else if (cfg.seed) {
    keys = gss::sample_keys(g.order(), *cfg.seed);
  } else {
    throw Fatal{kExitParse, "share needs one of --seed or --keys"};
  }

  const gss::ShareTable table = gss::make_shares(g, cfg.secret, keys);
  const gss::ShareFile file =
      gss::build_share_file(g, table, cfg.keys_spec.empty() ? cfg.seed : std::nullopt,
                            cfg.reveal ? std::optional<int>(cfg.secret) : std::nullopt);
  write_output(cfg.out_path, gss::share_file_to_json(file));
  return kExitOk;
}

// ---- reconstruct ------------------------------------------------------

struct ReconstructConfig {
  std::string graph_path;
  std::string shares_path;
  std::string set_spec;
  std::string format = "text";
};

int cmd_reconstruct(const ReconstructConfig& cfg) {
  const gss::Graph g = load_graph(cfg.graph_path);
  gss::ShareFile file;
  try {
    file = gss::share_file_from_json(read_file(cfg.shares_path));
  } catch (const gss::ShareFileError& e) {
    throw Fatal{kExitParse, cfg.shares_path + ": " + e.what()};
  }
  if (file.graph_hash != gss::graph_hash(g))
    throw Fatal{kExitHashMismatch, "share file was produced for a different graph (hash " +
                                       file.graph_hash + ", expected " + gss::graph_hash(g) + ")"};
  if (file.n != g.order())
    throw Fatal{kExitHashMismatch, "share file player count does not match the graph"};

  const gss::VertexSet b = parse_set_spec(cfg.set_spec, g.order());
  if (!b.is_subset_of(file.shares.players))
    throw Fatal{kExitParse, "share file lacks shares for part of the requested set"};

  gss::PartialShares partial{b, file.shares.keys & b, file.shares.cipher & b};
  const auto recovery = gss::recover_as_set(g, b, partial);
  if (!recovery)
    throw Fatal{kExitNotAuthorized,
                "set " + b.to_string() + " is forbidden; it cannot reconstruct the secret"};

  if (cfg.format == "json") {
    json j;
    j["secret"] = recovery->secret;
    j["set"] = set_to_json(b);
    j["witness_d"] = set_to_json(recovery->witness_d);
    j["odd_neighbourhood"] = set_to_json(gss::odd_neighbourhood(g, recovery->witness_d));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "recovered secret: " << recovery->secret << "\n"
              << "witness D = " << recovery->witness_d.to_string() << ", Odd(D) = "
              << gss::odd_neighbourhood(g, recovery->witness_d).to_string() << "\n"
              << kIndexNote << "\n";
  }
  return kExitOk;
}

// ---- audit-security ---------------------------------------------------

struct AuditSecurityConfig {
  std::string graph_path;
  std::string format = "text";
  std::string out_path;
  std::string fault_spec;  // "u,v" — negative control
  int threads = 0;
};

int cmd_audit_security(const AuditSecurityConfig& cfg) {
  const gss::Graph g = load_graph(cfg.graph_path);
  if (g.order() > 12)
    throw Fatal{kExitSizeCap,
                "audit-security enumerates 2^n subsets x 2^n keys and is capped at n = 12"};

  gss::AuditOptions options;
  options.threads = cfg.threads;
  if (!cfg.fault_spec.empty()) {
    std::stringstream ss(cfg.fault_spec);
    int u = 0, v = 0;
    char comma = 0;
    if (!(ss >> u >> comma >> v) || comma != ',' || !ss.eof())
      throw Fatal{kExitParse, "--inject-fault expects 'u,v'"};
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
      throw Fatal{kExitParse, "--inject-fault position out of range"};
    options.access_fault = gss::RowFault{u, v};
  }

  const gss::PerfectnessAudit audit = gss::audit_perfectness(g, options);
  const std::string report = gss::audit_report_json(audit);
  if (!cfg.out_path.empty()) write_output(cfg.out_path, report);

  if (cfg.format == "json") {
    if (cfg.out_path.empty()) std::cout << report;
  } else {
    std::cout << "subsets audited: " << audit.records.size() << "\n"
              << "mismatches: " << audit.mismatch_count << "\n"
              << "partial leaks: " << audit.partial_leak_count << "\n"
              << "result: " << (audit.mismatch_count == 0 ? "PASS" : "FAIL") << "\n";
  }
  return audit.mismatch_count == 0 ? kExitOk : kExitAuditMismatch;
}

// ---- quantum ----------------------------------------------------------

struct QuantumConfig {
  std::string graph_path;
  std::string set_spec;
  std::string format = "text";
};

int cmd_quantum(const QuantumConfig& cfg) {
  const gss::Graph g = load_graph(cfg.graph_path);
  const gss::VertexSet b = parse_set_spec(cfg.set_spec, g.order());
  const gss::QuantumVerdict v = gss::gsqss_quantum_verdict(g, b);
  if (cfg.format == "json") {
    json j;
    j["set"] = set_to_json(b);
    j["classical_status"] = status_name(v.classical_status);
    j["quantum_status"] = v.quantum_authorized ? "authorized" : "not-authorized";
    j["in_graph"] = verdict_to_json(g, v.in_graph);
    j["in_complement_graph"] = verdict_to_json(gss::complement_graph(g), v.in_complement_graph);
    j["complement_set"] = verdict_to_json(g, v.complement_set);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "set " << b.to_string() << ":\n"
              << "  classical secret: " << status_name(v.classical_status) << "\n"
              << "  quantum secret:   "
              << (v.quantum_authorized ? "authorized" : "not-authorized") << "\n"
              << "  in graph: " << describe_verdict(g, v.in_graph) << "\n"
              << "  in complement graph: "
              << describe_verdict(gss::complement_graph(g), v.in_complement_graph) << "\n"
              << "  complement set " << b.complement().to_string() << ": "
              << describe_verdict(g, v.complement_set) << "\n"
              << kIndexNote << "\n";
  }
  return kExitOk;
}

// ---- audit-quantum ----------------------------------------------------

struct AuditQuantumConfig {
  std::string graph_path;
  std::string format = "text";
  std::string out_path;
};

int cmd_audit_quantum(const AuditQuantumConfig& cfg) {
  const gss::Graph g = load_graph(cfg.graph_path);
  if (g.order() > 20)
    throw Fatal{kExitSizeCap, "audit-quantum enumerates 2^n subsets and is capped at n = 20"};

  const gss::QuantumAudit audit = gss::no_cloning_audit(g);
  const std::string report = gss::quantum_audit_json(audit);
  if (!cfg.out_path.empty()) write_output(cfg.out_path, report);

  const bool clean = audit.route_disagreements == 0 && audit.no_cloning_violations == 0;
  if (cfg.format == "json") {
    if (cfg.out_path.empty()) std::cout << report;
  } else {
    std::cout << "subsets audited: " << audit.records.size() << "\n"
              << "route disagreements: " << audit.route_disagreements << "\n"
              << "complement pairs both authorized: " << audit.no_cloning_violations << "\n"
              << "result: " << (clean ? "PASS" : "FAIL") << "\n";
  }
  return clean ? kExitOk : kExitAuditMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-based secret sharing: access structures, protocol runs and audits"};
  app.require_subcommand(1);

  AnalyzeConfig analyze_cfg;
  auto* analyze = app.add_subcommand("analyze", "enumerate the full access structure of a graph");
  analyze->add_option("--graph", analyze_cfg.graph_path, "edge-list file")->required();
  analyze->add_flag("--with-witnesses", analyze_cfg.with_witnesses,
                    "include witnesses for the minimal authorized sets");
  analyze->add_option("--format", analyze_cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  ClassifyConfig classify_cfg;
  auto* classify = app.add_subcommand("classify", "decide one coalition and print its witness");
  classify->add_option("--graph", classify_cfg.graph_path, "edge-list file")->required();
  classify->add_option("--set", classify_cfg.set_spec, "comma-separated vertices, e.g. 0,2,4")
      ->required();
  classify->add_option("--format", classify_cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  ShareConfig share_cfg;
  auto* share = app.add_subcommand("share", "run the dealer and write a share file");
  share->add_option("--graph", share_cfg.graph_path, "edge-list file")->required();
  share->add_option("--secret", share_cfg.secret, "the secret bit")
      ->required()
      ->check(CLI::Range(0, 1));
  share->add_option("--seed", share_cfg.seed, "seed for the key generator");
  share->add_option("--keys", share_cfg.keys_spec, "explicit key bits, e.g. 01101");
  share->add_option("--out", share_cfg.out_path, "share file path (default: stdout)");
  share->add_flag("--reveal", share_cfg.reveal, "embed the secret in the file (testing only)");

  ReconstructConfig reconstruct_cfg;
  auto* reconstruct =
      app.add_subcommand("reconstruct", "recover the secret from a share file and a coalition");
  reconstruct->add_option("--graph", reconstruct_cfg.graph_path, "edge-list file")->required();
  reconstruct->add_option("--shares", reconstruct_cfg.shares_path, "share file")->required();
  reconstruct->add_option("--set", reconstruct_cfg.set_spec, "coalition, e.g. 0,2,4")->required();
  reconstruct->add_option("--format", reconstruct_cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  AuditSecurityConfig audit_sec_cfg;
  auto* audit_sec = app.add_subcommand(
      "audit-security", "exhaustively verify that every subset decodes or learns nothing");
  audit_sec->add_option("--graph", audit_sec_cfg.graph_path, "edge-list file")->required();
  audit_sec->add_option("--format", audit_sec_cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  audit_sec->add_option("--out", audit_sec_cfg.out_path, "write the JSON report here");
  audit_sec->add_option("--inject-fault", audit_sec_cfg.fault_spec,
                        "corrupt the access decision at row u, bit v (negative control)");
  audit_sec->add_option("--threads", audit_sec_cfg.threads, "worker threads (0 = auto)");

  QuantumConfig quantum_cfg;
  auto* quantum =
      app.add_subcommand("quantum", "quantum-secret verdict for one coalition (both routes)");
  quantum->add_option("--graph", quantum_cfg.graph_path, "edge-list file")->required();
  quantum->add_option("--set", quantum_cfg.set_spec, "coalition, e.g. 0,2,4")->required();
  quantum->add_option("--format", quantum_cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  AuditQuantumConfig audit_q_cfg;
  auto* audit_q = app.add_subcommand(
      "audit-quantum", "verify route agreement and complement exclusivity over all subsets");
  audit_q->add_option("--graph", audit_q_cfg.graph_path, "edge-list file")->required();
  audit_q->add_option("--format", audit_q_cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  audit_q->add_option("--out", audit_q_cfg.out_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_cfg);
    if (*classify) return cmd_classify(classify_cfg);
    if (*share) return cmd_share(share_cfg);
    if (*reconstruct) return cmd_reconstruct(reconstruct_cfg);
    if (*audit_sec) return cmd_audit_security(audit_sec_cfg);
    if (*quantum) return cmd_quantum(quantum_cfg);
    if (*audit_q) return cmd_audit_quantum(audit_q_cfg);
  } catch (const Fatal& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
