#include "gss/security.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "parallel.hpp"

namespace gss {

const char* to_string(SecurityVerdict v) {
  switch (v) {
    case SecurityVerdict::PerfectlyHidden: return "PerfectlyHidden";
    case SecurityVerdict::Decodable: return "Decodable";
    case SecurityVerdict::PartialLeak: return "PartialLeak";
  }
  return "?";
}

ViewDistribution view_distribution(const Graph& g, const VertexSet& b) {
  const int n = g.order();
  if (n > 20)
    throw std::invalid_argument("view_distribution: exhaustive key enumeration needs n <= 20");
  if (b.size() != n)
    throw std::invalid_argument("view_distribution: vertex set width does not match graph order");

  std::vector<uint64_t> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) adj[static_cast<size_t>(i)] = g.neighbours(i).to_mask();
  const std::vector<int> players = b.indices();

  ViewDistribution dist{b, n, {}};
  const uint64_t key_space = uint64_t{1} << n;
  for (int s = 0; s <= 1; ++s) {
    auto& tally = dist.counts[static_cast<size_t>(s)];
    for (uint64_t keys = 0; keys < key_space; ++keys) {
      uint64_t tuple = 0;
      int slot = 0;
      for (int i : players) {
        const uint64_t k = (keys >> i) & 1u;
        const uint64_t c =
            static_cast<uint64_t>(s) ^ (std::popcount(adj[static_cast<size_t>(i)] & keys) & 1u);
        tuple |= k << (2 * slot);
        tuple |= c << (2 * slot + 1);
        ++slot;
      }
      ++tally[tuple];
    }
  }
  return dist;
}

namespace {

// Mutual information I(S; View) in bits for uniform S, from exact counts.
// Only reached in the PartialLeak case, where an exact closed form is not
// available; the tallies themselves remain exact.
std::string numeric_mutual_information(const ViewDistribution& dist) {
  const long double denom = std::ldexp(1.0L, dist.order + 1);  // 2^(n+1) joint outcomes
  long double mi = 0.0L;
  for (int s = 0; s <= 1; ++s) {
    for (const auto& [tuple, count] : dist.counts[static_cast<size_t>(s)]) {
      if (count == 0) continue;
      const auto& other = dist.counts[static_cast<size_t>(1 - s)];
      const auto it = other.find(tuple);
      const uint64_t marginal = count + (it == other.end() ? 0 : it->second);
      const long double joint = static_cast<long double>(count) / denom;
      // p(s) = 1/2, p(view) = marginal / 2^(n+1)
      mi += joint * std::log2(2.0L * static_cast<long double>(count) /
                              static_cast<long double>(marginal));
    }
  }
  std::ostringstream os;
  os.precision(12);
  os << static_cast<double>(mi);
  return os.str();
}

}  // namespace

SecurityReport classify_distribution(const ViewDistribution& dist) {
  const uint64_t expected = uint64_t{1} << dist.order;
  for (const auto& tally : dist.counts) {
    uint64_t sum = 0;
    for (const auto& [tuple, count] : tally) sum += count;
    if (sum != expected)
      throw std::logic_error("classify_distribution: tally does not sum to 2^n");
  }

  if (dist.counts[0] == dist.counts[1])
    return SecurityReport{dist.set, SecurityVerdict::PerfectlyHidden, "0"};

  bool disjoint = true;
  for (const auto& [tuple, count] : dist.counts[0]) {
    if (count != 0 && dist.counts[1].contains(tuple)) {
      disjoint = false;
      break;
    }
  }
  if (disjoint) return SecurityReport{dist.set, SecurityVerdict::Decodable, "1"};

  return SecurityReport{dist.set, SecurityVerdict::PartialLeak,
                        numeric_mutual_information(dist)};
}

SecurityReport classify_security(const Graph& g, const VertexSet& b) {
  return classify_distribution(view_distribution(g, b));
}

PerfectnessAudit audit_perfectness(const Graph& g, const AuditOptions& options) {
  const int n = g.order();
  if (n > 12)
    throw std::invalid_argument("audit_perfectness: 2^n subsets x 2^n keys needs n <= 12");

  const uint64_t total = uint64_t{1} << n;
  PerfectnessAudit audit;
  audit.order = n;
  audit.records.resize(total);

  detail::parallel_for_chunks(
      total, 16,
      [&](uint64_t begin, uint64_t end) {
        for (uint64_t mask = begin; mask < end; ++mask) {
          const VertexSet b = VertexSet::from_mask(mask, n);
          const SecurityReport report = classify_security(g, b);
          const AccessStatus status = options.access_fault
                                          ? access_status_under_fault(g, b, *options.access_fault)
                                          : is_c_accessing(g, b).status;
          bool matches = false;
          if (report.verdict == SecurityVerdict::Decodable)
            matches = status == AccessStatus::Authorized;
          else if (report.verdict == SecurityVerdict::PerfectlyHidden)
            matches = status == AccessStatus::Forbidden;
          audit.records[mask] =
              SubsetAuditRecord{mask, report.verdict, report.mutual_information_bits, matches};
        }
      },
      options.threads);

  for (const auto& rec : audit.records) {
    if (!rec.matches_access_module) ++audit.mismatch_count;
    if (rec.verdict == SecurityVerdict::PartialLeak) ++audit.partial_leak_count;
  }
  return audit;
}

std::string audit_report_json(const PerfectnessAudit& audit) {
  nlohmann::ordered_json j;
  j["n"] = audit.order;
  j["subsets"] = audit.records.size();
  j["mismatch_count"] = audit.mismatch_count;
  j["partial_leak_count"] = audit.partial_leak_count;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : audit.records) {
    nlohmann::ordered_json r;
    r["set"] = VertexSet::from_mask(rec.set_mask, audit.order).indices();
    r["verdict"] = to_string(rec.verdict);
    r["mutual_information_bits"] = rec.mutual_information_bits;
    r["matches_access_module"] = rec.matches_access_module;
    j["records"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

}  // namespace gss
