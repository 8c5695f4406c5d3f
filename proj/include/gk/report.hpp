#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gk/analysis.hpp"
#include "gk/construction.hpp"

namespace gk {

enum class Verdict { kPass, kFail, kDiscrepancy };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kDiscrepancy: return "DISCREPANCY";
  }
  return "?";
}

struct ClaimEntry {
  std::string id;
  std::string measured;
  std::string bound;
  Verdict verdict = Verdict::kFail;
};

/**
 * One verdict per checkable statement about G_k. FAIL means the built graph
 * is wrong; DISCREPANCY marks a bound the construction is known to exceed
 * while still meeting the logarithmic conclusion.
 */
struct ClaimReport {
  int k = 0;
  std::int64_t vertices = 0;
  std::optional<DiameterResult> diameter;
  std::vector<ClaimEntry> claims;

  bool passed() const {
    for (const auto& c : claims) {
      if (c.verdict == Verdict::kFail) return false;
    }
    return true;
  }
  bool has_discrepancy() const {
    for (const auto& c : claims) {
      if (c.verdict == Verdict::kDiscrepancy) return true;
    }
    return false;
  }
  const ClaimEntry* find(std::string_view id) const {
    for (const auto& c : claims) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }
};

inline std::string format_fixed(double value, int digits = 6) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

namespace detail {

inline Verdict bounded_or_log(double measured, double bound, double logBound) {
  if (measured <= bound) return Verdict::kPass;
  if (measured <= logBound) return Verdict::kDiscrepancy;
  return Verdict::kFail;
}

}  // namespace detail

inline ClaimReport verify_claims(const GkGraph& gk, DiameterMethod method = DiameterMethod::kIfub,
                                 const DiameterOptions& options = {}) {
  if (method == DiameterMethod::kDoubleSweep) {
    throw GraphError("verify_claims: needs an exact diameter method (bfs-all or ifub)");
  }
  const auto& g = gk.graph;
  const int k = gk.k();
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  ClaimReport report;
  report.k = k;
  report.vertices = n;

  auto add = [&](std::string id, std::string measured, std::string bound, Verdict verdict) {
    report.claims.push_back({std::move(id), std::move(measured), std::move(bound), verdict});
  };
  auto pass_if = [](bool ok) { return ok ? Verdict::kPass : Verdict::kFail; };

  const bool cubic = is_regular(g, 3);
  add("cubic", cubic ? "3-regular" : "not 3-regular", "every degree = 3", pass_if(cubic));

  const bool simple = is_simple(g);
  add("simple", simple ? "simple" : "loops or parallel edges", "no loops, no parallel edges", pass_if(simple));

  const long genus = euler_genus(g);
  add("planar", "genus " + std::to_string(genus), "genus 0", pass_if(genus == 0));

  const auto census = face_census(g);
  std::string lengths;
  bool inRange = true;
  for (auto [len, count] : census.histogram) {
    if (!lengths.empty()) lengths += ',';
    lengths += std::to_string(len);
    inRange = inRange && len >= 4 && len <= 7;
  }
  const bool maxOk = k < 3 || census.max_length() == 7;
  add("face-lengths", "{" + lengths + "}", k >= 3 ? "subset of {4,5,6,7}, max 7" : "subset of {4,5,6,7}",
      pass_if(inRange && maxOk));

  const auto expected = expected_census(k);
  add("face-census", to_string(census), to_string(expected), pass_if(census == expected));

  const std::int64_t twoToK = std::int64_t{1} << k;
  add("size", "n = " + std::to_string(n), "n >= 2^k = " + std::to_string(twoToK), pass_if(n >= twoToK));

  const double log2n = std::log2(static_cast<double>(n));
  const double threeLog = 3.0 * log2n;
  const double fourLog = 4.0 * log2n;
  if (connected_components(g) != 1) {
    for (const char* id : {"diameter-3k", "diameter-3log2n", "diameter-4log2n"}) {
      add(id, "disconnected", "connected graph", Verdict::kFail);
    }
    return report;
  }
  const auto diam = compute_diameter(g, method, options);
  report.diameter = diam;
  const auto measured = static_cast<double>(diam.value);
  const std::string value = std::to_string(diam.value);
  add("diameter-3k", value, "3k = " + std::to_string(3 * k),
      detail::bounded_or_log(measured, 3.0 * k, fourLog));
  add("diameter-3log2n", value, "3 log2 n = " + format_fixed(threeLog, 3),
      detail::bounded_or_log(measured, threeLog, fourLog));
  add("diameter-4log2n", value, "4 log2 n = " + format_fixed(fourLog, 3), pass_if(measured <= fourLog));
  return report;
}

// ---------------------------------------------------------------------------
// Refutation of the square-root lower bound

inline constexpr double kRefutationMargin = 1e-9;

struct RefutationRow {
  int k = 0;
  std::int64_t n = 0;
  std::uint32_t diameter = 0;
  int threeK = 0;
  double threeLog2n = 0.0;
  double fullereneBound = 0.0;
  bool refutes = false;
};

inline RefutationRow refutation_row(int k, std::int64_t n, std::uint32_t diameter) {
  RefutationRow row;
  row.k = k;
  row.n = n;
  row.diameter = diameter;
  row.threeK = 3 * k;
  row.threeLog2n = 3.0 * std::log2(static_cast<double>(n));
  row.fullereneBound = fullerene_lower_bound(n);
  row.refutes = row.fullereneBound - static_cast<double>(diameter) > kRefutationMargin;
  return row;
}

inline std::vector<RefutationRow> refutation_table(int kMin, int kMax, DiameterMethod method = DiameterMethod::kIfub,
                                                   const DiameterOptions& options = {}, int maxK = kDefaultMaxK) {
  if (kMin < 2 || kMin > kMax || kMax > maxK) {
    throw GraphError("refutation_table: need 2 <= kMin <= kMax <= " + std::to_string(maxK));
  }
  std::vector<RefutationRow> rows;
  for (int k = kMin; k <= kMax; ++k) {
    const auto gk = build_gk(GkParams{k, maxK});
    const auto diam = compute_diameter(gk.graph, method, options);
    rows.push_back(refutation_row(k, static_cast<std::int64_t>(gk.graph.vertex_count()), diam.value));
  }
  return rows;
}

inline std::optional<int> smallest_refuting_k(const std::vector<RefutationRow>& rows) {
  for (const auto& row : rows) {
    if (row.refutes) return row.k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Emission

inline std::string refutation_tsv(const std::vector<RefutationRow>& rows) {
  std::string out = "k\tn\tdiameter\t3k\t3log2n\tfullerene_bound\trefutes\n";
  for (const auto& r : rows) {
    out += std::to_string(r.k) + '\t' + std::to_string(r.n) + '\t' + std::to_string(r.diameter) + '\t' +
           std::to_string(r.threeK) + '\t' + format_fixed(r.threeLog2n) + '\t' + format_fixed(r.fullereneBound) +
           '\t' + (r.refutes ? "true" : "false") + '\n';
  }
  return out;
}

inline std::string refutation_json(const std::vector<RefutationRow>& rows) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    doc.push_back({{"k", r.k},
                   {"n", r.n},
                   {"diameter", r.diameter},
                   {"three_k", r.threeK},
                   {"three_log2_n", r.threeLog2n},
                   {"fullerene_bound", r.fullereneBound},
                   {"refutes", r.refutes}});
  }
  return doc.dump(2) + '\n';
}

inline std::string claims_tsv(const ClaimReport& report) {
  std::string out = "id\tmeasured\tbound\tverdict\n";
  for (const auto& c : report.claims) {
    out += c.id + '\t' + c.measured + '\t' + c.bound + '\t' + std::string(to_string(c.verdict)) + '\n';
  }
  return out;
}

inline std::string claims_json(const ClaimReport& report) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& c : report.claims) {
    doc.push_back({{"id", c.id}, {"measured", c.measured}, {"bound", c.bound}, {"verdict", to_string(c.verdict)}});
  }
  return doc.dump(2) + '\n';
}

}  // namespace gk
