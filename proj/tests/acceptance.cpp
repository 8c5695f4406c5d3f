// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gk/analysis.hpp"
#include "gk/construction.hpp"
#include "gk/formats.hpp"
#include "gk/report.hpp"
#include "support/oracles.hpp"

namespace {

using namespace gk;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

std::set<std::pair<Vertex, Vertex>> edge_set(const auto& edges) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (auto [u, v] : edges) out.insert({std::min(u, v), std::max(u, v)});
  return out;
}

testing::EdgeList edges_of(const EmbeddedGraph& g) {
  testing::EdgeList out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back(g.edge(e));
  return out;
}

testing::EdgeList edges_of(const SimpleGraph& g) {
  testing::EdgeList out;
  for (auto [u, v] : g.edges()) out.emplace_back(u, v);
  return out;
}

Outcome structural() {
  Outcome o;
  const auto start = Clock::now();
  for (int k = 2; k <= 10; ++k) {
    const auto g = build_gk(k);
    const auto V = static_cast<std::int64_t>(g.graph.vertex_count());
    const auto E = static_cast<std::int64_t>(g.graph.edge_count());
    const auto F = static_cast<std::int64_t>(face_count(g.graph));
    std::int64_t leaves = 0;
    for (const auto& l : g.labels) leaves += l.kind == VertexKind::kLeaf;
    const std::string at = " at k=" + std::to_string(k);
    o.require(is_simple(g.graph), "not simple" + at);
    o.require(connected_components(g.graph) == 1, "not connected" + at);
    o.require(is_regular(g.graph, 3), "not 3-regular" + at);
    o.require(euler_genus(g.graph) == 0, "genus != 0" + at);
    o.require(V == 15 * pow2(k - 1) - 16, "V" + at);
    o.require(2 * E == 3 * V, "E" + at);
    o.require(F == 15 * pow2(k - 2) - 6, "F" + at);
    o.require(leaves == 3 * pow2(k - 1), "leaves" + at);
  }
  const double t = seconds_since(start);
  o.require(t < 10.0, "took " + std::to_string(t) + " s (limit 10 s)");
  if (o.pass) o.detail = "k=2..10 simple, connected, cubic, genus 0, V/E/F/leaves exact";
  return o;
}

Outcome faces() {
  Outcome o;
  o.require(to_string(face_census(build_gk(2).graph)) == "4:3 5:6", "k=2 regression value");
  o.require(to_string(face_census(build_gk(3).graph)) == "4:6 5:6 6:6 7:6", "k=3 regression value");
  for (int k = 2; k <= 10; ++k) {
    const auto g = build_gk(k);
    const auto census = face_census(g.graph);
    const std::string at = " at k=" + std::to_string(k);
    const auto q = static_cast<std::size_t>(pow2(k - 2));
    std::map<std::size_t, std::size_t> closed{{4, 3 * q}, {5, 6}, {6, 6 * q - 6}, {7, 6 * q - 6}};
    std::erase_if(closed, [](const auto& e) { return e.second == 0; });
    o.require(census.histogram == closed, "census differs from closed form" + at);
    o.require(census == expected_census(k), "census differs from expected_census" + at);
    testing::Rotations rot(g.graph.vertex_count());
    for (Vertex v = 0; v < g.graph.vertex_count(); ++v) {
      for (Dart d : g.graph.rotation(v)) rot[v].push_back(g.graph.target(d));
    }
    o.require(testing::face_lengths_oracle(rot) == census.histogram, "orbit-tracing oracle disagrees" + at);
    o.require(k < 3 || census.max_length() == 7, "max face length != 7" + at);
    o.require(census.min_length() == 4, "min face length != 4" + at);
    o.require(census.weighted_sum() == 2 * g.graph.edge_count(), "sum of lengths != 2E" + at);
  }
  if (o.pass) o.detail = "k=2..10 census matches closed form and independent tracer";
  return o;
}

Outcome size_bound() {
  Outcome o;
  for (int k = 2; k <= 17; ++k) {
    const auto V = expected_counts(k).vertices;
    o.require(V >= pow2(k), "n < 2^k at k=" + std::to_string(k));
  }
  for (int k = 2; k <= 12; ++k) {
    o.require(static_cast<std::int64_t>(build_gk(k).graph.vertex_count()) >= pow2(k),
              "built n < 2^k at k=" + std::to_string(k));
  }
  if (o.pass) o.detail = "n >= 2^k for k=2..17";
  return o;
}

Outcome diameters() {
  Outcome o;
  for (int k = 2; k <= 9; ++k) {
    const auto g = build_gk(k);
    const std::string at = " at k=" + std::to_string(k);
    const auto all = diameter_bfs_all(g.graph);
    const auto fast = ifub(g.graph);
    o.require(all.value == fast.value, "bfs-all != ifub" + at);
    o.require(double_sweep(g.graph).value <= all.value, "double sweep above exact" + at);
    o.require(bfs(g.graph, g.rootA)[g.rootB] == static_cast<std::uint32_t>(4 * k - 4), "d(rootA, rootB)" + at);
  }
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 4 + 2 * static_cast<std::size_t>(rng() % 249);
    const auto edges = testing::random_connected_cubic(n, rng);
    const SimpleGraph g(n, edges);
    const auto all = diameter_bfs_all(g);
    const auto oracle = static_cast<std::uint32_t>(testing::diameter_oracle(testing::adjacency(n, edges)));
    o.require(all.value == oracle, "bfs-all disagrees with oracle on random cubic n=" + std::to_string(n));
    o.require(ifub(g).value == all.value, "ifub != bfs-all on random cubic n=" + std::to_string(n));
    o.require(double_sweep(g).value <= all.value, "double sweep above exact on random cubic");
  }
  std::string threeK;
  for (int k = 2; k <= 12; ++k) {
    const auto report = verify_claims(build_gk(k));
    const std::string at = " at k=" + std::to_string(k);
    o.require(report.find("diameter-4log2n")->verdict == Verdict::kPass, "diameter > 4 log2 V" + at);
    const auto v = report.find("diameter-3k")->verdict;
    o.require(v != Verdict::kFail, "3k claim FAIL" + at);
    o.require((v == Verdict::kDiscrepancy) == (k >= 5), "unexpected 3k verdict" + at);
    if (v == Verdict::kDiscrepancy && threeK.empty()) threeK = "3k DISCREPANCY from k=" + std::to_string(k);
  }
  if (o.pass) o.detail = "bfs-all = ifub on G_2..G_9 and 50 random cubic; diam <= 4 log2 V for k<=12; " + threeK;
  return o;
}

Outcome refutation() {
  Outcome o;
  const auto start = Clock::now();
  const auto rows = refutation_table(2, 10, DiameterMethod::kIfub);
  const double t = seconds_since(start);
  const auto kStar = smallest_refuting_k(rows);
  o.require(kStar.has_value(), "no refuting k in 2..10");
  if (kStar) o.require(*kStar >= 5 && *kStar <= 10, "smallest refuting k outside [5, 10]");
  o.require(t <= 60.0, "took " + std::to_string(t) + " s (limit 60 s)");
  if (o.pass) {
    const auto& row = rows[static_cast<std::size_t>(*kStar - 2)];
    std::ostringstream s;
    s << "smallest refuting k = " << *kStar << " (n=" << row.n << ", diameter " << row.diameter << " < "
      << format_fixed(row.fullereneBound, 3) << "), " << format_fixed(t, 2) << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome scale_run() {
  Outcome o;
  std::ostringstream s;
  // The stated vertex count 983,024 belongs to G_17; G_16 has 491,504. Both are run.
  for (int k : {16, 17}) {
    const auto g = build_gk(k);
    const auto V = g.graph.vertex_count();
    const auto start = Clock::now();
    const auto exact = ifub(g.graph);
    const double t = seconds_since(start);
    const auto sweep = double_sweep(g.graph);
    const std::string at = " on G_" + std::to_string(k);
    o.require(static_cast<std::int64_t>(V) == 15 * pow2(k - 1) - 16, "vertex count" + at);
    o.require(t <= 300.0, "ifub took " + std::to_string(t) + " s" + at);
    o.require(exact.value >= sweep.value, "ifub below double sweep" + at);
    o.require(exact.value <= 4.0 * std::log2(static_cast<double>(V)), "diameter > 4 log2 V" + at);
    s << (k == 16 ? "" : "; ") << "G_" << k << ": V=" << V << " diam=" << exact.value << " in " << format_fixed(t, 1)
      << " s";
  }
  if (o.pass) o.detail = s.str();
  return o;
}

Outcome round_trips() {
  Outcome o;
  o.require(to_graph6(SimpleGraph(2, testing::EdgeList{{0, 1}})) == "A_", "K2 graph6");
  o.require(to_graph6(SimpleGraph(3, testing::EdgeList{{0, 1}, {0, 2}, {1, 2}})) == "Bw", "K3 graph6");
  for (int k = 2; k <= 8; ++k) {
    const auto g = build_gk(k);
    const std::string at = " at k=" + std::to_string(k);
    const auto g6 = to_graph6(g.graph);
    const auto back = from_graph6(g6);
    o.require(edge_set(edges_of(back)) == edge_set(edges_of(g.graph)), "graph6 edges" + at);
    o.require(to_graph6(back) == g6, "graph6 re-encode" + at);
    const auto doc = to_rotation_doc(g);
    const auto parsed = from_rotation_doc(doc);
    o.require(to_rotation_doc(parsed.graph, parsed.labels.value()) == doc, "rotation document" + at);
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 120);
    const auto edges = testing::random_simple_graph(n, static_cast<double>(rng() % 100) / 100.0, rng);
    const SimpleGraph g(n, edges);
    const auto g6 = to_graph6(g);
    o.require(to_graph6(from_graph6(g6)) == g6, "graph6 random n=" + std::to_string(n));
    const auto embedded = testing::embed_shuffled(n, edges, rng);
    const auto doc = to_rotation_doc(embedded);
    o.require(to_rotation_doc(from_rotation_doc(doc).graph) == doc, "rotation document random n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "graph6 and rotation document identity on G_2..G_8 and 100 random graphs";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome rendering() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("gk_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::vector<std::string> files;
  for (int i = 0; i < 2; ++i) {
    const auto path = dir / ("g5_" + std::to_string(i) + ".svg");
    const std::string cmd = std::string("\"") + GK_CLI_PATH + "\" generate --k 5 --format svg --out \"" +
                            path.string() + "\" >/dev/null 2>&1";
    o.require(std::system(cmd.c_str()) == 0, "CLI exited with an error");
    files.push_back(slurp(path));
  }
  std::filesystem::remove_all(dir);
  o.require(!files[0].empty() && files[0] == files[1], "two runs differ");
  const auto& svg = files[0];
  const auto count = [&](const std::regex& re) {
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(svg.begin(), svg.end(), re), {}));
  };
  const auto circles = count(std::regex("<circle "));
  const auto whiteTree = count(std::regex(R"(<circle class="vertex tree"[^>]*fill="white")"));
  const auto blackSub = count(std::regex(R"(<circle class="vertex subdivision"[^>]*fill="black")"));
  const auto treeEdges = count(std::regex(R"re(class="edge tree" stroke-width="([0-9.]+)")re"));
  const auto matchingEdges = count(std::regex(R"re(class="edge matching" stroke-width="([0-9.]+)")re"));
  const auto g = build_gk(5);
  std::size_t subs = 0;
  for (const auto& l : g.labels) subs += l.kind == VertexKind::kSubdivision;
  o.require(circles == 224, "expected 224 vertex glyphs, found " + std::to_string(circles));
  o.require(whiteTree == 224 - subs && blackSub == subs, "vertex fills");
  o.require(treeEdges + matchingEdges == g.graph.edge_count(), "edge count");
  std::smatch tm;
  std::smatch mm;
  std::regex_search(svg, tm, std::regex(R"re(class="edge tree" stroke-width="([0-9.]+)")re"));
  std::regex_search(svg, mm, std::regex(R"re(class="edge matching" stroke-width="([0-9.]+)")re"));
  o.require(!tm.empty() && !mm.empty() && std::stod(tm[1]) > std::stod(mm[1]), "tree edges not bolder");
  if (o.pass) {
    o.detail = "deterministic; " + std::to_string(circles) + " glyphs (" + std::to_string(224 - subs) +
               " white, " + std::to_string(subs) + " black); tree edges bold";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 structure", structural}, {"AC2 faces", faces},         {"AC3 size", size_bound},
      {"AC4 diameter", diameters},   {"AC5 refutation", refutation}, {"AC6 scale", scale_run},
      {"AC7 formats", round_trips},  {"AC8 render", rendering},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double t = seconds_since(start);
    std::printf("%-16s %s  [%7.2f s]  %s\n", name.c_str(), o.pass ? "PASS" : "FAIL", t, o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
