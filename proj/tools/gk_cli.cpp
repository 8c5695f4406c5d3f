// gk: generate, verify and analyse the cubic planar family G_k.
//
// Exit codes: 0 success, 1 verification or analysis failure (including
// unreadable input), 2 usage error.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"

#include "gk/analysis.hpp"
#include "gk/construction.hpp"
#include "gk/formats.hpp"
#include "gk/render.hpp"
#include "gk/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AnalysisFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> k;
  int kMin = 2;
  int kMax = 10;
  int maxK = gk::kDefaultMaxK;
  std::string input;
  std::string out;
  std::string format = "edges";
  std::string method = "ifub";
  std::string report = "tsv";
  unsigned threads = 0;
  bool noShade = false;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw AnalysisFailure("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

/// Where summary lines go: stdout unless the payload itself went there.
std::ostream& summary_stream(const Options& opt, bool payloadOnStdout) {
  return (payloadOnStdout && (opt.out.empty() || opt.out == "-")) ? std::cerr : std::cout;
}

gk::GkGraph build(const Options& opt) {
  if (!opt.k) throw UsageError("--k is required");
  if (*opt.k < 2 || *opt.k > opt.maxK) {
    throw UsageError("--k must lie in [2, " + std::to_string(opt.maxK) + "]");
  }
  return gk::build_gk(gk::GkParams{*opt.k, opt.maxK});
}

void require_k_xor_input(const Options& opt) {
  if (opt.k.has_value() == !opt.input.empty()) throw UsageError("give exactly one of --k and --input");
}

gk::DiameterMethod method_of(const Options& opt) {
  try {
    return gk::parse_diameter_method(opt.method);
  } catch (const gk::GraphError& e) {
    throw UsageError(e.what());
  }
}

/// An ingested file: an embedded graph (rotation document) or a bare graph (graph6).
using Ingested = std::variant<gk::RotationDocument, gk::SimpleGraph>;

Ingested load(const std::string& path) {
  const std::string text = read_file(path);
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  try {
    if (first < text.size() && text[first] == '{') return gk::from_rotation_doc(text);
    return gk::from_graph6(text);
  } catch (const gk::FormatError& e) {
    throw AnalysisFailure(std::string("decode error in '") + path + "': " + e.what());
  }
}

int cmd_generate(const Options& opt) {
  const auto g = build(opt);
  std::string text;
  if (opt.format == "graph6") {
    text = gk::to_graph6(g.graph) + '\n';
  } else if (opt.format == "dot") {
    text = gk::to_dot(g);
  } else if (opt.format == "edges") {
    text = gk::to_edge_list(g.graph);
  } else if (opt.format == "rotdoc") {
    text = gk::to_rotation_doc(g);
  } else if (opt.format == "svg") {
    text = gk::to_svg(g);
  } else {
    throw UsageError("unknown format '" + opt.format + "'");
  }
  write_output(opt.out, text);
  summary_stream(opt, true) << "V=" << g.graph.vertex_count() << " E=" << g.graph.edge_count()
                            << " F=" << gk::face_count(g.graph) << '\n';
  return kExitOk;
}

int cmd_render(const Options& opt) {
  const auto g = build(opt);
  gk::RenderSpec spec;
  spec.shadeSevenFaces = !opt.noShade;
  write_output(opt.out, gk::to_svg(g, spec));
  summary_stream(opt, true) << "V=" << g.graph.vertex_count() << " E=" << g.graph.edge_count()
                            << " F=" << gk::face_count(g.graph) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  require_k_xor_input(opt);
  const auto method = method_of(opt);
  if (method == gk::DiameterMethod::kDoubleSweep) throw UsageError("verify needs --method ifub or bfs-all");
  if (opt.report != "tsv" && opt.report != "json") throw UsageError("--report must be tsv or json");

  gk::GkGraph g;
  if (opt.k) {
    g = build(opt);
  } else {
    auto ingested = load(opt.input);
    auto* doc = std::get_if<gk::RotationDocument>(&ingested);
    if (doc == nullptr) throw AnalysisFailure("graph6 input carries no embedding; verify needs a rotation document");
    if (!doc->labels) throw AnalysisFailure("rotation document has no labels; cannot infer k");
    try {
      g = gk::gk_from_labeled(std::move(doc->graph), std::move(*doc->labels));
    } catch (const gk::GraphError& e) {
      throw AnalysisFailure(e.what());
    }
  }

  const auto report = gk::verify_claims(g, method, gk::DiameterOptions{opt.threads});
  write_output(opt.out, opt.report == "json" ? gk::claims_json(report) : gk::claims_tsv(report));
  auto& summary = summary_stream(opt, true);
  if (!report.passed()) {
    summary << "overall: FAIL\n";
    return kExitFailure;
  }
  summary << (report.has_discrepancy() ? "overall: PASS (DISCREPANCY flagged)\n" : "overall: PASS\n");
  return kExitOk;
}

int cmd_census(const Options& opt) {
  require_k_xor_input(opt);
  if (opt.k) {
    const auto g = build(opt);
    const auto census = gk::face_census(g.graph);
    std::cout << gk::to_string(census) << '\n';
    if (census != gk::expected_census(*opt.k)) {
      std::cerr << "census differs from the closed form " << gk::to_string(gk::expected_census(*opt.k)) << '\n';
      return kExitFailure;
    }
    return kExitOk;
  }
  auto ingested = load(opt.input);
  auto* doc = std::get_if<gk::RotationDocument>(&ingested);
  if (doc == nullptr) throw AnalysisFailure("graph6 input carries no embedding; census needs a rotation document");
  std::cout << gk::to_string(gk::face_census(doc->graph)) << '\n';
  return kExitOk;
}

std::string describe(const gk::DiameterResult& r, const std::vector<gk::VertexLabel>* labels) {
  auto name = [&](gk::Vertex v) {
    return labels != nullptr && !labels->empty() ? gk::display_name((*labels)[v]) : std::to_string(v);
  };
  return std::to_string(r.value) + " (" + name(r.u) + ", " + name(r.v) + ") " + (r.exact ? "exact" : "lower-bound");
}

int cmd_diameter(const Options& opt) {
  require_k_xor_input(opt);
  const auto method = method_of(opt);
  const gk::DiameterOptions options{opt.threads};
  try {
    if (opt.k) {
      const auto g = build(opt);
      std::cout << describe(gk::compute_diameter(g.graph, method, options), &g.labels) << '\n';
      return kExitOk;
    }
    auto ingested = load(opt.input);
    if (auto* doc = std::get_if<gk::RotationDocument>(&ingested)) {
      const auto* labels = doc->labels ? &*doc->labels : nullptr;
      std::cout << describe(gk::compute_diameter(doc->graph, method, options), labels) << '\n';
    } else {
      std::cout << describe(gk::compute_diameter(std::get<gk::SimpleGraph>(ingested), method, options), nullptr)
                << '\n';
    }
  } catch (const gk::GraphError& e) {
    throw AnalysisFailure(e.what());
  }
  return kExitOk;
}

int cmd_refute(const Options& opt) {
  const auto method = method_of(opt);
  if (opt.report != "tsv" && opt.report != "json") throw UsageError("--report must be tsv or json");
  if (opt.kMin < 2 || opt.kMin > opt.kMax || opt.kMax > opt.maxK) {
    throw UsageError("need 2 <= --k-min <= --k-max <= " + std::to_string(opt.maxK));
  }
  const auto rows = gk::refutation_table(opt.kMin, opt.kMax, method, gk::DiameterOptions{opt.threads}, opt.maxK);
  write_output(opt.out, opt.report == "json" ? gk::refutation_json(rows) : gk::refutation_tsv(rows));
  auto& summary = summary_stream(opt, true);
  if (const auto kStar = gk::smallest_refuting_k(rows)) {
    summary << "smallest refuting k: " << *kStar << '\n';
  } else {
    summary << "no refuting k in [" << opt.kMin << ", " << opt.kMax << "]\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate and verify the cubic planar graphs G_k"};
  app.require_subcommand(1);
  Options opt;

  auto add_k = [&](CLI::App* cmd) {
    cmd->add_option("--k", opt.k, "construction parameter (k >= 2)");
    cmd->add_option("--max-k", opt.maxK, "cap on k")->capture_default_str();
  };
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", opt.threads, "worker threads (0 = all cores, 1 = serial)")->capture_default_str();
  };

  auto* generate = app.add_subcommand("generate", "write G_k in one of the supported formats");
  add_k(generate);
  generate->add_option("--format", opt.format, "graph6 | dot | edges | rotdoc | svg")->capture_default_str();
  generate->add_option("--out", opt.out, "output path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "check every claim about G_k");
  add_k(verify);
  verify->add_option("--input", opt.input, "rotation document with labels");
  verify->add_option("--method", opt.method, "bfs-all | ifub")->capture_default_str();
  verify->add_option("--report", opt.report, "tsv | json")->capture_default_str();
  verify->add_option("--out", opt.out, "report path (default: stdout)");
  add_threads(verify);

  auto* census = app.add_subcommand("census", "face length histogram");
  add_k(census);
  census->add_option("--input", opt.input, "rotation document");

  auto* diameter = app.add_subcommand("diameter", "diameter with witness pair");
  add_k(diameter);
  diameter->add_option("--input", opt.input, "rotation document or graph6 file");
  diameter->add_option("--method", opt.method, "bfs-all | ifub | double-sweep")->capture_default_str();
  add_threads(diameter);

  auto* refute = app.add_subcommand("refute", "compare diameters with the fullerene lower bound");
  refute->add_option("--k-min", opt.kMin)->capture_default_str();
  refute->add_option("--k-max", opt.kMax)->capture_default_str();
  refute->add_option("--max-k", opt.maxK, "cap on k")->capture_default_str();
  refute->add_option("--method", opt.method, "bfs-all | ifub | double-sweep")->capture_default_str();
  refute->add_option("--report", opt.report, "tsv | json")->capture_default_str();
  refute->add_option("--out", opt.out, "table path (default: stdout)");
  add_threads(refute);

  auto* render = app.add_subcommand("render", "SVG drawing of G_k");
  add_k(render);
  render->add_option("--out", opt.out, "output path (default: stdout)");
  render->add_flag("--no-shade", opt.noShade, "do not shade 7-faces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(opt);
    if (*verify) return cmd_verify(opt);
    if (*census) return cmd_census(opt);
    if (*diameter) return cmd_diameter(opt);
    if (*refute) return cmd_refute(opt);
    if (*render) return cmd_render(opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AnalysisFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
