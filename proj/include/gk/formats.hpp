#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gk/construction.hpp"
#include "gk/embedded_graph.hpp"

namespace gk {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// graph6
//
// N(n) followed by the upper triangle of the adjacency matrix, column by
// column (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, each byte
// offset by 63. N(n) is one byte for n <= 62, '~' plus three bytes for
// n <= 258047, and "~~" plus six bytes up to 2^36 - 1.

inline constexpr std::uint64_t kGraph6MaxVertices = (std::uint64_t{1} << 36) - 1;

namespace detail {

inline void graph6_size(std::string& out, std::uint64_t n) {
  auto put6 = [&](int count) {
    for (int shift = 6 * (count - 1); shift >= 0; shift -= 6) {
      out += static_cast<char>(63 + ((n >> shift) & 0x3F));
    }
  };
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += '~';
    put6(3);
  } else {
    out += "~~";
    put6(6);
  }
}

}  // namespace detail

template <AdjacencyGraph G>
std::string to_graph6(const G& g) {
  const std::uint64_t n = g.vertex_count();
  if (n > kGraph6MaxVertices) throw FormatError("to_graph6: too many vertices");
  if (!is_simple(g)) throw FormatError("to_graph6: graph6 needs a simple graph");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::uint8_t> groups((bits + 5) / 6, 0);
  for (Vertex j = 0; j < n; ++j) {
    for (Vertex i : std::span<const Vertex>(g.neighbors(j))) {
      if (i >= j) continue;
      const std::uint64_t at = std::uint64_t{j} * (j - 1) / 2 + i;
      groups[at / 6] |= static_cast<std::uint8_t>(0x20 >> (at % 6));
    }
  }
  std::string out;
  detail::graph6_size(out, n);
  out.reserve(out.size() + groups.size());
  for (auto group : groups) out += static_cast<char>(63 + group);
  return out;
}

/// Accepts an optional ">>graph6<<" header and one trailing newline.
inline SimpleGraph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");

  std::size_t at = 0;
  auto next6 = [&]() -> std::uint64_t {
    if (at >= text.size()) throw FormatError("graph6: truncated size field");
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) {
      throw FormatError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(at) +
                        " outside 63..126");
    }
    ++at;
    return c - 63U;
  };
  auto read_size = [&](int count) {
    std::uint64_t n = 0;
    for (int i = 0; i < count; ++i) n = (n << 6) | next6();
    return n;
  };

  std::uint64_t n = next6();
  if (n == 63) {
    if (at < text.size() && text[at] == '~') {
      ++at;
      n = read_size(6);
    } else {
      n = read_size(3);
    }
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t groups = (bits + 5) / 6;
  if (text.size() - at < groups) {
    throw FormatError("graph6: truncated adjacency section (" + std::to_string(text.size() - at) + " of " +
                      std::to_string(groups) + " bytes)");
  }
  if (text.size() - at > groups) throw FormatError("graph6: trailing data after adjacency section");

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t bit = 0;
  for (std::uint64_t g = 0; g < groups; ++g) {
    const std::uint64_t value = next6();
    for (int b = 5; b >= 0 && bit < bits; --b, ++bit) {
      if ((value >> b) & 1U) {
        // column j holds bits [j(j-1)/2, j(j+1)/2)
        auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(bit))) / 2.0);
        while (j * (j - 1) / 2 > bit) --j;
        while ((j + 1) * j / 2 <= bit) ++j;
        const std::uint64_t i = bit - j * (j - 1) / 2;
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return SimpleGraph(static_cast<std::size_t>(n), edges);
}

// ---------------------------------------------------------------------------
// Rotation document
//
// {"version":1,"n":N,"edges":[[u,v],...],"rotations":[[dart,...],...],
//  "labels":[{"tree":"A","kind":"root","depth":0,"pos":0},...]}
// Compact JSON in exactly this key order followed by one LF; "labels" is
// omitted for unlabeled graphs.

inline constexpr int kRotationDocVersion = 1;

struct RotationDocument {
  EmbeddedGraph graph;
  std::optional<std::vector<VertexLabel>> labels;
};

inline std::string to_rotation_doc(const EmbeddedGraph& g, std::span<const VertexLabel> labels = {}) {
  if (!g.frozen()) throw FormatError("to_rotation_doc: graph is not frozen");
  if (!labels.empty() && labels.size() != g.vertex_count()) {
    throw FormatError("to_rotation_doc: label count does not match vertex count");
  }
  nlohmann::ordered_json doc;
  doc["version"] = kRotationDocVersion;
  doc["n"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    edges.push_back({u, v});
  }
  doc["edges"] = std::move(edges);
  auto rotations = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto rot = g.rotation(v);
    rotations.push_back(std::vector<Dart>(rot.begin(), rot.end()));
  }
  doc["rotations"] = std::move(rotations);
  if (!labels.empty()) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& l : labels) {
      out.push_back({{"tree", to_string(l.tree)}, {"kind", to_string(l.kind)}, {"depth", l.depth}, {"pos", l.pos}});
    }
    doc["labels"] = std::move(out);
  }
  return doc.dump() + '\n';
}

inline std::string to_rotation_doc(const GkGraph& gk) { return to_rotation_doc(gk.graph, gk.labels); }

namespace detail {

template <typename T>
T json_integer(const nlohmann::json& value, std::string_view what) {
  if (!value.is_number_integer()) throw FormatError("rotation document: " + std::string(what) + " must be an integer");
  const auto raw = value.get<std::int64_t>();
  if (raw < 0 || static_cast<std::uint64_t>(raw) > std::numeric_limits<T>::max()) {
    throw FormatError("rotation document: " + std::string(what) + " out of range");
  }
  return static_cast<T>(raw);
}

inline Tree parse_tree(const std::string& s) {
  if (s == "A") return Tree::kA;
  if (s == "B") return Tree::kB;
  if (s == "Shared") return Tree::kShared;
  throw FormatError("rotation document: unknown tree '" + s + "'");
}

inline VertexKind parse_kind(const std::string& s) {
  if (s == "root") return VertexKind::kRoot;
  if (s == "internal") return VertexKind::kInternal;
  if (s == "subdivision") return VertexKind::kSubdivision;
  if (s == "leaf") return VertexKind::kLeaf;
  throw FormatError("rotation document: unknown kind '" + s + "'");
}

}  // namespace detail

inline RotationDocument from_rotation_doc(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("rotation document: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("rotation document: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "version" && key != "n" && key != "edges" && key != "rotations" && key != "labels") {
      throw FormatError("rotation document: unexpected field '" + key + "'");
    }
  }
  for (const char* key : {"version", "n", "edges", "rotations"}) {
    if (!doc.contains(key)) throw FormatError(std::string("rotation document: missing field '") + key + "'");
  }
  const int version = detail::json_integer<int>(doc["version"], "version");
  if (version != kRotationDocVersion) {
    throw FormatError("rotation document: unsupported version " + std::to_string(version));
  }
  const auto n = detail::json_integer<Vertex>(doc["n"], "n");
  const auto& edges = doc["edges"];
  const auto& rotations = doc["rotations"];
  if (!edges.is_array()) throw FormatError("rotation document: edges must be an array");
  if (!rotations.is_array() || rotations.size() != n) {
    throw FormatError("rotation document: rotations must list one array per vertex");
  }

  RotationDocument out{EmbeddedGraph(n), std::nullopt};
  try {
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2) throw FormatError("rotation document: edge must be a pair");
      out.graph.add_edge(detail::json_integer<Vertex>(e[0], "edge endpoint"),
                         detail::json_integer<Vertex>(e[1], "edge endpoint"));
    }
    const auto darts = out.graph.dart_count();
    std::vector<Dart> rot;
    for (Vertex v = 0; v < n; ++v) {
      const auto& r = rotations[v];
      if (!r.is_array()) throw FormatError("rotation document: rotation must be an array");
      rot.clear();
      for (const auto& d : r) {
        const auto dart = detail::json_integer<Dart>(d, "dart id");
        if (dart >= darts) {
          throw FormatError("rotation document: dart id " + std::to_string(dart) + " out of range at vertex " +
                            std::to_string(v));
        }
        rot.push_back(dart);
      }
      out.graph.set_rotation(v, rot);
    }
    out.graph.freeze();
  } catch (const GraphError& e) {
    throw FormatError(std::string("rotation document: ") + e.what());
  }

  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_array() || labels.size() != n) throw FormatError("rotation document: labels must match n");
    std::vector<VertexLabel> parsed;
    parsed.reserve(n);
    for (const auto& l : labels) {
      if (!l.is_object() || !l.contains("tree") || !l.contains("kind") || !l.contains("depth") || !l.contains("pos") ||
          !l["tree"].is_string() || !l["kind"].is_string()) {
        throw FormatError("rotation document: malformed label");
      }
      parsed.push_back({detail::parse_tree(l["tree"].get<std::string>()), detail::parse_kind(l["kind"].get<std::string>()),
                        detail::json_integer<int>(l["depth"], "label depth"),
                        detail::json_integer<int>(l["pos"], "label pos")});
    }
    out.labels = std::move(parsed);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Plain-text exports

template <AdjacencyGraph G>
std::string to_edge_list(const G& g) {
  std::string out;
  if constexpr (std::is_same_v<G, EmbeddedGraph>) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [u, v] = g.edge(e);
      out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
    }
  } else {
    for (auto [u, v] : g.edges()) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  }
  return out;
}

/**
 * Graphviz DOT. With labels, tree vertices are white and subdivision
 * vertices black; tree edges are drawn bold when edge kinds are given.
 */
inline std::string to_dot(const EmbeddedGraph& g, std::span<const VertexLabel> labels = {},
                          std::span<const EdgeKind> kinds = {}) {
  std::string out = "graph G {\n  node [shape=circle, style=filled, fixedsize=true, width=0.3, fontsize=7];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (labels.empty()) {
      out += " [fillcolor=white];\n";
    } else if (labels[v].kind == VertexKind::kSubdivision) {
      out += " [label=\"" + display_name(labels[v]) + "\", fillcolor=black, fontcolor=white];\n";
    } else {
      out += " [label=\"" + display_name(labels[v]) + "\", fillcolor=white];\n";
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    out += "  " + std::to_string(u) + " -- " + std::to_string(v);
    if (!kinds.empty()) out += kinds[e] == EdgeKind::kTree ? " [penwidth=2.5]" : " [penwidth=1]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

inline std::string to_dot(const GkGraph& gk) { return to_dot(gk.graph, gk.labels, gk.edgeKinds); }

}  // namespace gk
