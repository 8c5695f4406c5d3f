#pragma once

#include <array>
#include <cstdint>
#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gk/embedded_graph.hpp"

namespace gk {

inline constexpr int kDefaultMaxK = 26;

struct GkParams {
  int k = 2;
  int maxK = kDefaultMaxK;

  void validate() const {
    if (k < 2) throw GraphError("k must be at least 2 (got " + std::to_string(k) + ")");
    if (k > maxK) {
      throw GraphError("k = " + std::to_string(k) + " exceeds the configured cap " +
                       std::to_string(maxK));
    }
  }
};

enum class Tree : std::uint8_t { kA, kB, kShared };
enum class VertexKind : std::uint8_t { kRoot, kInternal, kSubdivision, kLeaf };

/**
 * Where a vertex of G_k came from.
 *
 * depth is the tree depth for internal vertices, the depth of the lower
 * endpoint of the subdivided edge for subdivision vertices, k for leaves and
 * 0 for roots. pos is the left-to-right index within that level; a
 * subdivision vertex shares pos with the child below it.
 */
struct VertexLabel {
  Tree tree = Tree::kA;
  VertexKind kind = VertexKind::kRoot;
  int depth = 0;
  int pos = 0;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;

  /// Distance to the root of the label's own tree inside G_k.
  int distance_to_root(int k) const {
    switch (kind) {
      case VertexKind::kRoot: return 0;
      case VertexKind::kInternal: return 2 * depth - 1;
      case VertexKind::kSubdivision: return 2 * depth - 2;
      case VertexKind::kLeaf: return 2 * k - 2;
    }
    return -1;
  }
};

inline const char* to_string(Tree t) {
  switch (t) {
    case Tree::kA: return "A";
    case Tree::kB: return "B";
    case Tree::kShared: return "Shared";
  }
  return "?";
}

inline const char* to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::kRoot: return "root";
    case VertexKind::kInternal: return "internal";
    case VertexKind::kSubdivision: return "subdivision";
    case VertexKind::kLeaf: return "leaf";
  }
  return "?";
}

/// Short human-readable name: rootA, A:int(2,3), B:sub(3,5), leaf(7).
inline std::string display_name(const VertexLabel& label) {
  const std::string at = "(" + std::to_string(label.depth) + "," + std::to_string(label.pos) + ")";
  switch (label.kind) {
    case VertexKind::kRoot: return std::string("root") + to_string(label.tree);
    case VertexKind::kInternal: return std::string(to_string(label.tree)) + ":int" + at;
    case VertexKind::kSubdivision: return std::string(to_string(label.tree)) + ":sub" + at;
    case VertexKind::kLeaf: return "leaf(" + std::to_string(label.pos) + ")";
  }
  return "?";
}

/// Number of tree vertices at depth d >= 1 of T_k.
constexpr std::int64_t level_size(int depth) { return depth == 0 ? 1 : 3 * (std::int64_t{1} << (depth - 1)); }

struct TreeNode {
  int depth = 0;
  int pos = 0;
  std::int64_t parent = -1;  // index into TernaryTree::nodes
};

/// T_k: root of degree 3, every other internal vertex has two children, leaves at depth k.
struct TernaryTree {
  int k = 0;
  std::vector<TreeNode> nodes;  // sorted by (depth, pos)

  std::size_t leaf_count() const { return static_cast<std::size_t>(level_size(k)); }
};

inline TernaryTree build_ternary_tree(int k) {
  if (k < 2) throw GraphError("build_ternary_tree: k must be at least 2");
  TernaryTree tree;
  tree.k = k;
  tree.nodes.push_back({0, 0, -1});
  std::int64_t levelStart = 0;
  for (int depth = 1; depth <= k; ++depth) {
    const std::int64_t m = level_size(depth);
    for (std::int64_t p = 0; p < m; ++p) {
      // root children hang off the root; otherwise children of p are 2p and 2p+1
      const std::int64_t parent = depth == 1 ? 0 : levelStart + p / 2;
      tree.nodes.push_back({depth, static_cast<int>(p), parent});
    }
    levelStart += level_size(depth - 1);
  }
  return tree;
}

enum class EdgeKind : std::uint8_t { kTree, kMatching };

struct DraftEdge {
  Vertex u;
  Vertex v;
  EdgeKind kind;
};

/// A construction stage of G_k before its rotation system is fixed.
struct GkDraft {
  int k = 0;
  std::vector<VertexLabel> labels;
  std::vector<DraftEdge> edges;
  Vertex rootA = 0;
  Vertex rootB = 0;

  std::size_t vertex_count() const { return labels.size(); }
};

/**
 * Identify leaf i of treeA with leaf i of treeB.
 * Vertex ids: rootA, A internals by (depth,pos), rootB, B internals, leaves.
 */
inline GkDraft glue_trees(const TernaryTree& treeA, const TernaryTree& treeB) {
  if (treeA.k != treeB.k || treeA.nodes.size() != treeB.nodes.size()) {
    throw GraphError("glue_trees: trees of different depth");
  }
  const int k = treeA.k;
  const std::size_t nonLeaf = treeA.nodes.size() - treeA.leaf_count();
  GkDraft draft;
  draft.k = k;
  draft.rootA = 0;
  draft.rootB = static_cast<Vertex>(nonLeaf);

  auto vertex_of = [&](Tree which, std::size_t node) -> Vertex {
    if (node >= nonLeaf) return static_cast<Vertex>(2 * nonLeaf + (node - nonLeaf));
    return static_cast<Vertex>(which == Tree::kA ? node : nonLeaf + node);
  };

  draft.labels.resize(2 * nonLeaf + treeA.leaf_count());
  for (Tree which : {Tree::kA, Tree::kB}) {
    const auto& tree = which == Tree::kA ? treeA : treeB;
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      const auto& node = tree.nodes[i];
      VertexLabel label{which, VertexKind::kInternal, node.depth, node.pos};
      if (node.depth == 0) label.kind = VertexKind::kRoot;
      if (node.depth == k) label = {Tree::kShared, VertexKind::kLeaf, k, node.pos};
      draft.labels[vertex_of(which, i)] = label;
      if (node.parent >= 0) {
        draft.edges.push_back({vertex_of(which, static_cast<std::size_t>(node.parent)),
                               vertex_of(which, i), EdgeKind::kTree});
      }
    }
  }
  return draft;
}

/// Put a new vertex on every tree edge whose endpoints are both internal.
inline GkDraft subdivide_internal_edges(GkDraft draft) {
  std::vector<DraftEdge> edges;
  edges.reserve(draft.edges.size() * 2);
  for (const auto& e : draft.edges) {
    const auto& lu = draft.labels[e.u];
    const auto& lv = draft.labels[e.v];
    if (e.kind != EdgeKind::kTree || lu.kind != VertexKind::kInternal ||
        lv.kind != VertexKind::kInternal) {
      edges.push_back(e);
      continue;
    }
    const VertexLabel child = lu.depth > lv.depth ? lu : lv;
    const auto s = static_cast<Vertex>(draft.labels.size());
    draft.labels.push_back({child.tree, VertexKind::kSubdivision, child.depth, child.pos});
    edges.push_back({e.u, s, EdgeKind::kTree});
    edges.push_back({s, e.v, EdgeKind::kTree});
  }
  draft.edges = std::move(edges);
  return draft;
}

/// Members of the level at even distance d from the root of `which`, left to right.
inline std::vector<Vertex> level_members(const GkDraft& draft, Tree which, int d) {
  std::vector<std::pair<int, Vertex>> found;
  for (Vertex v = 0; v < draft.labels.size(); ++v) {
    const auto& label = draft.labels[v];
    const bool inTree = label.tree == which || label.kind == VertexKind::kLeaf;
    if (inTree && label.distance_to_root(draft.k) == d) found.emplace_back(label.pos, v);
  }
  std::sort(found.begin(), found.end());
  std::vector<Vertex> members;
  members.reserve(found.size());
  for (auto [pos, v] : found) members.push_back(v);
  return members;
}

/// Cyclic cousin pairing v1v2, v3v4, ..., v_l v0 of one level.
inline std::vector<std::pair<Vertex, Vertex>> cousin_pairs(std::span<const Vertex> members) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  const std::size_t m = members.size();
  for (std::size_t i = 1; i < m; i += 2) pairs.emplace_back(members[i], members[(i + 1) % m]);
  return pairs;
}

/**
 * For both trees and every even distance d in [2, 2k-2], join each right
 * sibling to the left sibling of the next pair, wrapping around. The leaf
 * level is shared, so its matching is added once.
 */
inline GkDraft add_level_matchings(GkDraft draft) {
  const int k = draft.k;
  // levels[tree][d / 2 - 1] holds (pos, vertex) for the even level d
  std::array<std::vector<std::vector<std::pair<int, Vertex>>>, 2> levels;
  for (auto& perTree : levels) perTree.resize(static_cast<std::size_t>(k - 1));
  for (Vertex v = 0; v < draft.labels.size(); ++v) {
    const auto& label = draft.labels[v];
    const int d = label.distance_to_root(k);
    if (d < 2 || d % 2 != 0) continue;
    const auto slot = static_cast<std::size_t>(d / 2 - 1);
    if (label.tree != Tree::kB) levels[0][slot].emplace_back(label.pos, v);
    if (label.tree != Tree::kA) levels[1][slot].emplace_back(label.pos, v);
  }

  std::vector<std::pair<Vertex, Vertex>> leafPairs;
  for (std::size_t t = 0; t < 2; ++t) {
    for (int d = 2; d <= 2 * k - 2; d += 2) {
      auto& level = levels[t][static_cast<std::size_t>(d / 2 - 1)];
      std::sort(level.begin(), level.end());
      if (level.size() % 2 != 0) {
        throw GraphError("add_level_matchings: level " + std::to_string(d) + " has odd size");
      }
      std::vector<Vertex> members;
      members.reserve(level.size());
      for (auto [pos, v] : level) members.push_back(v);
      const auto pairs = cousin_pairs(members);
      if (d == 2 * k - 2) {
        if (t == 0) {
          leafPairs = pairs;
        } else if (pairs != leafPairs) {
          throw GraphError("add_level_matchings: leaf pairings of the two trees disagree");
        } else {
          continue;
        }
      }
      for (auto [u, v] : pairs) draft.edges.push_back({u, v, EdgeKind::kMatching});
    }
  }
  return draft;
}

/// The finished G_k: frozen embedded graph plus vertex taxonomy.
struct GkGraph {
  EmbeddedGraph graph;
  std::vector<VertexLabel> labels;
  std::vector<EdgeKind> edgeKinds;
  GkParams params;
  Vertex rootA = 0;
  Vertex rootB = 0;

  int k() const { return params.k; }
};

namespace detail {

struct Incidence {
  Dart dart;
  Vertex other;
  EdgeKind kind;
};

inline std::vector<Dart> canonical_rotation(const GkDraft& draft, Vertex v,
                                            const std::vector<Incidence>& around) {
  const auto& self = draft.labels[v];
  const int k = draft.k;
  const int here = self.distance_to_root(k);

  std::optional<Dart> matching;
  std::vector<Incidence> up;    // toward own root
  std::vector<Incidence> down;  // away from own root
  std::optional<Dart> parentA;
  std::optional<Dart> parentB;
  for (const auto& inc : around) {
    const auto& other = draft.labels[inc.other];
    if (inc.kind == EdgeKind::kMatching) {
      if (matching) throw GraphError("assign_rotations: two matching edges at one vertex");
      matching = inc.dart;
    } else if (self.kind == VertexKind::kLeaf) {
      (other.tree == Tree::kA ? parentA : parentB) = inc.dart;
    } else if (other.distance_to_root(k) < here && other.kind != VertexKind::kLeaf) {
      up.push_back(inc);
    } else {
      down.push_back(inc);
    }
  }
  std::sort(down.begin(), down.end(), [&](const Incidence& a, const Incidence& b) {
    return draft.labels[a.other].pos < draft.labels[b.other].pos;
  });

  auto missing = [&]() -> GraphError {
    return GraphError("assign_rotations: unexpected neighborhood at vertex " + std::to_string(v) +
                      " (" + display_name(self) + ")");
  };

  std::vector<Dart> pattern;
  const bool right = self.pos % 2 == 1;
  switch (self.kind) {
    case VertexKind::kRoot:
      if (down.size() != 3 || !up.empty() || matching) throw missing();
      pattern = {down[0].dart, down[1].dart, down[2].dart};
      break;
    case VertexKind::kInternal:
      if (down.size() != 2 || up.size() != 1 || matching) throw missing();
      pattern = {down[0].dart, down[1].dart, up[0].dart};
      break;
    case VertexKind::kSubdivision:
      if (down.size() != 1 || up.size() != 1 || !matching) throw missing();
      pattern = right ? std::vector<Dart>{down[0].dart, *matching, up[0].dart}
                      : std::vector<Dart>{down[0].dart, up[0].dart, *matching};
      break;
    case VertexKind::kLeaf:
      if (!parentA || !parentB || !matching) throw missing();
      pattern = right ? std::vector<Dart>{*parentB, *matching, *parentA}
                      : std::vector<Dart>{*parentB, *parentA, *matching};
      break;
  }
  // tree B is the mirror image of tree A
  if (self.tree == Tree::kB) std::reverse(pattern.begin(), pattern.end());
  return pattern;
}

}  // namespace detail

/**
 * Materialize the draft as an embedded graph with the canonical plane
 * rotation system. The result is frozen and its genus is checked.
 */
inline EmbeddedGraph assign_rotations(const GkDraft& draft) {
  EmbeddedGraph g(draft.vertex_count());
  std::vector<std::vector<detail::Incidence>> around(draft.vertex_count());
  for (const auto& e : draft.edges) {
    const EdgeId id = g.add_edge(e.u, e.v);
    around[e.u].push_back({2 * id, e.v, e.kind});
    around[e.v].push_back({2 * id + 1, e.u, e.kind});
  }
  for (Vertex v = 0; v < draft.vertex_count(); ++v) {
    const auto rotation = detail::canonical_rotation(draft, v, around[v]);
    g.set_rotation(v, rotation);
  }
  g.freeze();
  if (const long genus = euler_genus(g); genus != 0) {
    throw GraphError("assign_rotations: embedding has genus " + std::to_string(genus));
  }
  return g;
}

inline GkGraph build_gk(const GkParams& params) {
  params.validate();
  auto draft = add_level_matchings(subdivide_internal_edges(
      glue_trees(build_ternary_tree(params.k), build_ternary_tree(params.k))));
  GkGraph out{assign_rotations(draft), std::move(draft.labels), {}, params, draft.rootA, draft.rootB};
  out.edgeKinds.reserve(draft.edges.size());
  for (const auto& e : draft.edges) out.edgeKinds.push_back(e.kind);
  return out;
}

inline GkGraph build_gk(int k) { return build_gk(GkParams{k}); }

struct ExpectedCounts {
  std::int64_t vertices;
  std::int64_t edges;
  std::int64_t faces;
  std::int64_t leaves;
  std::vector<std::int64_t> perLevel;  // tree vertices of T_k at depth 0..k

  friend bool operator==(const ExpectedCounts&, const ExpectedCounts&) = default;
};

inline ExpectedCounts expected_counts(int k) {
  if (k < 2) throw GraphError("expected_counts: k must be at least 2");
  const std::int64_t half = std::int64_t{1} << (k - 1);
  ExpectedCounts c;
  c.vertices = 15 * half - 16;
  c.edges = 3 * c.vertices / 2;
  c.faces = c.edges - c.vertices + 2;
  c.leaves = 3 * half;
  for (int d = 0; d <= k; ++d) c.perLevel.push_back(level_size(d));
  return c;
}

/// Matching edges join two vertices at the same distance from their roots; tree edges never do.
inline std::vector<EdgeKind> infer_edge_kinds(const EmbeddedGraph& g, std::span<const VertexLabel> labels, int k) {
  std::vector<EdgeKind> kinds(g.edge_count(), EdgeKind::kTree);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    if (labels[u].distance_to_root(k) == labels[v].distance_to_root(k)) kinds[e] = EdgeKind::kMatching;
  }
  return kinds;
}

/**
 * Rebuild a GkGraph around an ingested embedded graph from its labels.
 * k is the depth recorded on the leaves.
 */
inline GkGraph gk_from_labeled(EmbeddedGraph graph, std::vector<VertexLabel> labels) {
  if (labels.size() != graph.vertex_count()) throw GraphError("label count does not match vertex count");
  GkGraph out;
  out.params.k = -1;
  std::optional<Vertex> rootA;
  std::optional<Vertex> rootB;
  for (Vertex v = 0; v < labels.size(); ++v) {
    const auto& label = labels[v];
    if (label.kind == VertexKind::kLeaf) {
      if (out.params.k >= 0 && out.params.k != label.depth) throw GraphError("leaves disagree on k");
      out.params.k = label.depth;
    }
    if (label.kind == VertexKind::kRoot) (label.tree == Tree::kA ? rootA : rootB) = v;
  }
  if (!rootA || !rootB || out.params.k < 2) throw GraphError("labels do not describe a G_k instance");
  out.params.maxK = std::max(out.params.maxK, out.params.k);
  out.rootA = *rootA;
  out.rootB = *rootB;
  out.edgeKinds = infer_edge_kinds(graph, labels, out.params.k);
  out.graph = std::move(graph);
  out.labels = std::move(labels);
  return out;
}

}  // namespace gk
