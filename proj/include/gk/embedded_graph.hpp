#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gk {

using Vertex = std::uint32_t;
using Dart = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge j owns darts 2j (tail -> head) and 2j+1 (head -> tail).
constexpr Dart twin(Dart d) noexcept { return d ^ 1U; }
constexpr EdgeId edge_of(Dart d) noexcept { return d >> 1; }

/// Anything BFS can walk: a vertex count plus contiguous neighbor lists.
template <typename G>
concept AdjacencyGraph = requires(const G& g, Vertex v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.neighbors(v) } -> std::convertible_to<std::span<const Vertex>>;
};

/**
 * Undirected graph in compressed sparse row form, without an embedding.
 * Used for ingested graph6 data and randomly generated test graphs.
 */
class SimpleGraph {
 public:
  SimpleGraph() = default;

  SimpleGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
      : n_(n), edges_(edges.begin(), edges.end()) {
    offsets_.assign(n + 1, 0);
    for (auto [u, v] : edges_) {
      if (u >= n || v >= n) throw GraphError("edge endpoint out of range");
      ++offsets_[u + 1];
      ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
      adjacency_[fill[u]++] = v;
      adjacency_[fill[v]++] = u;
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const std::pair<Vertex, Vertex>> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/**
 * A graph together with a rotation system: for every vertex, the
 * counterclockwise cyclic order of the darts leaving it.
 *
 * Edges are appended with add_edge() and placed with set_rotation(); after
 * freeze() the graph is immutable and all queries are safe to share across
 * threads. Loops and parallel edges are representable.
 */
class EmbeddedGraph {
 public:
  explicit EmbeddedGraph(std::size_t vertexCount = 0)
      : n_(vertexCount), degree_(vertexCount, 0), pending_(vertexCount) {}

  EdgeId add_edge(Vertex u, Vertex v) {
    require_mutable();
    if (u >= n_ || v >= n_) {
      throw GraphError("add_edge: vertex out of range (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") with " + std::to_string(n_) + " vertices");
    }
    const auto id = static_cast<EdgeId>(origin_.size() / 2);
    origin_.push_back(u);
    origin_.push_back(v);
    ++degree_[u];
    ++degree_[v];
    return id;
  }

  /// Fix the counterclockwise order at v; darts must be exactly those leaving v.
  void set_rotation(Vertex v, std::span<const Dart> darts) {
    require_mutable();
    if (v >= n_) throw GraphError("set_rotation: vertex out of range");
    if (darts.size() != degree_[v]) {
      throw GraphError("set_rotation: vertex " + std::to_string(v) + " has degree " +
                       std::to_string(degree_[v]) + " but " + std::to_string(darts.size()) +
                       " darts were given");
    }
    std::vector<Dart> sorted(darts.begin(), darts.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const Dart d = sorted[i];
      if (d >= origin_.size() || origin_[d] != v) {
        throw GraphError("set_rotation: dart " + std::to_string(d) + " does not leave vertex " +
                         std::to_string(v));
      }
      if (i > 0 && sorted[i - 1] == d) {
        throw GraphError("set_rotation: dart " + std::to_string(d) + " repeated");
      }
    }
    pending_[v].assign(darts.begin(), darts.end());
  }

  /// Validate that every dart is placed and switch to the read-only CSR form.
  void freeze() {
    if (frozen_) return;
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      if (pending_[v].size() != degree_[v]) {
        throw GraphError("unplaced darts at vertex " + std::to_string(v));
      }
      offsets_[v + 1] = offsets_[v] + static_cast<std::uint32_t>(degree_[v]);
    }
    rotation_.resize(origin_.size());
    neighbors_.resize(origin_.size());
    position_.resize(origin_.size());
    for (std::size_t v = 0; v < n_; ++v) {
      std::uint32_t at = offsets_[v];
      for (Dart d : pending_[v]) {
        position_[d] = at;
        rotation_[at] = d;
        neighbors_[at] = origin_[twin(d)];
        ++at;
      }
    }
    pending_.clear();
    pending_.shrink_to_fit();
    frozen_ = true;
  }

  bool frozen() const noexcept { return frozen_; }
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return origin_.size() / 2; }
  std::size_t dart_count() const noexcept { return origin_.size(); }

  Vertex origin(Dart d) const { return origin_[d]; }
  Vertex target(Dart d) const { return origin_[twin(d)]; }
  std::pair<Vertex, Vertex> edge(EdgeId e) const { return {origin_[2 * e], origin_[2 * e + 1]}; }
  std::size_t degree(Vertex v) const { return degree_[v]; }

  std::span<const Dart> rotation(Vertex v) const {
    if (!frozen_) return pending_[v];
    return {rotation_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  /// Neighbors in rotation order. Requires a frozen graph.
  std::span<const Vertex> neighbors(Vertex v) const {
    require_frozen();
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  /// Next dart counterclockwise around origin(d).
  Dart next_ccw(Dart d) const {
    require_frozen();
    const Vertex v = origin_[d];
    std::uint32_t at = position_[d] + 1;
    if (at == offsets_[v + 1]) at = offsets_[v];
    return rotation_[at];
  }

  Dart prev_ccw(Dart d) const {
    require_frozen();
    const Vertex v = origin_[d];
    std::uint32_t at = position_[d];
    if (at == offsets_[v]) at = offsets_[v + 1];
    return rotation_[at - 1];
  }

 private:
  void require_mutable() const {
    if (frozen_) throw GraphError("graph is frozen");
  }
  void require_frozen() const {
    if (!frozen_) throw GraphError("graph is not frozen (unplaced darts?)");
  }

  std::size_t n_;
  bool frozen_ = false;
  std::vector<Vertex> origin_;
  std::vector<std::size_t> degree_;
  std::vector<std::vector<Dart>> pending_;
  // frozen form
  std::vector<std::uint32_t> offsets_;
  std::vector<Dart> rotation_;
  std::vector<Vertex> neighbors_;
  std::vector<std::uint32_t> position_;
};

static_assert(AdjacencyGraph<SimpleGraph>);
static_assert(AdjacencyGraph<EmbeddedGraph>);

struct FaceOrbit {
  std::vector<Dart> darts;
  std::size_t length() const noexcept { return darts.size(); }
};

/// Which way faces are traced. Both give the same multiset of face lengths.
enum class FaceConvention {
  kSuccessorCcw,  // alpha(d) = next_ccw(twin(d)); interior on the left
  kSuccessorCw,   // alpha(d) = prev_ccw(twin(d))
};

inline Dart face_successor(const EmbeddedGraph& g, Dart d,
                           FaceConvention convention = FaceConvention::kSuccessorCcw) {
  return convention == FaceConvention::kSuccessorCcw ? g.next_ccw(twin(d)) : g.prev_ccw(twin(d));
}

/// Orbits of the face permutation, the orbit of the smallest unvisited dart first.
inline std::vector<FaceOrbit> face_orbits(const EmbeddedGraph& g,
                                          FaceConvention convention = FaceConvention::kSuccessorCcw) {
  if (!g.frozen()) throw GraphError("face_orbits: unplaced darts (graph not frozen)");
  std::vector<FaceOrbit> faces;
  std::vector<char> seen(g.dart_count(), 0);
  for (Dart start = 0; start < g.dart_count(); ++start) {
    if (seen[start]) continue;
    FaceOrbit face;
    Dart d = start;
    do {
      seen[d] = 1;
      face.darts.push_back(d);
      d = face_successor(g, d, convention);
    } while (d != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

inline std::size_t face_count(const EmbeddedGraph& g) {
  if (!g.frozen()) throw GraphError("face_count: unplaced darts (graph not frozen)");
  std::vector<char> seen(g.dart_count(), 0);
  std::size_t faces = 0;
  for (Dart start = 0; start < g.dart_count(); ++start) {
    if (seen[start]) continue;
    ++faces;
    for (Dart d = start; !seen[d]; d = face_successor(g, d)) seen[d] = 1;
  }
  return faces;
}

template <AdjacencyGraph G>
std::vector<std::uint32_t> bfs(const G& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const std::uint32_t next = dist[u] + 1;
    for (Vertex w : std::span<const Vertex>(g.neighbors(u))) {
      if (dist[w] == kUnreached) {
        dist[w] = next;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

template <AdjacencyGraph G>
std::vector<std::size_t> degrees(const G& g) {
  std::vector<std::size_t> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = std::span<const Vertex>(g.neighbors(v)).size();
  return out;
}

template <AdjacencyGraph G>
bool is_regular(const G& g, std::size_t r) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (std::span<const Vertex>(g.neighbors(v)).size() != r) return false;
  }
  return true;
}

/// Component index per vertex, numbered in order of smallest member.
template <AdjacencyGraph G>
std::vector<std::uint32_t> component_labels(const G& g) {
  std::vector<std::uint32_t> comp(g.vertex_count(), kUnreached);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != kUnreached) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : std::span<const Vertex>(g.neighbors(u))) {
        if (comp[w] == kUnreached) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

template <AdjacencyGraph G>
std::size_t connected_components(const G& g) {
  const auto comp = component_labels(g);
  std::uint32_t count = 0;
  for (auto c : comp) count = std::max(count, c + 1);
  return count;
}

/// No loops and no parallel edges.
template <AdjacencyGraph G>
bool is_simple(const G& g) {
  std::vector<Vertex> seenBy(g.vertex_count(), kUnreached);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : std::span<const Vertex>(g.neighbors(v))) {
      if (w == v || seenBy[w] == v) return false;
      seenBy[w] = v;
    }
  }
  return true;
}

/// Euler genus summed over components: V - E + F = 2c - 2g.
inline long euler_genus(const EmbeddedGraph& g) {
  const long v = static_cast<long>(g.vertex_count());
  const long e = static_cast<long>(g.edge_count());
  // an isolated vertex bounds one face that no dart traces
  long f = static_cast<long>(face_count(g));
  for (Vertex x = 0; x < g.vertex_count(); ++x) f += g.degree(x) == 0 ? 1 : 0;
  const long c = static_cast<long>(connected_components(g));
  const long twice = 2 * c - v + e - f;
  if (twice < 0 || twice % 2 != 0) {
    throw GraphError("euler_genus: inconsistent Euler characteristic");
  }
  return twice / 2;
}

}  // namespace gk
