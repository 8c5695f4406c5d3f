#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "gk/construction.hpp"
#include "gk/embedded_graph.hpp"

namespace gk {

// ---------------------------------------------------------------------------
// Face census

struct FaceCensus {
  std::map<std::size_t, std::size_t> histogram;  // length -> count, zero counts omitted

  std::size_t total() const {
    std::size_t n = 0;
    for (auto [len, count] : histogram) n += count;
    return n;
  }
  std::size_t count(std::size_t length) const {
    auto it = histogram.find(length);
    return it == histogram.end() ? 0 : it->second;
  }
  std::size_t max_length() const { return histogram.empty() ? 0 : histogram.rbegin()->first; }
  std::size_t min_length() const { return histogram.empty() ? 0 : histogram.begin()->first; }
  std::size_t weighted_sum() const {
    std::size_t n = 0;
    for (auto [len, count] : histogram) n += len * count;
    return n;
  }

  friend bool operator==(const FaceCensus&, const FaceCensus&) = default;
};

/// "4:6 5:6 6:6 7:6"
inline std::string to_string(const FaceCensus& census) {
  std::string out;
  for (auto [len, count] : census.histogram) {
    if (!out.empty()) out += ' ';
    out += std::to_string(len) + ":" + std::to_string(count);
  }
  return out;
}

inline FaceCensus face_census(const EmbeddedGraph& g,
                              FaceConvention convention = FaceConvention::kSuccessorCcw) {
  if (!g.frozen()) throw GraphError("face_census: unplaced darts (graph not frozen)");
  FaceCensus census;
  std::vector<char> seen(g.dart_count(), 0);
  for (Dart start = 0; start < g.dart_count(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Dart d = start; !seen[d]; d = face_successor(g, d, convention)) {
      seen[d] = 1;
      ++len;
    }
    ++census.histogram[len];
  }
  return census;
}

/// Closed-form face census of G_k.
inline FaceCensus expected_census(int k) {
  if (k < 2) throw GraphError("expected_census: k must be at least 2");
  const std::size_t quarter = std::size_t{1} << (k - 2);
  FaceCensus census;
  census.histogram[4] = 3 * quarter;
  census.histogram[5] = 6;
  census.histogram[6] = 6 * quarter - 6;
  census.histogram[7] = 6 * quarter - 6;
  std::erase_if(census.histogram, [](const auto& entry) { return entry.second == 0; });
  return census;
}

// ---------------------------------------------------------------------------
// Diameter

enum class DiameterMethod { kBfsAll, kIfub, kDoubleSweep };

inline std::string_view to_string(DiameterMethod method) {
  switch (method) {
    case DiameterMethod::kBfsAll: return "bfs-all";
    case DiameterMethod::kIfub: return "ifub";
    case DiameterMethod::kDoubleSweep: return "double-sweep";
  }
  return "?";
}

inline DiameterMethod parse_diameter_method(std::string_view text) {
  if (text == "bfs-all") return DiameterMethod::kBfsAll;
  if (text == "ifub") return DiameterMethod::kIfub;
  if (text == "double-sweep") return DiameterMethod::kDoubleSweep;
  throw GraphError("unknown diameter method '" + std::string(text) + "'");
}

struct DiameterResult {
  std::uint32_t value = 0;
  Vertex u = 0;  // witness pair, u <= v, distance(u, v) == value
  Vertex v = 0;
  DiameterMethod method = DiameterMethod::kBfsAll;
  bool exact = true;
  std::size_t bfsCalls = 0;
};

struct DiameterOptions {
  unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Run body(begin, end, worker) over [0, count) split into contiguous blocks.
inline void parallel_blocks(std::size_t count, unsigned threads,
                            const std::function<void(std::size_t, std::size_t, unsigned)>& body) {
  threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, threads), std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(count, t * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back(body, begin, end, t);
  }
  for (auto& th : pool) th.join();
}

/// Reusable BFS buffers; one per worker thread.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(std::size_t n) : dist_(n, kUnreached), parent_(n, kUnreached) { queue_.reserve(n); }

  template <AdjacencyGraph G>
  void run(const G& g, Vertex source, bool trackParents = false) {
    for (Vertex x : queue_) dist_[x] = kUnreached;
    queue_.clear();
    dist_[source] = 0;
    parent_[source] = source;
    queue_.push_back(source);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex x = queue_[head];
      const std::uint32_t next = dist_[x] + 1;
      for (Vertex w : std::span<const Vertex>(g.neighbors(x))) {
        if (dist_[w] == kUnreached) {
          dist_[w] = next;
          if (trackParents) parent_[w] = x;
          queue_.push_back(w);
        }
      }
    }
  }

  std::size_t reached() const { return queue_.size(); }
  std::uint32_t eccentricity() const { return dist_[queue_.back()]; }
  std::uint32_t distance(Vertex x) const { return dist_[x]; }
  Vertex parent(Vertex x) const { return parent_[x]; }
  std::span<const std::uint32_t> distances() const { return dist_; }

  /// Smallest vertex id at maximum distance.
  Vertex farthest() const {
    const std::uint32_t ecc = eccentricity();
    Vertex best = queue_.back();
    for (auto it = queue_.rbegin(); it != queue_.rend() && dist_[*it] == ecc; ++it) best = std::min(best, *it);
    return best;
  }

  /// Vertices in BFS order; distances are non-decreasing along it.
  std::span<const Vertex> order() const { return queue_; }

 private:
  std::vector<std::uint32_t> dist_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> queue_;
};

template <AdjacencyGraph G>
void require_connected(const G& g, std::string_view who) {
  if (g.vertex_count() == 0) throw GraphError(std::string(who) + ": empty graph");
  if (connected_components(g) != 1) throw GraphError(std::string(who) + ": graph is disconnected");
}

inline std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace detail

/**
 * Exact diameter from a BFS at every source. The witness is the
 * lexicographically smallest pair (u < v) at maximum distance.
 */
template <AdjacencyGraph G>
DiameterResult diameter_bfs_all(const G& g, const DiameterOptions& options = {}) {
  detail::require_connected(g, "diameter_bfs_all");
  const std::size_t n = g.vertex_count();
  const unsigned threads = detail::resolve_threads(options.threads);

  struct Best {
    std::uint32_t value = 0;
    Vertex u = 0;
    Vertex v = 0;
  };
  std::vector<Best> partial(threads);
  detail::parallel_blocks(n, threads, [&](std::size_t begin, std::size_t end, unsigned worker) {
    detail::BfsWorkspace ws(n);
    Best best;
    bool any = false;
    for (std::size_t s = begin; s < end; ++s) {
      ws.run(g, static_cast<Vertex>(s));
      // pairs (s, t) with t > s; pairs with t < s belong to source t
      const auto dist = ws.distances();
      std::uint32_t far = 0;
      Vertex at = static_cast<Vertex>(s);
      for (std::size_t t = s + 1; t < n; ++t) {
        if (dist[t] > far) {
          far = dist[t];
          at = static_cast<Vertex>(t);
        }
      }
      if (!any || far > best.value) {
        best = {far, static_cast<Vertex>(s), at};
        any = true;
      }
    }
    partial[worker] = best;
  });

  // blocks are in source order, so strict > keeps the smallest source
  Best best = partial[0];
  for (const auto& p : partial) {
    if (p.value > best.value) best = p;
  }
  if (n == 1) best = {0, 0, 0};
  return {best.value, best.u, best.v, DiameterMethod::kBfsAll, true, n};
}

/**
 * Two farthest-point BFS passes from `seed`; a lower bound on the diameter
 * that is exact on trees.
 */
template <AdjacencyGraph G>
DiameterResult double_sweep(const G& g, Vertex seed = 0) {
  detail::require_connected(g, "double_sweep");
  if (seed >= g.vertex_count()) throw GraphError("double_sweep: seed out of range");
  detail::BfsWorkspace ws(g.vertex_count());
  ws.run(g, seed);
  const Vertex a = ws.farthest();
  ws.run(g, a);
  const Vertex b = ws.farthest();
  const auto [u, v] = detail::ordered(a, b);
  return {ws.eccentricity(), u, v, DiameterMethod::kDoubleSweep, false, 2};
}


namespace detail {

/**
 * Bit-parallel BFS from up to kLanes sources at once; each vertex carries
 * one bit per source in its seen and frontier masks. Returns the
 * eccentricity of every source.
 */
class MultiSourceBfs {
 public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kLanes = 64 * kWords;

  explicit MultiSourceBfs(std::size_t n) : seen_(n), frontier_(n), next_(n) {}

  template <AdjacencyGraph G>
  std::vector<std::uint32_t> eccentricities(const G& g, std::span<const Vertex> sources) {
    if (sources.size() > kLanes) throw GraphError("MultiSourceBfs: too many sources");
    std::fill(seen_.begin(), seen_.end(), Mask{});
    active_.clear();
    for (std::size_t lane = 0; lane < sources.size(); ++lane) {
      const Vertex s = sources[lane];
      if (empty(frontier_[s])) active_.push_back(s);
      set(frontier_[s], lane);
      set(seen_[s], lane);
    }
    std::vector<std::uint32_t> ecc(sources.size(), 0);
    for (std::uint32_t level = 1; !active_.empty(); ++level) {
      upcoming_.clear();
      for (Vertex x : active_) {
        const Mask& wave = frontier_[x];
        for (Vertex w : std::span<const Vertex>(g.neighbors(x))) {
          Mask fresh;
          std::uint64_t any = 0;
          for (std::size_t j = 0; j < kWords; ++j) {
            fresh[j] = wave[j] & ~seen_[w][j];
            any |= fresh[j];
          }
          if (any == 0) continue;
          if (empty(next_[w])) upcoming_.push_back(w);
          for (std::size_t j = 0; j < kWords; ++j) next_[w][j] |= fresh[j];
        }
      }
      for (Vertex x : active_) frontier_[x] = Mask{};
      Mask reached{};
      for (Vertex w : upcoming_) {
        for (std::size_t j = 0; j < kWords; ++j) {
          seen_[w][j] |= next_[w][j];
          reached[j] |= next_[w][j];
        }
        frontier_[w] = next_[w];
        next_[w] = Mask{};
      }
      for (std::size_t j = 0; j < kWords; ++j) {
        for (std::uint64_t bits = reached[j]; bits != 0; bits &= bits - 1) {
          ecc[64 * j + static_cast<std::size_t>(std::countr_zero(bits))] = level;
        }
      }
      std::swap(active_, upcoming_);
    }
    return ecc;
  }

 private:
  using Mask = std::array<std::uint64_t, kWords>;

  static bool empty(const Mask& m) {
    std::uint64_t any = 0;
    for (auto word : m) any |= word;
    return any == 0;
  }
  static void set(Mask& m, std::size_t lane) { m[lane / 64] |= std::uint64_t{1} << (lane % 64); }

  std::vector<Mask> seen_;
  std::vector<Mask> frontier_;
  std::vector<Mask> next_;
  std::vector<Vertex> active_;
  std::vector<Vertex> upcoming_;
};

}  // namespace detail

namespace detail {

/// Vertices of a shortest path between the two double-sweep endpoints.
template <AdjacencyGraph G>
std::vector<Vertex> double_sweep_path(const G& g, Vertex seed, BfsWorkspace& ws) {
  ws.run(g, seed);
  const Vertex a = ws.farthest();
  ws.run(g, a, true);
  std::vector<Vertex> path{ws.farthest()};
  while (path.back() != a) path.push_back(ws.parent(path.back()));
  return path;
}

/**
 * Start vertex for ifub: the least eccentric vertex of the middle stretch of
 * `path`, ties going to the vertex nearest the midpoint, then the smaller id.
 */
template <AdjacencyGraph G>
Vertex least_eccentric(const G& g, std::span<const Vertex> path, MultiSourceBfs& engine) {
  const std::size_t take = std::min(path.size(), MultiSourceBfs::kLanes);
  const std::size_t first = (path.size() - take) / 2;
  const auto candidates = path.subspan(first, take);
  const auto ecc = engine.eccentricities(g, candidates);
  const double middle = static_cast<double>(path.size() - 1) / 2.0;
  std::size_t best = 0;
  auto offset = [&](std::size_t j) { return std::abs(static_cast<double>(first + j) - middle); };
  for (std::size_t j = 1; j < candidates.size(); ++j) {
    const bool better = ecc[j] < ecc[best] ||
                        (ecc[j] == ecc[best] && (offset(j) < offset(best) ||
                                                 (offset(j) == offset(best) && candidates[j] < candidates[best])));
    if (better) best = j;
  }
  return candidates[best];
}

}  // namespace detail

/**
 * Exact diameter by iterative fringe upper bounding. A BFS from a central
 * vertex gives levels; eccentricities are computed for the deepest levels
 * first until the running lower bound reaches twice the next level index.
 *
 * Fringe eccentricities are evaluated in bit-parallel batches of
 * MultiSourceBfs::kLanes sources, taken in BFS order so that the waves of
 * one batch overlap. bfsCalls counts sources, not batches.
 */
template <AdjacencyGraph G>
DiameterResult ifub(const G& g, std::optional<Vertex> startHint = std::nullopt,
                    const DiameterOptions& options = {}) {
  detail::require_connected(g, "ifub");
  const std::size_t n = g.vertex_count();
  const unsigned threads = detail::resolve_threads(options.threads);
  detail::BfsWorkspace ws(n);

  std::size_t calls = 0;
  Vertex root = 0;
  if (startHint) {
    if (*startHint >= n) throw GraphError("ifub: start hint out of range");
    root = *startHint;
  } else {
    detail::MultiSourceBfs engine(n);
    const auto path = detail::double_sweep_path(g, 0, ws);
    calls += 2 + path.size();
    root = detail::least_eccentric(g, path, engine);
  }

  ws.run(g, root);
  ++calls;
  std::uint32_t lower = ws.eccentricity();
  auto [wu, wv] = detail::ordered(root, ws.farthest());

  // fringe[i] = vertices at distance i from root, in BFS order
  std::vector<std::vector<Vertex>> fringe(lower + 1);
  for (Vertex x : ws.order()) fringe[ws.distance(x)].push_back(x);

  constexpr std::size_t lanes = detail::MultiSourceBfs::kLanes;
  std::vector<std::unique_ptr<detail::MultiSourceBfs>> engines(threads);

  for (std::uint32_t i = lower; i >= 1; --i) {
    const auto& level = fringe[i];
    std::vector<std::uint32_t> ecc(level.size());
    const std::size_t batches = (level.size() + lanes - 1) / lanes;
    detail::parallel_blocks(batches, threads, [&](std::size_t begin, std::size_t end, unsigned worker) {
      auto& engine = engines[worker];
      if (!engine) engine = std::make_unique<detail::MultiSourceBfs>(n);
      for (std::size_t b = begin; b < end; ++b) {
        const std::size_t from = b * lanes;
        const std::size_t count = std::min(lanes, level.size() - from);
        const auto values = engine->eccentricities(g, std::span<const Vertex>(level).subspan(from, count));
        std::copy(values.begin(), values.end(), ecc.begin() + static_cast<std::ptrdiff_t>(from));
      }
    });
    calls += level.size();

    // improvement: the smallest id among the largest eccentricities
    std::optional<Vertex> best;
    std::uint32_t bestEcc = lower;
    for (std::size_t j = 0; j < level.size(); ++j) {
      if (ecc[j] > bestEcc || (best && ecc[j] == bestEcc && level[j] < *best)) {
        bestEcc = ecc[j];
        best = level[j];
      }
    }
    if (best) {
      ws.run(g, *best);
      ++calls;
      lower = bestEcc;
      std::tie(wu, wv) = detail::ordered(*best, ws.farthest());
    }
    // every pair inside levels < i is within 2(i-1)
    if (lower >= 2 * (i - 1)) break;
  }
  return {lower, wu, wv, DiameterMethod::kIfub, true, calls};
}

template <AdjacencyGraph G>
DiameterResult compute_diameter(const G& g, DiameterMethod method, const DiameterOptions& options = {}) {
  switch (method) {
    case DiameterMethod::kBfsAll: return diameter_bfs_all(g, options);
    case DiameterMethod::kIfub: return ifub(g, std::nullopt, options);
    case DiameterMethod::kDoubleSweep: return double_sweep(g);
  }
  throw GraphError("unknown diameter method");
}

// ---------------------------------------------------------------------------
// Bounds

/// Lower bound on the diameter of an n-vertex fullerene graph.
inline double fullerene_lower_bound(std::int64_t n) {
  if (n < 1) throw GraphError("fullerene_lower_bound: n must be positive");
  return std::sqrt(24.0 * static_cast<double>(n) - 15.0) / 6.0 - 0.5;
}

// ---------------------------------------------------------------------------
// Vertex connectivity

inline constexpr std::size_t kConnectivityVertexLimit = 200;

namespace detail {

template <AdjacencyGraph G>
bool connected_without(const G& g, const std::vector<char>& removed) {
  const std::size_t n = g.vertex_count();
  Vertex start = 0;
  std::size_t alive = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (!removed[x]) {
      if (alive == 0) start = x;
      ++alive;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : std::span<const Vertex>(g.neighbors(x))) {
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == alive;
}

/// Internally vertex-disjoint s-t paths via unit-capacity flow on the split graph.
template <AdjacencyGraph G>
std::size_t local_connectivity(const G& g, Vertex s, Vertex t, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  // node 2x = x_in, 2x+1 = x_out
  struct Arc {
    std::uint32_t to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::uint32_t>> out(2 * n);
  auto add = [&](std::uint32_t a, std::uint32_t b, int c) {
    out[a].push_back(static_cast<std::uint32_t>(arcs.size()));
    arcs.push_back({b, c});
    out[b].push_back(static_cast<std::uint32_t>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = static_cast<int>(n) + 1;
  for (Vertex x = 0; x < n; ++x) {
    add(2 * x, 2 * x + 1, (x == s || x == t) ? big : 1);
    for (Vertex w : std::span<const Vertex>(g.neighbors(x))) {
      if (w != x) add(2 * x + 1, 2 * w, big);
    }
  }
  const std::uint32_t source = 2 * s + 1;
  const std::uint32_t sink = 2 * t;
  std::size_t flow = 0;
  std::vector<std::uint32_t> via(2 * n);
  while (flow < cap) {
    std::fill(via.begin(), via.end(), kUnreached);
    std::vector<std::uint32_t> queue{source};
    via[source] = source;
    for (std::size_t head = 0; head < queue.size() && via[sink] == kUnreached; ++head) {
      const auto x = queue[head];
      for (auto a : out[x]) {
        if (arcs[a].cap > 0 && via[arcs[a].to] == kUnreached) {
          via[arcs[a].to] = a;
          queue.push_back(arcs[a].to);
        }
      }
    }
    if (via[sink] == kUnreached) break;
    for (std::uint32_t x = sink; x != source;) {
      const auto a = via[x];
      arcs[a].cap -= 1;
      arcs[a ^ 1U].cap += 1;
      x = arcs[a ^ 1U].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

/**
 * Vertex connectivity of a small graph. Cuts of size 0..2 are found by
 * enumeration; otherwise the minimum local connectivity over non-adjacent
 * pairs is taken from a max-flow computation. Complete graphs give n - 1.
 */
template <AdjacencyGraph G>
std::size_t vertex_connectivity_small(const G& g) {
  const std::size_t n = g.vertex_count();
  if (n > kConnectivityVertexLimit) {
    throw GraphError("vertex_connectivity_small: " + std::to_string(n) + " vertices exceeds limit " +
                     std::to_string(kConnectivityVertexLimit));
  }
  if (n <= 1) return 0;
  std::vector<char> removed(n, 0);
  if (!detail::connected_without(g, removed)) return 0;
  for (Vertex a = 0; a < n && n > 2; ++a) {
    removed[a] = 1;
    if (!detail::connected_without(g, removed)) return 1;
    removed[a] = 0;
  }
  for (Vertex a = 0; a < n && n > 3; ++a) {
    removed[a] = 1;
    for (Vertex b = a + 1; b < n; ++b) {
      removed[b] = 1;
      if (!detail::connected_without(g, removed)) return 2;
      removed[b] = 0;
    }
    removed[a] = 0;
  }

  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  std::size_t minDegree = n;
  for (Vertex x = 0; x < n; ++x) {
    const auto nb = std::span<const Vertex>(g.neighbors(x));
    minDegree = std::min(minDegree, nb.size());
    for (Vertex w : nb) adjacent[x][w] = 1;
  }
  std::size_t best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (adjacent[s][t]) continue;
      best = std::min(best, detail::local_connectivity(g, s, t, std::min(best, minDegree)));
    }
  }
  return best;
}

}  // namespace gk
