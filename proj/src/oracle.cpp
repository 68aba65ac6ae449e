#include "radio/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>

namespace radio {

namespace {

std::vector<std::vector<int>> adjacency(
    int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw std::domain_error("edge endpoint outside [0, " +
                              std::to_string(vertex_count) + ")");
    }
    if (u == v) {
      throw std::domain_error("self-loop at vertex " + std::to_string(u));
    }
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

}  // namespace

GraphInstance GraphInstance::from_edges(
    int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 1) {
    throw std::domain_error("graph needs at least one vertex");
  }
  const auto adj = adjacency(vertex_count, edges);
  std::vector<int> dist(
      static_cast<std::size_t>(vertex_count) * vertex_count, -1);
  int diam = 0;
  for (int src = 0; src < vertex_count; ++src) {
    auto* row = dist.data() + static_cast<std::size_t>(src) * vertex_count;
    std::queue<int> frontier;
    row[src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          frontier.push(v);
        }
      }
    }
    for (int v = 0; v < vertex_count; ++v) {
      if (row[v] < 0) {
        throw std::domain_error("graph is disconnected: no path from " +
                                std::to_string(src) + " to " +
                                std::to_string(v));
      }
      diam = std::max(diam, row[v]);
    }
  }
  return GraphInstance(vertex_count, std::move(dist), diam);
}

GraphInstance GraphInstance::from_distances(int vertex_count,
                                            std::vector<int> distances) {
  if (vertex_count < 1) {
    throw std::domain_error("graph needs at least one vertex");
  }
  if (distances.size() !=
      static_cast<std::size_t>(vertex_count) * vertex_count) {
    throw std::domain_error("distance matrix is not vertex_count^2 entries");
  }
  const auto at = [&](int u, int v) {
    return distances[static_cast<std::size_t>(u) * vertex_count + v];
  };
  int diam = 0;
  for (int u = 0; u < vertex_count; ++u) {
    if (at(u, u) != 0) {
      throw std::domain_error("nonzero diagonal in distance matrix");
    }
    for (int v = 0; v < vertex_count; ++v) {
      if (u != v && at(u, v) < 1) {
        throw std::domain_error("distinct vertices at distance < 1");
      }
      if (at(u, v) != at(v, u)) {
        throw std::domain_error("distance matrix is not symmetric");
      }
      diam = std::max(diam, at(u, v));
    }
  }
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = 0; v < vertex_count; ++v) {
      for (int w = 0; w < vertex_count; ++w) {
        if (at(u, w) > at(u, v) + at(v, w)) {
          throw std::domain_error("triangle inequality fails");
        }
      }
    }
  }
  return GraphInstance(vertex_count, std::move(distances), diam);
}

int GraphInstance::distance(int u, int v) const {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) {
    throw std::domain_error("vertex id outside [0, vertex_count)");
  }
  return distances_[static_cast<std::size_t>(u) * vertex_count_ + v];
}

std::vector<std::pair<int, int>> torus_edges(CycleOrder n) {
  const int m = n.value();
  std::vector<std::pair<int, int>> edges;
  const auto id = [m](int a, int b) { return a * m + b; };
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      // m == 1 has no neighbors; the check drops the self-loop.
      if ((a + 1) % m != a) {
        edges.emplace_back(id(a, b), id((a + 1) % m, b));
      }
      if ((b + 1) % m != b) {
        edges.emplace_back(id(a, b), id(a, (b + 1) % m));
      }
    }
  }
  // m == 2 produces each edge of C_2 [] C_2 (a 4-cycle) twice; dedupe.
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<std::pair<int, int>> cycle_edges(int m) {
  if (m < 3) {
    throw std::domain_error("cycle graphs need at least 3 vertices, got " +
                            std::to_string(m));
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) {
    edges.emplace_back(v, (v + 1) % m);
  }
  return edges;
}

std::vector<std::pair<int, int>> complete_edges(int m) {
  if (m < 1) {
    throw std::domain_error("complete graphs need at least 1 vertex");
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::vector<std::pair<int, int>> complete_product_edges(int m, int p) {
  if (m < 1 || p < 1) {
    throw std::domain_error("complete-product factors need >= 1 vertex each");
  }
  // Vertex (i, j) has id i*p + j; adjacency differs in exactly one factor.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) {
      const int u = i * p + j;
      for (int j2 = j + 1; j2 < p; ++j2) {
        edges.emplace_back(u, i * p + j2);
      }
      for (int i2 = i + 1; i2 < m; ++i2) {
        edges.emplace_back(u, i2 * p + j);
      }
    }
  }
  return edges;
}

GraphInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int vertex_count = -1;
  long declared_edges = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind)) continue;  // blank line
    if (kind == "c") continue;
    if (kind == "p") {
      if (vertex_count >= 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": duplicate problem line");
      }
      std::string format;
      if (!(tokens >> format >> vertex_count >> declared_edges) ||
          format != "edge" || vertex_count < 1 || declared_edges < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'p edge <vertices> <edges>'");
      }
      continue;
    }
    if (kind == "e") {
      if (vertex_count < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": edge before problem line");
      }
      int u = 0;
      int v = 0;
      if (!(tokens >> u >> v) || u < 1 || v < 1 || u > vertex_count ||
          v > vertex_count) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'e <u> <v>' with 1-indexed endpoints");
      }
      edges.emplace_back(u - 1, v - 1);
      continue;
    }
    throw ParseError("line " + std::to_string(line_no) +
                     ": unrecognized line type '" + kind + "'");
  }
  if (vertex_count < 0) {
    throw ParseError("missing 'p edge' problem line");
  }
  if (static_cast<long>(edges.size()) != declared_edges) {
    throw ParseError("header declares " + std::to_string(declared_edges) +
                     " edges, found " + std::to_string(edges.size()));
  }
  return GraphInstance::from_edges(vertex_count, edges);
}

int max_triple_distance_sum(CycleOrder n) {
  if (n.value() < 3) {
    throw std::domain_error("triple distance sums on the torus need n >= 3");
  }
  return max_triple_distance_sum_of(TorusMetric(n));
}

std::int64_t gap_span_lower_bound(const GraphInstance& g) {
  const int count = g.vertex_count();
  if (count == 1) return 1;
  if (count == 2) return 2;
  const int triple = max_triple_distance_sum_of(g);
  // Sum the three pairwise radio conditions over u, v, w and rearrange.
  const std::int64_t gap = (3 + 3LL * g.diameter() - triple + 1) / 2;
  const std::int64_t m = count;
  return (m % 2 == 1) ? 1 + (m - 1) / 2 * gap : 2 + (m - 2) / 2 * gap;
}

namespace {

struct SearchState {
  const GraphInstance& g;
  int count;
  int diam;
  std::int64_t node_limit;
  std::vector<int> order;           // placed prefix, by position
  std::vector<std::int64_t> label;  // greedy label per position
  std::vector<char> used;
  std::int64_t best_span;
  std::vector<std::int64_t> best_labels;  // by vertex id
  std::int64_t nodes = 0;
  bool truncated = false;
};

std::int64_t greedy_label_of(const SearchState& st, int v) {
  const int depth = static_cast<int>(st.order.size());
  if (depth == 0) return 1;
  std::int64_t lab = 0;
  for (int j = 0; j < depth; ++j) {
    const std::int64_t step = std::max<std::int64_t>(
        1, st.diam + 1 - st.g.distance(st.order[static_cast<std::size_t>(j)], v));
    lab = std::max(lab, st.label[static_cast<std::size_t>(j)] + step);
  }
  return lab;
}

void record_incumbent(SearchState& st) {
  st.best_span = st.label.back();
  for (int pos = 0; pos < st.count; ++pos) {
    st.best_labels[static_cast<std::size_t>(
        st.order[static_cast<std::size_t>(pos)])] =
        st.label[static_cast<std::size_t>(pos)];
  }
}

void dfs(SearchState& st) {
  if (st.truncated) return;
  const int depth = static_cast<int>(st.order.size());
  if (depth == st.count) {
    if (st.label.back() < st.best_span) record_incumbent(st);
    return;
  }

  // Cheapest extensions first so good incumbents appear early.
  std::vector<std::pair<std::int64_t, int>> candidates;
  for (int v = 0; v < st.count; ++v) {
    if (st.used[static_cast<std::size_t>(v)]) continue;
    candidates.emplace_back(greedy_label_of(st, v), v);
  }
  std::sort(candidates.begin(), candidates.end());

  for (const auto& [lab, v] : candidates) {
    if (st.truncated) return;
    if (lab >= st.best_span) break;  // sorted: later candidates only worse
    if (st.nodes >= st.node_limit) {
      st.truncated = true;
      return;
    }
    ++st.nodes;
    st.order.push_back(v);
    st.label.push_back(lab);
    st.used[static_cast<std::size_t>(v)] = 1;
    dfs(st);
    st.used[static_cast<std::size_t>(v)] = 0;
    st.label.pop_back();
    st.order.pop_back();
  }
}

}  // namespace

RnCertificate exact_rn(const GraphInstance& g, const SearchConfig& cfg) {
  if (cfg.node_limit < 1) {
    throw std::domain_error("node limit must be at least 1");
  }
  const int count = g.vertex_count();

  // Seed the incumbent with a concrete valid labeling so the certificate
  // always carries a witness: the caller's warm start, or the greedy
  // labeling of the identity ordering.
  Labeling incumbent = [&] {
    if (cfg.warm_start) {
      detail::require_total(*cfg.warm_start, count);
      if (!verify_full(*cfg.warm_start, g).valid()) {
        throw std::domain_error("warm-start labeling violates the radio "
                                "condition; refusing to prune against it");
      }
      return *cfg.warm_start;
    }
    std::vector<int> identity(static_cast<std::size_t>(count));
    std::iota(identity.begin(), identity.end(), 0);
    return greedy_span_for_ordering(identity, g).first;
  }();

  SearchState st{g,
                 count,
                 g.diameter(),
                 cfg.node_limit,
                 {},
                 {},
                 std::vector<char>(static_cast<std::size_t>(count), 0),
                 incumbent.span(),
                 incumbent.values(),
                 0,
                 false};
  st.order.reserve(static_cast<std::size_t>(count));
  st.label.reserve(static_cast<std::size_t>(count));

  if (cfg.fix_first_vertex && count > 1) {
    ++st.nodes;
    st.order.push_back(0);
    st.label.push_back(1);
    st.used[0] = 1;
    dfs(st);
  } else {
    dfs(st);
  }

  return RnCertificate{st.best_span, Labeling(std::move(st.best_labels)),
                       !st.truncated, st.nodes};
}

std::int64_t rn_cycle_reference(int m) {
  if (m < 3) {
    throw std::domain_error("cycle radio numbers are defined for m >= 3");
  }
  const std::int64_t k = m / 2;
  if (m % 2 == 0) return k * k + k + 2;
  return (k % 2 == 0) ? k * k + k + 1 : k * k + 2 * k + 1;
}

std::int64_t rn_complete_product_reference(int m, int p) {
  if (m < 1 || p < 1) {
    throw std::domain_error("complete-product factors need >= 1 vertex each");
  }
  return static_cast<std::int64_t>(m) * p;
}

}  // namespace radio
