#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "radio/labeling.hpp"
#include "radio/torus.hpp"

namespace radio {

/// Connected simple graph held as an all-pairs distance matrix.
class GraphInstance {
 public:
  /// BFS all-pairs distances over an undirected edge list (0-indexed).
  /// Throws std::domain_error on self-loops, out-of-range endpoints, or a
  /// disconnected graph.
  static GraphInstance from_edges(int vertex_count,
                                  const std::vector<std::pair<int, int>>& edges);

  /// Adopts a dense row-major matrix after validating the metric axioms:
  /// zero diagonal, symmetry, positive off-diagonal entries, and the
  /// triangle inequality. Throws std::domain_error otherwise.
  static GraphInstance from_distances(int vertex_count,
                                      std::vector<int> distances);

  int vertex_count() const noexcept { return vertex_count_; }
  int diameter() const noexcept { return diameter_; }
  int distance(int u, int v) const;

 private:
  GraphInstance(int vertex_count, std::vector<int> distances, int diameter)
      : vertex_count_(vertex_count),
        diameter_(diameter),
        distances_(std::move(distances)) {}

  int vertex_count_;
  int diameter_;
  std::vector<int> distances_;
};

/// Edge lists for the graph families the solver accepts by name.
std::vector<std::pair<int, int>> torus_edges(CycleOrder n);
std::vector<std::pair<int, int>> cycle_edges(int m);     // m >= 3
std::vector<std::pair<int, int>> complete_edges(int m);  // m >= 1
std::vector<std::pair<int, int>> complete_product_edges(int m, int p);

/// DIMACS-like text: comment lines `c ...`, one `p edge <V> <E>` header,
/// then E lines `e <u> <v>` with 1-indexed endpoints. Throws ParseError on
/// malformed text and std::domain_error on structural problems.
GraphInstance parse_dimacs(std::string_view text);

/// Brute-force maximum of d(u,v) + d(v,w) + d(u,w) over all vertex triples.
/// Requires at least three vertices.
template <DistanceMetric M>
int max_triple_distance_sum_of(const M& m) {
  const int count = m.vertex_count();
  if (count < 3) {
    throw std::domain_error("triple distance sums need at least 3 vertices");
  }
  int best = 0;
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      const int duv = m.distance(u, v);
      for (int w = v + 1; w < count; ++w) {
        best = std::max(best, duv + m.distance(v, w) + m.distance(u, w));
      }
    }
  }
  return best;
}

/// The torus instantiation; equals 2*diam(n) for even n and 2*diam(n) + 2
/// for odd n. Requires n >= 3.
int max_triple_distance_sum(CycleOrder n);

/// Span lower bound for any radio labeling of `g`, from the minimum gap
/// forced between every second label: gap >= ceil((3 + 3 diam - maxTriple)/2).
std::int64_t gap_span_lower_bound(const GraphInstance& g);

struct SearchConfig {
  std::int64_t node_limit = 20'000'000;  // search-tree node budget, >= 1
  bool fix_first_vertex = false;         // sound only for vertex-transitive graphs
  std::optional<Labeling> warm_start;    // known-valid labeling used as the
                                         // initial incumbent
};

struct RnCertificate {
  std::int64_t optimal_span;  // exact when exhausted, else an upper bound
  Labeling witness;           // achieves optimal_span, keyed by vertex id
  bool exhausted;             // true iff the search tree was fully explored
  std::int64_t nodes_explored;
};

/// Exact radio number by depth-first branch and bound over vertex orderings.
/// Each prefix is labeled greedily (the order-minimal labeling) and pruned
/// as soon as its last label reaches the incumbent span. Radio labels are
/// necessarily distinct, so every labeling is reachable this way.
RnCertificate exact_rn(const GraphInstance& g, const SearchConfig& cfg = {});

/// Published closed-form radio numbers of cycles, exposed for side-by-side
/// comparison only; small orders disagree with direct search, so these are
/// never asserted against exact_rn. Requires m >= 3.
std::int64_t rn_cycle_reference(int m);

/// Published value m*p for the product of complete graphs; comparison only.
std::int64_t rn_complete_product_reference(int m, int p);

}  // namespace radio
