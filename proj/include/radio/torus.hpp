#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "radio/errors.hpp"

namespace radio {

/// Order n of the cycle factor of C_n [] C_n.
///
/// n >= 1 always holds. n == 2 is representable so the metric and the exact
/// solver can study the degenerate two-vertex cycle (a single edge), but the
/// labeling constructions reject it.
class CycleOrder {
 public:
  explicit CycleOrder(int n);

  int value() const noexcept { return n_; }
  /// k = floor(n/2), the diameter of C_n.
  int half() const noexcept { return n_ / 2; }
  bool is_even() const noexcept { return n_ % 2 == 0; }

  friend auto operator<=>(const CycleOrder&, const CycleOrder&) = default;

 private:
  int n_;
};

/// Vertex (a, b) of C_n [] C_n; both coordinates are kept reduced mod n.
struct TorusVertex {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const TorusVertex&, const TorusVertex&) = default;
};

/// Residue class a - b (mod n). The n diagonals partition the vertex set
/// into n classes of n vertices each.
struct Diagonal {
  int index = 0;

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Builds the vertex with both coordinates reduced mod n; accepts any
/// integers, including negative intermediates from vertex arithmetic.
TorusVertex reduce_vertex(CycleOrder n, std::int64_t a, std::int64_t b);

/// min(|u - v|, n - |u - v|). Throws std::domain_error if u or v is outside
/// [0, n).
int cycle_distance(CycleOrder n, int u, int v);

/// Sum of the per-coordinate cycle distances. Throws std::domain_error if a
/// coordinate is outside [0, n), e.g. a vertex built for a larger order.
int torus_distance(CycleOrder n, TorusVertex u, TorusVertex v);

/// 2 * floor(n/2).
int diameter(CycleOrder n) noexcept;

/// All n^2 vertices in row-major order: (0,0), (0,1), ..., (n-1,n-1).
std::vector<TorusVertex> all_vertices(CycleOrder n);

Diagonal diagonal_of(CycleOrder n, TorusVertex v);

/// Row-major vertex id a*n + b, the index of v in all_vertices(n).
int vertex_id(CycleOrder n, TorusVertex v);
TorusVertex vertex_from_id(CycleOrder n, int id);

/// Closed-form torus metric over row-major vertex ids.
class TorusMetric {
 public:
  explicit TorusMetric(CycleOrder n) : n_(n) {}

  int vertex_count() const noexcept { return n_.value() * n_.value(); }
  int diameter() const noexcept { return radio::diameter(n_); }
  int distance(int u, int v) const;
  CycleOrder order() const noexcept { return n_; }

 private:
  CycleOrder n_;
};

}  // namespace radio
