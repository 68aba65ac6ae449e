#include "radio/torus.hpp"

#include <cstdlib>
#include <string>

namespace radio {

namespace {

void check_coordinate(CycleOrder n, int c, const char* what) {
  if (c < 0 || c >= n.value()) {
    throw std::domain_error(std::string(what) + " coordinate " +
                            std::to_string(c) + " outside [0, " +
                            std::to_string(n.value()) + ")");
  }
}

}  // namespace

CycleOrder::CycleOrder(int n) : n_(n) {
  if (n < 1) {
    throw UnsupportedOrderError("cycle order must be at least 1, got " +
                                std::to_string(n));
  }
  // Row-major vertex ids a*n + b must stay within int.
  if (n > 46340) {
    throw std::domain_error("cycle order " + std::to_string(n) +
                            " is too large; n^2 must fit an int");
  }
}

TorusVertex reduce_vertex(CycleOrder n, std::int64_t a, std::int64_t b) {
  const std::int64_t m = n.value();
  return TorusVertex{static_cast<int>(((a % m) + m) % m),
                     static_cast<int>(((b % m) + m) % m)};
}

int cycle_distance(CycleOrder n, int u, int v) {
  check_coordinate(n, u, "first");
  check_coordinate(n, v, "second");
  const int direct = std::abs(u - v);
  return std::min(direct, n.value() - direct);
}

int torus_distance(CycleOrder n, TorusVertex u, TorusVertex v) {
  return cycle_distance(n, u.a, v.a) + cycle_distance(n, u.b, v.b);
}

int diameter(CycleOrder n) noexcept { return 2 * n.half(); }

std::vector<TorusVertex> all_vertices(CycleOrder n) {
  std::vector<TorusVertex> out;
  out.reserve(static_cast<std::size_t>(n.value()) * n.value());
  for (int a = 0; a < n.value(); ++a) {
    for (int b = 0; b < n.value(); ++b) {
      out.push_back(TorusVertex{a, b});
    }
  }
  return out;
}

Diagonal diagonal_of(CycleOrder n, TorusVertex v) {
  check_coordinate(n, v.a, "first");
  check_coordinate(n, v.b, "second");
  const int m = n.value();
  return Diagonal{((v.a - v.b) % m + m) % m};
}

int vertex_id(CycleOrder n, TorusVertex v) {
  check_coordinate(n, v.a, "first");
  check_coordinate(n, v.b, "second");
  return v.a * n.value() + v.b;
}

TorusVertex vertex_from_id(CycleOrder n, int id) {
  if (id < 0 || id >= n.value() * n.value()) {
    throw std::domain_error("vertex id " + std::to_string(id) +
                            " outside [0, n^2)");
  }
  return TorusVertex{id / n.value(), id % n.value()};
}

int TorusMetric::distance(int u, int v) const {
  return torus_distance(n_, vertex_from_id(n_, u), vertex_from_id(n_, v));
}

}  // namespace radio
