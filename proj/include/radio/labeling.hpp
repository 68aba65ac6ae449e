#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "radio/errors.hpp"

namespace radio {

/// Anything that exposes a graph as vertex ids 0..count-1 with shortest-path
/// distances and a diameter. TorusMetric and GraphInstance both qualify.
template <class M>
concept DistanceMetric = requires(const M& m, int u, int v) {
  { m.vertex_count() } -> std::convertible_to<int>;
  { m.diameter() } -> std::convertible_to<int>;
  { m.distance(u, v) } -> std::convertible_to<int>;
};

/// Total assignment of positive integer labels to vertices 0..count-1.
class Labeling {
 public:
  /// Throws std::domain_error if the vector is empty or any label is < 1.
  explicit Labeling(std::vector<std::int64_t> labels);

  int vertex_count() const noexcept {
    return static_cast<int>(labels_.size());
  }
  std::int64_t at(int v) const { return labels_.at(static_cast<size_t>(v)); }
  std::int64_t span() const;
  const std::vector<std::int64_t>& values() const noexcept { return labels_; }

 private:
  std::vector<std::int64_t> labels_;
};

/// One failing vertex pair: distance + label difference fell short of
/// diameter + 1 by `deficit`.
struct Violation {
  int u = 0;  // vertex ids with u < v
  int v = 0;
  int distance = 0;
  std::int64_t label_diff = 0;
  std::int64_t deficit = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  friend bool operator==(const ViolationReport&,
                         const ViolationReport&) = default;
};

/// The radio condition for one pair of distinct vertices.
inline bool radio_ok(int distance, std::int64_t label_u, std::int64_t label_v,
                     int diam) noexcept {
  return distance + std::abs(label_u - label_v) >= diam + 1;
}

namespace detail {

inline void require_total(const Labeling& c, int vertex_count) {
  if (c.vertex_count() != vertex_count) {
    throw std::domain_error("labeling covers " +
                            std::to_string(c.vertex_count()) +
                            " vertices, graph has " +
                            std::to_string(vertex_count));
  }
}

inline void push_violation(std::vector<Violation>& out, int u, int v, int d,
                           std::int64_t diff, int diam) {
  if (u > v) std::swap(u, v);
  out.push_back(Violation{u, v, d, diff, diam + 1 - d - diff});
}

inline void sort_report(std::vector<Violation>& v) {
  std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
}

}  // namespace detail

/// Checks the radio condition over all unordered vertex pairs. The report is
/// sorted by (u, v) and empty exactly when `c` is a radio labeling.
template <DistanceMetric M>
ViolationReport verify_full(const Labeling& c, const M& m) {
  detail::require_total(c, m.vertex_count());
  const int count = m.vertex_count();
  const int diam = m.diameter();
  ViolationReport report;
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      const int d = m.distance(u, v);
      const std::int64_t diff = std::abs(c.at(u) - c.at(v));
      if (d + diff < diam + 1) {
        detail::push_violation(report.violations, u, v, d, diff, diam);
      }
    }
  }
  return report;
}

/// Same report as verify_full, but sorts vertices by label and scans, for
/// each vertex, only later vertices with label difference <= diam - 1: any
/// pair differing by at least diam passes automatically since distance >= 1.
template <DistanceMetric M>
ViolationReport verify_pruned(const Labeling& c, const M& m) {
  detail::require_total(c, m.vertex_count());
  const int count = m.vertex_count();
  const int diam = m.diameter();
  std::vector<int> by_label(static_cast<size_t>(count));
  std::iota(by_label.begin(), by_label.end(), 0);
  std::sort(by_label.begin(), by_label.end(), [&c](int a, int b) {
    return std::pair{c.at(a), a} < std::pair{c.at(b), b};
  });
  ViolationReport report;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const std::int64_t diff = c.at(by_label[j]) - c.at(by_label[i]);
      if (diff > diam - 1) break;
      const int d = m.distance(by_label[i], by_label[j]);
      if (d + diff < diam + 1) {
        detail::push_violation(report.violations, by_label[i], by_label[j], d,
                               diff, diam);
      }
    }
  }
  detail::sort_report(report.violations);
  return report;
}

/// Minimal radio labeling whose sorted-label order equals `order`:
/// c(x_0) = 1 and c(x_i) = max over j < i of
/// c(x_j) + max(1, diam + 1 - d(x_j, x_i)). Returns the labeling (keyed by
/// vertex id) and its span. Throws std::domain_error if `order` is not a
/// permutation of 0..count-1.
template <DistanceMetric M>
std::pair<Labeling, std::int64_t> greedy_span_for_ordering(
    const std::vector<int>& order, const M& m) {
  const int count = m.vertex_count();
  if (static_cast<int>(order.size()) != count) {
    throw std::domain_error("ordering has " + std::to_string(order.size()) +
                            " entries, graph has " + std::to_string(count));
  }
  std::vector<char> seen(static_cast<size_t>(count), 0);
  for (int v : order) {
    if (v < 0 || v >= count || seen[static_cast<size_t>(v)]) {
      throw std::domain_error("ordering is not a permutation of the vertices");
    }
    seen[static_cast<size_t>(v)] = 1;
  }

  const int diam = m.diameter();
  std::vector<std::int64_t> labels(static_cast<size_t>(count), 0);
  std::vector<std::int64_t> by_pos(static_cast<size_t>(count), 0);
  by_pos[0] = 1;
  labels[static_cast<size_t>(order[0])] = 1;
  for (int i = 1; i < count; ++i) {
    std::int64_t lab = 0;
    for (int j = 0; j < i; ++j) {
      const std::int64_t step =
          std::max<std::int64_t>(1, diam + 1 - m.distance(order[j], order[i]));
      lab = std::max(lab, by_pos[static_cast<size_t>(j)] + step);
    }
    by_pos[static_cast<size_t>(i)] = lab;
    labels[static_cast<size_t>(order[i])] = lab;
  }
  return {Labeling(std::move(labels)), by_pos.back()};
}

}  // namespace radio
