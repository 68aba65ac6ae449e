#include "radiotorus.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "radio/construction.hpp"
#include "radio/labeling.hpp"
#include "radio/oracle.hpp"
#include "radio/torus.hpp"

struct rt_labeling {
  radio::CycleOrder n;
  radio::Labeling labels;
};

struct rt_report {
  int n;
  std::vector<radio::Violation> violations;
};

struct rt_graph {
  radio::GraphInstance instance;
};

struct rt_certificate {
  radio::RnCertificate result;
};

namespace {

thread_local std::string g_last_error;

rt_status fail(rt_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs the body and maps thrown errors onto status codes.
template <class F>
rt_status guarded(F&& body) noexcept {
  try {
    body();
    return RT_OK;
  } catch (const radio::UnsupportedOrderError& e) {
    return fail(RT_ERROR_UNSUPPORTED_ORDER, e.what());
  } catch (const radio::ParseError& e) {
    return fail(RT_ERROR_PARSE, e.what());
  } catch (const std::domain_error& e) {
    return fail(RT_ERROR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RT_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RT_ERROR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(RT_ERROR_INTERNAL, e.what());
  }
}

bool null_arg(const void* p) { return p == nullptr; }

rt_status invalid(const char* message) {
  return fail(RT_ERROR_INVALID_ARGUMENT, message);
}

}  // namespace

extern "C" {

const char* rt_status_message(rt_status status) {
  switch (status) {
    case RT_OK:
      return "ok";
    case RT_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case RT_ERROR_UNSUPPORTED_ORDER:
      return "unsupported cycle order";
    case RT_ERROR_DOMAIN:
      return "domain error";
    case RT_ERROR_PARSE:
      return "parse error";
    case RT_ERROR_NOMEM:
      return "out of memory";
    case RT_ERROR_INTERNAL:
    default:
      return "internal error";
  }
}

const char* rt_last_error(void) { return g_last_error.c_str(); }

rt_status rt_torus_diameter(int32_t n, int32_t* out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] { *out = radio::diameter(radio::CycleOrder(n)); });
}

rt_status rt_torus_distance(int32_t n, int32_t a1, int32_t b1, int32_t a2,
                            int32_t b2, int32_t* out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] {
    const radio::CycleOrder order(n);
    *out = radio::torus_distance(order, radio::TorusVertex{a1, b1},
                                 radio::TorusVertex{a2, b2});
  });
}

rt_status rt_torus_diagonal(int32_t n, int32_t a, int32_t b, int32_t* out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] {
    *out = radio::diagonal_of(radio::CycleOrder(n), radio::TorusVertex{a, b})
               .index;
  });
}

rt_status rt_radio_number(int32_t n, int64_t* out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] { *out = radio::rn_formula(radio::CycleOrder(n)); });
}

rt_status rt_lower_bound(int32_t n, int64_t* out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] { *out = radio::lower_bound(radio::CycleOrder(n)); });
}

rt_status rt_min_label_gap(int32_t n, int64_t* out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] { *out = radio::min_gap(radio::CycleOrder(n)); });
}

rt_status rt_max_triple_distance_sum(int32_t n, int32_t* out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded(
      [&] { *out = radio::max_triple_distance_sum(radio::CycleOrder(n)); });
}

rt_status rt_cycle_radio_number_reference(int32_t m, int64_t* out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] { *out = radio::rn_cycle_reference(m); });
}

rt_status rt_complete_product_radio_number_reference(int32_t m, int32_t p,
                                                     int64_t* out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] { *out = radio::rn_complete_product_reference(m, p); });
}

rt_status rt_labeling_build(int32_t n, rt_labeling** out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] {
    const radio::CycleOrder order(n);
    auto built = radio::build_labeling(order);
    *out = new rt_labeling{order, std::move(built.labeling)};
  });
}

rt_status rt_labeling_from_matrix(int32_t n, const int64_t* labels,
                                  rt_labeling** out) {
  if (null_arg(out) || null_arg(labels)) return invalid("null pointer");
  return guarded([&] {
    const radio::CycleOrder order(n);
    const std::size_t count =
        static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<int64_t> values(labels, labels + count);
    *out = new rt_labeling{order, radio::Labeling(std::move(values))};
  });
}

void rt_labeling_free(rt_labeling* labeling) { delete labeling; }

int32_t rt_labeling_n(const rt_labeling* labeling) {
  return labeling ? labeling->n.value() : 0;
}

rt_status rt_labeling_span(const rt_labeling* labeling, int64_t* out) {
  if (null_arg(labeling) || null_arg(out)) return invalid("null pointer");
  return guarded([&] { *out = labeling->labels.span(); });
}

rt_status rt_labeling_matrix(const rt_labeling* labeling, int64_t* out) {
  if (null_arg(labeling) || null_arg(out)) return invalid("null pointer");
  return guarded([&] {
    const auto& values = labeling->labels.values();
    std::memcpy(out, values.data(), values.size() * sizeof(int64_t));
  });
}

rt_status rt_labeling_verify(const rt_labeling* labeling, int32_t pruned,
                             rt_report** out) {
  if (null_arg(labeling) || null_arg(out)) return invalid("null pointer");
  return guarded([&] {
    const radio::TorusMetric metric(labeling->n);
    auto report = pruned ? radio::verify_pruned(labeling->labels, metric)
                         : radio::verify_full(labeling->labels, metric);
    *out = new rt_report{labeling->n.value(), std::move(report.violations)};
  });
}

size_t rt_report_size(const rt_report* report) {
  return report ? report->violations.size() : 0;
}

rt_status rt_report_get(const rt_report* report, size_t index,
                        rt_violation* out) {
  if (null_arg(report) || null_arg(out)) return invalid("null pointer");
  if (index >= report->violations.size()) {
    return invalid("violation index out of range");
  }
  const auto& v = report->violations[index];
  const int n = report->n;
  out->u_a = v.u / n;
  out->u_b = v.u % n;
  out->v_a = v.v / n;
  out->v_b = v.v % n;
  out->distance = v.distance;
  out->label_diff = v.label_diff;
  out->deficit = v.deficit;
  return RT_OK;
}

void rt_report_free(rt_report* report) { delete report; }

rt_status rt_graph_from_edges(int32_t vertex_count, const int32_t* edges,
                              size_t edge_count, rt_graph** out) {
  if (null_arg(out) || (edge_count > 0 && null_arg(edges))) {
    return invalid("null pointer");
  }
  return guarded([&] {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      pairs.emplace_back(edges[2 * i], edges[2 * i + 1]);
    }
    *out = new rt_graph{radio::GraphInstance::from_edges(vertex_count, pairs)};
  });
}

rt_status rt_graph_from_dimacs(const char* text, rt_graph** out) {
  if (null_arg(out) || null_arg(text)) return invalid("null pointer");
  return guarded([&] { *out = new rt_graph{radio::parse_dimacs(text)}; });
}

rt_status rt_graph_torus(int32_t n, rt_graph** out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] {
    const radio::CycleOrder order(n);
    *out = new rt_graph{radio::GraphInstance::from_edges(
        order.value() * order.value(), radio::torus_edges(order))};
  });
}

rt_status rt_graph_cycle(int32_t m, rt_graph** out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] {
    *out = new rt_graph{
        radio::GraphInstance::from_edges(m, radio::cycle_edges(m))};
  });
}

rt_status rt_graph_complete(int32_t m, rt_graph** out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] {
    *out = new rt_graph{
        radio::GraphInstance::from_edges(m, radio::complete_edges(m))};
  });
}

rt_status rt_graph_complete_product(int32_t m, int32_t p, rt_graph** out) {
  if (null_arg(out)) return invalid("null output pointer");
  return guarded([&] {
    *out = new rt_graph{radio::GraphInstance::from_edges(
        m * p, radio::complete_product_edges(m, p))};
  });
}

void rt_graph_free(rt_graph* graph) { delete graph; }

int32_t rt_graph_vertex_count(const rt_graph* graph) {
  return graph ? graph->instance.vertex_count() : 0;
}

rt_status rt_graph_diameter(const rt_graph* graph, int32_t* out) {
  if (null_arg(graph) || null_arg(out)) return invalid("null pointer");
  *out = graph->instance.diameter();
  return RT_OK;
}

rt_status rt_graph_distance(const rt_graph* graph, int32_t u, int32_t v,
                            int32_t* out) {
  if (null_arg(graph) || null_arg(out)) return invalid("null pointer");
  return guarded([&] { *out = graph->instance.distance(u, v); });
}

rt_status rt_exact_radio_number(const rt_graph* graph,
                                const rt_search_config* config,
                                rt_certificate** out) {
  if (null_arg(graph) || null_arg(out)) return invalid("null pointer");
  return guarded([&] {
    radio::SearchConfig cfg;
    if (config != nullptr) {
      cfg.node_limit = config->node_limit;
      cfg.fix_first_vertex = config->fix_first_vertex != 0;
      if (config->warm_start_labels != nullptr) {
        const auto count =
            static_cast<std::size_t>(graph->instance.vertex_count());
        cfg.warm_start = radio::Labeling(std::vector<int64_t>(
            config->warm_start_labels, config->warm_start_labels + count));
      }
    }
    *out = new rt_certificate{radio::exact_rn(graph->instance, cfg)};
  });
}

void rt_certificate_free(rt_certificate* certificate) { delete certificate; }

int64_t rt_certificate_span(const rt_certificate* certificate) {
  return certificate ? certificate->result.optimal_span : -1;
}

int32_t rt_certificate_exhausted(const rt_certificate* certificate) {
  return certificate && certificate->result.exhausted ? 1 : 0;
}

int64_t rt_certificate_nodes(const rt_certificate* certificate) {
  return certificate ? certificate->result.nodes_explored : -1;
}

rt_status rt_certificate_labels(const rt_certificate* certificate,
                                int64_t* out) {
  if (null_arg(certificate) || null_arg(out)) return invalid("null pointer");
  const auto& values = certificate->result.witness.values();
  std::memcpy(out, values.data(), values.size() * sizeof(int64_t));
  return RT_OK;
}

}  // extern "C"
