// Command-line front end for the radiotorus shared library. Everything below
// talks to the library through the C API in radiotorus.h; JSON/CSV document
// handling and argument parsing live here.

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "radiotorus.h"

namespace {

constexpr const char* kDocumentKind = "torus_cycle_product";

// Exit codes: 0 success/valid, 1 invalid labeling, 2 usage/parse/unsupported.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int library_error(rt_status status) {
  std::cerr << "error: " << rt_status_message(status) << ": "
            << rt_last_error() << "\n";
  return kExitUsage;
}

struct LabelingDocument {
  int n = 0;
  std::vector<int64_t> labels;  // row-major n*n
};

void write_csv(std::ostream& out, const LabelingDocument& doc) {
  for (int a = 0; a < doc.n; ++a) {
    for (int b = 0; b < doc.n; ++b) {
      if (b > 0) out << ',';
      out << doc.labels[static_cast<size_t>(a) * doc.n + b];
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const LabelingDocument& doc) {
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < doc.n; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < doc.n; ++b) {
      row.push_back(doc.labels[static_cast<size_t>(a) * doc.n + b]);
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json j{{"n", doc.n}, {"kind", kDocumentKind}, {"labels", rows}};
  out << j.dump(2) << '\n';
}

std::optional<LabelingDocument> parse_json_document(const std::string& text,
                                                    std::string& error) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    error = "not a JSON object";
    return std::nullopt;
  }
  if (!j.contains("n") || !j["n"].is_number_integer() ||
      j["n"].get<int64_t>() < 1) {
    error = "field 'n' must be a positive integer";
    return std::nullopt;
  }
  if (!j.contains("kind") || j["kind"] != kDocumentKind) {
    error = std::string("field 'kind' must be \"") + kDocumentKind + "\"";
    return std::nullopt;
  }
  LabelingDocument doc;
  doc.n = j["n"].get<int>();
  if (!j.contains("labels") || !j["labels"].is_array() ||
      j["labels"].size() != static_cast<size_t>(doc.n)) {
    error = "field 'labels' must be an array of n rows";
    return std::nullopt;
  }
  for (const auto& row : j["labels"]) {
    if (!row.is_array() || row.size() != static_cast<size_t>(doc.n)) {
      error = "each labels row must have n entries";
      return std::nullopt;
    }
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) {
        error = "labels must be integers";
        return std::nullopt;
      }
      doc.labels.push_back(cell.get<int64_t>());
    }
  }
  return doc;
}

std::optional<LabelingDocument> parse_csv_document(const std::string& text,
                                                   std::string& error) {
  std::vector<std::vector<int64_t>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<int64_t> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        size_t used = 0;
        const int64_t value = std::stoll(cell, &used);
        while (used < cell.size() && std::isspace(cell[used])) ++used;
        if (used != cell.size()) throw std::invalid_argument(cell);
        row.push_back(value);
      } catch (const std::exception&) {
        error = "cell '" + cell + "' is not an integer";
        return std::nullopt;
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    error = "empty document";
    return std::nullopt;
  }
  LabelingDocument doc;
  doc.n = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      error = "matrix is not square: " + std::to_string(rows.size()) +
              " rows but a row with " + std::to_string(row.size()) +
              " columns";
      return std::nullopt;
    }
    doc.labels.insert(doc.labels.end(), row.begin(), row.end());
  }
  return doc;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_label(int n, const std::string& format, const std::string& out_path) {
  rt_labeling* labeling = nullptr;
  if (rt_status st = rt_labeling_build(n, &labeling); st != RT_OK) {
    return library_error(st);
  }
  LabelingDocument doc;
  doc.n = n;
  doc.labels.resize(static_cast<size_t>(n) * n);
  rt_labeling_matrix(labeling, doc.labels.data());
  int64_t span = 0;
  rt_labeling_span(labeling, &span);
  rt_labeling_free(labeling);
  int64_t rn = 0;
  rt_radio_number(n, &rn);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) return usage_error("cannot open output file " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (format == "csv") {
    write_csv(out, doc);
  } else {
    write_json(out, doc);
  }
  std::cerr << "span=" << span << " rn=" << rn << "\n";
  return kExitOk;
}

int run_verify(std::optional<int> expected_n, const std::string& path) {
  const auto text = read_file(path);
  if (!text) return usage_error("cannot read " + path);

  const size_t first = text->find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return usage_error("empty labeling file");
  std::string parse_message;
  auto doc = (*text)[first] == '{'
                 ? parse_json_document(*text, parse_message)
                 : parse_csv_document(*text, parse_message);
  if (!doc) return usage_error(path + ": " + parse_message);
  if (expected_n && *expected_n != doc->n) {
    return usage_error("file describes n=" + std::to_string(doc->n) +
                       ", expected n=" + std::to_string(*expected_n));
  }

  rt_labeling* labeling = nullptr;
  if (rt_status st = rt_labeling_from_matrix(doc->n, doc->labels.data(),
                                             &labeling);
      st != RT_OK) {
    return library_error(st);
  }
  int64_t span = 0;
  rt_labeling_span(labeling, &span);

  rt_report* pruned = nullptr;
  rt_report* full = nullptr;
  const rt_status pruned_status = rt_labeling_verify(labeling, 1, &pruned);
  const rt_status full_status = rt_labeling_verify(labeling, 0, &full);
  rt_labeling_free(labeling);
  if (pruned_status != RT_OK) return library_error(pruned_status);
  if (full_status != RT_OK) return library_error(full_status);

  const size_t count = rt_report_size(pruned);
  bool paths_agree = count == rt_report_size(full);
  for (size_t i = 0; paths_agree && i < count; ++i) {
    rt_violation a;
    rt_violation b;
    rt_report_get(pruned, i, &a);
    rt_report_get(full, i, &b);
    paths_agree = a.u_a == b.u_a && a.u_b == b.u_b && a.v_a == b.v_a &&
                  a.v_b == b.v_b && a.distance == b.distance &&
                  a.label_diff == b.label_diff && a.deficit == b.deficit;
  }
  if (!paths_agree) {
    rt_report_free(pruned);
    rt_report_free(full);
    std::cerr << "error: pruned and full verification disagree\n";
    return kExitInvalid;
  }
  rt_report_free(full);

  if (count == 0) {
    rt_report_free(pruned);
    std::cout << "VALID, span=" << span << "\n";
    return kExitOk;
  }
  std::cout << "INVALID, span=" << span << ", violations=" << count << "\n";
  for (size_t i = 0; i < count; ++i) {
    rt_violation v;
    rt_report_get(pruned, i, &v);
    std::cout << "((" << v.u_a << "," << v.u_b << "),(" << v.v_a << ","
              << v.v_b << ")) distance=" << v.distance
              << " diff=" << v.label_diff << " deficit=" << v.deficit << "\n";
  }
  rt_report_free(pruned);
  return kExitInvalid;
}

int run_rn(int n) {
  int64_t rn = 0;
  if (rt_status st = rt_radio_number(n, &rn); st != RT_OK) {
    return library_error(st);
  }
  int64_t bound = 0;
  rt_lower_bound(n, &bound);
  rt_labeling* labeling = nullptr;
  if (rt_status st = rt_labeling_build(n, &labeling); st != RT_OK) {
    return library_error(st);
  }
  int64_t span = 0;
  rt_labeling_span(labeling, &span);
  rt_labeling_free(labeling);
  int64_t gap = 0;
  if (n >= 3) rt_min_label_gap(n, &gap);

  std::cout << rn << " " << bound << " " << span << ", gap " << gap << "\n";
  if (rn != bound || rn != span) {
    std::cerr << "error: closed form, lower bound, and construction span "
                 "disagree\n";
    return kExitInvalid;
  }
  return kExitOk;
}

struct OracleSource {
  std::string family;  // torus | cycle | complete | complete-product
  int n = 0;
  int m = 0;
  int p = 0;
  std::string graph_path;
};

int run_oracle(const OracleSource& source, int64_t node_limit, bool cold) {
  rt_graph* graph = nullptr;
  rt_status st = RT_OK;
  std::vector<int64_t> warm;
  bool have_reference = false;
  int64_t reference = 0;

  if (!source.graph_path.empty()) {
    const auto text = read_file(source.graph_path);
    if (!text) return usage_error("cannot read " + source.graph_path);
    st = rt_graph_from_dimacs(text->c_str(), &graph);
  } else if (source.family == "torus") {
    st = rt_graph_torus(source.n, &graph);
    if (st == RT_OK) {
      if (rt_radio_number(source.n, &reference) == RT_OK) {
        have_reference = true;
      }
      rt_labeling* labeling = nullptr;
      if (!cold && rt_labeling_build(source.n, &labeling) == RT_OK) {
        warm.resize(static_cast<size_t>(source.n) * source.n);
        rt_labeling_matrix(labeling, warm.data());
        rt_labeling_free(labeling);
      }
    }
  } else if (source.family == "cycle") {
    st = rt_graph_cycle(source.m, &graph);
    have_reference =
        rt_cycle_radio_number_reference(source.m, &reference) == RT_OK;
  } else if (source.family == "complete") {
    st = rt_graph_complete(source.m, &graph);
    reference = source.m;
    have_reference = st == RT_OK;
  } else if (source.family == "complete-product") {
    st = rt_graph_complete_product(source.m, source.p, &graph);
    have_reference = rt_complete_product_radio_number_reference(
                         source.m, source.p, &reference) == RT_OK;
  } else {
    return usage_error("unknown family '" + source.family + "'");
  }
  if (st != RT_OK) return library_error(st);

  rt_search_config config{node_limit, source.graph_path.empty() ? 1 : 0,
                          warm.empty() ? nullptr : warm.data()};
  rt_certificate* certificate = nullptr;
  st = rt_exact_radio_number(graph, &config, &certificate);
  if (st != RT_OK) {
    rt_graph_free(graph);
    return library_error(st);
  }

  const int64_t span = rt_certificate_span(certificate);
  const bool exhausted = rt_certificate_exhausted(certificate) != 0;
  std::vector<int64_t> labels(
      static_cast<size_t>(rt_graph_vertex_count(graph)));
  rt_certificate_labels(certificate, labels.data());

  std::cout << "span " << span << "\n";
  std::cout << "exhausted " << (exhausted ? "true" : "false") << "\n";
  std::cout << "nodes " << rt_certificate_nodes(certificate) << "\n";
  std::cout << "labels";
  for (int64_t label : labels) std::cout << ' ' << label;
  std::cout << "\n";
  if (have_reference) {
    std::cout << "reference " << reference << "\n";
    if (exhausted && span != reference) {
      std::cout << "DISCREPANCY exact " << span << " vs reference "
                << reference << "\n";
    }
  }
  rt_certificate_free(certificate);
  rt_graph_free(graph);
  return kExitOk;
}

int run_triples(int n) {
  int32_t sum = 0;
  if (rt_status st = rt_max_triple_distance_sum(n, &sum); st != RT_OK) {
    return library_error(st);
  }
  int32_t diam = 0;
  rt_torus_diameter(n, &diam);
  const int bound = 2 * diam + (n % 2 == 1 ? 2 : 0);
  const bool pass = sum <= bound;
  std::cout << sum << " <= " << bound << (pass ? " PASS" : " FAIL") << "\n";
  return pass ? kExitOk : kExitInvalid;
}

int run_table(int max_n) {
  std::cout << "n,k,diameter,gap,rn,verified\n";
  for (int n = 1; n <= max_n; ++n) {
    if (n == 2) continue;
    rt_labeling* labeling = nullptr;
    if (rt_labeling_build(n, &labeling) != RT_OK) continue;
    int64_t span = 0;
    rt_labeling_span(labeling, &span);
    rt_report* report = nullptr;
    rt_labeling_verify(labeling, 1, &report);
    const bool valid = rt_report_size(report) == 0;
    rt_report_free(report);
    rt_labeling_free(labeling);

    int64_t rn = 0;
    rt_radio_number(n, &rn);
    int32_t diam = 0;
    rt_torus_diameter(n, &diam);
    int64_t gap = 0;
    if (n >= 3) rt_min_label_gap(n, &gap);

    std::cout << n << ',' << n / 2 << ',' << diam << ',' << gap << ',' << rn
              << ',' << ((valid && span == rn) ? 'Y' : 'N') << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal radio labelings of the torus graphs C_n [] C_n"};
  app.require_subcommand(1);

  int label_n = 0;
  std::string label_format = "json";
  std::string label_out;
  auto* label = app.add_subcommand("label", "construct an optimal labeling");
  label->add_option("--n", label_n, "cycle order")->required();
  label->add_option("--format", label_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  label->add_option("--out", label_out, "output path (default: stdout)");

  std::optional<int> verify_n;
  std::string verify_path;
  auto* verify =
      app.add_subcommand("verify", "check a labeling document");
  verify->add_option("--n", verify_n, "expected cycle order");
  verify->add_option("--labels", verify_path, "labeling file (json or csv)")
      ->required();

  int rn_n = 0;
  auto* rn = app.add_subcommand(
      "rn", "radio number, lower bound, and construction span");
  rn->add_option("--n", rn_n, "cycle order")->required();

  OracleSource source;
  int64_t node_limit = 20'000'000;
  bool cold = false;
  auto* oracle =
      app.add_subcommand("oracle", "exact search for small instances");
  auto* family_opt =
      oracle->add_option("--family", source.family,
                         "torus, cycle, complete, or complete-product");
  auto* graph_opt =
      oracle->add_option("--graph", source.graph_path, "DIMACS-like file");
  family_opt->excludes(graph_opt);
  graph_opt->excludes(family_opt);
  oracle->add_option("--n", source.n, "torus order");
  oracle->add_option("--m", source.m, "first family parameter");
  oracle->add_option("--p", source.p, "second family parameter");
  oracle->add_option("--node-limit", node_limit, "search-tree node budget")
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--cold", cold, "skip the constructive warm start");

  int triples_n = 0;
  auto* triples = app.add_subcommand(
      "triples", "maximum triple distance sum vs the proven bound");
  triples->add_option("--n", triples_n, "cycle order")
      ->required()
      ->check(CLI::Range(3, 12));

  int max_n = 0;
  auto* table =
      app.add_subcommand("table", "per-order summary as CSV");
  table->add_option("--max-n", max_n, "largest cycle order")
      ->required()
      ->check(CLI::Range(1, 25));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (label->parsed()) return run_label(label_n, label_format, label_out);
  if (verify->parsed()) return run_verify(verify_n, verify_path);
  if (rn->parsed()) return run_rn(rn_n);
  if (oracle->parsed()) {
    if (source.family.empty() && source.graph_path.empty()) {
      return usage_error("oracle needs --family or --graph");
    }
    return run_oracle(source, node_limit, cold);
  }
  if (triples->parsed()) return run_triples(triples_n);
  if (table->parsed()) return run_table(max_n);
  return kExitUsage;
}
