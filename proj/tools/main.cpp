// Command line front end: subcommands map one-to-one onto the library's
// scan, sweep, bootstrap and enumeration entry points and emit JSON with
// exact fraction strings. Exit codes: 0 verified, 1 a verified claim is
// false, 2 usage error, 3 internal error.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlmult/classify.hpp"
#include "nlmult/families.hpp"
#include "nlmult/structure.hpp"

using nlohmann::ordered_json;
using namespace nlmult;

namespace {

struct OrderRange {
  int lo = 0;
  int hi = 0;
};

// --order N or --orders A..B, guarded against the module bounds.
OrderRange resolve_orders(std::optional<int> order, const std::string& orders, int lo_min,
                          int hi_max) {
  OrderRange r;
  if (order && !orders.empty()) throw CLI::ValidationError("give --order or --orders, not both");
  if (order) {
    r.lo = r.hi = *order;
  } else if (!orders.empty()) {
    auto sep = orders.find("..");
    if (sep == std::string::npos) {
      throw CLI::ValidationError("--orders expects the form A..B");
    }
    try {
      r.lo = std::stoi(orders.substr(0, sep));
      r.hi = std::stoi(orders.substr(sep + 2));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--orders expects the form A..B");
    }
  } else {
    throw CLI::ValidationError("--order or --orders is required");
  }
  if (r.lo < lo_min || r.hi > hi_max || r.lo > r.hi) {
    std::ostringstream os;
    os << "orders must lie in " << lo_min << ".." << hi_max;
    throw CLI::ValidationError(os.str());
  }
  return r;
}

ExceptionalCatalog load_catalog(const std::string& prefix) {
  if (prefix.empty()) return ExceptionalCatalog::builtin();
  return ExceptionalCatalog::load(prefix + ".g6", prefix + ".json");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

ordered_json theta_json(const ThetaDescriptor& t) {
  ordered_json j;
  j["factor"] = t.factor.coeff_strings();
  j["mult"] = t.multiplicity;
  j["is_rho1"] = t.is_rho1;
  j["is_rho_n_minus_1"] = t.is_rho_n_minus_1;
  j["equals_one"] = t.equals_one;
  return j;
}

ordered_json scan_json(const ScanReport& report, bool with_ds, bool with_float) {
  ordered_json j;
  j["order"] = report.order;
  j["scanned"] = report.scanned;
  ordered_json spectral = ordered_json::array();
  for (const auto& row : report.spectral) {
    ordered_json r;
    r["g6"] = row.g6;
    r["theta_factor"] = row.theta_factor.coeff_strings();
    r["mult"] = row.multiplicity;
    r["is_rho1"] = row.is_rho1;
    r["is_rho_n_minus_1"] = row.is_rho_n_minus_1;
    r["equals_one"] = row.equals_one;
    r["nu"] = row.nu;
    r["diam"] = row.diam.value_or(-1);
    r["family"] = row.family;
    spectral.push_back(std::move(r));
  }
  j["spectral"] = std::move(spectral);
  j["mismatches"] = report.mismatches;
  j["problem_counterexamples"] = report.problem_counterexamples;
  if (with_ds) {
    ordered_json ds = ordered_json::array();
    for (const auto& row : report.ds) {
      ordered_json r;
      r["g6"] = row.g6;
      r["mates"] = row.mates;
      ds.push_back(std::move(r));
    }
    j["ds"] = std::move(ds);
  }
  if (with_float) j["float_checked"] = report.float_checked;
  return j;
}

// 0 when every claim checked by the scans holds, 1 otherwise.
int run_scans(const OrderRange& range, const ScanOptions& opts, const ExceptionalCatalog& catalog,
              bool ds_only, const std::string& output, bool single) {
  ordered_json reports = ordered_json::array();
  bool ok = true;
  for (int n = range.lo; n <= range.hi; ++n) {
    ScanReport report = scan_order(n, opts, catalog);
    ok = ok && report.mismatches.empty() && report.problem_counterexamples.empty();
    for (const auto& row : report.ds) ok = ok && row.mates.empty();
    ordered_json j = scan_json(report, opts.want_ds, opts.want_float);
    if (ds_only) {
      ordered_json trimmed;
      trimmed["order"] = j["order"];
      trimmed["scanned"] = j["scanned"];
      trimmed["ds"] = j["ds"];
      j = std::move(trimmed);
    }
    reports.push_back(std::move(j));
  }
  write_text(output, (single ? reports[0] : reports).dump(2) + "\n");
  return ok ? 0 : 1;
}

int run_analyze(const std::string& input, const std::string& output,
                const ExceptionalCatalog& catalog, OnError policy) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!input.empty() && input != "-") {
    file.open(input);
    if (!file) throw std::runtime_error("cannot open " + input);
    in = &file;
  }
  std::ostringstream records;
  std::string line;
  uint64_t lineno = 0;
  uint64_t warnings = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    Graph g(1);
    try {
      g = parse_graph6(line);
    } catch (const std::exception& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      if (policy == OnError::Abort) throw std::runtime_error("aborted on malformed input");
      ++warnings;
      continue;
    }
    ordered_json rec;
    rec["g6"] = write_graph6(g);
    rec["order"] = g.order();
    if (!is_connected(g)) {
      rec["skipped"] = "disconnected";
      ++warnings;
    } else if (g.order() < 5) {
      rec["skipped"] = "order below 5";
      ++warnings;
    } else {
      GraphAnalysis a = analyze_graph(g, catalog);
      rec["has_multiplicity_n_minus_3"] = !a.thetas.empty();
      ordered_json thetas = ordered_json::array();
      for (const auto& t : a.thetas) thetas.push_back(theta_json(t));
      rec["thetas"] = std::move(thetas);
      rec["rho_n_minus_1_is_one"] = a.rho_n_minus_1_one;
      rec["nu"] = a.nu;
      rec["diam"] = a.diam.value_or(-1);
      rec["cograph"] = a.cograph;
      rec["has_induced_p4"] = !a.cograph;
      rec["family"] = a.structural.label();
    }
    records << rec.dump() << "\n";
  }
  write_text(output, records.str());
  if (warnings) std::cerr << warnings << " line(s) skipped\n";
  return 0;
}

int run_lemmas(const OrderRange& range, const std::string& output) {
  LemmaReport report = lemma_sweep(range.lo, range.hi);
  ordered_json j;
  j["order_lo"] = report.order_lo;
  j["order_hi"] = report.order_hi;
  j["graphs_checked"] = report.graphs_checked;
  j["omega_graphs"] = report.omega_graphs;
  j["embeddings_checked"] = report.embeddings_checked;
  j["violations"] = report.violations;
  write_text(output, j.dump(2) + "\n");
  return report.violations.empty() ? 0 : 1;
}

int run_bootstrap(int n_max, const std::string& output) {
  ExceptionalCatalog catalog = bootstrap_exceptional_catalog(5, n_max);
  catalog.save(output + ".g6", output + ".json");
  ordered_json j = ordered_json::array();
  for (const auto& e : catalog.entries()) {
    ordered_json row;
    row["id"] = e.id;
    row["order"] = e.g.order();
    row["g6"] = write_graph6(e.g);
    row["clause"] = clause_label(e.clause);
    j.push_back(std::move(row));
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_enumerate(int n, const std::string& output) {
  std::ostringstream lines;
  ConnectedGraphStream stream(n);
  while (auto g = stream.next()) lines << write_graph6(*g) << "\n";
  write_text(output, lines.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact normalized Laplacian multiplicity engine"};
  app.require_subcommand(1);

  std::optional<int> order;
  std::string orders;
  std::string input;
  std::string output;
  std::string catalog_prefix;
  std::string on_error = "skip";
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool with_float = false;

  app.add_option("--order", order, "single order n");
  app.add_option("--orders", orders, "order range A..B");
  app.add_option("--input", input, "graph6 input path, - for stdin");
  app.add_option("--output", output, "report path (default stdout)");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--on-error", on_error, "skip|abort on malformed input lines")
      ->check(CLI::IsMember({"skip", "abort"}));
  app.add_option("--catalog", catalog_prefix,
                 "catalog fixture prefix (reads PREFIX.g6 and PREFIX.json)");
  app.add_flag("--with-float-check", with_float, "cross check against the float eigensolver");

  auto* cmd_analyze = app.add_subcommand("analyze", "per graph spectral and structural records");
  auto* cmd_verify = app.add_subcommand("verify", "exhaustive classification check per order");
  auto* cmd_ds = app.add_subcommand("ds", "cospectral mate search for theta = rho_1 graphs");
  auto* cmd_lemmas = app.add_subcommand("lemmas", "exhaustive property sweep per order");
  auto* cmd_bootstrap = app.add_subcommand("bootstrap", "rediscover the exceptional catalog");
  auto* cmd_enumerate = app.add_subcommand("enumerate", "connected graphs of one order, graph6");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ScanOptions opts;
    opts.jobs = jobs;
    opts.want_float = with_float;
    if (cmd_analyze->parsed()) {
      OnError policy = on_error == "abort" ? OnError::Abort : OnError::Skip;
      return run_analyze(input, output, load_catalog(catalog_prefix), policy);
    }
    if (cmd_verify->parsed()) {
      OrderRange r = resolve_orders(order, orders, 5, 9);
      opts.want_ds = true;
      return run_scans(r, opts, load_catalog(catalog_prefix), false, output, order.has_value());
    }
    if (cmd_ds->parsed()) {
      OrderRange r = resolve_orders(order, orders, 5, 9);
      opts.want_ds = true;
      return run_scans(r, opts, load_catalog(catalog_prefix), true, output, order.has_value());
    }
    if (cmd_lemmas->parsed()) {
      OrderRange r = resolve_orders(order, orders, 5, 8);
      return run_lemmas(r, output);
    }
    if (cmd_bootstrap->parsed()) {
      if (!order) throw CLI::ValidationError("--order N (largest order) is required");
      if (*order < 5 || *order > 10) throw CLI::ValidationError("bootstrap supports 5..10");
      if (output.empty()) throw CLI::ValidationError("--output PREFIX is required");
      return run_bootstrap(*order, output);
    }
    if (cmd_enumerate->parsed()) {
      if (!order) throw CLI::ValidationError("--order N is required");
      if (*order < 1 || *order > 10) throw CLI::ValidationError("enumeration supports 1..10");
      return run_enumerate(*order, output);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
