// Command-line front end. Everything goes through the C interface in ilab/ilab.h.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ilab/ilab.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFound = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct Failure {
  int code;
  std::string message;
};

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Owns a malloc'd string from the library.
struct Text {
  char* p = nullptr;
  ~Text() { ilab_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GraphHandle {
  ilab_graph* p = nullptr;
  ~GraphHandle() { ilab_graph_free(p); }
};

struct ColouringHandle {
  ilab_colouring* p = nullptr;
  ~ColouringHandle() { ilab_colouring_free(p); }
};

int exit_for(ilab_status s) {
  switch (s) {
    case ILAB_OK: return kExitFound;
    case ILAB_BUDGET: return kExitBudget;
    case ILAB_INTERNAL: return kExitInternal;
    default: return kExitUsage;
  }
}

void ok(ilab_status s, const std::string& context = "") {
  if (s == ILAB_OK) return;
  std::string msg = ilab_last_error();
  throw Failure{exit_for(s), context.empty() ? msg : context + ": " + msg};
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

class Run {
 public:
  std::uint64_t seed = 0;
  bool json_out = false;
  std::string manifest;
  std::string report_path;

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kExitUsage, "cannot open '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    inputs_.push_back({{"path", path}, {"fnv1a64", fnv1a(ss.str())}});
    return ss.str();
  }

  void write(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) throw Failure{kExitUsage, "cannot write '" + path + "'"};
    outputs_.push_back({{"path", path}, {"fnv1a64", fnv1a(content)}});
  }

  ilab_graph* graph(const std::string& path, GraphHandle& h) {
    ok(ilab_graph_parse(read(path).c_str(), &h.p), path);
    return h.p;
  }

  ilab_colouring* colouring(const std::string& path, ColouringHandle& h) {
    ok(ilab_colouring_parse(read(path).c_str(), &h.p), path);
    return h.p;
  }

  // Colourings are written as JSON when the path ends in .json, text otherwise.
  void write_colouring(const std::string& path, const json& c) {
    if (ends_with(path, ".json")) return write(path, c.dump() + "\n");
    ColouringHandle h;
    ok(ilab_colouring_parse(c.dump().c_str(), &h.p));
    Text t;
    ok(ilab_colouring_serialize(h.p, 0, &t.p));
    write(path, t.str());
  }

  void write_partition(const std::string& path, const json& p) {
    if (ends_with(path, ".json")) return write(path, p.dump() + "\n");
    std::ostringstream out;
    const auto& edges = p.at("edges");
    out << p.at("n").get<std::size_t>() << ' ' << edges.size() << ' ' << p.at("part_count").get<std::size_t>() << '\n';
    for (std::size_t i = 0; i < edges.size(); ++i) {
      out << edges[i][0].get<std::uint32_t>() << ' ' << edges[i][1].get<std::uint32_t>() << ' '
          << p.at("parts")[i].get<std::uint32_t>() << '\n';
    }
    write(path, out.str());
  }

  // Prints the verdict, stores the report, and maps the outcome to an exit code.
  int finish(const char* raw, ilab_outcome outcome) {
    auto report = json::parse(raw);
    if (!report_path.empty()) write(report_path, report.dump(2) + "\n");
    if (json_out) {
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << report.at("summary").get<std::string>() << '\n';
    }
    return static_cast<int>(outcome);
  }

  void save_manifest(const CLI::App& sub, int code, double seconds) {
    if (manifest.empty()) return;
    json config = json::object();
    for (const auto* opt : sub.get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      auto results = opt->results();
      config[opt->get_name()] = results.size() == 1 ? json(results[0]) : json(results);
    }
    json m{{"subcommand", sub.get_name()},
           {"seed", seed},
           {"config", config},
           {"inputs", inputs_},
           {"outputs", outputs_},
           {"exit_code", code},
           {"elapsed_seconds", seconds}};
    std::ofstream out(manifest);
    out << m.dump(2) << '\n';
    if (!out) std::cerr << "ilab: cannot write manifest '" << manifest << "'\n";
  }

 private:
  json inputs_ = json::array();
  json outputs_ = json::array();
};

unsigned thread_cap() {
  const char* env = std::getenv("ILAB_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) throw Failure{kExitUsage, "ILAB_THREADS must be a positive integer"};
  return static_cast<unsigned>(v);
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw Failure{kExitUsage, "--remove: '" + item + "' is not a column index"};
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval edge-colouring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Run run;
  app.add_option("--seed", run.seed, "Seed for every random choice")->capture_default_str();
  app.add_flag("--json", run.json_out, "Print the full JSON report instead of the verdict");
  app.add_option("--manifest", run.manifest, "Write a run manifest (inputs, digests, outputs) here");

  auto report_opt = [&](CLI::App* sub) { sub->add_option("--report", run.report_path, "Write the JSON report here"); };

  std::string graph_path, colouring_path, out_path, colour_out_path, partition_path;

  auto* check = app.add_subcommand("check", "Verify that a colouring is an interval colouring");
  check->add_option("graph", graph_path)->required();
  check->add_option("colouring", colouring_path)->required();
  report_opt(check);

  ilab_solve_options solve_opts{};
  std::string mode = "colourable";
  std::int64_t max_colours = 0;
  std::size_t kmax = 0;
  std::uint64_t node_limit = 0;
  double time_limit = 0;
  auto* solve = app.add_subcommand("solve", "Exact interval colouring, maximum span, or thickness");
  solve->add_option("graph", graph_path)->required();
  solve->add_option("--mode", mode)->check(CLI::IsMember({"colourable", "tmax", "theta", "peel"}))->capture_default_str();
  solve->add_option("--max-colours", max_colours, "Palette size (default 2n)")->check(CLI::PositiveNumber);
  solve->add_option("--kmax", kmax, "Largest thickness to try (theta mode)")->check(CLI::PositiveNumber);
  solve->add_option("--node-limit", node_limit)->check(CLI::PositiveNumber);
  solve->add_option("--time-limit", time_limit, "Seconds")->check(CLI::PositiveNumber);
  solve->add_option("-o,--output", out_path, "Colouring (or partition in theta mode)");
  report_opt(solve);

  double delta = 0.25;
  auto* decompose = app.add_subcommand("decompose", "Partition into interval-colourable parts");
  decompose->add_option("graph", graph_path)->required();
  decompose->add_option("--delta", delta)->capture_default_str();
  decompose->add_option("-o,--output", out_path, "Partition file");
  report_opt(decompose);

  std::size_t r = 0, n = 0, parts = 2;
  double lower_delta = 0, epsilon = 0;
  auto* gen_lower = app.add_subcommand("gen-lower", "Layered random bipartite graph");
  gen_lower->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  gen_lower->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  auto* delta_opt = gen_lower->add_option("--delta", lower_delta, "Default: preset for r");
  auto* eps_opt = gen_lower->add_option("--epsilon", epsilon, "Default: preset for r");
  delta_opt->needs(eps_opt);
  eps_opt->needs(delta_opt);
  gen_lower->add_option("-o,--output", out_path)->required();
  gen_lower->add_option("--partition", partition_path, "Also write a random edge partition here");
  gen_lower->add_option("--parts", parts, "Parts of the random partition")->capture_default_str()->check(
      CLI::PositiveNumber);

  std::size_t s = 0;
  std::string removed;
  bool odd = false;
  auto* gen_planar = app.add_subcommand("gen-planar", "Planar graph attaining 3s-2 colours");
  gen_planar->add_option("--s", s)->required()->check(CLI::PositiveNumber);
  gen_planar->add_option("--remove", removed, "Comma-separated curved edges to drop");
  gen_planar->add_flag("--odd", odd, "Add the pendant vertex");
  gen_planar->add_option("-o,--output", out_path, "Graph file")->required();
  gen_planar->add_option("-c,--colouring", colour_out_path, "Colouring file")->required();

  double budget_scale = 1.0;
  auto* probe = app.add_subcommand("probe", "Staged search for a non-interval part");
  probe->add_option("graph", graph_path, "Layered graph from gen-lower")->required();
  probe->add_option("partition", partition_path)->required();
  probe->add_option("--budget-scale", budget_scale)->capture_default_str()->check(CLI::PositiveNumber);
  report_opt(probe);

  auto* split = app.add_subcommand("split", "Split at a colour used once");
  split->add_option("graph", graph_path)->required();
  split->add_option("colouring", colouring_path)->required();
  report_opt(split);

  double k = 3;
  auto* bound = app.add_subcommand("bound", "Check t <= (k/2)n - 2 on a sparse graph");
  bound->add_option("graph", graph_path)->required();
  bound->add_option("--k", k)->capture_default_str()->check(CLI::PositiveNumber);
  bound->add_option("--node-limit", node_limit)->check(CLI::PositiveNumber);
  bound->add_option("--time-limit", time_limit, "Seconds")->check(CLI::PositiveNumber);
  report_opt(bound);

  double step = 0.01;
  auto* objective = app.add_subcommand("objective", "Grid maximum of the density-increment objective");
  objective->add_option("--delta", delta)->capture_default_str();
  objective->add_option("--step", step)->capture_default_str();
  report_opt(objective);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ilab: " << e.what() << '\n';
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  auto started = std::chrono::steady_clock::now();
  int code = kExitFound;
  try {
    ilab_outcome outcome = ILAB_FOUND;
    Text report;
    if (sub == check) {
      GraphHandle g;
      ColouringHandle c;
      run.graph(graph_path, g);
      run.colouring(colouring_path, c);
      ok(ilab_check(g.p, c.p, &outcome, &report.p));
      code = run.finish(report.p, outcome);
    } else if (sub == solve) {
      GraphHandle g;
      run.graph(graph_path, g);
      solve_opts.mode = mode.c_str();
      solve_opts.max_colours = max_colours;
      solve_opts.kmax = kmax;
      solve_opts.node_limit = node_limit;
      solve_opts.time_limit_seconds = time_limit;
      ok(ilab_solve(g.p, &solve_opts, &outcome, &report.p));
      if (!out_path.empty() && outcome == ILAB_FOUND) {
        auto j = json::parse(report.p);
        if (j.contains("colouring")) run.write_colouring(out_path, j.at("colouring"));
        if (j.contains("partition")) run.write_partition(out_path, j.at("partition"));
      }
      code = run.finish(report.p, outcome);
    } else if (sub == decompose) {
      GraphHandle g;
      run.graph(graph_path, g);
      ok(ilab_decompose(g.p, delta, run.seed, thread_cap(), &report.p));
      if (!out_path.empty()) run.write_partition(out_path, json::parse(report.p).at("partition"));
      code = run.finish(report.p, outcome);
    } else if (sub == gen_lower) {
      Text graph;
      bool preset = delta_opt->count() == 0;
      ok(ilab_gen_lower(r, n, lower_delta, epsilon, preset ? 1 : 0, run.seed, &graph.p));
      run.write(out_path, graph.str());
      std::string summary = "layered graph: " + std::to_string(json::parse(graph.p).at("edges").size()) + " edges";
      if (!partition_path.empty()) {
        // Separate stream from the graph's.
        Text p;
        ok(ilab_gen_partition(graph.p, parts, run.seed ^ 0x9e3779b97f4a7c15ull, &p.p));
        run.write(partition_path, p.str());
        summary += ", partition into " + std::to_string(parts) + " parts";
      }
      std::cout << summary << '\n';
    } else if (sub == gen_planar) {
      auto cols = parse_list(removed);
      ColouringHandle c;
      ok(ilab_gen_planar(s, cols.data(), cols.size(), odd ? 1 : 0, &c.p));
      GraphHandle g;
      ok(ilab_colouring_graph(c.p, &g.p));
      Text gt, ct;
      bool gj = ends_with(out_path, ".json"), cj = ends_with(colour_out_path, ".json");
      ok(ilab_graph_serialize(g.p, gj, &gt.p));
      ok(ilab_colouring_serialize(c.p, cj, &ct.p));
      run.write(out_path, gt.str());
      run.write(colour_out_path, ct.str());
      ok(ilab_check(g.p, c.p, &outcome, &report.p));
      code = run.finish(report.p, outcome);
    } else if (sub == probe) {
      std::string layered = run.read(graph_path);
      std::string partition = run.read(partition_path);
      ok(ilab_probe(layered.c_str(), partition.c_str(), budget_scale, &outcome, &report.p));
      code = run.finish(report.p, outcome);
    } else if (sub == split) {
      GraphHandle g;
      ColouringHandle c;
      run.graph(graph_path, g);
      run.colouring(colouring_path, c);
      Text consistency;
      ok(ilab_check(g.p, c.p, &outcome, &consistency.p));
      ok(ilab_split(c.p, &outcome, &report.p));
      code = run.finish(report.p, outcome);
    } else if (sub == bound) {
      GraphHandle g;
      run.graph(graph_path, g);
      ok(ilab_bound(g.p, k, node_limit, time_limit, &outcome, &report.p));
      code = run.finish(report.p, outcome);
    } else if (sub == objective) {
      ok(ilab_objective(delta, step, &report.p));
      code = run.finish(report.p, outcome);
    }
  } catch (const Failure& f) {
    std::cerr << "ilab: " << f.message << '\n';
    code = f.code;
  } catch (const std::exception& e) {
    std::cerr << "ilab: " << e.what() << '\n';
    code = kExitInternal;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  run.save_manifest(*sub, code, seconds);
  return code;
}
