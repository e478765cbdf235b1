// hyperci: score, dismantle and compare strategies on hyperedge-list files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hyperci/hyperci.hpp"

namespace {

using namespace hyperci;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void report_error(std::string_view kind, std::string_view message) {
  const bool color = ::isatty(STDERR_FILENO) && std::getenv("NO_COLOR") == nullptr;
  if (color) {
    fmt::print(stderr, "\033[1;31m{}:\033[0m {}\n", kind, message);
  } else {
    fmt::print(stderr, "{}: {}\n", kind, message);
  }
}

template <class F>
auto validated(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("{}: cannot open for writing", path));
  out << contents;
  if (!out) throw Error(fmt::format("{}: write failed", path));
}

Hypergraph load(const std::string& path) {
  auto doc = read_hyperedge_list(path);
  for (const auto& w : doc.warnings) report_error("warning", fmt::format("{}:{}: {}", path, w.line, w.message));
  return build(doc);
}

std::string dataset_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

// Flags shared by the commands that run the dismantling loop.
struct ProtocolFlags {
  double batch = 0.01;
  std::string stop = "all";
  std::string norm = "remaining";
  std::string gcc = "nodes";
  bool per_node = false;
  bool adaptive_ci = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--batch", batch, "Fraction of the original node count removed per batch")
        ->capture_default_str();
    cmd->add_option("--stop", stop, "Stop condition: all | frac=F | sigma=T")->capture_default_str();
    cmd->add_option("--norm", norm, "Connectivity denominator: remaining | original")
        ->capture_default_str();
    cmd->add_option("--gcc", gcc,
                    "Giant component: nodes (most nodes) | hyperedges (most hyperedges)")
        ->capture_default_str();
    cmd->add_flag("--per-node", per_node,
                  "Adaptive strategies rescore after every node instead of every batch");
    cmd->add_flag("--adaptive-ci", adaptive_ci, "Run the CI baseline adaptively");
  }

  DismantleOptions options() const {
    return validated([&] {
      DismantleOptions o;
      batch_size_for(batch, 1);  // range check only
      o.batch_fraction = batch;
      o.stop = StopCondition::parse(stop);
      o.norm = parse_normalization(norm);
      o.gcc_rule = parse_gcc_rule(gcc);
      o.per_node = per_node;
      return o;
    });
  }
};

struct Config {
  std::vector<std::string> inputs;
  std::string method = "hyperci:1";
  std::string methods = "hd,hda,hhd,hhda,ci:1,hyperci:1";
  std::string ls = "1,2,3";
  std::string csv, json, svg;
  std::size_t top = 0;
  ProtocolFlags protocol;
};

int run_stats(const Config& cfg) {
  const auto h = load(cfg.inputs.front());
  const auto s = h.stats();
  fmt::print("nodes={} hyperedges={} avg_hyper_degree={:.2f} avg_hyperedge_size={:.2f}\n",
             s.node_count, s.hyperedge_count, s.avg_hyper_degree, s.avg_hyperedge_size);
  return 0;
}

std::string format_score(double v) {
  if (v == static_cast<double>(static_cast<long long>(v))) return fmt::format("{}", static_cast<long long>(v));
  return format_real(v);
}

int run_rank(const Config& cfg) {
  const auto strategy = validated([&] { return Strategy::parse(cfg.method); });
  const auto h = load(cfg.inputs.front());
  const auto scores = score(h, strategy.measure(), strategy.radius());
  const auto order = rank(scores);
  const std::size_t limit = cfg.top == 0 ? order.size() : std::min(cfg.top, order.size());
  std::string out;
  for (std::size_t i = 0; i < limit; ++i) {
    out += fmt::format("{} {}\n", h.label(order[i]), format_score(scores[order[i]]));
  }
  fmt::print("{}", out);
  return 0;
}

int run_dismantle(const Config& cfg) {
  const auto strategy = validated([&] { return Strategy::parse(cfg.method, cfg.protocol.adaptive_ci); });
  const auto options = cfg.protocol.options();
  const auto h = load(cfg.inputs.front());
  const auto t = dismantle(h, strategy, options);
  if (!cfg.csv.empty()) write_file(cfg.csv, write_trajectory_csv(t));
  if (!cfg.json.empty()) write_file(cfg.json, write_trajectory_json(t));
  if (!cfg.svg.empty()) {
    write_file(cfg.svg, render_anc_svg({anc_curve(t, strategy.name())}, dataset_name(cfg.inputs.front())));
  }
  fmt::print("ANC={}\n", format_real(t.anc));
  return 0;
}

std::vector<Strategy> parse_methods(const std::string& list, bool adaptive_ci) {
  auto tokens = split_list(list);
  if (tokens.empty()) throw UsageError("--methods needs at least one method");
  std::vector<Strategy> out;
  std::set<std::string> seen;
  for (const auto& tok : tokens) {
    auto s = validated([&] { return Strategy::parse(tok, adaptive_ci); });
    if (!seen.insert(s.name()).second) throw UsageError(fmt::format("duplicate method '{}'", s.name()));
    out.push_back(s);
  }
  return out;
}

int run_compare(const Config& cfg) {
  const auto strategies = parse_methods(cfg.methods, cfg.protocol.adaptive_ci);
  const auto options = cfg.protocol.options();
  std::string table = "dataset";
  for (const auto& s : strategies) table += "," + s.name();
  table += '\n';
  std::vector<Curve> curves;
  for (const auto& path : cfg.inputs) {
    const auto h = load(path);
    const auto rows = compare(h, strategies, options);
    table += dataset_name(path);
    for (const auto& r : rows) {
      table += "," + format_real(r.anc);
      const auto label = cfg.inputs.size() > 1 ? dataset_name(path) + "/" + r.strategy.name() : r.strategy.name();
      curves.push_back(anc_curve(r.trajectory, label));
    }
    table += '\n';
  }
  fmt::print("{}", table);
  if (!cfg.csv.empty()) write_file(cfg.csv, table);
  if (!cfg.svg.empty()) write_file(cfg.svg, render_anc_svg(curves));
  return 0;
}

int run_sweep(const Config& cfg) {
  const auto kind = validated([&] { return Strategy::parse(cfg.method).kind(); });
  if (kind != StrategyKind::ci && kind != StrategyKind::hyper_ci) {
    throw UsageError("sweep-l supports --method ci or hyperci");
  }
  std::vector<int> radii;
  for (const auto& tok : split_list(cfg.ls)) {
    radii.push_back(validated([&] { return Strategy::parse("ci:" + tok).radius(); }));
  }
  if (radii.empty()) throw UsageError("--ls needs at least one L");
  const auto options = cfg.protocol.options();

  std::string table = "dataset";
  for (int r : radii) table += fmt::format(",L={}", r);
  table += '\n';
  std::vector<Curve> curves;
  for (const auto& path : cfg.inputs) {
    const auto h = load(path);
    const auto points = l_sweep(h, kind, radii, options, cfg.protocol.adaptive_ci);
    table += dataset_name(path);
    for (const auto& p : points) {
      table += "," + format_real(p.anc);
      curves.push_back(anc_curve(p.trajectory, fmt::format("{}:{}", to_string(kind), p.radius)));
    }
    table += '\n';
  }
  fmt::print("{}", table);
  if (!cfg.csv.empty()) write_file(cfg.csv, table);
  if (!cfg.svg.empty()) write_file(cfg.svg, render_anc_svg(curves));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph dismantling with higher-order collective influence"};
  app.set_version_flag("--version", std::string(hyperci::kToolVersion));
  app.require_subcommand(1, 1);

  Config cfg;
  const auto add_input = [&](CLI::App* cmd, bool many) {
    auto* opt = cmd->add_option("--input,-i", cfg.inputs, "Hyperedge-list file (one hyperedge per line)")
                    ->required();
    if (!many) opt->expected(1);
  };

  auto* stats = app.add_subcommand("stats", "Print node/hyperedge counts and average degree/size");
  add_input(stats, false);

  auto* rank_cmd = app.add_subcommand("rank", "List nodes by descending centrality score");
  add_input(rank_cmd, false);
  rank_cmd->add_option("--method,-m", cfg.method, "hd|hda|hhd|hhda|ci[:L]|hyperci[:L] (L defaults to 1)")
      ->capture_default_str();
  rank_cmd->add_option("--top", cfg.top, "Print only the first N nodes (0 = all)")->capture_default_str();

  auto* dis = app.add_subcommand("dismantle", "Remove nodes in batches and report ANC");
  add_input(dis, false);
  dis->add_option("--method,-m", cfg.method, "hd|hda|hhd|hhda|ci[:L]|hyperci[:L] (L defaults to 1)")
      ->capture_default_str();
  cfg.protocol.attach(dis);
  dis->add_option("--csv", cfg.csv, "Write the per-batch trajectory as CSV");
  dis->add_option("--json", cfg.json, "Write the full trajectory as JSON");
  dis->add_option("--svg", cfg.svg, "Write the connectivity curve as SVG");

  auto* cmp = app.add_subcommand("compare", "ANC of several methods, one row per input file");
  add_input(cmp, true);
  cmp->add_option("--methods", cfg.methods, "Comma-separated method list")->capture_default_str();
  cfg.protocol.attach(cmp);
  cmp->add_option("--csv", cfg.csv, "Also write the table to this file");
  cmp->add_option("--svg", cfg.svg, "Write all connectivity curves as SVG");

  auto* sweep = app.add_subcommand("sweep-l", "ANC of ci or hyperci for several radii L");
  add_input(sweep, true);
  sweep->add_option("--method,-m", cfg.method, "ci or hyperci")->capture_default_str();
  sweep->add_option("--ls", cfg.ls, "Comma-separated radii")->capture_default_str();
  cfg.protocol.attach(sweep);
  sweep->add_option("--csv", cfg.csv, "Also write the table to this file");
  sweep->add_option("--svg", cfg.svg, "Write all connectivity curves as SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return kExitUsage;
  }

  try {
    if (stats->parsed()) return run_stats(cfg);
    if (rank_cmd->parsed()) return run_rank(cfg);
    if (dis->parsed()) return run_dismantle(cfg);
    if (cmp->parsed()) return run_compare(cfg);
    if (sweep->parsed()) return run_sweep(cfg);
  } catch (const UsageError& e) {
    report_error("usage", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    report_error("error", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}
