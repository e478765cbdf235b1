#include "hyperci/dismantle.hpp"

#include <charconv>
#include <cmath>
#include <optional>

#include <fmt/format.h>

namespace hyperci {
namespace {

constexpr double kEps = 1e-12;

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(fmt::format("invalid {} '{}'", what, text));
  }
  return value;
}

double parse_real(std::string_view text, std::string_view what) {
  std::string owned(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(owned, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != owned.size() || !std::isfinite(value)) {
    throw Error(fmt::format("invalid {} '{}'", what, text));
  }
  return value;
}

struct GiantSizes {
  double remaining = 0.0;
  double original = 0.0;
};

GiantSizes measure_sigma(const Hypergraph& h, std::size_t n0, GccRule rule) {
  if (h.empty()) return {};
  const auto giant = static_cast<double>(h.gcc(rule).node_count());
  return {giant / static_cast<double>(h.node_count()), giant / static_cast<double>(n0)};
}

}  // namespace

Strategy Strategy::ci(int radius, bool adaptive) {
  if (radius < 1) throw Error(fmt::format("radius L must be >= 1, got {}", radius));
  return {StrategyKind::ci, radius, adaptive};
}

Strategy Strategy::hyper_ci(int radius) {
  if (radius < 1) throw Error(fmt::format("radius L must be >= 1, got {}", radius));
  return {StrategyKind::hyper_ci, radius, true};
}

Strategy Strategy::make(StrategyKind kind, int radius, bool adaptive_ci) {
  switch (kind) {
    case StrategyKind::hd: return hd();
    case StrategyKind::hda: return hda();
    case StrategyKind::hhd: return hhd();
    case StrategyKind::hhda: return hhda();
    case StrategyKind::ci: return ci(radius, adaptive_ci);
    case StrategyKind::hyper_ci: return hyper_ci(radius);
  }
  throw Error("unknown strategy kind");
}

Strategy Strategy::parse(std::string_view token, bool adaptive_ci) {
  const auto colon = token.find(':');
  const auto head = token.substr(0, colon);
  std::optional<int> radius;
  if (colon != std::string_view::npos) radius = parse_int(token.substr(colon + 1), "radius L");

  StrategyKind kind;
  if (head == "hd") kind = StrategyKind::hd;
  else if (head == "hda") kind = StrategyKind::hda;
  else if (head == "hhd") kind = StrategyKind::hhd;
  else if (head == "hhda") kind = StrategyKind::hhda;
  else if (head == "ci") kind = StrategyKind::ci;
  else if (head == "hyperci") kind = StrategyKind::hyper_ci;
  else throw Error(fmt::format("unknown method '{}' (expected hd|hda|hhd|hhda|ci|hyperci)", head));

  const bool takes_radius = kind == StrategyKind::ci || kind == StrategyKind::hyper_ci;
  if (radius && !takes_radius) {
    throw Error(fmt::format("method '{}' does not take a radius", head));
  }
  return make(kind, radius.value_or(1), adaptive_ci);
}

Measure Strategy::measure() const {
  switch (kind_) {
    case StrategyKind::hd:
    case StrategyKind::hda: return Measure::hd;
    case StrategyKind::hhd:
    case StrategyKind::hhda: return Measure::hhd;
    case StrategyKind::ci: return Measure::ci;
    case StrategyKind::hyper_ci: return Measure::hyper_ci;
  }
  throw Error("unknown strategy kind");
}

std::string Strategy::name() const {
  if (kind_ == StrategyKind::ci || kind_ == StrategyKind::hyper_ci) {
    return fmt::format("{}:{}", to_string(kind_), radius_);
  }
  return to_string(kind_);
}

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::hd: return "hd";
    case StrategyKind::hda: return "hda";
    case StrategyKind::hhd: return "hhd";
    case StrategyKind::hhda: return "hhda";
    case StrategyKind::ci: return "ci";
    case StrategyKind::hyper_ci: return "hyperci";
  }
  return "?";
}

StopCondition StopCondition::fraction(double f) {
  if (!(f > 0.0 && f <= 1.0)) throw Error(fmt::format("stop fraction must be in (0, 1], got {}", f));
  return {Kind::fraction, f};
}

StopCondition StopCondition::sigma_below(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(fmt::format("stop sigma must be in [0, 1], got {}", t));
  return {Kind::sigma_below, t};
}

StopCondition StopCondition::parse(std::string_view text) {
  if (text == "all") return all();
  if (text.starts_with("frac=")) return fraction(parse_real(text.substr(5), "stop fraction"));
  if (text.starts_with("sigma=")) return sigma_below(parse_real(text.substr(6), "stop sigma"));
  throw Error(fmt::format("invalid stop condition '{}' (expected all|frac=F|sigma=T)", text));
}

std::string StopCondition::to_string() const {
  switch (kind) {
    case Kind::all: return "all";
    case Kind::fraction: return fmt::format("frac={}", value);
    case Kind::sigma_below: return fmt::format("sigma={}", value);
  }
  return "?";
}

std::size_t Trajectory::removed_count() const {
  std::size_t k = 0;
  for (const auto& b : batches) k += b.removed.size();
  return k;
}

std::size_t batch_size_for(double batch_fraction, std::size_t original_node_count) {
  if (!(batch_fraction > 0.0 && batch_fraction <= 1.0)) {
    throw Error(fmt::format("batch fraction must be in (0, 1], got {}", batch_fraction));
  }
  const auto raw = std::floor(batch_fraction * static_cast<double>(original_node_count) + 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(raw));
}

Trajectory dismantle(const Hypergraph& h, const Strategy& strategy,
                     const DismantleOptions& options) {
  if (h.empty()) throw Error("cannot dismantle an empty hypergraph");
  const std::size_t n0 = h.node_count();

  Trajectory t;
  t.strategy = strategy;
  t.batch_fraction = options.batch_fraction;
  t.batch_size = batch_size_for(options.batch_fraction, n0);
  t.stop = options.stop;
  t.norm = options.norm;
  t.gcc_rule = options.gcc_rule;
  t.per_node = options.per_node;
  t.original_node_count = n0;

  const auto initial = measure_sigma(h, n0, options.gcc_rule);
  t.initial_sigma = options.norm == Normalization::remaining ? initial.remaining : initial.original;

  std::vector<NodeId> static_order;
  if (!strategy.adaptive()) static_order = rank(score(h, strategy.measure(), strategy.radius()));
  std::size_t static_cursor = 0;

  // start_id[v]: id in h of the node that currently has id v
  std::vector<NodeId> start_id(n0);
  for (NodeId v = 0; v < n0; ++v) start_id[v] = v;
  // current_id[s]: id in `current` of start node s, valid while it is alive
  std::vector<NodeId> current_id = start_id;

  Hypergraph current = h;
  std::size_t removed_total = 0;

  auto remove_batch = [&](const std::vector<NodeId>& victims, Batch& batch) {
    for (NodeId v : victims) {
      batch.removed.push_back(h.label(start_id[v]));
      batch.removed_origin.push_back(start_id[v]);
    }
    current = current.remove_nodes(victims);
    std::vector<bool> doomed(start_id.size(), false);
    for (NodeId v : victims) doomed[v] = true;
    std::vector<NodeId> survivors;
    survivors.reserve(start_id.size() - victims.size());
    for (NodeId v = 0; v < start_id.size(); ++v) {
      if (!doomed[v]) survivors.push_back(start_id[v]);
    }
    start_id = std::move(survivors);
    for (NodeId v = 0; v < start_id.size(); ++v) current_id[start_id[v]] = v;
    removed_total += victims.size();
  };

  while (!current.empty()) {
    const std::size_t take = std::min(t.batch_size, current.node_count());
    Batch batch;
    if (!strategy.adaptive()) {
      std::vector<NodeId> victims;
      for (std::size_t i = 0; i < take; ++i) victims.push_back(current_id[static_order[static_cursor++]]);
      remove_batch(victims, batch);
    } else if (options.per_node) {
      for (std::size_t i = 0; i < take; ++i) {
        auto order = rank(score(current, strategy.measure(), strategy.radius()));
        remove_batch({order.front()}, batch);
      }
    } else {
      auto order = rank(score(current, strategy.measure(), strategy.radius()));
      order.resize(take);
      remove_batch(order, batch);
    }

    const auto sigma = measure_sigma(current, n0, options.gcc_rule);
    batch.frac_removed = static_cast<double>(removed_total) / static_cast<double>(n0);
    batch.sigma_remaining = sigma.remaining;
    batch.sigma_original = sigma.original;
    const double selected =
        options.norm == Normalization::remaining ? sigma.remaining : sigma.original;
    batch.ratio = selected / t.initial_sigma;
    t.batches.push_back(std::move(batch));

    const auto& stop = options.stop;
    if (stop.kind == StopCondition::Kind::fraction &&
        static_cast<double>(removed_total) + kEps >= stop.value * static_cast<double>(n0)) {
      break;
    }
    if (stop.kind == StopCondition::Kind::sigma_below && selected < stop.value) break;
  }

  t.anc = anc(t);
  return t;
}

double anc(const Trajectory& t) {
  if (!(t.initial_sigma > 0.0)) throw Error("initial connectivity is zero; ANC undefined");
  double sum = 0.0;
  std::size_t k = 0;
  for (const auto& b : t.batches) {
    sum += static_cast<double>(b.removed.size()) * b.ratio;
    k += b.removed.size();
  }
  if (k == 0) throw Error("ANC of an empty removal sequence is undefined");
  return sum / static_cast<double>(k);
}

std::vector<ComparisonRow> compare(const Hypergraph& h, const std::vector<Strategy>& strategies,
                                   const DismantleOptions& options) {
  if (strategies.empty()) throw Error("compare needs at least one strategy");
  std::vector<ComparisonRow> rows;
  rows.reserve(strategies.size());
  for (const auto& s : strategies) {
    auto traj = dismantle(h, s, options);
    rows.push_back({s, traj.anc, std::move(traj)});
  }
  return rows;
}

std::vector<SweepPoint> l_sweep(const Hypergraph& h, StrategyKind kind,
                                const std::vector<int>& radii, const DismantleOptions& options,
                                bool adaptive_ci) {
  if (kind != StrategyKind::ci && kind != StrategyKind::hyper_ci) {
    throw Error("radius sweeps apply to ci and hyperci only");
  }
  if (radii.empty()) throw Error("radius sweep needs at least one L");
  std::vector<SweepPoint> out;
  out.reserve(radii.size());
  for (int r : radii) {
    auto traj = dismantle(h, Strategy::make(kind, r, adaptive_ci), options);
    out.push_back({r, traj.anc, std::move(traj)});
  }
  return out;
}

}  // namespace hyperci
