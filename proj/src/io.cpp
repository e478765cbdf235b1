#include "hyperci/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace hyperci {
namespace {

using ordered_json = nlohmann::ordered_json;

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return is_separator(c) && c != ','; });
}

double quantize(double x) { return std::stod(format_real(x)); }

const ordered_json& require(const ordered_json& j, const char* key, std::string_view where) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(fmt::format("trajectory JSON: missing required key '{}{}'", where, key));
  }
  return j.at(key);
}

template <class T>
T get(const ordered_json& j, const char* key, std::string_view where = {}) {
  const auto& v = require(j, key, where);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(fmt::format("trajectory JSON: key '{}{}' has the wrong type", where, key));
  }
}

StrategyKind parse_kind(const std::string& name) {
  for (auto k : {StrategyKind::hd, StrategyKind::hda, StrategyKind::hhd, StrategyKind::hhda,
                 StrategyKind::ci, StrategyKind::hyper_ci}) {
    if (to_string(k) == name) return k;
  }
  throw Error(fmt::format("trajectory JSON: unknown method '{}'", name));
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_real(double value) {
  auto s = fmt::format("{:.6f}", value);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

HyperedgeListDocument parse_hyperedge_list(std::string_view text, std::string source) {
  HyperedgeListDocument doc;
  doc.source = std::move(source);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (is_blank(line)) continue;

    LabeledEdge edge;
    edge.line = line_no;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_separator(line[i])) ++i;
      std::size_t j = i;
      while (j < line.size() && !is_separator(line[j])) ++j;
      if (j > i) {
        std::string label(line.substr(i, j - i));
        if (std::find(edge.labels.begin(), edge.labels.end(), label) != edge.labels.end()) {
          doc.warnings.push_back(
              {line_no, fmt::format("duplicate label '{}' collapsed", label)});
        } else {
          edge.labels.push_back(std::move(label));
        }
      }
      i = j;
    }
    if (edge.labels.empty()) {
      throw Error(fmt::format("{}line {}: hyperedge has no labels",
                              doc.source.empty() ? "" : doc.source + ":", line_no));
    }
    doc.edges.push_back(std::move(edge));
  }
  return doc;
}

HyperedgeListDocument read_hyperedge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("{}: cannot open file", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hyperedge_list(buf.str(), path);
}

std::string write_hyperedge_list(const HyperedgeListDocument& doc) {
  std::string out;
  for (const auto& e : doc.edges) {
    out += fmt::format("{}\n", fmt::join(e.labels, " "));
  }
  return out;
}

Hypergraph build(const HyperedgeListDocument& doc) { return Hypergraph::build(doc.edges); }

std::string write_trajectory_csv(const Trajectory& t) {
  std::string out(kTrajectoryCsvHeader);
  out += '\n';
  for (std::size_t i = 0; i < t.batches.size(); ++i) {
    const auto& b = t.batches[i];
    out += fmt::format("{},{},{},{},{},{}\n", i + 1, fmt::join(b.removed, ";"),
                       format_real(b.frac_removed), format_real(b.sigma_remaining),
                       format_real(b.sigma_original), format_real(b.ratio));
  }
  return out;
}

std::string write_trajectory_json(const Trajectory& t) {
  ordered_json j;
  j["format_version"] = kTrajectoryFormatVersion;
  j["tool_version"] = kToolVersion;
  j["strategy"] = {{"method", to_string(t.strategy.kind())},
                   {"radius", t.strategy.radius()},
                   {"adaptive", t.strategy.adaptive()}};
  j["batch_fraction"] = t.batch_fraction;
  j["batch_size"] = t.batch_size;
  ordered_json stop = {{"kind", "all"}};
  if (t.stop.kind == StopCondition::Kind::fraction) stop = {{"kind", "fraction"}, {"value", t.stop.value}};
  if (t.stop.kind == StopCondition::Kind::sigma_below) stop = {{"kind", "sigma_below"}, {"value", t.stop.value}};
  j["stop"] = stop;
  j["normalization"] = to_string(t.norm);
  j["gcc_rule"] = to_string(t.gcc_rule);
  j["per_node"] = t.per_node;
  j["original_node_count"] = t.original_node_count;
  j["initial_sigma"] = quantize(t.initial_sigma);
  auto batches = ordered_json::array();
  for (std::size_t i = 0; i < t.batches.size(); ++i) {
    const auto& b = t.batches[i];
    batches.push_back({{"batch", i + 1},
                       {"removed_nodes", b.removed},
                       {"removed_ids", b.removed_origin},
                       {"frac_removed", quantize(b.frac_removed)},
                       {"sigma_remaining", quantize(b.sigma_remaining)},
                       {"sigma_original", quantize(b.sigma_original)},
                       {"ratio", quantize(b.ratio)}});
  }
  j["batches"] = std::move(batches);
  j["anc"] = quantize(t.anc);
  return j.dump(2) + "\n";
}

Trajectory read_trajectory_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(fmt::format("trajectory JSON: {}", e.what()));
  }
  const int version = get<int>(j, "format_version");
  if (version != kTrajectoryFormatVersion) {
    throw Error(fmt::format("trajectory JSON: unsupported format_version {}", version));
  }
  Trajectory t;
  const auto& s = require(j, "strategy", "");
  const auto kind = parse_kind(get<std::string>(s, "method", "strategy."));
  t.strategy = Strategy::make(kind, get<int>(s, "radius", "strategy."),
                              get<bool>(s, "adaptive", "strategy."));
  t.batch_fraction = get<double>(j, "batch_fraction");
  t.batch_size = get<std::size_t>(j, "batch_size");
  const auto& stop = require(j, "stop", "");
  const auto stop_kind = get<std::string>(stop, "kind", "stop.");
  if (stop_kind == "all") t.stop = StopCondition::all();
  else if (stop_kind == "fraction") t.stop = StopCondition::fraction(get<double>(stop, "value", "stop."));
  else if (stop_kind == "sigma_below") t.stop = StopCondition::sigma_below(get<double>(stop, "value", "stop."));
  else throw Error(fmt::format("trajectory JSON: unknown stop kind '{}'", stop_kind));
  t.norm = parse_normalization(get<std::string>(j, "normalization"));
  t.gcc_rule = parse_gcc_rule(get<std::string>(j, "gcc_rule"));
  t.per_node = get<bool>(j, "per_node");
  t.original_node_count = get<std::size_t>(j, "original_node_count");
  t.initial_sigma = get<double>(j, "initial_sigma");
  const auto& batches = require(j, "batches", "");
  if (!batches.is_array()) throw Error("trajectory JSON: key 'batches' has the wrong type");
  for (std::size_t i = 0; i < batches.size(); ++i) {
    const auto where = fmt::format("batches[{}].", i);
    const auto& b = batches[i];
    Batch batch;
    batch.removed = get<std::vector<std::string>>(b, "removed_nodes", where);
    batch.removed_origin = get<std::vector<NodeId>>(b, "removed_ids", where);
    batch.frac_removed = get<double>(b, "frac_removed", where);
    batch.sigma_remaining = get<double>(b, "sigma_remaining", where);
    batch.sigma_original = get<double>(b, "sigma_original", where);
    batch.ratio = get<double>(b, "ratio", where);
    t.batches.push_back(std::move(batch));
  }
  t.anc = get<double>(j, "anc");
  return t;
}

Curve anc_curve(const Trajectory& t, std::string label) {
  Curve c{std::move(label), {{0.0, 1.0}}};
  for (const auto& b : t.batches) c.points.push_back({b.frac_removed, b.ratio});
  return c;
}

std::string render_anc_svg(const std::vector<Curve>& curves, std::string_view title) {
  if (curves.empty()) throw Error("render_anc_svg: no curves given");
  double y_max = 1.0;
  for (const auto& c : curves) {
    if (c.points.size() < 2) {
      throw Error(fmt::format("render_anc_svg: curve '{}' has fewer than 2 points", c.label));
    }
    for (const auto& p : c.points) y_max = std::max(y_max, p.y);
  }

  constexpr double width = 640, height = 420;
  constexpr double left = 60, right = 150, top = 30, bottom = 50;
  constexpr double plot_w = width - left - right, plot_h = height - top - bottom;
  const auto px = [&](double x) { return left + x * plot_w; };
  const auto py = [&](double y) { return top + plot_h - y / y_max * plot_h; };
  static constexpr const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      width, height, width, height);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    out += fmt::format("<text x=\"{}\" y=\"18\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
                       left + plot_w / 2, xml_escape(title));
  }
  out += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>\n", left, top + plot_h,
                     left + plot_w);
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n", left, top,
                     top + plot_h);
  out += "</g>\n<g class=\"ticks\" font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double f = i / 4.0;
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{:.2f}</text>\n",
                       px(f), top + plot_h + 16, f);
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{:.2f}</text>\n",
                       left - 6, py(f * y_max) + 4, f * y_max);
  }
  out += "</g>\n";
  out += fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"12\" text-anchor=\"middle\">fraction of nodes "
      "removed</text>\n",
      left + plot_w / 2, height - 12);
  out += fmt::format(
      "<text x=\"14\" y=\"{:.2f}\" font-size=\"12\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 14 {:.2f})\">normalized connectivity</text>\n",
      top + plot_h / 2, top + plot_h / 2);

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    const char* color = palette[i % std::size(palette)];
    std::string pixels, data;
    for (const auto& p : c.points) {
      if (!pixels.empty()) {
        pixels += ' ';
        data += ' ';
      }
      pixels += fmt::format("{:.2f},{:.2f}", px(p.x), py(p.y));
      data += format_real(p.x) + "," + format_real(p.y);
    }
    out += fmt::format(
        "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" data-label=\"{}\" "
        "data-points=\"{}\" points=\"{}\"/>\n",
        color, xml_escape(c.label), data, pixels);
    const double ly = top + 10 + 18.0 * static_cast<double>(i);
    out += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"{3}\" "
        "stroke-width=\"2\"/>\n",
        left + plot_w + 12, ly, left + plot_w + 32, color);
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"11\">{}</text>\n",
                       left + plot_w + 38, ly + 4, xml_escape(c.label));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hyperci
