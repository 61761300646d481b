// SPDX-License-Identifier: Apache-2.0

#include "spinnet/serialize.hpp"

#include "spinnet/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace spinnet {

std::string fmt_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

using nlohmann::json;

const char* class_name(EdgeClass cls) {
  return cls == EdgeClass::Internal ? "internal" : "external";
}

}  // namespace

std::string network_to_json(const Network& net, const HamiltonianMatrix* ham) {
  json doc;
  doc["name"] = net.name;
  doc["nodes"] = net.nodes;
  json edges = json::array();
  for (const auto& e : net.edges) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"length", e.length}, {"class", class_name(e.cls)}});
  }
  doc["edges"] = std::move(edges);
  if (!net.labels.empty()) {
    json labels = json::object();
    for (const auto& [canonical, label] : net.labels) {
      labels[std::to_string(canonical)] = label;
    }
    doc["labels"] = std::move(labels);
  }
  if (!net.coords.empty()) {
    json coords = json::object();
    for (const auto& [id, xy] : net.coords) {
      coords[std::to_string(id)] = {xy[0], xy[1]};
    }
    doc["coords"] = std::move(coords);
  }
  if (net.default_injection) doc["default_injection"] = *net.default_injection;
  if (ham) {
    doc["hamiltonian"] = {{"n", ham->n},
                          {"entries", ham->entries},
                          {"index_to_native", ham->indexmap.backward}};
  }
  return doc.dump(2) + "\n";
}

Network network_from_json_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw LoadError(origin + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges")) {
    throw LoadError(origin + ": expected an object with 'nodes' and 'edges'");
  }
  Network net;
  net.name = doc.value("name", std::string("custom"));
  bool lengths_given = true;
  try {
    net.nodes = doc.at("nodes").get<std::vector<int>>();

    if (doc.contains("coords")) {
      for (const auto& [key, xy] : doc.at("coords").items()) {
        if (!xy.is_array() || xy.size() != 2) {
          throw LoadError(origin + ": coords entry '" + key + "' must be [x, y]");
        }
        net.coords[std::stoi(key)] = {xy[0].get<double>(), xy[1].get<double>()};
      }
    }

    int index = 0;
    for (const auto& item : doc.at("edges")) {
      const std::string where = origin + ": edge " + std::to_string(index++);
      if (!item.is_object() || !item.contains("a") || !item.contains("b")) {
        throw LoadError(where + ": expected an object with 'a' and 'b'");
      }
      Edge e;
      e.a = item.at("a").get<int>();
      e.b = item.at("b").get<int>();
      if (item.contains("length")) {
        e.length = item.at("length").get<double>();
        if (!(e.length > 0.0)) throw LoadError(where + ": length must be positive");
      } else {
        lengths_given = false;
      }
      if (item.contains("class")) {
        const std::string cls = item.at("class").get<std::string>();
        if (cls == "internal") {
          e.cls = EdgeClass::Internal;
        } else if (cls == "external") {
          e.cls = EdgeClass::External;
        } else {
          throw LoadError(where + ": class must be 'internal' or 'external'");
        }
      } else {
        e.cls = cell_of(e.a) == cell_of(e.b) ? EdgeClass::Internal : EdgeClass::External;
      }
      net.edges.push_back(e);
    }

    if (doc.contains("labels")) {
      for (const auto& [key, label] : doc.at("labels").items()) {
        net.labels[std::stoi(key)] = label.get<int>();
      }
    }
    if (doc.contains("default_injection")) {
      net.default_injection = doc.at("default_injection").get<int>();
    }
  } catch (const json::exception& e) {
    throw LoadError(origin + ": " + e.what());
  } catch (const std::invalid_argument&) {
    throw LoadError(origin + ": object keys must be integers");
  }

  net.stored_lengths = lengths_given && !net.edges.empty();
  if (!net.edges.empty()) {
    // Normalise so the shortest edge has length 1 regardless of the file's
    // own scale; weights depend only on ratios.
    refresh_lengths(net);
  }
  validate(net);
  return net;
}

Network load_network_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw LoadError(path + ": cannot open file");
  std::ostringstream ss;
  ss << is.rdbuf();
  return network_from_json_text(ss.str(), path);
}

void trace_to_csv(std::ostream& os, const FidelityTrace& trace, const Network& net) {
  os << "time";
  for (int i = 0; i < trace.n; ++i) os << ",f_" << net.display_label(i);
  os << "\n";
  for (int k = 0; k < trace.samples(); ++k) {
    os << fmt_g12(trace.times[static_cast<size_t>(k)]);
    for (int i = 0; i < trace.n; ++i) os << ',' << fmt_g12(trace.f(k, i));
    os << "\n";
  }
}

std::string trace_to_json(const FidelityTrace& trace, const Network& net, const RunMeta& meta) {
  json doc;
  doc["metadata"] = {{"network", meta.network}, {"coupling", meta.coupling},
                     {"initial", meta.initial}, {"j0", meta.j0},
                     {"j_min", meta.jmin},      {"t_max", meta.t_max},
                     {"samples", meta.samples}};
  json labels = json::array();
  for (int i = 0; i < trace.n; ++i) labels.push_back(net.display_label(i));
  doc["node_labels"] = std::move(labels);
  doc["times"] = trace.times;
  json rows = json::array();
  for (int k = 0; k < trace.samples(); ++k) {
    json row = json::array();
    for (int i = 0; i < trace.n; ++i) row.push_back(trace.f(k, i));
    rows.push_back(std::move(row));
  }
  doc["fidelities"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string peaks_to_json(const PeakReport& report, const std::vector<NodePeak>& per_node,
                          const Network& net) {
  json doc;
  doc["found"] = report.found;
  doc["window"] = report.window;
  if (report.excluded) {
    doc["excluded"] = net.display_label(*report.excluded);
  } else {
    doc["excluded"] = nullptr;
  }
  if (report.found) {
    doc["t_first"] = report.t_first;
    doc["node_first"] = net.display_label(report.node_first);
    doc["first_value"] = report.first_value;
    doc["t_max_peak"] = report.t_max_peak;
    doc["node_max"] = net.display_label(report.node_max);
    doc["max_value"] = report.max_value;
  }
  json nodes = json::array();
  for (const auto& np : per_node) {
    json item;
    item["node"] = net.display_label(np.node);
    item["found"] = np.found;
    if (np.found) {
      item["t_first"] = np.t_first;
      item["first_value"] = np.first_value;
      item["t_max_peak"] = np.t_max_peak;
      item["max_value"] = np.max_value;
    }
    nodes.push_back(std::move(item));
  }
  doc["per_node"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

void similarity_to_csv(std::ostream& os, const SimilarityGrid& grid, const Network& net) {
  os << "a,b,length,sim\n";
  for (const auto& e : grid.entries) {
    os << net.display_label(e.a) << ',' << net.display_label(e.b) << ',' << fmt_g12(e.length)
       << ',' << fmt_g12(e.sim) << "\n";
  }
  for (size_t i = 0; i < grid.diagonal.size(); ++i) {
    const int label = net.display_label(static_cast<int>(i));
    os << label << ',' << label << ',' << fmt_g12(grid.diagonal[i]) << "\n";
  }
}

std::string similarity_to_json(const SimilarityGrid& grid, const Network& net) {
  json doc;
  doc["at_time"] = grid.at_time;
  doc["sample_index"] = grid.sample_index;
  switch (grid.kind) {
    case TimeSelectorKind::FirstPeak: doc["selector"] = "first-peak"; break;
    case TimeSelectorKind::MaxPeak: doc["selector"] = "max-peak"; break;
    case TimeSelectorKind::Explicit: doc["selector"] = "explicit"; break;
  }
  json edges = json::array();
  for (const auto& e : grid.entries) {
    edges.push_back({{"a", net.display_label(e.a)},
                     {"b", net.display_label(e.b)},
                     {"length", e.length},
                     {"sim", e.sim}});
  }
  doc["edges"] = std::move(edges);
  json diag = json::array();
  for (size_t i = 0; i < grid.diagonal.size(); ++i) {
    diag.push_back({{"node", net.display_label(static_cast<int>(i))},
                    {"fidelity", grid.diagonal[i]}});
  }
  doc["diagonal"] = std::move(diag);
  return doc.dump(2) + "\n";
}

void geary_to_csv(std::ostream& os, const std::vector<GearyResult>& table) {
  os << "parameter,subset,C,n,edges_used,strong_flag\n";
  for (const auto& r : table) {
    os << r.parameter << ',' << subset_name(r.subset) << ',' << fmt_g12(r.c) << ','
       << r.n_observations << ',' << r.edges_used << ',' << (r.strong ? 1 : 0) << "\n";
  }
}

std::string geary_to_json(const std::vector<GearyResult>& table) {
  json doc = json::array();
  for (const auto& r : table) {
    doc.push_back({{"parameter", r.parameter},
                   {"subset", subset_name(r.subset)},
                   {"C", r.c},
                   {"n", r.n_observations},
                   {"edges_used", r.edges_used},
                   {"strong", r.strong}});
  }
  return doc.dump(2) + "\n";
}

namespace {

void summary_row(std::ostream& os, const std::string& position, const char* param,
                 const ParamSummary& s) {
  os << position << ',' << param << ',' << s.count << ',' << fmt_g12(s.mean) << ','
     << fmt_g12(s.stddev) << ',' << fmt_g12(s.q25) << ',' << fmt_g12(s.median) << ','
     << fmt_g12(s.q75) << "\n";
}

}  // namespace

void positions_to_csv(std::ostream& os, const PositionGroupStats& stats) {
  os << "position,parameter,count,mean,stddev,q25,median,q75\n";
  for (int pos = 0; pos < 8; ++pos) {
    for (int p = 0; p < 4; ++p) {
      summary_row(os, std::to_string(pos), kParameterNames[static_cast<size_t>(p)],
                  stats.by_position[static_cast<size_t>(pos)][static_cast<size_t>(p)]);
    }
  }
  for (int half = 0; half < 2; ++half) {
    for (int p = 0; p < 4; ++p) {
      summary_row(os, half == 0 ? "0-3" : "4-7", kParameterNames[static_cast<size_t>(p)],
                  stats.by_orientation[static_cast<size_t>(half)][static_cast<size_t>(p)]);
    }
  }
}

std::string positions_to_json(const PositionGroupStats& stats) {
  auto summary_json = [](const ParamSummary& s) {
    return json{{"count", s.count}, {"mean", s.mean},     {"stddev", s.stddev},
                {"q25", s.q25},     {"median", s.median}, {"q75", s.q75}};
  };
  json doc;
  json positions = json::array();
  for (int pos = 0; pos < 8; ++pos) {
    json item;
    item["position"] = pos;
    for (int p = 0; p < 4; ++p) {
      item[kParameterNames[static_cast<size_t>(p)]] =
          summary_json(stats.by_position[static_cast<size_t>(pos)][static_cast<size_t>(p)]);
    }
    positions.push_back(std::move(item));
  }
  doc["positions"] = std::move(positions);
  for (int half = 0; half < 2; ++half) {
    json item;
    for (int p = 0; p < 4; ++p) {
      item[kParameterNames[static_cast<size_t>(p)]] =
          summary_json(stats.by_orientation[static_cast<size_t>(half)][static_cast<size_t>(p)]);
    }
    doc[half == 0 ? "positions_0_3" : "positions_4_7"] = std::move(item);
  }
  return doc.dump(2) + "\n";
}

}  // namespace spinnet
