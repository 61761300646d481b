// SPDX-License-Identifier: Apache-2.0

#include "spinnet/network.hpp"

#include "spinnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace spinnet {

int Network::display_label(int canonical) const {
  if (auto it = labels.find(canonical); it != labels.end()) return it->second;
  return nodes.at(static_cast<size_t>(canonical));
}

std::optional<int> Network::canonical_of_label(int label) const {
  if (!labels.empty()) {
    for (const auto& [canonical, lab] : labels) {
      if (lab == label) return canonical;
    }
    return std::nullopt;
  }
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

namespace {

// Cross-shaped schematic layout of one unit cell: the four horizontally
// oriented qubits (positions 0-3) sit in a vertical column, crossed by the
// four vertically oriented qubits (positions 4-7) in a horizontal row.
constexpr double kDotPitch = 1.0;
constexpr double kCellPitch = 7.0;

std::array<double, 2> cell_offset(int position) {
  if (position < 4) return {0.0, (1.5 - position) * kDotPitch};
  return {(position - 5.5) * kDotPitch, 0.0};
}

}  // namespace

Network generate_chimera(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("generate_chimera: rows and cols must be >= 1");
  }
  Network net;
  net.name = "chimera-" + std::to_string(rows) + "x" + std::to_string(cols);
  const int cells = rows * cols;
  net.nodes.reserve(static_cast<size_t>(cells) * 8);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int base = 8 * (r * cols + c);
      const double cx = c * kCellPitch;
      const double cy = -r * kCellPitch;
      for (int p = 0; p < 8; ++p) {
        const NodeId q = base + p;
        net.nodes.push_back(q);
        const auto off = cell_offset(p);
        net.coords[q] = {cx + off[0], cy + off[1]};
      }
    }
  }
  // Internal couplers: K(4,4) within each cell.
  for (int cell = 0; cell < cells; ++cell) {
    const int base = 8 * cell;
    for (int p = 0; p < 4; ++p) {
      for (int q = 4; q < 8; ++q) {
        net.edges.push_back({base + p, base + q, 0.0, EdgeClass::Internal});
      }
    }
  }
  // External couplers: equal positions in adjacent cells. Positions 0-3 join
  // vertically adjacent cells, positions 4-7 horizontally adjacent ones.
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      for (int p = 0; p < 4; ++p) {
        const NodeId a = 8 * (r * cols + c) + p;
        const NodeId b = 8 * ((r + 1) * cols + c) + p;
        net.edges.push_back({a, b, 0.0, EdgeClass::External});
      }
    }
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      for (int p = 4; p < 8; ++p) {
        const NodeId a = 8 * (r * cols + c) + p;
        const NodeId b = 8 * (r * cols + c + 1) + p;
        net.edges.push_back({a, b, 0.0, EdgeClass::External});
      }
    }
  }
  net.default_injection = 0;
  refresh_lengths(net);
  return net;
}

namespace {

// The rings alternate internal (within-cell) and external (between-cell)
// couplers; canonical 0 is the injection site. Labels are the qubit numbers
// of the embedding into a 2x2 Chimera block.
Network make_ring(const std::string& name, const std::array<int, 8>& labels,
                  double external_far, double external_near) {
  Network net;
  net.name = name;
  net.nodes = {0, 1, 2, 3, 4, 5, 6, 7};
  net.edges = {
      {0, 1, 1.0, EdgeClass::Internal},  {1, 2, external_far, EdgeClass::External},
      {2, 3, 1.0, EdgeClass::Internal},  {3, 4, external_near, EdgeClass::External},
      {4, 5, 1.0, EdgeClass::Internal},  {5, 6, external_far, EdgeClass::External},
      {6, 7, 1.0, EdgeClass::Internal},  {7, 0, external_near, EdgeClass::External},
  };
  for (int i = 0; i < 8; ++i) net.labels[i] = labels[i];
  net.stored_lengths = true;
  net.default_injection = 0;
  return net;
}

}  // namespace

Network builtin_network(BuiltinKind kind) {
  switch (kind) {
    case BuiltinKind::MaxLengths:
      // Longest internal plus the two external lengths; the injection site's
      // external coupler is the 2.174 one.
      return make_ring("max-lengths", {3, 7, 15, 11, 27, 31, 23, 19}, 2.920, 2.174);
    case BuiltinKind::MinMax:
      // Shortest internal plus the two longest external lengths.
      return make_ring("min-max", {2, 6, 14, 9, 25, 29, 21, 18}, 6.168, 4.592);
    case BuiltinKind::MidLengths: {
      // Two 4-node subloops bridged by the long horizontal couplers.
      Network net;
      net.name = "mid-lengths";
      net.nodes = {0, 1, 2, 3, 4, 5, 6, 7};
      const std::array<int, 8> labels = {1, 3, 4, 7, 8, 10, 12, 15};
      for (int i = 0; i < 8; ++i) net.labels[i] = labels[i];
      net.edges = {
          {0, 2, 1.000, EdgeClass::Internal}, {0, 3, 1.000, EdgeClass::Internal},
          {1, 2, 1.392, EdgeClass::Internal}, {1, 3, 1.392, EdgeClass::Internal},
          {2, 6, 4.064, EdgeClass::External}, {3, 7, 4.064, EdgeClass::External},
          {4, 6, 1.392, EdgeClass::Internal}, {4, 7, 1.392, EdgeClass::Internal},
          {5, 6, 1.000, EdgeClass::Internal}, {5, 7, 1.000, EdgeClass::Internal},
      };
      net.stored_lengths = true;
      net.default_injection = 0;
      return net;
    }
  }
  throw std::invalid_argument("builtin_network: unknown kind");
}

std::optional<BuiltinKind> builtin_kind_from_name(const std::string& name) {
  if (name == "max-lengths") return BuiltinKind::MaxLengths;
  if (name == "min-max") return BuiltinKind::MinMax;
  if (name == "mid-lengths") return BuiltinKind::MidLengths;
  return std::nullopt;
}

std::string builtin_name(BuiltinKind kind) {
  return builtin_network(kind).name;
}

IndexMap remap(const Network& net) {
  if (net.nodes.empty()) {
    throw MalformedNetworkError("remap: network has no nodes");
  }
  IndexMap map;
  map.backward = net.nodes;
  for (size_t i = 0; i < net.nodes.size(); ++i) {
    auto [it, inserted] = map.forward.emplace(net.nodes[i], static_cast<int>(i));
    if (!inserted) {
      throw MalformedNetworkError("remap: duplicate native id " + std::to_string(net.nodes[i]));
    }
  }
  return map;
}

std::vector<double> euclidean_lengths(const Network& net) {
  std::vector<double> lengths;
  lengths.reserve(net.edges.size());
  if (net.edges.empty()) return lengths;

  if (net.stored_lengths) {
    for (const auto& e : net.edges) {
      if (!(e.length > 0.0)) {
        throw MalformedNetworkError("stored edge length must be positive");
      }
      lengths.push_back(e.length);
    }
  } else {
    for (const auto& e : net.edges) {
      const auto ia = net.coords.find(e.a);
      const auto ib = net.coords.find(e.b);
      if (ia == net.coords.end() || ib == net.coords.end()) {
        throw MalformedNetworkError(
            "euclidean_lengths: missing coordinate for node " +
            std::to_string(ia == net.coords.end() ? e.a : e.b));
      }
      const double d = std::hypot(ia->second[0] - ib->second[0], ia->second[1] - ib->second[1]);
      if (!(d > 0.0)) {
        throw MalformedNetworkError("euclidean_lengths: coincident endpoints on edge (" +
                                    std::to_string(e.a) + "," + std::to_string(e.b) + ")");
      }
      lengths.push_back(d);
    }
  }

  const double min_len = *std::min_element(lengths.begin(), lengths.end());
  for (double& l : lengths) l /= min_len;
  return lengths;
}

void refresh_lengths(Network& net) {
  const auto lengths = euclidean_lengths(net);
  for (size_t i = 0; i < net.edges.size(); ++i) net.edges[i].length = lengths[i];
}

void validate(const Network& net) {
  std::set<NodeId> node_set;
  for (NodeId id : net.nodes) {
    if (id < 0) throw MalformedNetworkError("node id " + std::to_string(id) + " is negative");
    if (!node_set.insert(id).second) {
      throw MalformedNetworkError("duplicate node " + std::to_string(id));
    }
  }
  std::set<std::pair<NodeId, NodeId>> seen;
  double min_len = std::numeric_limits<double>::infinity();
  for (const auto& e : net.edges) {
    if (e.a == e.b) {
      throw MalformedNetworkError("self-loop on node " + std::to_string(e.a));
    }
    if (!node_set.count(e.a) || !node_set.count(e.b)) {
      throw MalformedNetworkError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                  ") references a node outside the network");
    }
    if (!seen.insert({std::min(e.a, e.b), std::max(e.a, e.b)}).second) {
      throw MalformedNetworkError("duplicate edge (" + std::to_string(e.a) + "," +
                                  std::to_string(e.b) + ")");
    }
    if (!(e.length > 0.0)) {
      throw MalformedNetworkError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                  ") has non-positive length");
    }
    min_len = std::min(min_len, e.length);
  }
  if (!net.edges.empty() && std::abs(min_len - 1.0) > 1e-9) {
    throw MalformedNetworkError("edge lengths are not rescaled: minimum is " +
                                std::to_string(min_len) + ", expected 1");
  }
}

}  // namespace spinnet
