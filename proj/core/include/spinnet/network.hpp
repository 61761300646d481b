// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinnet {

/// Native qubit number in the D-Wave style linear numbering: qubit q sits in
/// unit cell q/8 at relative position q%8. Positions 0-3 form one shore of
/// the cell's K(4,4), positions 4-7 the other.
using NodeId = int;

inline int cell_of(NodeId q) { return q / 8; }
inline int position_of(NodeId q) { return q % 8; }

enum class EdgeClass { Internal, External };

struct Edge {
  NodeId a = 0;
  NodeId b = 0;
  double length = 0.0;  ///< dimensionless; the shortest edge of a network is 1
  EdgeClass cls = EdgeClass::Internal;
};

/// An undirected spin network. The order of `nodes` defines the canonical
/// contiguous indexing used by Hamiltonians and traces; edge endpoints are
/// native ids and may be non-consecutive (dead qubits are simply absent).
struct Network {
  std::string name;
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  /// Optional schematic positions, used to derive edge lengths.
  std::map<NodeId, std::array<double, 2>> coords;
  /// Canonical index -> display label. The built-in test networks use this to
  /// expose the qubit numbers of their embedding into a 2x2 Chimera block.
  std::map<int, int> labels;
  /// When true the edge lengths are authoritative as stored (built-in tables,
  /// file input) and are never recomputed from coordinates.
  bool stored_lengths = false;
  /// Canonical index of the conventional excitation injection site.
  std::optional<int> default_injection;

  int size() const { return static_cast<int>(nodes.size()); }

  /// Display label for a canonical index: the `labels` entry when present,
  /// otherwise the native node id itself.
  int display_label(int canonical) const;

  /// Inverse of display_label. Empty when no node carries the label.
  std::optional<int> canonical_of_label(int label) const;
};

/// Bijection between native node ids and contiguous matrix indices [0, N),
/// preserving the order of the network's node list.
struct IndexMap {
  std::map<NodeId, int> forward;
  std::vector<NodeId> backward;
};

enum class BuiltinKind { MaxLengths, MinMax, MidLengths };

/// Chimera graph with rows x cols unit cells of 8 qubits. Within each cell,
/// positions 0-3 and 4-7 are completely bipartitely coupled (16 internal
/// edges per cell); equal positions in adjacent cells are joined by external
/// couplers, positions 0-3 vertically and positions 4-7 horizontally.
/// Coordinates follow a cross-shaped schematic (see README for the layout
/// constants); lengths are Euclidean distances rescaled so the minimum is 1.
Network generate_chimera(int rows, int cols);

/// One of the three canonical 8-node test networks. Canonical indices are
/// 0-7; `labels` records the embedding into the 2x2 Chimera block and
/// `default_injection` the conventional injection site (canonical 0).
Network builtin_network(BuiltinKind kind);

/// Parses "max-lengths" / "min-max" / "mid-lengths".
std::optional<BuiltinKind> builtin_kind_from_name(const std::string& name);
std::string builtin_name(BuiltinKind kind);

/// Order-preserving compaction of native ids to [0, N).
/// Throws MalformedNetworkError on duplicate ids or an empty node list.
IndexMap remap(const Network& net);

/// Per-edge lengths rescaled so the minimum is 1. Networks with stored
/// lengths report them as-is (modulo the final rescale); otherwise lengths
/// are Euclidean distances between the endpoints' coordinates and every
/// endpoint must have a coordinate.
std::vector<double> euclidean_lengths(const Network& net);

/// Writes euclidean_lengths back onto net.edges.
void refresh_lengths(Network& net);

/// Structural validation: unique nodes, edges between distinct existing
/// nodes, no duplicate undirected edges, positive lengths with minimum 1.
/// Throws MalformedNetworkError.
void validate(const Network& net);

}  // namespace spinnet
