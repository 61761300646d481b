// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spinnet/analysis.hpp"
#include "spinnet/dataset.hpp"
#include "spinnet/dynamics.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/network.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace spinnet {

/// Fixed float formatting for CSV artifacts: 12 significant digits, shortest
/// form, identical across runs.
std::string fmt_g12(double v);

/// Run metadata attached to JSON trace exports.
struct RunMeta {
  std::string network;
  std::string coupling;
  std::string initial;
  double j0 = 1.0;
  double jmin = 0.0;
  double t_max = 0.0;
  int samples = 0;
};

// Networks: {"nodes": [...], "edges": [{"a", "b", "length", "class"}, ...],
// "labels": {canonical: label}} plus optional name/coords/default_injection.
// The same document is accepted back as input anywhere a built-in network is
// accepted.
std::string network_to_json(const Network& net, const HamiltonianMatrix* ham = nullptr);
Network network_from_json_text(const std::string& text, const std::string& origin = "<json>");
Network load_network_file(const std::string& path);

// Fidelity traces. CSV columns: time,f_<label>,...
void trace_to_csv(std::ostream& os, const FidelityTrace& trace, const Network& net);
std::string trace_to_json(const FidelityTrace& trace, const Network& net, const RunMeta& meta);

std::string peaks_to_json(const PeakReport& report, const std::vector<NodePeak>& per_node,
                          const Network& net);

// Similarity grids. CSV rows: a,b,length,sim for edges, then i,i,fidelity for
// the diagonal.
void similarity_to_csv(std::ostream& os, const SimilarityGrid& grid, const Network& net);
std::string similarity_to_json(const SimilarityGrid& grid, const Network& net);

// Geary tables. CSV columns: parameter,subset,C,n,edges_used,strong_flag
void geary_to_csv(std::ostream& os, const std::vector<GearyResult>& table);
std::string geary_to_json(const std::vector<GearyResult>& table);

// Position summaries. CSV columns:
// position,parameter,count,mean,stddev,q25,median,q75 with group rows "0-3"
// and "4-7" after the eight positions.
void positions_to_csv(std::ostream& os, const PositionGroupStats& stats);
std::string positions_to_json(const PositionGroupStats& stats);

}  // namespace spinnet
