// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spinnet/dataset.hpp"
#include "spinnet/dynamics.hpp"
#include "spinnet/network.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spinnet {

/// Minimum prominence for a sample to count as a fidelity peak; suppresses
/// floating-point ripple on near-flat traces. Genuine sub-percent
/// oscillations above this floor do register as peaks, so a weak coupler's
/// ripple can supply the network-wide first peak even when the dominant
/// transfer peak comes later.
inline constexpr double kPeakProminence = 1e-3;

/// First and maximum fidelity peaks over a trace. `found == false` is the
/// explicit no-peak outcome (e.g. static or monotone traces), distinguished
/// from an error.
struct PeakReport {
  bool found = false;
  double t_first = 0.0;
  int node_first = -1;
  double first_value = 0.0;
  int k_first = -1;  ///< sample index of the first peak
  double t_max_peak = 0.0;
  int node_max = -1;
  double max_value = 0.0;
  int k_max = -1;
  std::optional<int> excluded;
  double window = 0.0;
};

/// Per-node variant of the peak report, exposed for comparison with the
/// network-wide selection.
struct NodePeak {
  int node = -1;
  bool found = false;
  double t_first = 0.0;
  double first_value = 0.0;
  double t_max_peak = 0.0;
  double max_value = 0.0;
};

enum class TimeSelectorKind { FirstPeak, MaxPeak, Explicit };

struct TimeSelector {
  TimeSelectorKind kind = TimeSelectorKind::FirstPeak;
  double t = 0.0;  ///< used by Explicit; snapped to the nearest grid sample
};

struct SimilarityEntry {
  int a = 0;  ///< canonical indices
  int b = 0;
  double length = 0.0;
  double sim = 0.0;
};

/// Edge-similarity snapshot at one sampled time: one record per edge plus the
/// per-node fidelities on the diagonal.
struct SimilarityGrid {
  std::vector<SimilarityEntry> entries;
  std::vector<double> diagonal;
  double at_time = 0.0;
  int sample_index = -1;
  TimeSelectorKind kind = TimeSelectorKind::Explicit;
};

enum class CouplerSubset { All, Internal, External };

std::string subset_name(CouplerSubset s);

/// Geary's C for one parameter restricted to one coupler subset.
/// C = 1 means no spatial correlation, C = 0 perfect positive correlation,
/// C > 1 increasingly negative correlation.
struct GearyResult {
  double c = 0.0;
  int n_observations = 0;
  long edges_used = 0;
  CouplerSubset subset = CouplerSubset::All;
  std::string parameter;
  /// More than 10% deviation from the all-couplers value.
  bool strong = false;
};

/// Summary statistics of one parameter over one group of qubits.
struct ParamSummary {
  int count = 0;
  double mean = 0.0;
  double stddev = 0.0;  ///< sample standard deviation
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
};

/// Parameter order used throughout: beta, b, gamma, eta.
inline constexpr std::array<const char*, 4> kParameterNames = {"beta", "b", "gamma", "eta"};

/// Per-position (0-7) summaries plus the orientation split: positions 0-3
/// are the horizontally oriented qubits, 4-7 the vertically oriented ones.
struct PositionGroupStats {
  std::array<std::array<ParamSummary, 4>, 8> by_position{};
  std::array<std::array<ParamSummary, 4>, 2> by_orientation{};  ///< [0]: 0-3, [1]: 4-7
  std::array<int, 8> counts{};
};

/// Network-wide peak extraction over all nodes except `exclude`. A peak is a
/// sample k with f[k] > f[k-1], f[k] >= f[k+1] and prominence >= epsilon;
/// ties are broken by earliest time, then lowest node index.
PeakReport find_peaks(const FidelityTrace& trace, std::optional<int> exclude,
                      double epsilon = kPeakProminence);

std::vector<NodePeak> per_node_peaks(const FidelityTrace& trace,
                                     double epsilon = kPeakProminence);

/// sim = 1 - |f_i - f_j| for fidelities in [0, 1].
double similarity(double f_i, double f_j);

/// Similarity of every connected pair at one sampled time. FirstPeak/MaxPeak
/// selectors exclude the trace's injection site from the peak search and
/// throw NoPeakError when the trace has no peak.
SimilarityGrid similarity_grid(const Network& net, const FidelityTrace& trace,
                               const TimeSelector& at);

/// Geary's C with binary weights: w_ij = 1 for every ordered connected pair,
///   C = (n-1) sum_ij w_ij (x_i - x_j)^2 / (2 sum_i (x_i - xbar)^2 sum_ij w_ij).
/// Summation runs in a canonical edge order, so permuting the edge list gives
/// bit-identical results. Edges with an endpoint missing from `values` are
/// dropped. Throws UndefinedStatisticError on zero variance, Error when no
/// usable edge remains.
GearyResult gearys_c(const std::map<NodeId, double>& values,
                     const std::vector<std::pair<NodeId, NodeId>>& edges);

/// 4 parameters x {All, Internal, External}: one Geary's C per cell, with
/// node statistics always taken over the full dataset so only the weights
/// change between subsets. Qubits absent from the dataset drop out together
/// with their edges. A non-negative `param_index` restricts the table to one
/// parameter's three cells.
std::vector<GearyResult> geary_table(const QubitDataset& data, const Network& net,
                                     int param_index = -1);

/// Summary statistics of the four parameters grouped by relative position in
/// the unit cell, plus the horizontal/vertical orientation split.
PositionGroupStats position_group_stats(const QubitDataset& data);

}  // namespace spinnet
