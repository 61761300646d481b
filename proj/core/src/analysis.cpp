// SPDX-License-Identifier: Apache-2.0

#include "spinnet/analysis.hpp"

#include "spinnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace spinnet {

namespace {

// Topographic prominence of sample k within one node's trace: height above
// the higher of the two valley floors reached before a strictly taller
// sample (or the window edge) on each side.
double prominence(const std::vector<double>& f, int k) {
  const int s = static_cast<int>(f.size());
  double lmin = f[static_cast<size_t>(k)];
  for (int j = k - 1; j >= 0; --j) {
    if (f[static_cast<size_t>(j)] > f[static_cast<size_t>(k)]) break;
    lmin = std::min(lmin, f[static_cast<size_t>(j)]);
  }
  double rmin = f[static_cast<size_t>(k)];
  for (int j = k + 1; j < s; ++j) {
    if (f[static_cast<size_t>(j)] > f[static_cast<size_t>(k)]) break;
    rmin = std::min(rmin, f[static_cast<size_t>(j)]);
  }
  return f[static_cast<size_t>(k)] - std::max(lmin, rmin);
}

std::vector<int> peak_samples(const std::vector<double>& f, double epsilon) {
  std::vector<int> peaks;
  const int s = static_cast<int>(f.size());
  for (int k = 1; k + 1 < s; ++k) {
    if (!(f[static_cast<size_t>(k)] > f[static_cast<size_t>(k - 1)])) continue;
    if (!(f[static_cast<size_t>(k)] >= f[static_cast<size_t>(k + 1)])) continue;
    if (prominence(f, k) < epsilon) continue;
    peaks.push_back(k);
  }
  return peaks;
}

std::vector<double> node_trace(const FidelityTrace& trace, int node) {
  std::vector<double> f(static_cast<size_t>(trace.samples()));
  for (int k = 0; k < trace.samples(); ++k) f[static_cast<size_t>(k)] = trace.f(k, node);
  return f;
}

}  // namespace

PeakReport find_peaks(const FidelityTrace& trace, std::optional<int> exclude, double epsilon) {
  if (trace.samples() < 2 || trace.n < 1) {
    throw std::invalid_argument("find_peaks: trace is too small");
  }
  if (exclude && (*exclude < 0 || *exclude >= trace.n)) {
    throw std::out_of_range("find_peaks: excluded node outside the trace");
  }
  PeakReport report;
  report.excluded = exclude;
  report.window = trace.times.back();
  // a peak needs an interior sample; a 2-sample trace is a no-peak result

  for (int node = 0; node < trace.n; ++node) {
    if (exclude && node == *exclude) continue;
    const auto f = node_trace(trace, node);
    for (int k : peak_samples(f, epsilon)) {
      const double value = f[static_cast<size_t>(k)];
      if (!report.found || k < report.k_first ||
          (k == report.k_first && node < report.node_first)) {
        report.k_first = k;
        report.node_first = node;
        report.t_first = trace.times[static_cast<size_t>(k)];
        report.first_value = value;
      }
      if (!report.found || value > report.max_value ||
          (value == report.max_value &&
           (k < report.k_max || (k == report.k_max && node < report.node_max)))) {
        report.k_max = k;
        report.node_max = node;
        report.t_max_peak = trace.times[static_cast<size_t>(k)];
        report.max_value = value;
      }
      report.found = true;
    }
  }
  return report;
}

std::vector<NodePeak> per_node_peaks(const FidelityTrace& trace, double epsilon) {
  std::vector<NodePeak> out;
  out.reserve(static_cast<size_t>(trace.n));
  for (int node = 0; node < trace.n; ++node) {
    NodePeak np;
    np.node = node;
    const auto f = node_trace(trace, node);
    for (int k : peak_samples(f, epsilon)) {
      const double value = f[static_cast<size_t>(k)];
      if (!np.found) {
        np.t_first = trace.times[static_cast<size_t>(k)];
        np.first_value = value;
      }
      if (!np.found || value > np.max_value) {
        np.t_max_peak = trace.times[static_cast<size_t>(k)];
        np.max_value = value;
      }
      np.found = true;
    }
    out.push_back(np);
  }
  return out;
}

double similarity(double f_i, double f_j) {
  constexpr double slack = 1e-9;
  if (f_i < -slack || f_i > 1.0 + slack || f_j < -slack || f_j > 1.0 + slack) {
    throw std::invalid_argument("similarity: fidelities must lie in [0, 1]");
  }
  f_i = std::clamp(f_i, 0.0, 1.0);
  f_j = std::clamp(f_j, 0.0, 1.0);
  return 1.0 - std::abs(f_i - f_j);
}

SimilarityGrid similarity_grid(const Network& net, const FidelityTrace& trace,
                               const TimeSelector& at) {
  if (net.size() != trace.n) {
    throw std::invalid_argument("similarity_grid: network and trace sizes differ");
  }
  SimilarityGrid grid;
  grid.kind = at.kind;

  if (at.kind == TimeSelectorKind::Explicit) {
    const double dt = trace.times[1] - trace.times[0];
    const long k = std::lround(at.t / dt);
    grid.sample_index =
        static_cast<int>(std::clamp<long>(k, 0, static_cast<long>(trace.samples()) - 1));
  } else {
    const PeakReport report = find_peaks(trace, trace.initial_site);
    if (!report.found) {
      throw NoPeakError("similarity_grid: trace has no fidelity peak in the window");
    }
    grid.sample_index = at.kind == TimeSelectorKind::FirstPeak ? report.k_first : report.k_max;
  }
  grid.at_time = trace.times[static_cast<size_t>(grid.sample_index)];

  const IndexMap map = remap(net);
  for (const auto& e : net.edges) {
    const int ia = map.forward.at(e.a);
    const int ib = map.forward.at(e.b);
    grid.entries.push_back(
        {ia, ib, e.length, similarity(trace.f(grid.sample_index, ia), trace.f(grid.sample_index, ib))});
  }
  grid.diagonal.resize(static_cast<size_t>(trace.n));
  for (int i = 0; i < trace.n; ++i) {
    grid.diagonal[static_cast<size_t>(i)] = trace.f(grid.sample_index, i);
  }
  return grid;
}

std::string subset_name(CouplerSubset s) {
  switch (s) {
    case CouplerSubset::All: return "all";
    case CouplerSubset::Internal: return "internal";
    case CouplerSubset::External: return "external";
  }
  return "?";
}

GearyResult gearys_c(const std::map<NodeId, double>& values,
                     const std::vector<std::pair<NodeId, NodeId>>& edges) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw Error("gearys_c: need at least 2 observations");

  double mean = 0.0;
  for (const auto& [id, x] : values) mean += x;
  mean /= static_cast<double>(n);
  double var_sum = 0.0;
  for (const auto& [id, x] : values) var_sum += (x - mean) * (x - mean);
  if (var_sum == 0.0) {
    throw UndefinedStatisticError("gearys_c: zero variance, statistic undefined");
  }

  // Canonical summation order: usable undirected pairs sorted ascending.
  std::vector<std::pair<NodeId, NodeId>> usable;
  usable.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (values.count(a) && values.count(b)) {
      usable.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  if (usable.empty()) throw Error("gearys_c: no edge joins two observed nodes");
  std::sort(usable.begin(), usable.end());

  double sq_sum = 0.0;
  for (const auto& [a, b] : usable) {
    const double d = values.at(a) - values.at(b);
    sq_sum += d * d;
  }
  const double e = static_cast<double>(usable.size());

  GearyResult result;
  // Each undirected pair contributes twice to both double sums of the
  // definition; one factor of two cancels against the leading 1/2.
  result.c = (static_cast<double>(n - 1) * sq_sum) / (2.0 * var_sum * e);
  result.n_observations = n;
  result.edges_used = static_cast<long>(usable.size());
  return result;
}

std::vector<GearyResult> geary_table(const QubitDataset& data, const Network& net,
                                     int param_index) {
  std::vector<std::pair<NodeId, NodeId>> all, internal, external;
  for (const auto& e : net.edges) {
    all.emplace_back(e.a, e.b);
    (e.cls == EdgeClass::Internal ? internal : external).emplace_back(e.a, e.b);
  }

  std::vector<GearyResult> table;
  for (int p = 0; p < 4; ++p) {
    if (param_index >= 0 && p != param_index) continue;
    std::map<NodeId, double> values;
    for (const auto& [id, rec] : data.records) values[id] = rec.param(p);

    std::array<std::pair<CouplerSubset, const std::vector<std::pair<NodeId, NodeId>>*>, 3> subsets =
        {{{CouplerSubset::All, &all},
          {CouplerSubset::Internal, &internal},
          {CouplerSubset::External, &external}}};

    double c_all = 0.0;
    for (const auto& [subset, edges] : subsets) {
      GearyResult r = gearys_c(values, *edges);
      r.subset = subset;
      r.parameter = kParameterNames[static_cast<size_t>(p)];
      if (subset == CouplerSubset::All) {
        c_all = r.c;
      } else {
        r.strong = std::abs(r.c - c_all) > 0.10 * std::abs(c_all);
      }
      table.push_back(std::move(r));
    }
  }
  return table;
}

namespace {

double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  if (sorted.size() == 1) return sorted[0];
  const double h = p * static_cast<double>(sorted.size() - 1);
  const size_t lo = static_cast<size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

ParamSummary summarize(std::vector<double> xs) {
  ParamSummary s;
  s.count = static_cast<int>(xs.size());
  if (xs.empty()) return s;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  s.mean = mean;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  std::sort(xs.begin(), xs.end());
  s.q25 = quantile(xs, 0.25);
  s.median = quantile(xs, 0.50);
  s.q75 = quantile(xs, 0.75);
  return s;
}

}  // namespace

PositionGroupStats position_group_stats(const QubitDataset& data) {
  if (data.records.empty()) {
    throw Error("position_group_stats: dataset is empty");
  }
  std::array<std::array<std::vector<double>, 4>, 8> buckets;
  for (const auto& [id, rec] : data.records) {
    const int pos = position_of(id);
    for (int p = 0; p < 4; ++p) {
      buckets[static_cast<size_t>(pos)][static_cast<size_t>(p)].push_back(rec.param(p));
    }
  }
  PositionGroupStats stats;
  for (int pos = 0; pos < 8; ++pos) {
    stats.counts[static_cast<size_t>(pos)] =
        static_cast<int>(buckets[static_cast<size_t>(pos)][0].size());
    for (int p = 0; p < 4; ++p) {
      stats.by_position[static_cast<size_t>(pos)][static_cast<size_t>(p)] =
          summarize(buckets[static_cast<size_t>(pos)][static_cast<size_t>(p)]);
    }
  }
  for (int half = 0; half < 2; ++half) {
    for (int p = 0; p < 4; ++p) {
      std::vector<double> xs;
      for (int pos = 4 * half; pos < 4 * half + 4; ++pos) {
        const auto& b = buckets[static_cast<size_t>(pos)][static_cast<size_t>(p)];
        xs.insert(xs.end(), b.begin(), b.end());
      }
      stats.by_orientation[static_cast<size_t>(half)][static_cast<size_t>(p)] = summarize(xs);
    }
  }
  return stats;
}

}  // namespace spinnet
