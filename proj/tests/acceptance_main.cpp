// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion (SKIP for the data-dependent one
// when no dataset is supplied via SPINNET_QASA_DATA).

#include "oracles.hpp"
#include "spinnet/analysis.hpp"
#include "spinnet/dataset.hpp"
#include "spinnet/dynamics.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace spinnet;

namespace {

struct CriterionFailure {
  std::string detail;
};

void require(bool cond, const std::string& detail) {
  if (!cond) throw CriterionFailure{detail};
}

std::vector<std::string> g_notes;  // printed under the criterion's status line

std::string num(double v) {
  std::ostringstream ss;
  ss.precision(6);
  ss << v;
  return ss.str();
}

const CouplingMode kConstant{CouplingLaw::Constant, 1.0};
const CouplingMode kDipole{CouplingLaw::Dipole, 1.0};

FidelityTrace run_trace(BuiltinKind kind, const CouplingMode& mode, bool localized,
                        int samples = 2001) {
  const Network net = builtin_network(kind);
  const HamiltonianMatrix h = build_hamiltonian(net, mode);
  const QuantumState psi0 =
      localized ? localized_state(net.size(), net.default_injection.value_or(0))
                : superposition_state(net.size());
  return fidelity_trace(h, psi0, samples);
}

// --- criterion bodies -------------------------------------------------------

void coupling_law_regression() {
  const std::vector<std::pair<double, double>> reference = {
      {2.174, 0.097}, {4.592, 0.010}, {6.168, 0.004}, {1.392, 0.371}, {4.064, 0.015}};
  for (const auto& [distance, printed] : reference) {
    const double w = coupling_weight(distance, 1.0, kDipole);
    require(std::abs(w - printed) <= 5e-4, "distance " + num(distance) + " gives " + num(w) +
                                               ", reference lists " + num(printed));
  }
  const double w2920 = coupling_weight(2.920, 1.0, kDipole);
  require(std::abs(w2920 - 0.0402) <= 5e-4,
          "distance 2.920 gives " + num(w2920) + ", inverse-cube law expects 0.0402");
  g_notes.push_back("distance 2.920 -> " + num(w2920) +
                    " per the inverse-cube law; the reference table prints 0.004 for this "
                    "row, which the law does not reproduce");
}

void overlay_symmetry() {
  const FidelityTrace ml = run_trace(BuiltinKind::MaxLengths, kConstant, true);
  const double d17 = oracles::sup_trace_diff(ml, 1, 7);
  require(d17 <= 1e-9, "max-lengths neighbours differ by " + num(d17));

  const Network mid = builtin_network(BuiltinKind::MidLengths);
  const FidelityTrace md = run_trace(BuiltinKind::MidLengths, kConstant, true);
  for (const auto& [la, lb] : {std::pair{4, 7}, std::pair{12, 15}, std::pair{8, 10}}) {
    const int a = *mid.canonical_of_label(la);
    const int b = *mid.canonical_of_label(lb);
    const double d = oracles::sup_trace_diff(md, a, b);
    require(d <= 1e-9, "mid-lengths pair (" + std::to_string(la) + "," + std::to_string(lb) +
                           ") differs by " + num(d));
  }
  const int node3 = *mid.canonical_of_label(3);
  for (int j = 0; j < md.n; ++j) {
    if (j == node3) continue;
    const double d = oracles::sup_trace_diff(md, node3, j);
    require(d > 1e-3, "label-3 trace is within " + num(d) + " of canonical " +
                          std::to_string(j) + "; it should match no other node");
  }
}

void ring_equivalence() {
  // Canonical ring order aligns the two label sets, so no extra relabelling
  // is needed on top of it.
  const FidelityTrace a = run_trace(BuiltinKind::MaxLengths, kConstant, true);
  const FidelityTrace b = run_trace(BuiltinKind::MinMax, kConstant, true);
  double sup = 0.0;
  for (int k = 0; k < a.samples(); ++k) {
    for (int i = 0; i < a.n; ++i) sup = std::max(sup, std::abs(a.f(k, i) - b.f(k, i)));
  }
  require(sup <= 1e-9, "constant-coupling ring traces differ by " + num(sup));
}

void static_superposition() {
  for (auto kind : {BuiltinKind::MaxLengths, BuiltinKind::MinMax}) {
    const FidelityTrace tr = run_trace(kind, kConstant, false);
    double dev = 0.0;
    for (int k = 0; k < tr.samples(); ++k) {
      for (int i = 0; i < tr.n; ++i) dev = std::max(dev, std::abs(tr.f(k, i) - 0.125));
    }
    require(dev <= 1e-9, builtin_network(kind).name + " superposition deviates by " + num(dev));
  }
  const FidelityTrace md = run_trace(BuiltinKind::MidLengths, kConstant, false);
  double dev = 0.0;
  for (int k = 0; k < md.samples(); ++k) {
    for (int i = 0; i < md.n; ++i) dev = std::max(dev, std::abs(md.f(k, i) - 0.125));
  }
  require(dev > 0.01, "mid-lengths superposition is static (deviation " + num(dev) + ")");
  const auto classes = oracles::trace_classes(md, 1e-9);
  require(classes.size() == 2, "expected 2 trace classes, found " +
                                   std::to_string(classes.size()));
  require(classes[0] == std::vector<int>{0, 1, 4, 5} &&
              classes[1] == std::vector<int>{2, 3, 6, 7},
          "classes do not split degree-2 nodes {1,3,8,10} from degree-3 {4,7,12,15}");
}

void dipole_transfer() {
  const FidelityTrace tr = run_trace(BuiltinKind::MaxLengths, kDipole, true);
  const double limit = 0.2 * tr.t_max;
  double best_short = 0.0;
  double worst_long = 0.0;
  for (int k = 0; k < tr.samples(); ++k) {
    if (tr.times[static_cast<size_t>(k)] > limit) break;
    best_short = std::max(best_short, tr.f(k, 1));
    worst_long = std::max(worst_long, tr.f(k, 7));
  }
  require(best_short >= 0.9, "short-edge neighbour only reaches " + num(best_short) +
                                 " before 0.2*t_max");
  require(worst_long <= 0.05, "long-edge neighbour reaches " + num(worst_long) +
                                  " before 0.2*t_max");
}

void dipole_superposition_classes() {
  const FidelityTrace tr = run_trace(BuiltinKind::MidLengths, kDipole, false);
  const auto classes = oracles::trace_classes(tr, 1e-9);
  require(classes.size() == 3, "expected 3 trace classes, found " +
                                   std::to_string(classes.size()));
  require(classes[0] == std::vector<int>{0, 5} && classes[1] == std::vector<int>{1, 4} &&
              classes[2] == std::vector<int>{2, 3, 6, 7},
          "classes do not split into {1,10} / {3,8} / {4,7,12,15}");
  auto window_mean = [&](int node) {
    double s = 0.0;
    for (int k = 0; k < tr.samples(); ++k) s += tr.f(k, node);
    return s / tr.samples();
  };
  const double short_pair = window_mean(0);
  const double long_pair = window_mean(1);
  require(short_pair > long_pair, "short-coupler pair mean " + num(short_pair) +
                                      " is not above long-coupler pair mean " + num(long_pair));
}

void dynamics_oracle() {
  for (auto kind : {BuiltinKind::MaxLengths, BuiltinKind::MinMax, BuiltinKind::MidLengths}) {
    for (const auto& mode : {kConstant, kDipole}) {
      for (bool localized : {true, false}) {
        const Network net = builtin_network(kind);
        const HamiltonianMatrix h = build_hamiltonian(net, mode);
        const QuantumState psi0 =
            localized ? localized_state(net.size(), net.default_injection.value_or(0))
                      : superposition_state(net.size());
        const Spectrum spec = eigendecompose(h);
        const double t_max = 1.0 / j_min(h);
        const double step = t_max / 1e5;
        const double e0 = energy_expectation(h, psi0);
        const std::string cell = net.name + "/" +
                                 (mode.law == CouplingLaw::Constant ? "constant" : "dipole") +
                                 "/" + (localized ? "localized" : "superposition");

        QuantumState rk = psi0;
        for (int checkpoint = 1; checkpoint <= 50; ++checkpoint) {
          const double t = t_max * checkpoint / 50.0;
          rk = rk4_evolve(h, rk, t_max / 50.0, step);
          const QuantumState eig = evolve(spec, psi0, t);
          const double diff = oracles::max_amplitude_diff(eig, rk);
          require(diff <= 1e-6,
                  cell + ": eigen-expansion vs RK4 differ by " + num(diff) + " at t=" + num(t));
          require(std::abs(eig.norm() - 1.0) <= 1e-9, cell + ": eigen norm drifts");
          require(std::abs(rk.norm() - 1.0) <= 1e-9, cell + ": RK4 norm drifts");
          require(std::abs(energy_expectation(h, eig) - e0) <= 1e-9, cell + ": energy drifts");
          require(std::abs(energy_expectation(h, rk) - e0) <= 1e-9,
                  cell + ": RK4 energy drifts");
        }
      }
    }
  }
}

void geary_properties() {
  // brute-force agreement on random instances
  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_int_distribution<int> size(2, 12);
  int done = 0;
  while (done < 100) {
    const int n = size(rng);
    std::map<NodeId, double> values;
    for (int i = 0; i < n; ++i) values[i * 5 + 1] = uni(rng);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (uni(rng) < 0.4) edges.emplace_back(i * 5 + 1, j * 5 + 1);
      }
    }
    if (edges.empty()) continue;
    const double got = gearys_c(values, edges).c;
    const double expected = oracles::geary_bruteforce(values, edges);
    require(std::abs(got - expected) <= 1e-12,
            "instance " + std::to_string(done) + ": " + num(got) + " vs brute-force " +
                num(expected));
    ++done;
  }

  // equal connected values: perfect positive correlation
  const double zero =
      gearys_c({{0, 0.0}, {1, 0.0}, {2, 1.0}, {3, 1.0}}, {{0, 1}, {2, 3}}).c;
  require(zero == 0.0, "equal-connected-values instance gives " + num(zero));

  // hand-computed path case
  const double path = gearys_c({{0, 1.0}, {1, 2.0}, {2, 3.0}}, {{0, 1}, {1, 2}}).c;
  require(std::abs(path - 0.5) <= 1e-15, "path graph gives " + num(path) + ", expected 0.5");

  // affine invariance
  std::map<NodeId, double> values;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 0; i < 12; ++i) values[i] = uni(rng);
  for (int i = 0; i < 12; ++i) {
    for (int j = i + 1; j < 12; ++j) {
      if (uni(rng) < 0.3) edges.emplace_back(i, j);
    }
  }
  const double base = gearys_c(values, edges).c;
  for (auto [a, b] : {std::pair{3.7, -2.0}, std::pair{-0.4, 11.0}}) {
    std::map<NodeId, double> mapped;
    for (const auto& [id, x] : values) mapped[id] = a * x + b;
    const double got = gearys_c(mapped, edges).c;
    require(std::abs(got - base) <= 1e-9,
            "affine map changes C from " + num(base) + " to " + num(got));
  }

  // permutation null on a 2x2 block: mean C within 3 standard errors of 1
  const Network net = generate_chimera(2, 2);
  std::vector<std::pair<NodeId, NodeId>> block_edges;
  for (const auto& e : net.edges) block_edges.emplace_back(e.a, e.b);
  std::vector<double> xs;
  for (int i = 0; i < net.size(); ++i) xs.push_back(uni(rng));
  std::vector<double> cs;
  const int shuffles = 1000;
  for (int s = 0; s < shuffles; ++s) {
    std::shuffle(xs.begin(), xs.end(), rng);
    std::map<NodeId, double> shuffled;
    for (size_t i = 0; i < xs.size(); ++i) shuffled[net.nodes[i]] = xs[i];
    cs.push_back(gearys_c(shuffled, block_edges).c);
  }
  double mean = 0.0;
  for (double c : cs) mean += c;
  mean /= shuffles;
  double var = 0.0;
  for (double c : cs) var += (c - mean) * (c - mean);
  var /= (shuffles - 1);
  const double se = std::sqrt(var / shuffles);
  require(std::abs(mean - 1.0) <= 3.0 * se, "permutation-null mean " + num(mean) +
                                                " is over 3 standard errors (" + num(se) +
                                                ") from 1");
}

void data_reproduction() {
  const char* path = std::getenv("SPINNET_QASA_DATA");
  require(path != nullptr, "");  // handled as SKIP by the caller

  const QubitDataset data = load_dataset(path, infer_dataset_format(path));
  const Network net = generate_chimera(16, 16);
  const auto table = geary_table(data, net);

  const std::map<std::string, std::array<double, 3>> expected = {
      {"beta", {1.08, 1.30, 0.58}},
      {"b", {0.93, 0.93, 0.92}},
      {"gamma", {1.06, 1.40, 0.32}},
      {"eta", {0.91, 0.91, 0.89}},
  };
  for (const auto& r : table) {
    const auto& row = expected.at(r.parameter);
    const double want = row[static_cast<size_t>(r.subset)];
    require(std::abs(r.c - want) <= 0.01, r.parameter + "/" + subset_name(r.subset) + " = " +
                                              num(r.c) + ", reference lists " + num(want));
  }

  const PositionGroupStats stats = position_group_stats(data);
  for (int p : {0, 2}) {  // beta and gamma
    require(stats.by_orientation[1][static_cast<size_t>(p)].mean <
                stats.by_orientation[0][static_cast<size_t>(p)].mean,
            std::string(kParameterNames[static_cast<size_t>(p)]) +
                " mean for positions 4-7 is not below positions 0-3");
  }
}

void topology_counts() {
  const Network big = generate_chimera(16, 16);
  require(big.size() == 2048, "16x16 block has " + std::to_string(big.size()) + " qubits");

  const Network block = generate_chimera(2, 2);
  require(block.size() == 32, "2x2 block has " + std::to_string(block.size()) + " qubits");
  int internal = 0, external = 0;
  for (const auto& e : block.edges) {
    (e.cls == EdgeClass::Internal ? internal : external)++;
  }
  require(internal == 64, "2x2 block has " + std::to_string(internal) +
                              " internal couplers, expected 16 per cell");
  require(external == 16, "2x2 block has " + std::to_string(external) +
                              " external couplers, expected 16");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void()> body;
    bool skippable;
  };
  const std::vector<Criterion> criteria = {
      {1, "coupling-law regression against the reference tables", coupling_law_regression, false},
      {2, "overlay symmetry under constant coupling", overlay_symmetry, false},
      {3, "ring equivalence of the two loop networks", ring_equivalence, false},
      {4, "static vs non-static superposition", static_superposition, false},
      {5, "dipole near-perfect transfer window", dipole_transfer, false},
      {6, "dipole superposition trace classes", dipole_superposition_classes, false},
      {7, "eigen-expansion vs RK4 oracle, norm and energy", dynamics_oracle, false},
      {8, "Geary's C oracle and statistical properties", geary_properties, false},
      {9, "qubit-parameter dataset reproduction (SPINNET_QASA_DATA)", data_reproduction, true},
      {10, "Chimera topology counts", topology_counts, false},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (c.skippable && std::getenv("SPINNET_QASA_DATA") == nullptr) {
      std::printf("SKIP  %2d  %s (no dataset supplied)\n", c.id, c.name);
      continue;
    }
    g_notes.clear();
    try {
      c.body();
      std::printf("PASS  %2d  %s\n", c.id, c.name);
    } catch (const CriterionFailure& f) {
      std::printf("FAIL  %2d  %s\n        %s\n", c.id, c.name, f.detail.c_str());
      ++failures;
    } catch (const std::exception& e) {
      std::printf("FAIL  %2d  %s\n        unexpected error: %s\n", c.id, c.name, e.what());
      ++failures;
    }
    for (const auto& note : g_notes) {
      std::printf("        note: %s\n", note.c_str());
    }
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria satisfied\n");
  return 0;
}
