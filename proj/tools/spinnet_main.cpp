// SPDX-License-Identifier: Apache-2.0

#include "spinnet/analysis.hpp"
#include "spinnet/dataset.hpp"
#include "spinnet/dynamics.hpp"
#include "spinnet/errors.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/network.hpp"
#include "spinnet/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace spinnet;

/// Raised for bad option values; mapped to exit code 2 like parse errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::string network = "max-lengths";
  std::string coupling = "constant";
  double j0 = 1.0;
  std::string initial = "localized";
  int samples = 2001;
  std::string out = "-";
  std::string format = "csv";
};

Network resolve_network(const std::string& selector) {
  if (auto kind = builtin_kind_from_name(selector)) {
    return builtin_network(*kind);
  }
  if (selector.rfind("chimera:", 0) == 0) {
    const std::string dims = selector.substr(8);
    const auto x = dims.find('x');
    if (x == std::string::npos) {
      throw UsageError("bad chimera size '" + dims + "', expected <rows>x<cols>");
    }
    int rows = 0;
    int cols = 0;
    const auto r1 = std::from_chars(dims.data(), dims.data() + x, rows);
    const auto r2 = std::from_chars(dims.data() + x + 1, dims.data() + dims.size(), cols);
    if (r1.ec != std::errc() || r2.ec != std::errc() || rows < 1 || cols < 1) {
      throw UsageError("bad chimera size '" + dims + "', expected <rows>x<cols>");
    }
    return generate_chimera(rows, cols);
  }
  if (selector.rfind("file:", 0) == 0) {
    return load_network_file(selector.substr(5));
  }
  throw UsageError("unknown network '" + selector +
                   "' (expected max-lengths | min-max | mid-lengths | chimera:<R>x<C> | "
                   "file:<path>)");
}

CouplingMode resolve_coupling(const RunOptions& opts) {
  CouplingMode mode;
  if (!(opts.j0 > 0.0) || opts.j0 > 1.0) {
    throw UsageError("--j0 must lie in (0, 1], got " + std::to_string(opts.j0));
  }
  mode.j0 = opts.j0;
  if (opts.coupling == "constant") {
    mode.law = CouplingLaw::Constant;
  } else if (opts.coupling == "dipole") {
    mode.law = CouplingLaw::Dipole;
  } else {
    throw UsageError("unknown coupling '" + opts.coupling + "' (expected constant | dipole)");
  }
  return mode;
}

QuantumState resolve_initial(const RunOptions& opts, const Network& net) {
  const int n = net.size();
  if (opts.initial == "superposition") return superposition_state(n);
  if (opts.initial == "localized") {
    return localized_state(n, net.default_injection.value_or(0));
  }
  if (opts.initial.rfind("localized:", 0) == 0) {
    const std::string tail = opts.initial.substr(10);
    int label = 0;
    const auto res = std::from_chars(tail.data(), tail.data() + tail.size(), label);
    if (res.ec != std::errc() || res.ptr != tail.data() + tail.size()) {
      throw UsageError("bad initial site '" + tail + "'");
    }
    auto canonical = net.canonical_of_label(label);
    if (!canonical && net.labels.empty() && label >= 0 && label < n) {
      canonical = label;  // bare canonical index, for label-less file networks
    }
    if (!canonical) {
      throw UsageError("initial site '" + tail + "' names no node of network '" + net.name + "'");
    }
    return localized_state(n, *canonical);
  }
  throw UsageError("unknown initial state '" + opts.initial +
                   "' (expected localized[:<label>] | superposition)");
}

void write_text(const std::string& out, const std::string& text) {
  if (out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(out);
  if (!os) throw Error("cannot open output file " + out);
  os << text;
}

struct SimulationArtifacts {
  Network net;
  HamiltonianMatrix ham;
  FidelityTrace trace;
  RunMeta meta;
};

SimulationArtifacts run_simulation(const RunOptions& opts) {
  if (opts.samples < 2) {
    throw UsageError("--samples must be at least 2, got " + std::to_string(opts.samples));
  }
  SimulationArtifacts art;
  art.net = resolve_network(opts.network);
  const CouplingMode mode = resolve_coupling(opts);
  art.ham = build_hamiltonian(art.net, mode);
  const QuantumState psi0 = resolve_initial(opts, art.net);
  art.trace = fidelity_trace(art.ham, psi0, opts.samples);
  art.meta = {art.net.name, opts.coupling, art.trace.initial, opts.j0,
              j_min(art.ham),  art.trace.t_max, opts.samples};
  return art;
}

void add_run_options(CLI::App* cmd, RunOptions& opts, bool with_initial = true) {
  cmd->add_option("--network", opts.network,
                  "max-lengths | min-max | mid-lengths | chimera:<R>x<C> | file:<path>");
  cmd->add_option("--coupling", opts.coupling, "constant | dipole");
  cmd->add_option("--j0", opts.j0, "baseline coupling weight in (0, 1]");
  if (with_initial) {
    cmd->add_option("--initial", opts.initial,
                    "localized[:<label>] | superposition; labels are block labels for "
                    "built-ins, native ids otherwise (default: the network's injection site)");
  }
  cmd->add_option("--samples", opts.samples, "time grid samples over [0, 1/J_min]");
  cmd->add_option("--out", opts.out, "output path, '-' for stdout");
  cmd->add_option("--format", opts.format, "csv | json");
}

TimeSelector parse_selector(const std::string& text) {
  TimeSelector sel;
  if (text == "first-peak") {
    sel.kind = TimeSelectorKind::FirstPeak;
  } else if (text == "max-peak") {
    sel.kind = TimeSelectorKind::MaxPeak;
  } else if (text.rfind("t=", 0) == 0) {
    sel.kind = TimeSelectorKind::Explicit;
    const std::string tail = text.substr(2);
    const auto res = std::from_chars(tail.data(), tail.data() + tail.size(), sel.t);
    if (res.ec != std::errc() || res.ptr != tail.data() + tail.size()) {
      throw UsageError("bad time value in '" + text + "'");
    }
  } else {
    throw UsageError("unknown selector '" + text + "' (expected first-peak | max-peak | t=<val>)");
  }
  return sel;
}

int cmd_simulate(const RunOptions& opts) {
  const auto art = run_simulation(opts);
  if (opts.format == "csv") {
    std::ostringstream ss;
    trace_to_csv(ss, art.trace, art.net);
    write_text(opts.out, ss.str());
  } else if (opts.format == "json") {
    write_text(opts.out, trace_to_json(art.trace, art.net, art.meta));
  } else {
    throw UsageError("unknown format '" + opts.format + "'");
  }
  std::cerr << "network=" << art.meta.network << " coupling=" << art.meta.coupling
            << " initial=" << art.meta.initial << " j0=" << fmt_g12(art.meta.j0)
            << " j_min=" << fmt_g12(art.meta.jmin) << " t_max=" << fmt_g12(art.meta.t_max)
            << " samples=" << art.meta.samples << "\n";
  return 0;
}

int cmd_peaks(const RunOptions& opts) {
  const auto art = run_simulation(opts);
  const PeakReport report = find_peaks(art.trace, art.trace.initial_site);
  const auto per_node = per_node_peaks(art.trace);
  write_text(opts.out, peaks_to_json(report, per_node, art.net));
  return 0;
}

int cmd_similarity(const RunOptions& opts, const std::string& at) {
  const auto art = run_simulation(opts);
  const SimilarityGrid grid = similarity_grid(art.net, art.trace, parse_selector(at));
  if (opts.format == "csv") {
    std::ostringstream ss;
    similarity_to_csv(ss, grid, art.net);
    write_text(opts.out, ss.str());
  } else if (opts.format == "json") {
    write_text(opts.out, similarity_to_json(grid, art.net));
  } else {
    throw UsageError("unknown format '" + opts.format + "'");
  }
  return 0;
}

int cmd_geary(const RunOptions& opts, const std::string& data_path,
              const std::string& data_format, const std::string& param,
              const std::string& subset) {
  const Network net = resolve_network(opts.network);
  DatasetFormat fmt = infer_dataset_format(data_path);
  if (data_format == "csv") fmt = DatasetFormat::Csv;
  if (data_format == "json") fmt = DatasetFormat::Json;
  const QubitDataset data = load_dataset(data_path, fmt);

  const ValidationReport vr = validate_against(data, net);
  std::cerr << "dataset=" << data_path << " records=" << data.size()
            << " unknown_ids=" << vr.data_not_in_network.size()
            << " dead_qubits=" << vr.network_not_in_data.size()
            << " usable_internal=" << vr.usable_internal_edges
            << " usable_external=" << vr.usable_external_edges << "\n";

  int param_index = -1;
  if (param != "all") {
    const auto it = std::find(kParameterNames.begin(), kParameterNames.end(), param);
    if (it == kParameterNames.end()) {
      throw UsageError("unknown parameter '" + param + "' (expected beta | b | gamma | eta | all)");
    }
    param_index = static_cast<int>(it - kParameterNames.begin());
  }
  auto table = geary_table(data, net, param_index);
  if (subset != "each") {
    std::erase_if(table, [&](const GearyResult& r) { return subset_name(r.subset) != subset; });
    if (table.empty()) {
      throw UsageError("unknown subset '" + subset +
                       "' (expected all | internal | external | each)");
    }
  }
  if (opts.format == "csv") {
    std::ostringstream ss;
    geary_to_csv(ss, table);
    write_text(opts.out, ss.str());
  } else if (opts.format == "json") {
    write_text(opts.out, geary_to_json(table));
  } else {
    throw UsageError("unknown format '" + opts.format + "'");
  }
  return 0;
}

int cmd_positions(const RunOptions& opts, const std::string& data_path,
                  const std::string& data_format) {
  DatasetFormat fmt = infer_dataset_format(data_path);
  if (data_format == "csv") fmt = DatasetFormat::Csv;
  if (data_format == "json") fmt = DatasetFormat::Json;
  const QubitDataset data = load_dataset(data_path, fmt);
  const PositionGroupStats stats = position_group_stats(data);
  if (opts.format == "csv") {
    std::ostringstream ss;
    positions_to_csv(ss, stats);
    write_text(opts.out, ss.str());
  } else if (opts.format == "json") {
    write_text(opts.out, positions_to_json(stats));
  } else {
    throw UsageError("unknown format '" + opts.format + "'");
  }
  return 0;
}

int cmd_network(const RunOptions& opts, const std::string& kind, const std::string& format,
                bool with_hamiltonian) {
  if (format != "json") {
    throw UsageError("the network subcommand emits JSON only");
  }
  const Network net = resolve_network(kind);
  if (with_hamiltonian) {
    const HamiltonianMatrix ham = build_hamiltonian(net, resolve_coupling(opts));
    write_text(opts.out, network_to_json(net, &ham));
  } else {
    write_text(opts.out, network_to_json(net));
  }
  return 0;
}

int cmd_reproduce(const RunOptions& base, const std::string& out_dir) {
  namespace fs = std::filesystem;
  if (base.format != "csv" && base.format != "json") {
    throw UsageError("unknown format '" + base.format + "'");
  }
  const std::array<std::string, 3> networks = {"max-lengths", "min-max", "mid-lengths"};
  const std::array<std::string, 2> couplings = {"constant", "dipole"};
  const std::array<std::string, 2> initials = {"localized", "superposition"};

  for (const auto& network : networks) {
    // One network document per test network, shared by its grid cells.
    fs::create_directories(fs::path(out_dir) / network);
    write_text((fs::path(out_dir) / network / "network.json").string(),
               network_to_json(resolve_network(network)));
    for (const auto& coupling : couplings) {
      for (const auto& initial : initials) {
        RunOptions opts = base;
        opts.network = network;
        opts.coupling = coupling;
        opts.initial = initial;
        const fs::path cell = fs::path(out_dir) / network / coupling / initial;
        fs::create_directories(cell);

        const auto art = run_simulation(opts);
        {
          std::ofstream os(cell / ("trace." + base.format));
          if (!os) throw Error("cannot open " + (cell / ("trace." + base.format)).string());
          if (base.format == "json") {
            os << trace_to_json(art.trace, art.net, art.meta);
          } else {
            trace_to_csv(os, art.trace, art.net);
          }
        }
        const PeakReport report = find_peaks(art.trace, art.trace.initial_site);
        write_text((cell / "peaks.json").string(),
                   peaks_to_json(report, per_node_peaks(art.trace), art.net));
        if (report.found) {
          for (const auto& [sel, name] :
               {std::pair{TimeSelectorKind::FirstPeak, "similarity_first.csv"},
                std::pair{TimeSelectorKind::MaxPeak, "similarity_max.csv"}}) {
            std::ofstream os(cell / name);
            similarity_to_csv(os, similarity_grid(art.net, art.trace, {sel, 0.0}), art.net);
          }
        }
        std::cerr << "cell " << network << "/" << coupling << "/" << initial
                  << ": t_max=" << fmt_g12(art.meta.t_max)
                  << (report.found ? "" : " (no peak; similarity grids skipped)") << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinnet: spin-network dynamics and spatial-correlation toolkit for "
               "Chimera-topology annealers"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 runtime error (named cause on stderr), 2 usage error.");

  RunOptions opts;
  long seed = 0;
  app.add_option("--seed", seed,
                 "seed for randomised analyses (reserved; every current subcommand is "
                 "deterministic)")
      ->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "compute a fidelity trace over [0, 1/J_min]");
  add_run_options(simulate, opts);

  auto* peaks = app.add_subcommand("peaks", "first/max fidelity peak report (JSON)");
  add_run_options(peaks, opts);

  std::string at = "first-peak";
  auto* similarity = app.add_subcommand("similarity", "edge similarity grid at a sampled time");
  add_run_options(similarity, opts);
  similarity->add_option("--at", at, "first-peak | max-peak | t=<val>");

  std::string data_path;
  std::string data_format = "auto";
  std::string param = "all";
  std::string subset = "each";
  auto* geary = app.add_subcommand("geary", "Geary's C of qubit parameters over coupler subsets");
  geary->add_option("--data", data_path, "qubit parameter dataset (CSV or JSON)")->required();
  geary->add_option("--data-format", data_format, "csv | json (default: by extension)");
  geary->add_option("--network", opts.network, "network selector");
  geary->add_option("--param", param, "beta | b | gamma | eta | all");
  geary->add_option("--subset", subset, "all | internal | external | each");
  geary->add_option("--out", opts.out, "output path, '-' for stdout");
  geary->add_option("--format", opts.format, "csv | json");

  auto* positions = app.add_subcommand("positions", "per-position parameter summaries");
  positions->add_option("--data", data_path, "qubit parameter dataset (CSV or JSON)")->required();
  positions->add_option("--data-format", data_format, "csv | json (default: by extension)");
  positions->add_option("--out", opts.out, "output path, '-' for stdout");
  positions->add_option("--format", opts.format, "csv | json");

  std::string kind = "max-lengths";
  std::string network_format = "json";
  bool with_hamiltonian = false;
  auto* network = app.add_subcommand("network", "emit a network as JSON");
  network->add_option("--kind", kind, "network selector");
  network->add_flag("--with-hamiltonian", with_hamiltonian, "embed the coupling matrix");
  network->add_option("--coupling", opts.coupling, "constant | dipole");
  network->add_option("--j0", opts.j0, "baseline coupling weight in (0, 1]");
  network->add_option("--out", opts.out, "output path, '-' for stdout");
  network->add_option("--format", network_format, "json");

  std::string out_dir;
  auto* reproduce = app.add_subcommand(
      "reproduce", "run the full grid: 3 networks x 2 couplings x 2 initial states");
  reproduce->add_option("--out", out_dir, "output directory")->required();
  reproduce->add_option("--samples", opts.samples, "time grid samples");
  reproduce->add_option("--j0", opts.j0, "baseline coupling weight in (0, 1]");
  reproduce->add_option("--format", opts.format, "trace format: csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(opts);
    if (peaks->parsed()) return cmd_peaks(opts);
    if (similarity->parsed()) return cmd_similarity(opts, at);
    if (geary->parsed()) return cmd_geary(opts, data_path, data_format, param, subset);
    if (positions->parsed()) return cmd_positions(opts, data_path, data_format);
    if (network->parsed()) return cmd_network(opts, kind, network_format, with_hamiltonian);
    if (reproduce->parsed()) return cmd_reproduce(opts, out_dir);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const NoPeakError& e) {
    std::cerr << "error (no-peak): " << e.what() << "\n";
    return 1;
  } catch (const UndefinedStatisticError& e) {
    std::cerr << "error (zero-variance): " << e.what() << "\n";
    return 1;
  } catch (const LoadError& e) {
    std::cerr << "error (malformed file): " << e.what() << "\n";
    return 1;
  } catch (const MalformedNetworkError& e) {
    std::cerr << "error (malformed network): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
