#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spinnet/analysis.hpp"
#include "spinnet/dynamics.hpp"
#include "spinnet/errors.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/serialize.hpp"

#include <algorithm>
#include <sstream>

using namespace spinnet;

namespace {

const CouplingMode kDipole{CouplingLaw::Dipole, 1.0};

bool edges_equal(const Network& a, const Network& b) {
  if (a.edges.size() != b.edges.size()) return false;
  for (size_t i = 0; i < a.edges.size(); ++i) {
    const Edge& x = a.edges[i];
    const Edge& y = b.edges[i];
    if (x.a != y.a || x.b != y.b || x.length != y.length || x.cls != y.cls) return false;
  }
  return true;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("fmt_g12 is stable and short") {
  CHECK(fmt_g12(0.0) == "0");
  CHECK(fmt_g12(1.0) == "1");
  CHECK(fmt_g12(0.125) == "0.125");
  CHECK(fmt_g12(24.897087999999998) == "24.897088");
}

TEST_CASE("network json round trip") {
  for (auto kind : {BuiltinKind::MaxLengths, BuiltinKind::MinMax, BuiltinKind::MidLengths}) {
    const Network net = builtin_network(kind);
    const Network back = network_from_json_text(network_to_json(net));
    CHECK(back.name == net.name);
    CHECK(back.nodes == net.nodes);
    CHECK(back.labels == net.labels);
    CHECK(back.default_injection == net.default_injection);
    CHECK(edges_equal(back, net));
    CHECK(back.stored_lengths);
  }
}

TEST_CASE("chimera json round trip keeps coordinates and lengths") {
  const Network net = generate_chimera(2, 2);
  const Network back = network_from_json_text(network_to_json(net));
  CHECK(back.nodes == net.nodes);
  CHECK(back.coords == net.coords);
  CHECK(edges_equal(back, net));
}

TEST_CASE("network json input is rescaled and classified") {
  // lengths in arbitrary units; classes omitted -> derived from cells
  const std::string text = R"({
    "nodes": [0, 1, 8],
    "edges": [
      {"a": 0, "b": 1, "length": 3.0},
      {"a": 1, "b": 8, "length": 6.0}
    ]
  })";
  const Network net = network_from_json_text(text);
  CHECK(net.edges[0].length == 1.0);
  CHECK(net.edges[1].length == 2.0);
  CHECK(net.edges[0].cls == EdgeClass::Internal);
  CHECK(net.edges[1].cls == EdgeClass::External);
}

TEST_CASE("network json input derives lengths from coords when absent") {
  const std::string text = R"({
    "nodes": [0, 1, 2],
    "coords": {"0": [0, 0], "1": [0, 1], "2": [0, 3]},
    "edges": [{"a": 0, "b": 1}, {"a": 1, "b": 2}]
  })";
  const Network net = network_from_json_text(text);
  CHECK(net.edges[0].length == 1.0);
  CHECK(net.edges[1].length == 2.0);
}

TEST_CASE("malformed network json is rejected") {
  CHECK_THROWS_AS(network_from_json_text("not json"), LoadError);
  CHECK_THROWS_AS(network_from_json_text("{\"nodes\": [0]}"), LoadError);
  CHECK_THROWS_AS(network_from_json_text(R"({"nodes":[0,1],"edges":[{"a":0}]})"), LoadError);
  CHECK_THROWS_AS(
      network_from_json_text(R"({"nodes":[0,1],"edges":[{"a":0,"b":1,"length":-2}]})"),
      LoadError);
  // structural defects surface as malformed-network errors
  CHECK_THROWS_AS(
      network_from_json_text(R"({"nodes":[0,0],"edges":[{"a":0,"b":0,"length":1}]})"),
      MalformedNetworkError);
}

TEST_CASE("hamiltonian export carries the index map") {
  const Network net = builtin_network(BuiltinKind::MaxLengths);
  const HamiltonianMatrix ham = build_hamiltonian(net, kDipole);
  const std::string text = network_to_json(net, &ham);
  CHECK(text.find("\"hamiltonian\"") != std::string::npos);
  CHECK(text.find("\"index_to_native\"") != std::string::npos);
  CHECK(text.find("\"entries\"") != std::string::npos);
}

TEST_CASE("trace csv header uses display labels") {
  const Network net = builtin_network(BuiltinKind::MaxLengths);
  const HamiltonianMatrix h = build_hamiltonian(net, kDipole);
  const FidelityTrace tr = fidelity_trace(h, localized_state(8, 0), 5);
  std::ostringstream ss;
  trace_to_csv(ss, tr, net);
  const auto lines = lines_of(ss.str());
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "time,f_3,f_7,f_15,f_11,f_27,f_31,f_23,f_19");
  CHECK(lines[1].rfind("0,1,", 0) == 0);  // t = 0: all fidelity on the injection site
}

TEST_CASE("trace json embeds run metadata") {
  const Network net = builtin_network(BuiltinKind::MinMax);
  const HamiltonianMatrix h = build_hamiltonian(net, kDipole);
  const FidelityTrace tr = fidelity_trace(h, superposition_state(8), 5);
  const RunMeta meta{net.name, "dipole", tr.initial, 1.0, j_min(h), tr.t_max, 5};
  const std::string text = trace_to_json(tr, net, meta);
  CHECK(text.find("\"network\": \"min-max\"") != std::string::npos);
  CHECK(text.find("\"coupling\": \"dipole\"") != std::string::npos);
  CHECK(text.find("\"initial\": \"superposition\"") != std::string::npos);
  CHECK(text.find("\"samples\": 5") != std::string::npos);
}

TEST_CASE("peaks json for found and no-peak outcomes") {
  const Network net = builtin_network(BuiltinKind::MaxLengths);
  const HamiltonianMatrix h = build_hamiltonian(net, kDipole);
  const FidelityTrace tr = fidelity_trace(h, localized_state(8, 0), 801);
  const PeakReport report = find_peaks(tr, tr.initial_site);
  const std::string text = peaks_to_json(report, per_node_peaks(tr), net);
  CHECK(text.find("\"found\": true") != std::string::npos);
  CHECK(text.find("\"node_max\": 7") != std::string::npos);  // label of canonical 1
  CHECK(text.find("\"excluded\": 3") != std::string::npos);
  CHECK(text.find("\"per_node\"") != std::string::npos);

  FidelityTrace flat;
  flat.n = 2;
  flat.t_max = 1.0;
  for (int k = 0; k < 10; ++k) {
    flat.times.push_back(k / 9.0);
    flat.fidelities.insert(flat.fidelities.end(), {0.5, 0.5});
  }
  const PeakReport none = find_peaks(flat, std::nullopt);
  const std::string none_text = peaks_to_json(none, per_node_peaks(flat), net);
  CHECK(none_text.find("\"found\": false") != std::string::npos);
}

TEST_CASE("similarity csv has edge rows and diagonal rows") {
  const Network net = builtin_network(BuiltinKind::MidLengths);
  const HamiltonianMatrix h = build_hamiltonian(net, kDipole);
  const FidelityTrace tr = fidelity_trace(h, localized_state(8, 0), 801);
  const SimilarityGrid grid = similarity_grid(net, tr, {TimeSelectorKind::MaxPeak, 0.0});
  std::ostringstream ss;
  similarity_to_csv(ss, grid, net);
  const auto lines = lines_of(ss.str());
  REQUIRE(lines.size() == 1 + 10 + 8);
  CHECK(lines[0] == "a,b,length,sim");
  // edge rows carry 4 fields, diagonal rows 3
  CHECK(std::count(lines[1].begin(), lines[1].end(), ',') == 3);
  CHECK(std::count(lines[11].begin(), lines[11].end(), ',') == 2);
  CHECK(lines[11].rfind("1,1,", 0) == 0);  // first diagonal row: label 1 twice
}

TEST_CASE("geary csv layout") {
  std::vector<GearyResult> table;
  GearyResult r;
  r.c = 0.58;
  r.n_observations = 2000;
  r.edges_used = 1900;
  r.subset = CouplerSubset::External;
  r.parameter = "beta";
  r.strong = true;
  table.push_back(r);
  std::ostringstream ss;
  geary_to_csv(ss, table);
  const auto lines = lines_of(ss.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "parameter,subset,C,n,edges_used,strong_flag");
  CHECK(lines[1] == "beta,external,0.58,2000,1900,1");
}

TEST_CASE("positions csv layout") {
  QubitDataset data;
  for (int id = 0; id < 32; ++id) data.records[id] = {id, 1.0, 2.0, 3.0, 4.0};
  std::ostringstream ss;
  positions_to_csv(ss, position_group_stats(data));
  const auto lines = lines_of(ss.str());
  REQUIRE(lines.size() == 1 + 8 * 4 + 2 * 4);
  CHECK(lines[0] == "position,parameter,count,mean,stddev,q25,median,q75");
  CHECK(lines[1].rfind("0,beta,4,1,", 0) == 0);
  CHECK(lines[33].rfind("0-3,beta,16,1,", 0) == 0);
}
