// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spinnet/network.hpp"

#include <map>
#include <string>
#include <vector>

namespace spinnet {

/// Measured single-qubit parameters: inverse temperature beta, bias b,
/// transverse field gain gamma, and noise eta.
struct QubitRecord {
  NodeId qubit = 0;
  double beta = 0.0;
  double b = 0.0;
  double gamma = 0.0;
  double eta = 0.0;

  double param(int index) const;  ///< 0 = beta, 1 = b, 2 = gamma, 3 = eta
};

/// Per-qubit records keyed by native qubit id. Dead qubits are simply absent.
struct QubitDataset {
  std::map<NodeId, QubitRecord> records;
  std::string source;

  int size() const { return static_cast<int>(records.size()); }
};

enum class DatasetFormat { Csv, Json };

/// Picks Json for a ".json" extension, Csv otherwise.
DatasetFormat infer_dataset_format(const std::string& path);

/// Loads a dataset. CSV schema: header `qubit_id,beta,b,gamma,eta`, one row
/// per qubit. JSON: array of {"qubit_id": int, "beta": num, "b": num,
/// "gamma": num, "eta": num}. Rejects non-numeric fields, duplicate ids and
/// ids outside [0, max_qubits) with diagnostics naming the offending row.
QubitDataset load_dataset(const std::string& path, DatasetFormat format,
                          int max_qubits = 2048);

/// Writes a dataset back out; numeric values round-trip exactly.
void save_dataset(const QubitDataset& data, const std::string& path, DatasetFormat format);

struct ValidationReport {
  std::vector<NodeId> data_not_in_network;
  std::vector<NodeId> network_not_in_data;  ///< dead qubits
  long usable_internal_edges = 0;           ///< both endpoints have records
  long usable_external_edges = 0;
};

/// Report-only cross-check of a dataset against a network.
ValidationReport validate_against(const QubitDataset& data, const Network& net);

}  // namespace spinnet
