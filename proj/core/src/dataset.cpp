// SPDX-License-Identifier: Apache-2.0

#include "spinnet/dataset.hpp"

#include "spinnet/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spinnet {

double QubitRecord::param(int index) const {
  switch (index) {
    case 0: return beta;
    case 1: return b;
    case 2: return gamma;
    case 3: return eta;
  }
  throw std::out_of_range("QubitRecord::param: index outside [0, 4)");
}

DatasetFormat infer_dataset_format(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot != std::string::npos) {
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    if (ext == "json") return DatasetFormat::Json;
  }
  return DatasetFormat::Csv;
}

namespace {

constexpr const char* kCsvHeader = "qubit_id,beta,b,gamma,eta";

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double parse_number(const std::string& s, const std::string& where, const std::string& field) {
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || s.empty()) {
    throw LoadError(where + ": field '" + field + "' is not numeric: '" + s + "'");
  }
  return value;
}

int parse_id(const std::string& s, const std::string& where) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || s.empty()) {
    throw LoadError(where + ": field 'qubit_id' is not an integer: '" + s + "'");
  }
  return value;
}

void insert_record(QubitDataset& data, QubitRecord rec, int max_qubits,
                   const std::string& where) {
  if (rec.qubit < 0 || rec.qubit >= max_qubits) {
    throw LoadError(where + ": qubit_id " + std::to_string(rec.qubit) + " outside [0, " +
                    std::to_string(max_qubits) + ")");
  }
  const auto [it, inserted] = data.records.emplace(rec.qubit, rec);
  if (!inserted) {
    throw LoadError(where + ": duplicate qubit_id " + std::to_string(rec.qubit));
  }
}

QubitDataset load_csv(std::istream& is, const std::string& path, int max_qubits) {
  QubitDataset data;
  data.source = path;
  std::string line;
  int line_no = 0;
  if (!std::getline(is, line)) {
    throw LoadError(path + ": empty file");
  }
  ++line_no;
  if (trim(line) != kCsvHeader) {
    throw LoadError(path + ":1: malformed header, expected '" + std::string(kCsvHeader) + "'");
  }
  while (std::getline(is, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::string where = path + ":" + std::to_string(line_no);
    const auto fields = split_csv(line);
    if (fields.size() != 5) {
      throw LoadError(where + ": expected 5 fields, got " + std::to_string(fields.size()));
    }
    QubitRecord rec;
    rec.qubit = parse_id(fields[0], where);
    rec.beta = parse_number(fields[1], where, "beta");
    rec.b = parse_number(fields[2], where, "b");
    rec.gamma = parse_number(fields[3], where, "gamma");
    rec.eta = parse_number(fields[4], where, "eta");
    insert_record(data, rec, max_qubits, where);
  }
  if (data.records.empty()) {
    throw LoadError(path + ": no records");
  }
  return data;
}

QubitDataset load_json(std::istream& is, const std::string& path, int max_qubits) {
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(path + ": invalid JSON: " + e.what());
  }
  if (!doc.is_array()) {
    throw LoadError(path + ": expected a JSON array of record objects");
  }
  QubitDataset data;
  data.source = path;
  int index = 0;
  for (const auto& item : doc) {
    const std::string where = path + ": record " + std::to_string(index);
    if (!item.is_object()) throw LoadError(where + ": not an object");
    for (const char* key : {"qubit_id", "beta", "b", "gamma", "eta"}) {
      if (!item.contains(key)) throw LoadError(where + ": missing field '" + key + "'");
      if (!item.at(key).is_number()) {
        throw LoadError(where + ": field '" + std::string(key) + "' is not numeric");
      }
    }
    if (!item.at("qubit_id").is_number_integer()) {
      throw LoadError(where + ": field 'qubit_id' is not an integer");
    }
    QubitRecord rec;
    rec.qubit = item.at("qubit_id").get<int>();
    rec.beta = item.at("beta").get<double>();
    rec.b = item.at("b").get<double>();
    rec.gamma = item.at("gamma").get<double>();
    rec.eta = item.at("eta").get<double>();
    insert_record(data, rec, max_qubits, where);
    ++index;
  }
  if (data.records.empty()) {
    throw LoadError(path + ": no records");
  }
  return data;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

QubitDataset load_dataset(const std::string& path, DatasetFormat format, int max_qubits) {
  std::ifstream is(path);
  if (!is) throw LoadError(path + ": cannot open file");
  return format == DatasetFormat::Csv ? load_csv(is, path, max_qubits)
                                      : load_json(is, path, max_qubits);
}

void save_dataset(const QubitDataset& data, const std::string& path, DatasetFormat format) {
  std::ofstream os(path);
  if (!os) throw LoadError(path + ": cannot open file for writing");
  if (format == DatasetFormat::Csv) {
    os << kCsvHeader << "\n";
    for (const auto& [id, rec] : data.records) {
      os << id << ',' << shortest(rec.beta) << ',' << shortest(rec.b) << ','
         << shortest(rec.gamma) << ',' << shortest(rec.eta) << "\n";
    }
  } else {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& [id, rec] : data.records) {
      doc.push_back({{"qubit_id", id},
                     {"beta", rec.beta},
                     {"b", rec.b},
                     {"gamma", rec.gamma},
                     {"eta", rec.eta}});
    }
    os << doc.dump(2) << "\n";
  }
}

ValidationReport validate_against(const QubitDataset& data, const Network& net) {
  ValidationReport report;
  std::set<NodeId> net_nodes(net.nodes.begin(), net.nodes.end());
  for (const auto& [id, rec] : data.records) {
    if (!net_nodes.count(id)) report.data_not_in_network.push_back(id);
  }
  for (NodeId id : net.nodes) {
    if (!data.records.count(id)) report.network_not_in_data.push_back(id);
  }
  for (const auto& e : net.edges) {
    if (data.records.count(e.a) && data.records.count(e.b)) {
      (e.cls == EdgeClass::Internal ? report.usable_internal_edges
                                    : report.usable_external_edges)++;
    }
  }
  return report;
}

}  // namespace spinnet
