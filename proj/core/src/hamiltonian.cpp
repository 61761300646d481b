// SPDX-License-Identifier: Apache-2.0

#include "spinnet/hamiltonian.hpp"

#include "spinnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace spinnet {

double coupling_weight(double length, double min_length, const CouplingMode& mode) {
  if (!(mode.j0 > 0.0) || mode.j0 > 1.0) {
    throw std::invalid_argument("coupling_weight: J0 must lie in (0, 1]");
  }
  if (!(min_length > 0.0)) {
    throw std::invalid_argument("coupling_weight: min_length must be positive");
  }
  if (!(length > 0.0)) {
    throw std::invalid_argument("coupling_weight: length must be positive");
  }
  if (length < min_length) {
    throw std::invalid_argument("coupling_weight: length below the network minimum");
  }
  if (mode.law == CouplingLaw::Constant) return mode.j0;
  const double r = min_length / length;
  return mode.j0 * r * r * r;
}

HamiltonianMatrix build_hamiltonian(const Network& net, const CouplingMode& mode) {
  validate(net);
  if (net.edges.empty()) {
    throw MalformedNetworkError("build_hamiltonian: network has no edges");
  }
  HamiltonianMatrix h;
  h.indexmap = remap(net);
  h.n = net.size();
  h.entries.assign(static_cast<size_t>(h.n) * h.n, 0.0);

  double min_len = std::numeric_limits<double>::infinity();
  for (const auto& e : net.edges) min_len = std::min(min_len, e.length);

  for (const auto& e : net.edges) {
    const int i = h.indexmap.forward.at(e.a);
    const int j = h.indexmap.forward.at(e.b);
    const double w = coupling_weight(e.length, min_len, mode);
    h.at(i, j) = w;
    h.at(j, i) = w;
  }
  return h;
}

double j_min(const HamiltonianMatrix& h) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < h.n; ++i) {
    for (int j = i + 1; j < h.n; ++j) {
      const double w = std::abs(h.at(i, j));
      if (w > 0.0) best = std::min(best, w);
    }
  }
  if (!std::isfinite(best)) {
    throw Error("j_min: Hamiltonian has no nonzero coupling");
  }
  return best;
}

}  // namespace spinnet
