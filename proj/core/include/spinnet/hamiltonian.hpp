// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spinnet/network.hpp"

#include <vector>

namespace spinnet {

enum class CouplingLaw { Constant, Dipole };

/// Weighting rule for couplers. J0 is the weight of the shortest connection
/// and must lie in (0, 1]; hardware rescales programmed weights into [-1, 1]
/// and we treat the single-sign case.
struct CouplingMode {
  CouplingLaw law = CouplingLaw::Constant;
  double j0 = 1.0;
};

/// N x N real symmetric coupling matrix over the canonical node indexing.
/// The diagonal holds the site biases (all zero here, as the total energy is
/// defined up to a constant); off-diagonal entries are the coupling weights,
/// nonzero exactly where the network has an edge.
struct HamiltonianMatrix {
  int n = 0;
  std::vector<double> entries;  ///< row-major, n*n
  IndexMap indexmap;

  double at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
  double& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
};

/// Weight of a single coupler. Constant mode ignores the length; dipole mode
/// scales as the inverse cube of the length ratio:
///   J = J0 * (min_length / length)^3.
/// Requires length >= min_length > 0 and J0 in (0, 1].
double coupling_weight(double length, double min_length, const CouplingMode& mode);

/// Builds the coupling Hamiltonian of a network: for every edge (a, b),
/// M[i][j] = M[j][i] = coupling_weight(length(a, b)) with i, j the canonical
/// indices of a, b; all diagonal entries are zero.
HamiltonianMatrix build_hamiltonian(const Network& net, const CouplingMode& mode);

/// Smallest nonzero coupling weight in the matrix. Throws on an all-zero
/// matrix.
double j_min(const HamiltonianMatrix& h);

}  // namespace spinnet
