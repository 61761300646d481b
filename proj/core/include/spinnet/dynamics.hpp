// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spinnet/hamiltonian.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace spinnet {

/// State vector over the single-excitation site basis {|i>}: amplitude i is
/// the amplitude of the excitation being localised at node i.
struct QuantumState {
  std::vector<std::complex<double>> amplitudes;

  int size() const { return static_cast<int>(amplitudes.size()); }
  double norm() const;
};

/// Eigendecomposition of a real symmetric Hamiltonian: eigenvalues ascending,
/// eigenvectors orthonormal as the columns of a row-major n x n matrix.
struct Spectrum {
  int n = 0;
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;  ///< row-major; column k is eigenvector k

  double vec(int row, int k) const { return eigenvectors[static_cast<size_t>(row) * n + k]; }
};

/// Sampled fidelities f_i(t) = |<i|Psi(t)>|^2 on a uniform time grid over
/// [0, t_max] with t_max = 1/J_min.
struct FidelityTrace {
  int n = 0;                        ///< node count
  std::vector<double> times;        ///< S sample times, 0 .. t_max inclusive
  std::vector<double> fidelities;   ///< row-major S x n
  std::string initial;              ///< "localized:<site>" | "superposition" | "custom"
  std::optional<int> initial_site;  ///< canonical site for localized runs
  double t_max = 0.0;

  int samples() const { return static_cast<int>(times.size()); }
  double f(int sample, int node) const {
    return fidelities[static_cast<size_t>(sample) * n + node];
  }
};

/// |site>: the excitation localised at one node.
QuantumState localized_state(int n, int site);

/// Equal superposition of all single-excitation states, amplitude 1/sqrt(n).
QuantumState superposition_state(int n);

/// Deterministic cyclic Jacobi diagonalisation. Sweeps run in a fixed
/// row-major order until the off-diagonal norm falls below 1e-12 * ||H||_F,
/// so identical inputs give bit-identical spectra. Requires exact symmetry.
Spectrum eigendecompose(const HamiltonianMatrix& h);

/// Exact propagation by eigen-expansion (hbar = 1):
///   Psi(t) = sum_k exp(-i E_k t) (v_k . psi0) v_k.
/// No stepping error accumulates; t may be negative.
QuantumState evolve(const Spectrum& spec, const QuantumState& psi0, double t);

/// Samples f_i(t) on `samples` uniform times over [0, 1/j_min(h)].
FidelityTrace fidelity_trace(const HamiltonianMatrix& h, const QuantumState& psi0,
                             int samples);

/// Classical fixed-step 4th-order Runge-Kutta integration of
/// i dPsi/dt = H Psi, used as an independent verification oracle for
/// evolve(). Requires t >= 0 and step > 0.
QuantumState rk4_evolve(const HamiltonianMatrix& h, const QuantumState& psi0,
                        double t, double step);

/// <Psi|H|Psi>, conserved under closed-system evolution.
double energy_expectation(const HamiltonianMatrix& h, const QuantumState& psi);

}  // namespace spinnet
