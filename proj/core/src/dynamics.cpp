// SPDX-License-Identifier: Apache-2.0

#include "spinnet/dynamics.hpp"

#include "spinnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spinnet {

double QuantumState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

QuantumState localized_state(int n, int site) {
  if (n < 1) throw std::invalid_argument("localized_state: dimension must be >= 1");
  if (site < 0 || site >= n) {
    throw std::out_of_range("localized_state: site " + std::to_string(site) +
                            " outside [0, " + std::to_string(n) + ")");
  }
  QuantumState psi;
  psi.amplitudes.assign(static_cast<size_t>(n), {0.0, 0.0});
  psi.amplitudes[static_cast<size_t>(site)] = {1.0, 0.0};
  return psi;
}

QuantumState superposition_state(int n) {
  if (n < 1) throw std::invalid_argument("superposition_state: dimension must be >= 1");
  QuantumState psi;
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  psi.amplitudes.assign(static_cast<size_t>(n), {a, 0.0});
  return psi;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double x = a[static_cast<size_t>(p) * n + q];
      s += x * x;
    }
  }
  return std::sqrt(2.0 * s);
}

}  // namespace

Spectrum eigendecompose(const HamiltonianMatrix& h) {
  const int n = h.n;
  if (n < 1 || h.entries.size() != static_cast<size_t>(n) * n) {
    throw std::invalid_argument("eigendecompose: bad matrix dimensions");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (h.at(i, j) != h.at(j, i)) {
        throw std::invalid_argument("eigendecompose: matrix is not symmetric");
      }
    }
  }

  std::vector<double> a = h.entries;
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

  double fro = 0.0;
  for (double x : a) fro += x * x;
  fro = std::sqrt(fro);
  const double tol = 1e-12 * fro;

  auto idx = [n](int r, int c) { return static_cast<size_t>(r) * n + c; };

  if (fro > 0.0) {
    // Cyclic Jacobi with a fixed row-major sweep order; skipping rotations
    // below tol/n^2 cannot leave more than tol of off-diagonal mass behind.
    const double floor = tol / (static_cast<double>(n) * n);
    const int max_sweeps = 64;
    int sweep = 0;
    while (off_diagonal_norm(a, n) > tol) {
      if (++sweep > max_sweeps) {
        throw Error("eigendecompose: Jacobi iteration did not converge");
      }
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double apq = a[idx(p, q)];
          if (std::abs(apq) <= floor) continue;
          const double theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
          const double t =
              (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;

          const double app = a[idx(p, p)];
          const double aqq = a[idx(q, q)];
          a[idx(p, p)] = app - t * apq;
          a[idx(q, q)] = aqq + t * apq;
          a[idx(p, q)] = 0.0;
          a[idx(q, p)] = 0.0;
          for (int r = 0; r < n; ++r) {
            if (r == p || r == q) continue;
            const double arp = a[idx(r, p)];
            const double arq = a[idx(r, q)];
            a[idx(r, p)] = c * arp - s * arq;
            a[idx(p, r)] = a[idx(r, p)];
            a[idx(r, q)] = s * arp + c * arq;
            a[idx(q, r)] = a[idx(r, q)];
          }
          for (int r = 0; r < n; ++r) {
            const double vrp = v[idx(r, p)];
            const double vrq = v[idx(r, q)];
            v[idx(r, p)] = c * vrp - s * vrq;
            v[idx(r, q)] = s * vrp + c * vrq;
          }
        }
      }
    }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a[idx(x, x)] < a[idx(y, y)]; });

  Spectrum spec;
  spec.n = n;
  spec.eigenvalues.resize(static_cast<size_t>(n));
  spec.eigenvectors.resize(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    spec.eigenvalues[static_cast<size_t>(k)] = a[idx(order[k], order[k])];
    for (int r = 0; r < n; ++r) {
      spec.eigenvectors[idx(r, k)] = v[idx(r, order[k])];
    }
  }
  // Fix each eigenvector's sign so the largest-magnitude component is
  // non-negative; repeated runs are then bit-identical.
  for (int k = 0; k < n; ++k) {
    int imax = 0;
    double best = -1.0;
    for (int r = 0; r < n; ++r) {
      const double m = std::abs(spec.eigenvectors[idx(r, k)]);
      if (m > best) {
        best = m;
        imax = r;
      }
    }
    if (spec.eigenvectors[idx(imax, k)] < 0.0) {
      for (int r = 0; r < n; ++r) spec.eigenvectors[idx(r, k)] = -spec.eigenvectors[idx(r, k)];
    }
  }
  return spec;
}

QuantumState evolve(const Spectrum& spec, const QuantumState& psi0, double t) {
  const int n = spec.n;
  if (psi0.size() != n) {
    throw std::invalid_argument("evolve: state dimension does not match the spectrum");
  }
  std::vector<std::complex<double>> coeff(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::complex<double> c{0.0, 0.0};
    for (int i = 0; i < n; ++i) c += spec.vec(i, k) * psi0.amplitudes[static_cast<size_t>(i)];
    coeff[static_cast<size_t>(k)] = std::polar(1.0, -spec.eigenvalues[static_cast<size_t>(k)] * t) * c;
  }
  QuantumState out;
  out.amplitudes.assign(static_cast<size_t>(n), {0.0, 0.0});
  for (int i = 0; i < n; ++i) {
    std::complex<double> s{0.0, 0.0};
    for (int k = 0; k < n; ++k) s += coeff[static_cast<size_t>(k)] * spec.vec(i, k);
    out.amplitudes[static_cast<size_t>(i)] = s;
  }
  return out;
}

FidelityTrace fidelity_trace(const HamiltonianMatrix& h, const QuantumState& psi0, int samples) {
  if (samples < 2) throw std::invalid_argument("fidelity_trace: need at least 2 samples");
  if (psi0.size() != h.n) {
    throw std::invalid_argument("fidelity_trace: state dimension does not match the Hamiltonian");
  }
  const double t_max = 1.0 / j_min(h);
  const Spectrum spec = eigendecompose(h);

  FidelityTrace trace;
  trace.n = h.n;
  trace.t_max = t_max;
  trace.times.resize(static_cast<size_t>(samples));
  trace.fidelities.resize(static_cast<size_t>(samples) * h.n);

  // Describe the initial state for downstream consumers.
  trace.initial = "custom";
  for (int i = 0; i < h.n; ++i) {
    if (std::abs(std::norm(psi0.amplitudes[static_cast<size_t>(i)]) - 1.0) < 1e-12) {
      trace.initial = "localized:" + std::to_string(i);
      trace.initial_site = i;
      break;
    }
  }
  if (!trace.initial_site) {
    const double u = 1.0 / std::sqrt(static_cast<double>(h.n));
    bool uniform = true;
    for (const auto& a : psi0.amplitudes) {
      if (std::abs(a.real() - u) > 1e-12 || std::abs(a.imag()) > 1e-12) {
        uniform = false;
        break;
      }
    }
    if (uniform) trace.initial = "superposition";
  }

  for (int k = 0; k < samples; ++k) {
    const double t = t_max * static_cast<double>(k) / static_cast<double>(samples - 1);
    trace.times[static_cast<size_t>(k)] = t;
    const QuantumState psi = evolve(spec, psi0, t);
    for (int i = 0; i < h.n; ++i) {
      trace.fidelities[static_cast<size_t>(k) * h.n + i] =
          std::norm(psi.amplitudes[static_cast<size_t>(i)]);
    }
  }
  return trace;
}

namespace {

void apply_minus_i_h(const HamiltonianMatrix& h, const std::vector<std::complex<double>>& in,
                     std::vector<std::complex<double>>& out) {
  const int n = h.n;
  for (int i = 0; i < n; ++i) {
    std::complex<double> s{0.0, 0.0};
    for (int j = 0; j < n; ++j) s += h.at(i, j) * in[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = std::complex<double>(0.0, -1.0) * s;
  }
}

}  // namespace

QuantumState rk4_evolve(const HamiltonianMatrix& h, const QuantumState& psi0, double t,
                        double step) {
  if (!(step > 0.0)) throw std::invalid_argument("rk4_evolve: step must be positive");
  if (t < 0.0) throw std::invalid_argument("rk4_evolve: t must be non-negative");
  if (psi0.size() != h.n) {
    throw std::invalid_argument("rk4_evolve: state dimension does not match the Hamiltonian");
  }
  const size_t n = static_cast<size_t>(h.n);
  std::vector<std::complex<double>> y = psi0.amplitudes;
  std::vector<std::complex<double>> k1(n), k2(n), k3(n), k4(n), tmp(n);

  const long full = static_cast<long>(t / step);
  const double rest = t - static_cast<double>(full) * step;

  auto do_step = [&](double dt) {
    apply_minus_i_h(h, y, k1);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    apply_minus_i_h(h, tmp, k2);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    apply_minus_i_h(h, tmp, k3);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * k3[i];
    apply_minus_i_h(h, tmp, k4);
    for (size_t i = 0; i < n; ++i) {
      y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  };

  for (long s = 0; s < full; ++s) do_step(step);
  if (rest > 1e-15 * std::max(1.0, t)) do_step(rest);

  QuantumState out;
  out.amplitudes = std::move(y);
  return out;
}

double energy_expectation(const HamiltonianMatrix& h, const QuantumState& psi) {
  if (psi.size() != h.n) {
    throw std::invalid_argument("energy_expectation: dimension mismatch");
  }
  std::complex<double> e{0.0, 0.0};
  for (int i = 0; i < h.n; ++i) {
    std::complex<double> row{0.0, 0.0};
    for (int j = 0; j < h.n; ++j) row += h.at(i, j) * psi.amplitudes[static_cast<size_t>(j)];
    e += std::conj(psi.amplitudes[static_cast<size_t>(i)]) * row;
  }
  return e.real();
}

}  // namespace spinnet
