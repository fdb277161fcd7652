// Copyright 2026 The fiberlink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fiberlink/dynamics.hpp"

#include "fiberlink/errors.hpp"

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

namespace fiberlink {

Vector vectorize(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix unvectorize(const Vector& v, Eigen::Index dim) {
  if (v.size() != dim * dim) {
    throw ShapeError("vectorized state has wrong length");
  }
  return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

namespace {

Matrix assemble(const Operator& h, const LindbladSet& jumps) {
  const auto n = static_cast<Eigen::Index>(h.dimension());
  const Matrix id = Matrix::Identity(n, n);
  const Matrix& hm = h.matrix();
  const Complex i{0.0, 1.0};

  // i(rho H - H rho)
  Matrix out = i * (Eigen::kroneckerProduct(hm.transpose(), id) - Eigen::kroneckerProduct(id, hm)).eval();
  for (const auto& l : jumps.ops()) {
    const Matrix& lm = l.matrix();
    out += Eigen::kroneckerProduct(lm.conjugate(), lm);
  }
  const Matrix k = jumps.decay_generator().matrix();
  out -= 0.5 * (Eigen::kroneckerProduct(id, k) + Eigen::kroneckerProduct(k.transpose(), id)).eval();
  return out;
}

}  // namespace

Liouvillian::Liouvillian(Operator hamiltonian, LindbladSet jumps)
    : hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)) {
  for (const auto& l : jumps_.ops()) {
    require_same_basis(hamiltonian_, l);
  }
  matrix_ = assemble(hamiltonian_, jumps_);
}

Matrix Liouvillian::apply(const Matrix& rho) const {
  return unvectorize(matrix_ * vectorize(rho), state_dimension());
}

Liouvillian build_liouvillian(const Operator& hamiltonian, const LindbladSet& jumps) {
  return Liouvillian(hamiltonian, jumps);
}

Liouvillian build_liouvillian(const BasisPtr& basis, const SystemParams& params) {
  return Liouvillian(hamiltonian(basis, params), lindblad_set(basis, params));
}

Propagator::Propagator(const Liouvillian& liouvillian, double step) : step_(step) {
  if (!std::isfinite(step) || step < 0.0) {
    throw DomainError("propagator step must be finite and non-negative");
  }
  matrix_ = (step * liouvillian.matrix()).exp();
  if (!matrix_.allFinite()) {
    throw NumericalError("matrix exponential produced non-finite entries for step " + std::to_string(step));
  }
}

DensityMatrix Propagator::apply(const DensityMatrix& rho) const {
  const auto n = static_cast<Eigen::Index>(rho.basis()->size());
  return DensityMatrix(rho.basis(), unvectorize(apply(vectorize(rho.matrix())), n));
}

std::vector<double> uniform_grid(double t_max, std::size_t n_records) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw DomainError("t_max must be positive");
  }
  if (n_records < 2) {
    throw DomainError("a time grid needs at least two records");
  }
  std::vector<double> grid(n_records);
  const double denom = static_cast<double>(n_records - 1);
  for (std::size_t k = 0; k < n_records; ++k) {
    grid[k] = t_max * static_cast<double>(k) / denom;
  }
  return grid;
}

namespace {

double grid_step(std::span<const double> grid, double tolerance) {
  if (grid.empty()) {
    throw DomainError("time grid is empty");
  }
  if (std::abs(grid.front()) > 0.0) {
    throw DomainError("time grid must start at t = 0");
  }
  if (grid.size() == 1) {
    return 0.0;
  }
  const double step = grid[1] - grid[0];
  if (!(step > 0.0)) {
    throw DomainError("time grid must be strictly increasing");
  }
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double expected = step * static_cast<double>(k);
    if (std::abs(grid[k] - expected) > tolerance * std::max(1.0, expected)) {
      std::ostringstream msg;
      msg << "time grid is not uniform at index " << k << " (t = " << grid[k] << ", expected " << expected << ")";
      throw DomainError(msg.str());
    }
  }
  return step;
}

void require_finite(const DensityMatrix& rho, double t) {
  if (!rho.matrix().allFinite()) {
    std::ostringstream msg;
    msg << "density matrix became non-finite at t = " << t;
    throw NumericalError(msg.str());
  }
}

}  // namespace

TimeSeries propagate(const DensityMatrix& rho0, const Liouvillian& liouvillian, std::span<const double> t_grid,
                     const PropagateOptions& options) {
  if (rho0.basis()->size() != liouvillian.basis()->size()) {
    throw ShapeError("initial state and Liouvillian use different bases");
  }
  const double step = grid_step(t_grid, options.grid_tolerance);

  TimeSeries series;
  series.times.assign(t_grid.begin(), t_grid.end());
  series.records.reserve(t_grid.size());

  const auto n = liouvillian.state_dimension();
  DensityMatrix rho = rho0;
  const auto record = [&](double t) {
    require_finite(rho, t);
    rho = rho.hermitized();
    series.records.push_back(observe(rho));
    if (options.keep_states) {
      series.states.push_back(rho);
    }
  };

  record(t_grid.front());
  if (t_grid.size() > 1) {
    const Propagator prop(liouvillian, step);
    Vector v = vectorize(rho.matrix());
    for (std::size_t k = 1; k < t_grid.size(); ++k) {
      v = prop.apply(v);
      rho = DensityMatrix(rho.basis(), unvectorize(v, n));
      record(t_grid[k]);
      v = vectorize(rho.matrix());
    }
  }
  series.final_state = rho;
  return series;
}

DensityMatrix evolve_to(const DensityMatrix& rho0, const Liouvillian& liouvillian, double t, double step) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("evolution time must be finite and non-negative");
  }
  if (!(step > 0.0)) {
    throw DomainError("step must be positive");
  }
  const auto n = liouvillian.state_dimension();
  const auto full_steps = static_cast<std::size_t>(std::floor(t / step + 1e-9));
  const double remainder = t - static_cast<double>(full_steps) * step;

  Vector v = vectorize(rho0.matrix());
  if (full_steps > 0) {
    const Propagator prop(liouvillian, step);
    for (std::size_t k = 0; k < full_steps; ++k) {
      v = prop.apply(v);
    }
  }
  if (remainder > 1e-12 * std::max(1.0, t)) {
    v = Propagator(liouvillian, remainder).apply(v);
  }
  DensityMatrix rho(rho0.basis(), unvectorize(v, n));
  require_finite(rho, t);
  return rho.hermitized();
}

namespace {

struct NullSpace {
  std::size_t dimension;
  Vector smallest;
};

NullSpace null_space(const Liouvillian& liouvillian) {
  Eigen::BDCSVD<Matrix> svd(liouvillian.matrix(), Eigen::ComputeFullV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double cutoff = kNullThreshold * sigma(0);
  std::size_t dim = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) < cutoff) {
      ++dim;
    }
  }
  return {dim, svd.matrixV().col(sigma.size() - 1)};
}

}  // namespace

std::size_t null_space_dimension(const Liouvillian& liouvillian) { return null_space(liouvillian).dimension; }

DensityMatrix steady_state(const Liouvillian& liouvillian) {
  const auto ns = null_space(liouvillian);
  if (ns.dimension > 1) {
    throw DegenerateSteadyState(ns.dimension);
  }
  if (ns.dimension == 0) {
    throw NumericalError("Liouvillian has no numerically null direction");
  }
  Matrix rho = unvectorize(ns.smallest, liouvillian.state_dimension());
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-300) {
    throw NumericalError("null vector has zero trace");
  }
  rho /= tr;
  return DensityMatrix(liouvillian.basis(), 0.5 * (rho + rho.adjoint()));
}

}  // namespace fiberlink
