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

#include "fiberlink/observables.hpp"

#include "fiberlink/errors.hpp"

#include <Eigen/Eigenvalues>

#include <numbers>

namespace fiberlink {

namespace {

// <psi| rho |psi> for a two-term atomic superposition c1|q1> + c2|q2> tensored with
// a fixed photon configuration.
double two_term_expectation(const DensityMatrix& rho, const BasisState& s1, double c1, const BasisState& s2,
                            double c2) {
  const auto& basis = *rho.basis();
  const auto i = basis.find(s1);
  const auto j = basis.find(s2);
  if (!i || !j) {
    return 0.0;
  }
  const auto& m = rho.matrix();
  const auto a = static_cast<Eigen::Index>(*i);
  const auto b = static_cast<Eigen::Index>(*j);
  const Complex value = c1 * c1 * m(a, a) + c2 * c2 * m(b, b) + c1 * c2 * (m(a, b) + m(b, a));
  return value.real();
}

double diagonal(const DensityMatrix& rho, const BasisState& s) {
  const auto i = rho.basis()->find(s);
  return i ? rho.matrix()(static_cast<Eigen::Index>(*i), static_cast<Eigen::Index>(*i)).real() : 0.0;
}

constexpr double kHalfRoot = std::numbers::sqrt2 / 2.0;

}  // namespace

DensityMatrix::DensityMatrix(BasisPtr basis, Matrix matrix) : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  if (!basis_) {
    throw ShapeError("density matrix requires a basis");
  }
  const auto n = static_cast<Eigen::Index>(basis_->size());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw ShapeError("density matrix dimension does not match basis");
  }
}

DensityMatrix DensityMatrix::pure(BasisPtr basis, const Vector& ket) {
  const double norm = ket.norm();
  if (!(norm > 0.0)) {
    throw DomainError("cannot build a pure state from a zero vector");
  }
  const Vector unit = ket / norm;
  Matrix m = unit * unit.adjoint();
  return DensityMatrix(std::move(basis), std::move(m));
}

DensityMatrix DensityMatrix::pure(BasisPtr basis, const BasisState& state) {
  Vector ket = basis->ket(state);
  return pure(std::move(basis), ket);
}

double DensityMatrix::trace_error() const { return std::abs(matrix_.trace() - 1.0); }

double DensityMatrix::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix h = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_valid(double tol) const {
  return matrix_.allFinite() && hermiticity_error() <= tol && trace_error() <= tol && min_eigenvalue() >= -tol;
}

DensityMatrix DensityMatrix::hermitized() const {
  return DensityMatrix(basis_, 0.5 * (matrix_ + matrix_.adjoint()));
}

double fidelity_t(const DensityMatrix& rho) { return zero_subspace_populations(rho).pt; }

double traced_fidelity_t(const DensityMatrix& rho) {
  double total = 0.0;
  for (int na = 0; na <= 1; ++na) {
    for (int nf = 0; nf <= 1; ++nf) {
      for (int nb = 0; nb <= 1; ++nb) {
        const BasisState s01{Level::g0, Level::g1, na, nf, nb};
        const BasisState s10{Level::g1, Level::g0, na, nf, nb};
        total += two_term_expectation(rho, s01, kHalfRoot, s10, kHalfRoot);
      }
    }
  }
  return total;
}

ZeroSubspacePopulations zero_subspace_populations(const DensityMatrix& rho) {
  const BasisState s01{Level::g0, Level::g1, 0, 0, 0};
  const BasisState s10{Level::g1, Level::g0, 0, 0, 0};
  return {
      diagonal(rho, {Level::g0, Level::g0, 0, 0, 0}),
      two_term_expectation(rho, s01, kHalfRoot, s10, -kHalfRoot),
      two_term_expectation(rho, s01, kHalfRoot, s10, kHalfRoot),
      diagonal(rho, {Level::g1, Level::g1, 0, 0, 0}),
  };
}

ObservableRecord observe(const DensityMatrix& rho) {
  const auto pops = zero_subspace_populations(rho);
  return {pops.p00, pops.ps, pops.pt, pops.p11, pops.pt, rho.trace_error(), rho.min_eigenvalue()};
}

}  // namespace fiberlink
