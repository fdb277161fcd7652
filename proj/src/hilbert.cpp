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

#include "fiberlink/hilbert.hpp"

#include "fiberlink/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace fiberlink {

namespace {

constexpr std::array<Level, 3> kLevels{Level::g0, Level::g1, Level::e};

int& photon_slot(BasisState& s, Mode mode) {
  switch (mode) {
    case Mode::cavity_a:
      return s.na;
    case Mode::fiber:
      return s.nf;
    case Mode::cavity_b:
      break;
  }
  return s.nb;
}

Level& level_slot(BasisState& s, Atom atom) { return atom == Atom::a ? s.qa : s.qb; }

}  // namespace

char level_char(Level level) noexcept {
  switch (level) {
    case Level::g0:
      return '0';
    case Level::g1:
      return '1';
    case Level::e:
      break;
  }
  return 'e';
}

int BasisState::excitation() const noexcept {
  return (qa == Level::e ? 1 : 0) + (qb == Level::e ? 1 : 0) + na + nf + nb;
}

int BasisState::photons(Mode mode) const noexcept {
  switch (mode) {
    case Mode::cavity_a:
      return na;
    case Mode::fiber:
      return nf;
    case Mode::cavity_b:
      break;
  }
  return nb;
}

std::string BasisState::label() const {
  std::string out = "|";
  out += level_char(qa);
  out += level_char(qb);
  out += ">|";
  out += std::to_string(na);
  out += std::to_string(nf);
  out += std::to_string(nb);
  out += ">";
  return out;
}

Basis::Basis(int max_excitation) : max_excitation_(max_excitation) {
  if (max_excitation < 0) {
    throw DomainError("max_excitation must be non-negative");
  }
  // Lexicographic in (qA, qB, nA, nF, nB); per-mode cap follows from the total cap.
  for (Level qa : kLevels) {
    for (Level qb : kLevels) {
      for (int na = 0; na <= max_excitation; ++na) {
        for (int nf = 0; nf <= max_excitation; ++nf) {
          for (int nb = 0; nb <= max_excitation; ++nb) {
            BasisState s{qa, qb, na, nf, nb};
            if (s.excitation() <= max_excitation) {
              index_.emplace(s, states_.size());
              states_.push_back(s);
            }
          }
        }
      }
    }
  }
}

std::optional<std::size_t> Basis::find(const BasisState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t Basis::index_of(const BasisState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) {
    throw std::out_of_range("state " + s.label() + " not in basis");
  }
  return it->second;
}

Vector Basis::ket(const BasisState& s) const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(size()));
  v(static_cast<Eigen::Index>(index_of(s))) = 1.0;
  return v;
}

BasisPtr build_basis(int max_excitation) { return std::make_shared<const Basis>(max_excitation); }

Operator::Operator(BasisPtr basis, Matrix matrix) : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  if (!basis_) {
    throw ShapeError("operator requires a basis");
  }
  const auto n = static_cast<Eigen::Index>(basis_->size());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw ShapeError("operator matrix is " + std::to_string(matrix_.rows()) + "x" +
                     std::to_string(matrix_.cols()) + ", basis has " + std::to_string(n) + " states");
  }
  if (!matrix_.allFinite()) {
    throw NumericalError("operator has non-finite entries");
  }
}

Operator Operator::zero(BasisPtr basis) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  return Operator(std::move(basis), Matrix::Zero(n, n));
}

Operator Operator::identity(BasisPtr basis) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  return Operator(std::move(basis), Matrix::Identity(n, n));
}

Operator Operator::adjoint() const { return Operator(basis_, matrix_.adjoint()); }

bool Operator::is_hermitian(double tol) const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Vector Operator::apply(const Vector& v) const {
  if (v.size() != matrix_.cols()) {
    throw ShapeError("vector length does not match operator dimension");
  }
  return matrix_ * v;
}

Operator& Operator::operator+=(const Operator& rhs) {
  require_same_basis(*this, rhs);
  matrix_ += rhs.matrix_;
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  require_same_basis(*this, rhs);
  matrix_ -= rhs.matrix_;
  return *this;
}

Operator& Operator::operator*=(Complex s) {
  matrix_ *= s;
  return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  require_same_basis(lhs, rhs);
  return Operator(lhs.basis_, lhs.matrix_ * rhs.matrix_);
}

void require_same_basis(const Operator& lhs, const Operator& rhs) {
  if (lhs.basis() == rhs.basis()) {
    return;
  }
  if (lhs.basis()->max_excitation() != rhs.basis()->max_excitation()) {
    throw ShapeError("operators live on bases with different truncations");
  }
}

Operator mode_annihilator(const BasisPtr& basis, Mode mode) {
  Operator op = Operator::zero(basis);
  Matrix m = op.matrix();
  for (std::size_t col = 0; col < basis->size(); ++col) {
    BasisState s = (*basis)[col];
    const int n = s.photons(mode);
    if (n == 0) {
      continue;
    }
    photon_slot(s, mode) = n - 1;
    if (auto row = basis->find(s)) {
      m(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) = std::sqrt(static_cast<double>(n));
    }
  }
  return Operator(basis, std::move(m));
}

Operator mode_creator(const BasisPtr& basis, Mode mode) { return mode_annihilator(basis, mode).adjoint(); }

Operator number_operator(const BasisPtr& basis, Mode mode) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = static_cast<double>((*basis)[static_cast<std::size_t>(i)].photons(mode));
  }
  return Operator(basis, std::move(m));
}

Operator atomic_transition(const BasisPtr& basis, Atom atom, Level to, Level from) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t col = 0; col < basis->size(); ++col) {
    BasisState s = (*basis)[col];
    if (s.level(atom) != from) {
      continue;
    }
    level_slot(s, atom) = to;
    if (auto row = basis->find(s)) {
      m(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) = 1.0;
    }
  }
  return Operator(basis, std::move(m));
}

Operator excitation_operator(const BasisPtr& basis) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = static_cast<double>((*basis)[static_cast<std::size_t>(i)].excitation());
  }
  return Operator(basis, std::move(m));
}

Operator excitation_block_projector(const BasisPtr& basis, int excitation) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if ((*basis)[static_cast<std::size_t>(i)].excitation() == excitation) {
      m(i, i) = 1.0;
    }
  }
  return Operator(basis, std::move(m));
}

}  // namespace fiberlink
