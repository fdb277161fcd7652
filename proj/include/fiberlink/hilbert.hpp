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

#pragma once

#include <Eigen/Dense>

#include <array>
#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fiberlink {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Atomic level of a Lambda atom. Declaration order is the canonical order.
enum class Level : unsigned char { g0, g1, e };
enum class Atom : unsigned char { a, b };
enum class Mode : unsigned char { cavity_a, fiber, cavity_b };

/// Product state |qA qB>|nA nF nB>.
struct BasisState {
  Level qa = Level::g0;
  Level qb = Level::g0;
  int na = 0;
  int nf = 0;
  int nb = 0;

  int excitation() const noexcept;
  Level level(Atom atom) const noexcept { return atom == Atom::a ? qa : qb; }
  int photons(Mode mode) const noexcept;

  /// Display form, e.g. "|e1>|000>".
  std::string label() const;

  auto operator<=>(const BasisState&) const = default;
};

/// Ordered excitation-truncated product basis. Immutable once built.
class Basis {
 public:
  explicit Basis(int max_excitation);

  int max_excitation() const noexcept { return max_excitation_; }
  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<BasisState>& states() const noexcept { return states_; }
  const BasisState& operator[](std::size_t i) const { return states_.at(i); }

  std::optional<std::size_t> find(const BasisState& s) const;
  /// Throws std::out_of_range when the state is not in the basis.
  std::size_t index_of(const BasisState& s) const;

  /// Unit vector for a member state.
  Vector ket(const BasisState& s) const;

 private:
  int max_excitation_;
  std::vector<BasisState> states_;
  std::map<BasisState, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const Basis>;

BasisPtr build_basis(int max_excitation);

/// Dense operator bound to a basis.
class Operator {
 public:
  Operator(BasisPtr basis, Matrix matrix);
  static Operator zero(BasisPtr basis);
  static Operator identity(BasisPtr basis);

  const BasisPtr& basis() const noexcept { return basis_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t dimension() const noexcept { return basis_->size(); }

  Operator adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;
  Vector apply(const Vector& v) const;

  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);
  Operator& operator*=(Complex s);

  friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
  friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
  friend Operator operator*(Operator lhs, Complex s) { return lhs *= s; }
  friend Operator operator*(Complex s, Operator rhs) { return rhs *= s; }
  friend Operator operator*(const Operator& lhs, const Operator& rhs);

 private:
  BasisPtr basis_;
  Matrix matrix_;
};

/// Throws ShapeError unless both operators live on the same basis.
void require_same_basis(const Operator& lhs, const Operator& rhs);

Operator mode_annihilator(const BasisPtr& basis, Mode mode);
Operator mode_creator(const BasisPtr& basis, Mode mode);
Operator number_operator(const BasisPtr& basis, Mode mode);

/// |to><from| on one atom, identity elsewhere.
Operator atomic_transition(const BasisPtr& basis, Atom atom, Level to, Level from);

/// Diagonal total-excitation operator.
Operator excitation_operator(const BasisPtr& basis);

/// Projector onto states of a given excitation number.
Operator excitation_block_projector(const BasisPtr& basis, int excitation);

char level_char(Level level) noexcept;

}  // namespace fiberlink
