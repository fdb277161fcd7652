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

#include "doctest.h"

#include "fiberlink/errors.hpp"
#include "fiberlink/hilbert.hpp"
#include "oracles.hpp"

using namespace fiberlink;

namespace {

constexpr Level L0 = Level::g0;
constexpr Level L1 = Level::g1;
constexpr Level Le = Level::e;

Vector ket(const BasisPtr& b, BasisState s) { return b->ket(s); }

}  // namespace

TEST_CASE("zero-excitation basis holds the four atomic ground configurations") {
  const auto basis = build_basis(0);
  REQUIRE(basis->size() == 4);
  CHECK(basis->states()[0] == BasisState{L0, L0, 0, 0, 0});
  CHECK(basis->states()[1] == BasisState{L0, L1, 0, 0, 0});
  CHECK(basis->states()[2] == BasisState{L1, L0, 0, 0, 0});
  CHECK(basis->states()[3] == BasisState{L1, L1, 0, 0, 0});
}

TEST_CASE("basis matches brute-force enumeration") {
  for (int max_exc : {0, 1, 2}) {
    CAPTURE(max_exc);
    const auto basis = build_basis(max_exc);
    const auto expected = oracle::enumerate_states(max_exc, max_exc);
    CHECK(basis->states() == expected);
    for (std::size_t i = 0; i < basis->size(); ++i) {
      CHECK(basis->index_of(basis->states()[i]) == i);
    }
  }
  // 72 tuples with photon numbers in {0,1}, 20 of which have excitation <= 1.
  CHECK(oracle::enumerate_states(5, 1).size() == 72);
  CHECK(oracle::enumerate_states(1, 1).size() == 20);
  CHECK(build_basis(1)->size() == 20);
}

TEST_CASE("canonical ordering starts at |00>|000>") {
  const auto basis = build_basis(1);
  CHECK(basis->index_of({L0, L0, 0, 0, 0}) == 0);
  CHECK_FALSE(basis->find({Le, Le, 0, 0, 0}).has_value());
  CHECK_THROWS_AS(basis->index_of({L0, L0, 1, 1, 0}), std::out_of_range);
  CHECK((*basis)[0].label() == "|00>|000>");
  CHECK(BasisState{Le, L1, 0, 1, 0}.label() == "|e1>|010>");
}

TEST_CASE("negative truncation is rejected") { CHECK_THROWS_AS(build_basis(-1), DomainError); }

TEST_CASE("mode annihilators") {
  const auto b = build_basis(1);
  const auto fiber = mode_annihilator(b, Mode::fiber);
  CHECK((fiber.apply(ket(b, {L0, L0, 0, 1, 0})) - ket(b, {L0, L0, 0, 0, 0})).norm() == 0.0);

  const auto cav_a = mode_annihilator(b, Mode::cavity_a);
  CHECK(cav_a.apply(ket(b, {L0, L0, 0, 0, 0})).norm() == 0.0);

  const Vector one = ket(b, {L0, L0, 1, 0, 0});
  const auto n_a = mode_creator(b, Mode::cavity_a) * cav_a;
  CHECK(one.dot(n_a.apply(one)).real() == doctest::Approx(1.0));
  CHECK((n_a.matrix() - number_operator(b, Mode::cavity_a).matrix()).norm() == 0.0);
}

TEST_CASE("atomic transitions") {
  const auto b = build_basis(1);
  const auto raise = atomic_transition(b, Atom::a, Le, L1);
  CHECK((raise.apply(ket(b, {L1, L1, 0, 0, 0})) - ket(b, {Le, L1, 0, 0, 0})).norm() == 0.0);

  // |10> has atom B in g0, so |0><1|_B annihilates it
  const auto lower_b = atomic_transition(b, Atom::b, L0, L1);
  CHECK(lower_b.apply(ket(b, {L1, L0, 0, 0, 0})).norm() == 0.0);

  const auto decay = atomic_transition(b, Atom::a, L1, Le);
  CHECK((decay.apply(ket(b, {Le, L0, 0, 0, 0})) - ket(b, {L1, L0, 0, 0, 0})).norm() == 0.0);

  // raising out of the truncated space gives zero
  CHECK(raise.apply(ket(b, {L1, L1, 0, 0, 1})).norm() == 0.0);
}

TEST_CASE("excitation operator") {
  const auto b = build_basis(1);
  const auto n = excitation_operator(b);
  const Vector e1 = ket(b, {Le, L1, 0, 0, 0});
  const Vector g11 = ket(b, {L1, L1, 0, 0, 0});
  CHECK(e1.dot(n.apply(e1)).real() == 1.0);
  CHECK(g11.dot(n.apply(g11)).real() == 0.0);
  CHECK(n.matrix().trace().real() == doctest::Approx(16.0));
}

TEST_CASE("operator algebra on the truncated space") {
  const auto b = build_basis(1);
  const auto n = excitation_operator(b);
  const auto zero_block = excitation_block_projector(b, 0);

  for (Mode m : {Mode::cavity_a, Mode::fiber, Mode::cavity_b}) {
    const auto a = mode_annihilator(b, m);
    const auto ad = mode_creator(b, m);
    // [a, a^+] is the identity on the zero-excitation block
    const Matrix comm = (a * ad - ad * a).matrix();
    const Matrix restricted = zero_block.matrix() * comm * zero_block.matrix();
    CHECK((restricted - zero_block.matrix()).norm() < 1e-14);

    const auto num = ad * a;
    CHECK((n * num - num * n).matrix().norm() == 0.0);

    // a lowers the excitation number by exactly one whenever it acts
    for (std::size_t k = 0; k < b->size(); ++k) {
      const Vector image = a.apply(b->ket((*b)[k]));
      if (image.norm() == 0.0) {
        continue;
      }
      const double exc = (*b)[k].excitation();
      CHECK((n.apply(image) - (exc - 1.0) * image).norm() < 1e-14);
    }
  }
  for (Atom atom : {Atom::a, Atom::b}) {
    const auto pe = atomic_transition(b, atom, Le, Le);
    CHECK((n * pe - pe * n).matrix().norm() == 0.0);
  }
}

TEST_CASE("operators reject mismatched shapes") {
  const auto b1 = build_basis(1);
  const auto b0 = build_basis(0);
  CHECK_THROWS_AS(Operator(b1, Matrix::Zero(3, 3)), ShapeError);
  CHECK_THROWS_AS(Operator::zero(b1) + Operator::zero(b0), ShapeError);
}
