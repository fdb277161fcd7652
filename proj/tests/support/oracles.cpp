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

#include "oracles.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace fiberlink::oracle {

std::vector<BasisState> enumerate_states(int max_excitation, int max_photons) {
  std::vector<BasisState> out;
  const std::array<Level, 3> levels{Level::g0, Level::g1, Level::e};
  for (Level qa : levels) {
    for (Level qb : levels) {
      for (int na = 0; na <= max_photons; ++na) {
        for (int nf = 0; nf <= max_photons; ++nf) {
          for (int nb = 0; nb <= max_photons; ++nb) {
            const int exc = (qa == Level::e) + (qb == Level::e) + na + nf + nb;
            if (exc <= max_excitation) {
              out.push_back({qa, qb, na, nf, nb});
            }
          }
        }
      }
    }
  }
  return out;
}

double resonance_detuning_hp(double g, double nu) {
  using Big = boost::multiprecision::cpp_dec_float_50;
  const Big bg(g);
  const Big bnu(nu);
  const Big g1sq = bg * bg + 2 * bnu * bnu;
  const Big g3sq = sqrt(bg * bg * bg * bg + 4 * bnu * bnu * bnu * bnu);
  const Big value = -sqrt(g1sq + g3sq) / sqrt(Big(2));
  return value.convert_to<double>();
}

Matrix master_equation_rhs(const Matrix& h, const std::vector<Matrix>& jumps, const Matrix& rho) {
  const Complex i{0.0, 1.0};
  Matrix out = i * (rho * h - h * rho);
  for (const auto& l : jumps) {
    const Matrix ldl = l.adjoint() * l;
    out += l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl);
  }
  return out;
}

Matrix brute_force_superoperator(const Matrix& h, const std::vector<Matrix>& jumps) {
  const auto n = h.rows();
  Matrix super(n * n, n * n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = 0; row < n; ++row) {
      Matrix unit = Matrix::Zero(n, n);
      unit(row, col) = 1.0;
      const Matrix image = master_equation_rhs(h, jumps, unit);
      // column-major: element (row, col) sits at row + col * n
      super.col(row + col * n) = Eigen::Map<const Vector>(image.data(), n * n);
    }
  }
  return super;
}

namespace {

// Sparse-ish right-hand side: drop zero jump operators and precompute K.
struct Rhs {
  Matrix h;
  std::vector<Matrix> jumps;
  std::vector<Matrix> jumps_dag;
  Matrix k;

  Rhs(const Matrix& hm, const std::vector<Matrix>& ls) : h(hm), k(Matrix::Zero(hm.rows(), hm.cols())) {
    for (const auto& l : ls) {
      if (l.cwiseAbs().maxCoeff() == 0.0) {
        continue;
      }
      jumps.push_back(l);
      jumps_dag.push_back(l.adjoint());
      k += l.adjoint() * l;
    }
  }

  Matrix operator()(const Matrix& rho) const {
    const Complex i{0.0, 1.0};
    const Matrix heff = h - 0.5 * i * k;  // -i(Heff rho - rho Heff^+) = -i[H,rho] - {K,rho}/2
    Matrix out = -i * (heff * rho) + i * (rho * heff.adjoint());
    for (std::size_t j = 0; j < jumps.size(); ++j) {
      out.noalias() += jumps[j] * rho * jumps_dag[j];
    }
    return out;
  }
};

}  // namespace

AdaptiveResult integrate_adaptive(const Matrix& h, const std::vector<Matrix>& jumps, const Matrix& rho0,
                                  const std::vector<double>& output_times, double rtol, double atol) {
  // Dormand-Prince 5(4) tableau.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;
  (void)c2;
  (void)c3;
  (void)c4;
  (void)c5;

  const Rhs f(h, jumps);
  AdaptiveResult result;
  Matrix y = rho0;
  double t = 0.0;
  double step = 0.01;
  Matrix k1 = f(y);

  for (double t_out : output_times) {
    if (t_out < t) {
      throw std::invalid_argument("output times must be ascending");
    }
    while (t < t_out) {
      bool last = false;
      double hstep = step;
      if (t + hstep >= t_out) {
        hstep = t_out - t;
        last = true;
      }
      const Matrix k2 = f(y + hstep * (a21 * k1));
      const Matrix k3 = f(y + hstep * (a31 * k1 + a32 * k2));
      const Matrix k4 = f(y + hstep * (a41 * k1 + a42 * k2 + a43 * k3));
      const Matrix k5 = f(y + hstep * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      const Matrix k6 = f(y + hstep * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      const Matrix y_new = y + hstep * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const Matrix k7 = f(y_new);
      const Matrix err = hstep * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      double err_norm = 0.0;
      for (Eigen::Index j = 0; j < err.size(); ++j) {
        const double scale = atol + rtol * std::max(std::abs(y.data()[j]), std::abs(y_new.data()[j]));
        err_norm = std::max(err_norm, std::abs(err.data()[j]) / scale);
      }

      if (err_norm <= 1.0) {
        t = last ? t_out : t + hstep;
        y = y_new;
        k1 = k7;
        ++result.steps;
      } else {
        ++result.rejected;
        last = false;
      }
      const double factor = err_norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0);
      if (!last) {
        step = hstep * factor;
      }
    }
    result.states.push_back(y);
  }
  return result;
}

Matrix random_density(std::mt19937_64& rng, Eigen::Index dim, Eigen::Index rank) {
  std::normal_distribution<double> normal;
  Matrix g(dim, rank);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < rank; ++j) {
      g(i, j) = Complex(normal(rng), normal(rng));
    }
  }
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

namespace {

double level_energy(Level level, const LabFrequencies& f) {
  switch (level) {
    case Level::g0:
      return 0.0;
    case Level::g1:
      return f.omega_1;
    case Level::e:
      break;
  }
  return f.omega_e;
}

void add(Matrix& m, const Basis& basis, const BasisState& to, std::size_t from, Complex value) {
  if (auto row = basis.find(to)) {
    m(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(from)) += value;
  }
}

}  // namespace

Matrix lab_hamiltonian(const BasisPtr& basis, const SystemParams& p, const LabFrequencies& f, double t) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  const double omega_cav = f.omega_e - f.omega_1;
  const double omega_mw = f.omega_1;
  const Complex i{0.0, 1.0};
  Matrix m = Matrix::Zero(n, n);

  for (std::size_t col = 0; col < basis->size(); ++col) {
    const BasisState s = (*basis)[col];
    m(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) =
        level_energy(s.qa, f) + level_energy(s.qb, f) + omega_cav * (s.na + s.nb + s.nf);

    // atom A <-> cavity A
    if (s.qa == Level::g1 && s.na == 1) add(m, *basis, {Level::e, s.qb, 0, s.nf, s.nb}, col, p.g);
    if (s.qa == Level::e && s.na == 0) add(m, *basis, {Level::g1, s.qb, 1, s.nf, s.nb}, col, p.g);
    // atom B <-> cavity B
    if (s.qb == Level::g1 && s.nb == 1) add(m, *basis, {s.qa, Level::e, s.na, s.nf, 0}, col, p.g);
    if (s.qb == Level::e && s.nb == 0) add(m, *basis, {s.qa, Level::g1, s.na, s.nf, 1}, col, p.g);
    // fiber <-> cavities
    if (s.nf == 1 && s.na == 0) add(m, *basis, {s.qa, s.qb, 1, 0, s.nb}, col, p.nu);
    if (s.nf == 1 && s.nb == 0) add(m, *basis, {s.qa, s.qb, s.na, 0, 1}, col, p.nu);
    if (s.nf == 0 && s.na == 1) add(m, *basis, {s.qa, s.qb, 0, 1, s.nb}, col, p.nu);
    if (s.nf == 0 && s.nb == 1) add(m, *basis, {s.qa, s.qb, s.na, 1, 0}, col, p.nu);

    // laser: Omega e^{i w t} |0><e| + h.c.
    const Complex down = p.omega * std::exp(i * f.laser * t);
    if (s.qa == Level::e) add(m, *basis, {Level::g0, s.qb, s.na, s.nf, s.nb}, col, down);
    if (s.qb == Level::e) add(m, *basis, {s.qa, Level::g0, s.na, s.nf, s.nb}, col, down);
    if (s.qa == Level::g0) add(m, *basis, {Level::e, s.qb, s.na, s.nf, s.nb}, col, std::conj(down));
    if (s.qb == Level::g0) add(m, *basis, {s.qa, Level::e, s.na, s.nf, s.nb}, col, std::conj(down));

    // microwave: Omega_MW e^{i w_mw t} (|0><1|_A - |0><1|_B) + h.c.
    const Complex mw = p.omega_mw * std::exp(i * omega_mw * t);
    if (s.qa == Level::g1) add(m, *basis, {Level::g0, s.qb, s.na, s.nf, s.nb}, col, mw);
    if (s.qb == Level::g1) add(m, *basis, {s.qa, Level::g0, s.na, s.nf, s.nb}, col, -mw);
    if (s.qa == Level::g0) add(m, *basis, {Level::g1, s.qb, s.na, s.nf, s.nb}, col, std::conj(mw));
    if (s.qb == Level::g0) add(m, *basis, {s.qa, Level::g1, s.na, s.nf, s.nb}, col, -std::conj(mw));
  }
  return m;
}

Eigen::VectorXd frame_generator(const BasisPtr& basis, const LabFrequencies& f) {
  const double omega_mw = f.omega_1;
  Eigen::VectorXd d(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const BasisState s = (*basis)[k];
    const int ones = (s.qa == Level::g1) + (s.qb == Level::g1);
    const int excited = (s.qa == Level::e) + (s.qb == Level::e);
    d(static_cast<Eigen::Index>(k)) = omega_mw * ones + f.laser * excited + (f.laser - omega_mw) * (s.na + s.nf + s.nb);
  }
  return d;
}

}  // namespace fiberlink::oracle
