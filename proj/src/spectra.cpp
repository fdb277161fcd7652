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

#include "fiberlink/spectra.hpp"

#include "fiberlink/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fiberlink {

namespace {

using std::numbers::sqrt2;

constexpr std::array<DressedLabel, kDressedCount> kLabels{
    DressedLabel::ket00, DressedLabel::S,    DressedLabel::T,    DressedLabel::ket11, DressedLabel::phi1,
    DressedLabel::phi2,  DressedLabel::phi3, DressedLabel::phi4, DressedLabel::phi5,  DressedLabel::phi6,
    DressedLabel::phi7,  DressedLabel::phi8, DressedLabel::T1,   DressedLabel::T2,    DressedLabel::T3,
    DressedLabel::T4,    DressedLabel::S1,   DressedLabel::S2,   DressedLabel::S3,    DressedLabel::S4,
};

constexpr std::array<std::string_view, kDressedCount> kNames{
    "ket00", "S",    "T",    "ket11", "phi1", "phi2", "phi3", "phi4", "phi5", "phi6",
    "phi7",  "phi8", "T1",   "T2",    "T3",   "T4",   "S1",   "S2",   "S3",   "S4",
};

// Table rows run along the preparation chain: |11> -> |S> -> |00> first.
constexpr std::array<DressedLabel, kDressedCount> kCouplingOrder{
    DressedLabel::ket11, DressedLabel::S,    DressedLabel::T,    DressedLabel::ket00, DressedLabel::phi1,
    DressedLabel::phi2,  DressedLabel::phi3, DressedLabel::phi4, DressedLabel::phi5,  DressedLabel::phi6,
    DressedLabel::phi7,  DressedLabel::phi8, DressedLabel::T1,   DressedLabel::T2,    DressedLabel::T3,
    DressedLabel::T4,    DressedLabel::S1,   DressedLabel::S2,   DressedLabel::S3,    DressedLabel::S4,
};

struct Term {
  BasisState state;
  double amplitude;
};

BasisState st(Level qa, Level qb, int na, int nf, int nb) { return {qa, qb, na, nf, nb}; }

constexpr Level L0 = Level::g0;
constexpr Level L1 = Level::g1;
constexpr Level Le = Level::e;

void require_real_spectrum(double g, double nu) {
  if (!(g > 0.0) || !(nu > 0.0) || !std::isfinite(g) || !std::isfinite(nu)) {
    throw DomainError("dressed states require g > 0 and nu > 0");
  }
  const auto c = CouplingConstants::from(g, nu);
  if (c.g1_sq < c.g3_sq) {
    std::ostringstream msg;
    msg << "non-real dressed energies: g1^2 = " << c.g1_sq << " < g3^2 = " << c.g3_sq << " at g = " << g
        << ", nu = " << nu;
    throw DomainError(msg.str());
  }
}

// Four-site chain |0e> -g- |01>|001> -nu- |01>|010> -nu- |01>|100> (and its
// mirror for atom A). Coefficients of the closed-form T_k / S_k expansions.
struct ChainCoefficients {
  double far;       // |01>|100>, |10>|001>
  double fiber;     // |01>|010>, |10>|010>
  double adjacent;  // |01>|001>, |10>|100>
  double norm;      // closed-form normalization denominator
};

ChainCoefficients chain_coefficients(int k, double g, double nu) {
  const auto c = CouplingConstants::from(g, nu);
  const double g2 = g * g;
  const double nu2 = nu * nu;
  const double root_minus = std::sqrt(std::max(0.0, c.g1_sq - c.g3_sq));
  const double root_plus = std::sqrt(c.g1_sq + c.g3_sq);
  const double norm_12 = std::sqrt(2.0 * (c.g3_sq * c.g3_sq + g2 * c.g3_sq - 2.0 * c.g3_sq * nu2)) / (g * nu);
  const double norm_34 = std::sqrt(2.0 * (c.g3_sq * c.g3_sq - g2 * c.g3_sq + 2.0 * c.g3_sq * nu2)) / (g * nu);
  switch (k) {
    case 1:
      return {root_minus * (g2 + c.g3_sq) / (2.0 * sqrt2 * g * nu2), -(c.g2_sq + c.g3_sq) / (2.0 * g * nu),
              -root_minus / (sqrt2 * g), norm_12};
    case 2:
      return {-root_minus * (g2 + c.g3_sq) / (2.0 * sqrt2 * g * nu2), -(c.g2_sq + c.g3_sq) / (2.0 * g * nu),
              root_minus / (sqrt2 * g), norm_12};
    case 3:
      return {root_plus * (g2 - c.g3_sq) / (2.0 * sqrt2 * g * nu2), (c.g3_sq - c.g2_sq) / (2.0 * g * nu),
              -root_plus / (sqrt2 * g), norm_34};
    default:
      return {root_plus * (c.g3_sq - g2) / (2.0 * sqrt2 * g * nu2), (c.g3_sq - c.g2_sq) / (2.0 * g * nu),
              root_plus / (sqrt2 * g), norm_34};
  }
}

std::vector<Term> chain_terms(int k, bool symmetric, double g, double nu) {
  const auto cc = chain_coefficients(k, g, nu);
  const double sign = symmetric ? 1.0 : -1.0;
  const double inv = 1.0 / cc.norm;
  return {
      {st(L0, L1, 1, 0, 0), cc.far * inv},
      {st(L1, L0, 0, 0, 1), sign * cc.far * inv},
      {st(L0, L1, 0, 1, 0), cc.fiber * inv},
      {st(L1, L0, 0, 1, 0), sign * cc.fiber * inv},
      {st(L0, L1, 0, 0, 1), cc.adjacent * inv},
      {st(L1, L0, 1, 0, 0), sign * cc.adjacent * inv},
      {st(L0, Le, 0, 0, 0), inv},
      {st(Le, L0, 0, 0, 0), sign * inv},
  };
}

std::vector<Term> closed_form_terms(DressedLabel label, double g, double nu) {
  const double h = 1.0 / sqrt2;
  const auto c = CouplingConstants::from(g, nu);
  const double g1 = std::sqrt(c.g1_sq);
  switch (label) {
    case DressedLabel::ket00:
      return {{st(L0, L0, 0, 0, 0), 1.0}};
    case DressedLabel::S:
      return {{st(L0, L1, 0, 0, 0), h}, {st(L1, L0, 0, 0, 0), -h}};
    case DressedLabel::T:
      return {{st(L0, L1, 0, 0, 0), h}, {st(L1, L0, 0, 0, 0), h}};
    case DressedLabel::ket11:
      return {{st(L1, L1, 0, 0, 0), 1.0}};
    case DressedLabel::phi1:
      return {{st(L0, L0, 1, 0, 0), h}, {st(L0, L0, 0, 0, 1), -h}};
    case DressedLabel::phi2:
      return {{st(L0, L0, 1, 0, 0), 0.5}, {st(L0, L0, 0, 0, 1), 0.5}, {st(L0, L0, 0, 1, 0), -h}};
    case DressedLabel::phi3:
      return {{st(L0, L0, 1, 0, 0), 0.5}, {st(L0, L0, 0, 0, 1), 0.5}, {st(L0, L0, 0, 1, 0), h}};
    case DressedLabel::phi4: {
      const double r = g / nu;
      const double inv = 1.0 / std::sqrt(2.0 + r * r);
      return {{st(Le, L1, 0, 0, 0), inv}, {st(L1, Le, 0, 0, 0), inv}, {st(L1, L1, 0, 1, 0), -r * inv}};
    }
    case DressedLabel::phi5:
      return {{st(L1, L1, 0, 0, 1), 0.5},
              {st(Le, L1, 0, 0, 0), 0.5},
              {st(L1, Le, 0, 0, 0), -0.5},
              {st(L1, L1, 1, 0, 0), -0.5}};
    case DressedLabel::phi6:
      return {{st(L1, L1, 1, 0, 0), 0.5},
              {st(Le, L1, 0, 0, 0), 0.5},
              {st(L1, Le, 0, 0, 0), -0.5},
              {st(L1, L1, 0, 0, 1), -0.5}};
    case DressedLabel::phi7:
    case DressedLabel::phi8: {
      const double s = label == DressedLabel::phi7 ? -1.0 : 1.0;
      const double ratio = g1 / g;
      const double fib = 2.0 * nu / g;
      const double inv = 1.0 / std::sqrt(2.0 * ratio * ratio + fib * fib + 2.0);
      return {{st(Le, L1, 0, 0, 0), inv},
              {st(L1, Le, 0, 0, 0), inv},
              {st(L1, L1, 0, 1, 0), fib * inv},
              {st(L1, L1, 0, 0, 1), s * ratio * inv},
              {st(L1, L1, 1, 0, 0), s * ratio * inv}};
    }
    case DressedLabel::T1:
      return chain_terms(1, true, g, nu);
    case DressedLabel::T2:
      return chain_terms(2, true, g, nu);
    case DressedLabel::T3:
      return chain_terms(3, true, g, nu);
    case DressedLabel::T4:
      return chain_terms(4, true, g, nu);
    case DressedLabel::S1:
      return chain_terms(1, false, g, nu);
    case DressedLabel::S2:
      return chain_terms(2, false, g, nu);
    case DressedLabel::S3:
      return chain_terms(3, false, g, nu);
    case DressedLabel::S4:
      break;
  }
  return chain_terms(4, false, g, nu);
}

double closed_form_energy(DressedLabel label, double g, double nu, double delta) {
  const auto c = CouplingConstants::from(g, nu);
  const double g1 = std::sqrt(c.g1_sq);
  const double low = std::sqrt(std::max(0.0, c.g1_sq - c.g3_sq)) / sqrt2;
  const double high = std::sqrt(c.g1_sq + c.g3_sq) / sqrt2;
  switch (label) {
    case DressedLabel::ket00:
    case DressedLabel::S:
    case DressedLabel::T:
    case DressedLabel::ket11:
      return 0.0;
    case DressedLabel::phi1:
    case DressedLabel::phi4:
      return delta;
    case DressedLabel::phi2:
      return delta - sqrt2 * nu;
    case DressedLabel::phi3:
      return delta + sqrt2 * nu;
    case DressedLabel::phi5:
      return delta - g;
    case DressedLabel::phi6:
      return delta + g;
    case DressedLabel::phi7:
      return delta - g1;
    case DressedLabel::phi8:
      return delta + g1;
    case DressedLabel::T1:
    case DressedLabel::S1:
      return delta - low;
    case DressedLabel::T2:
    case DressedLabel::S2:
      return delta + low;
    case DressedLabel::T3:
    case DressedLabel::S3:
      return delta - high;
    case DressedLabel::T4:
    case DressedLabel::S4:
      break;
  }
  return delta + high;
}

Matrix projector(const std::vector<Vector>& vectors, Eigen::Index dim) {
  Matrix p = Matrix::Zero(dim, dim);
  for (const auto& v : vectors) {
    p += v * v.adjoint();
  }
  return p;
}

}  // namespace

const std::array<DressedLabel, kDressedCount>& dressed_labels() noexcept { return kLabels; }

std::string_view dressed_name(DressedLabel label) noexcept { return kNames[static_cast<std::size_t>(label)]; }

DressedLabel parse_dressed_label(std::string_view name) {
  for (std::size_t i = 0; i < kDressedCount; ++i) {
    if (kNames[i] == name) {
      return kLabels[i];
    }
  }
  throw std::invalid_argument("unknown dressed-state label '" + std::string(name) + "'");
}

bool is_zero_excitation(DressedLabel label) noexcept {
  return static_cast<std::size_t>(label) < static_cast<std::size_t>(DressedLabel::phi1);
}

std::vector<LabeledEnergy> analytic_energies(double g, double nu, double delta) {
  require_real_spectrum(g, nu);
  std::vector<LabeledEnergy> out;
  out.reserve(kDressedCount);
  for (DressedLabel label : kLabels) {
    out.push_back({label, closed_form_energy(label, g, nu, delta)});
  }
  return out;
}

DressedState dressed_state(DressedLabel label, const BasisPtr& basis, const SystemParams& params) {
  if (!basis || basis->max_excitation() != 1) {
    throw ShapeError("dressed states live on the single-excitation basis");
  }
  require_real_spectrum(params.g, params.nu);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(basis->size()));
  for (const auto& term : closed_form_terms(label, params.g, params.nu)) {
    v(static_cast<Eigen::Index>(basis->index_of(term.state))) += term.amplitude;
  }
  const double delta = resolved_detuning(params);
  return {label, basis, std::move(v), closed_form_energy(label, params.g, params.nu, delta)};
}

std::vector<DressedState> dressed_states(const BasisPtr& basis, const SystemParams& params) {
  std::vector<DressedState> out;
  out.reserve(kDressedCount);
  for (DressedLabel label : kLabels) {
    out.push_back(dressed_state(label, basis, params));
  }
  return out;
}

double laser_coupling_t12(double g, double nu, double omega) {
  const auto c = CouplingConstants::from(g, nu);
  return sqrt2 * g * nu * omega /
         std::sqrt(c.g3_sq * c.g3_sq + g * g * c.g3_sq - 2.0 * nu * nu * c.g3_sq);
}

double laser_coupling_t34(double g, double nu, double omega) {
  const auto c = CouplingConstants::from(g, nu);
  return sqrt2 * g * nu * omega /
         std::sqrt(c.g3_sq * c.g3_sq - g * g * c.g3_sq + 2.0 * nu * nu * c.g3_sq);
}

SpectrumReport verify_spectrum(const BasisPtr& basis, const SystemParams& params) {
  const auto analytic = dressed_states(basis, params);
  return verify_spectrum(basis, params, analytic);
}

SpectrumReport verify_spectrum(const BasisPtr& basis, const SystemParams& params,
                               std::span<const DressedState> analytic) {
  SystemParams drive_free = params;
  drive_free.omega = 0.0;
  drive_free.omega_mw = 0.0;
  const Matrix h = hamiltonian_terms(basis, drive_free).atom_cavity_fiber.matrix();
  const auto dim = h.rows();
  const double h_norm = std::max(1.0, h.norm());
  const double cluster_tol = 1e-8 * h_norm;

  SpectrumReport report;
  if (analytic.size() != static_cast<std::size_t>(dim)) {
    report.ok = false;
    report.failures.push_back("analytic set has " + std::to_string(analytic.size()) + " states, basis has " +
                              std::to_string(dim));
    return report;
  }

  for (const auto& s : analytic) {
    const double residual = (h * s.vector - s.energy * s.vector).norm();
    report.residuals.push_back({s.label, s.energy, residual});
    report.max_eigen_residual = std::max(report.max_eigen_residual, residual);
    if (residual > kSpectrumTolerance) {
      report.ok = false;
      std::ostringstream msg;
      msg << dressed_name(s.label) << ": eigen residual " << residual << " at analytic energy " << s.energy;
      report.failures.push_back(msg.str());
    }
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const Eigen::VectorXd& eval = solver.eigenvalues();
  const Matrix& evec = solver.eigenvectors();

  // Sort analytic states by energy, then walk both sorted lists cluster by cluster.
  std::vector<std::size_t> order(analytic.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return analytic[a].energy < analytic[b].energy; });

  std::vector<bool> numeric_used(static_cast<std::size_t>(dim), false);
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && analytic[order[j]].energy - analytic[order[j - 1]].energy <= cluster_tol) {
      ++j;
    }
    double mean = 0.0;
    std::vector<Vector> analytic_span;
    std::string names;
    for (std::size_t k = i; k < j; ++k) {
      const auto& s = analytic[order[k]];
      mean += s.energy;
      analytic_span.push_back(s.vector);
      names += (names.empty() ? "" : ",") + std::string(dressed_name(s.label));
    }
    mean /= static_cast<double>(j - i);

    std::vector<Vector> numeric_span;
    double mismatch = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
      if (std::abs(eval(k) - mean) <= cluster_tol + kSpectrumTolerance) {
        numeric_used[static_cast<std::size_t>(k)] = true;
        numeric_span.push_back(evec.col(k));
        mismatch = std::max(mismatch, std::abs(eval(k) - mean));
      }
    }
    report.max_energy_mismatch = std::max(report.max_energy_mismatch, mismatch);

    if (numeric_span.size() != analytic_span.size()) {
      report.ok = false;
      std::ostringstream msg;
      msg << "{" << names << "}: analytic energy " << mean << " with multiplicity " << analytic_span.size()
          << " matched " << numeric_span.size() << " numerical eigenvalue(s)";
      report.failures.push_back(msg.str());
    } else {
      const double distance = (projector(analytic_span, dim) - projector(numeric_span, dim)).norm();
      report.max_projector_distance = std::max(report.max_projector_distance, distance);
      if (distance > kSpectrumTolerance) {
        report.ok = false;
        std::ostringstream msg;
        msg << "{" << names << "}: projector distance " << distance;
        report.failures.push_back(msg.str());
      } else {
        report.matched_states += analytic_span.size();
      }
    }
    i = j;
  }

  for (Eigen::Index k = 0; k < dim; ++k) {
    if (!numeric_used[static_cast<std::size_t>(k)]) {
      report.ok = false;
      std::ostringstream msg;
      msg << "numerical eigenvalue " << eval(k) << " has no analytic partner";
      report.failures.push_back(msg.str());
    }
  }
  return report;
}

std::string_view drive_name(Drive drive) noexcept { return drive == Drive::laser ? "laser" : "microwave"; }

const CouplingRow* CouplingTable::find(DressedLabel a, DressedLabel b, Drive drive) const {
  for (const auto& row : rows) {
    if (row.drive == drive && ((row.source == a && row.target == b) || (row.source == b && row.target == a))) {
      return &row;
    }
  }
  return nullptr;
}

CouplingTable dressed_couplings(const BasisPtr& basis, const SystemParams& params) {
  const auto terms = hamiltonian_terms(basis, params);
  const auto states = dressed_states(basis, params);
  const auto& state_of = [&](DressedLabel label) -> const DressedState& {
    return states[static_cast<std::size_t>(label)];
  };
  const double scale = std::max({params.omega, params.omega_mw, 1e-300});
  const double cutoff = 1e-13 * scale;

  CouplingTable table;
  for (std::size_t i = 0; i < kCouplingOrder.size(); ++i) {
    const auto& src = state_of(kCouplingOrder[i]);
    for (std::size_t j = i + 1; j < kCouplingOrder.size(); ++j) {
      const auto& dst = state_of(kCouplingOrder[j]);
      for (Drive drive : {Drive::microwave, Drive::laser}) {
        const Matrix& m = drive == Drive::laser ? terms.laser.matrix() : terms.microwave.matrix();
        const Complex element = dst.vector.dot(m * src.vector);
        if (std::abs(element) > cutoff) {
          table.rows.push_back({src.label, dst.label, drive, element, std::abs(element), dst.energy - src.energy});
        }
      }
    }
  }
  return table;
}

Vector target_ket(const Basis& basis) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(basis.size()));
  v(static_cast<Eigen::Index>(basis.index_of(st(L0, L1, 0, 0, 0)))) = 1.0 / sqrt2;
  v(static_cast<Eigen::Index>(basis.index_of(st(L1, L0, 0, 0, 0)))) = 1.0 / sqrt2;
  return v;
}

JumpImage jump_image(const DressedState& state, Channel channel, const SystemParams& params) {
  const LindbladSet jumps(state.basis, params);
  JumpImage out;
  out.image = jumps[channel].apply(state.vector);
  out.norm_sq = out.image.squaredNorm();
  if (out.norm_sq > 0.0) {
    out.overlap_with_t000 = std::norm(target_ket(*state.basis).dot(out.image)) / out.norm_sq;
  } else {
    out.overlap_with_t000 = 0.0;
  }
  return out;
}

}  // namespace fiberlink
