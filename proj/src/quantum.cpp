// Copyright 2026 The isingqa Authors
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

#include "isingqa/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "isingqa/errors.hpp"

namespace isingqa {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

void require_cap(std::size_t b, std::size_t cap, const char* what) {
  if (b > cap) {
    throw CapabilityError(std::string(what) + " supports b <= " + std::to_string(cap) +
                          ", got b = " + std::to_string(b));
  }
}

MatrixXd mix(const ControlSchedule& sched, const MatrixXd& hx, const MatrixXd& hi, double u) {
  return sched.A(u) * hx + sched.B(u) * hi;
}

// psi <- exp(-i theta H) psi for real symmetric H.
void apply_exponential(const MatrixXd& h, double theta, VectorXcd& psi) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(h);
  const MatrixXd& v = es.eigenvectors();
  const VectorXd& lam = es.eigenvalues();
  VectorXd re = v.transpose() * psi.real();
  VectorXd im = v.transpose() * psi.imag();
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    const double c = std::cos(theta * lam[k]);
    const double s = std::sin(theta * lam[k]);
    const double r = re[k];
    re[k] = c * r + s * im[k];
    im[k] = c * im[k] - s * r;
  }
  psi.real() = v * re;
  psi.imag() = v * im;
}

constexpr double kNormDrift = 1e-9;

// Advances psi from u0 to u1 in n midpoint steps.
void propagate(const ControlSchedule& sched, const MatrixXd& hx, const MatrixXd& hi, double t_f,
               double u0, double u1, std::size_t n, VectorXcd& psi) {
  const double h = (u1 - u0) / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double mid = u0 + (static_cast<double>(k) + 0.5) * h;
    apply_exponential(mix(sched, hx, hi, mid), t_f * h, psi);
    const double nrm = psi.norm();
    if (std::abs(nrm - 1.0) > kNormDrift) {
      throw ConvergenceError("state norm drifted to " + std::to_string(nrm));
    }
    psi /= nrm;
  }
}

}  // namespace

DenseHamiltonian build_quantum_ising(const IsingInstance& inst) {
  require_cap(inst.size(), kDenseBuildCap, "dense Hamiltonian");
  const auto e = all_energies(inst, kDenseBuildCap);
  DenseHamiltonian out;
  out.b = inst.size();
  out.matrix = MatrixXd::Zero(static_cast<Eigen::Index>(e.size()),
                              static_cast<Eigen::Index>(e.size()));
  for (std::size_t k = 0; k < e.size(); ++k) {
    out.matrix(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = e[k];
  }
  return out;
}

DenseHamiltonian build_transverse(std::size_t b) {
  require_cap(b, kDenseBuildCap, "dense Hamiltonian");
  if (b == 0) throw InvalidArgument("need at least one spin");
  const std::size_t dim = std::size_t{1} << b;
  DenseHamiltonian out;
  out.b = b;
  out.matrix = MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t k = 0; k < b; ++k) {
      const std::size_t y = x ^ (std::size_t{1} << (b - 1 - k));
      out.matrix(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = -1.0;
    }
  }
  return out;
}

DenseHamiltonian annealing_hamiltonian(const IsingInstance& inst, const ControlSchedule& sched,
                                       double t) {
  auto hi = build_quantum_ising(inst);
  const auto hx = build_transverse(inst.size());
  hi.matrix = mix(sched, hx.matrix, hi.matrix, t);
  return hi;
}

StateVector uniform_superposition(std::size_t b) {
  const Eigen::Index dim = Eigen::Index{1} << b;
  StateVector s;
  s.amplitudes = VectorXcd::Constant(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  return s;
}

StateVector evolve(const IsingInstance& inst, const ControlSchedule& sched, double t_f,
                   std::size_t steps) {
  require_cap(inst.size(), kEvolveCap, "state evolution");
  if (steps < 1) throw InvalidArgument("need at least one step");
  if (!(t_f >= 0.0)) throw InvalidArgument("duration must be non-negative");
  const auto hi = build_quantum_ising(inst);
  const auto hx = build_transverse(inst.size());
  auto psi = uniform_superposition(inst.size());
  propagate(sched, hx.matrix, hi.matrix, t_f, 0.0, 1.0, steps, psi.amplitudes);
  return psi;
}

double success_probability(const IsingInstance& inst, const StateVector& psi) {
  if (inst.size() >= 63 || psi.dim() != (std::size_t{1} << inst.size())) {
    throw InvalidArgument("state dimension does not match 2^b");
  }
  const auto gs = brute_force_ground(inst, kDenseBuildCap);
  double p = 0.0;
  for (auto idx : gs.indices) p += std::norm(psi.amplitudes[static_cast<Eigen::Index>(idx)]);
  return p;
}

double assemble_lower_bound(std::size_t b, std::size_t zeta, double Pi, double xi, double p0) {
  if (std::isinf(xi)) return -std::numeric_limits<double>::infinity();
  return std::exp(-xi) -
         std::ldexp(1.0, static_cast<int>(b)) * static_cast<double>(zeta) * Pi *
             std::exp(2.0 * xi) * (1.0 - p0);
}

BoundReport adiabatic_bound(const IsingInstance& inst, const ControlSchedule& sched, double t_f,
                            std::size_t u_grid, const BoundOptions& options) {
  require_cap(inst.size(), kBoundCap, "adiabatic bound");
  if (u_grid < 16) throw InvalidArgument("u_grid must be at least 16");
  if (!(t_f > 0.0)) throw InvalidArgument("duration must be positive");
  if (!sched.dA || !sched.dB) throw InvalidArgument("schedule lacks derivatives");

  const auto gs = brute_force_ground(inst, kBoundCap);
  const std::size_t zeta = gs.degeneracy();
  const auto z = static_cast<Eigen::Index>(zeta);
  const MatrixXd hi = build_quantum_ising(inst).matrix;
  const MatrixXd hx = build_transverse(inst.size()).matrix;
  const Eigen::Index dim = hi.rows();
  const std::size_t sub =
      options.substeps > 0
          ? options.substeps
          : std::max<std::size_t>(4, static_cast<std::size_t>(
                                         std::ceil(20.0 * t_f / static_cast<double>(u_grid))));

  BoundReport rep;
  rep.zeta = zeta;
  rep.u_grid = u_grid;
  rep.min_gap = std::numeric_limits<double>::infinity();

  VectorXcd psi = uniform_superposition(inst.size()).amplitudes;
  std::vector<MatrixXd> frames;
  MatrixXd prev;
  const double du = 1.0 / static_cast<double>(u_grid);

  for (std::size_t k = 0; k <= u_grid; ++k) {
    const double u = static_cast<double>(k) * du;
    if (k > 0) propagate(sched, hx, hi, t_f, u - du, u, sub, psi);

    Eigen::SelfAdjointEigenSolver<MatrixXd> es(mix(sched, hx, hi, u));
    const VectorXd& lam = es.eigenvalues();
    const MatrixXd& v = es.eigenvectors();
    const double tol = 1e-8 * std::max(1.0, std::abs(lam[0]));

    if (z < dim) {
      const double sep = lam[z] - lam[z - 1];
      if (sep <= tol) {
        throw ResolutionError("ground subspace of dimension " + std::to_string(zeta) +
                              " is not separated from the spectrum at u = " + std::to_string(u));
      }
      rep.min_gap = std::min(rep.min_gap, sep);
    }

    MatrixXd w = v.leftCols(z);
    if (k > 0) {
      const MatrixXd o = prev.transpose() * w;
      Eigen::JacobiSVD<MatrixXd> svd(o, Eigen::ComputeFullU | Eigen::ComputeFullV);
      if (svd.singularValues().minCoeff() < 0.5) {
        throw ResolutionError("ground subspace moved too far between grid points near u = " +
                              std::to_string(u) + "; use a finer u_grid");
      }
      w = w * (svd.matrixV() * svd.matrixU().transpose());
    }
    prev = w;
    if (zeta > 1) frames.push_back(w);

    // Largest transition weight out of each ground vector, one excited
    // eigenvalue cluster at a time.
    const MatrixXd dh = sched.dA(u) * hx + sched.dB(u) * hi;
    const MatrixXd coeff = v.transpose() * (dh * w);
    for (Eigen::Index l = 0; l < z; ++l) {
      Eigen::Index j = z;
      while (j < dim) {
        Eigen::Index end = j + 1;
        while (end < dim && lam[end] - lam[j] <= tol) ++end;
        double num = 0.0;
        for (Eigen::Index q = j; q < end; ++q) num += coeff(q, l) * coeff(q, l);
        const double gap = lam[j] - lam[l];
        rep.Pi = std::max(rep.Pi, num / (gap * gap));
        j = end;
      }
    }

    const double pop = (w.transpose() * psi.real()).squaredNorm() +
                       (w.transpose() * psi.imag()).squaredNorm();
    rep.p0 = std::min(rep.p0, std::min(1.0, pop));
  }

  if (zeta > 1) {
    double integral = 0.0;
    double last = 0.0;
    for (std::size_t k = 0; k <= u_grid; ++k) {
      const std::size_t lo = k == 0 ? 0 : k - 1;
      const std::size_t hi_k = k == u_grid ? u_grid : k + 1;
      const MatrixXd d = (frames[hi_k] - frames[lo]) / (static_cast<double>(hi_k - lo) * du);
      MatrixXd a = frames[k].transpose() * d;
      a.diagonal().setZero();
      const double nrm = Eigen::JacobiSVD<MatrixXd>(a).singularValues()(0);
      if (k > 0) integral += 0.5 * du * (last + nrm);
      last = nrm;
    }
    rep.xi = integral >= std::numbers::pi
                 ? std::numeric_limits<double>::infinity()
                 : integral / (1.0 - integral / std::numbers::pi);
  }

  rep.lower_bound = assemble_lower_bound(inst.size(), zeta, rep.Pi, rep.xi, rep.p0);
  StateVector fin{psi};
  rep.true_success = success_probability(inst, fin);
  return rep;
}

bool spectrum_equivalence_check(const IsingInstance& inst, double tol) {
  require_cap(inst.size(), kEvolveCap, "spectrum check");
  const MatrixXd h = build_quantum_ising(inst).matrix;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(h);
  auto classical = all_energies(inst, kEvolveCap);
  std::sort(classical.begin(), classical.end());
  const VectorXd& lam = es.eigenvalues();
  for (std::size_t k = 0; k < classical.size(); ++k) {
    if (std::abs(lam[static_cast<Eigen::Index>(k)] - classical[k]) > tol) return false;
  }

  VectorXd w = (-(lam.array() - lam[0])).exp();
  w /= w.sum();
  const VectorXd diag = es.eigenvectors().array().square().matrix() * w;
  const auto boltz = boltzmann_distribution(inst, 1.0, kEvolveCap);
  for (std::size_t s = 0; s < boltz.size(); ++s) {
    if (std::abs(diag[static_cast<Eigen::Index>(s)] - boltz[s]) > tol) return false;
  }
  return true;
}

}  // namespace isingqa
