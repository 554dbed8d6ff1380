// Copyright 2026 The paintshop Authors
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

#include "paintshop/mps.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "paintshop/error.hpp"

namespace paintshop {

namespace {

using Eigen::MatrixXcd;
using cd = std::complex<double>;

Eigen::Matrix2cd single_qubit_matrix(const Gate& g) {
  Eigen::Matrix2cd u;
  if (g.kind == GateKind::rx) {
    const double c = std::cos(g.angle / 2);
    const cd s{0.0, -std::sin(g.angle / 2)};
    u << c, s, s, c;
  } else {
    u << std::polar(1.0, -g.angle / 2), 0.0, 0.0, std::polar(1.0, g.angle / 2);
  }
  return u;
}

// Basis index (s_left * 2 + s_right).
Eigen::Matrix4cd cnot_matrix(bool control_is_left) {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  if (control_is_left) {
    u(0, 0) = u(1, 1) = 1.0;
    u(2, 3) = u(3, 2) = 1.0;
  } else {
    u(0, 0) = u(2, 2) = 1.0;
    u(1, 3) = u(3, 1) = 1.0;
  }
  return u;
}

Eigen::Matrix4cd swap_matrix() {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = u(3, 3) = 1.0;
  u(1, 2) = u(2, 1) = 1.0;
  return u;
}

struct Svd {
  MatrixXcd u;
  Eigen::VectorXd s;
  MatrixXcd v;
};

// Divide-and-conquer SVD, redone with one-sided Jacobi when the former
// returns non-finite values (seen with Eigen 3.4.0 on rank-deficient input).
Svd thin_svd(const MatrixXcd& m) {
  constexpr auto kOpts = Eigen::ComputeThinU | Eigen::ComputeThinV;
  {
    Eigen::BDCSVD<MatrixXcd> svd(m, kOpts);
    if (svd.singularValues().allFinite() && svd.matrixU().allFinite() && svd.matrixV().allFinite())
      return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
  }
  Eigen::JacobiSVD<MatrixXcd> svd(m, kOpts);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

}  // namespace

double entropy_bits(const std::vector<double>& schmidt) {
  double norm = 0.0;
  for (double l : schmidt) norm += l * l;
  double s = 0.0;
  for (double l : schmidt) {
    const double p = l * l / norm;
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

MpsState::MpsState(int n_qubits, double cutoff) : cutoff_(cutoff) {
  if (n_qubits < 1) throw Error(ErrorKind::invalid_argument, "MPS needs at least one qubit");
  if (cutoff < 0.0) throw Error(ErrorKind::invalid_argument, "cutoff must be non-negative");
  if (cutoff >= 1.0)
    throw Error(ErrorKind::degenerate_cutoff, "cutoff >= 1 would discard every Schmidt coefficient");
  const double a = 1.0 / std::sqrt(2.0);
  sites_.resize(n_qubits);
  for (auto& site : sites_) {
    site[0] = MatrixXcd::Constant(1, 1, a);
    site[1] = MatrixXcd::Constant(1, 1, a);
  }
}

std::vector<int> MpsState::bond_dims() const {
  std::vector<int> dims;
  for (std::size_t k = 0; k + 1 < sites_.size(); ++k)
    dims.push_back(static_cast<int>(sites_[k][0].cols()));
  return dims;
}

void MpsState::apply_single(int site, const Eigen::Matrix2cd& u) {
  Site& a = sites_[site];
  MatrixXcd a0 = u(0, 0) * a[0] + u(0, 1) * a[1];
  MatrixXcd a1 = u(1, 0) * a[0] + u(1, 1) * a[1];
  a[0] = std::move(a0);
  a[1] = std::move(a1);
}

void MpsState::move_center(int target) {
  while (center_ < target) {
    Site& a = sites_[center_];
    const auto chl = a[0].rows();
    const auto chr = a[0].cols();
    MatrixXcd m(2 * chl, chr);
    m << a[0], a[1];
    Eigen::HouseholderQR<MatrixXcd> qr(m);
    const auto k = std::min(2 * chl, chr);
    MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(2 * chl, k);
    MatrixXcd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    a[0] = q.topRows(chl);
    a[1] = q.bottomRows(chl);
    Site& b = sites_[center_ + 1];
    b[0] = r * b[0];
    b[1] = r * b[1];
    ++center_;
  }
  while (center_ > target) {
    Site& a = sites_[center_];
    const auto chl = a[0].rows();
    const auto chr = a[0].cols();
    MatrixXcd m(chl, 2 * chr);
    m << a[0], a[1];
    MatrixXcd mt = m.adjoint();
    Eigen::HouseholderQR<MatrixXcd> qr(mt);
    const auto k = std::min(chl, 2 * chr);
    MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(2 * chr, k);
    MatrixXcd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    MatrixXcd qh = q.adjoint();  // k x 2chr, right-isometric
    a[0] = qh.leftCols(chr);
    a[1] = qh.rightCols(chr);
    MatrixXcd rh = r.adjoint();  // chl x k
    Site& b = sites_[center_ - 1];
    b[0] = b[0] * rh;
    b[1] = b[1] * rh;
    --center_;
  }
}

void MpsState::apply_two(int site, const Eigen::Matrix4cd& u) {
  move_center(site);
  Site& a = sites_[site];
  Site& b = sites_[site + 1];
  const auto chl = a[0].rows();
  const auto chr = b[0].cols();

  MatrixXcd theta[2][2];
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2) theta[s1][s2] = a[s1] * b[s2];

  MatrixXcd m(2 * chl, 2 * chr);
  for (int s1 = 0; s1 < 2; ++s1) {
    for (int s2 = 0; s2 < 2; ++s2) {
      MatrixXcd block = MatrixXcd::Zero(chl, chr);
      for (int t1 = 0; t1 < 2; ++t1)
        for (int t2 = 0; t2 < 2; ++t2) {
          const cd w = u(s1 * 2 + s2, t1 * 2 + t2);
          if (w != cd{0.0, 0.0}) block += w * theta[t1][t2];
        }
      m.block(s1 * chl, s2 * chr, chl, chr) = block;
    }
  }

  const Svd svd = thin_svd(m);
  const Eigen::VectorXd& sv = svd.s;
  const double total = sv.squaredNorm();
  if (!(total > 0.0)) throw Error(ErrorKind::invalid_argument, "MPS state lost its norm");
  const double scale = 1.0 / std::sqrt(total);

  std::vector<Eigen::Index> keep;
  double discarded = 0.0;
  for (Eigen::Index r = 0; r < sv.size(); ++r) {
    const double lambda = sv[r] * scale;
    if (lambda <= kNumericalZero) continue;
    if (lambda < cutoff_) {
      discarded += lambda * lambda;
      continue;
    }
    keep.push_back(r);
  }
  if (keep.empty())
    throw Error(ErrorKind::degenerate_cutoff,
                fmt::format("cutoff {} discards every Schmidt coefficient", cutoff_));

  const auto rank = static_cast<Eigen::Index>(keep.size());
  std::vector<double> lambdas(rank);
  double kept_norm = 0.0;
  for (Eigen::Index r = 0; r < rank; ++r) {
    lambdas[r] = sv[keep[r]] * scale;
    kept_norm += lambdas[r] * lambdas[r];
  }
  kept_norm = std::sqrt(kept_norm);
  for (double& l : lambdas) l /= kept_norm;

  MatrixXcd left(2 * chl, rank);
  MatrixXcd right(rank, 2 * chr);
  const MatrixXcd vh = svd.v.adjoint();
  for (Eigen::Index r = 0; r < rank; ++r) {
    left.col(r) = svd.u.col(keep[r]);
    right.row(r) = lambdas[r] * vh.row(keep[r]);
  }
  a[0] = left.topRows(chl);
  a[1] = left.bottomRows(chl);
  b[0] = right.leftCols(chr);
  b[1] = right.rightCols(chr);
  center_ = site + 1;

  stats_.excluded_probability += discarded;
  stats_.max_bond_dim = std::max(stats_.max_bond_dim, static_cast<int>(rank));
  stats_.max_entropy_bits = std::max(stats_.max_entropy_bits, entropy_bits(lambdas));
}

void MpsState::apply(const Gate& gate) {
  const int n = n_qubits();
  for (int k = 0; k < gate.arity(); ++k)
    if (gate.qubits[k] < 0 || gate.qubits[k] >= n)
      throw Error(ErrorKind::invalid_argument, "gate qubit outside the MPS");
  if (gate.kind != GateKind::cnot) {
    apply_single(gate.qubits[0], single_qubit_matrix(gate));
    return;
  }
  const int control = gate.qubits[0];
  const int target = gate.qubits[1];
  const int lo = std::min(control, target);
  const int hi = std::max(control, target);
  const Eigen::Matrix4cd swap = swap_matrix();
  for (int s = hi - 1; s > lo; --s) apply_two(s, swap);
  apply_two(lo, cnot_matrix(control == lo));
  for (int s = lo + 1; s < hi; ++s) apply_two(s, swap);
}

std::vector<double> MpsState::schmidt_values(int cut) const {
  if (cut < 1 || cut >= n_qubits())
    throw Error(ErrorKind::invalid_argument,
                fmt::format("cut {} outside 1..{}", cut, n_qubits() - 1));
  MpsState copy = *this;
  copy.move_center(cut - 1);
  const Site& a = copy.sites_[cut - 1];
  MatrixXcd m(2 * a[0].rows(), a[0].cols());
  m << a[0], a[1];
  const Eigen::VectorXd sv = thin_svd(m).s;
  const double norm = sv.norm();
  std::vector<double> out;
  for (Eigen::Index r = 0; r < sv.size(); ++r)
    if (sv[r] / norm > kNumericalZero) out.push_back(sv[r] / norm);
  return out;
}

std::vector<kernels::Amplitude> MpsState::to_amplitudes() const {
  // Rows index the basis states of the sites contracted so far.
  MatrixXcd acc = MatrixXcd::Ones(1, 1);
  for (std::size_t q = 0; q < sites_.size(); ++q) {
    const auto rows = acc.rows();
    MatrixXcd next(2 * rows, sites_[q][0].cols());
    next.topRows(rows) = acc * sites_[q][0];
    next.bottomRows(rows) = acc * sites_[q][1];
    acc = std::move(next);
  }
  std::vector<kernels::Amplitude> out(acc.rows());
  for (Eigen::Index k = 0; k < acc.rows(); ++k) out[k] = acc(k, 0);
  return out;
}

MpsResult simulate_mps(const Circuit& circuit, double cutoff) {
  MpsState state(circuit.n_qubits(), cutoff);
  for (const auto& g : circuit.gates()) state.apply(g);
  MpsStats stats = state.stats();
  return {std::move(state), stats};
}

double entropy_at_cut(const MpsState& state, int cut) {
  return entropy_bits(state.schmidt_values(cut));
}

}  // namespace paintshop
