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

#pragma once

// Reference computations written independently of the library: dense
// matrices, direct enumeration and plain loops.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

/// Colour changes for a 0/1 colour vector.
inline int count_changes(const std::vector<int>& colours) {
  int c = 0;
  for (std::size_t t = 1; t < colours.size(); ++t) c += colours[t] != colours[t - 1];
  return c;
}

/// Colour vector over the sequence when body b's first car gets bit b of
/// `mask` (1 = blue) and its second car the opposite.
inline std::vector<int> colours_from_mask(const std::vector<int>& seq, std::uint64_t mask) {
  std::vector<int> seen(seq.size(), 0);
  std::vector<int> out(seq.size());
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const int b = seq[t];
    const int first = static_cast<int>((mask >> b) & 1U);
    out[t] = seen[b]++ == 0 ? first : 1 - first;
  }
  return out;
}

inline int n_bodies(const std::vector<int>& seq) { return static_cast<int>(seq.size() / 2); }

inline int min_changes(const std::vector<int>& seq) {
  int best = 1 << 30;
  for (std::uint64_t m = 0; m < (1ULL << n_bodies(seq)); ++m)
    best = std::min(best, count_changes(colours_from_mask(seq, m)));
  return best;
}

inline int max_changes(const std::vector<int>& seq) {
  int worst = 0;
  for (std::uint64_t m = 0; m < (1ULL << n_bodies(seq)); ++m)
    worst = std::max(worst, count_changes(colours_from_mask(seq, m)));
  return worst;
}

/// Greedy rule traced literally: the first car is red, every first occurrence
/// repeats the previous colour, second occurrences are forced.
inline std::vector<int> greedy_trace(const std::vector<int>& seq) {
  std::vector<int> first_colour(seq.size(), -1), out(seq.size());
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const int b = seq[t];
    if (first_colour[b] < 0) {
      out[t] = t == 0 ? 0 : out[t - 1];
      first_colour[b] = out[t];
    } else {
      out[t] = 1 - first_colour[b];
    }
  }
  return out;
}

struct Coupling {
  int i, j;
  double w;
};

/// Dense Ising problem: E(s) = (1/2)(sum J s_i s_j + sum h s_i + C).
struct DenseIsing {
  int n = 0;
  std::vector<Coupling> edges;
  std::vector<double> h;
  double c = 0.0;

  double energy_of_index(std::uint64_t x) const {
    auto s = [&](int q) { return ((x >> q) & 1U) ? -1.0 : 1.0; };
    double e = c;
    for (const auto& ed : edges) e += ed.w * s(ed.i) * s(ed.j);
    for (int q = 0; q < n; ++q) e += (h.empty() ? 0.0 : h[q]) * s(q);
    return 0.5 * e;
  }
};

/// exp(-i beta X) on qubit q as a full 2^n matrix via Kronecker products
/// (bit q of the index is qubit q, so qubit 0 is the rightmost factor).
inline Eigen::MatrixXcd mixer_matrix(int n, int q, double beta) {
  Eigen::Matrix2cd x;
  x << std::cos(beta), cd(0, -std::sin(beta)), cd(0, -std::sin(beta)), std::cos(beta);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) {
    const Eigen::Matrix2cd f = k == q ? x : Eigen::Matrix2cd::Identity();
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = m(r, c) * f;
    m = next;
  }
  return m;
}

/// prod_l exp(-i beta_l sum X) exp(-i gamma_l (H - C/2)) |+>^n, up to global phase.
inline Eigen::VectorXcd qaoa_state(const DenseIsing& g, const std::vector<double>& betas,
                                   const std::vector<double>& gammas) {
  const std::uint64_t dim = 1ULL << g.n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(double(dim)));
  for (std::size_t l = 0; l < betas.size(); ++l) {
    for (std::uint64_t x = 0; x < dim; ++x)
      psi[x] *= std::exp(cd(0, -gammas[l] * (g.energy_of_index(x) - 0.5 * g.c)));
    for (int q = 0; q < g.n; ++q) psi = mixer_matrix(g.n, q, betas[l]) * psi;
  }
  return psi;
}

inline double zz(const Eigen::VectorXcd& psi, int i, int j) {
  double m = 0.0;
  for (Eigen::Index x = 0; x < psi.size(); ++x) {
    const double si = ((x >> i) & 1) ? -1.0 : 1.0;
    const double sj = ((x >> j) & 1) ? -1.0 : 1.0;
    m += std::norm(psi[x]) * si * sj;
  }
  return m;
}

inline double energy(const DenseIsing& g, const Eigen::VectorXcd& psi) {
  double e = 0.0;
  for (Eigen::Index x = 0; x < psi.size(); ++x) e += std::norm(psi[x]) * g.energy_of_index(x);
  return e;
}

/// Von Neumann entropy in bits of [0, cut) | [cut, n) from the dense state.
inline double entropy_bits(const Eigen::VectorXcd& psi, int n, int cut) {
  const Eigen::Index rows = Eigen::Index(1) << cut;
  const Eigen::Index cols = Eigen::Index(1) << (n - cut);
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index x = 0; x < psi.size(); ++x) m(x & (rows - 1), x >> cut) = psi[x];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  double s = 0.0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    const double p = svd.singularValues()[k] * svd.singularValues()[k];
    if (p > 1e-15) s -= p * std::log2(p);
  }
  return s;
}

/// |<a|b>|, insensitive to global phase.
inline double overlap(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return std::abs(a.dot(b));
}

}  // namespace oracle
