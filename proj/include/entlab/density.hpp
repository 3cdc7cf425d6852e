// Copyright 2026 the entlab developers
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

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "entlab/linalg.hpp"

namespace entlab {

/// True iff the Hermitian matrix has all eigenvalues >= -tol, certified by a
/// Cholesky factorization of A + tol*I. Avoids an eigensolver: for the small
/// well-scaled matrices here every pivot of a valid input sits far above
/// roundoff once the tol shift is added.
inline bool is_positive_semidefinite(int dim, const std::vector<cplx>& herm, double tol) {
  const std::size_t d = static_cast<std::size_t>(dim);
  if (herm.size() != d * d) {
    throw std::invalid_argument("is_positive_semidefinite: entry count mismatch");
  }
  std::vector<cplx> L(d * d, cplx(0.0));
  for (std::size_t j = 0; j < d; ++j) {
    cplx s = herm[j * d + j] + tol;
    for (std::size_t k = 0; k < j; ++k) s -= L[j * d + k] * std::conj(L[j * d + k]);
    const double pivot = s.real();
    if (pivot <= 0.0) return false;
    const double ljj = std::sqrt(pivot);
    L[j * d + j] = ljj;
    for (std::size_t i = j + 1; i < d; ++i) {
      cplx t = herm[i * d + j];
      for (std::size_t k = 0; k < j; ++k) t -= L[i * d + k] * std::conj(L[j * d + k]);
      L[i * d + j] = t / ljj;
    }
  }
  return true;
}

/// Density matrix: Hermitian, unit trace, positive semidefinite (within
/// kAccumTol on the spectrum). Stored row-major like OperatorMatrix.
class DensityMatrix {
 public:
  DensityMatrix(int dim, std::vector<cplx> entries)
      : dim_(dim), m_(std::move(entries)) {
    detail::require_supported_dim(static_cast<std::size_t>(dim_), "DensityMatrix");
    if (m_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_)) {
      throw std::invalid_argument("DensityMatrix: entry count does not match dimension");
    }
    detail::require_finite(m_, "DensityMatrix");
    cplx tr(0.0);
    for (int r = 0; r < dim_; ++r) {
      tr += at(r, r);
      for (int c = 0; c < dim_; ++c) {
        if (std::abs(at(r, c) - std::conj(at(c, r))) > kExactTol) {
          throw std::invalid_argument("DensityMatrix: not Hermitian");
        }
      }
    }
    if (std::abs(tr - cplx(1.0)) > kExactTol) {
      throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) +
                                  " != 1");
    }
    if (!is_positive_semidefinite(dim_, m_, kAccumTol)) {
      throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    }
  }

  int dim() const { return dim_; }
  const cplx& at(int r, int c) const {
    return m_[static_cast<std::size_t>(r) * dim_ + c];
  }
  const std::vector<cplx>& entries() const { return m_; }

 private:
  int dim_;
  std::vector<cplx> m_;
};

/// Builds sum_i w_i |psi_i><psi_i| from a statistical ensemble. The weights
/// must be nonnegative and sum to 1 within kAccumTol; they are then rescaled
/// by their exact sum so the result has unit trace to machine precision.
inline DensityMatrix density_from_ensemble(
    const std::vector<std::pair<StateVector, double>>& members) {
  if (members.empty()) {
    throw std::invalid_argument("density_from_ensemble: empty ensemble");
  }
  const int dim = members.front().first.dim();
  double wsum = 0.0;
  for (const auto& [state, w] : members) {
    if (state.dim() != dim) {
      throw std::invalid_argument("density_from_ensemble: mixed dimensions");
    }
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("density_from_ensemble: weights must be nonnegative");
    }
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > kAccumTol) {
    throw std::invalid_argument("density_from_ensemble: weights sum to " +
                                std::to_string(wsum) + ", expected 1");
  }
  std::vector<cplx> m(static_cast<std::size_t>(dim) * dim, cplx(0.0));
  for (const auto& [state, w] : members) {
    const double wn = w / wsum;
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        m[static_cast<std::size_t>(r) * dim + c] += wn * state[r] * std::conj(state[c]);
      }
    }
  }
  return DensityMatrix(dim, std::move(m));
}

/// tr(rho^2); 1 for pure states, 1/dim for the maximally mixed state.
inline double purity(const DensityMatrix& rho) {
  cplx acc(0.0);
  for (int i = 0; i < rho.dim(); ++i) {
    for (int k = 0; k < rho.dim(); ++k) {
      acc += rho.at(i, k) * rho.at(k, i);
    }
  }
  return acc.real();
}

/// <phi| rho |phi>, the Born weight of a projective outcome.
inline double born_weight(const DensityMatrix& rho, const StateVector& phi) {
  if (rho.dim() != phi.dim()) {
    throw std::invalid_argument("born_weight: dimension mismatch");
  }
  cplx acc(0.0);
  for (int r = 0; r < rho.dim(); ++r) {
    for (int c = 0; c < rho.dim(); ++c) {
      acc += std::conj(phi[r]) * rho.at(r, c) * phi[c];
    }
  }
  return acc.real();
}

}  // namespace entlab
