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
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace entlab {

using cplx = std::complex<double>;

/// Tolerance for exact-algebra checks on the small analytic matrices the
/// toolkit works with.
inline constexpr double kExactTol = 1e-12;

/// Tolerance for accumulated floating-point computation (grids, sums).
inline constexpr double kAccumTol = 1e-9;

inline bool is_finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// States and operators are restricted to qubits, qutrits, and qubit pairs.
inline bool dim_supported(int d) { return d == 2 || d == 3 || d == 4; }

namespace detail {

inline void require_supported_dim(std::size_t n, const char* what) {
  if (!dim_supported(static_cast<int>(n))) {
    throw std::invalid_argument(std::string(what) + ": unsupported dimension " +
                                std::to_string(n) + " (must be 2, 3, or 4)");
  }
}

inline void require_finite(const std::vector<cplx>& v, const char* what) {
  for (const cplx& z : v) {
    if (!is_finite(z)) {
      throw std::invalid_argument(std::string(what) +
                                  ": non-finite amplitude");
    }
  }
}

}  // namespace detail

/// Normalized complex amplitude vector of dimension 2, 3, or 4. Every public
/// constructor enforces unit norm; `unchecked` exists because applying a
/// non-unitary operator may legitimately denormalize (callers inspect norm()).
class StateVector {
 public:
  /// Checked constructor: amplitudes must already be unit-norm within
  /// kExactTol.
  explicit StateVector(std::vector<cplx> amps) : amps_(std::move(amps)) {
    detail::require_supported_dim(amps_.size(), "StateVector");
    detail::require_finite(amps_, "StateVector");
    double n2 = 0.0;
    for (const cplx& a : amps_) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > kExactTol) {
      throw std::invalid_argument("StateVector: amplitudes not normalized (|amps|^2 = " +
                                  std::to_string(n2) + ")");
    }
  }

  /// Rescales the amplitudes to unit norm.
  static StateVector normalized(std::vector<cplx> amps) {
    detail::require_supported_dim(amps.size(), "StateVector");
    detail::require_finite(amps, "StateVector");
    double n2 = 0.0;
    for (const cplx& a : amps) n2 += std::norm(a);
    if (n2 <= 1e-24) {
      throw std::invalid_argument("StateVector: cannot normalize a (near-)zero vector");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx& a : amps) a *= inv;
    return StateVector(Raw{}, std::move(amps));
  }

  /// No normalization check; used for operator outputs that may carry a
  /// non-unit norm. Finiteness and dimension are still enforced.
  static StateVector unchecked(std::vector<cplx> amps) {
    detail::require_supported_dim(amps.size(), "StateVector");
    detail::require_finite(amps, "StateVector");
    return StateVector(Raw{}, std::move(amps));
  }

  int dim() const { return static_cast<int>(amps_.size()); }
  const std::vector<cplx>& amps() const { return amps_; }
  const cplx& operator[](int i) const { return amps_[static_cast<std::size_t>(i)]; }

  double norm() const {
    double n2 = 0.0;
    for (const cplx& a : amps_) n2 += std::norm(a);
    return std::sqrt(n2);
  }

 private:
  struct Raw {};
  StateVector(Raw, std::vector<cplx> amps) : amps_(std::move(amps)) {}
  std::vector<cplx> amps_;
};

/// Square complex matrix of dimension 2, 3, or 4, stored row-major.
/// Unitarity is deliberately a predicate (is_unitary), not a constructor
/// constraint: the toolkit also represents broken gates.
class OperatorMatrix {
 public:
  OperatorMatrix(int dim, std::vector<cplx> row_major)
      : dim_(dim), m_(std::move(row_major)) {
    detail::require_supported_dim(static_cast<std::size_t>(dim_), "OperatorMatrix");
    if (m_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_)) {
      throw std::invalid_argument("OperatorMatrix: entry count does not match dimension");
    }
    detail::require_finite(m_, "OperatorMatrix");
  }

  static OperatorMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t d = rows.size();
    std::vector<cplx> m;
    m.reserve(d * d);
    for (const auto& row : rows) {
      if (row.size() != d) {
        throw std::invalid_argument("OperatorMatrix: ragged row list");
      }
      m.insert(m.end(), row.begin(), row.end());
    }
    return OperatorMatrix(static_cast<int>(d), std::move(m));
  }

  static OperatorMatrix identity(int dim) {
    detail::require_supported_dim(static_cast<std::size_t>(dim), "OperatorMatrix");
    std::vector<cplx> m(static_cast<std::size_t>(dim) * dim, cplx(0.0));
    for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i) * dim + i] = 1.0;
    return OperatorMatrix(dim, std::move(m));
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

/// Result of a global-phase comparison. When matched, a == phase * b with
/// |phase| = 1.
struct PhaseMatch {
  bool matched = false;
  cplx phase = cplx(1.0);
};

// --- basis states ---

inline StateVector basis_state(int dim, int index) {
  detail::require_supported_dim(static_cast<std::size_t>(dim), "basis_state");
  if (index < 0 || index >= dim) {
    throw std::invalid_argument("basis_state: index out of range");
  }
  std::vector<cplx> a(static_cast<std::size_t>(dim), cplx(0.0));
  a[static_cast<std::size_t>(index)] = 1.0;
  return StateVector(std::move(a));
}

inline StateVector ket0() { return basis_state(2, 0); }
inline StateVector ket1() { return basis_state(2, 1); }
inline StateVector ket_plus() { return StateVector::normalized({1.0, 1.0}); }
inline StateVector ket_minus() { return StateVector::normalized({1.0, -1.0}); }
inline StateVector ket_plus_i() { return StateVector::normalized({1.0, cplx(0.0, 1.0)}); }
inline StateVector ket_minus_i() { return StateVector::normalized({1.0, cplx(0.0, -1.0)}); }

// --- core operations ---

/// Raw Kronecker product of amplitude grids; bilinear, no normalization and
/// no dimension cap. The StateVector/OperatorMatrix tensor wrappers below add
/// the toolkit's dimension policy.
inline std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out;
  out.reserve(a.size() * b.size());
  for (const cplx& x : a) {
    for (const cplx& y : b) out.push_back(x * y);
  }
  return out;
}

/// Kronecker product of states. Only qubit pairs are supported: the product
/// dimension must stay within {2,3,4}, so 2x2 -> 4 is the lone valid case.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
  const int d = a.dim() * b.dim();
  if (!dim_supported(d)) {
    throw std::invalid_argument("tensor: product dimension " + std::to_string(d) +
                                " unsupported (qutrit pairs are out of range)");
  }
  return StateVector(kron(a.amps(), b.amps()));
}

inline OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b) {
  const int d = a.dim() * b.dim();
  if (!dim_supported(d)) {
    throw std::invalid_argument("tensor: product dimension " + std::to_string(d) +
                                " unsupported");
  }
  std::vector<cplx> m(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      for (int k = 0; k < b.dim(); ++k) {
        for (int l = 0; l < b.dim(); ++l) {
          m[static_cast<std::size_t>(i * b.dim() + k) * d + (j * b.dim() + l)] =
              a.at(i, j) * b.at(k, l);
        }
      }
    }
  }
  return OperatorMatrix(d, std::move(m));
}

/// Matrix-vector product. The result is NOT renormalized: a non-unitary
/// operator may denormalize, and callers check norm() when that matters.
inline StateVector apply(const OperatorMatrix& op, const StateVector& s) {
  if (op.dim() != s.dim()) {
    throw std::invalid_argument("apply: operator dimension " + std::to_string(op.dim()) +
                                " does not match state dimension " + std::to_string(s.dim()));
  }
  std::vector<cplx> out(static_cast<std::size_t>(s.dim()), cplx(0.0));
  for (int i = 0; i < op.dim(); ++i) {
    cplx acc(0.0);
    for (int j = 0; j < op.dim(); ++j) acc += op.at(i, j) * s[j];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return StateVector::unchecked(std::move(out));
}

inline OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("multiply: dimension mismatch");
  }
  const int d = a.dim();
  std::vector<cplx> m(static_cast<std::size_t>(d) * d, cplx(0.0));
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx(0.0)) continue;
      for (int j = 0; j < d; ++j) {
        m[static_cast<std::size_t>(i) * d + j] += aik * b.at(k, j);
      }
    }
  }
  return OperatorMatrix(d, std::move(m));
}

inline OperatorMatrix adjoint(const OperatorMatrix& a) {
  const int d = a.dim();
  std::vector<cplx> m(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m[static_cast<std::size_t>(i) * d + j] = std::conj(a.at(j, i));
    }
  }
  return OperatorMatrix(d, std::move(m));
}

/// <a|b>, conjugating the first argument.
inline cplx inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner: dimension mismatch");
  }
  cplx acc(0.0);
  for (int i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

/// |<a|b>|^2.
inline double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b));
}

/// True iff the max-entry residual of op†·op - I is within tol.
inline bool is_unitary(const OperatorMatrix& op, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("is_unitary: tolerance must be positive");
  }
  const OperatorMatrix r = multiply(adjoint(op), op);
  double resid = 0.0;
  for (int i = 0; i < op.dim(); ++i) {
    for (int j = 0; j < op.dim(); ++j) {
      const cplx expect = (i == j) ? cplx(1.0) : cplx(0.0);
      resid = std::max(resid, std::abs(r.at(i, j) - expect));
    }
  }
  return resid <= tol;
}

namespace detail {

// Phase is read off the entry of largest modulus in b, which avoids dividing
// by near-zero entries; the first such entry wins, so the result is
// deterministic.
inline PhaseMatch match_phase(const std::vector<cplx>& a, const std::vector<cplx>& b,
                              double tol) {
  double amax = 0.0;
  double bmax = 0.0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    amax = std::max(amax, std::abs(a[i]));
    const double bm = std::abs(b[i]);
    if (bm > bmax) {
      bmax = bm;
      k = i;
    }
  }
  if (amax == 0.0 && bmax == 0.0) {
    throw std::invalid_argument("equal_up_to_global_phase: both arguments are zero");
  }
  if (bmax == 0.0 || std::abs(a[k]) == 0.0) {
    return {false, cplx(1.0)};
  }
  cplx phase = a[k] / b[k];
  phase /= std::abs(phase);
  double resid = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    resid = std::max(resid, std::abs(a[i] - phase * b[i]));
  }
  return {resid <= tol, phase};
}

}  // namespace detail

/// Matches a against phase * b. Physical states are rays, so this is the
/// equality that matters for state identification.
inline PhaseMatch equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                                           double tol = kExactTol) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
  }
  return detail::match_phase(a.amps(), b.amps(), tol);
}

inline PhaseMatch equal_up_to_global_phase(const OperatorMatrix& a, const OperatorMatrix& b,
                                           double tol = kExactTol) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
  }
  return detail::match_phase(a.entries(), b.entries(), tol);
}

/// Max entrywise difference; handy for exact-matrix assertions.
inline double max_entry_distance(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("max_entry_distance: dimension mismatch");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return d;
}

inline double max_entry_distance(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("max_entry_distance: dimension mismatch");
  }
  double d = 0.0;
  for (int i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace entlab
