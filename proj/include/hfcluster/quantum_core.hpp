// Copyright 2026 The hfcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense state-vector / density-matrix engine over role-labelled wires.
//
// Wire 0 is the most significant bit of the basis index, so a basis label
// reads left to right in wire order: |e n0 n1 ... p0 p1 ...>. Photon wires
// are appended at the least significant end in emission order.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfcluster {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr int kMaxQubits = 14;

// ---------------------------------------------------------------------------
// Wire roles
// ---------------------------------------------------------------------------

enum class RoleKind { Electron, Nuclear, Photon };

struct QubitRole {
  RoleKind kind = RoleKind::Electron;
  int index = 0;

  static QubitRole electron() { return {RoleKind::Electron, 0}; }
  static QubitRole nuclear(int i) { return {RoleKind::Nuclear, i}; }
  static QubitRole photon(int i) { return {RoleKind::Photon, i}; }

  friend bool operator==(const QubitRole&, const QubitRole&) = default;

  std::string label() const {
    switch (kind) {
      case RoleKind::Electron: return "e";
      case RoleKind::Nuclear: return "n" + std::to_string(index);
      case RoleKind::Photon: return "p" + std::to_string(index);
    }
    return "?";
  }
};

/// Ordered wire labels of a register. Exactly one electron; nuclear and
/// photon indices unique and contiguous from 0.
class Register {
 public:
  Register() = default;
  explicit Register(std::vector<QubitRole> wires) : wires_(std::move(wires)) { validate(); }

  /// Electron followed by `nuclear` register qubits, no photons.
  static Register spins(int nuclear) {
    std::vector<QubitRole> w{QubitRole::electron()};
    for (int i = 0; i < nuclear; ++i) w.push_back(QubitRole::nuclear(i));
    return Register(std::move(w));
  }

  /// Photon-only register, e.g. the output after the spins are measured.
  static Register photons(int count) {
    if (count < 0 || count > kMaxQubits) throw std::invalid_argument("photon count out of range");
    std::vector<QubitRole> w;
    for (int i = 0; i < count; ++i) w.push_back(QubitRole::photon(i));
    return Register(std::move(w), true);
  }

  int size() const { return static_cast<int>(wires_.size()); }
  const QubitRole& operator[](int w) const { return wires_.at(static_cast<size_t>(w)); }
  const std::vector<QubitRole>& wires() const { return wires_; }

  int count(RoleKind k) const {
    return static_cast<int>(std::count_if(wires_.begin(), wires_.end(),
                                          [k](const QubitRole& r) { return r.kind == k; }));
  }
  int photon_count() const { return count(RoleKind::Photon); }
  int nuclear_count() const { return count(RoleKind::Nuclear); }

  int index_of(const QubitRole& role) const {
    for (int w = 0; w < size(); ++w)
      if (wires_[static_cast<size_t>(w)] == role) return w;
    throw std::out_of_range("register has no wire " + role.label());
  }
  bool contains(const QubitRole& role) const {
    return std::find(wires_.begin(), wires_.end(), role) != wires_.end();
  }

  Register with_photon() const {
    auto w = wires_;
    w.push_back(QubitRole::photon(photon_count()));
    return Register(std::move(w), /*validated=*/true);
  }

  /// Sub-register keeping the listed wires (ascending order). Role
  /// invariants are not enforced on sub-registers, which may lack the
  /// electron after a partial trace.
  Register subset(std::span<const int> keep) const {
    std::vector<QubitRole> w;
    for (int k : keep) w.push_back((*this)[k]);
    return Register(std::move(w), true);
  }

  std::string label() const {
    std::string s;
    for (const auto& r : wires_) s += (s.empty() ? "" : ",") + r.label();
    return s;
  }

  friend bool operator==(const Register&, const Register&) = default;

 private:
  Register(std::vector<QubitRole> wires, bool) : wires_(std::move(wires)) {}

  void validate() const {
    if (count(RoleKind::Electron) != 1)
      throw std::invalid_argument("register needs exactly one electron wire");
    for (RoleKind k : {RoleKind::Nuclear, RoleKind::Photon}) {
      std::vector<int> idx;
      for (const auto& r : wires_)
        if (r.kind == k) idx.push_back(r.index);
      std::sort(idx.begin(), idx.end());
      for (size_t i = 0; i < idx.size(); ++i)
        if (idx[i] != static_cast<int>(i))
          throw std::invalid_argument("nuclear/photon indices must be unique and contiguous from 0");
    }
    if (size() > kMaxQubits) throw std::invalid_argument("register exceeds qubit limit");
  }

  std::vector<QubitRole> wires_;
};

inline size_t dim_of(int qubits) { return size_t{1} << qubits; }

/// Bit mask selecting wire `w` in an n-wire basis index.
inline size_t wire_mask(int n, int w) { return size_t{1} << (n - 1 - w); }

// ---------------------------------------------------------------------------
// Unitary
// ---------------------------------------------------------------------------

class Unitary {
 public:
  static constexpr double kTolerance = 1e-10;

  Unitary() = default;
  explicit Unitary(CMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 2 || (m_.rows() & (m_.rows() - 1)) != 0)
      throw std::invalid_argument("unitary must be square with power-of-two dimension");
    arity_ = 0;
    for (auto d = m_.rows(); d > 1; d >>= 1) ++arity_;
    const double err = (m_.adjoint() * m_ - CMatrix::Identity(m_.rows(), m_.cols())).norm();
    if (err > kTolerance) throw std::invalid_argument("matrix is not unitary (|U'U - I| = " + std::to_string(err) + ")");
  }

  const CMatrix& matrix() const { return m_; }
  int arity() const { return arity_; }
  Eigen::Index dim() const { return m_.rows(); }
  Unitary adjoint() const { return Unitary(m_.adjoint(), arity_); }

  friend Unitary operator*(const Unitary& a, const Unitary& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("unitary arity mismatch");
    return Unitary(a.m_ * b.m_, a.arity_);
  }

  static Unitary identity(int arity) {
    return Unitary(CMatrix::Identity(static_cast<Eigen::Index>(dim_of(arity)), static_cast<Eigen::Index>(dim_of(arity))), arity);
  }

 private:
  Unitary(CMatrix m, int arity) : m_(std::move(m)), arity_(arity) {}
  CMatrix m_;
  int arity_ = 0;
};

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

class PureState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  PureState(Register reg, CVector amplitudes) : reg_(std::move(reg)), amp_(std::move(amplitudes)) {
    if (static_cast<size_t>(amp_.size()) != dim_of(reg_.size()))
      throw std::invalid_argument("amplitude vector does not match register size");
    if (std::abs(amp_.norm() - 1.0) > kNormTolerance)
      throw std::invalid_argument("pure state is not normalised");
  }

  /// Normalises `amplitudes` before construction.
  static PureState normalized(Register reg, CVector amplitudes) {
    const double n = amplitudes.norm();
    if (n < 1e-300) throw std::invalid_argument("cannot normalise a zero vector");
    return PureState(std::move(reg), amplitudes / n);
  }

  /// Computational basis state; `bits[w]` is the value of wire w.
  static PureState basis(Register reg, const std::vector<int>& bits) {
    if (static_cast<int>(bits.size()) != reg.size()) throw std::invalid_argument("basis label length mismatch");
    size_t idx = 0;
    for (int b : bits) idx = (idx << 1) | static_cast<size_t>(b & 1);
    CVector a = CVector::Zero(static_cast<Eigen::Index>(dim_of(reg.size())));
    a(static_cast<Eigen::Index>(idx)) = 1.0;
    return PureState(std::move(reg), std::move(a));
  }

  static PureState all(Register reg, int bit) {
    std::vector<int> bits(static_cast<size_t>(reg.size()), bit);
    return basis(std::move(reg), bits);
  }

  const Register& reg() const { return reg_; }
  const CVector& amplitudes() const { return amp_; }
  int qubits() const { return reg_.size(); }
  Eigen::Index dim() const { return amp_.size(); }
  double norm() const { return amp_.norm(); }

  cplx inner(const PureState& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("dimension mismatch in inner product");
    return amp_.dot(other.amp_);
  }

 private:
  Register reg_;
  CVector amp_;
};

class DensityMatrix {
 public:
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kPsdTolerance = -1e-10;

  DensityMatrix(Register reg, CMatrix rho, bool check_psd = true) : reg_(std::move(reg)), rho_(std::move(rho)) {
    const auto d = static_cast<Eigen::Index>(dim_of(reg_.size()));
    if (rho_.rows() != d || rho_.cols() != d) throw std::invalid_argument("density matrix does not match register size");
    if ((rho_ - rho_.adjoint()).norm() > 1e-10) throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho_.trace().real() - 1.0) > kTraceTolerance) throw std::invalid_argument("density matrix trace is not 1");
    if (check_psd) {
      Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_, Eigen::EigenvaluesOnly);
      if (es.eigenvalues().minCoeff() < kPsdTolerance) throw std::invalid_argument("density matrix is not positive semidefinite");
    }
  }

  static DensityMatrix from_pure(const PureState& psi) {
    return DensityMatrix(psi.reg(), psi.amplitudes() * psi.amplitudes().adjoint(), false);
  }

  const Register& reg() const { return reg_; }
  const CMatrix& matrix() const { return rho_; }
  Eigen::Index dim() const { return rho_.rows(); }
  double purity() const { return (rho_ * rho_).trace().real(); }

 private:
  Register reg_;
  CMatrix rho_;
};

/// Averages weighted pure states into a density matrix.
class MixtureAccumulator {
 public:
  explicit MixtureAccumulator(Register reg)
      : reg_(std::move(reg)), sum_(CMatrix::Zero(static_cast<Eigen::Index>(dim_of(reg_.size())), static_cast<Eigen::Index>(dim_of(reg_.size())))) {}

  void add(const CVector& psi, double weight) {
    sum_.noalias() += weight * (psi * psi.adjoint());
    total_ += weight;
  }
  void merge(const MixtureAccumulator& other) {
    sum_ += other.sum_;
    total_ += other.total_;
  }
  double total_weight() const { return total_; }

  DensityMatrix result() const {
    if (total_ <= 0) throw std::logic_error("empty mixture");
    CMatrix rho = sum_ / total_;
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return DensityMatrix(reg_, std::move(rho));
  }

 private:
  Register reg_;
  CMatrix sum_;
  double total_ = 0;
};

// ---------------------------------------------------------------------------
// Gate application
// ---------------------------------------------------------------------------

namespace detail {

inline void check_targets(int n, int arity, std::span<const int> targets) {
  if (static_cast<int>(targets.size()) != arity)
    throw std::invalid_argument("gate arity does not match number of targets");
  for (size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n) throw std::out_of_range("gate target out of range");
    for (size_t j = 0; j < i; ++j)
      if (targets[i] == targets[j]) throw std::invalid_argument("duplicate gate target");
  }
}

/// In-place application of a 2^k x 2^k matrix to `targets` of an n-wire
/// amplitude vector. targets[0] is the most significant local bit.
inline void apply_matrix_inplace(CVector& amp, int n, const CMatrix& u, std::span<const int> targets) {
  const int k = static_cast<int>(targets.size());
  const size_t local_dim = dim_of(k);
  std::vector<size_t> masks(static_cast<size_t>(k));
  size_t all = 0;
  for (int i = 0; i < k; ++i) {
    masks[static_cast<size_t>(i)] = wire_mask(n, targets[static_cast<size_t>(i)]);
    all |= masks[static_cast<size_t>(i)];
  }
  std::vector<size_t> offsets(local_dim);
  for (size_t l = 0; l < local_dim; ++l) {
    size_t off = 0;
    for (int i = 0; i < k; ++i)
      if (l & (size_t{1} << (k - 1 - i))) off |= masks[static_cast<size_t>(i)];
    offsets[l] = off;
  }
  std::vector<cplx> in(local_dim), out(local_dim);
  const size_t total = static_cast<size_t>(amp.size());
  for (size_t base = 0; base < total; ++base) {
    if (base & all) continue;
    for (size_t l = 0; l < local_dim; ++l) in[l] = amp(static_cast<Eigen::Index>(base | offsets[l]));
    for (size_t r = 0; r < local_dim; ++r) {
      cplx acc = 0;
      for (size_t c = 0; c < local_dim; ++c) acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      out[r] = acc;
    }
    for (size_t l = 0; l < local_dim; ++l) amp(static_cast<Eigen::Index>(base | offsets[l])) = out[l];
  }
}

}  // namespace detail

inline PureState apply_gate(const PureState& state, const Unitary& u, std::span<const int> targets) {
  detail::check_targets(state.qubits(), u.arity(), targets);
  CVector amp = state.amplitudes();
  detail::apply_matrix_inplace(amp, state.qubits(), u.matrix(), targets);
  return PureState::normalized(state.reg(), std::move(amp));
}

inline PureState apply_gate(const PureState& state, const Unitary& u, std::initializer_list<int> targets) {
  std::vector<int> t(targets);
  return apply_gate(state, u, std::span<const int>(t));
}

/// rho -> U rho U^dagger on the chosen wires.
inline DensityMatrix apply_gate(const DensityMatrix& rho, const Unitary& u, std::span<const int> targets) {
  const int n = rho.reg().size();
  detail::check_targets(n, u.arity(), targets);
  CMatrix m = rho.matrix();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    CVector col = m.col(c);
    detail::apply_matrix_inplace(col, n, u.matrix(), targets);
    m.col(c) = col;
  }
  CMatrix mt = m.adjoint();
  for (Eigen::Index c = 0; c < mt.cols(); ++c) {
    CVector col = mt.col(c);
    detail::apply_matrix_inplace(col, n, u.matrix(), targets);
    mt.col(c) = col;
  }
  CMatrix out = mt.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(rho.reg(), std::move(out), false);
}

/// Appends a photon wire in |initial>; the new wire is the least significant.
inline PureState add_photon_qubit(const PureState& state, int initial = 0) {
  if (initial != 0 && initial != 1) throw std::invalid_argument("photon initial label must be 0 or 1");
  const Register reg = state.reg().with_photon();
  CVector amp = CVector::Zero(state.dim() * 2);
  for (Eigen::Index i = 0; i < state.dim(); ++i) amp(2 * i + initial) = state.amplitudes()(i);
  return PureState(reg, std::move(amp));
}

// ---------------------------------------------------------------------------
// Measurement
// ---------------------------------------------------------------------------

enum class MeasureBasis { Z, X };

struct MeasureResult {
  int outcome = 0;
  PureState state;
  double probability = 0;
};

/// Projective measurement of one wire. With `forced` set the outcome is
/// imposed (error if its probability is below 1e-12); otherwise it is sampled
/// from `rng`. The measured wire stays in the register, collapsed.
inline MeasureResult project_measure(const PureState& state, int wire, MeasureBasis basis,
                                     std::optional<int> forced, std::mt19937_64* rng = nullptr) {
  const int n = state.qubits();
  if (wire < 0 || wire >= n) throw std::out_of_range("measured wire out of range");
  CVector amp = state.amplitudes();
  const double h = 1.0 / std::sqrt(2.0);
  CMatrix had(2, 2);
  had << h, h, h, -h;
  const int w[1] = {wire};
  if (basis == MeasureBasis::X) detail::apply_matrix_inplace(amp, n, had, w);

  const size_t mask = wire_mask(n, wire);
  double p1 = 0;
  for (Eigen::Index i = 0; i < amp.size(); ++i)
    if (static_cast<size_t>(i) & mask) p1 += std::norm(amp(i));
  p1 = std::clamp(p1, 0.0, 1.0);

  int outcome;
  if (forced) {
    outcome = *forced;
    if (outcome != 0 && outcome != 1) throw std::invalid_argument("outcome must be 0 or 1");
  } else {
    if (!rng) throw std::invalid_argument("sampled measurement needs an rng");
    std::uniform_real_distribution<double> u(0.0, 1.0);
    outcome = u(*rng) < p1 ? 1 : 0;
  }
  const double p = outcome ? p1 : 1.0 - p1;
  if (p < 1e-12) throw std::domain_error("measurement outcome has zero probability");

  for (Eigen::Index i = 0; i < amp.size(); ++i) {
    const bool bit = (static_cast<size_t>(i) & mask) != 0;
    if (bit != (outcome == 1)) amp(i) = 0;
  }
  amp /= std::sqrt(p);
  if (basis == MeasureBasis::X) detail::apply_matrix_inplace(amp, n, had, w);
  return {outcome, PureState::normalized(state.reg(), std::move(amp)), p};
}

/// Drops a wire that is in a computational basis state (e.g. after a z
/// measurement). Throws if the wire is still entangled or in superposition.
inline PureState remove_basis_wire(const PureState& state, int wire) {
  const int n = state.qubits();
  const size_t mask = wire_mask(n, wire);
  double p1 = 0;
  for (Eigen::Index i = 0; i < state.dim(); ++i)
    if (static_cast<size_t>(i) & mask) p1 += std::norm(state.amplitudes()(i));
  int bit;
  if (p1 > 1 - 1e-10) bit = 1;
  else if (p1 < 1e-10) bit = 0;
  else throw std::invalid_argument("wire is not in a basis state");

  std::vector<QubitRole> w;
  for (int i = 0; i < n; ++i)
    if (i != wire) w.push_back(state.reg()[i]);
  CVector out(state.dim() / 2);
  const size_t low = mask - 1;
  for (Eigen::Index j = 0; j < out.size(); ++j) {
    const size_t jj = static_cast<size_t>(j);
    const size_t idx = ((jj & ~low) << 1) | (bit ? mask : 0) | (jj & low);
    out(j) = state.amplitudes()(static_cast<Eigen::Index>(idx));
  }
  // The remaining wires may no longer contain an electron; skip role checks.
  return PureState::normalized(state.reg().subset([&] {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (i != wire) keep.push_back(i);
    return keep;
  }()), std::move(out));
}

// ---------------------------------------------------------------------------
// Fidelities and reduced states
// ---------------------------------------------------------------------------

/// sqrt(<psi|rho|psi>), the square-root convention used throughout.
inline double state_fidelity(const DensityMatrix& rho, const PureState& psi) {
  if (rho.dim() != psi.dim()) throw std::invalid_argument("dimension mismatch in fidelity");
  const double v = psi.amplitudes().dot(rho.matrix() * psi.amplitudes()).real();
  return std::sqrt(std::clamp(v, 0.0, 1.0));
}

inline double state_fidelity(const PureState& a, const PureState& b) {
  return std::min(1.0, std::abs(a.inner(b)));
}

/// max over pure alpha of sqrt(<alpha|rho|alpha>) = sqrt(lambda_max).
inline double max_pure_fidelity(const CMatrix& rho) {
  if (rho.rows() != rho.cols() || (rho - rho.adjoint()).norm() > 1e-10)
    throw std::invalid_argument("max_pure_fidelity needs a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
  return std::sqrt(std::clamp(es.eigenvalues().maxCoeff(), 0.0, 1.0));
}
inline double max_pure_fidelity(const DensityMatrix& rho) { return max_pure_fidelity(rho.matrix()); }

/// Reduced density matrix on `keep` (ascending wire order).
inline DensityMatrix partial_trace(const PureState& state, std::vector<int> keep) {
  if (keep.empty()) throw std::invalid_argument("partial trace needs at least one kept wire");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  const int n = state.qubits();
  for (int k : keep)
    if (k < 0 || k >= n) throw std::out_of_range("kept wire out of range");
  std::vector<int> traced;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(keep.begin(), keep.end(), i)) traced.push_back(i);

  const int nk = static_cast<int>(keep.size());
  const int nt = static_cast<int>(traced.size());
  // Reshape into (kept index) x (traced index), rho = M M^dagger.
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim_of(nk)), static_cast<Eigen::Index>(dim_of(nt)));
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    const size_t idx = static_cast<size_t>(i);
    size_t a = 0, b = 0;
    for (int k : keep) a = (a << 1) | ((idx & wire_mask(n, k)) ? 1u : 0u);
    for (int t : traced) b = (b << 1) | ((idx & wire_mask(n, t)) ? 1u : 0u);
    m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = state.amplitudes()(i);
  }
  CMatrix rho = m * m.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(state.reg().subset(keep), std::move(rho), false);
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  if (keep.empty()) throw std::invalid_argument("partial trace needs at least one kept wire");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  const int n = rho.reg().size();
  std::vector<int> traced;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(keep.begin(), keep.end(), i)) traced.push_back(i);
  const int nk = static_cast<int>(keep.size());
  const auto dk = static_cast<Eigen::Index>(dim_of(nk));
  CMatrix out = CMatrix::Zero(dk, dk);
  auto split = [&](size_t idx, size_t& a, size_t& b) {
    a = 0;
    b = 0;
    for (int k : keep) a = (a << 1) | ((idx & wire_mask(n, k)) ? 1u : 0u);
    for (int t : traced) b = (b << 1) | ((idx & wire_mask(n, t)) ? 1u : 0u);
  };
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    size_t ai, bi;
    split(static_cast<size_t>(i), ai, bi);
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
      size_t aj, bj;
      split(static_cast<size_t>(j), aj, bj);
      if (bi == bj) out(static_cast<Eigen::Index>(ai), static_cast<Eigen::Index>(aj)) += rho.matrix()(i, j);
    }
  }
  return DensityMatrix(rho.reg().subset(keep), std::move(out), false);
}

/// Von Neumann entropy in bits.
inline double entropy_bits(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  double s = 0;
  for (double l : es.eigenvalues())
    if (l > 1e-14) s -= l * std::log2(l);
  return s;
}

// ---------------------------------------------------------------------------
// Standard gates
// ---------------------------------------------------------------------------

namespace gates {

inline CMatrix pauli_x() { CMatrix m(2, 2); m << 0, 1, 1, 0; return m; }
inline CMatrix pauli_y() { CMatrix m(2, 2); m << 0, cplx(0, -1), cplx(0, 1), 0; return m; }
inline CMatrix pauli_z() { CMatrix m(2, 2); m << 1, 0, 0, -1; return m; }
inline CMatrix id2() { return CMatrix::Identity(2, 2); }

/// exp(-i theta/2 sigma_axis), axis in {'x','y','z'}.
inline CMatrix rotation(char axis, double theta) {
  const CMatrix s = axis == 'x' ? pauli_x() : axis == 'y' ? pauli_y() : pauli_z();
  return std::cos(theta / 2) * id2() - cplx(0, 1) * std::sin(theta / 2) * s;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Unitary X() { return Unitary(pauli_x()); }
inline Unitary Y() { return Unitary(pauli_y()); }
inline Unitary Z() { return Unitary(pauli_z()); }
inline Unitary H() {
  CMatrix m(2, 2);
  const double h = 1.0 / std::sqrt(2.0);
  m << h, h, h, -h;
  return Unitary(m);
}
inline Unitary Rx(double t) { return Unitary(rotation('x', t)); }
inline Unitary Ry(double t) { return Unitary(rotation('y', t)); }
inline Unitary Rz(double t) { return Unitary(rotation('z', t)); }

inline Unitary CZ() {
  CMatrix m = CMatrix::Identity(4, 4);
  m(3, 3) = -1;
  return Unitary(m);
}
/// Control is the first target.
inline Unitary CNOT() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return Unitary(m);
}
inline Unitary SWAP() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return Unitary(m);
}

}  // namespace gates

}  // namespace hfcluster
