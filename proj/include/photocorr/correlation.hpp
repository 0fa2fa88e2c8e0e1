#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "photocorr/geometry.hpp"

namespace photocorr {

using complex = std::complex<double>;

/// Detector phases delta(r_1) ... delta(r_N) in radians, one per detector.
class DetectorSet {
public:
  DetectorSet() = default;
  explicit DetectorSet(std::vector<double> phases);
  DetectorSet(std::initializer_list<double> phases) : DetectorSet(std::vector<double>(phases)) {}

  std::size_t size() const noexcept { return phases_.size(); }
  double operator[](std::size_t i) const { return phases_[i]; }
  std::span<const double> phases() const noexcept { return phases_; }

  friend bool operator==(const DetectorSet &, const DetectorSet &) = default;

private:
  std::vector<double> phases_;
};

inline constexpr std::size_t kNaiveCap = 9;
inline constexpr std::size_t kRyserCap = 30;
inline constexpr std::size_t kSpinOracleCap = 12;

// Matrix convention used throughout: M(alpha, i) = exp(-i * j_alpha * delta_i),
// atoms index rows and detectors index columns. gamma = perm(M).

/// Permutation sum over all N! assignments of detectors to atoms.
/// Testing oracle; throws CapExceeded for N > cap.
complex gamma_naive(const AtomChain &chain, const DetectorSet &dets,
                    std::size_t cap = kNaiveCap);

/// Ryser-type permanent (Glynn sign-vector form) in Gray-code order, O(2^N N).
complex gamma_ryser(const AtomChain &chain, const DetectorSet &dets);

/// N-photon coincidence rate |gamma|^2 / N^N for a fully excited chain.
double g_n(const AtomChain &chain, const DetectorSet &dets);

/// Same quantity via the real cosine-sum form (1/N^N) [sum_perm cos(j_perm . delta)]^2.
/// Testing oracle; throws CapExceeded for N > cap.
double g_n_cosine_sum(const AtomChain &chain, const DetectorSet &dets,
                      std::size_t cap = kNaiveCap);

/// First-order rate at detector phase delta1 when every atom starts in
/// (|g> + |e>)/sqrt(2): 1/2 [1 + (1/N) sum_{a=1}^{N-1} (N-a) cos(a delta1)].
double g1_superposition(const AtomChain &chain, double delta1);

/// <D^dagger D> evaluated on the explicit 2^N-amplitude product state.
/// Throws CapExceeded for N > kSpinOracleCap.
double g1_spin_oracle(const AtomChain &chain, double delta1);

} // namespace photocorr
