#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace photocorr {

/// Equidistant linear chain of N emitters centred on the origin.
///
/// Geometry is stored in wavelength units (d/lambda); every phase the rest of
/// the library consumes is expressed through kd = 2*pi*d/lambda.
class AtomChain {
public:
  /// Throws DomainError unless n_atoms >= 1 and spacing_over_lambda is a
  /// finite positive number.
  AtomChain(std::size_t n_atoms, double spacing_over_lambda);

  std::size_t size() const noexcept { return n_atoms_; }
  double spacing_over_lambda() const noexcept { return spacing_; }
  double kd() const noexcept { return 2.0 * std::numbers::pi * spacing_; }

  /// Position of atom `alpha` (0-based) along the chain in units of d:
  /// -(N-1)/2 + alpha.
  double position(std::size_t alpha) const noexcept {
    return static_cast<double>(alpha) - 0.5 * static_cast<double>(n_atoms_ - 1);
  }

  friend bool operator==(const AtomChain &, const AtomChain &) = default;

private:
  std::size_t n_atoms_;
  double spacing_;
};

/// Experimental parameters for the far-field and phase-noise budget. Lengths
/// are SI metres, angles radians.
struct FeasibilityParams {
  double detector_size = 0.0; ///< s
  double theta = 0.0;         ///< measured from the chain normal
  double delta_theta = 0.0;
  double delta_d = 0.0;
  double delta_k_rel = 0.0; ///< Δk / k
  double d = 0.0;
  double lambda = 0.0;

  /// Throws DomainError on negative uncertainties, non-positive d or lambda,
  /// negative detector size or |theta| > pi/2.
  void validate() const;

  bool operator==(const FeasibilityParams &) const = default;
};

/// delta = kd sin(theta). theta is the angle to the chain normal, so theta = 0
/// points broadside and |theta| = pi/2 runs along the chain axis.
double phase_from_angle(const AtomChain &chain, double theta);

/// The j-vector: atom offsets from the chain centre in units of d.
std::vector<double> atom_positions(const AtomChain &chain);

/// Far-field distance bound L = safety * s * N * d / lambda (metres).
double min_farfield_distance(const FeasibilityParams &params, std::size_t n_atoms,
                             double safety_factor = 1.0);

/// Phase blur kd cos(theta) * delta_theta produced by an angular uncertainty.
double phase_resolution(const AtomChain &chain, double theta, double delta_theta);

} // namespace photocorr
