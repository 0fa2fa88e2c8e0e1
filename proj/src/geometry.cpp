#include "photocorr/geometry.hpp"

#include <cmath>
#include <string>

#include "photocorr/errors.hpp"

namespace photocorr {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_angle(double theta, const char *what) {
  if (!std::isfinite(theta) || std::abs(theta) > kHalfPi)
    throw DomainError(std::string(what) + " must satisfy |theta| <= pi/2");
}

} // namespace

AtomChain::AtomChain(std::size_t n_atoms, double spacing_over_lambda)
    : n_atoms_(n_atoms), spacing_(spacing_over_lambda) {
  if (n_atoms_ < 1)
    throw DomainError("chain needs at least one atom");
  if (!std::isfinite(spacing_) || spacing_ <= 0.0)
    throw DomainError("spacing_over_lambda must be finite and positive");
}

void FeasibilityParams::validate() const {
  if (!(detector_size >= 0.0) || !std::isfinite(detector_size))
    throw DomainError("detector size must be >= 0");
  if (!(d > 0.0) || !std::isfinite(d))
    throw DomainError("atom spacing d must be > 0");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("wavelength must be > 0");
  if (!(delta_theta >= 0.0) || !(delta_d >= 0.0) || !(delta_k_rel >= 0.0))
    throw DomainError("uncertainties must be >= 0");
  require_angle(theta, "theta");
}

double phase_from_angle(const AtomChain &chain, double theta) {
  require_angle(theta, "theta");
  return chain.kd() * std::sin(theta);
}

std::vector<double> atom_positions(const AtomChain &chain) {
  std::vector<double> j(chain.size());
  for (std::size_t a = 0; a < j.size(); ++a)
    j[a] = chain.position(a);
  return j;
}

double min_farfield_distance(const FeasibilityParams &params, std::size_t n_atoms,
                             double safety_factor) {
  params.validate();
  if (n_atoms < 1)
    throw DomainError("n_atoms must be >= 1");
  if (!(safety_factor >= 1.0))
    throw DomainError("safety factor must be >= 1");
  return safety_factor * params.detector_size * static_cast<double>(n_atoms) * params.d /
         params.lambda;
}

double phase_resolution(const AtomChain &chain, double theta, double delta_theta) {
  require_angle(theta, "theta");
  if (!(delta_theta >= 0.0))
    throw DomainError("delta_theta must be >= 0");
  // cos(pi/2) is 6e-17, not 0.
  if (std::abs(theta) == kHalfPi)
    return 0.0;
  return chain.kd() * std::cos(theta) * delta_theta;
}

} // namespace photocorr
