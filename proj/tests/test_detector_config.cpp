#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "photocorr/detector_config.hpp"
#include "photocorr/errors.hpp"

using namespace photocorr;
using std::numbers::pi;

namespace {

std::vector<double> as_vector(const DetectorSet &d) { return {d.phases().begin(), d.phases().end()}; }

void check_phases(const DetectorSet &got, const std::vector<double> &want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-15));
}

// A_N from the naive permutation sum (independent of the Ryser route).
double amplitude_by_permutations(std::size_t n) {
  const AtomChain chain(n, 1.0);
  const auto d = n % 2 == 0 ? magic_config_even(n, 0.0) : magic_config_odd(n, 0.0);
  return 0.5 * std::norm(gamma_naive(chain, d)) * std::pow(double(n), -double(n));
}

} // namespace

TEST_CASE("magic_config_even") {
  check_phases(magic_config_even(2, 0.7), {0.7, -0.7});
  check_phases(magic_config_even(4, 0.0), {0.0, 0.0, pi / 2, -pi / 2});
  check_phases(magic_config_even(6, 0.3), {0.3, -0.3, pi / 3, -pi / 3, pi / 3, -pi / 3});
  CHECK_THROWS_AS(magic_config_even(3, 0.0), DomainError);
  CHECK_THROWS_AS(magic_config_even(0, 0.0), DomainError);
}

TEST_CASE("magic_config_odd") {
  check_phases(magic_config_odd(3, 0.4), {0.4, -0.4, pi / 2});
  check_phases(magic_config_odd(5, 0.0), {0.0, 0.0, pi / 3, -pi / 3, pi / 3});
  check_phases(magic_config_odd(3, pi), {pi, -pi, pi / 2});
  CHECK_THROWS_AS(magic_config_odd(4, 0.0), DomainError);
  CHECK_THROWS_AS(magic_config_odd(1, 0.0), DomainError);
}

TEST_CASE("derive_amplitude") {
  CHECK(derive_amplitude(2, Parity::even) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(derive_amplitude(4, Parity::even) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK_THROWS_AS(derive_amplitude(4, Parity::odd), DomainError);
  CHECK_THROWS_AS(derive_amplitude(32, Parity::even), CapExceeded);

  // Regression fixtures, frozen from the naive permutation sum.
  const std::vector<std::pair<std::size_t, double>> fixtures = {
      {3, 0.07407407407407407},  {5, 0.023040000000000026}, {6, 0.05555555555555555},
      {7, 0.01258950655885608},  {8, 0.03955078125000006},
  };
  for (const auto &[n, a] : fixtures) {
    CAPTURE(n);
    CHECK(amplitude_by_permutations(n) == doctest::Approx(a).epsilon(1e-12));
    CHECK(derive_amplitude(n, parity_of(n)) == doctest::Approx(a).epsilon(1e-12));
  }
}

TEST_CASE("closed_form") {
  const auto c2 = make_magic_config(2);
  CHECK(c2.fringe_multiplier == 2);
  CHECK(closed_form(c2, 0.0) == doctest::Approx(1.0));
  const auto c4 = make_magic_config(4);
  CHECK(std::abs(closed_form(c4, pi / 4)) < 1e-15);
  const auto c3 = make_magic_config(3);
  CHECK(c3.fringe_multiplier == 4);
  CHECK(closed_form(c3, 0.0) == doctest::Approx(2 * amplitude_by_permutations(3)).epsilon(1e-12));
}

TEST_CASE("verify_collapse") {
  CHECK(verify_collapse(2, Parity::even, 1001) < 1e-12);
  CHECK(verify_collapse(4, Parity::even, 1001) < 1e-10);
  CHECK(verify_collapse(5, Parity::odd, 1001) < 1e-10);
  CHECK_THROWS_AS(verify_collapse(4, Parity::even, 2), DomainError);
}

TEST_CASE("collapsed fringe structure") {
  for (std::size_t n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const auto cfg = make_magic_config(n);
    const AtomChain chain(n, 1.0);
    const double m = double(cfg.fringe_multiplier);
    CHECK(cfg.amplitude > 0.0);
    CHECK(cfg.amplitude <= 1.0);

    // Maxima at 2k pi/m, zeros at (2k+1) pi/m, quarter-period value A_N.
    for (int k = -2; k <= 2; ++k) {
      CHECK(g_n(chain, cfg.phases(2 * k * pi / m)) == doctest::Approx(2 * cfg.amplitude).epsilon(1e-10));
      CHECK(g_n(chain, cfg.phases((2 * k + 1) * pi / m)) < 1e-10 * cfg.amplitude);
    }
    CHECK(g_n(chain, cfg.phases(pi / (2 * m))) == doctest::Approx(cfg.amplitude).epsilon(1e-10));

    const double gmax = g_n(chain, cfg.phases(0.0));
    const double gmin = g_n(chain, cfg.phases(pi / m));
    CHECK((gmax - gmin) / (gmax + gmin) == doctest::Approx(1.0).epsilon(1e-10));

    // The detector-2 coupling is enforced.
    const auto p = as_vector(cfg.phases(0.37));
    CHECK(p[1] == -p[0]);
  }
}
