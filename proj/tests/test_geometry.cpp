#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "photocorr/errors.hpp"
#include "photocorr/geometry.hpp"

using namespace photocorr;
using std::numbers::pi;

namespace {

FeasibilityParams reference_params() {
  FeasibilityParams p;
  p.detector_size = 1e-3;
  p.theta = pi / 6;
  p.delta_theta = 0.1 * pi / 180;
  p.d = 5e-6;
  p.delta_d = 0.1e-6;
  p.lambda = 800e-9;
  p.delta_k_rel = 1e-7;
  return p;
}

} // namespace

TEST_CASE("AtomChain rejects invalid geometry") {
  CHECK_THROWS_AS(AtomChain(0, 1.0), DomainError);
  CHECK_THROWS_AS(AtomChain(2, 0.0), DomainError);
  CHECK_THROWS_AS(AtomChain(2, -1.0), DomainError);
  CHECK_THROWS_AS(AtomChain(2, std::nan("")), DomainError);
  CHECK(AtomChain(3, 0.25).kd() == doctest::Approx(pi / 2));
}

TEST_CASE("phase_from_angle") {
  const AtomChain unit(4, 1.0);
  CHECK(phase_from_angle(unit, 0.0) == 0.0);
  CHECK(phase_from_angle(unit, pi / 2) == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(phase_from_angle(unit, -pi / 2) == doctest::Approx(-2 * pi).epsilon(1e-15));

  // d = 5 um, lambda = 800 nm, theta = 30 deg
  const AtomChain chain(4, 5e-6 / 800e-9);
  CHECK(phase_from_angle(chain, pi / 6) == doctest::Approx(19.634954084936208).epsilon(1e-13));

  CHECK_THROWS_AS(phase_from_angle(unit, 1.6), DomainError);
  CHECK_THROWS_AS(phase_from_angle(unit, -2.0), DomainError);
}

TEST_CASE("phase_from_angle is odd and bounded by kd") {
  for (double spacing : {0.25, 1.0, 6.25}) {
    const AtomChain chain(3, spacing);
    for (int i = 0; i <= 100; ++i) {
      const double theta = -pi / 2 + pi * i / 100.0;
      const double p = phase_from_angle(chain, theta);
      CHECK(phase_from_angle(chain, -theta) == doctest::Approx(-p).epsilon(1e-15));
      CHECK(std::abs(p) <= chain.kd() * (1 + 1e-15));
      if (std::abs(theta) < pi / 2 - 1e-9)
        CHECK(std::abs(p) < chain.kd());
    }
  }
}

TEST_CASE("atom_positions") {
  CHECK(atom_positions(AtomChain(1, 1.0)) == std::vector<double>{0.0});
  CHECK(atom_positions(AtomChain(2, 1.0)) == std::vector<double>{-0.5, 0.5});
  CHECK(atom_positions(AtomChain(4, 1.0)) == std::vector<double>{-1.5, -0.5, 0.5, 1.5});

  for (std::size_t n = 1; n <= 31; ++n) {
    const auto j = atom_positions(AtomChain(n, 1.0));
    REQUIRE(j.size() == n);
    CHECK(std::accumulate(j.begin(), j.end(), 0.0) == 0.0);
    for (std::size_t a = 1; a < n; ++a)
      CHECK(j[a] - j[a - 1] == 1.0);
    CHECK(j.front() == -j.back());
  }
}

TEST_CASE("min_farfield_distance") {
  auto p = reference_params();
  CHECK(min_farfield_distance(p, 4) == doctest::Approx(0.025).epsilon(1e-14));
  CHECK(min_farfield_distance(p, 4, 100.0) == doctest::Approx(2.5).epsilon(1e-14));
  p.detector_size = 0.0;
  CHECK(min_farfield_distance(p, 4) == 0.0);

  SUBCASE("linear in s, N, d and 1/lambda") {
    const auto base = reference_params();
    const double l0 = min_farfield_distance(base, 4);
    auto q = base;
    q.detector_size *= 3;
    CHECK(min_farfield_distance(q, 4) / l0 == doctest::Approx(3.0));
    CHECK(min_farfield_distance(base, 12) / l0 == doctest::Approx(3.0));
    q = base;
    q.d *= 2.5;
    CHECK(min_farfield_distance(q, 4) / l0 == doctest::Approx(2.5));
    q = base;
    q.lambda *= 2;
    CHECK(min_farfield_distance(q, 4) / l0 == doctest::Approx(0.5));
  }

  SUBCASE("errors") {
    auto q = reference_params();
    CHECK_THROWS_AS(min_farfield_distance(q, 4, 0.5), DomainError);
    CHECK_THROWS_AS(min_farfield_distance(q, 0), DomainError);
    q.d = 0;
    CHECK_THROWS_AS(min_farfield_distance(q, 4), DomainError);
    q = reference_params();
    q.lambda = -1;
    CHECK_THROWS_AS(min_farfield_distance(q, 4), DomainError);
    q = reference_params();
    q.detector_size = -1e-3;
    CHECK_THROWS_AS(min_farfield_distance(q, 4), DomainError);
  }
}

TEST_CASE("phase_resolution") {
  const AtomChain chain(4, 6.25);
  const double dtheta = 0.1 * pi / 180;
  CHECK(phase_resolution(chain, pi / 6, 0.0) == 0.0);
  CHECK(phase_resolution(chain, pi / 6, dtheta) == doctest::Approx(0.05935644539337559).epsilon(1e-13));
  CHECK(phase_resolution(chain, pi / 2, dtheta) == 0.0);
  CHECK_THROWS_AS(phase_resolution(chain, 2.0, dtheta), DomainError);
}
