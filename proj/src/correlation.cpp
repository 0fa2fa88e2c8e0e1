#include "photocorr/correlation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "photocorr/errors.hpp"

namespace photocorr {

namespace {

void check_sizes(const AtomChain &chain, const DetectorSet &dets) {
  if (dets.size() != chain.size())
    throw DomainError("detector count " + std::to_string(dets.size()) +
                      " does not match atom count " + std::to_string(chain.size()));
}

void check_cap(std::size_t n, std::size_t cap, const char *route) {
  if (n > cap)
    throw CapExceeded(std::string(route) + ": N=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
}

// Row-major N x N phase-factor matrix, M(alpha, i) = exp(-i j_alpha delta_i).
std::vector<complex> phase_matrix(const AtomChain &chain, const DetectorSet &dets) {
  const std::size_t n = chain.size();
  std::vector<complex> m(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const double j = chain.position(a);
    for (std::size_t i = 0; i < n; ++i)
      m[a * n + i] = std::polar(1.0, -j * dets[i]);
  }
  return m;
}

double inv_n_pow_n(std::size_t n) {
  return std::pow(static_cast<double>(n), -static_cast<double>(n));
}

} // namespace

DetectorSet::DetectorSet(std::vector<double> phases) : phases_(std::move(phases)) {
  for (double p : phases_)
    if (!std::isfinite(p))
      throw DomainError("detector phases must be finite");
}

complex gamma_naive(const AtomChain &chain, const DetectorSet &dets, std::size_t cap) {
  check_sizes(chain, dets);
  const std::size_t n = chain.size();
  check_cap(n, cap, "gamma_naive");
  const auto m = phase_matrix(chain, dets);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  complex sum{0.0, 0.0};
  do {
    complex term{1.0, 0.0};
    for (std::size_t a = 0; a < n; ++a)
      term *= m[a * n + perm[a]];
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

complex gamma_ryser(const AtomChain &chain, const DetectorSet &dets) {
  check_sizes(chain, dets);
  const std::size_t n = chain.size();
  check_cap(n, kRyserCap, "gamma_ryser");
  const auto m = phase_matrix(chain, dets);

  // Glynn's sign-vector form of Ryser's formula:
  //   perm(M) = 2^{1-n} sum_s (prod_a s_a) prod_i sum_a s_a M(a, i),
  // with s_0 = +1 and s_1..s_{n-1} in {+1, -1} visited in Gray-code order, so
  // each step flips one row's sign and updates the column sums in O(n).
  // Rounding error is roughly an order of magnitude below the 0/1-subset form
  // for these unit-modulus matrices.
  std::vector<complex> col_sums(n, complex{0.0, 0.0});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      col_sums[i] += m[a * n + i];

  auto product = [&] {
    complex p{1.0, 0.0};
    for (const auto &c : col_sums)
      p *= c;
    return p;
  };

  complex total = product();
  bool negative = false;
  std::uint64_t gray = 0;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < count; ++k) {
    const int flip = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << flip;
    gray ^= bit;
    const std::size_t row = static_cast<std::size_t>(flip) + 1;
    const double step = (gray & bit) ? -2.0 : 2.0;
    for (std::size_t i = 0; i < n; ++i)
      col_sums[i] += step * m[row * n + i];
    negative = !negative;
    if (negative)
      total -= product();
    else
      total += product();
  }
  return total / static_cast<double>(count);
}

double g_n(const AtomChain &chain, const DetectorSet &dets) {
  return std::norm(gamma_ryser(chain, dets)) * inv_n_pow_n(chain.size());
}

double g_n_cosine_sum(const AtomChain &chain, const DetectorSet &dets, std::size_t cap) {
  check_sizes(chain, dets);
  const std::size_t n = chain.size();
  check_cap(n, cap, "g_n_cosine_sum");

  auto j = atom_positions(chain);
  double sum = 0.0;
  // std::next_permutation over sorted j visits all N! orderings; j has
  // distinct entries so none are skipped.
  do {
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      dot += j[i] * dets[i];
    sum += std::cos(dot);
  } while (std::next_permutation(j.begin(), j.end()));
  return sum * sum * inv_n_pow_n(n);
}

double g1_superposition(const AtomChain &chain, double delta1) {
  const std::size_t n = chain.size();
  double sum = 0.0;
  for (std::size_t a = 1; a < n; ++a)
    sum += static_cast<double>(n - a) * std::cos(static_cast<double>(a) * delta1);
  return 0.5 * (1.0 + sum / static_cast<double>(n));
}

double g1_spin_oracle(const AtomChain &chain, double delta1) {
  const std::size_t n = chain.size();
  check_cap(n, kSpinOracleCap, "g1_spin_oracle");

  // Basis state bit alpha set = atom alpha excited. The product state
  // (|g>+|e>)^N / 2^{N/2} has equal amplitude on every basis state.
  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));

  std::vector<complex> factor(n);
  for (std::size_t a = 0; a < n; ++a)
    factor[a] = norm * std::polar(1.0, -chain.position(a) * delta1);

  // D|psi> with D = N^{-1/2} sum_alpha sigma^-_alpha exp(-i j_alpha delta1).
  std::vector<complex> lowered(dim, complex{0.0, 0.0});
  for (std::size_t state = 0; state < dim; ++state)
    for (std::size_t a = 0; a < n; ++a)
      if (state & (std::size_t{1} << a))
        lowered[state ^ (std::size_t{1} << a)] += amp * factor[a];

  double expectation = 0.0;
  for (const auto &c : lowered)
    expectation += std::norm(c);
  return expectation;
}

} // namespace photocorr
