#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "nchs/bounds.hpp"
#include "nchs/combinatorics.hpp"
#include "nchs/gram.hpp"
#include "nchs/matrix.hpp"
#include "nchs/numerics.hpp"
#include "nchs/polynomial.hpp"

using namespace nchs;

namespace {

// The closed form rebuilt from scratch so a typo in the library would have to
// repeat itself here to slip through.
Rat oracle_mu(int n, int d) {
  if (n == 1) return Rat(1);
  const Int p = binomial(n - 1 + d, d);
  const Int shift = d % 2 == 1 ? Int(1) : Int(n - 1);
  return frac(binomial(n - 1 + 2 * d, 2 * d), p * (p + shift));
}

} // namespace

TEST_CASE("sharp constants, frozen small values") {
  CHECK(mu_closed(2, 2) == frac(5, 12));
  CHECK(mu_closed(2, 3) == frac(7, 20));
  CHECK(mu_closed(3, 2) == frac(5, 16));
  for (int n = 2; n <= 5; ++n) CHECK(mu_closed(n, 1) == frac(1, 2));
  for (int d = 1; d <= 6; ++d) CHECK(mu_closed(1, d) == 1);
}

TEST_CASE("closed form against the from-scratch oracle") {
  for (int n = 1; n <= 8; ++n)
    for (int d = 1; d <= 6; ++d) CHECK(mu_closed(n, d) == oracle_mu(n, d));
}

TEST_CASE("the elimination route lands on the same constants") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) CHECK(mu_schur(n, d) == mu_closed(n, d));
  CHECK(mu_schur(2, 4) == mu_closed(2, 4));
  CHECK(mu_schur(1, 3) == 1);
}

TEST_CASE("inverse block spectrum") {
  CHECK(rho(2, 2) == std::pair<Rat, Rat>{frac(9, 5), frac(3, 5)});
  CHECK(rho(2, 1) == std::pair<Rat, Rat>{frac(4, 3), frac(-2, 3)});
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d) {
      const auto [r0, r1] = rho(n, d);
      // diagonal entry of the inverse: p^2 / P
      CHECK(r0 == frac(binomial(n - 1 + d, d) * binomial(n - 1 + d, d),
                       binomial(n - 1 + 2 * d, 2 * d)));
      // alternating sign on the off-diagonal
      CHECK((r1 > 0) == (d % 2 == 0));
      // the two eigenvalue branches meet the sharp constant at the right one
      const Rat along = 1 / (r0 + (n - 1) * r1);
      const Rat across = 1 / (r0 - r1);
      CHECK(mu_closed(n, d) == (d % 2 == 0 ? along : across));
      CHECK(mu_closed(n, d) <= along);
      CHECK(mu_closed(n, d) <= across);
    }
}

TEST_CASE("the preimage of the first pure power") {
  CHECK(to_string(inverse_image_x1d(2, 1)) == "4/3 x1 - 2/3 x2");
  CHECK(to_string(inverse_image_x1d(1, 3)) == "x1^3");

  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d) {
      const CPoly q = inverse_image_x1d(n, d);
      const std::vector<Monomial> basis = enumerate_monomials(n, d);
      const std::vector<Rat> image = matvec(monomial_gram_matrix(n, d), coefficient_vector(q, basis));
      for (std::size_t i = 0; i < basis.size(); ++i)
        CHECK(image[i] == (basis[i] == basis.front() ? 1 : 0));

      // its extreme coefficients are the inverse-block entries
      const auto [r0, r1] = rho(n, d);
      Monomial x1d{std::vector<int>(static_cast<std::size_t>(n), 0)};
      x1d.exponents[0] = d;
      Monomial x2d{std::vector<int>(static_cast<std::size_t>(n), 0)};
      x2d.exponents[1] = d;
      CHECK(q.coeff(x1d) == r0);
      CHECK(q.coeff(x2d) == r1);
    }
}

TEST_CASE("binomial convolution identity") {
  SUBCASE("tiny cases by hand") {
    CHECK(vandermonde_identity_check(3, 2, 2)); // both sides 10*... checks internally
    CHECK(vandermonde_identity_check(0, 0, 0));
    CHECK(vandermonde_identity_check(4, 3, 1)); // right side vanishes
    CHECK(vandermonde_identity_check(-1, 2, 5));
  }
  SUBCASE("the range the Gram inversion leans on") {
    for (int n = 1; n <= 6; ++n)
      for (int d = 0; d <= 6; ++d)
        for (int l = 0; l <= d; ++l) CHECK(vandermonde_identity_check(n - 1 + d, d, l));
  }
  SUBCASE("seeded sweep, negative upper arguments included") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const long m = static_cast<long>(rng.next() % 16) - 5;
      const int d = static_cast<int>(rng.next() % 9);
      const int l = static_cast<int>(rng.next() % 11);
      CAPTURE(m);
      CAPTURE(d);
      CAPTURE(l);
      CHECK(vandermonde_identity_check(m, d, l));
    }
  }
  SUBCASE("nonsensical degrees throw") {
    CHECK_THROWS_AS(vandermonde_identity_check(3, -1, 2), std::invalid_argument);
    CHECK_THROWS_AS(vandermonde_identity_check(3, 2, -1), std::invalid_argument);
  }
}

TEST_CASE("bound reports collect the comparison constants") {
  const BoundReport r = bound_report(2, 2);
  CHECK(r.mu == frac(5, 12));
  CHECK(r.mu_cross == frac(5, 12));
  CHECK(r.schur_checked);
  CHECK(r.rho0 == frac(9, 5));
  CHECK(r.rho1 == frac(3, 5));
  CHECK(r.delta == 1);
  CHECK(r.k_dim == 7);
  CHECK(r.scalar_bound == frac(5, 24));
  CHECK(r.hunter_bound == frac(1, 8));
  CHECK(r.scalar_bound > r.hunter_bound);
  CHECK(r.limit_bound == frac(1, 6));

  const BoundReport linear = bound_report(2, 1);
  CHECK(linear.scalar_bound == frac(1, 2));
  CHECK(linear.hunter_bound == frac(1, 2));
  CHECK(linear.k_dim == 3);
  CHECK(linear.delta == 1);

  const BoundReport single = bound_report(1, 3);
  CHECK(single.mu == 1);
  CHECK(single.rho0 == 1);
  CHECK(single.rho1 == 0);
}

TEST_CASE("the constants decay slowly toward the central binomial limit") {
  Rat previous = mu_closed(2, 2);
  for (int n = 3; n <= 50; ++n) {
    const Rat current = mu_closed(n, 2);
    CHECK(current <= previous);
    previous = current;
  }
  Rat deviation = mu_closed(50, 2) - frac(1, 6);
  if (deviation < 0) deviation = -deviation;
  CHECK(deviation < frac(1, 100));
  CHECK(deviation > 0); // not there yet at n = 50

  for (int d = 1; d <= 4; ++d) {
    Rat prev = mu_closed(2, d);
    for (int n = 3; n <= 30; ++n) {
      const Rat cur = mu_closed(n, d);
      CHECK(cur <= prev);
      prev = cur;
    }
    // and the limit value is a lower bound along the way (met exactly at d=1)
    CHECK(prev >= frac(Int(1), binomial(2 * d, d)));
  }
}

TEST_CASE("the kernel direction the squares matrix keeps alive") {
  NCPoly expected(2);
  expected.add_term(Word{{0, 1, 1}}, Rat(1));
  expected.add_term(Word{{1, 1, 0}}, Rat(-1));
  CHECK(nobound_witness(2, 3) == expected);

  CHECK_THROWS_AS(nobound_witness(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(nobound_witness(1, 5), std::invalid_argument);

  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}}) {
    const NoboundCheck check = nobound_residuals(n, d);
    CAPTURE(n);
    CAPTURE(d);
    CHECK(check.gram_annihilates);
    CHECK_FALSE(check.squares_annihilates);
    CHECK(to_commutative(check.witness).is_zero());
    // cross-check the images against the raw matrices
    const std::vector<Word> words = enumerate_words(n, d);
    const std::vector<Rat> coeffs = coefficient_vector(check.witness, words);
    CHECK(check.gram_image == matvec(word_gram_matrix(n, d), coeffs));
    CHECK(check.squares_image == matvec(square_words_matrix(n, d), coeffs));
  }
}
