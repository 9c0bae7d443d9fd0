#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "nchs/combinatorics.hpp"
#include "nchs/matrix.hpp"
#include "nchs/polynomial.hpp"

using namespace nchs;

namespace {

NCPoly word_poly(int n, std::vector<int> letters, const Rat& c = Rat(1)) {
  NCPoly p(n);
  p.add_term(Word{std::move(letters)}, c);
  return p;
}

// Deterministic "arbitrary" coefficients without pulling in a generator.
Rat wiggle(int i) { return frac(3 * i - 7, i % 4 + 2); }

MatTupleQ fixed_pair() {
  RatMatrix x1(2, 2), x2(2, 2);
  x1(0, 0) = 0; x1(0, 1) = 0; x1(1, 0) = 0; x1(1, 1) = 1;
  x2(0, 0) = 2; x2(0, 1) = 1; x2(1, 0) = 1; x2(1, 1) = 0;
  return MatTupleQ{2, 2, {x1, x2}};
}

} // namespace

TEST_CASE("complete homogeneous sums every monomial once") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d) {
      const CPoly h = complete_homogeneous(n, d);
      CHECK(Int(h.terms().size()) == binomial(n - 1 + d, d));
      for (const auto& [m, c] : h.terms()) {
        CHECK(c == 1);
        CHECK(m.degree() == d);
      }
      // All-ones evaluation counts the monomials.
      const std::vector<Rat> ones(static_cast<std::size_t>(n), Rat(1));
      CHECK(eval_c(h, ones) == Rat(Int(h.terms().size())));
    }
}

TEST_CASE("noncommutative lift spreads each coefficient over the fiber") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 4; ++d) {
      const NCPoly h = nc_complete_homogeneous(n, d);
      std::size_t expected = 1;
      for (int i = 0; i < d; ++i) expected *= static_cast<std::size_t>(n);
      REQUIRE(h.terms().size() == expected); // every word appears
      for (const auto& [w, c] : h.terms())
        CHECK(c == frac(Int(1), fiber_size(abelianize(w, n))));
      CHECK(to_commutative(h) == complete_homogeneous(n, d));
    }
}

TEST_CASE("degree-two lift over two variables, spelled out") {
  const NCPoly h = nc_complete_homogeneous(2, 2);
  CHECK(h.coeff(Word{{0, 0}}) == 1);
  CHECK(h.coeff(Word{{0, 1}}) == frac(1, 2));
  CHECK(h.coeff(Word{{1, 0}}) == frac(1, 2));
  CHECK(h.coeff(Word{{1, 1}}) == 1);
  CHECK(to_string(h) == "x1^2 + 1/2 x1 x2 + 1/2 x2 x1 + x2^2");
}

TEST_CASE("lifting x1^2 x2^2 averages the six arrangements") {
  CPoly m(2);
  m.add_term(Monomial{{2, 2}}, Rat(1));
  const NCPoly lifted = symmetrized_lift(m);
  REQUIRE(lifted.terms().size() == 6);
  for (const auto& [w, c] : lifted.terms()) {
    CHECK(c == frac(1, 6));
    CHECK(abelianize(w, 2) == Monomial{{2, 2}});
  }
}

TEST_CASE("letting the lift commute again recovers the original") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 5; ++d) {
      CPoly p(n);
      int i = 0;
      for (const Monomial& m : enumerate_monomials(n, d)) p.add_term(m, wiggle(i++));
      // Mixed degrees survive the round trip too.
      if (d >= 2) p.add_term(Monomial{std::vector<int>(n, 0)}, frac(5, 7));
      CHECK(to_commutative(symmetrized_lift(p)) == p);
    }
}

TEST_CASE("star reverses words and fixes the lifted sums") {
  const NCPoly p = word_poly(2, {0, 1}, frac(2, 3)); // (2/3) x1 x2
  const NCPoly q = word_poly(2, {1, 1, 0}, Rat(-5)); // -5 x2^2 x1
  CHECK(p.star() == word_poly(2, {1, 0}, frac(2, 3)));
  CHECK(q.star() == word_poly(2, {0, 1, 1}, Rat(-5)));
  CHECK((p * q).star() == q.star() * p.star());
  CHECK_FALSE(p.is_hermitian());
  CHECK((p + p.star()).is_hermitian());
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 4; ++d) CHECK(nc_complete_homogeneous(n, d).is_hermitian());
}

TEST_CASE("product order matters in the free algebra") {
  const NCPoly x1 = word_poly(2, {0});
  const NCPoly x2 = word_poly(2, {1});
  CHECK(x1 * x2 != x2 * x1);
  CHECK(x1 * x2 == word_poly(2, {0, 1}));

  const NCPoly s = x1 + x2;
  NCPoly expected(2);
  expected.add_term(Word{{0, 0}}, Rat(1));
  expected.add_term(Word{{0, 1}}, Rat(1));
  expected.add_term(Word{{1, 0}}, Rat(1));
  expected.add_term(Word{{1, 1}}, Rat(1));
  CHECK(s * s == expected);

  // Commutative counterpart merges the cross terms.
  const CPoly cs = to_commutative(s);
  CPoly cexpected(2);
  cexpected.add_term(Monomial{{2, 0}}, Rat(1));
  cexpected.add_term(Monomial{{1, 1}}, Rat(2));
  cexpected.add_term(Monomial{{0, 2}}, Rat(1));
  CHECK(cs * cs == cexpected);
}

TEST_CASE("adding an opposite coefficient erases the term") {
  NCPoly p(2);
  p.add_term(Word{{0, 1}}, frac(3, 4));
  p.add_term(Word{{0, 1}}, frac(-3, 4));
  CHECK(p.is_zero());
  CHECK(p.coeff(Word{{0, 1}}) == 0);

  NCPoly q(2);
  q.add_term(Word{{0}}, Rat(2));
  CHECK((q - q).is_zero());
}

TEST_CASE("homogeneous degree detection") {
  CHECK(nc_complete_homogeneous(2, 3).homogeneous_degree() == std::optional<int>(3));
  CHECK(NCPoly(2).homogeneous_degree() == std::nullopt);
  NCPoly mixed(2);
  mixed.add_term(Word{{0}}, Rat(1));
  mixed.add_term(Word{{0, 1}}, Rat(1));
  CHECK(mixed.homogeneous_degree() == std::nullopt);
  NCPoly constant(2);
  constant.add_term(Word{}, Rat(4));
  CHECK(constant.homogeneous_degree() == std::optional<int>(0));
}

TEST_CASE("mixing polynomials over different variable counts throws") {
  NCPoly two(2), three(3);
  two.add_term(Word{{0}}, Rat(1));
  three.add_term(Word{{2}}, Rat(1));
  CHECK_THROWS_AS(two += three, std::invalid_argument);
  CHECK_THROWS_AS(two * three, std::invalid_argument);
  CPoly ctwo(2), cthree(3);
  ctwo.add_term(Monomial{{1, 0}}, Rat(1));
  cthree.add_term(Monomial{{0, 0, 1}}, Rat(1));
  CHECK_THROWS_AS(ctwo -= cthree, std::invalid_argument);
}

TEST_CASE("exact evaluation is multiplicative and respects the star") {
  const MatTupleQ xs = fixed_pair();
  const NCPoly p = word_poly(2, {0, 1}) + word_poly(2, {1, 1}, frac(1, 2));
  const NCPoly q = word_poly(2, {1}) - word_poly(2, {0}, Rat(3));
  CHECK(eval_nc(p * q, xs) == eval_nc(p, xs) * eval_nc(q, xs));

  // Hermitian polynomials evaluate to symmetric matrices at symmetric tuples.
  for (int d = 1; d <= 4; ++d) CHECK(eval_nc(nc_complete_homogeneous(2, d), xs).is_symmetric());

  // A constant term contributes a multiple of the identity.
  NCPoly shifted = word_poly(2, {0});
  shifted.add_term(Word{}, frac(7, 2));
  CHECK(eval_nc(shifted, xs) == eval_nc(word_poly(2, {0}), xs) + frac(7, 2) * RatMatrix::identity(2));
}

TEST_CASE("evaluation checks the tuple shape") {
  const MatTupleQ xs = fixed_pair();
  CHECK_THROWS_AS(eval_nc(word_poly(3, {2}), xs), std::invalid_argument);
  MatTupleQ ragged = xs;
  ragged.mats[1] = RatMatrix(3, 3);
  CHECK_THROWS_AS(eval_nc(word_poly(2, {0}), ragged), std::invalid_argument);
}

TEST_CASE("evaluating a specific word multiplies in order") {
  const MatTupleQ xs = fixed_pair();
  const RatMatrix left = eval_nc(word_poly(2, {0, 1}), xs);  // X1 X2
  const RatMatrix right = eval_nc(word_poly(2, {1, 0}), xs); // X2 X1
  CHECK(left(0, 0) == 0);
  CHECK(left(0, 1) == 0);
  CHECK(left(1, 0) == 1);
  CHECK(left(1, 1) == 0);
  CHECK(right == left.transposed());
}

TEST_CASE("commutative evaluation, exact and floating") {
  const CPoly h = complete_homogeneous(2, 2);
  CHECK(eval_c(h, std::vector<Rat>{Rat(3), Rat(4)}) == 37);
  CHECK(eval_c(h, std::vector<double>{3.0, 4.0}) == doctest::Approx(37.0).epsilon(1e-14));
  const CPoly g = complete_homogeneous(3, 3);
  const Rat exact = eval_c(g, std::vector<Rat>{frac(1, 2), frac(-1, 3), Rat(2)});
  CHECK(eval_c(g, std::vector<double>{0.5, -1.0 / 3.0, 2.0}) ==
        doctest::Approx(to_double(exact)).epsilon(1e-12));
}

TEST_CASE("coefficient vectors follow the basis order") {
  const std::vector<Word> basis = enumerate_words(2, 2);
  const std::vector<Rat> v = coefficient_vector(nc_complete_homogeneous(2, 2), basis);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == 1);
  CHECK(v[1] == frac(1, 2));
  CHECK(v[2] == frac(1, 2));
  CHECK(v[3] == 1);

  CHECK_THROWS_AS(coefficient_vector(word_poly(2, {0, 1, 1}), basis), std::invalid_argument);

  const std::vector<Monomial> mbasis = enumerate_monomials(2, 2);
  const std::vector<Rat> mv = coefficient_vector(complete_homogeneous(2, 2), mbasis);
  CHECK(mv == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
}

TEST_CASE("rendering") {
  CHECK(to_string(NCPoly(2)) == "0");
  NCPoly p(2);
  p.add_term(Word{{0, 0}}, Rat(1));
  p.add_term(Word{{0, 1}}, frac(1, 4));
  p.add_term(Word{{1, 1}}, Rat(-2));
  CHECK(to_string(p) == "x1^2 + 1/4 x1 x2 - 2 x2^2");
  NCPoly leading(2);
  leading.add_term(Word{{0}}, Rat(-1));
  CHECK(to_string(leading) == "-x1");
  NCPoly constant(2);
  constant.add_term(Word{}, frac(5, 3));
  CHECK(to_string(constant) == "5/3");
  CPoly c(3);
  c.add_term(Monomial{{1, 0, 2}}, frac(-2, 7));
  CHECK(to_string(c) == "-2/7 x1 x3^2");
}
