#include "nchs/bounds.hpp"

#include <stdexcept>

#include "nchs/gram.hpp"
#include "nchs/matrix.hpp"

namespace nchs {
namespace {

void require_sizes(int n, int d) {
  if (n < 1) throw std::invalid_argument("need at least one variable");
  if (d < 1) throw std::invalid_argument("need degree at least one");
}

} // namespace

Rat mu_closed(int n, int d) {
  require_sizes(n, d);
  if (n == 1) return Rat(1);
  const Int basis = binomial(n - 1 + d, d);
  const Int delta = d % 2 == 1 ? 1 : n - 1;
  return frac(binomial(n - 1 + 2 * d, 2 * d), basis * (basis + delta));
}

std::pair<Rat, Rat> rho(int n, int d) {
  require_sizes(n, d);
  if (n < 2) throw std::invalid_argument("rho needs an off-diagonal entry, so n >= 2");
  const Int basis = binomial(n - 1 + d, d);
  const Int full = binomial(n - 1 + 2 * d, 2 * d);
  Rat rho0 = frac(basis * basis, full);
  Rat rho1 = frac(basis, full);
  if (d % 2 == 1) rho1 = -rho1;
  return {rho0, rho1};
}

Rat mu_schur(int n, int d) {
  require_sizes(n, d);
  const std::vector<Monomial> monomials = enumerate_monomials(n, d);
  const RatMatrix gram = monomial_gram_matrix(n, d);
  std::vector<int> pure, rest;
  for (int i = 0; i < static_cast<int>(monomials.size()); ++i)
    (monomials[static_cast<std::size_t>(i)].is_pure_power() ? pure : rest).push_back(i);
  RatMatrix a(static_cast<int>(pure.size()), static_cast<int>(pure.size()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      a(i, j) = gram(pure[static_cast<std::size_t>(i)], pure[static_cast<std::size_t>(j)]);
  RatMatrix schur = a;
  if (!rest.empty()) {
    RatMatrix b(static_cast<int>(pure.size()), static_cast<int>(rest.size()));
    RatMatrix c(static_cast<int>(rest.size()), static_cast<int>(rest.size()));
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j)
        b(i, j) = gram(pure[static_cast<std::size_t>(i)], rest[static_cast<std::size_t>(j)]);
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j)
        c(i, j) = gram(rest[static_cast<std::size_t>(i)], rest[static_cast<std::size_t>(j)]);
    schur = a - b * solve(c, b.transposed());
  }
  const RatMatrix block = inverse(schur);
  if (n == 1) return Rat(1) / block(0, 0);
  // The inverted block must have one value on the diagonal and one off it.
  const Rat diag = block(0, 0);
  const Rat off = block(0, 1);
  for (int i = 0; i < block.rows(); ++i)
    for (int j = 0; j < block.cols(); ++j)
      if ((i == j ? diag : off) != block(i, j))
        throw std::logic_error("inverted Schur complement lost its two-value structure");
  const auto [rho0, rho1] = rho(n, d);
  if (diag != rho0 || off != rho1)
    throw std::logic_error("inverted Schur complement disagrees with the closed form");
  const Rat high = diag + Rat(n - 1) * off;
  const Rat low = diag - off;
  const Rat candidate_a = Rat(1) / high;
  const Rat candidate_b = Rat(1) / low;
  return candidate_a < candidate_b ? candidate_a : candidate_b;
}

CPoly inverse_image_x1d(int n, int d) {
  require_sizes(n, d);
  CPoly tail(n); // x2 + ... + xn
  for (int j = 1; j < n; ++j) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(n), 0)};
    m.exponents[static_cast<std::size_t>(j)] = 1;
    tail.add_term(m, Rat(1));
  }
  CPoly out(n);
  for (int i = 0; i <= d; ++i) {
    Rat coeff = frac(binomial(d, i) * binomial(n - 1 + d, i), Int(1));
    if ((d - i) % 2 == 1) coeff = -coeff;
    CPoly term(n);
    Monomial lead{std::vector<int>(static_cast<std::size_t>(n), 0)};
    lead.exponents[0] = i;
    term.add_term(lead, coeff);
    for (int e = 0; e < d - i; ++e) term = term * tail;
    out += term;
  }
  return out * frac(binomial(n - 1 + d, d), binomial(n - 1 + 2 * d, 2 * d));
}

bool vandermonde_identity_check(long m, int d, int l) {
  if (d < 0 || l < 0) throw std::invalid_argument("identity needs d >= 0 and l >= 0");
  Int lhs = 0;
  for (int k = 0; k <= d; ++k)
    lhs += gen_binomial(m, k) * gen_binomial(l + k, k) * gen_binomial(l - m, d - k);
  return lhs == gen_binomial(l, d) * gen_binomial(m + d, d);
}

BoundReport bound_report(int n, int d) {
  require_sizes(n, d);
  BoundReport report;
  report.n = n;
  report.d = d;
  report.mu = mu_closed(n, d);
  report.delta = d % 2 == 1 ? 1 : n - 1;
  if (n == 1) {
    report.rho0 = 1;
    report.rho1 = 0;
  } else {
    std::tie(report.rho0, report.rho1) = rho(n, d);
  }
  // The Schur route eliminates a dense block of monomial size, so keep it to
  // sizes where exact elimination is quick.
  if (binomial(n - 1 + d, d) <= 128) {
    report.mu_cross = mu_schur(n, d);
    report.schur_checked = true;
  } else {
    report.mu_cross = report.mu;
  }
  report.k_dim = 0;
  Int power = 1;
  for (int i = 0; i <= d; ++i) {
    report.k_dim += power;
    power *= n;
  }
  Int scale = 1;
  for (int i = 0; i < d - 1; ++i) scale *= n;
  report.scalar_bound = report.mu / Rat(scale);
  report.hunter_bound = frac(Int(1), (Int(1) << d) * factorial(d));
  report.limit_bound = frac(Int(1), binomial(2 * d, d));
  return report;
}

NCPoly nobound_witness(int n, int d) {
  if (n < 2 || d < 3)
    throw std::invalid_argument("witness needs n >= 2 and d >= 3");
  std::vector<int> prefix(static_cast<std::size_t>(d - 3), 0);
  Word pos{prefix};
  pos.letters.insert(pos.letters.end(), {0, 1, 1});
  Word neg{prefix};
  neg.letters.insert(neg.letters.end(), {1, 1, 0});
  NCPoly f(n);
  f.add_term(pos, Rat(1));
  f.add_term(neg, Rat(-1));
  return f;
}

NoboundCheck nobound_residuals(int n, int d) {
  NoboundCheck check;
  check.witness = nobound_witness(n, d);
  const std::vector<Rat> coeffs =
      coefficient_vector(check.witness, enumerate_words(n, d));
  check.gram_image = matvec(word_gram_matrix(n, d), coeffs);
  check.squares_image = matvec(square_words_matrix(n, d), coeffs);
  auto all_zero = [](const std::vector<Rat>& v) {
    for (const Rat& x : v)
      if (x != 0) return false;
    return true;
  };
  check.gram_annihilates = all_zero(check.gram_image);
  check.squares_annihilates = all_zero(check.squares_image);
  return check;
}

} // namespace nchs
