#include "nchs/certify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nchs {
namespace {

constexpr std::size_t kOrderCap = 40320; // 8!
constexpr int kSearchBudget = 10000;

void require_symmetric(const RatMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("matrix must be symmetric");
}

std::vector<int> natural_order(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

// Subtracts lambda * row^T row from r and zeroes the pivot row/column exactly.
void eliminate(RatMatrix& r, const std::vector<Rat>& row, const Rat& lambda) {
  const int n = r.rows();
  for (int i = 0; i < n; ++i) {
    if (row[static_cast<std::size_t>(i)] == 0) continue;
    const Rat scale = lambda * row[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) r(i, j) -= scale * row[static_cast<std::size_t>(j)];
  }
}

std::vector<Rat> pivot_row(const RatMatrix& r, int p) {
  std::vector<Rat> row(static_cast<std::size_t>(r.cols()));
  const Rat inv = Rat(1) / r(p, p);
  for (int j = 0; j < r.cols(); ++j) row[static_cast<std::size_t>(j)] = r(p, j) * inv;
  return row;
}

LdlFactorization assemble(const RatMatrix& a, std::vector<std::vector<Rat>> rows,
                          std::vector<Rat> lambdas, std::vector<int> pivots) {
  const int n = a.rows();
  LdlFactorization f;
  f.pivots = std::move(pivots);
  f.s = RatMatrix(n, n);
  f.s.labels = a.labels;
  f.lambda.assign(static_cast<std::size_t>(n), Rat(0));
  std::vector<bool> pivoted(static_cast<std::size_t>(n), false);
  for (int p : f.pivots) pivoted[static_cast<std::size_t>(p)] = true;
  int k = 0;
  for (; k < f.rank(); ++k) {
    for (int j = 0; j < n; ++j) f.s(k, j) = rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    f.lambda[static_cast<std::size_t>(k)] = lambdas[static_cast<std::size_t>(k)];
  }
  for (int p = 0; p < n; ++p) {
    if (pivoted[static_cast<std::size_t>(p)]) continue;
    f.s(k, p) = 1;
    ++k;
  }
  return f;
}

NegativityWitness extract_witness(const RatMatrix& a, const RatMatrix& residual,
                                  const std::vector<std::vector<Rat>>& rows,
                                  const std::vector<int>& pivots) {
  const int n = residual.rows();
  std::vector<Rat> w(static_cast<std::size_t>(n), Rat(0));
  bool found = false;
  for (int i = 0; i < n && !found; ++i) {
    if (residual(i, i) < 0) {
      w[static_cast<std::size_t>(i)] = 1;
      found = true;
    }
  }
  if (!found) {
    // Every remaining diagonal entry is zero, so some off-diagonal entry is
    // nonzero and e_i -/+ e_j dips negative.
    for (int i = 0; i < n && !found; ++i)
      for (int j = i + 1; j < n && !found; ++j) {
        if (residual(i, j) == 0) continue;
        w[static_cast<std::size_t>(i)] = 1;
        w[static_cast<std::size_t>(j)] = residual(i, j) > 0 ? -1 : 1;
        found = true;
      }
  }
  // Undo the eliminations so the witness applies to the original matrix.
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    const std::vector<Rat>& row = rows[static_cast<std::size_t>(k)];
    Rat acc(0);
    for (int j = 0; j < n; ++j)
      if (j != pivots[static_cast<std::size_t>(k)]) acc += row[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(j)];
    w[static_cast<std::size_t>(pivots[static_cast<std::size_t>(k)])] = -acc;
  }
  NegativityWitness witness;
  witness.value = quad_form(a, w);
  witness.vector = std::move(w);
  return witness;
}

LdlResult ldl_impl(const RatMatrix& a, const std::vector<int>& scan_order) {
  require_symmetric(a);
  const int n = a.rows();
  {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    if (static_cast<int>(scan_order.size()) != n)
      throw std::invalid_argument("scan order must list every index once");
    for (int p : scan_order) {
      if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
        throw std::invalid_argument("scan order must list every index once");
      seen[static_cast<std::size_t>(p)] = true;
    }
  }
  RatMatrix residual = a;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> lambdas;
  std::vector<int> pivots;
  std::vector<bool> pivoted(static_cast<std::size_t>(n), false);
  for (;;) {
    int p = -1;
    for (int candidate : scan_order) {
      if (pivoted[static_cast<std::size_t>(candidate)]) continue;
      if (residual(candidate, candidate) > 0) {
        p = candidate;
        break;
      }
    }
    if (p < 0) break;
    const Rat lambda = residual(p, p);
    std::vector<Rat> row = pivot_row(residual, p);
    eliminate(residual, row, lambda);
    pivoted[static_cast<std::size_t>(p)] = true;
    rows.push_back(std::move(row));
    lambdas.push_back(lambda);
    pivots.push_back(p);
  }
  LdlResult result;
  if (residual.is_zero())
    result.factorization = assemble(a, std::move(rows), std::move(lambdas), std::move(pivots));
  else
    result.witness = extract_witness(a, residual, rows, pivots);
  return result;
}

} // namespace

bool LdlFactorization::nonnegative() const {
  for (const Rat& l : lambda)
    if (l < 0) return false;
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (s(i, j) < 0) return false;
  return true;
}

LdlResult ldl(const RatMatrix& a) { return ldl_impl(a, natural_order(a.rows())); }

LdlResult ldl(const RatMatrix& a, const std::vector<int>& scan_order) {
  return ldl_impl(a, scan_order);
}

RatMatrix reconstruct(const LdlFactorization& f) {
  const int n = f.s.cols();
  RatMatrix out(n, n);
  for (int k = 0; k < f.rank(); ++k) {
    const Rat& lambda = f.lambda[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i) {
      if (f.s(k, i) == 0) continue;
      const Rat scale = lambda * f.s(k, i);
      for (int j = 0; j < n; ++j) out(i, j) += scale * f.s(k, j);
    }
  }
  return out;
}

NCPoly certificate_target(int n, int d, const Rat& mu) {
  NCPoly target = nc_complete_homogeneous(n, 2 * d);
  if (mu != 0) {
    NCPoly powers(n);
    for (int j = 0; j < n; ++j)
      powers.add_term(Word{std::vector<int>(static_cast<std::size_t>(2 * d), j)}, Rat(1));
    target -= mu * powers;
  }
  return target;
}

CertifyOutcome sohs_certificate(int n, int d, const Rat& mu) {
  // Same matrix as gram_of_poly(certificate_target(n, d, mu)) — the pure
  // powers split onto the diagonal — but total even when the target cancels.
  RatMatrix gram = word_gram_matrix(n, d);
  gram -= mu * pure_power_projection(n, d, IndexBasis::kWords);
  LdlResult elimination = ldl(gram);
  CertifyOutcome outcome;
  if (!elimination.psd()) {
    outcome.witness = std::move(elimination.witness);
    return outcome;
  }
  const LdlFactorization& f = *elimination.factorization;
  const std::vector<Word> words = enumerate_words(n, d);
  SohsCertificate cert;
  cert.n = n;
  cert.d = d;
  cert.mu = mu;
  for (int k = 0; k < f.rank(); ++k) {
    SohsTerm term;
    term.weight = f.lambda[static_cast<std::size_t>(k)];
    term.poly = NCPoly(n);
    for (int j = 0; j < static_cast<int>(words.size()); ++j)
      term.poly.add_term(words[static_cast<std::size_t>(j)], f.s(k, j));
    cert.terms.push_back(std::move(term));
  }
  outcome.certificate = std::move(cert);
  return outcome;
}

VerifyOutcome verify_certificate(const SohsCertificate& cert) {
  VerifyOutcome out;
  if (cert.n < 1 || cert.d < 1) {
    out.reason = "certificate sizes out of range";
    return out;
  }
  const NCPoly target = certificate_target(cert.n, cert.d, cert.mu);
  NCPoly sum(cert.n);
  for (const SohsTerm& term : cert.terms) {
    if (term.weight <= 0) {
      out.reason = "term weight is not positive";
      out.residual = target;
      return out;
    }
    if (term.poly.num_vars() != cert.n) {
      out.reason = "term polynomial over the wrong variable count";
      out.residual = target;
      return out;
    }
    const std::optional<int> degree = term.poly.homogeneous_degree();
    if (!degree || *degree != cert.d) {
      out.reason = "term polynomial is not homogeneous of the stated degree";
      out.residual = target;
      return out;
    }
    sum += term.weight * (term.poly.star() * term.poly);
  }
  out.residual = target - sum;
  out.valid = out.residual.is_zero();
  if (!out.valid && out.reason.empty()) out.reason = "expanded sum misses the target";
  return out;
}

CommutativeSos commutative_sos(const SohsCertificate& cert) {
  CommutativeSos out;
  CPoly target = complete_homogeneous(cert.n, 2 * cert.d);
  if (cert.mu != 0) {
    CPoly powers(cert.n);
    for (int j = 0; j < cert.n; ++j) {
      Monomial m{std::vector<int>(static_cast<std::size_t>(cert.n), 0)};
      m.exponents[static_cast<std::size_t>(j)] = 2 * cert.d;
      powers.add_term(m, Rat(1));
    }
    target -= cert.mu * powers;
  }
  CPoly sum(cert.n);
  for (const SohsTerm& term : cert.terms) {
    CPoly projected = to_commutative(term.poly);
    sum += term.weight * (projected * projected);
    out.terms.emplace_back(term.weight, std::move(projected));
  }
  out.residual = target - sum;
  out.valid = out.residual.is_zero();
  return out;
}

namespace {

bool try_order(const RatMatrix& a, const std::vector<int>& order,
               std::optional<LdlFactorization>& found) {
  LdlResult result = ldl(a, order);
  if (result.psd() && result.factorization->nonnegative()) {
    found = std::move(result.factorization);
    return true;
  }
  return false;
}

// Depth-first search over pivot sequences whose rows stay entrywise
// nonnegative. Returns true on success; budget counts nodes visited.
bool search_nonneg(const RatMatrix& a, RatMatrix& residual, std::vector<bool>& pivoted,
                   std::vector<std::vector<Rat>>& rows, std::vector<Rat>& lambdas,
                   std::vector<int>& pivots, int& budget) {
  if (budget <= 0) return false;
  --budget;
  const int n = residual.rows();
  bool any_positive = false;
  for (int p = 0; p < n; ++p) {
    if (pivoted[static_cast<std::size_t>(p)] || residual(p, p) <= 0) continue;
    any_positive = true;
    std::vector<Rat> row = pivot_row(residual, p);
    if (std::any_of(row.begin(), row.end(), [](const Rat& x) { return x < 0; })) continue;
    const Rat lambda = residual(p, p);
    RatMatrix saved = residual;
    eliminate(residual, row, lambda);
    pivoted[static_cast<std::size_t>(p)] = true;
    rows.push_back(std::move(row));
    lambdas.push_back(lambda);
    pivots.push_back(p);
    if (search_nonneg(a, residual, pivoted, rows, lambdas, pivots, budget)) return true;
    pivots.pop_back();
    lambdas.pop_back();
    rows.pop_back();
    pivoted[static_cast<std::size_t>(p)] = false;
    residual = std::move(saved);
    if (budget <= 0) return false;
  }
  return !any_positive && residual.is_zero();
}

std::optional<LdlFactorization> cp_witness_impl(
    const RatMatrix& a, const std::vector<std::vector<int>>& extra_orders) {
  require_symmetric(a);
  std::optional<LdlFactorization> found;
  if (try_order(a, natural_order(a.rows()), found)) return found;
  std::size_t tried = 1;
  for (const std::vector<int>& order : extra_orders) {
    if (tried >= kOrderCap) break;
    ++tried;
    if (try_order(a, order, found)) return found;
  }
  RatMatrix residual = a;
  std::vector<bool> pivoted(static_cast<std::size_t>(a.rows()), false);
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> lambdas;
  std::vector<int> pivots;
  int budget = kSearchBudget;
  if (search_nonneg(a, residual, pivoted, rows, lambdas, pivots, budget))
    return assemble(a, std::move(rows), std::move(lambdas), std::move(pivots));
  return std::nullopt;
}

} // namespace

std::optional<LdlFactorization> cp_witness(const RatMatrix& a) {
  return cp_witness_impl(a, {});
}

std::optional<LdlFactorization> cp_witness(const RatMatrix& a,
                                           const std::vector<std::vector<int>>& extra_orders) {
  return cp_witness_impl(a, extra_orders);
}

std::vector<std::vector<int>> variable_permutation_orders(int n, int d) {
  const std::vector<Word> words = enumerate_words(n, d);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> orders;
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<int> order;
    order.reserve(words.size());
    for (const Word& w : words) {
      Word image = w;
      for (int& letter : image.letters) letter = perm[static_cast<std::size_t>(letter)];
      order.push_back(static_cast<int>(word_index(image, n)));
    }
    orders.push_back(std::move(order));
    if (orders.size() + 1 >= kOrderCap) break;
  }
  return orders;
}

} // namespace nchs
