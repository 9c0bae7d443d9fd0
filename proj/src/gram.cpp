#include "nchs/gram.hpp"

#include <stdexcept>

namespace nchs {
namespace {

std::vector<std::string> word_labels(const std::vector<Word>& words) {
  std::vector<std::string> labels;
  labels.reserve(words.size());
  for (const Word& w : words) labels.push_back(to_string(w));
  return labels;
}

Rat fiber_reciprocal(const std::vector<int>& letters, int n) {
  return Rat(1) / Rat(fiber_size(abelianize(Word{letters}, n)));
}

} // namespace

RatMatrix word_gram_matrix(int n, int d) {
  const std::vector<Word> words = enumerate_words(n, d);
  const int size = static_cast<int>(words.size());
  RatMatrix g(size, size);
  g.labels = word_labels(words);
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) {
      std::vector<int> letters = words[i].letters;
      letters.insert(letters.end(), words[j].letters.begin(), words[j].letters.end());
      const Rat value = fiber_reciprocal(letters, n);
      g(i, j) = value;
      g(j, i) = value;
    }
  return g;
}

RatMatrix monomial_gram_matrix(int n, int d) {
  const std::vector<Monomial> monomials = enumerate_monomials(n, d);
  const int size = static_cast<int>(monomials.size());
  RatMatrix g(size, size);
  g.labels.reserve(monomials.size());
  for (const Monomial& m : monomials) g.labels.push_back(to_string(m));
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) {
      Monomial prod = monomials[i];
      for (int v = 0; v < n; ++v) prod.exponents[v] += monomials[j].exponents[v];
      const Rat value = Rat(1) / Rat(fiber_size(prod));
      g(i, j) = value;
      g(j, i) = value;
    }
  return g;
}

RatMatrix pure_power_projection(int n, int d, IndexBasis basis) {
  if (basis == IndexBasis::kWords) {
    const std::vector<Word> words = enumerate_words(n, d);
    RatMatrix m(static_cast<int>(words.size()), static_cast<int>(words.size()));
    m.labels = word_labels(words);
    for (int i = 0; i < static_cast<int>(words.size()); ++i) {
      const std::vector<int>& letters = words[i].letters;
      bool pure = !letters.empty();
      for (int letter : letters) pure = pure && letter == letters.front();
      if (pure) m(i, i) = 1;
    }
    return m;
  }
  const std::vector<Monomial> monomials = enumerate_monomials(n, d);
  RatMatrix m(static_cast<int>(monomials.size()), static_cast<int>(monomials.size()));
  m.labels.reserve(monomials.size());
  for (const Monomial& mono : monomials) m.labels.push_back(to_string(mono));
  for (int i = 0; i < static_cast<int>(monomials.size()); ++i)
    if (monomials[i].is_pure_power()) m(i, i) = 1;
  return m;
}

RatMatrix square_words_matrix(int n, int d) {
  const std::vector<Word> words = enumerate_words(n, d);
  const int size = static_cast<int>(words.size());
  RatMatrix b(size, size);
  b.labels = word_labels(words);
  for (int i = 0; i < size; ++i) {
    const Word left = words[i].reversed();
    for (int j = 0; j < size; ++j) {
      std::vector<int> letters = left.letters;
      letters.insert(letters.end(), words[j].letters.begin(), words[j].letters.end());
      bool squares = true;
      for (std::size_t k = 0; k + 1 < letters.size(); k += 2)
        squares = squares && letters[k] == letters[k + 1];
      if (squares) b(i, j) = 1;
    }
  }
  return b;
}

RatMatrix gram_of_poly(const NCPoly& p) {
  const std::optional<int> degree = p.homogeneous_degree();
  if (!degree)
    throw std::invalid_argument("gram_of_poly needs a nonzero homogeneous polynomial");
  if (*degree % 2 != 0 || *degree == 0)
    throw std::invalid_argument("gram_of_poly needs positive even degree");
  const int n = p.num_vars();
  const int d = *degree / 2;
  const std::vector<Word> words = enumerate_words(n, d);
  const int size = static_cast<int>(words.size());
  RatMatrix g(size, size);
  g.labels = word_labels(words);
  for (const auto& [w, c] : p.terms()) {
    const std::vector<int>& letters = w.letters;
    Word u{std::vector<int>(letters.begin(), letters.begin() + d)};
    u = u.reversed();
    const Word v{std::vector<int>(letters.begin() + d, letters.end())};
    g(static_cast<int>(word_index(u, n)), static_cast<int>(word_index(v, n))) = c;
  }
  return g;
}

NCPoly poly_of_gram(const RatMatrix& g, int n, int d) {
  const std::vector<Word> words = enumerate_words(n, d);
  if (g.rows() != static_cast<int>(words.size()) || g.rows() != g.cols())
    throw std::invalid_argument("matrix size does not match the degree-d word basis");
  NCPoly p(n);
  for (int i = 0; i < g.rows(); ++i) {
    const Word left = words[i].reversed();
    for (int j = 0; j < g.cols(); ++j) {
      if (g(i, j) == 0) continue;
      Word w = left;
      w.letters.insert(w.letters.end(), words[j].letters.begin(), words[j].letters.end());
      p.add_term(w, g(i, j));
    }
  }
  return p;
}

RankKernel rank_kernel(const RatMatrix& a) {
  RatMatrix r = a;
  const std::vector<int> pivot_cols = rref(r);
  RankKernel out;
  out.rank = static_cast<int>(pivot_cols.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int col : pivot_cols) is_pivot[static_cast<std::size_t>(col)] = true;
  for (int free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    std::vector<Rat> v(static_cast<std::size_t>(a.cols()), Rat(0));
    v[static_cast<std::size_t>(free_col)] = 1;
    for (int row = 0; row < out.rank; ++row)
      v[static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(row)])] =
          -r(row, free_col);
    // Rescale to a primitive integer vector with positive leading entry.
    Int denom_lcm = 1;
    for (const Rat& x : v)
      if (x != 0) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                          x.get_den().get_mpz_t());
    Int num_gcd = 0;
    for (Rat& x : v) {
      x *= Rat(denom_lcm);
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
    }
    for (Rat& x : v) x /= Rat(num_gcd);
    for (const Rat& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (Rat& y : v) y = -y;
      break;
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

} // namespace nchs
