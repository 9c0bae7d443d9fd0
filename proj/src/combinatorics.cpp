#include "nchs/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace nchs {

namespace {

constexpr std::size_t kDefaultCap = 8192;
std::atomic<std::size_t> g_dimension_cap{kDefaultCap};

void require_vars(int n) {
  if (n < 1) throw std::invalid_argument("number of variables must be >= 1");
}

void require_degree(int d) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
}

} // namespace

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

bool Monomial::is_pure_power() const {
  int nonzero = 0;
  for (int e : exponents) {
    if (e > 0) ++nonzero;
  }
  return nonzero == 1;
}

bool Monomial::operator<(const Monomial& other) const {
  // Reverse lex on exponents == lex on the sorted word representative.
  return std::lexicographical_compare(other.exponents.begin(), other.exponents.end(),
                                      exponents.begin(), exponents.end());
}

std::size_t dimension_cap() { return g_dimension_cap.load(); }

void set_dimension_cap(std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("dimension cap must be positive");
  g_dimension_cap.store(cap);
}

std::optional<std::size_t> checked_power(int n, int d, std::size_t limit) {
  std::size_t result = 1;
  for (int i = 0; i < d; ++i) {
    if (result > limit / static_cast<std::size_t>(n)) return std::nullopt;
    result *= static_cast<std::size_t>(n);
  }
  if (result > limit) return std::nullopt;
  return result;
}

std::vector<Word> enumerate_words(int n, int d) {
  require_vars(n);
  require_degree(d);
  auto count = checked_power(n, d, dimension_cap());
  if (!count) throw std::length_error("enumerate_words: n^d exceeds the dimension cap");

  std::vector<Word> words;
  words.reserve(*count);
  Word w;
  w.letters.assign(d, 0);
  for (std::size_t i = 0; i < *count; ++i) {
    words.push_back(w);
    // base-n odometer
    for (int pos = d - 1; pos >= 0; --pos) {
      if (++w.letters[pos] < n) break;
      w.letters[pos] = 0;
    }
  }
  return words;
}

namespace {

void monomials_rec(int n, int d, std::vector<int>& prefix, std::vector<Monomial>& out) {
  if (n == 1) {
    Monomial m;
    m.exponents = prefix;
    m.exponents.push_back(d);
    out.push_back(std::move(m));
    return;
  }
  for (int k = d; k >= 0; --k) {
    prefix.push_back(k);
    monomials_rec(n - 1, d - k, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Monomial> enumerate_monomials(int n, int d) {
  require_vars(n);
  require_degree(d);
  Int count = binomial(n - 1 + d, d);
  if (count > static_cast<long>(dimension_cap()))
    throw std::length_error("enumerate_monomials: binom(n-1+d, d) exceeds the dimension cap");

  std::vector<Monomial> monomials;
  monomials.reserve(count.get_ui());
  std::vector<int> prefix;
  monomials_rec(n, d, prefix, monomials);
  return monomials;
}

Monomial abelianize(const Word& w, int n) {
  require_vars(n);
  Monomial m;
  m.exponents.assign(n, 0);
  for (int letter : w.letters) {
    if (letter < 0 || letter >= n) throw std::out_of_range("abelianize: letter out of range");
    ++m.exponents[letter];
  }
  return m;
}

Int fiber_size(const Monomial& m) {
  Int result = 1;
  long partial = 0;
  for (int e : m.exponents) {
    partial += e;
    result *= binomial(partial, e);
  }
  return result;
}

Int factorial(long k) {
  if (k < 0) throw std::invalid_argument("factorial of a negative number");
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

Int gen_binomial(long r, long k) {
  if (k < 0) throw std::invalid_argument("gen_binomial: k must be >= 0");
  Int falling = 1;
  for (long i = 0; i < k; ++i) falling *= Int(r - i);
  Int result;
  Int fact = factorial(k);
  mpz_divexact(result.get_mpz_t(), falling.get_mpz_t(), fact.get_mpz_t());
  return result;
}

Int binomial(long n, long k) {
  if (k < 0) return 0;
  return gen_binomial(n, k);
}

std::size_t word_index(const Word& w, int n) {
  require_vars(n);
  std::size_t index = 0;
  for (int letter : w.letters) {
    if (letter < 0 || letter >= n) throw std::out_of_range("word_index: letter out of range");
    index = index * static_cast<std::size_t>(n) + static_cast<std::size_t>(letter);
  }
  return index;
}

Word index_word(std::size_t index, int n, int d) {
  require_vars(n);
  require_degree(d);
  auto count = checked_power(n, d, SIZE_MAX);
  if (!count || index >= *count) throw std::out_of_range("index_word: index out of range");
  Word w;
  w.letters.assign(d, 0);
  for (int pos = d - 1; pos >= 0; --pos) {
    w.letters[pos] = static_cast<int>(index % static_cast<std::size_t>(n));
    index /= static_cast<std::size_t>(n);
  }
  return w;
}

namespace {

void append_power(std::string& out, int letter, int count) {
  if (!out.empty()) out += ' ';
  out += 'x';
  out += std::to_string(letter + 1);
  if (count > 1) {
    out += '^';
    out += std::to_string(count);
  }
}

} // namespace

std::string to_string(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  int run_letter = w.letters[0];
  int run_length = 0;
  for (int letter : w.letters) {
    if (letter == run_letter) {
      ++run_length;
    } else {
      append_power(out, run_letter, run_length);
      run_letter = letter;
      run_length = 1;
    }
  }
  append_power(out, run_letter, run_length);
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.degree() == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] > 0) append_power(out, static_cast<int>(i), m.exponents[i]);
  }
  return out;
}

} // namespace nchs
