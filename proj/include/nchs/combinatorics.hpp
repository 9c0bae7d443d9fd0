#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nchs/rational.hpp"

namespace nchs {

// A degree-d word over the letters x1..xn. Letters are stored 0-based and
// displayed 1-based. Comparison is lexicographic; for equal-length words this
// is exactly the numeric order of the base-n encoding.
struct Word {
  std::vector<int> letters;

  int degree() const { return static_cast<int>(letters.size()); }
  Word reversed() const;

  auto operator<=>(const Word&) const = default;
};

// A commutative monomial, stored as its exponent tuple. Monomials of equal
// degree are ordered by their nondecreasing word representative (so x1^d
// comes first), which is reverse lexicographic on the exponent tuples.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  bool is_pure_power() const;  // some xj^d with d >= 1

  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& other) const;
};

// Guard on enumerated index-set sizes; dense matrices are square in this
// dimension. Overridable via set_dimension_cap (the CLI wires --cap and the
// NCHS_CAP environment variable to it).
std::size_t dimension_cap();
void set_dimension_cap(std::size_t cap);

// n^d, or nullopt as soon as the product exceeds limit.
std::optional<std::size_t> checked_power(int n, int d, std::size_t limit);

// All n^d words of degree d, strictly increasing. Throws std::length_error
// when n^d exceeds the dimension cap.
std::vector<Word> enumerate_words(int n, int d);

// All binom(n-1+d, d) degree-d monomials, increasing. Same size guard.
std::vector<Monomial> enumerate_monomials(int n, int d);

// Forgets the letter order: exponent i counts the occurrences of letter i.
// The exponent tuple has length n so monomials over the same variables
// compare cleanly.
Monomial abelianize(const Word& w, int n);

// Number of words with the given exponent counts, d!/(k1! ... kn!).
Int fiber_size(const Monomial& m);

Int factorial(long k);

// r(r-1)...(r-k+1)/k! for any integer r and k >= 0; always an integer.
Int gen_binomial(long r, long k);

// gen_binomial with the usual convention binomial(n, k) = 0 for k < 0.
Int binomial(long n, long k);

// Base-n encoding of a word; mutually inverse with index_word and monotone
// with the lexicographic order.
std::size_t word_index(const Word& w, int n);
Word index_word(std::size_t index, int n, int d);

// "x1^2 x2" style rendering; adjacent equal letters collapse into powers.
std::string to_string(const Word& w);
std::string to_string(const Monomial& m);

} // namespace nchs
