#pragma once

#include <vector>

#include "nchs/matrix.hpp"
#include "nchs/polynomial.hpp"

namespace nchs {

enum class IndexBasis { kWords, kMonomials };

// Gram matrix indexed by the degree-d words in n variables: the (u, v) entry
// is the reciprocal of the number of words sharing the letter counts of u*v.
RatMatrix word_gram_matrix(int n, int d);

// Same data compressed to the degree-d monomials: the (u, v) entry is the
// reciprocal of the number of words with the letter counts of uv.
RatMatrix monomial_gram_matrix(int n, int d);

// Diagonal 0/1 matrix selecting the pure powers xj^d in the chosen basis.
RatMatrix pure_power_projection(int n, int d, IndexBasis basis);

// 0/1 matrix over degree-d words whose (u, v) entry is 1 exactly when u*v is
// a product of squares of variables.
RatMatrix square_words_matrix(int n, int d);

// Every degree-2d word splits uniquely as u*v with u, v of degree d, so a
// homogeneous even-degree polynomial pins down one matrix over the degree-d
// words and vice versa.
RatMatrix gram_of_poly(const NCPoly& p);
NCPoly poly_of_gram(const RatMatrix& g, int n, int d);

struct RankKernel {
  int rank = 0;
  // Primitive integer vectors (first nonzero entry positive) spanning the
  // kernel, one per free column of the echelon form.
  std::vector<std::vector<Rat>> kernel;
};

RankKernel rank_kernel(const RatMatrix& a);

} // namespace nchs
