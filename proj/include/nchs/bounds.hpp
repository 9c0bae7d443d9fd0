#pragma once

#include <utility>
#include <vector>

#include "nchs/polynomial.hpp"
#include "nchs/rational.hpp"

namespace nchs {

// Sharp constant for shaving pure powers off the symmetrized power sum.
// Closed form; the n = 1 case is exactly 1.
Rat mu_closed(int n, int d);

// Diagonal and off-diagonal entries of the inverted Schur complement block;
// needs n >= 2 so an off-diagonal entry exists.
std::pair<Rat, Rat> rho(int n, int d);

// Independent route to the same constant: eliminate the non-pure-power block
// of the monomial Gram matrix exactly, invert the Schur complement, read the
// two-point spectrum off its constant diagonal/off-diagonal structure.
Rat mu_schur(int n, int d);

// Fully expanded polynomial the monomial Gram matrix maps to x1^d.
CPoly inverse_image_x1d(int n, int d);

// Checks sum_k C(m,k) C(l+k,k) C(l-m,d-k) == C(l,d) C(m+d,d) with generalized
// binomials; m may be negative.
bool vandermonde_identity_check(long m, int d, int l);

struct BoundReport {
  int n = 0;
  int d = 0;
  Rat mu;            // closed form
  Rat mu_cross;      // Schur route when computed, else the closed form again
  bool schur_checked = false;
  Rat rho0;
  Rat rho1;          // 0 when n == 1
  int delta = 0;     // 1 for odd d, n-1 for even d
  Int k_dim;         // 1 + n + ... + n^d
  Rat scalar_bound;  // mu / n^(d-1)
  Rat hunter_bound;  // 1 / (2^d d!)
  Rat limit_bound;   // 1 / C(2d,d)
};

BoundReport bound_report(int n, int d);

// The degree-d kernel element x1^(d-3) (x1 x2^2 - x2^2 x1) that the word Gram
// matrix annihilates but the squares matrix does not. Needs n >= 2, d >= 3.
NCPoly nobound_witness(int n, int d);

struct NoboundCheck {
  NCPoly witness;
  std::vector<Rat> gram_image;
  std::vector<Rat> squares_image;
  bool gram_annihilates = false;
  bool squares_annihilates = false;
};

NoboundCheck nobound_residuals(int n, int d);

} // namespace nchs
