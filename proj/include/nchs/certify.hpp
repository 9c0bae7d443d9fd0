#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nchs/gram.hpp"
#include "nchs/matrix.hpp"
#include "nchs/polynomial.hpp"

namespace nchs {

// Exact evidence that a symmetric matrix is not positive semidefinite.
struct NegativityWitness {
  std::vector<Rat> vector;
  Rat value; // vector^T A vector, strictly negative
};

// A = s^T diag(lambda) s with s square. Row k of s is the k-th pivot row and
// has a unit entry in column pivots[k]; rows past the pivot count are unit
// rows carrying weight zero, kept so s stays square and invertible.
struct LdlFactorization {
  RatMatrix s;
  std::vector<Rat> lambda;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(pivots.size()); }
  bool nonnegative() const;
};

struct LdlResult {
  std::optional<LdlFactorization> factorization;
  std::optional<NegativityWitness> witness;

  bool psd() const { return factorization.has_value(); }
};

// Symmetric elimination over the rationals. Pivots on the first strictly
// positive diagonal entry in scan order; a PSD input always eliminates to
// zero, anything else yields an exact negativity witness.
LdlResult ldl(const RatMatrix& a);
LdlResult ldl(const RatMatrix& a, const std::vector<int>& scan_order);

RatMatrix reconstruct(const LdlFactorization& f);

struct SohsTerm {
  Rat weight;
  NCPoly poly;
};

// Weighted hermitian squares summing to the certificate target: the full
// symmetrized power sum for mu == 0, or that sum shaved by mu times the pure
// powers x_j^{2d} otherwise.
struct SohsCertificate {
  int n = 0;
  int d = 0; // degree of every term polynomial; the target has degree 2d
  Rat mu;
  std::vector<SohsTerm> terms;
};

NCPoly certificate_target(int n, int d, const Rat& mu);

struct CertifyOutcome {
  std::optional<SohsCertificate> certificate;
  std::optional<NegativityWitness> witness;
};

// Builds a certificate from the eliminated Gram matrix; the term count equals
// the matrix rank. A mu past the sharp constant surfaces as a witness.
CertifyOutcome sohs_certificate(int n, int d, const Rat& mu);

struct VerifyOutcome {
  bool valid = false;
  NCPoly residual; // target minus the expanded sum
  std::string reason;
};

// Expands sum_j weight_j * poly_j^* poly_j exactly and compares to the target.
VerifyOutcome verify_certificate(const SohsCertificate& cert);

struct CommutativeSos {
  bool valid = false;
  std::vector<std::pair<Rat, CPoly>> terms;
  CPoly residual;
};

// Lets the variables commute in each term and checks the squares still sum to
// the commutative target.
CommutativeSos commutative_sos(const SohsCertificate& cert);

// Searches for a factorization whose s is entrywise nonnegative: the natural
// scan order first, then any caller-supplied orders (capped at 8! tried), then
// a depth-first search over pivot choices whose rows stay nonnegative, capped
// at 10^4 nodes. A hit proves complete positivity; a miss proves nothing.
std::optional<LdlFactorization> cp_witness(const RatMatrix& a);
std::optional<LdlFactorization> cp_witness(const RatMatrix& a,
                                           const std::vector<std::vector<int>>& extra_orders);

// Scan orders on the degree-d word basis induced by permuting the variables.
std::vector<std::vector<int>> variable_permutation_orders(int n, int d);

} // namespace nchs
