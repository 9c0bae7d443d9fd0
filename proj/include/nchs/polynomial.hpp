#pragma once

#include <map>
#include <optional>
#include <string>

#include "nchs/combinatorics.hpp"
#include "nchs/matrix.hpp"
#include "nchs/rational.hpp"

namespace nchs {

// Polynomial in noncommuting variables x1..xn with rational coefficients,
// keyed by Word. Zero coefficients are never stored.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::map<Word, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const Word& w) const;
  void add_term(const Word& w, const Rat& c);

  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  NCPoly& operator*=(const Rat& scalar);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Rat& scalar) { return a *= scalar; }
  friend NCPoly operator*(const Rat& scalar, NCPoly a) { return a *= scalar; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

  bool operator==(const NCPoly&) const = default;

  // Reverses every word; rational coefficients are their own conjugates.
  NCPoly star() const;
  bool is_hermitian() const;

  // Degree shared by every term, or nullopt if terms mix degrees or the
  // polynomial is zero.
  std::optional<int> homogeneous_degree() const;

 private:
  void require_same_vars(const NCPoly& other) const;

  int num_vars_ = 0;
  std::map<Word, Rat> terms_;
};

// Commutative counterpart, keyed by Monomial.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rat& c);

  CPoly& operator+=(const CPoly& other);
  CPoly& operator-=(const CPoly& other);
  CPoly& operator*=(const Rat& scalar);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(CPoly a, const Rat& scalar) { return a *= scalar; }
  friend CPoly operator*(const Rat& scalar, CPoly a) { return a *= scalar; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);

  bool operator==(const CPoly&) const = default;

  std::optional<int> homogeneous_degree() const;

 private:
  void require_same_vars(const CPoly& other) const;

  int num_vars_ = 0;
  std::map<Monomial, Rat> terms_;
};

// Substitution homomorphism that lets the variables commute.
CPoly to_commutative(const NCPoly& p);

// Right inverse of to_commutative that spreads each monomial's coefficient
// evenly over the words sharing its letter counts.
NCPoly symmetrized_lift(const CPoly& p);

// Sum of all degree-d monomials in n variables, each with coefficient 1.
CPoly complete_homogeneous(int n, int d);

// Symmetrized lift of complete_homogeneous(n, d).
NCPoly nc_complete_homogeneous(int n, int d);

// Evaluation at a tuple of symmetric matrices; a degree-0 term contributes a
// multiple of the identity. Requires xs.n == p.num_vars().
RatMatrix eval_nc(const NCPoly& p, const MatTupleQ& xs);
DMatrix eval_nc(const NCPoly& p, const MatTupleD& xs);

Rat eval_c(const CPoly& p, const std::vector<Rat>& xs);
double eval_c(const CPoly& p, const std::vector<double>& xs);

// Coefficients of p in the given basis order; throws if p has a term outside
// the basis.
std::vector<Rat> coefficient_vector(const NCPoly& p, const std::vector<Word>& basis);
std::vector<Rat> coefficient_vector(const CPoly& p, const std::vector<Monomial>& basis);

std::string to_string(const NCPoly& p);
std::string to_string(const CPoly& p);

} // namespace nchs
