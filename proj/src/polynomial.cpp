#include "nchs/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nchs {
namespace {

void require_vars(int num_vars) {
  if (num_vars < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

void require_word_fits(const Word& w, int num_vars) {
  for (int letter : w.letters)
    if (letter < 0 || letter >= num_vars)
      throw std::out_of_range("word letter outside the variable range");
}

} // namespace

NCPoly::NCPoly(int num_vars) : num_vars_(num_vars) { require_vars(num_vars); }

Rat NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rat& c) {
  require_word_fits(w, num_vars_);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void NCPoly::require_same_vars(const NCPoly& other) const {
  if (num_vars_ != other.num_vars_)
    throw std::invalid_argument("polynomials over different variable counts");
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  require_same_vars(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
  require_same_vars(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  a.require_same_vars(b);
  NCPoly prod(a.num_vars_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) {
      Word w = u;
      w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
      prod.add_term(w, cu * cv);
    }
  return prod;
}

NCPoly NCPoly::star() const {
  NCPoly out(num_vars_);
  for (const auto& [w, c] : terms_) out.add_term(w.reversed(), c);
  return out;
}

bool NCPoly::is_hermitian() const { return *this == star(); }

std::optional<int> NCPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [w, c] : terms_)
    if (w.degree() != d) return std::nullopt;
  return d;
}

CPoly::CPoly(int num_vars) : num_vars_(num_vars) { require_vars(num_vars); }

Rat CPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void CPoly::add_term(const Monomial& m, const Rat& c) {
  if (static_cast<int>(m.exponents.size()) != num_vars_)
    throw std::invalid_argument("monomial over a different variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void CPoly::require_same_vars(const CPoly& other) const {
  if (num_vars_ != other.num_vars_)
    throw std::invalid_argument("polynomials over different variable counts");
}

CPoly& CPoly::operator+=(const CPoly& other) {
  require_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& other) {
  require_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

CPoly& CPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  a.require_same_vars(b);
  CPoly prod(a.num_vars_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) {
      Monomial m = u;
      for (int i = 0; i < static_cast<int>(m.exponents.size()); ++i)
        m.exponents[i] += v.exponents[i];
      prod.add_term(m, cu * cv);
    }
  return prod;
}

std::optional<int> CPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

CPoly to_commutative(const NCPoly& p) {
  CPoly out(p.num_vars());
  for (const auto& [w, c] : p.terms()) out.add_term(abelianize(w, p.num_vars()), c);
  return out;
}

NCPoly symmetrized_lift(const CPoly& p) {
  NCPoly out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> letters;
    for (int j = 0; j < static_cast<int>(m.exponents.size()); ++j)
      letters.insert(letters.end(), m.exponents[j], j);
    const Rat share = c / Rat(fiber_size(m));
    // letters starts sorted, so next_permutation walks the whole fiber.
    do {
      out.add_term(Word{letters}, share);
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
  return out;
}

CPoly complete_homogeneous(int n, int d) {
  CPoly out(n);
  for (const Monomial& m : enumerate_monomials(n, d)) out.add_term(m, Rat(1));
  return out;
}

NCPoly nc_complete_homogeneous(int n, int d) {
  return symmetrized_lift(complete_homogeneous(n, d));
}

namespace {

template <typename T>
T coeff_cast(const Rat& c);

template <>
Rat coeff_cast<Rat>(const Rat& c) { return c; }

template <>
double coeff_cast<double>(const Rat& c) { return to_double(c); }

template <typename T>
Matrix<T> eval_nc_impl(const NCPoly& p, const MatTuple<T>& xs) {
  if (xs.n != p.num_vars())
    throw std::invalid_argument("evaluation tuple has the wrong number of matrices");
  if (static_cast<int>(xs.mats.size()) != xs.n)
    throw std::invalid_argument("matrix tuple is inconsistent with its declared size");
  for (const Matrix<T>& x : xs.mats)
    if (x.rows() != xs.k || x.cols() != xs.k)
      throw std::invalid_argument("matrix tuple entries must be k x k");
  Matrix<T> out(xs.k, xs.k);
  for (const auto& [w, c] : p.terms()) {
    Matrix<T> value = Matrix<T>::identity(xs.k);
    for (int letter : w.letters) value = value * xs.mats[letter];
    out += coeff_cast<T>(c) * value;
  }
  return out;
}

template <typename T>
T eval_c_impl(const CPoly& p, const std::vector<T>& xs) {
  if (static_cast<int>(xs.size()) != p.num_vars())
    throw std::invalid_argument("evaluation point has the wrong number of coordinates");
  T out(0);
  for (const auto& [m, c] : p.terms()) {
    T value = coeff_cast<T>(c);
    for (int j = 0; j < static_cast<int>(m.exponents.size()); ++j)
      for (int e = 0; e < m.exponents[j]; ++e) value *= xs[j];
    out += value;
  }
  return out;
}

template <typename TermMap>
std::string render_poly(const TermMap& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    Rat mag = c;
    const bool negative = c < 0;
    if (negative) mag = -mag;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const std::string name = to_string(key);
    if (mag != 1 || name == "1") out << to_string(mag);
    if (name != "1") {
      if (mag != 1) out << " ";
      out << name;
    }
  }
  return out.str();
}

} // namespace

namespace {

template <typename Poly, typename Key>
std::vector<Rat> coefficient_vector_impl(const Poly& p, const std::vector<Key>& basis) {
  std::vector<Rat> out(basis.size(), Rat(0));
  std::map<Key, std::size_t> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position.emplace(basis[i], i);
  for (const auto& [key, c] : p.terms()) {
    auto it = position.find(key);
    if (it == position.end())
      throw std::invalid_argument("polynomial has a term outside the basis");
    out[it->second] = c;
  }
  return out;
}

} // namespace

std::vector<Rat> coefficient_vector(const NCPoly& p, const std::vector<Word>& basis) {
  return coefficient_vector_impl(p, basis);
}

std::vector<Rat> coefficient_vector(const CPoly& p, const std::vector<Monomial>& basis) {
  return coefficient_vector_impl(p, basis);
}

RatMatrix eval_nc(const NCPoly& p, const MatTupleQ& xs) { return eval_nc_impl(p, xs); }
DMatrix eval_nc(const NCPoly& p, const MatTupleD& xs) { return eval_nc_impl(p, xs); }

Rat eval_c(const CPoly& p, const std::vector<Rat>& xs) { return eval_c_impl(p, xs); }
double eval_c(const CPoly& p, const std::vector<double>& xs) { return eval_c_impl(p, xs); }

std::string to_string(const NCPoly& p) { return render_poly(p.terms()); }
std::string to_string(const CPoly& p) { return render_poly(p.terms()); }

} // namespace nchs
