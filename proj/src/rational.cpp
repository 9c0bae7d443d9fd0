#include "nchs/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nchs {

Rat frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat frac(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rat> parse_rat(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    // a signed denominator is not part of the grammar
    if (!den.empty() && (den.front() == '+' || den.front() == '-')) return std::nullopt;
  }
  if (!is_integer(num) || !is_integer(den)) return std::nullopt;

  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  return frac(n, d);
}

std::string to_string(const Rat& value) { return value.get_str(); }

std::string to_string(const Int& value) { return value.get_str(); }

double to_double(const Rat& value) { return value.get_d(); }

} // namespace nchs
