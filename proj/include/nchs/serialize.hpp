#pragma once

#include <stdexcept>
#include <string>

#include "nchs/bounds.hpp"
#include "nchs/certify.hpp"
#include "nchs/matrix.hpp"

namespace nchs {

// Malformed document; distinct from a well-formed certificate that fails
// verification.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Certificate documents. Schema 1: {"schema", "n", "d", "target": {"kind":
// "nchs" | "nchs-minus-mu", "mu": "p/q"}, "terms": [{"weight": "p/q", "poly":
// [{"word": [1-based letters], "coeff": "p/q"}]}]}. Serialization is
// deterministic, so write(parse(write(c))) == write(c) byte for byte.
std::string write_certificate(const SohsCertificate& cert);
SohsCertificate parse_certificate(const std::string& text);

// Labeled exact matrices: {"schema", "n", "d", "which", "labels", "entries"}
// with entries as "p/q" strings, same byte-exact round-trip guarantee.
struct MatrixDocument {
  int n = 0;
  int d = 0;
  std::string which; // nc | c | m | b
  RatMatrix matrix;
};

std::string write_matrix_document(const MatrixDocument& doc);
MatrixDocument parse_matrix_document(const std::string& text);

std::string write_bound_report(const BoundReport& report);

// Fixed-precision decimal annotation (12 significant digits).
std::string decimal_annotation(const Rat& value);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace nchs
