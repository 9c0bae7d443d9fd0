#include "nchs/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nchs {
namespace {

using nlohmann::json;

json require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

int require_int(const json& doc, const char* key, int min_value) {
  const json value = require(doc, key);
  if (!value.is_number_integer())
    throw ParseError(std::string("field \"") + key + "\" must be an integer");
  const int out = value.get<int>();
  if (out < min_value)
    throw ParseError(std::string("field \"") + key + "\" is out of range");
  return out;
}

Rat require_rat(const json& value, const char* what) {
  if (!value.is_string())
    throw ParseError(std::string(what) + " must be a rational string");
  const std::optional<Rat> parsed = parse_rat(value.get<std::string>());
  if (!parsed) throw ParseError(std::string(what) + " is not a valid rational");
  return *parsed;
}

void require_schema(const json& doc) {
  if (require(doc, "schema") != json(1)) throw ParseError("unsupported schema version");
}

json poly_to_json(const NCPoly& p) {
  json terms = json::array();
  for (const auto& [w, c] : p.terms()) {
    json letters = json::array();
    for (int letter : w.letters) letters.push_back(letter + 1);
    terms.push_back(json{{"coeff", to_string(c)}, {"word", letters}});
  }
  return terms;
}

NCPoly poly_from_json(const json& value, int n) {
  if (!value.is_array()) throw ParseError("polynomial must be an array of terms");
  NCPoly p(n);
  for (const json& term : value) {
    const json word = require(term, "word");
    if (!word.is_array()) throw ParseError("word must be an array of letters");
    Word w;
    for (const json& letter : word) {
      if (!letter.is_number_integer()) throw ParseError("letters must be integers");
      const int index = letter.get<int>();
      if (index < 1 || index > n) throw ParseError("letter outside the variable range");
      w.letters.push_back(index - 1);
    }
    p.add_term(w, require_rat(require(term, "coeff"), "coefficient"));
  }
  return p;
}

} // namespace

std::string write_certificate(const SohsCertificate& cert) {
  json doc;
  doc["schema"] = 1;
  doc["n"] = cert.n;
  doc["d"] = cert.d;
  json target;
  if (cert.mu == 0) {
    target["kind"] = "nchs";
  } else {
    target["kind"] = "nchs-minus-mu";
    target["mu"] = to_string(cert.mu);
  }
  doc["target"] = target;
  json terms = json::array();
  for (const SohsTerm& term : cert.terms)
    terms.push_back(json{{"weight", to_string(term.weight)}, {"poly", poly_to_json(term.poly)}});
  doc["terms"] = terms;
  return doc.dump(2) + "\n";
}

SohsCertificate parse_certificate(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& error) {
    throw ParseError(error.what());
  }
  require_schema(doc);
  SohsCertificate cert;
  cert.n = require_int(doc, "n", 1);
  cert.d = require_int(doc, "d", 1);
  const json target = require(doc, "target");
  const json kind = require(target, "kind");
  if (kind == json("nchs")) {
    cert.mu = 0;
  } else if (kind == json("nchs-minus-mu")) {
    cert.mu = require_rat(require(target, "mu"), "mu");
  } else {
    throw ParseError("unknown target kind");
  }
  const json terms = require(doc, "terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  for (const json& term : terms) {
    SohsTerm out;
    out.weight = require_rat(require(term, "weight"), "weight");
    out.poly = poly_from_json(require(term, "poly"), cert.n);
    cert.terms.push_back(std::move(out));
  }
  return cert;
}

std::string write_matrix_document(const MatrixDocument& doc) {
  json out;
  out["schema"] = 1;
  out["n"] = doc.n;
  out["d"] = doc.d;
  out["which"] = doc.which;
  out["labels"] = doc.matrix.labels;
  json entries = json::array();
  for (int i = 0; i < doc.matrix.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < doc.matrix.cols(); ++j) row.push_back(to_string(doc.matrix(i, j)));
    entries.push_back(std::move(row));
  }
  out["entries"] = entries;
  return out.dump(2) + "\n";
}

MatrixDocument parse_matrix_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& error) {
    throw ParseError(error.what());
  }
  require_schema(doc);
  MatrixDocument out;
  out.n = require_int(doc, "n", 1);
  out.d = require_int(doc, "d", 1);
  const json which = require(doc, "which");
  if (which != json("nc") && which != json("c") && which != json("m") && which != json("b"))
    throw ParseError("unknown matrix selector");
  out.which = which.get<std::string>();
  const json entries = require(doc, "entries");
  if (!entries.is_array() || entries.empty()) throw ParseError("entries must be a nonempty array");
  const int rows = static_cast<int>(entries.size());
  if (!entries[0].is_array()) throw ParseError("entries must be an array of rows");
  const int cols = static_cast<int>(entries[0].size());
  out.matrix = RatMatrix(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError("entries must be rectangular");
    for (int j = 0; j < cols; ++j)
      out.matrix(i, j) = require_rat(row[static_cast<std::size_t>(j)], "matrix entry");
  }
  const json labels = require(doc, "labels");
  if (!labels.is_array() || static_cast<int>(labels.size()) != rows)
    throw ParseError("labels must list one name per row");
  for (const json& label : labels) {
    if (!label.is_string()) throw ParseError("labels must be strings");
    out.matrix.labels.push_back(label.get<std::string>());
  }
  return out;
}

std::string decimal_annotation(const Rat& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", to_double(value));
  return buffer;
}

std::string write_bound_report(const BoundReport& report) {
  json doc;
  doc["schema"] = 1;
  doc["kind"] = "bounds";
  doc["n"] = report.n;
  doc["d"] = report.d;
  doc["mu"] = to_string(report.mu);
  doc["mu_decimal"] = decimal_annotation(report.mu);
  doc["mu_cross"] = to_string(report.mu_cross);
  doc["schur_checked"] = report.schur_checked;
  doc["rho0"] = to_string(report.rho0);
  doc["rho1"] = to_string(report.rho1);
  doc["delta"] = report.delta;
  doc["k_dim"] = to_string(report.k_dim);
  doc["scalar_bound"] = to_string(report.scalar_bound);
  doc["scalar_bound_decimal"] = decimal_annotation(report.scalar_bound);
  doc["hunter_bound"] = to_string(report.hunter_bound);
  doc["hunter_bound_decimal"] = decimal_annotation(report.hunter_bound);
  doc["limit_bound"] = to_string(report.limit_bound);
  doc["limit_bound_decimal"] = decimal_annotation(report.limit_bound);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

} // namespace nchs
