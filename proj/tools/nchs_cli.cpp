// Command-line front end: exact Gram matrices, hermitian-square certificates,
// sharp constants, counterexample reports, and a seeded sampling harness.
//
// Exit codes: 0 success/valid, 1 mathematically invalid/infeasible, 2
// usage/parse error.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nchs/bounds.hpp"
#include "nchs/certify.hpp"
#include "nchs/combinatorics.hpp"
#include "nchs/gram.hpp"
#include "nchs/numerics.hpp"
#include "nchs/polynomial.hpp"
#include "nchs/serialize.hpp"

namespace {

using namespace nchs;

std::string render_matrix(const RatMatrix& m, std::vector<std::string> row_labels = {}) {
  if (row_labels.empty()) row_labels = m.labels;
  if (static_cast<int>(row_labels.size()) != m.rows())
    row_labels.assign(static_cast<std::size_t>(m.rows()), "");
  std::size_t label_width = 0;
  for (const std::string& label : row_labels) label_width = std::max(label_width, label.size());
  std::vector<std::size_t> widths(static_cast<std::size_t>(m.cols()), 0);
  for (int j = 0; j < m.cols(); ++j) {
    if (j < static_cast<int>(m.labels.size()))
      widths[static_cast<std::size_t>(j)] = m.labels[static_cast<std::size_t>(j)].size();
    for (int i = 0; i < m.rows(); ++i)
      widths[static_cast<std::size_t>(j)] =
          std::max(widths[static_cast<std::size_t>(j)], to_string(m(i, j)).size());
  }
  std::ostringstream out;
  if (!m.labels.empty()) {
    out << std::string(label_width, ' ');
    for (int j = 0; j < m.cols(); ++j)
      out << "  " << std::setw(static_cast<int>(widths[static_cast<std::size_t>(j)]))
          << m.labels[static_cast<std::size_t>(j)];
    out << "\n";
  }
  for (int i = 0; i < m.rows(); ++i) {
    out << std::setw(static_cast<int>(label_width)) << row_labels[static_cast<std::size_t>(i)];
    for (int j = 0; j < m.cols(); ++j)
      out << "  " << std::setw(static_cast<int>(widths[static_cast<std::size_t>(j)]))
          << to_string(m(i, j));
    out << "\n";
  }
  return out.str();
}

std::string render_vector(const std::vector<Rat>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    out << to_string(v[i]);
  }
  out << ")";
  return out.str();
}

void print_witness(const NegativityWitness& witness) {
  std::cout << "not positive semidefinite\n";
  std::cout << "witness v = " << render_vector(witness.vector) << "\n";
  std::cout << "v^T A v = " << to_string(witness.value) << " < 0\n";
}

int cmd_gram(int n, int d, const std::string& which, const std::string& basis,
             const std::string& out_path) {
  RatMatrix m;
  if (which == "nc") {
    m = word_gram_matrix(n, d);
  } else if (which == "c") {
    m = monomial_gram_matrix(n, d);
  } else if (which == "m") {
    m = pure_power_projection(
        n, d, basis == "monomials" ? IndexBasis::kMonomials : IndexBasis::kWords);
  } else {
    m = square_words_matrix(n, d);
  }
  std::cout << "matrix " << which << ", n=" << n << " d=" << d << " (" << m.rows() << " x "
            << m.cols() << ")\n";
  std::cout << render_matrix(m);
  if (!out_path.empty()) {
    MatrixDocument doc;
    doc.n = n;
    doc.d = d;
    doc.which = which;
    doc.matrix = m;
    const std::string text = write_matrix_document(doc);
    write_file(out_path, text);
    // Round-trip guarantee: what we wrote parses back to the same bytes.
    if (write_matrix_document(parse_matrix_document(read_file(out_path))) != text) {
      std::cerr << "internal error: matrix document did not round-trip\n";
      return 1;
    }
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_sohs(int n, int d, const std::string& mu_text, const std::string& out_path) {
  Rat mu(0);
  if (!mu_text.empty()) {
    const std::optional<Rat> parsed = parse_rat(mu_text);
    if (!parsed) {
      std::cerr << "invalid rational: " << mu_text << "\n";
      return 2;
    }
    mu = *parsed;
  }
  const CertifyOutcome outcome = sohs_certificate(n, d, mu);
  if (!outcome.certificate) {
    print_witness(*outcome.witness);
    return 1;
  }
  const SohsCertificate& cert = *outcome.certificate;
  const VerifyOutcome check = verify_certificate(cert);
  if (!check.valid) {
    std::cerr << "internal error: produced certificate failed verification\n";
    return 1;
  }
  std::cout << "terms: " << cert.terms.size() << "\n";
  std::cout << "weights:";
  for (const SohsTerm& term : cert.terms) std::cout << " " << to_string(term.weight);
  std::cout << "\n";
  for (std::size_t i = 0; i < cert.terms.size(); ++i)
    std::cout << "s" << i + 1 << " = " << to_string(cert.terms[i].poly) << "\n";
  std::cout << "verified: target reproduced exactly\n";
  if (!out_path.empty()) {
    const std::string text = write_certificate(cert);
    write_file(out_path, text);
    const std::string reread = read_file(out_path);
    if (write_certificate(parse_certificate(reread)) != text ||
        !verify_certificate(parse_certificate(reread)).valid) {
      std::cerr << "internal error: certificate did not round-trip\n";
      return 1;
    }
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  const SohsCertificate cert = parse_certificate(read_file(path));
  const VerifyOutcome outcome = verify_certificate(cert);
  if (outcome.valid) {
    std::cout << "valid: " << cert.terms.size() << " terms, n=" << cert.n << " d=" << cert.d;
    if (cert.mu != 0) std::cout << " mu=" << to_string(cert.mu);
    std::cout << "\n";
    return 0;
  }
  std::cout << "invalid: " << outcome.reason << "\n";
  std::cout << "residual = " << to_string(outcome.residual) << "\n";
  return 1;
}

int cmd_mu(int n, int d, bool as_json) {
  const BoundReport report = bound_report(n, d);
  if (as_json) {
    std::cout << write_bound_report(report);
    return 0;
  }
  std::cout << "n=" << n << " d=" << d << "\n";
  std::cout << "mu            " << to_string(report.mu) << " ~ " << decimal_annotation(report.mu)
            << "\n";
  if (report.schur_checked)
    std::cout << "cross-check   " << to_string(report.mu_cross)
              << (report.mu_cross == report.mu ? " (elimination route agrees)" : " (DISAGREES)")
              << "\n";
  else
    std::cout << "cross-check   skipped (basis too large)\n";
  std::cout << "rho0          " << to_string(report.rho0) << "\n";
  std::cout << "rho1          " << to_string(report.rho1) << "\n";
  std::cout << "delta         " << report.delta << "\n";
  std::cout << "K             " << to_string(report.k_dim) << "\n";
  std::cout << "scalar bound  " << to_string(report.scalar_bound) << " ~ "
            << decimal_annotation(report.scalar_bound) << "\n";
  std::cout << "hunter bound  " << to_string(report.hunter_bound) << " ~ "
            << decimal_annotation(report.hunter_bound) << "\n";
  std::cout << "limit bound   " << to_string(report.limit_bound) << " ~ "
            << decimal_annotation(report.limit_bound) << "\n";
  return report.mu == report.mu_cross ? 0 : 1;
}

int cmd_counterexamples(const std::string& which, int n, int d, double t, bool t_given) {
  if (which == "noschur") {
    const NoschurReport report = noschur_counterexample();
    std::cout << "lifted square product at the fixed integer pair:\n";
    std::cout << render_matrix(report.value);
    std::cout << "min eigenvalue ~ " << std::setprecision(12) << report.min_eig << "\n";
    std::cout << (report.min_eig < 0 ? "indefinite\n" : "unexpectedly PSD\n");
    return report.min_eig < 0 ? 0 : 1;
  }
  if (which == "nobound") {
    const NoboundCheck check = nobound_residuals(n, d);
    std::cout << "f = " << to_string(check.witness) << "\n";
    std::cout << "gram image " << (check.gram_annihilates ? "= 0" : "!= 0")
              << ", squares image " << (check.squares_annihilates ? "= 0" : "!= 0") << "\n";
    if (!check.squares_annihilates) std::cout << "B f = " << render_vector(check.squares_image) << "\n";
    const bool expected = check.gram_annihilates && !check.squares_annihilates;
    std::cout << (expected ? "f lies in the Gram kernel but not the squares kernel\n"
                           : "unexpected kernel relationship\n");
    return expected ? 0 : 1;
  }
  // exa22: gap table over the defaults or at the given t.
  std::vector<double> grid;
  if (t_given)
    grid.push_back(t);
  else
    grid = {0.2, 0.1, 0.05, 0.025};
  const Rat mu = mu_closed(2, 2);
  std::cout << "t            entry11_gap   predicted     min_eig_gap   max_eig_power\n";
  bool ok = true;
  std::cout << std::scientific << std::setprecision(6);
  for (double value : grid) {
    GapReport report = check_lower_bound(2, 2, exa22_family(value), mu);
    report.t = value;
    const double predicted = to_double(mu) * 25.0 * std::pow(value, 4.0);
    std::cout << std::setw(10) << value << "   " << std::setw(11) << report.entry11_gap << "   "
              << std::setw(11) << predicted << "   " << std::setw(11) << report.min_eig_gap
              << "   " << std::setw(11) << report.max_eig_power << "\n";
    ok = ok && report.min_eig_gap >= -psd_tolerance(report.max_eig_power);
  }
  std::cout << (ok ? "gap stays nonnegative and shrinks with t\n" : "bound violated\n");
  return ok ? 0 : 1;
}

int cmd_cp(int n, int d) {
  const RatMatrix gram = word_gram_matrix(n, d);
  const std::optional<LdlFactorization> witness =
      cp_witness(gram, variable_permutation_orders(n, d));
  if (!witness) {
    std::cout << "no witness found within budget (inconclusive)\n";
    return 1;
  }
  std::cout << "witness found: both factors entrywise nonnegative\n";
  std::cout << "pivots:";
  for (int p : witness->pivots) std::cout << " " << p;
  std::cout << "\nlambda:";
  for (const Rat& l : witness->lambda) std::cout << " " << to_string(l);
  std::vector<std::string> row_names;
  for (int i = 0; i < witness->s.rows(); ++i) row_names.push_back("s" + std::to_string(i + 1));
  std::cout << "\nS =\n" << render_matrix(witness->s, row_names);
  return 0;
}

int cmd_eval(int n, int d, int k, std::uint64_t seed, int samples, const std::string& mu_text,
             double tol, const std::string& out_path) {
  Rat mu = mu_closed(n, d);
  if (!mu_text.empty()) {
    const std::optional<Rat> parsed = parse_rat(mu_text);
    if (!parsed) {
      std::cerr << "invalid rational: " << mu_text << "\n";
      return 2;
    }
    mu = *parsed;
  }
  std::cout << "n=" << n << " d=" << d << " k=" << k << " mu=" << to_string(mu)
            << " samples=" << samples << " first seed=" << seed << "\n";
  std::cout << "seed        min_eig_gap    max_eig_power  entry11_gap    ker(gap)  ker(common)  pass\n";
  nlohmann::json rows = nlohmann::json::array();
  int failures = 0;
  std::cout << std::scientific << std::setprecision(6);
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t current = seed + static_cast<std::uint64_t>(i);
    const MatTupleD xs = random_sym_tuple(n, k, current);
    GapReport report = check_lower_bound(n, d, xs, mu);
    report.seed = current;
    const KernelProbe probe = kernel_probe(n, d, xs, 1e-6);
    const double threshold = tol > 0 ? tol : psd_tolerance(report.max_eig_power);
    const bool pass = report.min_eig_gap >= -threshold;
    if (!pass) ++failures;
    std::cout << std::setw(6) << current << "   " << std::setw(13) << report.min_eig_gap << "  "
              << std::setw(13) << report.max_eig_power << "  " << std::setw(13)
              << report.entry11_gap << "  " << std::setw(7) << probe.gap_kernel_dim << "   "
              << std::setw(9) << probe.common_kernel_dim << "   " << (pass ? "yes" : "NO")
              << "\n";
    rows.push_back({{"seed", current},
                    {"min_eig_gap", report.min_eig_gap},
                    {"max_eig_power", report.max_eig_power},
                    {"entry11_gap", report.entry11_gap},
                    {"gap_kernel_dim", probe.gap_kernel_dim},
                    {"common_kernel_dim", probe.common_kernel_dim},
                    {"pass", pass}});
  }
  if (failures == 0)
    std::cout << "all " << samples << " samples satisfy the bound\n";
  else
    std::cout << failures << " of " << samples << " samples violate the bound\n";
  if (!out_path.empty()) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["kind"] = "gaps";
    doc["n"] = n;
    doc["d"] = d;
    doc["k"] = k;
    doc["mu"] = to_string(mu);
    doc["samples"] = samples;
    doc["first_seed"] = seed;
    doc["rows"] = rows;
    write_file(out_path, doc.dump(2) + "\n");
    std::cout << "wrote " << out_path << "\n";
  }
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates and sharp constants for symmetrized power sums"};
  app.require_subcommand(1);
  // let the global --cap appear after a subcommand too
  app.fallthrough();

  std::size_t cap = 0;
  app.add_option("--cap", cap, "dimension cap for enumerated bases (overrides NCHS_CAP)");

  int n = 2, d = 2, k = 3, samples = 20;
  std::uint64_t seed = 1;
  double t = 0.1, tol = 0.0;
  bool as_json = false;
  std::string which, basis = "words", mu_text, out_path, cert_path;

  CLI::App* gram = app.add_subcommand("gram", "print an exact structured matrix");
  gram->add_option("--n", n, "number of variables")->required();
  gram->add_option("--d", d, "word degree")->required();
  gram->add_option("--which", which, "nc | c | m | b")
      ->required()
      ->check(CLI::IsMember({"nc", "c", "m", "b"}));
  gram->add_option("--basis", basis, "index basis for m: words | monomials")
      ->check(CLI::IsMember({"words", "monomials"}));
  gram->add_option("--out", out_path, "write the matrix document here");

  CLI::App* sohs = app.add_subcommand("sohs", "produce a hermitian-square certificate");
  sohs->add_option("--n", n, "number of variables")->required();
  sohs->add_option("--d", d, "half degree of the target")->required();
  sohs->add_option("--mu", mu_text, "shave mu times the pure powers (rational p/q)");
  sohs->add_option("--out", out_path, "write the certificate document here");

  CLI::App* verify = app.add_subcommand("verify", "check a certificate document");
  verify->add_option("path", cert_path, "certificate file")->required();

  CLI::App* mu_cmd = app.add_subcommand("mu", "sharp constant and derived bounds");
  mu_cmd->add_option("--n", n, "number of variables")->required();
  mu_cmd->add_option("--d", d, "half degree")->required();
  mu_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* cx = app.add_subcommand("counterexamples", "explicit failure families");
  cx->add_option("--which", which, "noschur | nobound | exa22")
      ->required()
      ->check(CLI::IsMember({"noschur", "nobound", "exa22"}));
  cx->add_option("--n", n, "number of variables (nobound)");
  CLI::Option* cx_d = cx->add_option("--d", d, "degree (nobound)");
  CLI::Option* cx_t = cx->add_option("--t", t, "family parameter (exa22)");

  CLI::App* cp = app.add_subcommand("cp", "search for an entrywise nonnegative factorization");
  cp->add_option("--n", n, "number of variables")->required();
  cp->add_option("--d", d, "word degree")->required();

  CLI::App* eval = app.add_subcommand("eval", "seeded random sampling of the bound");
  eval->add_option("--n", n, "number of variables")->required();
  eval->add_option("--d", d, "half degree")->required();
  eval->add_option("--k", k, "matrix size")->required();
  eval->add_option("--seed", seed, "first seed");
  eval->add_option("--samples", samples, "number of consecutive seeds");
  eval->add_option("--mu", mu_text, "constant to test (default: the sharp one)");
  eval->add_option("--tol", tol, "absolute eigenvalue tolerance (default: relative)");
  eval->add_option("--out", out_path, "write the gap rows here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (const char* env_cap = std::getenv("NCHS_CAP"); env_cap != nullptr && cap == 0) {
      char* end = nullptr;
      const unsigned long long value = std::strtoull(env_cap, &end, 10);
      if (end == env_cap || *end != '\0' || value == 0) {
        std::cerr << "invalid NCHS_CAP value: " << env_cap << "\n";
        return 2;
      }
      cap = static_cast<std::size_t>(value);
    }
    if (cap != 0) set_dimension_cap(cap);

    if (app.got_subcommand(gram)) return cmd_gram(n, d, which, basis, out_path);
    if (app.got_subcommand(sohs)) return cmd_sohs(n, d, mu_text, out_path);
    if (app.got_subcommand(verify)) return cmd_verify(cert_path);
    if (app.got_subcommand(mu_cmd)) return cmd_mu(n, d, as_json);
    if (app.got_subcommand(cx)) {
      if (which == "nobound" && cx_d->count() == 0) d = 3;
      return cmd_counterexamples(which, n, d, t, cx_t->count() > 0);
    }
    if (app.got_subcommand(cp)) return cmd_cp(n, d);
    if (app.got_subcommand(eval))
      return cmd_eval(n, d, k, seed, samples, mu_text, tol, out_path);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const ParseError& error) {
    std::cerr << "parse error: " << error.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& error) {
    std::cerr << "invalid arguments: " << error.what() << "\n";
    return 2;
  } catch (const std::out_of_range& error) {
    std::cerr << "invalid arguments: " << error.what() << "\n";
    return 2;
  } catch (const std::length_error& error) {
    std::cerr << "size limit: " << error.what() << "\n";
    return 2;
  } catch (const std::domain_error& error) {
    std::cerr << "invalid arguments: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
}
