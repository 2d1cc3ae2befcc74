#include <CLI11.hpp>
#include <cctype>
#include <iostream>
#include <json.hpp>
#include <string>

#include "qhaar/haar.hpp"
#include "qhaar/table_io.hpp"
#include "qhaar/verify.hpp"

namespace {

using namespace qhaar;
using ordered_json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kInternal = 3 };

std::string render_value(const QRational& v, const std::string& format) {
  if (format == "json") return qrational_to_json(v);
  if (format == "latex") return v.to_latex();
  return v.to_string();
}

void print_entries(const std::map<StdExponents, QRational>& values, const std::string& format,
                   int order) {
  if (format == "json") {
    ordered_json j;
    j["order"] = order;
    ordered_json vals = ordered_json::object();
    for (const auto& [e, v] : values) vals[e.key()] = ordered_json::parse(qrational_to_json(v));
    j["values"] = std::move(vals);
    j["format_version"] = 1;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [e, v] : values) {
    if (format == "latex")
      std::cout << "h(" << std_word(e).to_string() << ") &= " << v.to_latex() << " \\\\\n";
    else
      std::cout << e.key() << "\t" << std_word(e).to_string() << "\t" << v.to_string() << "\n";
  }
}

void print_report(const verify::Report& report) {
  int passed = 0;
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
    if (c.passed) ++passed;
  }
  std::cout << passed << "/" << report.checks.size() << " checks passed\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Haar states of monomials on the quantized coordinate ring of SL_q(3)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string cache_dir = ".qhaar";
  int max_order = 4;
  bool no_cache = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->envname("QHAAR_FORMAT");
  app.add_option("--cache-dir", cache_dir, "Directory for table cache files")
      ->envname("QHAAR_CACHE_DIR");
  app.add_option("--max-order", max_order, "Largest table order this process may compute")
      ->check(CLI::PositiveNumber)
      ->envname("QHAAR_MAX_ORDER");
  app.add_flag("--no-cache", no_cache, "Do not read or write table cache files")
      ->envname("QHAAR_NO_CACHE");

  auto* cmd_table = app.add_subcommand("table", "Print the Haar table of one order");
  int table_order = 0;
  std::string method = "solver";
  cmd_table->add_option("order", table_order, "Table order m")->required();
  cmd_table->add_option("--method", method, "How to compute the table")
      ->check(CLI::IsMember({"solver", "algorithm", "closed"}));

  auto* cmd_haar = app.add_subcommand("haar", "Haar state of a monomial");
  std::string haar_text;
  cmd_haar->add_option("monomial", haar_text, "Letters (cegafh) or index tokens (x13 x21 x32)")
      ->required();

  auto* cmd_reduce = app.add_subcommand("reduce", "Decompose a balanced monomial over the basis");
  std::string reduce_text;
  cmd_reduce->add_option("monomial", reduce_text)->required();

  auto* cmd_basis = app.add_subcommand("basis", "List the standard-monomial basis of one order");
  int basis_order = 0;
  cmd_basis->add_option("order", basis_order)->required();

  auto* cmd_relation = app.add_subcommand("relation", "Derive one linear relation");
  std::string eq_key, cmp_key;
  cmd_relation->add_option("--eq", eq_key, "Equation basis, key c1.c2.c3.c4.c5.c6")->required();
  cmd_relation->add_option("--cmp", cmp_key, "Comparing basis, key c1.c2.c3.c4.c5.c6")
      ->required();

  auto* cmd_limit = app.add_subcommand("limit", "Haar state at q = 1 of a linear combination");
  std::string limit_text;
  cmd_limit->add_option("expr", limit_text, "e.g. \"aeekak - q*aefhak + q^2*aefhcg\"")
      ->required();

  auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  cmd_verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"tables", "appendixC", "symmetry", "weingarten", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  HaarContext cx(HaarContext::Options{max_order, cache_dir, !no_cache});

  if (*cmd_table) {
    if (table_order < 1 || table_order > max_order)
      throw std::domain_error("table: order must be between 1 and " + std::to_string(max_order));
    if (method == "closed") {
      // Only the families with closed forms: everything built from
      // low-complexity segments plus the source-system monomials.
      std::map<StdExponents, QRational> values;
      for (const auto& [e, v] : cx.source_matrix_solution(table_order)) values[e] = v;
      for (const auto& [rs, v] : cx.rec_cdh_bfg_ceg(table_order)) {
        const auto [r, s] = rs;
        values[StdExponents{{0, 0, 0, s, r, table_order - r - s}}] = v;
      }
      print_entries(values, format, table_order);
      return kOk;
    }
    const HaarTable& table =
        method == "solver" ? cx.solve_order(table_order) : cx.full_algorithm(table_order);
    if (no_cache) {
      // A fresh computation cross-checks any cache file left on disk.
      std::string path = cache_dir + "/haar_order_" + std::to_string(table_order) + ".json";
      if (auto cached = try_load_table_file(path, table_order)) {
        if (cached->values != table.values)
          throw inconsistency_error("table cache " + path + " disagrees with the recomputation");
      }
    }
    if (format == "json")
      std::cout << table_to_json(table);
    else
      print_entries(table.values, format, table.order);
    return kOk;
  }

  if (*cmd_haar) {
    std::cout << render_value(cx.haar(Word::parse(haar_text)), format) << "\n";
    return kOk;
  }

  if (*cmd_reduce) {
    const Decomp& d = cx.reducer().reduce(Word::parse(reduce_text));
    if (format == "json") {
      ordered_json j;
      j["monomial"] = reduce_text;
      ordered_json terms = ordered_json::object();
      for (const auto& [e, c] : d) terms[e.key()] = ordered_json::parse(qrational_to_json(c));
      j["terms"] = std::move(terms);
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& [e, c] : d) {
        if (format == "latex")
          std::cout << std_word(e).to_string() << " &: " << c.to_latex() << " \\\\\n";
        else
          std::cout << e.key() << "\t" << std_word(e).to_string() << "\t" << c.to_string()
                    << "\n";
      }
    }
    return kOk;
  }

  if (*cmd_basis) {
    if (basis_order < 0) throw std::domain_error("basis: order must be non-negative");
    auto basis = enumerate_basis(basis_order);
    if (format == "json") {
      ordered_json j = ordered_json::array();
      for (const auto& e : basis) j.push_back(e.key());
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& e : basis)
        std::cout << e.key() << "\t" << std_word(e).to_string() << "\n";
    }
    return kOk;
  }

  if (*cmd_relation) {
    StdExponents eq = StdExponents::parse_key(eq_key);
    StdExponents cmp = StdExponents::parse_key(cmp_key);
    LinearRelation rel = cx.derive_linear_relation(eq, cmp);
    if (format == "json") {
      ordered_json j;
      j["equation_basis"] = eq.key();
      j["comparing_basis"] = cmp.key();
      ordered_json coeffs = ordered_json::object();
      for (const auto& [e, c] : rel.coefficients)
        coeffs[e.key()] = ordered_json::parse(qrational_to_json(c));
      j["coefficients"] = std::move(coeffs);
      j["rhs_basis"] = rel.rhs_basis.key();
      j["rhs_coeff"] = ordered_json::parse(qrational_to_json(rel.rhs_coeff));
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& [e, c] : rel.coefficients)
        std::cout << e.key() << "\t" << std_word(e).to_string() << "\t" << c.to_string() << "\n";
      std::cout << "rhs\t" << std_word(rel.rhs_basis).to_string() << "\t"
                << rel.rhs_coeff.to_string() << "\n";
    }
    return kOk;
  }

  if (*cmd_limit) {
    NCPoly p = parse_combination(limit_text);
    std::cout << cx.weingarten_limit(p).get_str() << "\n";
    return kOk;
  }

  if (*cmd_verify) {
    verify::Report report;
    if (suite == "tables") {
      report = verify::verify_tables(cx);
    } else if (suite == "appendixC") {
      report = verify::verify_appendix_identities(cx);
    } else if (suite == "symmetry") {
      report = verify::verify_symmetry(cx);
    } else if (suite == "weingarten") {
      report = verify::verify_weingarten(cx);
    } else {
      report = verify::verify_all(cx);
    }
    print_report(report);
    return report.all_passed() ? kOk : kVerificationFailed;
  }

  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const inconsistency_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInternal;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
