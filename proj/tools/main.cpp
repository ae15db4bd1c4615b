#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "leibniz/invariants.hpp"
#include "leibniz/io.hpp"
#include "leibniz/report.hpp"

namespace {

using namespace leibniz;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw leibniz::ParseError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw leibniz::ParseError("cannot write file '" + path + "'");
  out << content;
}

LeibnizAlgebra load_algebra(const std::string& path) {
  return parse_algebra_file(read_file(path));
}

DerivationSet load_dset(const std::string& dfile, const LeibnizAlgebra& a) {
  if (dfile.empty()) return adl_set(a);
  return parse_derivation_file(read_file(dfile), a);
}

int run_validate(const std::string& file) {
  LeibnizAlgebra a = load_algebra(file);
  std::cout << "ok = true\n"
            << "dim = " << a.dim() << "\n"
            << "field = " << render_field_token(a.field()) << "\n"
            << "lie = " << (a.is_lie() ? "true" : "false") << "\n";
  return 0;
}

int run_analyze(const std::string& file) {
  std::cout << render_analysis_kv(analyze(load_algebra(file)));
  return 0;
}

int run_verify(const std::string& file, const std::string& dfile, const std::string& claims,
               std::size_t series_index, const std::string& format) {
  LeibnizAlgebra a = load_algebra(file);
  DerivationSet d = load_dset(dfile, a);
  ReportFormat fmt = parse_report_format(format);

  bool want_a = false, want_b = false, want_cors = false;
  std::istringstream cs(claims);
  std::string tok;
  while (std::getline(cs, tok, ',')) {
    if (tok == "a")
      want_a = true;
    else if (tok == "b")
      want_b = true;
    else if (tok == "corollaries")
      want_cors = true;
    else
      throw leibniz::ParseError("claims must be a comma list of a, b, corollaries; got '" + tok +
                                "'");
  }

  Int k = Int(d.dim()) - Int(ad_left(a).space.dim());
  if (fmt == ReportFormat::kv)
    std::cout << "d.dim = " << d.dim() << "\n"
              << "d.k = " << k.str() << "\n";
  else
    std::cout << "derivation set: dim " << d.dim() << ", k = " << k.str() << "\n";

  std::vector<BoundReport> reports;
  if (want_a) reports.push_back(verify_theorem_a(a, d));
  if (want_b) reports.push_back(verify_theorem_b(a, d));
  if (want_cors)
    for (BoundReport& r : verify_corollaries(a, series_index)) reports.push_back(std::move(r));
  std::cout << render_report(reports, fmt);
  return all_applicable_hold(reports) ? 0 : 1;
}

int run_series(const std::string& file, const std::string& dfile, bool upper) {
  LeibnizAlgebra a = load_algebra(file);
  DerivationSet d = load_dset(dfile, a);
  SeriesResult s = upper ? upper_d_central_series(a, d) : lower_d_central_series(a, d);
  std::cout << "series.flavor = " << (upper ? "upper" : "lower") << "\n"
            << "series.terms = " << s.terms.size() << "\n"
            << "series.stabilized_at = " << s.stabilized_at << "\n";
  if (upper)
    std::cout << "series.zl = " << s.zl() << "\n"
              << "series.hypercenter.dim = " << s.hypercenter().dim() << "\n";
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    const Subspace& term = s.terms[i];
    std::cout << "series.term." << i << ".dim = " << term.dim() << "\n";
    for (std::size_t r = 0; r < term.dim(); ++r) {
      std::cout << "series.term." << i << ".row." << r << " =";
      for (std::size_t c = 0; c < term.ambient(); ++c)
        std::cout << " " << scalar_format(term.basis().at(r, c));
      std::cout << "\n";
    }
  }
  return 0;
}

Family parse_family(const std::string& name) {
  if (name == "abelian") return Family::abelian;
  if (name == "cyclic_leibniz") return Family::cyclic_leibniz;
  if (name == "heisenberg") return Family::heisenberg;
  if (name == "nonabelian2") return Family::nonabelian2;
  throw leibniz::ParseError(
      "family must be abelian, cyclic_leibniz, heisenberg, or nonabelian2; got '" + name + "'");
}

int run_catalog(const std::string& name, std::size_t dim, const std::string& field,
                const std::string& out) {
  LeibnizAlgebra a = [&] {
    try {
      return catalog_make(parse_family(name), dim, parse_field_token(field));
    } catch (const leibniz::ValidationError&) {
      throw;
    } catch (const leibniz::ParseError&) {
      throw;
    } catch (const leibniz::Error& e) {  // bad dim/family combination is a usage error
      throw leibniz::ParseError(e.what());
    }
  }();
  std::string text = render_algebra_file(a);
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return 0;
}

int run_fuzz(std::size_t dim, const std::string& field, std::size_t count, std::uint64_t seed,
             const std::string& strategy) {
  FuzzConfig cfg;
  cfg.dim = dim;
  cfg.field = parse_field_token(field);
  cfg.count = count;
  cfg.seed = seed;
  cfg.strategy = parse_strategy(strategy);
  if (cfg.strategy == FuzzStrategy::graded_reject && !cfg.field.is_prime())
    throw leibniz::ParseError("graded_reject strategy needs a prime field");

  std::cout << "fuzz.dim = " << cfg.dim << "\n"
            << "fuzz.field = " << render_field_token(cfg.field) << "\n"
            << "fuzz.count = " << cfg.count << "\n"
            << "fuzz.seed = " << cfg.seed << "\n"
            << "fuzz.strategy = " << strategy_name(cfg.strategy) << "\n";

  FuzzStream stream = fuzz_generate(cfg);
  Rng vrng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);  // distinct from the generation stream
  std::size_t asymmetric = 0, k_gt_t = 0, bound_checks = 0;
  bool all_ok = true;
  for (std::size_t i = 0; i < stream.algebras.size(); ++i) {
    const LeibnizAlgebra& a = stream.algebras[i];
    InstanceCheck check = verify_instance(a, vrng);
    std::cout << "instance." << i << ".dim = " << a.dim() << "\n"
              << "instance." << i << ".lie = " << (a.is_lie() ? "true" : "false") << "\n"
              << "instance." << i << ".dsets = " << check.dsets << "\n"
              << "instance." << i << ".bound_checks = " << check.bound_checks << "\n"
              << "instance." << i << ".ok = " << (check.ok ? "true" : "false") << "\n";
    for (std::size_t f = 0; f < check.failures.size(); ++f)
      std::cout << "instance." << i << ".failure." << f << " = " << check.failures[f] << "\n";
    all_ok = all_ok && check.ok;
    asymmetric += check.asymmetric_centers ? 1 : 0;
    k_gt_t += check.der_k_gt_t ? 1 : 0;
    bound_checks += check.bound_checks;
  }
  std::cout << "summary.instances = " << stream.algebras.size() << "\n"
            << "summary.attempts = " << stream.attempts << "\n"
            << "summary.rejected = " << stream.rejected << "\n"
            << "summary.asymmetric_centers = " << asymmetric << "\n"
            << "summary.der_k_gt_t = " << k_gt_t << "\n"
            << "summary.bound_checks = " << bound_checks << "\n"
            << "summary.all_ok = " << (all_ok ? "true" : "false") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure, derivations, central series, and dimension bounds of "
               "finite-dimensional left Leibniz algebras over exact fields"};
  app.require_subcommand(1);
  int code = 0;

  auto* validate = app.add_subcommand("validate", "Parse a file and check the bracket identity");
  std::string v_file;
  validate->add_option("file", v_file, "algebra file")->required();
  validate->callback([&] { code = run_validate(v_file); });

  auto* analyze_cmd = app.add_subcommand("analyze", "Centers, derived subalgebra, derivation "
                                                    "spaces, and both central series");
  std::string an_file;
  analyze_cmd->add_option("file", an_file, "algebra file")->required();
  analyze_cmd->callback([&] { code = run_analyze(an_file); });

  auto* verify = app.add_subcommand("verify", "Check the dimension bounds on one algebra");
  std::string ve_file, ve_dfile, ve_claims = "a,b,corollaries", ve_format = "kv";
  std::size_t ve_series_index = 1;
  verify->add_option("file", ve_file, "algebra file")->required();
  verify->add_option("--d", ve_dfile, "derivation file (default: left multiplications)");
  verify->add_option("--claims", ve_claims, "comma list of a, b, corollaries");
  verify->add_option("--series-index", ve_series_index, "series term for the gamma bounds")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", ve_format, "kv or text");
  verify->callback(
      [&] { code = run_verify(ve_file, ve_dfile, ve_claims, ve_series_index, ve_format); });

  auto* series = app.add_subcommand("series", "Print one central series term by term");
  std::string se_file, se_dfile;
  bool se_upper = false, se_lower = false;
  series->add_option("file", se_file, "algebra file")->required();
  series->add_option("--d", se_dfile, "derivation file (default: left multiplications)");
  auto* upper_flag = series->add_flag("--upper", se_upper, "the ascending series");
  series->add_flag("--lower", se_lower, "the descending series")->excludes(upper_flag);
  series->callback([&] {
    if (!se_upper && !se_lower)
      throw CLI::RequiredError("one of --upper/--lower");
    code = run_series(se_file, se_dfile, se_upper);
  });

  auto* catalog = app.add_subcommand("catalog", "Write a catalog algebra as a file");
  std::string ca_name, ca_field = "rational", ca_out;
  std::size_t ca_dim = 0;
  catalog->add_option("name", ca_name, "abelian, cyclic_leibniz, heisenberg, or nonabelian2")
      ->required();
  catalog->add_option("--dim", ca_dim, "dimension")->required();
  catalog->add_option("--field", ca_field, "rational or prime:<p>");
  catalog->add_option("-o,--out", ca_out, "output file (default: stdout)");
  catalog->callback([&] { code = run_catalog(ca_name, ca_dim, ca_field, ca_out); });

  auto* fuzz = app.add_subcommand("fuzz", "Generate random algebras and run the full "
                                          "invariant and bound suite on each");
  std::size_t fu_dim = 3, fu_count = 10;
  std::uint64_t fu_seed = 1;
  std::string fu_field = "rational", fu_strategy = "catalog_conjugate";
  fuzz->add_option("--dim", fu_dim, "dimension")->check(CLI::PositiveNumber);
  fuzz->add_option("--field", fu_field, "rational or prime:<p>");
  fuzz->add_option("--count", fu_count, "instances to generate")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", fu_seed, "stream seed");
  fuzz->add_option("--strategy", fu_strategy, "catalog_conjugate or graded_reject");
  fuzz->callback([&] { code = run_fuzz(fu_dim, fu_field, fu_count, fu_seed, fu_strategy); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int cli_code = app.exit(e);
    return cli_code == 0 ? 0 : 2;
  } catch (const leibniz::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const leibniz::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const leibniz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
