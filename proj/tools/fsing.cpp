#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fsing/curves.hpp"
#include "fsing/frob.hpp"
#include "fsing/harness.hpp"
#include "fsing/mult.hpp"
#include "fsing/parse.hpp"
#include "fsing/plinear.hpp"

using namespace fsing;

namespace {

std::vector<std::string> variables_of(const std::string& text, const std::string& declared) {
  std::vector<std::string> names;
  if (!declared.empty()) {
    std::stringstream ss(declared);
    for (std::string v; std::getline(ss, v, ',');) names.push_back(v);
    return names;
  }
  names = scan_variables(text);
  std::sort(names.begin(), names.end());
  if (names.empty()) names.push_back("x");
  return names;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InvalidArgument("cannot write " + out);
  f << text;
}

std::string fmt_basis(const Fq& K, const std::vector<FqVector>& basis) {
  std::string s = "[";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    s += i ? ", (" : "(";
    for (std::size_t j = 0; j < basis[i].size(); ++j) s += (j ? ", " : "") + K.to_string(basis[i][j]);
    s += ")";
  }
  return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Test ideals, multiplier ideals and Frobenius-semisimplicity scans"};
  app.require_subcommand(1);

  std::string out, f_text, vars, lambda_text = "1", gens_text, ledger_path, curve_text, matrix_file;
  std::string family = "family", results_dir;
  u64 p = 0, pmax = 50;
  unsigned e_budget = 8, e_max = 3, jobs = 1;
  std::string lambda_max = "2";

  auto* ti = app.add_subcommand("testideal", "test ideal of f^lambda over F_p");
  ti->add_option("--p", p, "prime")->required();
  ti->add_option("--lambda", lambda_text, "exponent, e.g. 5/6")->required();
  ti->add_option("--f", f_text, "polynomial")->required();
  ti->add_option("--vars", vars, "comma-separated variable order");
  ti->add_option("--e-budget", e_budget, "largest e tried");
  ti->add_option("--out", out, "output file");

  auto* fp = app.add_subcommand("fpt", "F-pure threshold interval of f");
  fp->add_option("--p", p, "prime")->required();
  fp->add_option("--f", f_text, "polynomial")->required();
  fp->add_option("--vars", vars, "comma-separated variable order");
  fp->add_option("--e-max", e_max, "precision of the nu interval");
  fp->add_option("--e-budget", e_budget, "largest e tried when confirming an exact value");
  fp->add_option("--out", out, "output file");

  auto* mi = app.add_subcommand("multideal", "multiplier ideal in characteristic zero");
  auto* mg = mi->add_option("--monomial-gens", gens_text, "monomial generators, e.g. x^2,y^3");
  auto* ml = mi->add_option("--ledger", ledger_path, "divisor ledger TSV (needs --f)");
  mg->excludes(ml);
  mi->add_option("--f", f_text, "polynomial the ledger resolves");
  mi->add_option("--vars", vars, "comma-separated variable order");
  mi->add_option("--lambda", lambda_text, "exponent")->required();
  mi->add_option("--out", out, "output file");

  auto* cp = app.add_subcommand("compare", "compare test and multiplier ideals over primes");
  auto* cf = cp->add_option("--f", f_text, "principal polynomial");
  auto* cg = cp->add_option("--monomial-gens", gens_text, "monomial ideal generators");
  cf->excludes(cg);
  cp->add_option("--ledger", ledger_path, "divisor ledger for a non-monomial f");
  cp->add_option("--vars", vars, "comma-separated variable order");
  cp->add_option("--pmax", pmax, "prime bound");
  cp->add_option("--lambda-max", lambda_max, "lambda bound (>= 1)");
  cp->add_option("--e-budget", e_budget, "largest e tried");
  cp->add_option("--jobs", jobs, "parallelism width");
  cp->add_option("--family", family, "family name for the results ledger");
  cp->add_option("--results-dir", results_dir, "directory of per-family result files");
  cp->add_option("--out", out, "output file");

  auto* od = app.add_subcommand("ordinarity", "Cartier-Manin scan of y^2 = h(x)");
  od->add_option("--curve", curve_text, "curve, e.g. 'y^2 = x^3 + x'")->required();
  od->add_option("--pmax", pmax, "prime bound");
  od->add_option("--jobs", jobs, "parallelism width");
  od->add_option("--out", out, "output file");

  auto* pl = app.add_subcommand("plinear", "Fitting decomposition of a p-linear map");
  pl->add_option("--matrix-file", matrix_file, "matrix file: 'dim p e' then entries")->required();
  pl->add_option("--out", out, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ti->parsed()) {
      auto names = variables_of(f_text, vars);
      auto ring = make_fp_ring(p, names.size(), names);
      Poly f = parse_poly(f_text, ring);
      Fraction lambda = Fraction::parse(lambda_text);
      auto r = test_ideal(FrobContext(ring), f, lambda, {e_budget});
      std::ostringstream os;
      os << "p\tlambda\tcertified\tstabilized_at_e\tideal\n"
         << p << '\t' << lambda << '\t' << (r.certified ? "yes" : "no") << '\t' << r.stabilized_at_e << '\t'
         << groebner_basis(r.ideal).to_string() << '\n';
      emit(os.str(), out);
    } else if (fp->parsed()) {
      auto names = variables_of(f_text, vars);
      auto ring = make_fp_ring(p, names.size(), names);
      Poly f = parse_poly(f_text, ring);
      FrobContext ctx(ring);
      auto r = fpt_interval(ctx, f, e_max, {e_budget});
      std::ostringstream os;
      os << "p\te\tnu\tlower\tupper\texact\n"
         << p << '\t' << r.e << '\t' << nu_value(ctx, f, e_max) << '\t' << r.lower << '\t' << r.upper << '\t'
         << (r.exact ? r.exact->to_string() : "") << '\n';
      emit(os.str(), out);
    } else if (mi->parsed()) {
      Fraction lambda = Fraction::parse(lambda_text);
      std::ostringstream os;
      os << "lambda\tideal\n";
      if (!gens_text.empty()) {
        auto names = variables_of(gens_text, vars);
        auto a = parse_monomial_gens(gens_text, names);
        os << lambda << '\t' << multiplier_ideal_monomial(newton_polyhedron(a.generators()), lambda).to_string(names)
           << '\n';
      } else if (!ledger_path.empty()) {
        if (f_text.empty()) throw InvalidArgument("--ledger needs --f");
        auto names = variables_of(f_text, vars);
        QPoly f = parse_poly(f_text, names);
        auto L = load_ledger(ledger_path);
        validate_ledger(L, f);
        auto li = ledger_multiplier_ideal(L, lambda);
        os << lambda << '\t';
        if (li.f_power) os << "(" << f.to_string() << ")^" << li.f_power << " * ";
        os << li.monomial.to_string(names) << '\n';
      } else {
        throw InvalidArgument("give --monomial-gens or --ledger");
      }
      emit(os.str(), out);
    } else if (cp->parsed()) {
      ScanConfig cfg;
      cfg.prime_bound = pmax;
      cfg.lambda_bound = Fraction::parse(lambda_max);
      cfg.e_budget = e_budget;
      cfg.jobs = jobs;
      for (char c : family)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'))
          throw InvalidArgument("family names use letters, digits, '_' and '-'");
      std::optional<ComparisonInput> in;
      if (!gens_text.empty()) {
        auto names = variables_of(gens_text, vars);
        in = ComparisonInput::monomial_ideal(family, parse_monomial_gens(gens_text, names), names);
      } else if (!f_text.empty()) {
        auto names = variables_of(f_text, vars);
        std::optional<DivisorLedger> L;
        if (!ledger_path.empty()) L = load_ledger(ledger_path);
        in = ComparisonInput::principal(family, parse_poly(f_text, names), L);
      } else {
        throw InvalidArgument("give --f or --monomial-gens");
      }
      std::optional<std::string> dir;
      if (!results_dir.empty()) dir = results_dir;
      auto scan = conjecture2_scan(*in, cfg, dir);
      emit(format_comparison(scan.records) + scan.density.to_string(), out);
    } else if (od->parsed()) {
      emit(conjecture1_report(parse_curve(curve_text), pmax, jobs), out);
    } else if (pl->parsed()) {
      std::ifstream in(matrix_file);
      if (!in) throw InvalidArgument("cannot read " + matrix_file);
      auto phi = parse_plinear(in);
      const Fq& K = *phi.field();
      auto dec = fitting(phi);
      std::ostringstream os;
      os << "dim\tdim_ss\tdim_nil\tsemisimple\tfixed_dim_fp\tsplitting_degree\tss_basis\tnil_basis\n"
         << phi.dim() << '\t' << dec.dim_ss() << '\t' << dec.dim_nil() << '\t' << (is_semisimple(phi) ? "yes" : "no")
         << '\t' << fixed_point_dimension(phi) << '\t' << fixed_point_field_degree(phi) << '\t'
         << fmt_basis(K, dec.ss_basis) << '\t' << fmt_basis(K, dec.nil_basis) << '\n';
      emit(os.str(), out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
