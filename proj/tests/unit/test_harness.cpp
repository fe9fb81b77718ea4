#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fsing/harness.hpp"
#include "fsing/parse.hpp"

using namespace fsing;
namespace fs = std::filesystem;

namespace {

Fraction F(long long n, long long d = 1) { return Fraction(n, d); }

ComparisonInput cusp() {
  return ComparisonInput::principal("cusp", parse_poly("x^2 + y^3", {"x", "y"}),
                                    load_ledger(FSING_FIXTURES "/cusp.ledger"));
}

ComparisonInput max_ideal() {
  return ComparisonInput::monomial_ideal("m2", parse_monomial_gens("x,y", {"x", "y"}), {"x", "y"});
}

ScanConfig config(u64 bound, const Fraction& lambda_bound = F(2), unsigned jobs = 1) {
  ScanConfig c;
  c.prime_bound = bound;
  c.lambda_bound = lambda_bound;
  c.jobs = jobs;
  return c;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("fsing_harness_" + std::to_string(fnv1a64(std::to_string(reinterpret_cast<std::uintptr_t>(this)))));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("compare_at_prime examples") {
  auto m = compare_at_prime(max_ideal(), 5, config(50));
  CHECK(m.verdict == Verdict::all_equal);
  REQUIRE(m.first_jump);
  CHECK(*m.first_jump == F(2));

  auto c7 = compare_at_prime(cusp(), 7, config(50, F(1)));
  CHECK(c7.verdict == Verdict::all_equal);
  CHECK(*c7.first_jump == F(5, 6));

  auto c5 = compare_at_prime(cusp(), 5, config(50));
  CHECK(c5.verdict == Verdict::first_mismatch);
  REQUIRE(c5.lambda);
  CHECK(*c5.lambda < F(5, 6));
  CHECK(F(4, 5) <= *c5.lambda);
  CHECK(c5.tau_gens == "(x, y)");
  CHECK(c5.j_gens == "(1)");
  REQUIRE(c5.tau_jump);
  CHECK(*c5.tau_jump == F(4, 5));
  CHECK(c5.tau_jump_exact);
}

TEST_CASE("smooth and monomial inputs agree everywhere") {
  auto x = ComparisonInput::principal("x", parse_poly("x", {"x"}), load_ledger(FSING_FIXTURES "/x.ledger"));
  auto bare = ComparisonInput::principal("x", parse_poly("x", {"x"}));
  CHECK(bare.is_monomial());
  for (u64 p : {2, 3, 5, 7, 11}) {
    CHECK(compare_at_prime(x, p, config(50)).verdict == Verdict::all_equal);
    CHECK(compare_at_prime(bare, p, config(50)).verdict == Verdict::all_equal);
    CHECK(compare_at_prime(max_ideal(), p, config(50)).verdict == Verdict::all_equal);
  }
  auto scaled = ComparisonInput::principal("x3", parse_poly("3*x^2*y", {"x", "y"}));
  auto r3 = compare_at_prime(scaled, 3, config(50));
  CHECK(r3.verdict == Verdict::bad_prime);
  CHECK_FALSE(r3.reason.empty());
  CHECK(compare_at_prime(scaled, 5, config(50)).verdict == Verdict::all_equal);
}

TEST_CASE("comparison points") {
  auto pts = comparison_points({F(1, 2), F(1)}, F(1), 3);
  // gap 1/2, delta = 1/12
  CHECK(pts == std::vector<Fraction>{F(1, 4), F(5, 12), F(1, 2), F(3, 4), F(11, 12), F(1)});
  CHECK(comparison_points({}, F(2), 5) == std::vector<Fraction>{F(1), F(2)});
  auto tail = comparison_points({F(1, 3)}, F(1), 2);
  CHECK(tail.back() == F(1));
  CHECK(std::find(tail.begin(), tail.end(), F(2, 3)) != tail.end());
  ScanConfig tight = config(10);
  tight.denominator_cap = 5;
  CHECK_THROWS_AS(input_candidates(cusp(), tight), InvalidArgument);
}

TEST_CASE("records round-trip through rows") {
  auto r = compare_at_prime(cusp(), 5, config(50));
  CHECK(ComparisonRecord::from_row(r.row()) == r);
  auto a = compare_at_prime(cusp(), 7, config(50));
  CHECK(ComparisonRecord::from_row(a.row()) == a);
  CHECK(a.row().rfind("cusp\t7\tall-equal\tinput=", 0) == 0);
  CHECK(parse_verdict("uncertified") == Verdict::uncertified);
  CHECK_THROWS(parse_verdict("maybe"));
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("uncertified points are reported, not hidden") {
  ScanConfig c = config(50);
  c.e_budget = 1;
  auto r = compare_at_prime(cusp(), 7, c);
  CHECK(r.verdict == Verdict::uncertified);
  CHECK(r.lambda.has_value());
}

TEST_CASE("cusp scan pattern") {
  auto scan = conjecture2_scan(cusp(), config(50, F(2), 4));
  std::vector<u64> equal;
  for (const auto& r : scan.records) {
    if (r.verdict == Verdict::all_equal) equal.push_back(r.p);
    if (r.p % 6 == 5) {
      REQUIRE(r.tau_jump);
      CHECK(*r.tau_jump == F(5, 6) - F(1, static_cast<long long>(6 * r.p)));
    }
  }
  CHECK(equal == std::vector<u64>{7, 13, 19, 31, 37, 43});
  CHECK(scan.density.all_equal == 6);
  CHECK(scan.density.to_string().find("# mod 6: 1=6/6") != std::string::npos);
}

TEST_CASE("verdicts on [0, 1] predict those on [0, 2]") {
  std::vector<ComparisonInput> inputs = {cusp(),
                                         ComparisonInput::principal("x3y3", parse_poly("x^3 + y^3", {"x", "y"}),
                                                                    load_ledger(FSING_FIXTURES "/x3_plus_y3.ledger")),
                                         ComparisonInput::monomial_ideal(
                                             "x2y3", parse_monomial_gens("x^2,y^3", {"x", "y"}), {"x", "y"})};
  for (const auto& in : inputs) {
    for (u64 p : {2, 3, 5, 7, 11, 13}) {
      auto one = compare_at_prime(in, p, config(50, F(1)));
      auto two = compare_at_prime(in, p, config(50, F(2)));
      CHECK_MESSAGE(one.verdict == two.verdict, in.family() << " p = " << p);
      if (one.verdict == Verdict::first_mismatch) CHECK(*one.lambda == *two.lambda);
    }
  }
}

TEST_CASE("scans are deterministic and the cache is coherent") {
  auto in = cusp();
  auto base = config(23, F(2), 1);
  auto wide = config(23, F(2), 8);
  auto a = conjecture2_scan(in, base), b = conjecture2_scan(in, wide);
  CHECK(format_comparison(a.records) == format_comparison(b.records));
  CHECK(a.density.to_string() == b.density.to_string());

  TempDir dir;
  auto first = conjecture2_scan(in, config(13), dir.path.string());
  CHECK(first.reused == 0);
  auto again = conjecture2_scan(in, config(23), dir.path.string());
  CHECK(again.reused == first.records.size());
  CHECK(format_comparison(again.records) == format_comparison(a.records));

  // a different budget changes the config hash, so nothing is reused
  auto other = config(13);
  other.e_budget = 9;
  CHECK(conjecture2_scan(in, other, dir.path.string()).reused == 0);

  // so does a different input under the same family name
  auto x3 = ComparisonInput::principal("cusp", parse_poly("x^3 + y^3", {"x", "y"}),
                                       load_ledger(FSING_FIXTURES "/x3_plus_y3.ledger"));
  CHECK(conjecture2_scan(x3, config(13), dir.path.string()).reused == 0);

  std::ifstream file(dir.path / "cusp.tsv");
  REQUIRE(file);
  std::string header;
  std::getline(file, header);
  CHECK(header == "family\tp\tverdict\tdetail");
}

TEST_CASE("conjecture1_report") {
  auto text = conjecture1_report(parse_curve("y^2 = x^3 + x"), 30, 2);
  CHECK(text.rfind("p\tstatus\tdet\n2\tbad-prime\t\n3\tnon-semisimple\t0\n", 0) == 0);
  CHECK(text.find("# semisimple=4 non-semisimple=5 bad=1") != std::string::npos);
}
