#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsing/curves.hpp"
#include "fsing/mult.hpp"

namespace fsing {

struct ScanConfig {
  u64 prime_bound = 50;
  Fraction lambda_bound = Fraction(2);
  unsigned e_budget = 8;
  i64 denominator_cap = 60;
  unsigned jobs = 1;

  void check() const;
  // Fields that affect a single record; prime_bound and jobs are left out.
  std::string canonical() const;
};

// A char-0 input: a monomial ideal, or a principal f with its multiplier
// data given by a ledger.  A monomial f with no ledger is treated as the
// principal monomial ideal it generates.
class ComparisonInput {
 public:
  static ComparisonInput monomial_ideal(std::string family, MonomialIdeal a, std::vector<std::string> names);
  // Validates the ledger against f.
  static ComparisonInput principal(std::string family, QPoly f, std::optional<DivisorLedger> ledger = {});

  const std::string& family() const { return family_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t arity() const { return names_.size(); }
  bool is_monomial() const { return monomial_.has_value(); }
  const MonomialIdeal& monomial() const { return *monomial_; }
  const QPoly& f() const { return *f_; }
  const DivisorLedger& ledger() const { return *ledger_; }
  // Nonzero rational scalar of a principal monomial input; primes dividing it are bad.
  const Fraction& unit() const { return unit_; }
  std::string canonical() const;

 private:
  ComparisonInput() = default;
  std::string family_;
  std::vector<std::string> names_;
  std::optional<MonomialIdeal> monomial_;
  std::optional<QPoly> f_;
  std::optional<DivisorLedger> ledger_;
  Fraction unit_ = Fraction(1);
};

enum class Verdict { all_equal, first_mismatch, bad_prime, uncertified };
std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view s);

struct ComparisonRecord {
  std::string family;
  u64 p = 0;
  Verdict verdict = Verdict::bad_prime;
  u64 input_hash = 0;
  u64 cfg_hash = 0;
  std::size_t points_examined = 0;
  std::optional<Fraction> lambda;  // mismatch or uncertified point
  std::string tau_gens;
  std::string j_gens;
  std::optional<Fraction> tau_jump;  // located jump of the test ideal
  bool tau_jump_exact = false;
  // all-equal only: first point at which both ideals are proper
  std::optional<Fraction> first_jump;
  std::string reason;  // bad-prime explanation

  // "input=<hex>;cfg=<hex>;..." in a fixed key order.
  std::string detail() const;
  std::string row() const;  // family  p  verdict  detail
  static ComparisonRecord from_row(const std::string& line);
  bool operator==(const ComparisonRecord&) const = default;
};

u64 fnv1a64(std::string_view s);

// Candidate jumping numbers up to the lambda bound, the midpoints between
// consecutive candidates (and below the first), and c - delta for each
// candidate with delta = (smallest gap) / (2p).
std::vector<Fraction> comparison_points(const std::vector<Fraction>& candidates, const Fraction& bound, u64 p);

std::vector<Fraction> input_candidates(const ComparisonInput& in, const ScanConfig& cfg);

// Compares the test ideal at p with the reduced multiplier ideal at every
// comparison point, stopping at the first disagreement.  Throws
// InvariantBreach if the test ideal is ever not contained in the multiplier
// ideal.
ComparisonRecord compare_at_prime(const ComparisonInput& in, u64 p, const ScanConfig& cfg);

struct DensityReport {
  std::size_t all_equal = 0, first_mismatch = 0, bad_prime = 0, uncertified = 0;
  // residues[m - 2][r] = {all-equal count, non-bad count} for primes = r mod m
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> residues;
  std::string to_string() const;  // "# ..." lines
};

DensityReport density_report(const std::vector<ComparisonRecord>& records);

struct Conjecture2Scan {
  std::vector<ComparisonRecord> records;  // ascending p
  DensityReport density;
  std::size_t reused = 0;  // records taken from the results file
};

// Every prime <= cfg.prime_bound.  With a results directory, records whose
// (p, input hash, config hash) match a line of <dir>/<family>.tsv are reused
// and new ones are appended in ascending order.
Conjecture2Scan conjecture2_scan(const ComparisonInput& in, const ScanConfig& cfg,
                                 const std::optional<std::string>& results_dir = {});

// "family  p  verdict  detail" header plus one row per record.
std::string format_comparison(const std::vector<ComparisonRecord>& records);

// Ordinarity scan with its summary line.
std::string conjecture1_report(const HyperellipticCurve& C, u64 bound, unsigned jobs);

}  // namespace fsing
