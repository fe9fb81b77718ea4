#include "fsing/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "fsing/parallel.hpp"

namespace fsing {

void ScanConfig::check() const {
  if (prime_bound < 2) throw InvalidArgument("prime bound must be at least 2");
  if (lambda_bound < Fraction(1)) throw InvalidArgument("lambda bound must be at least 1");
  if (e_budget == 0) throw InvalidArgument("e budget must be positive");
  if (denominator_cap <= 0) throw InvalidArgument("denominator cap must be positive");
  if (jobs == 0) throw InvalidArgument("parallelism width must be positive");
}

std::string ScanConfig::canonical() const {
  return "lambda_bound=" + lambda_bound.to_string() + ";e_budget=" + std::to_string(e_budget) +
         ";den_cap=" + std::to_string(denominator_cap);
}

// ---------------------------------------------------------------------------
// Inputs

ComparisonInput ComparisonInput::monomial_ideal(std::string family, MonomialIdeal a, std::vector<std::string> names) {
  if (a.arity() != names.size()) throw ArityMismatch("monomial ideal arity does not match the variable names");
  if (a.is_zero()) throw InvalidArgument("zero monomial ideal");
  ComparisonInput in;
  in.family_ = std::move(family);
  in.names_ = std::move(names);
  in.monomial_ = std::move(a);
  return in;
}

ComparisonInput ComparisonInput::principal(std::string family, QPoly f, std::optional<DivisorLedger> ledger) {
  if (f.is_zero()) throw InvalidArgument("zero polynomial");
  ComparisonInput in;
  in.family_ = std::move(family);
  in.names_ = f.ring()->names();
  if (!ledger) {
    if (!f.is_monomial())
      throw InvalidArgument("a non-monomial polynomial needs a divisor ledger for its multiplier ideals");
    in.monomial_ = MonomialIdeal(f.arity(), {f.terms()[0].exp});
    in.unit_ = f.terms()[0].coeff;
    in.f_ = std::move(f);
    return in;
  }
  validate_ledger(*ledger, f);
  in.f_ = std::move(f);
  in.ledger_ = std::move(ledger);
  return in;
}

std::string ComparisonInput::canonical() const {
  std::ostringstream os;
  os << "names=";
  for (std::size_t i = 0; i < names_.size(); ++i) os << (i ? "," : "") << names_[i];
  if (f_) os << ";f=" << f_->to_string();
  if (monomial_) os << ";monomial=" << monomial_->to_string(names_);
  if (ledger_) {
    const auto& L = *ledger_;
    os << ";ledger=";
    for (std::size_t i = 0; i < L.size(); ++i) {
      os << L.labels[i] << ':' << L.a[i] << ':' << L.b[i] << ':';
      const auto& v = L.valuations[i];
      if (v.kind == LedgerValuation::Kind::strict) os << 'f';
      for (std::size_t j = 0; j < v.weights.size(); ++j) os << (j ? "," : "") << v.weights[j];
      os << '|';
    }
    os << "bad=";
    for (auto b : L.bad_primes) os << b << ',';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Records

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::all_equal: return "all-equal";
    case Verdict::first_mismatch: return "first-mismatch";
    case Verdict::bad_prime: return "bad-prime";
    case Verdict::uncertified: return "uncertified";
  }
  return "?";
}

Verdict parse_verdict(std::string_view s) {
  for (auto v : {Verdict::all_equal, Verdict::first_mismatch, Verdict::bad_prime, Verdict::uncertified})
    if (to_string(v) == s) return v;
  throw ParseError("unknown verdict '" + std::string(s) + "'", 0);
}

u64 fnv1a64(std::string_view s) {
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex64(u64 v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string sanitize(std::string s) {
  for (auto& c : s)
    if (c == ';' || c == '\t' || c == '\n' || c == '=') c = ' ';
  return s;
}

}  // namespace

std::string ComparisonRecord::detail() const {
  std::string d = "input=" + hex64(input_hash) + ";cfg=" + hex64(cfg_hash) + ";points=" + std::to_string(points_examined);
  if (lambda) d += ";lambda=" + lambda->to_string();
  if (!tau_gens.empty()) d += ";tau=" + tau_gens;
  if (!j_gens.empty()) d += ";J=" + j_gens;
  if (tau_jump) d += std::string(tau_jump_exact ? ";tau_jump=" : ";tau_jump_le=") + tau_jump->to_string();
  if (first_jump) d += ";first_jump=" + first_jump->to_string();
  if (!reason.empty()) d += ";reason=" + sanitize(reason);
  return d;
}

std::string ComparisonRecord::row() const {
  return family + '\t' + std::to_string(p) + '\t' + std::string(to_string(verdict)) + '\t' + detail();
}

ComparisonRecord ComparisonRecord::from_row(const std::string& line) {
  std::vector<std::string> cols;
  std::stringstream ss(line);
  for (std::string c; std::getline(ss, c, '\t');) cols.push_back(c);
  if (cols.size() != 4) throw ParseError("expected 4 columns", 0);
  ComparisonRecord r;
  r.family = cols[0];
  try {
    r.p = std::stoull(cols[1]);
  } catch (const std::exception&) {
    throw ParseError("bad prime column '" + cols[1] + "'", 0);
  }
  r.verdict = parse_verdict(cols[2]);
  std::stringstream ds(cols[3]);
  for (std::string kv; std::getline(ds, kv, ';');) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("bad detail field '" + kv + "'", 0);
    std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
    if (k == "input") r.input_hash = std::stoull(v, nullptr, 16);
    else if (k == "cfg") r.cfg_hash = std::stoull(v, nullptr, 16);
    else if (k == "points") r.points_examined = std::stoull(v);
    else if (k == "lambda") r.lambda = Fraction::parse(v);
    else if (k == "tau") r.tau_gens = v;
    else if (k == "J") r.j_gens = v;
    else if (k == "tau_jump") r.tau_jump = Fraction::parse(v), r.tau_jump_exact = true;
    else if (k == "tau_jump_le") r.tau_jump = Fraction::parse(v), r.tau_jump_exact = false;
    else if (k == "first_jump") r.first_jump = Fraction::parse(v);
    else if (k == "reason") r.reason = v;
    else throw ParseError("unknown detail key '" + k + "'", 0);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Test points

std::vector<Fraction> comparison_points(const std::vector<Fraction>& candidates, const Fraction& bound, u64 p) {
  std::set<Fraction> cands;
  for (const auto& c : candidates)
    if (c.sign() > 0 && c <= bound) cands.insert(c);
  std::set<Fraction> pts{bound};
  if (cands.empty()) {
    pts.insert(bound / Fraction(2));
    return {pts.begin(), pts.end()};
  }
  Fraction prev(0), gap = *cands.begin();
  for (const auto& c : cands) {
    gap = std::min(gap, c - prev);
    prev = c;
  }
  const Fraction delta = gap / Fraction(static_cast<long long>(2 * p));
  prev = Fraction(0);
  for (const auto& c : cands) {
    pts.insert(c);
    pts.insert(c - delta);
    pts.insert((prev + c) / Fraction(2));
    prev = c;
  }
  if (prev < bound) pts.insert((prev + bound) / Fraction(2));
  return {pts.begin(), pts.end()};
}

std::vector<Fraction> input_candidates(const ComparisonInput& in, const ScanConfig& cfg) {
  std::vector<Fraction> c = in.is_monomial()
                                ? candidate_jumping_numbers(newton_polyhedron(in.monomial().generators()), cfg.lambda_bound)
                                : candidate_jumping_numbers(in.ledger(), cfg.lambda_bound);
  for (const auto& x : c)
    if (x.denominator() > cfg.denominator_cap)
      throw InvalidArgument("candidate " + x.to_string() + " exceeds the denominator cap");
  return c;
}

// ---------------------------------------------------------------------------
// Comparison

namespace {

struct MonomialSide {
  u64 p;
  const MonomialIdeal& a;
  NewtonPolyhedron P;
  TestIdealOptions opts;
  const std::vector<std::string>& names;

  using Ideal = MonomialIdeal;
  std::optional<Ideal> tau(const Fraction& lambda) const {
    auto r = monomial_test_ideal(p, a, lambda, opts);
    if (!r.certified) return std::nullopt;
    return r.ideal;
  }
  Ideal mult(const Fraction& lambda) const { return multiplier_ideal_monomial(P, lambda); }
  bool equal(const Ideal& x, const Ideal& y) const { return x == y; }
  bool contained(const Ideal& small, const Ideal& big) const { return big.contains(small); }
  bool proper(const Ideal& x) const { return !x.is_unit(); }
  std::string str(const Ideal& x) const { return x.to_string(names); }
};

struct PrincipalSide {
  FrobContext ctx;
  Poly f;
  const DivisorLedger& L;
  TestIdealOptions opts;

  using Ideal = IdealGens;
  std::optional<Ideal> tau(const Fraction& lambda) const {
    auto r = test_ideal(ctx, f, lambda, opts);
    if (!r.certified) return std::nullopt;
    return groebner_basis(r.ideal);
  }
  Ideal mult(const Fraction& lambda) const {
    auto li = ledger_multiplier_ideal(L, lambda);
    IdealGens m = li.monomial.to_ideal(ctx.ring());
    return groebner_basis(ideal_scale(poly_pow(f, li.f_power), m));
  }
  bool equal(const Ideal& x, const Ideal& y) const { return ideal_equal(x, y); }
  bool contained(const Ideal& small, const Ideal& big) const { return ideal_contained(small, big); }
  bool proper(const Ideal& x) const { return !is_unit_ideal(x); }
  std::string str(const Ideal& x) const { return x.to_string(); }
};

// Smallest grid point k/p^e in (lo, hi] where the test ideal differs from
// tau_lo, refined over e until two levels agree.
template <class Side>
void locate_tau_jump(const Side& side, u64 p, unsigned e_budget, Fraction lo, const typename Side::Ideal& tau_lo,
                     Fraction hi, ComparisonRecord& rec) {
  auto changed = [&](const Fraction& lambda) -> std::optional<bool> {
    auto t = side.tau(lambda);
    if (!t) return std::nullopt;
    return !side.equal(*t, tau_lo);
  };
  std::optional<Fraction> prev;
  for (unsigned e = 1; e <= e_budget; ++e) {
    u64 q;
    try {
      q = checked_pow(p, e);
    } catch (const ResourceExceeded&) {
      break;
    }
    const BigInt Q(q);
    BigInt kmin = (lo * Fraction(Q)).floor() + 1, kmax = (hi * Fraction(Q)).floor();
    if (kmin > kmax) continue;
    auto top = changed(Fraction(kmax, Q));
    if (!top) break;
    if (!*top) continue;
    bool aborted = false;
    while (kmin < kmax) {
      BigInt mid = (kmin + kmax) / 2;
      auto c = changed(Fraction(mid, Q));
      if (!c) {
        aborted = true;
        break;
      }
      if (*c) kmax = mid;
      else kmin = mid + 1;
    }
    if (aborted) break;
    Fraction c(kmax, Q);
    if (prev && *prev == c) {
      rec.tau_jump = c;
      rec.tau_jump_exact = true;
      return;
    }
    prev = c;
    hi = c;
    lo = std::max(lo, Fraction(kmax - 1, Q));
  }
  rec.tau_jump = prev;
  rec.tau_jump_exact = false;
}

template <class Side>
void run_comparison(const Side& side, const std::vector<Fraction>& points, u64 p, const ScanConfig& cfg,
                    ComparisonRecord& rec) {
  Fraction last_equal(0);
  auto last_tau = side.tau(Fraction(0));
  if (!last_tau) throw InvariantBreach("test ideal at 0 is not certified");
  for (const auto& lambda : points) {
    auto t = side.tau(lambda);
    if (!t) {
      rec.verdict = Verdict::uncertified;
      rec.lambda = lambda;
      return;
    }
    auto j = side.mult(lambda);
    if (!side.contained(*t, j)) {
      throw InvariantBreach("test ideal " + side.str(*t) + " not contained in multiplier ideal " + side.str(j) +
                            " for " + rec.family + " at p = " + std::to_string(p) + ", lambda = " + lambda.to_string());
    }
    ++rec.points_examined;
    if (!side.equal(*t, j)) {
      rec.verdict = Verdict::first_mismatch;
      rec.lambda = lambda;
      rec.tau_gens = side.str(*t);
      rec.j_gens = side.str(j);
      locate_tau_jump(side, p, cfg.e_budget, last_equal, *last_tau, lambda, rec);
      return;
    }
    if (!rec.first_jump && side.proper(*t)) rec.first_jump = lambda;
    last_equal = lambda;
    last_tau = std::move(t);
  }
  rec.verdict = Verdict::all_equal;
}

}  // namespace

ComparisonRecord compare_at_prime(const ComparisonInput& in, u64 p, const ScanConfig& cfg) {
  if (!is_prime(p)) throw InvalidArgument("not a prime: " + std::to_string(p));
  ComparisonRecord rec;
  rec.family = in.family();
  rec.p = p;
  rec.input_hash = fnv1a64(in.canonical());
  rec.cfg_hash = fnv1a64(cfg.canonical());
  auto bad = [&](const std::string& why) {
    rec.verdict = Verdict::bad_prime;
    rec.reason = why;
    return rec;
  };
  const TestIdealOptions opts{cfg.e_budget};
  const auto points = comparison_points(input_candidates(in, cfg), cfg.lambda_bound, p);
  try {
    if (in.is_monomial()) {
      if (in.unit().numerator() % p == 0 || in.unit().denominator() % p == 0)
        return bad("divides the coefficient");
      MonomialSide side{p, in.monomial(), newton_polyhedron(in.monomial().generators()), opts, in.names()};
      run_comparison(side, points, p, cfg, rec);
    } else {
      const auto& L = in.ledger();
      if (std::find(L.bad_primes.begin(), L.bad_primes.end(), p) != L.bad_primes.end())
        return bad("listed in the ledger");
      auto ring = make_fp_ring(p, in.arity(), in.names());
      Poly fp = reduce_mod_p(in.f(), ring);
      if (fp.is_zero()) return bad("f vanishes");
      PrincipalSide side{FrobContext(ring), fp, L, opts};
      run_comparison(side, points, p, cfg, rec);
    }
  } catch (const BadPrime& e) {
    return bad(e.what());
  } catch (const ResourceExceeded& e) {
    rec.verdict = Verdict::uncertified;
    rec.reason = e.what();
  }
  return rec;
}

// ---------------------------------------------------------------------------
// Scans

DensityReport density_report(const std::vector<ComparisonRecord>& records) {
  DensityReport d;
  d.residues.resize(11);
  for (std::size_t m = 2; m <= 12; ++m) d.residues[m - 2].assign(m, {0, 0});
  for (const auto& r : records) {
    switch (r.verdict) {
      case Verdict::all_equal: ++d.all_equal; break;
      case Verdict::first_mismatch: ++d.first_mismatch; break;
      case Verdict::bad_prime: ++d.bad_prime; break;
      case Verdict::uncertified: ++d.uncertified; break;
    }
    if (r.verdict == Verdict::bad_prime) continue;
    for (std::size_t m = 2; m <= 12; ++m) {
      auto& cell = d.residues[m - 2][r.p % m];
      cell.second++;
      if (r.verdict == Verdict::all_equal) cell.first++;
    }
  }
  return d;
}

std::string DensityReport::to_string() const {
  std::ostringstream os;
  os << "# all-equal=" << all_equal << " first-mismatch=" << first_mismatch << " bad-prime=" << bad_prime
     << " uncertified=" << uncertified << '\n';
  for (std::size_t m = 2; m < residues.size() + 2; ++m) {
    os << "# mod " << m << ':';
    for (std::size_t r = 0; r < m; ++r) {
      const auto& [eq, total] = residues[m - 2][r];
      if (total) os << ' ' << r << '=' << eq << '/' << total;
    }
    os << '\n';
  }
  return os.str();
}

Conjecture2Scan conjecture2_scan(const ComparisonInput& in, const ScanConfig& cfg,
                                 const std::optional<std::string>& results_dir) {
  cfg.check();
  const u64 in_hash = fnv1a64(in.canonical()), cfg_hash = fnv1a64(cfg.canonical());
  const auto primes = primes_upto(cfg.prime_bound);

  std::map<u64, ComparisonRecord> cached;
  std::filesystem::path path;
  if (results_dir) {
    path = std::filesystem::path(*results_dir) / (in.family() + ".tsv");
    std::ifstream f(path);
    for (std::string line; std::getline(f, line);) {
      if (line.empty() || line[0] == '#' || line.rfind("family\t", 0) == 0) continue;
      auto r = ComparisonRecord::from_row(line);
      if (r.family == in.family() && r.input_hash == in_hash && r.cfg_hash == cfg_hash) cached[r.p] = r;
    }
  }

  std::vector<u64> todo;
  for (u64 p : primes)
    if (!cached.count(p)) todo.push_back(p);
  auto fresh = parallel_map<ComparisonRecord>(todo.size(), cfg.jobs,
                                              [&](std::size_t i) { return compare_at_prime(in, todo[i], cfg); });

  Conjecture2Scan scan;
  scan.reused = primes.size() - todo.size();
  std::size_t next = 0;
  for (u64 p : primes) {
    if (auto it = cached.find(p); it != cached.end()) scan.records.push_back(it->second);
    else scan.records.push_back(fresh[next++]);
  }
  if (results_dir && !fresh.empty()) {
    std::filesystem::create_directories(*results_dir);
    bool fresh_file = !std::filesystem::exists(path);
    std::ofstream out(path, std::ios::app);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    if (fresh_file) out << "family\tp\tverdict\tdetail\n";
    for (const auto& r : fresh) out << r.row() << '\n';
  }
  scan.density = density_report(scan.records);
  return scan;
}

std::string format_comparison(const std::vector<ComparisonRecord>& records) {
  std::string s = "family\tp\tverdict\tdetail\n";
  for (const auto& r : records) s += r.row() + '\n';
  return s;
}

std::string conjecture1_report(const HyperellipticCurve& C, u64 bound, unsigned jobs) {
  auto scan = ordinarity_scan(C, bound, jobs);
  return format_ordinarity(scan) + ordinarity_summary(scan) + '\n';
}

}  // namespace fsing
