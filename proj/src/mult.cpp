#include "fsing/mult.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace fsing {

std::string Facet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (!normal[i]) continue;
    if (!s.empty()) s += " + ";
    if (normal[i] != 1) s += std::to_string(normal[i]) + "*";
    s += "u" + std::to_string(i + 1);
  }
  return s + " >= " + std::to_string(c);
}

namespace {

i64 dot(const std::vector<i64>& v, const ExponentVector& u) {
  i64 s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * static_cast<i64>(u[i]);
  return s;
}

// A nonzero vector orthogonal to n-1 rows in Z^n, or empty when they are
// dependent.
std::vector<i64> normal_to(const std::vector<std::vector<i64>>& rows, std::size_t n) {
  std::vector<i64> v(n, 0);
  if (n == 1) {
    v[0] = 1;
  } else if (n == 2) {
    v = {-rows[0][1], rows[0][0]};
  } else {
    const auto& r = rows[0];
    const auto& s = rows[1];
    v = {r[1] * s[2] - r[2] * s[1], r[2] * s[0] - r[0] * s[2], r[0] * s[1] - r[1] * s[0]};
  }
  i64 g = 0;
  for (i64 x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) return {};
  for (auto& x : v) x /= g;
  return v;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const std::vector<ExponentVector>& gens) {
  if (gens.empty()) throw InvalidArgument("Newton polyhedron of no generators");
  const std::size_t n = gens[0].arity();
  if (n > 3) throw ArityTooLarge("Newton polyhedra need at most 3 variables");
  if (n == 0) throw InvalidArgument("Newton polyhedron in zero variables");
  NewtonPolyhedron P;
  P.arity_ = n;
  P.gens_ = MonomialIdeal(n, gens).generators();
  const auto& G = P.gens_;

  std::set<Facet> found;
  for (std::size_t s = 1; s <= n; ++s) {
    for (const auto& pick : subsets(G.size(), s)) {
      for (const auto& dirs : subsets(n, n - s)) {
        std::vector<std::vector<i64>> rows;
        for (std::size_t l = 1; l < pick.size(); ++l) {
          std::vector<i64> r(n);
          for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<i64>(G[pick[l]][i]) - G[pick[0]][i];
          rows.push_back(r);
        }
        for (std::size_t d : dirs) {
          std::vector<i64> r(n, 0);
          r[d] = 1;
          rows.push_back(r);
        }
        auto v = normal_to(rows, n);
        if (v.empty()) continue;
        bool pos = std::all_of(v.begin(), v.end(), [](i64 x) { return x >= 0; });
        bool neg = std::all_of(v.begin(), v.end(), [](i64 x) { return x <= 0; });
        if (!pos && !neg) continue;
        if (neg)
          for (auto& x : v) x = -x;
        i64 c = dot(v, G[pick[0]]);
        bool supporting = std::all_of(G.begin(), G.end(), [&](const ExponentVector& g) { return dot(v, g) >= c; });
        if (supporting) found.insert(Facet{v, c});
      }
    }
  }
  P.facets_.assign(found.begin(), found.end());
  return P;
}

std::vector<Facet> NewtonPolyhedron::noncoordinate_facets() const {
  std::vector<Facet> out;
  for (const auto& f : facets_)
    if (!f.coordinate()) out.push_back(f);
  return out;
}

namespace {

Fraction dot(const std::vector<i64>& v, const std::vector<Fraction>& u) {
  Fraction s(0);
  for (std::size_t i = 0; i < v.size(); ++i) s += Fraction(v[i]) * u[i];
  return s;
}

}  // namespace

bool NewtonPolyhedron::contains(const std::vector<Fraction>& pt) const {
  if (pt.size() != arity_) throw ArityMismatch("point arity differs from polyhedron");
  for (const auto& x : pt)
    if (x.sign() < 0) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, pt) >= Fraction(f.c); });
}

bool NewtonPolyhedron::strictly_inside(const std::vector<Fraction>& pt) const {
  if (pt.size() != arity_) throw ArityMismatch("point arity differs from polyhedron");
  for (const auto& x : pt)
    if (x.sign() < 0) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.coordinate() || dot(f.normal, pt) > Fraction(f.c); });
}

MonomialIdeal monomial_threshold_ideal(std::size_t arity,
                                       const std::vector<std::pair<std::vector<i64>, i64>>& constraints) {
  // A minimal generator u with u_j > 0 violates some constraint after
  // lowering u_j, which bounds u_j by ceil(n_k / w_kj).
  std::vector<i64> bound(arity, 0);
  for (const auto& [w, thr] : constraints) {
    if (w.size() != arity) throw ArityMismatch("constraint arity differs");
    for (std::size_t j = 0; j < arity; ++j) {
      if (w[j] < 0) throw InvalidArgument("negative valuation weight");
      if (w[j] > 0 && thr > 0) bound[j] = std::max(bound[j], (thr + w[j] - 1) / w[j]);
    }
  }
  auto ok = [&](const ExponentVector& u) {
    for (const auto& [w, thr] : constraints) {
      i64 s = 0;
      for (std::size_t j = 0; j < arity; ++j) s += w[j] * static_cast<i64>(u[j]);
      if (s < thr) return false;
    }
    return true;
  };
  std::vector<ExponentVector> members;
  ExponentVector u(arity);
  while (true) {
    if (ok(u)) members.push_back(u);
    std::size_t j = 0;
    while (j < arity && static_cast<i64>(++u[j]) > bound[j]) u[j++] = 0;
    if (j == arity) break;
  }
  // An unsatisfiable system (all weights zero, positive threshold) gives the
  // zero ideal.
  return MonomialIdeal(arity, std::move(members));
}

MonomialIdeal multiplier_ideal_monomial(const NewtonPolyhedron& P, const Fraction& lambda) {
  if (lambda.sign() < 0) throw InvalidArgument("exponent must be nonnegative");
  std::vector<std::pair<std::vector<i64>, i64>> cons;
  for (const auto& f : P.facets()) {
    if (f.coordinate()) continue;
    // <v, u + 1> > lambda c  <=>  <v, u> >= floor(lambda c - |v|) + 1
    i64 weight = std::accumulate(f.normal.begin(), f.normal.end(), i64{0});
    i64 thr = static_cast<i64>((lambda * Fraction(f.c) - Fraction(weight)).floor()) + 1;
    cons.push_back({f.normal, thr});
  }
  return monomial_threshold_ideal(P.arity(), cons);
}

// ---------------------------------------------------------------------------
// Ledgers

void DivisorLedger::check() const {
  if (a.size() != b.size() || labels.size() != a.size() || valuations.size() != a.size()) {
    throw InvalidArgument("ledger vectors have different lengths");
  }
  for (i64 x : b)
    if (x < 0) throw InvalidArgument("ledger b_i must be nonnegative");
}

bool DivisorLedger::has_valuations() const {
  return std::all_of(valuations.begin(), valuations.end(),
                     [](const LedgerValuation& v) { return v.kind != LedgerValuation::Kind::none; });
}

std::size_t DivisorLedger::valuation_arity() const {
  for (const auto& v : valuations)
    if (v.kind == LedgerValuation::Kind::monomial) return v.weights.size();
  return 0;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

i64 parse_i64(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("ledger line " + std::to_string(line) + ": bad integer '" + s + "'", 0);
  }
}

}  // namespace

DivisorLedger parse_ledger(std::istream& in) {
  DivisorLedger L;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string t = trim(raw);
    if (t.empty()) continue;
    if (t[0] == '#') {
      auto pos = t.find("bad-primes:");
      if (pos != std::string::npos) {
        for (auto& tok : split(t.substr(pos + 11), ',')) {
          std::string v = trim(tok);
          if (!v.empty()) L.bad_primes.push_back(static_cast<u64>(parse_i64(v, line)));
        }
      }
      continue;
    }
    std::vector<std::string> cols;
    std::istringstream ss(t);
    for (std::string c; ss >> c;) cols.push_back(c);
    if (cols.size() < 3 || cols.size() > 4) {
      throw ParseError("ledger line " + std::to_string(line) + ": expected 3 or 4 columns", 0);
    }
    L.labels.push_back(cols[0]);
    L.a.push_back(parse_i64(cols[1], line));
    L.b.push_back(parse_i64(cols[2], line));
    LedgerValuation v;
    if (cols.size() == 4) {
      if (cols[3] == "f") {
        v.kind = LedgerValuation::Kind::strict;
      } else {
        v.kind = LedgerValuation::Kind::monomial;
        for (auto& w : split(cols[3], ',')) v.weights.push_back(parse_i64(trim(w), line));
      }
    }
    L.valuations.push_back(v);
  }
  L.check();
  std::size_t arity = L.valuation_arity();
  for (const auto& v : L.valuations) {
    if (v.kind == LedgerValuation::Kind::monomial && v.weights.size() != arity) {
      throw ParseError("ledger valuations have different arities", 0);
    }
  }
  return L;
}

DivisorLedger load_ledger(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open ledger " + path);
  return parse_ledger(in);
}

std::vector<i64> snc_multiplier(const DivisorLedger& L, const Fraction& lambda) {
  L.check();
  if (lambda.sign() < 0) throw InvalidArgument("exponent must be nonnegative");
  std::vector<i64> c(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) c[i] = -L.a[i] - floor_times(lambda, L.b[i]);
  return c;
}

namespace {

std::vector<Fraction> multiples_upto(const std::vector<i64>& dens, const Fraction& bound) {
  if (bound.sign() <= 0) throw InvalidArgument("candidate bound must be positive");
  std::set<Fraction> out;
  for (i64 d : dens) {
    if (d <= 0) continue;
    i64 top = floor_times(bound, d);
    for (i64 k = 1; k <= top; ++k) out.insert(Fraction(k, d));
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Fraction> candidate_jumping_numbers(const DivisorLedger& L, const Fraction& bound) {
  L.check();
  return multiples_upto(L.b, bound);
}

std::vector<Fraction> candidate_jumping_numbers(const NewtonPolyhedron& P, const Fraction& bound) {
  std::vector<i64> cs;
  for (const auto& f : P.facets()) cs.push_back(f.c);
  return multiples_upto(cs, bound);
}

namespace {

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<i64> snc_phi_image(const DivisorLedger& L, const std::vector<i64>& b_prime, unsigned e, u64 p) {
  L.check();
  if (e == 0) throw InvalidArgument("e must be positive");
  if (b_prime.size() != L.size()) throw InvalidArgument("b' length differs from ledger");
  i64 q = static_cast<i64>(checked_pow(p, e));
  std::vector<i64> out(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) out[i] = -L.a[i] - floor_div(b_prime[i] - L.a[i], q);
  return out;
}

SncTestResult snc_test_ideal(const DivisorLedger& L, const Fraction& lambda, u64 p, unsigned e_max) {
  L.check();
  if (lambda.sign() < 0) throw InvalidArgument("exponent must be nonnegative");
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  auto term = [&](unsigned e) {
    u64 q = checked_pow(p, e);
    BigInt N = ceil_times(lambda, q);
    std::vector<i64> c(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
      c[i] = -L.a[i] - static_cast<i64>(Fraction(N * L.b[i], BigInt(q)).floor());
    }
    return c;
  };
  SncTestResult r;
  if (lambda.is_zero()) {
    r.coeffs = term(1);
    r.stabilized_at_e = r.terms_computed = 1;
    r.certified = true;
    return r;
  }
  const auto rule = stabilization_rule(p, lambda, e_max);
  r.coeffs = term(1);
  r.stabilized_at_e = r.terms_computed = 1;
  for (unsigned e = 2; e <= e_max && !r.certified; ++e) {
    auto cur = term(e);
    r.terms_computed = e;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] < r.coeffs[i]) throw InvariantBreach("SNC root sequence decreased");
    }
    if (cur != r.coeffs) r.stabilized_at_e = e;
    r.coeffs = std::move(cur);
    r.certified = rule.certifies(e, r.stabilized_at_e);
  }
  return r;
}

std::vector<i64> snc_test_ideal_certified(const DivisorLedger& L, const Fraction& lambda, u64 p, unsigned e_max) {
  auto r = snc_test_ideal(L, lambda, p, e_max);
  if (!r.certified) throw NotStabilized("SNC test ideal not certified for lambda = " + lambda.to_string());
  return r.coeffs;
}

LedgerIdeal ledger_multiplier_ideal(const DivisorLedger& L, const Fraction& lambda) {
  L.check();
  if (!L.has_valuations()) throw InvalidArgument("ledger components lack valuations");
  if (lambda.sign() < 0) throw InvalidArgument("exponent must be nonnegative");
  const std::size_t n = L.valuation_arity();
  if (n == 0) throw InvalidArgument("ledger has no monomial valuation");
  bool strict = std::any_of(L.valuations.begin(), L.valuations.end(),
                            [](const LedgerValuation& v) { return v.kind == LedgerValuation::Kind::strict; });
  i64 m = strict ? static_cast<i64>(lambda.floor()) : 0;
  std::vector<std::pair<std::vector<i64>, i64>> cons;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (L.valuations[i].kind != LedgerValuation::Kind::monomial) continue;
    i64 need = L.a[i] + floor_times(lambda, L.b[i]) - m * L.b[i];
    cons.push_back({L.valuations[i].weights, need});
  }
  return {static_cast<u64>(m), monomial_threshold_ideal(n, cons)};
}

void validate_ledger(const DivisorLedger& L, const QPoly& f) {
  L.check();
  if (f.is_zero()) throw InvalidArgument("ledger for the zero polynomial");
  for (std::size_t i = 0; i < L.size(); ++i) {
    const auto& v = L.valuations[i];
    const std::string where = "ledger component " + L.labels[i];
    if (v.kind == LedgerValuation::Kind::strict) {
      if (L.a[i] != 0 || L.b[i] != 1) throw InvalidArgument(where + ": strict transform needs a = 0, b = 1");
      continue;
    }
    if (v.kind != LedgerValuation::Kind::monomial) continue;
    if (v.weights.size() != f.arity()) throw InvalidArgument(where + ": weight arity differs from f");
    i64 val = -1;
    for (const auto& t : f.terms()) {
      i64 s = dot(v.weights, t.exp);
      if (val < 0 || s < val) val = s;
    }
    if (val != L.b[i]) {
      throw InvalidArgument(where + ": b = " + std::to_string(L.b[i]) + " but v(f) = " + std::to_string(val));
    }
    i64 w = std::accumulate(v.weights.begin(), v.weights.end(), i64{0});
    if (L.a[i] != -(w - 1)) {
      throw InvalidArgument(where + ": a = " + std::to_string(L.a[i]) + " but -(|w| - 1) = " +
                            std::to_string(-(w - 1)));
    }
  }
}

}  // namespace fsing
