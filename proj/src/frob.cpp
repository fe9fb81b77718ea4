#include "fsing/frob.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "fsing/mult.hpp"

namespace fsing {

Poly trace(const Poly& h, unsigned e) {
  if (e == 0) throw InvalidArgument("e must be positive");
  u64 q = checked_pow(h.domain().field.p(), e);
  auto parts = pe_basis_decompose(h, e);
  auto it = parts.find(ExponentVector::filled(h.arity(), static_cast<std::uint32_t>(q - 1)));
  return it == parts.end() ? Poly(h.ring()) : it->second;
}

IdealGens frobenius_root(const IdealGens& I, unsigned e) {
  if (e == 0) throw InvalidArgument("e must be positive");
  std::vector<Poly> gens;
  for (const auto& g : I.generators()) {
    for (auto& [mu, h] : pe_basis_decompose(g, e)) gens.push_back(std::move(h));
  }
  if (gens.empty()) return IdealGens::zero(I.ring());
  return groebner_basis(IdealGens(I.ring(), std::move(gens)));
}

IdealGens frobenius_power_ideal(const IdealGens& I, unsigned e) {
  std::vector<Poly> gens;
  for (const auto& g : I.generators()) gens.push_back(frobenius_power(g, e));
  return IdealGens(I.ring(), std::move(gens));
}

IdealGens power_root(const Poly& f, u64 a, unsigned e) {
  const u64 p = f.domain().field.p();
  IdealGens I = IdealGens::unit(f.ring());
  u64 rest = a;
  for (unsigned k = 0; k < e; ++k, rest /= p) {
    u64 d = rest % p;
    if (d == 0 && is_unit_ideal(I)) continue;  // (1)^{[1/p]} = (1)
    I = frobenius_root(ideal_scale(f.pow(d), I), 1);
  }
  if (rest == 0) return I;
  return groebner_basis(ideal_scale(f.pow(rest), I));
}

IdealGens root_sequence_term(const Poly& f, const Fraction& lambda, unsigned e) {
  u64 q = checked_pow(f.domain().field.p(), e);
  return power_root(f, ceil_times(lambda, q), e);
}

StabilizationRule stabilization_rule(u64 p, const Fraction& lambda, unsigned cap) {
  StabilizationRule r;
  BigInt d = lambda.denominator();
  r.guard = ceil_log(p, d) + 1;
  while (d % p == 0) {
    d /= p;
    ++r.offset;
  }
  if (d > BigInt(std::numeric_limits<std::uint32_t>::max())) {
    r.period = cap + 1;
  } else if (d > 1) {
    const u64 m = static_cast<u64>(d);
    u64 x = p % m;
    r.period = 1;
    while (x != 1 && r.period <= cap) {
      x = mul_mod(x, p, m);
      ++r.period;
    }
  }
  return r;
}

unsigned minimum_certifying_e(u64 p, const Fraction& lambda) { return stabilization_rule(p, lambda).minimum_e(); }

namespace {

void check_exponent(const Fraction& lambda) {
  if (lambda.sign() < 0) throw InvalidArgument("exponent must be nonnegative");
}

// Shared driver for the stopping rule; `term(e)` yields the e-th ideal and
// `contained(a, b)` decides a ⊆ b.
template <class Ideal, class TermFn, class ContainedFn, class UnitFn>
void walk_sequence(u64 p, const Fraction& lambda, const TestIdealOptions& opts, TermFn term,
                   ContainedFn contained, UnitFn at_ceiling, Ideal& out, unsigned& stab, unsigned& computed,
                   bool& certified, bool periodic = true) {
  const auto rule = stabilization_rule(p, lambda, opts.e_budget);
  Ideal prev = term(1);
  stab = 1;
  computed = 1;
  certified = at_ceiling(prev);
  for (unsigned e = 2; e <= opts.e_budget && !certified; ++e) {
    Ideal cur = term(e);
    computed = e;
    if (!contained(prev, cur)) {
      throw InvariantBreach("root sequence decreased at e = " + std::to_string(e) + " for lambda = " +
                            lambda.to_string());
    }
    if (!contained(cur, prev)) stab = e;
    prev = std::move(cur);
    certified = at_ceiling(prev) || (periodic && rule.certifies(e, stab));
  }
  out = std::move(prev);
}

}  // namespace

TestIdealResult test_ideal(const FrobContext& ctx, const Poly& f, const Fraction& lambda,
                           const TestIdealOptions& opts) {
  ctx.check(f);
  if (f.is_zero()) throw InvalidArgument("test ideal of the zero polynomial");
  check_exponent(lambda);
  if (lambda.is_zero()) return {IdealGens::unit(ctx.ring()), 1, 1, true};
  TestIdealResult r{IdealGens::zero(ctx.ring())};
  walk_sequence(
      ctx.p(), lambda, opts, [&](unsigned e) { return root_sequence_term(f, lambda, e); },
      [](const IdealGens& a, const IdealGens& b) { return ideal_contained(a, b); },
      [](const IdealGens& a) { return is_unit_ideal(a); }, r.ideal, r.stabilized_at_e,
      r.terms_computed, r.certified);
  return r;
}

IdealGens test_ideal_certified(const FrobContext& ctx, const Poly& f, const Fraction& lambda,
                               const TestIdealOptions& opts) {
  auto r = test_ideal(ctx, f, lambda, opts);
  if (!r.certified) {
    throw NotStabilized("root sequence for lambda = " + lambda.to_string() + " not certified within e <= " +
                        std::to_string(opts.e_budget));
  }
  return r.ideal;
}

u64 nu_value(const FrobContext& ctx, const Poly& f, unsigned e) {
  ctx.check(f);
  if (e == 0) throw InvalidArgument("e must be positive");
  if (f.is_zero()) throw InvalidArgument("nu of the zero polynomial");
  if (f.constant_term() != 0) throw InputNotInMaximalIdeal("f does not vanish at the origin");
  const u64 p = ctx.p();
  // f^r is outside m^{[q]} exactly when (f^r)^{[1/q]} is not inside m.
  auto outside = [&](u64 r, unsigned level) { return !inside_maximal_ideal(power_root(f, r, level)); };
  u64 nu = 0;
  for (unsigned level = 1; level <= e; ++level) {
    u64 base = p * nu;
    u64 best = base;  // f^{p nu} lies outside by the previous level
    for (u64 r = base + p - 1; r > base; --r) {
      if (outside(r, level)) {
        best = r;
        break;
      }
    }
    nu = best;
  }
  return nu;
}

bool jumps_at(const FrobContext& ctx, const Poly& f, const Fraction& lambda, const Fraction& delta,
              const TestIdealOptions& opts) {
  if (!(delta.sign() > 0 && delta < lambda)) throw InvalidArgument("need 0 < delta < lambda");
  auto below = test_ideal_certified(ctx, f, lambda - delta, opts);
  auto at = test_ideal_certified(ctx, f, lambda, opts);
  return !ideal_equal(below, at);
}

FptInterval fpt_interval(const FrobContext& ctx, const Poly& f, unsigned e_max, const TestIdealOptions& opts) {
  u64 nu = nu_value(ctx, f, e_max);
  u64 q = checked_pow(ctx.p(), e_max);
  FptInterval out{Fraction(static_cast<long long>(nu), static_cast<long long>(q)),
                  Fraction(static_cast<long long>(nu + 1), static_cast<long long>(q)), e_max, std::nullopt};

  std::set<Fraction> candidates;
  for (long long d = 1; d <= 60; ++d) {
    BigInt lo = (out.lower * Fraction(d)).floor() + 1;
    BigInt hi = (out.upper * Fraction(d)).floor();
    for (BigInt k = lo; k <= hi; ++k) candidates.insert(Fraction(k, BigInt(d)));
  }
  for (const auto& xi : candidates) {
    auto at = test_ideal(ctx, f, xi, opts);
    if (!at.certified) break;
    if (!is_unit_ideal(at.ideal)) {
      out.exact = xi;
      break;
    }
  }
  return out;
}

IdealGens skoda_shift(const FrobContext& ctx, const Poly& f, const Fraction& lambda, const TestIdealOptions& opts) {
  if (lambda < Fraction(1)) throw InvalidArgument("Skoda shift needs lambda >= 1");
  auto lower = test_ideal_certified(ctx, f, lambda - Fraction(1), opts);
  return groebner_basis(ideal_scale(f, lower));
}

// ---------------------------------------------------------------------------
// Monomial ideals

namespace {

class MonomialRootTables {
 public:
  MonomialRootTables(u64 p, const MonomialIdeal& a) : p_(p), a_(a) {
    const auto& g = a.generators();
    const std::size_t k = g.size();
    t_max_ = k * (p - 1) / p;
    std::vector<std::vector<ExponentVector>> by_t(t_max_ + 1);
    std::vector<u64> c(k, 0);
    // odometer over [0, p-1]^k
    while (true) {
      u64 s = 0;
      for (u64 v : c) s += v;
      if (s % p == 0) {
        ExponentVector e(a.arity());
        for (std::size_t j = 0; j < k; ++j) e = e + g[j].scaled(c[j]);
        by_t[s / p].push_back(e);
      }
      std::size_t j = 0;
      while (j < k && ++c[j] == p) c[j++] = 0;
      if (j == k) break;
    }
    for (auto& gens : by_t) b_.emplace_back(a.arity(), std::move(gens));
    k_.resize(p);
  }

  u64 p() const { return p_; }
  u64 t_max() const { return t_max_; }
  // a^r * b_t, filled in one digit r at a time; the tables are per thread
  const MonomialIdeal& K(u64 r, u64 t) const {
    auto& row = k_[r];
    if (row.empty()) {
      const MonomialIdeal ar = a_.power(static_cast<unsigned>(r));
      for (const auto& b : b_) row.push_back(ar * b);
    }
    return row[t];
  }
  const MonomialIdeal& a() const { return a_; }

 private:
  u64 p_;
  MonomialIdeal a_;
  u64 t_max_;
  std::vector<MonomialIdeal> b_;
  mutable std::vector<std::vector<MonomialIdeal>> k_;
};

const MonomialRootTables& tables_for(u64 p, const MonomialIdeal& a) {
  thread_local std::map<std::pair<u64, std::string>, MonomialRootTables> cache;
  auto key = std::make_pair(p, std::to_string(a.arity()) + a.to_string());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, MonomialRootTables(p, a)).first;
  return it->second;
}

MonomialIdeal power_root_with(const MonomialRootTables& T, u64 N, unsigned e) {
  const std::size_t n = T.a().arity();
  std::map<u64, MonomialIdeal> state;
  state.emplace(N, MonomialIdeal::unit(n));
  for (unsigned step = 0; step < e; ++step) {
    std::map<u64, MonomialIdeal> next;
    for (const auto& [M, I] : state) {
      u64 M2 = M / T.p(), r = M % T.p();
      for (u64 t = 0; t <= std::min(M2, T.t_max()); ++t) {
        MonomialIdeal J = monomial_root(I * T.K(r, t), T.p());
        auto it = next.find(M2 - t);
        if (it == next.end()) {
          next.emplace(M2 - t, std::move(J));
        } else {
          it->second = it->second + J;
        }
      }
    }
    state = std::move(next);
  }
  MonomialIdeal total(n, {});
  for (const auto& [M, I] : state) total = total + I * T.a().power(static_cast<unsigned>(M));
  return total;
}

}  // namespace

MonomialIdeal monomial_power_root(u64 p, const MonomialIdeal& a, u64 N, unsigned e) {
  if (a.is_zero()) throw InvalidArgument("zero monomial ideal");
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  return power_root_with(tables_for(p, a), N, e);
}

MonomialTestIdealResult monomial_test_ideal(u64 p, const MonomialIdeal& a, const Fraction& lambda,
                                            const TestIdealOptions& opts) {
  if (a.is_zero()) throw InvalidArgument("zero monomial ideal");
  check_exponent(lambda);
  if (lambda.is_zero()) return {MonomialIdeal::unit(a.arity()), 1, 1, true};
  const auto& T = tables_for(p, a);
  MonomialTestIdealResult r{MonomialIdeal(a.arity(), {})};
  // a^{pN} is larger than (a^N)^{[p]} once a has two generators, so the
  // periodic rule only applies to principal a.  Otherwise the only stop is
  // reaching the Newton polyhedron bound, which every term lies under.
  const bool principal = a.generators().size() == 1;
  std::optional<MonomialIdeal> ceiling;
  if (!principal) {
    try {
      ceiling = multiplier_ideal_monomial(newton_polyhedron(a.generators()), lambda);
    } catch (const ArityTooLarge&) {
    }
  }
  walk_sequence(
      p, lambda, opts,
      [&](unsigned e) { return power_root_with(T, ceil_times(lambda, checked_pow(p, e)), e); },
      [](const MonomialIdeal& x, const MonomialIdeal& y) { return y.contains(x); },
      [&](const MonomialIdeal& x) { return x.is_unit() || (ceiling && x == *ceiling); }, r.ideal,
      r.stabilized_at_e, r.terms_computed, r.certified, principal);
  if (ceiling && !ceiling->contains(r.ideal))
    throw InvariantBreach("monomial test ideal above the Newton polyhedron bound at lambda = " +
                          lambda.to_string());
  return r;
}

}  // namespace fsing
