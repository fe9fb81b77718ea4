#pragma once

#include <random>
#include <vector>

#include "fsing/groebner.hpp"
#include "fsing/poly.hpp"

namespace fsing::testing {

inline Poly random_poly(const FpRingPtr& ring, std::mt19937_64& rng, unsigned max_degree, unsigned max_terms) {
  const u64 p = ring->domain().field.p();
  std::uniform_int_distribution<unsigned> nterms(0, max_terms), deg(0, max_degree);
  std::uniform_int_distribution<u64> coeff(1, p - 1);
  std::vector<Poly::Term> terms;
  unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t) {
    ExponentVector e(ring->arity());
    unsigned budget = deg(rng);
    for (std::size_t i = 0; i < ring->arity(); ++i) {
      std::uniform_int_distribution<unsigned> part(0, budget);
      e[i] = part(rng);
      budget -= e[i];
    }
    terms.push_back({e, coeff(rng)});
  }
  return Poly::from_terms(ring, terms);
}

inline Poly var(const FpRingPtr& r, std::size_t i) { return Poly::variable(r, i); }
inline Poly cst(const FpRingPtr& r, i64 c) { return Poly::constant(r, r->domain().field.from_int(c)); }

// S-polynomial of two nonzero polynomials in grevlex.
inline Poly s_poly(const Poly& f, const Poly& g) {
  const auto& lf = f.terms().front();
  const auto& lg = g.terms().front();
  ExponentVector l = lf.exp.lcm(lg.exp);
  const auto& F = f.domain().field;
  return f.times_monomial(l - lf.exp, F.inv(lf.coeff)) - g.times_monomial(l - lg.exp, F.inv(lg.coeff));
}

}  // namespace fsing::testing
