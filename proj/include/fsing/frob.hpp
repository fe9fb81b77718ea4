#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "fsing/groebner.hpp"

namespace fsing {

// The ambient F_p[x_1..x_n].
class FrobContext {
 public:
  explicit FrobContext(FpRingPtr ring) : ring_(std::move(ring)) {}
  FrobContext(u64 p, std::size_t arity) : ring_(make_fp_ring(p, arity)) {}

  u64 p() const { return ring_->domain().field.p(); }
  std::size_t arity() const { return ring_->arity(); }
  const FpRingPtr& ring() const { return ring_; }
  void check(const Poly& f) const { ring_->check_compatible(*f.ring()); }

 private:
  FpRingPtr ring_;
};

// Coordinate trace t^e: the component h_mu at mu = (p^e-1, ..., p^e-1).
Poly trace(const Poly& h, unsigned e);

// I^{[1/p^e]}: generated by every h_mu of every generator.  Returned as a
// reduced Groebner basis.
IdealGens frobenius_root(const IdealGens& I, unsigned e);

// I^{[p^e]}: generated by the p^e-th powers of the generators.
IdealGens frobenius_power_ideal(const IdealGens& I, unsigned e);

// (f^a)^{[1/p^e]} computed digit by digit: with a = sum d_k p^k,
// I_{k+1} = (f^{d_k} I_k)^{[1/p]} and the result is f^{floor(a/p^e)} I_e.
IdealGens power_root(const Poly& f, u64 a, unsigned e);

struct TestIdealOptions {
  unsigned e_budget = 8;
};

struct TestIdealResult {
  IdealGens ideal;
  unsigned stabilized_at_e = 0;
  unsigned terms_computed = 0;
  bool certified = false;
};

// e-th term ((f^{ceil(lambda p^e)})^{[1/p^e]}) of the root sequence.
IdealGens root_sequence_term(const Poly& f, const Fraction& lambda, unsigned e);

// Write the denominator of lambda as p^offset * d with p prime to d, and let
// period be the order of p mod d.  Along e = offset + k * period the terms
// obey J_{k+1} = (f^m J_k)^{[1/p^period]} with m = lambda p^offset (p^period - 1),
// so term(e - period) == term(e) with e - period >= offset fixes the limit.
struct StabilizationRule {
  unsigned offset = 0;
  unsigned period = 1;
  unsigned guard = 1;  // ceil(log_p denominator) + 1
  // Smallest e at which a certificate can be complete.
  unsigned minimum_e() const { return std::max(guard, offset + period); }
  bool certifies(unsigned e, unsigned equal_since) const {
    return e >= guard && equal_since + period <= e && e - period >= offset;
  }
};

// period is capped at cap + 1; such rules never certify inside the budget.
StabilizationRule stabilization_rule(u64 p, const Fraction& lambda, unsigned cap = 64);

unsigned minimum_certifying_e(u64 p, const Fraction& lambda);

// Walks the root sequence, checking that each term contains the previous
// one, until the StabilizationRule certifies the current term or a term is
// the unit ideal (a nondecreasing sequence cannot leave (1)).  An
// uncertified result is returned, not thrown.
TestIdealResult test_ideal(const FrobContext& ctx, const Poly& f, const Fraction& lambda,
                           const TestIdealOptions& opts = {});

// As test_ideal but throws NotStabilized when the stopping rule fails.
IdealGens test_ideal_certified(const FrobContext& ctx, const Poly& f, const Fraction& lambda,
                               const TestIdealOptions& opts = {});

// max{r : f^r not in (x_1^{p^e}, ..., x_n^{p^e})}.
u64 nu_value(const FrobContext& ctx, const Poly& f, unsigned e);

struct FptInterval {
  Fraction lower;  // exclusive
  Fraction upper;  // inclusive
  unsigned e = 0;
  std::optional<Fraction> exact;
};

// (nu/p^e, (nu+1)/p^e] at e = e_max.  `exact` is the smallest rational of
// denominator <= 60 in the interval with a proper test ideal; the threshold
// is at most this value and equals it whenever its own denominator is <= 60.
FptInterval fpt_interval(const FrobContext& ctx, const Poly& f, unsigned e_max,
                         const TestIdealOptions& opts = {});

// test_ideal(lambda - delta) != test_ideal(lambda).  Throws NotStabilized if
// either side is uncertified.
bool jumps_at(const FrobContext& ctx, const Poly& f, const Fraction& lambda, const Fraction& delta,
              const TestIdealOptions& opts = {});

// f * test_ideal(f, lambda - 1).
IdealGens skoda_shift(const FrobContext& ctx, const Poly& f, const Fraction& lambda,
                      const TestIdealOptions& opts = {});

// ---------------------------------------------------------------------------
// Monomial ideals a = (x^{g_1}, ..., x^{g_k}).  (a^N)^{[1/p^e]} is tracked as
// a sum of terms I * a^M and advanced one p-root at a time using
// a^{pM} = sum_t b_t (a^{M-t})^{[p]}, where b_t is generated by the products
// x^{sum c_j g_j} with 0 <= c_j < p and sum c_j = p t.

MonomialIdeal monomial_power_root(u64 p, const MonomialIdeal& a, u64 N, unsigned e);

struct MonomialTestIdealResult {
  MonomialIdeal ideal;
  unsigned stabilized_at_e = 0;
  unsigned terms_computed = 0;
  bool certified = false;
};

// The periodic rule only certifies principal a; otherwise a term must reach
// the Newton polyhedron bound.
MonomialTestIdealResult monomial_test_ideal(u64 p, const MonomialIdeal& a, const Fraction& lambda,
                                            const TestIdealOptions& opts = {});

}  // namespace fsing
