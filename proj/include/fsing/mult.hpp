#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fsing/frob.hpp"
#include "fsing/groebner.hpp"

namespace fsing {

// <normal, u> >= c with a primitive nonnegative integer normal.
struct Facet {
  std::vector<i64> normal;
  i64 c = 0;
  bool coordinate() const { return c == 0; }
  bool operator==(const Facet&) const = default;
  auto operator<=>(const Facet&) const = default;
  std::string to_string() const;  // "3*u1 + 2*u2 >= 6"
};

// conv(generators) + R^n_{>=0} for n <= 3.
class NewtonPolyhedron {
 public:
  std::size_t arity() const { return arity_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  // Sorted; includes the facets with c = 0 lying on coordinate hyperplanes.
  const std::vector<Facet>& facets() const { return facets_; }
  std::vector<Facet> noncoordinate_facets() const;

  bool contains(const std::vector<Fraction>& point) const;
  // Strictly inside every facet with c > 0, and in the closed orthant.
  bool strictly_inside(const std::vector<Fraction>& point) const;

 private:
  friend NewtonPolyhedron newton_polyhedron(const std::vector<ExponentVector>&);
  std::size_t arity_ = 0;
  std::vector<ExponentVector> gens_;
  std::vector<Facet> facets_;
};

// Throws ArityTooLarge for more than three variables.
NewtonPolyhedron newton_polyhedron(const std::vector<ExponentVector>& gens);

// {x^u : <w_k, u> >= n_k for every k}, by minimal generators.
MonomialIdeal monomial_threshold_ideal(std::size_t arity,
                                       const std::vector<std::pair<std::vector<i64>, i64>>& constraints);

// x^u is in J(a^lambda) iff <v, u + 1> > lambda c on every facet.
MonomialIdeal multiplier_ideal_monomial(const NewtonPolyhedron& P, const Fraction& lambda);

// ---------------------------------------------------------------------------
// SNC ledgers

// How a ledger component is realized as a valuation on the ambient
// polynomial ring: a monomial valuation with the given weights, or the
// strict transform of f itself.
struct LedgerValuation {
  enum class Kind { none, monomial, strict } kind = Kind::none;
  std::vector<i64> weights;
};

struct DivisorLedger {
  std::vector<std::string> labels;
  std::vector<i64> a;  // coefficients of D_X
  std::vector<i64> b;  // coefficients of G
  std::vector<LedgerValuation> valuations;
  std::vector<u64> bad_primes;

  std::size_t size() const { return a.size(); }
  // Lengths agree and b is nonnegative.
  void check() const;
  bool has_valuations() const;
  std::size_t valuation_arity() const;
};

// TSV rows "label  a_i  b_i  [weights|f]"; '#' comments, and an optional
// "# bad-primes: 2,3" directive.
DivisorLedger parse_ledger(std::istream& in);
DivisorLedger load_ledger(const std::string& path);

// Coefficients of -D_X - floor(lambda G).
std::vector<i64> snc_multiplier(const DivisorLedger& L, const Fraction& lambda);

// lambda <= bound with lambda b_i integral for some b_i != 0.
std::vector<Fraction> candidate_jumping_numbers(const DivisorLedger& L, const Fraction& bound);
// lambda <= bound with lambda c_F integral for some facet constant c_F > 0.
std::vector<Fraction> candidate_jumping_numbers(const NewtonPolyhedron& P, const Fraction& bound);

// Coefficients of -D - F with F_i = floor((b'_i - a_i) / p^e).
std::vector<i64> snc_phi_image(const DivisorLedger& L, const std::vector<i64>& b_prime, unsigned e, u64 p);

struct SncTestResult {
  std::vector<i64> coeffs;
  unsigned stabilized_at_e = 0;
  unsigned terms_computed = 0;
  bool certified = false;
};

// e-th term -a_i - floor(ceil(lambda p^e) b_i / p^e), run under the same
// stopping rule as test_ideal.
SncTestResult snc_test_ideal(const DivisorLedger& L, const Fraction& lambda, u64 p, unsigned e_max = 8);
// Throws NotStabilized.
std::vector<i64> snc_test_ideal_certified(const DivisorLedger& L, const Fraction& lambda, u64 p,
                                          unsigned e_max = 8);

// Multiplier ideal of f^lambda read off a ledger whose components all carry
// valuations: f^m * {x^u : v_i(x^u) >= a_i + floor(lambda b_i) - m b_i} with
// m = floor(lambda) when a strict-transform component is present.
struct LedgerIdeal {
  u64 f_power = 0;
  MonomialIdeal monomial;
};
LedgerIdeal ledger_multiplier_ideal(const DivisorLedger& L, const Fraction& lambda);

// Checks b_i = v_i(f) and a_i = -(|w_i| - 1) for monomial components, and
// (a, b) = (0, 1) for the strict transform.  Throws InvalidArgument.
void validate_ledger(const DivisorLedger& L, const QPoly& f);

}  // namespace fsing
