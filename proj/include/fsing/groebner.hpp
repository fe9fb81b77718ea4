#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fsing/poly.hpp"

namespace fsing {

class MonomialOrder {
 public:
  enum class Kind { grevlex, lex };

  constexpr MonomialOrder(Kind kind = Kind::grevlex) : kind_(kind) {}  // NOLINT
  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::lex); }

  Kind kind() const { return kind_; }
  int compare(const ExponentVector& a, const ExponentVector& b) const {
    return kind_ == Kind::grevlex ? compare_grevlex(a, b) : compare_lex(a, b);
  }
  bool operator==(const MonomialOrder&) const = default;

 private:
  Kind kind_;
};

struct GroebnerLimits {
  std::size_t max_basis = 4000;
  std::size_t max_pairs = 400000;
};

// Finitely generated ideal of F_p[x_1..x_n].  Zero generators are dropped, so
// an empty list is the zero ideal.  When `groebner_order` is set the list is
// the reduced Groebner basis for that order.
class IdealGens {
 public:
  IdealGens(FpRingPtr ring, std::vector<Poly> gens);
  static IdealGens unit(FpRingPtr ring);
  static IdealGens zero(FpRingPtr ring) { return IdealGens(std::move(ring), {}); }

  const FpRingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  std::optional<MonomialOrder> groebner_order() const { return order_; }

  // "(g1, g2, ...)" in canonical rendering.
  std::string to_string() const;

 private:
  friend IdealGens groebner_basis(const IdealGens&, MonomialOrder, const GroebnerLimits&);
  FpRingPtr ring_;
  std::vector<Poly> gens_;
  std::optional<MonomialOrder> order_;
};

// Reduced, monic Groebner basis sorted by descending leading monomial.
// Throws ResourceExceeded when a limit is hit.
IdealGens groebner_basis(const IdealGens& I, MonomialOrder ord = MonomialOrder::grevlex(),
                         const GroebnerLimits& limits = {});

// Full normal form of f modulo a Groebner basis (computed when the input is
// not already one).
Poly normal_form(const Poly& f, const IdealGens& I);

bool ideal_member(const Poly& f, const IdealGens& I);
// I ⊆ J.
bool ideal_contained(const IdealGens& I, const IdealGens& J);
bool ideal_equal(const IdealGens& I, const IdealGens& J);
bool is_unit_ideal(const IdealGens& I);
// Every generator vanishes at the origin.
bool inside_maximal_ideal(const IdealGens& I);

IdealGens ideal_sum(const IdealGens& I, const IdealGens& J);
IdealGens ideal_product(const IdealGens& I, const IdealGens& J);
IdealGens ideal_scale(const Poly& f, const IdealGens& I);

// ---------------------------------------------------------------------------
// Monomial ideals, held by their minimal exponent generators.

class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t arity, std::vector<ExponentVector> gens);
  static MonomialIdeal unit(std::size_t arity);

  std::size_t arity() const { return arity_; }
  // Minimal generators, descending grevlex.
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool contains(const ExponentVector& u) const;
  bool contains(const MonomialIdeal& other) const;  // other ⊆ *this
  bool operator==(const MonomialIdeal& o) const { return arity_ == o.arity_ && gens_ == o.gens_; }

  MonomialIdeal operator*(const MonomialIdeal& o) const;
  MonomialIdeal operator+(const MonomialIdeal& o) const;
  MonomialIdeal power(unsigned k) const;

  IdealGens to_ideal(const FpRingPtr& ring) const;
  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const { return to_string(default_variable_names(arity_)); }

 private:
  std::size_t arity_;
  std::vector<ExponentVector> gens_;
};

// (x^u)^{[1/q]} = x^{floor(u/q)} generator by generator.
MonomialIdeal monomial_root(const MonomialIdeal& I, u64 q);

// Returns the monomial ideal when the reduced basis of I consists of monomials.
std::optional<MonomialIdeal> as_monomial(const IdealGens& I);

}  // namespace fsing
