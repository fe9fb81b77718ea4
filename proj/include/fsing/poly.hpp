#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fsing/arith.hpp"

namespace fsing {

inline constexpr std::size_t kMaxArity = 6;

// Exponent vector of a monomial x_1^{e_1}...x_n^{e_n}.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t arity);
  ExponentVector(std::initializer_list<std::uint32_t> entries);
  static ExponentVector filled(std::size_t arity, std::uint32_t value);

  std::size_t arity() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  std::uint64_t degree() const;
  bool is_zero() const;

  // Componentwise <=.
  bool divides(const ExponentVector& other) const;
  ExponentVector operator+(const ExponentVector& o) const;
  ExponentVector operator-(const ExponentVector& o) const;  // requires o.divides(*this)
  ExponentVector lcm(const ExponentVector& o) const;
  ExponentVector scaled(std::uint64_t factor) const;

  bool operator==(const ExponentVector& o) const { return n_ == o.n_ && e_ == o.e_; }
  // Lexicographic; only used as a container key.
  bool operator<(const ExponentVector& o) const { return e_ < o.e_; }

  std::size_t hash() const;
  std::string to_string() const;  // "(1,0,2)"

 private:
  std::array<std::uint32_t, kMaxArity> e_{};
  std::uint8_t n_ = 0;
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const { return e.hash(); }
};

// Graded reverse lexicographic and lexicographic comparisons; negative, zero
// or positive like strcmp.
int compare_grevlex(const ExponentVector& a, const ExponentVector& b);
int compare_lex(const ExponentVector& a, const ExponentVector& b);

// ---------------------------------------------------------------------------
// Coefficient domains

struct FpDomain {
  using value_type = u64;
  PrimeField field;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  value_type add(value_type a, value_type b) const { return field.add(a, b); }
  value_type sub(value_type a, value_type b) const { return field.sub(a, b); }
  value_type neg(value_type a) const { return field.neg(a); }
  value_type mul(value_type a, value_type b) const { return field.mul(a, b); }
  value_type inv(value_type a) const { return field.inv(a); }
  value_type from_fraction(const Fraction& f) const;
  bool same(const FpDomain& o) const { return field == o.field; }
  // Render with sign handled by the caller: F_p residues are never negative.
  bool negative(value_type) const { return false; }
  std::string to_string(value_type a) const { return std::to_string(a); }
};

struct QDomain {
  using value_type = Fraction;

  value_type zero() const { return Fraction(0); }
  value_type one() const { return Fraction(1); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool is_one(const value_type& a) const { return a == Fraction(1); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return Fraction(1) / a; }
  value_type from_fraction(const Fraction& f) const { return f; }
  bool same(const QDomain&) const { return true; }
  bool negative(const value_type& a) const { return a.sign() < 0; }
  std::string to_string(const value_type& a) const { return a.to_string(); }
};

std::vector<std::string> default_variable_names(std::size_t arity);

template <class Domain>
class Ring {
 public:
  Ring(std::size_t arity, Domain domain, std::vector<std::string> names = {});

  std::size_t arity() const { return arity_; }
  const Domain& domain() const { return domain_; }
  const std::vector<std::string>& names() const { return names_; }

  // Raises ArityMismatch or DomainMismatch.
  void check_compatible(const Ring& other) const;

 private:
  std::size_t arity_;
  Domain domain_;
  std::vector<std::string> names_;
};

using FpRing = Ring<FpDomain>;
using QRing = Ring<QDomain>;
using FpRingPtr = std::shared_ptr<const FpRing>;
using QRingPtr = std::shared_ptr<const QRing>;

FpRingPtr make_fp_ring(u64 p, std::size_t arity, std::vector<std::string> names = {});
QRingPtr make_q_ring(std::size_t arity, std::vector<std::string> names = {});

// Sparse multivariate polynomial.  Terms are kept sorted in descending
// grevlex order with no zero coefficients, so equal polynomials have equal
// term lists.
template <class Domain>
class Polynomial {
 public:
  using Coeff = typename Domain::value_type;
  using RingPtr = std::shared_ptr<const Ring<Domain>>;
  struct Term {
    ExponentVector exp;
    Coeff coeff;
    bool operator==(const Term&) const = default;
  };

  explicit Polynomial(RingPtr ring);
  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial monomial(RingPtr ring, const ExponentVector& exp, Coeff c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  // Sums duplicate exponents and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const Domain& domain() const { return ring_->domain(); }
  std::size_t arity() const { return ring_->arity(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint64_t total_degree() const;
  Coeff coefficient(const ExponentVector& exp) const;
  // Constant term.
  Coeff constant_term() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial times_monomial(const ExponentVector& exp, const Coeff& c) const;
  Polynomial pow(std::uint64_t n) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Canonical ASCII rendering, e.g. "x^3*y + 2*y^2 + 6".
  std::string to_string() const;

 private:
  void check(const Polynomial& o) const { ring_->check_compatible(*o.ring_); }
  RingPtr ring_;
  std::vector<Term> terms_;
};

using Poly = Polynomial<FpDomain>;
using QPoly = Polynomial<QDomain>;

extern template class Ring<FpDomain>;
extern template class Ring<QDomain>;
extern template class Polynomial<FpDomain>;
extern template class Polynomial<QDomain>;

std::string render_monomial(const ExponentVector& exp, const std::vector<std::string>& names);

enum class ArithOp { add, mul, pow };

// Operation dispatcher for add and mul; pow goes through poly_pow since its
// right operand is an integer.
Poly poly_arith(const Poly& a, const Poly& b, ArithOp op);
QPoly poly_arith(const QPoly& a, const QPoly& b, ArithOp op);
Poly poly_pow(const Poly& a, std::uint64_t n);
QPoly poly_pow(const QPoly& a, std::uint64_t n);

// ---------------------------------------------------------------------------
// Frobenius-specific operations over F_p

// f^{p^k} computed by scaling exponents (coefficients are fixed by Frobenius
// on F_p).
Poly frobenius_power(const Poly& f, unsigned k);

// f^n computed from the base-p digits of n: prod_k (f^{d_k})^{p^k}.
Poly pow_by_digits(const Poly& f, std::uint64_t n);

// f^n with every term having some exponent >= bound dropped (arithmetic in
// F_p[x]/(x_1^bound, ..., x_n^bound)).
Poly truncated_pow(const Poly& f, std::uint64_t n, std::uint64_t bound);

using BasisDecomposition = std::map<ExponentVector, Poly>;

// Unique expression g = sum_mu h_mu^{p^e} x^mu with 0 <= mu_i < p^e, found by
// splitting along the basis {x^i : 0 <= i_j < p} e times.  Zero h_mu omitted.
BasisDecomposition pe_basis_decompose(const Poly& g, unsigned e);

// sum_mu h_mu^{p^e} x^mu; inverse of pe_basis_decompose.
Poly pe_basis_reconstruct(const FpRingPtr& ring, const BasisDecomposition& parts, unsigned e);

// Coefficientwise reduction.  Throws BadPrime when p divides a denominator.
Poly reduce_mod_p(const QPoly& f, const FpRingPtr& target);
Poly reduce_mod_p(const QPoly& f, u64 p);

// Embeds an F_p polynomial with integer lifts in [0, p) (used for test data).
QPoly lift_to_q(const Poly& f, const QRingPtr& target);

}  // namespace fsing
