#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fsing/upoly.hpp"

namespace fsing {

// F_q = F_p[t]/(m(t)) with q = p^e.  Elements are integer codes whose base-p
// digits are the coefficients of 1, t, t^2, ...
class Fq {
 public:
  using Elem = u64;

  // Uses the shipped table of Conway polynomials when (p, e) is covered and
  // the lexicographically smallest irreducible otherwise.
  static std::shared_ptr<const Fq> make(u64 p, unsigned e);
  static std::shared_ptr<const Fq> with_modulus(u64 p, upoly::UPoly modulus);

  u64 p() const { return F_.p(); }
  unsigned e() const { return e_; }
  u64 q() const { return q_; }
  const upoly::UPoly& modulus() const { return m_; }
  const PrimeField& prime_field() const { return F_; }
  bool same(const Fq& o) const { return p() == o.p() && m_ == o.m_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // The class of t.
  Elem generator() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, u64 n) const;
  Elem frob(Elem a) const { return pow(a, p()); }
  // Inverse of a -> a^{p^k}.
  Elem frob_inverse(Elem a, unsigned k) const;

  Elem from_coeffs(const upoly::UPoly& c) const;
  upoly::UPoly coeffs(Elem a) const;  // exactly e entries
  Elem from_int(i64 v) const { return F_.from_int(v); }
  bool in_prime_field(Elem a) const { return a < p(); }

  // "g^2 + 2*g + 1"
  std::string to_string(Elem a) const;

 private:
  Fq(u64 p, upoly::UPoly modulus);
  Elem mul_slow(Elem a, Elem b) const;

  PrimeField F_;
  upoly::UPoly m_;
  unsigned e_;
  u64 q_;
  // discrete log tables for small fields
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
};

using FqPtr = std::shared_ptr<const Fq>;

// Conway polynomial table entry, or empty when (p, e) is not covered.
upoly::UPoly conway_polynomial(u64 p, unsigned e);

}  // namespace fsing
