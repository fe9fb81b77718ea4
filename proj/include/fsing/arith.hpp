#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fsing/errors.hpp"

namespace fsing {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Word-size modular arithmetic

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}
u64 pow_mod(u64 base, u64 exp, u64 m);
// Inverse of a nonzero residue modulo a prime.
u64 inv_mod(u64 a, u64 m);

bool is_prime(u64 n);
std::vector<u64> primes_upto(u64 bound);

// p^e, throwing ResourceExceeded when it does not fit in 63 bits.
u64 checked_pow(u64 p, unsigned e);

// Smallest k >= 0 with p^k >= n.
unsigned ceil_log(u64 p, const BigInt& n);

// ---------------------------------------------------------------------------
// The prime field F_p.  Elements are bare canonical residues; the modulus
// lives here so arithmetic between different moduli cannot happen silently.

class PrimeField {
 public:
  explicit PrimeField(u64 p);

  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { return add_mod(a, b, p_); }
  u64 sub(u64 a, u64 b) const { return sub_mod(a, b, p_); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const { return mul_mod(a, b, p_); }
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const { return pow_mod(a, e, p_); }
  u64 from_int(i64 v) const;
  u64 from_big(const BigInt& v) const;

  bool operator==(const PrimeField&) const = default;

 private:
  u64 p_;
};

// Standalone element of F_p carrying its modulus.
class Fp {
 public:
  Fp(u64 p, i64 value);

  u64 p() const { return p_; }
  u64 value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator-() const;
  Fp inverse() const;
  Fp pow(u64 e) const;
  bool operator==(const Fp&) const = default;

 private:
  Fp(u64 p, u64 v, int) : p_(p), v_(v) {}
  void check(const Fp& o) const;
  u64 p_;
  u64 v_;
};

// ---------------------------------------------------------------------------
// Exact rational numbers with unbounded numerators.  Always reduced, with a
// positive denominator.

class Fraction {
 public:
  using Rep = boost::multiprecision::cpp_rational;

  Fraction() = default;
  Fraction(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Fraction(long long n, long long d);
  Fraction(const BigInt& n, const BigInt& d);
  explicit Fraction(const BigInt& n) : v_(n) {}

  // Parses "a", "-a" or "a/b".
  static Fraction parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  BigInt floor() const;
  BigInt ceil() const;

  Fraction operator+(const Fraction& o) const { return Fraction(Rep(v_ + o.v_)); }
  Fraction operator-(const Fraction& o) const { return Fraction(Rep(v_ - o.v_)); }
  Fraction operator*(const Fraction& o) const { return Fraction(Rep(v_ * o.v_)); }
  Fraction operator/(const Fraction& o) const;
  Fraction operator-() const { return Fraction(Rep(-v_)); }
  Fraction& operator+=(const Fraction& o) { v_ += o.v_; return *this; }
  Fraction& operator-=(const Fraction& o) { v_ -= o.v_; return *this; }
  Fraction& operator*=(const Fraction& o) { v_ *= o.v_; return *this; }

  bool operator==(const Fraction& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Fraction& o) const {
    if (v_ < o.v_) return std::strong_ordering::less;
    if (v_ > o.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const;

 private:
  explicit Fraction(Rep v) : v_(std::move(v)) {}
  Rep v_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

// ceil(lambda * m) as a machine word.  lambda must be nonnegative.
u64 ceil_times(const Fraction& lambda, u64 m);
// floor(lambda * m) as a signed integer (lambda may be negative).
i64 floor_times(const Fraction& lambda, i64 m);

// A rational of smallest denominator in (lo, hi]; among those, the largest.
Fraction simplest_in(const Fraction& lo, const Fraction& hi);

}  // namespace fsing
