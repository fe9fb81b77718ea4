#include "fsing/arith.hpp"

#include <ostream>

namespace fsing {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 m) {
  if (a % m == 0) throw InvalidArgument("inverse of zero residue");
  // extended Euclid on signed 128-bit to avoid overflow
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw InvalidArgument("residue not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> primes_upto(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

u64 checked_pow(u64 p, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > (u64{1} << 62) / p) throw ResourceExceeded("p^e exceeds machine word");
    r *= p;
  }
  return r;
}

unsigned ceil_log(u64 p, const BigInt& n) {
  unsigned k = 0;
  BigInt acc = 1;
  while (acc < n) {
    acc *= p;
    ++k;
  }
  return k;
}

PrimeField::PrimeField(u64 p) : p_(p) {
  if (!is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
  if (p >= (u64{1} << 62)) throw InvalidArgument("modulus exceeds 62 bits");
}

u64 PrimeField::inv(u64 a) const { return inv_mod(a, p_); }

u64 PrimeField::from_int(i64 v) const {
  i64 r = v % static_cast<i64>(p_);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(p_) : r);
}

u64 PrimeField::from_big(const BigInt& v) const {
  BigInt r = v % p_;
  if (r < 0) r += p_;
  return static_cast<u64>(r);
}

Fp::Fp(u64 p, i64 value) {
  PrimeField f(p);
  p_ = p;
  v_ = f.from_int(value);
}

void Fp::check(const Fp& o) const {
  if (p_ != o.p_) throw DomainMismatch("F_p elements with different moduli");
}

Fp Fp::operator+(const Fp& o) const {
  check(o);
  return Fp(p_, add_mod(v_, o.v_, p_), 0);
}
Fp Fp::operator-(const Fp& o) const {
  check(o);
  return Fp(p_, sub_mod(v_, o.v_, p_), 0);
}
Fp Fp::operator*(const Fp& o) const {
  check(o);
  return Fp(p_, mul_mod(v_, o.v_, p_), 0);
}
Fp Fp::operator-() const { return Fp(p_, v_ == 0 ? 0 : p_ - v_, 0); }
Fp Fp::inverse() const { return Fp(p_, inv_mod(v_, p_), 0); }
Fp Fp::pow(u64 e) const { return Fp(p_, pow_mod(v_, e, p_), 0); }

Fraction::Fraction(long long n, long long d) {
  if (d == 0) throw InvalidArgument("zero denominator");
  // the Boost constructor rejects negative denominators
  v_ = d < 0 ? Rep(-BigInt(n), -BigInt(d)) : Rep(n, d);
}

Fraction::Fraction(const BigInt& n, const BigInt& d) {
  if (d == 0) throw InvalidArgument("zero denominator");
  v_ = d < 0 ? Rep(BigInt(-n), BigInt(-d)) : Rep(n, d);
}

Fraction Fraction::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> BigInt {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw ParseError("expected integer in '" + std::string(text) + "'", 0);
    BigInt v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw ParseError("invalid digit in '" + std::string(text) + "'", i);
      }
      v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text));
  BigInt d = parse_int(text.substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  return Fraction(parse_int(text.substr(0, slash)), d);
}

BigInt Fraction::floor() const {
  BigInt n = numerator(), d = denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

BigInt Fraction::ceil() const {
  BigInt n = numerator(), d = denominator();
  BigInt q = n / d;
  if (n > 0 && q * d != n) q += 1;
  return q;
}

Fraction Fraction::operator/(const Fraction& o) const {
  if (o.is_zero()) throw InvalidArgument("division by zero fraction");
  return Fraction(Rep(v_ / o.v_));
}

std::string Fraction::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

u64 ceil_times(const Fraction& lambda, u64 m) {
  if (lambda.sign() < 0) throw InvalidArgument("negative exponent");
  BigInt c = (lambda * Fraction(BigInt(m))).ceil();
  if (c > BigInt(std::numeric_limits<u64>::max() >> 2)) throw ResourceExceeded("exponent too large");
  return static_cast<u64>(c);
}

i64 floor_times(const Fraction& lambda, i64 m) {
  BigInt c = (lambda * Fraction(BigInt(m))).floor();
  return static_cast<i64>(c);
}

Fraction simplest_in(const Fraction& lo, const Fraction& hi) {
  if (!(lo < hi)) throw InvalidArgument("empty interval");
  // smallest denominator d with an integer multiple of 1/d in (lo, hi]
  for (BigInt d = 1;; ++d) {
    BigInt k = (hi * Fraction(d)).floor();
    Fraction cand(k, d);
    if (cand > lo) return cand;
  }
}

}  // namespace fsing
