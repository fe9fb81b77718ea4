#include "fsing/fq.hpp"

#include <map>

namespace fsing {

upoly::UPoly conway_polynomial(u64 p, unsigned e) {
  // coefficients low to high, monic
  static const std::map<std::pair<u64, unsigned>, upoly::UPoly> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{5, 5}, {3, 4, 0, 0, 0, 1}},
      {{5, 6}, {2, 0, 1, 4, 1, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{7, 4}, {3, 4, 5, 0, 1}},
      {{7, 5}, {4, 1, 0, 0, 0, 1}},
      {{7, 6}, {3, 6, 4, 5, 1, 0, 1}},
  };
  auto it = table.find({p, e});
  return it == table.end() ? upoly::UPoly{} : it->second;
}

std::shared_ptr<const Fq> Fq::make(u64 p, unsigned e) {
  if (e == 0) throw InvalidArgument("extension degree must be positive");
  PrimeField F(p);
  auto m = conway_polynomial(p, e);
  if (m.empty()) m = upoly::smallest_irreducible(e, F);
  return std::shared_ptr<const Fq>(new Fq(p, std::move(m)));
}

std::shared_ptr<const Fq> Fq::with_modulus(u64 p, upoly::UPoly modulus) {
  PrimeField F(p);
  upoly::trim(modulus);
  if (modulus.empty() || modulus.back() != 1) throw InvalidArgument("modulus must be monic");
  if (!upoly::is_irreducible(modulus, F)) throw InvalidArgument("modulus is not irreducible");
  return std::shared_ptr<const Fq>(new Fq(p, std::move(modulus)));
}

Fq::Fq(u64 p, upoly::UPoly modulus) : F_(p), m_(std::move(modulus)) {
  e_ = static_cast<unsigned>(upoly::degree(m_));
  q_ = checked_pow(p, e_);
  if (q_ <= (u64{1} << 20) && q_ > 2) {
    // find a primitive element and build log tables
    std::vector<u64> prime_factors;
    u64 n = q_ - 1;
    for (u64 d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime_factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) prime_factors.push_back(n);
    auto slow_pow = [&](Elem a, u64 k) {
      Elem r = 1;
      while (k) {
        if (k & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        k >>= 1;
      }
      return r;
    };
    Elem g = 2;
    for (; g < q_; ++g) {
      bool primitive = true;
      for (u64 f : prime_factors) primitive = primitive && slow_pow(g, (q_ - 1) / f) != 1;
      if (primitive) break;
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Elem x = 1;
    for (u64 k = 0; k + 1 < q_; ++k) {
      exp_[k] = x;
      log_[x] = static_cast<std::uint32_t>(k);
      x = mul_slow(x, g);
    }
  }
}

Fq::Elem Fq::generator() const {
  if (e_ == 1) return F_.neg(m_[0]);
  return p();
}

Fq::Elem Fq::add(Elem a, Elem b) const {
  if (e_ == 1) return F_.add(a, b);
  if (p() == 2) return a ^ b;
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += F_.add(a % p(), b % p()) * scale;
    a /= p();
    b /= p();
    scale *= p();
  }
  return r;
}

Fq::Elem Fq::neg(Elem a) const {
  if (e_ == 1) return F_.neg(a);
  if (p() == 2) return a;
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += F_.neg(a % p()) * scale;
    a /= p();
    scale *= p();
  }
  return r;
}

Fq::Elem Fq::sub(Elem a, Elem b) const { return add(a, neg(b)); }

upoly::UPoly Fq::coeffs(Elem a) const {
  upoly::UPoly c(e_);
  for (unsigned i = 0; i < e_; ++i) {
    c[i] = a % p();
    a /= p();
  }
  return c;
}

Fq::Elem Fq::from_coeffs(const upoly::UPoly& c) const {
  upoly::UPoly r = upoly::mod(c, m_, F_);
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    if (i < r.size()) out += F_.from_int(static_cast<i64>(r[i] % p())) * scale;
    scale *= p();
  }
  return out;
}

Fq::Elem Fq::mul_slow(Elem a, Elem b) const {
  auto ca = coeffs(a), cb = coeffs(b);
  upoly::trim(ca);
  upoly::trim(cb);
  return from_coeffs(upoly::mul(ca, cb, F_));
}

Fq::Elem Fq::mul(Elem a, Elem b) const {
  if (e_ == 1) return F_.mul(a, b);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[(static_cast<u64>(log_[a]) + log_[b]) % (q_ - 1)];
  return mul_slow(a, b);
}

Fq::Elem Fq::pow(Elem a, u64 n) const {
  if (a == 0) return n == 0 ? 1 : 0;
  if (!exp_.empty()) return exp_[static_cast<u64>((static_cast<unsigned __int128>(log_[a]) * n) % (q_ - 1))];
  Elem r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Fq::Elem Fq::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in F_q");
  return pow(a, q_ - 2);
}

Fq::Elem Fq::frob_inverse(Elem a, unsigned k) const {
  // a -> a^{p^k} has order e on F_q; its inverse is a -> a^{p^{e - k mod e}}.
  unsigned r = (e_ - k % e_) % e_;
  for (unsigned i = 0; i < r; ++i) a = frob(a);
  return a;
}

std::string Fq::to_string(Elem a) const {
  if (a == 0) return "0";
  auto c = coeffs(a);
  std::string s;
  for (unsigned i = e_; i-- > 0;) {
    if (!c[i]) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(c[i]);
    } else {
      if (c[i] != 1) s += std::to_string(c[i]) + "*";
      s += i == 1 ? "g" : "g^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace fsing
