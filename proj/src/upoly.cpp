#include "fsing/upoly.hpp"

#include <algorithm>

namespace fsing::upoly {

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b, const PrimeField& F) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b, const PrimeField& F) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b, const PrimeField& F) {
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  UPoly q(r.size() - b.size() + 1, 0);
  u64 inv = F.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 c = F.mul(r[k + b.size() - 1], inv);
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly mod(const UPoly& a, const UPoly& b, const PrimeField& F) { return divmod(a, b, F).second; }

UPoly monic(const UPoly& a, const PrimeField& F) {
  if (a.empty()) return a;
  u64 inv = F.inv(a.back());
  UPoly r = a;
  for (auto& c : r) c = F.mul(c, inv);
  return r;
}

UPoly gcd(UPoly a, UPoly b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

UPoly derivative(const UPoly& f, const PrimeField& F) {
  if (f.size() <= 1) return {};
  UPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(f[i], F.from_int(static_cast<i64>(i % F.p())));
  trim(d);
  return d;
}

UPoly pow_mod(UPoly base, u64 e, const UPoly& m, const PrimeField& F) {
  UPoly result{1};
  result = mod(result, m, F);
  base = mod(base, m, F);
  while (e) {
    if (e & 1) result = mod(mul(result, base, F), m, F);
    base = mod(mul(base, base, F), m, F);
    e >>= 1;
  }
  return result;
}

bool is_squarefree(const UPoly& f, const PrimeField& F) {
  if (f.empty()) return false;
  return degree(gcd(f, derivative(f, F), F)) == 0;
}

bool is_irreducible(const UPoly& f, const PrimeField& F) {
  // Rabin-style: f of degree d is irreducible iff gcd(f, x^{p^i} - x) = 1 for
  // i <= d/2.
  int d = degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  UPoly x{0, 1};
  UPoly xp = x;
  for (int i = 1; i <= d / 2; ++i) {
    xp = pow_mod(xp, F.p(), f, F);
    if (degree(gcd(f, sub(xp, x, F), F)) != 0) return false;
  }
  return true;
}

UPoly smallest_irreducible(unsigned d, const PrimeField& F) {
  if (d == 0) throw InvalidArgument("irreducible of degree 0");
  const u64 p = F.p();
  // Enumerate monic polynomials with the lower coefficients in lexicographic
  // order, most significant first.
  std::vector<u64> low(d, 0);
  while (true) {
    UPoly f(d + 1);
    for (unsigned i = 0; i < d; ++i) f[i] = low[i];
    f[d] = 1;
    if (is_irreducible(f, F)) return f;
    unsigned j = 0;
    while (j < d && ++low[j] == p) low[j++] = 0;
    if (j == d) break;
  }
  throw InvariantBreach("no irreducible polynomial found");
}

}  // namespace fsing::upoly
