#include "fsing/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace fsing {

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(std::size_t arity) {
  if (arity > kMaxArity) throw ArityTooLarge("at most " + std::to_string(kMaxArity) + " variables");
  n_ = static_cast<std::uint8_t>(arity);
}

ExponentVector::ExponentVector(std::initializer_list<std::uint32_t> entries)
    : ExponentVector(entries.size()) {
  std::copy(entries.begin(), entries.end(), e_.begin());
}

ExponentVector ExponentVector::filled(std::size_t arity, std::uint32_t value) {
  ExponentVector v(arity);
  for (std::size_t i = 0; i < arity; ++i) v.e_[i] = value;
  return v;
}

std::uint64_t ExponentVector::degree() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool ExponentVector::is_zero() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) return false;
  return true;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  ExponentVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t s = std::uint64_t{e_[i]} + o.e_[i];
    if (s > UINT32_MAX) throw ResourceExceeded("exponent overflow");
    r.e_[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
  ExponentVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& o) const {
  ExponentVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  return r;
}

ExponentVector ExponentVector::scaled(std::uint64_t factor) const {
  ExponentVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] && factor > UINT32_MAX / e_[i]) throw ResourceExceeded("exponent overflow");
    r.e_[i] = static_cast<std::uint32_t>(e_[i] * factor);
  }
  return r;
}

std::size_t ExponentVector::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

int compare_grevlex(const ExponentVector& a, const ExponentVector& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int compare_lex(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Domains and rings

FpDomain::value_type FpDomain::from_fraction(const Fraction& f) const {
  u64 d = field.from_big(f.denominator());
  if (d == 0) throw BadPrime(field.p(), "divides the denominator of " + f.to_string());
  return field.mul(field.from_big(f.numerator()), field.inv(d));
}

std::vector<std::string> default_variable_names(std::size_t arity) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arity; ++i)
    names.push_back(arity <= 4 ? std::string(small[i]) : "x" + std::to_string(i + 1));
  return names;
}

template <class D>
Ring<D>::Ring(std::size_t arity, D domain, std::vector<std::string> names)
    : arity_(arity), domain_(std::move(domain)), names_(std::move(names)) {
  if (arity > kMaxArity) throw ArityTooLarge("at most " + std::to_string(kMaxArity) + " variables");
  if (names_.empty()) names_ = default_variable_names(arity);
  if (names_.size() != arity) throw InvalidArgument("variable name count differs from arity");
}

template <class D>
void Ring<D>::check_compatible(const Ring& other) const {
  if (arity_ != other.arity_) {
    throw ArityMismatch("arity " + std::to_string(arity_) + " vs " + std::to_string(other.arity_));
  }
  if (!domain_.same(other.domain_)) throw DomainMismatch("coefficient domains differ");
}

FpRingPtr make_fp_ring(u64 p, std::size_t arity, std::vector<std::string> names) {
  return std::make_shared<const FpRing>(arity, FpDomain{PrimeField(p)}, std::move(names));
}

QRingPtr make_q_ring(std::size_t arity, std::vector<std::string> names) {
  return std::make_shared<const QRing>(arity, QDomain{}, std::move(names));
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

template <class Term>
void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare_grevlex(a.exp, b.exp) > 0; });
}

}  // namespace

template <class D>
Polynomial<D>::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidArgument("null ring");
}

template <class D>
Polynomial<D> Polynomial<D>::constant(RingPtr ring, Coeff c) {
  return monomial(ring, ExponentVector(ring->arity()), std::move(c));
}

template <class D>
Polynomial<D> Polynomial<D>::monomial(RingPtr ring, const ExponentVector& exp, Coeff c) {
  if (exp.arity() != ring->arity()) throw ArityMismatch("exponent arity differs from ring");
  Polynomial r(std::move(ring));
  if (!r.domain().is_zero(c)) r.terms_.push_back({exp, std::move(c)});
  return r;
}

template <class D>
Polynomial<D> Polynomial<D>::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw InvalidArgument("variable index out of range");
  ExponentVector e(ring->arity());
  e[index] = 1;
  auto one = ring->domain().one();
  return monomial(std::move(ring), e, one);
}

template <class D>
Polynomial<D> Polynomial<D>::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial r(std::move(ring));
  const D& dom = r.domain();
  for (const auto& t : terms) {
    if (t.exp.arity() != r.arity()) throw ArityMismatch("exponent arity differs from ring");
  }
  sort_terms(terms);
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().exp == t.exp) {
      r.terms_.back().coeff = dom.add(r.terms_.back().coeff, t.coeff);
      if (dom.is_zero(r.terms_.back().coeff)) r.terms_.pop_back();
    } else if (!dom.is_zero(t.coeff)) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

template <class D>
bool Polynomial<D>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

template <class D>
std::uint64_t Polynomial<D>::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().exp.degree();
}

template <class D>
typename Polynomial<D>::Coeff Polynomial<D>::coefficient(const ExponentVector& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, const ExponentVector& e) {
    return compare_grevlex(t.exp, e) > 0;
  });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return domain().zero();
}

template <class D>
typename Polynomial<D>::Coeff Polynomial<D>::constant_term() const {
  if (!terms_.empty() && terms_.back().exp.is_zero()) return terms_.back().coeff;
  return domain().zero();
}

template <class D>
Polynomial<D> Polynomial<D>::operator+(const Polynomial& o) const {
  check(o);
  const D& dom = domain();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size()     ? -1
            : j == o.terms_.size() ? 1
                                   : compare_grevlex(terms_[i].exp, o.terms_[j].exp);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      auto s = dom.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!dom.is_zero(s)) r.terms_.push_back({terms_[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

template <class D>
Polynomial<D> Polynomial<D>::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = domain().neg(t.coeff);
  return r;
}

template <class D>
Polynomial<D> Polynomial<D>::operator-(const Polynomial& o) const {
  check(o);
  return *this + (-o);
}

template <class D>
Polynomial<D> Polynomial<D>::operator*(const Polynomial& o) const {
  check(o);
  const D& dom = domain();
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].exp, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.times_monomial(terms_[0].exp, terms_[0].coeff);
  std::unordered_map<ExponentVector, Coeff, ExponentHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto prod = dom.mul(a.coeff, b.coeff);
      auto [it, fresh] = acc.try_emplace(a.exp + b.exp, prod);
      if (!fresh) it->second = dom.add(it->second, prod);
    }
  }
  Polynomial r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!dom.is_zero(c)) r.terms_.push_back({e, std::move(c)});
  sort_terms(r.terms_);
  return r;
}

template <class D>
Polynomial<D> Polynomial<D>::scaled(const Coeff& c) const {
  const D& dom = domain();
  Polynomial r(ring_);
  if (dom.is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto v = dom.mul(t.coeff, c);
    if (!dom.is_zero(v)) r.terms_.push_back({t.exp, std::move(v)});
  }
  return r;
}

template <class D>
Polynomial<D> Polynomial<D>::times_monomial(const ExponentVector& exp, const Coeff& c) const {
  // Multiplying by a monomial preserves the (multiplicative) term order.
  Polynomial r = scaled(c);
  for (auto& t : r.terms_) t.exp = t.exp + exp;
  return r;
}

template <class D>
Polynomial<D> Polynomial<D>::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, domain().one());
  Polynomial base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

std::string render_monomial(const ExponentVector& exp, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < exp.arity(); ++i) {
    if (!exp[i]) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (exp[i] > 1) s += "^" + std::to_string(exp[i]);
  }
  return s;
}

template <class D>
std::string Polynomial<D>::to_string() const {
  if (terms_.empty()) return "0";
  const D& dom = domain();
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    bool neg = dom.negative(t.coeff);
    Coeff mag = neg ? dom.neg(t.coeff) : t.coeff;
    if (k == 0) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = render_monomial(t.exp, ring_->names());
    if (mono.empty()) {
      out += dom.to_string(mag);
    } else if (dom.is_one(mag)) {
      out += mono;
    } else {
      out += dom.to_string(mag) + "*" + mono;
    }
  }
  return out;
}

template class Ring<FpDomain>;
template class Ring<QDomain>;
template class Polynomial<FpDomain>;
template class Polynomial<QDomain>;

namespace {

template <class P>
P arith_impl(const P& a, const P& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::pow:
      break;
  }
  throw InvalidArgument("pow takes an integer exponent, not a polynomial");
}

}  // namespace

Poly poly_arith(const Poly& a, const Poly& b, ArithOp op) { return arith_impl(a, b, op); }
QPoly poly_arith(const QPoly& a, const QPoly& b, ArithOp op) { return arith_impl(a, b, op); }
Poly poly_pow(const Poly& a, std::uint64_t n) { return pow_by_digits(a, n); }
QPoly poly_pow(const QPoly& a, std::uint64_t n) { return a.pow(n); }

// ---------------------------------------------------------------------------
// Frobenius operations

Poly frobenius_power(const Poly& f, unsigned k) {
  u64 q = checked_pow(f.domain().field.p(), k);
  std::vector<Poly::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.exp.scaled(q), t.coeff});
  return Poly::from_terms(f.ring(), std::move(terms));
}

Poly pow_by_digits(const Poly& f, std::uint64_t n) {
  const u64 p = f.domain().field.p();
  Poly result = Poly::constant(f.ring(), 1);
  for (unsigned k = 0; n; ++k, n /= p) {
    u64 d = n % p;
    if (d) result = result * frobenius_power(f.pow(d), k);
  }
  return result;
}

namespace {

Poly truncate(const Poly& f, std::uint64_t bound) {
  std::vector<Poly::Term> kept;
  for (const auto& t : f.terms()) {
    bool ok = true;
    for (std::size_t i = 0; i < t.exp.arity(); ++i) ok = ok && t.exp[i] < bound;
    if (ok) kept.push_back(t);
  }
  return Poly::from_terms(f.ring(), std::move(kept));
}

}  // namespace

Poly truncated_pow(const Poly& f, std::uint64_t n, std::uint64_t bound) {
  Poly result = truncate(Poly::constant(f.ring(), 1), bound);
  Poly base = truncate(f, bound);
  while (n) {
    if (n & 1) result = truncate(result * base, bound);
    n >>= 1;
    if (n) base = truncate(base * base, bound);
  }
  return result;
}

BasisDecomposition pe_basis_decompose(const Poly& g, unsigned e) {
  if (e == 0) throw InvalidArgument("e must be positive");
  const u64 p = g.domain().field.p();
  const std::size_t n = g.arity();
  using Bucket = std::map<ExponentVector, std::vector<Poly::Term>>;

  // Invariant after s splits: g = sum_mu h_mu^{p^s} x^mu.
  Bucket current;
  if (!g.is_zero()) current[ExponentVector(n)] = g.terms();
  u64 scale = 1;
  for (unsigned s = 0; s < e; ++s) {
    Bucket next;
    for (const auto& [mu, terms] : current) {
      for (const auto& t : terms) {
        ExponentVector r(n), rest(n);
        for (std::size_t i = 0; i < n; ++i) {
          r[i] = static_cast<std::uint32_t>(t.exp[i] % p);
          rest[i] = static_cast<std::uint32_t>(t.exp[i] / p);
        }
        next[mu + r.scaled(scale)].push_back({rest, t.coeff});
      }
    }
    current = std::move(next);
    scale *= p;
  }
  BasisDecomposition out;
  for (auto& [mu, terms] : current) {
    Poly h = Poly::from_terms(g.ring(), std::move(terms));
    if (!h.is_zero()) out.emplace(mu, std::move(h));
  }
  return out;
}

Poly pe_basis_reconstruct(const FpRingPtr& ring, const BasisDecomposition& parts, unsigned e) {
  Poly sum(ring);
  for (const auto& [mu, h] : parts) sum = sum + frobenius_power(h, e).times_monomial(mu, 1);
  return sum;
}

Poly reduce_mod_p(const QPoly& f, const FpRingPtr& target) {
  if (target->arity() != f.arity()) throw ArityMismatch("reduction target has a different arity");
  std::vector<Poly::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.exp, target->domain().from_fraction(t.coeff)});
  return Poly::from_terms(target, std::move(terms));
}

Poly reduce_mod_p(const QPoly& f, u64 p) {
  return reduce_mod_p(f, make_fp_ring(p, f.arity(), f.ring()->names()));
}

QPoly lift_to_q(const Poly& f, const QRingPtr& target) {
  if (target->arity() != f.arity()) throw ArityMismatch("lift target has a different arity");
  std::vector<QPoly::Term> terms;
  for (const auto& t : f.terms()) terms.push_back({t.exp, Fraction(static_cast<long long>(t.coeff))});
  return QPoly::from_terms(target, std::move(terms));
}

}  // namespace fsing
