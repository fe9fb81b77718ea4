#include "fsing/curves.hpp"

#include <cctype>
#include <sstream>

#include "fsing/parallel.hpp"
#include "fsing/parse.hpp"
#include "fsing/upoly.hpp"

namespace fsing {

namespace {

using QUPoly = std::vector<Fraction>;

void trim_q(QUPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

QUPoly mod_q(QUPoly a, const QUPoly& b) {
  trim_q(a);
  while (a.size() >= b.size()) {
    Fraction c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim_q(a);
  }
  return a;
}

std::size_t gcd_degree_q(QUPoly a, QUPoly b) {
  trim_q(a);
  trim_q(b);
  while (!b.empty()) {
    QUPoly r = mod_q(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() - 1;
}

}  // namespace

HyperellipticCurve::HyperellipticCurve(QPoly h) : h_(std::move(h)) {
  if (h_.arity() != 1) throw InvalidArgument("curve polynomial must be univariate");
  if (h_.is_zero()) throw InvalidArgument("curve polynomial is zero");
  coeffs_.assign(h_.total_degree() + 1, Fraction(0));
  for (const auto& t : h_.terms()) coeffs_[t.exp[0]] = t.coeff;
  const std::size_t d = coeffs_.size() - 1;
  if (d != 3 && d != 5 && d != 7) throw InvalidArgument("degree of h must be 3, 5 or 7");
  QUPoly deriv;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) deriv.push_back(coeffs_[i] * Fraction(static_cast<long long>(i)));
  if (gcd_degree_q(coeffs_, deriv) != 0) throw InvalidArgument("h is not squarefree");
  genus_ = static_cast<unsigned>((d - 1) / 2);
}

std::string HyperellipticCurve::to_string() const { return "y^2 = " + h_.to_string(); }

HyperellipticCurve parse_curve(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected 'y^2 = ...'", 0);
  std::string lhs;
  for (char c : text.substr(0, eq))
    if (!std::isspace(static_cast<unsigned char>(c))) lhs += c;
  if (lhs != "y^2") throw ParseError("left side must be y^2", 0);
  QPoly h(make_q_ring(1, {"x"}));
  try {
    h = parse_poly(text.substr(eq + 1), make_q_ring(1, {"x"}));
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                     eq + 1 + e.position);
  }
  return HyperellipticCurve(std::move(h));
}

PLinearMap cartier_manin(const HyperellipticCurve& C, u64 p) {
  if (p == 2) throw BadPrime(p, "characteristic 2");
  if (!is_prime(p)) throw InvalidArgument("not a prime: " + std::to_string(p));
  PrimeField F(p);
  FpDomain D{F};
  upoly::UPoly h;
  for (const auto& c : C.coefficients()) h.push_back(D.from_fraction(c));
  if (h.back() == 0) throw BadPrime(p, "divides the leading coefficient");
  upoly::trim(h);
  if (!upoly::is_squarefree(h, F)) throw BadPrime(p, "divides the discriminant");

  upoly::UPoly power{1}, base = h;
  for (u64 n = (p - 1) / 2; n; n >>= 1) {
    if (n & 1) power = upoly::mul(power, base, F);
    if (n > 1) base = upoly::mul(base, base, F);
  }
  const unsigned g = C.genus();
  FqMatrix A(g, FqVector(g, 0));
  for (unsigned i = 1; i <= g; ++i)
    for (unsigned j = 1; j <= g; ++j) {
      u64 k = i * p - j;
      A[i - 1][j - 1] = k < power.size() ? power[k] : 0;
    }
  return PLinearMap(Fq::make(p, 1), A);
}

std::string_view to_string(Ordinarity s) {
  switch (s) {
    case Ordinarity::ordinary_semisimple: return "ordinary-semisimple";
    case Ordinarity::non_semisimple: return "non-semisimple";
    case Ordinarity::bad_prime: return "bad-prime";
  }
  return "?";
}

OrdinarityRecord frobenius_semisimple_on_h1(const HyperellipticCurve& C, u64 p) {
  OrdinarityRecord r;
  r.p = p;
  try {
    PLinearMap A = cartier_manin(C, p);
    u64 det = determinant(*A.field(), A.matrix());
    r.det = det;
    r.status = is_semisimple(A) ? Ordinarity::ordinary_semisimple : Ordinarity::non_semisimple;
  } catch (const BadPrime&) {
    r.status = Ordinarity::bad_prime;
  }
  return r;
}

OrdinarityScan ordinarity_scan(const HyperellipticCurve& C, u64 bound, unsigned jobs) {
  if (bound < 3) throw InvalidArgument("prime bound must be at least 3");
  auto primes = primes_upto(bound);
  OrdinarityScan scan;
  scan.records = parallel_map<OrdinarityRecord>(primes.size(), jobs,
                                                [&](std::size_t i) { return frobenius_semisimple_on_h1(C, primes[i]); });
  for (const auto& r : scan.records) {
    switch (r.status) {
      case Ordinarity::ordinary_semisimple: ++scan.semisimple; break;
      case Ordinarity::non_semisimple: ++scan.non_semisimple; break;
      case Ordinarity::bad_prime: ++scan.bad; break;
    }
  }
  return scan;
}

std::string format_ordinarity(const OrdinarityScan& scan) {
  std::ostringstream os;
  os << "p\tstatus\tdet\n";
  for (const auto& r : scan.records) {
    os << r.p << '\t' << to_string(r.status) << '\t';
    if (r.det) os << *r.det;
    os << '\n';
  }
  return os.str();
}

std::string ordinarity_summary(const OrdinarityScan& scan) {
  std::ostringstream os;
  os << "# semisimple=" << scan.semisimple << " non-semisimple=" << scan.non_semisimple << " bad=" << scan.bad;
  return os.str();
}

}  // namespace fsing
