#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsing/plinear.hpp"
#include "fsing/poly.hpp"

namespace fsing {

// y^2 = h(x) with h squarefree over Q of degree 3, 5 or 7.
class HyperellipticCurve {
 public:
  explicit HyperellipticCurve(QPoly h);
  const QPoly& h() const { return h_; }
  unsigned genus() const { return genus_; }
  // Coefficients of h, low to high.
  const std::vector<Fraction>& coefficients() const { return coeffs_; }
  std::string to_string() const;  // "y^2 = x^3 + x"

 private:
  QPoly h_;
  std::vector<Fraction> coeffs_;
  unsigned genus_;
};

// "y^2 = <polynomial in x>".
HyperellipticCurve parse_curve(std::string_view text);

// Cartier-Manin matrix: A_ij = coefficient of x^{ip-j} in h^{(p-1)/2} mod p,
// 1 <= i, j <= g.  Throws BadPrime for p = 2, p dividing a denominator or the
// leading coefficient, or h mod p not squarefree.
PLinearMap cartier_manin(const HyperellipticCurve& C, u64 p);

enum class Ordinarity { ordinary_semisimple, non_semisimple, bad_prime };
std::string_view to_string(Ordinarity s);

struct OrdinarityRecord {
  u64 p = 0;
  Ordinarity status = Ordinarity::bad_prime;
  std::optional<u64> det;
  bool operator==(const OrdinarityRecord&) const = default;
};

OrdinarityRecord frobenius_semisimple_on_h1(const HyperellipticCurve& C, u64 p);

struct OrdinarityScan {
  std::vector<OrdinarityRecord> records;  // ascending p
  std::size_t semisimple = 0;
  std::size_t non_semisimple = 0;
  std::size_t bad = 0;
};

// Every prime p <= bound; `jobs` workers, output independent of `jobs`.
OrdinarityScan ordinarity_scan(const HyperellipticCurve& C, u64 bound, unsigned jobs = 1);

// TSV with header "p  status  det"; det is empty for bad primes.
std::string format_ordinarity(const OrdinarityScan& scan);
// "# semisimple=4 non-semisimple=5 bad=1"
std::string ordinarity_summary(const OrdinarityScan& scan);

}  // namespace fsing
