#pragma once

#include <vector>

#include "fsing/arith.hpp"

// Dense univariate polynomials over F_p, coefficients low to high, no
// trailing zeros (the zero polynomial is empty).
namespace fsing::upoly {

using UPoly = std::vector<u64>;

void trim(UPoly& f);
int degree(const UPoly& f);  // -1 for zero
UPoly add(const UPoly& a, const UPoly& b, const PrimeField& F);
UPoly sub(const UPoly& a, const UPoly& b, const PrimeField& F);
UPoly mul(const UPoly& a, const UPoly& b, const PrimeField& F);
// Quotient and remainder; b nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b, const PrimeField& F);
UPoly mod(const UPoly& a, const UPoly& b, const PrimeField& F);
UPoly monic(const UPoly& a, const PrimeField& F);
UPoly gcd(UPoly a, UPoly b, const PrimeField& F);
UPoly derivative(const UPoly& f, const PrimeField& F);
UPoly pow_mod(UPoly base, u64 e, const UPoly& m, const PrimeField& F);
bool is_squarefree(const UPoly& f, const PrimeField& F);
bool is_irreducible(const UPoly& f, const PrimeField& F);
// The lexicographically smallest monic irreducible of degree d (coefficients
// read from the top).
UPoly smallest_irreducible(unsigned d, const PrimeField& F);

}  // namespace fsing::upoly
