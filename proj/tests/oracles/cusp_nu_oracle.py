#!/usr/bin/env python3
"""Per-prime nu oracle for f = x^2 + y^3.

nu(e) = max{ r : f^r not in (x^q, y^q) }, q = p^e, computed by expanding
f^r = sum_k C(r,k) x^(2k) y^(3(r-k)) with coefficients reduced mod p.
The F-pure threshold lies in (nu/q, (nu+1)/q].  The log canonical threshold
of the cusp is 5/6, so the two thresholds agree exactly when 5/6 lies in every
bracket; otherwise the bracket upper endpoint stabilises and is the jump.

Output columns: p, expected verdict, tau jump (the F-pure threshold).
"""
from fractions import Fraction
import sys


def primes_upto(n):
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def binom_nonzero_mod_p(r, k, p):
    # Lucas: C(r, k) != 0 mod p iff every base-p digit of k is <= that of r
    while k:
        if k % p > r % p:
            return False
        r //= p
        k //= p
    return True


def outside(r, p, q):
    # terms x^(2k) y^(3(r-k)) with 2k < q and 3(r-k) < q
    lo = max(0, r - (q - 1) // 3)
    hi = min(r, (q - 1) // 2)
    for k in range(lo, hi + 1):
        if binom_nonzero_mod_p(r, k, p):
            return True
    return False


def nu(p, e):
    q = p ** e
    r = 0
    while outside(r + 1, p, q):
        r += 1
    return r


def main():
    bound = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    lct = Fraction(5, 6)
    print("p\tverdict\ttau_jump")
    for p in primes_upto(bound):
        brackets = []
        for e in (1, 2, 3):
            n = nu(p, e)
            brackets.append((Fraction(n, p ** e), Fraction(n + 1, p ** e)))
        if all(lo < lct <= hi for lo, hi in brackets):
            print(f"{p}\tall-equal\t5/6")
            continue
        # terminating threshold: upper endpoints agree across levels
        uppers = {hi for _, hi in brackets}
        assert len(uppers) == 1, (p, brackets)
        fpt = uppers.pop()
        print(f"{p}\tfirst-mismatch\t{fpt.numerator}/{fpt.denominator}")


if __name__ == "__main__":
    main()
