#include <doctest.h>

#include "fsing/parse.hpp"
#include "fsing/poly.hpp"
#include "helpers.hpp"

using namespace fsing;
using fsing::testing::cst;
using fsing::testing::random_poly;
using fsing::testing::var;

TEST_CASE("prime field and Fp elements") {
  PrimeField F(7);
  CHECK(F.mul(3, F.inv(3)) == 1);
  CHECK(F.from_int(-1) == 6);
  CHECK_THROWS_AS(PrimeField(8), InvalidArgument);
  Fp a(5, 3), b(5, 4);
  CHECK((a * b).value() == 2);
  CHECK((a * a.inverse()).value() == 1);
  CHECK_THROWS_AS(a + Fp(7, 1), DomainMismatch);
  for (u64 v = 1; v < 13; ++v) CHECK(mul_mod(v, inv_mod(v, 13), 13) == 1);
}

TEST_CASE("fractions are reduced and ordered") {
  Fraction a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(Fraction(1, 3) < Fraction(1, 2));
  CHECK(Fraction::parse("-10/4") == Fraction(-5, 2));
  CHECK(Fraction(-7, 2).floor() == -4);
  CHECK(Fraction(-7, 2).ceil() == -3);
  CHECK_THROWS_AS(Fraction(1, 0), InvalidArgument);
  CHECK_THROWS_AS(Fraction::parse("1/"), ParseError);
  CHECK(ceil_times(Fraction(5, 6), 25) == 21);
  CHECK(floor_times(Fraction(-1, 3), 2) == -1);
  BigInt huge = BigInt(1) << 200;
  CHECK((Fraction(huge) / Fraction(huge * 3)) == Fraction(1, 3));
}

TEST_CASE("poly_arith examples") {
  auto F2 = make_fp_ring(2, 2, {"x", "y"});
  auto x = var(F2, 0), y = var(F2, 1);
  CHECK(poly_pow(x + y, 2).to_string() == "x^2 + y^2");

  auto F5 = make_fp_ring(5, 1, {"x"});
  auto u = var(F5, 0);
  CHECK(poly_arith(u + cst(F5, 1), u - cst(F5, 1), ArithOp::mul).to_string() == "x^2 + 4");
  CHECK_THROWS_AS(poly_arith(u, u, ArithOp::pow), InvalidArgument);

  auto F7 = make_fp_ring(7, 2, {"x", "y"});
  auto f = poly_pow(var(F7, 0), 2) + poly_pow(var(F7, 1), 3);
  Poly naive = cst(F7, 1);
  for (int i = 0; i < 3; ++i) naive = naive * f;
  CHECK(poly_pow(f, 3) == naive);
  CHECK(pow_by_digits(f, 3) == naive);
  // 3 x^4 y^3 + 3 x^2 y^6 : multinomial coefficients mod 7
  CHECK(poly_pow(f, 3).to_string() == "y^9 + 3*x^2*y^6 + 3*x^4*y^3 + x^6");
}

TEST_CASE("arithmetic checks arity and domain") {
  auto a = make_fp_ring(5, 2), b = make_fp_ring(5, 3), c = make_fp_ring(7, 2);
  CHECK_THROWS_AS(var(a, 0) + var(b, 0), ArityMismatch);
  CHECK_THROWS_AS(var(a, 0) * var(c, 0), DomainMismatch);
}

TEST_CASE("canonical rendering") {
  auto R = make_fp_ring(7, 2, {"x", "y"});
  auto x = var(R, 0), y = var(R, 1);
  CHECK((poly_pow(x, 3) * y + cst(R, 2) * poly_pow(y, 2) + cst(R, 6)).to_string() == "x^3*y + 2*y^2 + 6");
  auto Q = make_q_ring(2, {"x", "y"});
  CHECK(parse_poly("x - y/2", Q).to_string() == "x - 1/2*y");
  CHECK(QPoly(Q).to_string() == "0");
}

TEST_CASE("pe_basis_decompose examples") {
  auto R = make_fp_ring(3, 1, {"x"});
  auto parts = pe_basis_decompose(poly_pow(var(R, 0), 9), 2);
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->first == ExponentVector{0});
  CHECK(parts.begin()->second == var(R, 0));
  CHECK(pe_basis_decompose(Poly(R), 1).empty());

  auto R2 = make_fp_ring(2, 2, {"x", "y"});
  auto x = var(R2, 0), y = var(R2, 1);
  auto d = pe_basis_decompose(poly_pow(x, 3) * y + x, 1);
  REQUIRE(d.size() == 2);
  CHECK(d.at(ExponentVector{1, 1}) == x);
  CHECK(d.at(ExponentVector{1, 0}) == cst(R2, 1));
  CHECK(pe_basis_reconstruct(R2, d, 1) == poly_pow(x, 3) * y + x);
}

TEST_CASE("pe_basis_decompose reconstructs random polynomials") {
  std::mt19937_64 rng(11);
  for (u64 p : {2, 3, 5}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto R = make_fp_ring(p, n);
      for (int trial = 0; trial < 15; ++trial) {
        Poly g = random_poly(R, rng, 12, 8);
        for (unsigned e = 1; e <= 3; ++e) {
          auto parts = pe_basis_decompose(g, e);
          const u64 q = checked_pow(p, e);
          for (const auto& [mu, h] : parts) {
            CHECK_FALSE(h.is_zero());
            for (std::size_t i = 0; i < n; ++i) CHECK(mu[i] < q);
          }
          CHECK(pe_basis_reconstruct(R, parts, e) == g);
        }
      }
    }
  }
}

TEST_CASE("freshman's dream and Frobenius power") {
  std::mt19937_64 rng(5);
  for (u64 p : {2, 3, 5, 7}) {
    auto R = make_fp_ring(p, 2);
    for (int trial = 0; trial < 10; ++trial) {
      Poly a = random_poly(R, rng, 5, 4), b = random_poly(R, rng, 5, 4);
      CHECK(poly_pow(a + b, p) == poly_pow(a, p) + poly_pow(b, p));
      CHECK(frobenius_power(a, 1) == poly_pow(a, p));
      CHECK(frobenius_power(a, 2) == poly_pow(poly_pow(a, p), p));
    }
  }
}

TEST_CASE("pow_by_digits and truncated_pow agree with repeated multiplication") {
  std::mt19937_64 rng(9);
  auto R = make_fp_ring(3, 2);
  for (int trial = 0; trial < 10; ++trial) {
    Poly f = random_poly(R, rng, 3, 3);
    for (u64 n : {0, 1, 4, 7, 11}) {
      Poly naive = cst(R, 1);
      for (u64 i = 0; i < n; ++i) naive = naive * f;
      CHECK(pow_by_digits(f, n) == naive);
      std::vector<Poly::Term> kept;
      for (const auto& t : naive.terms()) {
        bool small = true;
        for (std::size_t i = 0; i < 2; ++i) small = small && t.exp[i] < 5;
        if (small) kept.push_back(t);
      }
      CHECK(truncated_pow(f, n, 5) == Poly::from_terms(R, kept));
    }
  }
}

TEST_CASE("canonical form: a - b is zero exactly when the term lists agree") {
  std::mt19937_64 rng(3);
  auto R = make_fp_ring(5, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Poly a = random_poly(R, rng, 6, 5), b = random_poly(R, rng, 6, 5);
    CHECK((a - b).is_zero() == (a.terms() == b.terms()));
    CHECK(((a + b) - b) == a);
    CHECK((a * b) == (b * a));
  }
}

TEST_CASE("reduce_mod_p") {
  auto Q = make_q_ring(2, {"x", "y"});
  CHECK(reduce_mod_p(parse_poly("x^2 + y^3", Q), 7).to_string() == "y^3 + x^2");
  CHECK_THROWS_AS(reduce_mod_p(parse_poly("x^2/2", Q), 2), BadPrime);
  CHECK(reduce_mod_p(parse_poly("3/4*x + 5", Q), 7).to_string() == "6*x + 5");
  CHECK(reduce_mod_p(parse_poly("7*x + y", Q), 7).to_string() == "y");
}

TEST_CASE("reduce_mod_p is multiplicative on admissible fractions") {
  std::mt19937_64 rng(21);
  auto Q = make_q_ring(2);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6), ex(0, 3);
  auto random_q = [&] {
    std::vector<QPoly::Term> terms;
    for (int i = 0; i < 4; ++i) terms.push_back({ExponentVector{static_cast<std::uint32_t>(ex(rng)), static_cast<std::uint32_t>(ex(rng))}, Fraction(num(rng), den(rng))});
    return QPoly::from_terms(Q, terms);
  };
  for (u64 p : {7, 11, 13}) {
    for (int trial = 0; trial < 20; ++trial) {
      QPoly a = random_q(), b = random_q();
      CHECK(reduce_mod_p(a * b, p) == reduce_mod_p(a, p) * reduce_mod_p(b, p));
      CHECK(reduce_mod_p(a + b, p) == reduce_mod_p(a, p) + reduce_mod_p(b, p));
    }
  }
}

TEST_CASE("lift_to_q inverts reduce_mod_p") {
  std::mt19937_64 rng(4);
  auto R = make_fp_ring(5, 2);
  auto Q = make_q_ring(2);
  for (int trial = 0; trial < 20; ++trial) {
    Poly f = random_poly(R, rng, 6, 6);
    CHECK(reduce_mod_p(lift_to_q(f, Q), R) == f);
  }
}
