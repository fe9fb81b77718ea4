#include <doctest.h>

#include <random>
#include <set>

#include "fsing/fq.hpp"

using namespace fsing;
namespace up = fsing::upoly;

TEST_CASE("univariate arithmetic over F_p") {
  PrimeField F(5);
  up::UPoly a{1, 2, 3}, b{4, 1};
  auto [q, r] = up::divmod(up::add(up::mul(a, b, F), {2}, F), b, F);
  CHECK(q == a);
  CHECK(r == up::UPoly{2});
  CHECK(up::degree({}) == -1);
  CHECK(up::gcd(up::mul(a, b, F), up::mul(b, {1, 1}, F), F) == up::monic(b, F));
  CHECK(up::derivative({1, 2, 3}, F) == up::UPoly{2, 1});
  CHECK(up::is_squarefree({4, 0, 1}, F));         // x^2 - 1
  CHECK_FALSE(up::is_squarefree({1, 2, 1}, F));   // (x + 1)^2
  CHECK(up::is_irreducible({2, 0, 1}, F));        // x^2 + 2
  CHECK_FALSE(up::is_irreducible({4, 0, 1}, F));
  CHECK(up::smallest_irreducible(2, PrimeField(2)) == up::UPoly{1, 1, 1});
}

TEST_CASE("irreducibility in low degree means no roots") {
  // degree <= 3 over F_3: irreducible iff no root
  PrimeField F(3);
  for (u64 code = 0; code < 27 * 3; ++code) {
    up::UPoly f{code % 3, (code / 3) % 3, (code / 9) % 3, 1};
    if (code >= 27) f = {code % 3, (code / 3) % 3, 1};
    up::trim(f);
    bool root = false;
    for (u64 x = 0; x < 3; ++x) {
      u64 v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % 3;
      root = root || v == 0;
    }
    CHECK(up::is_irreducible(f, F) == !root);
  }
}

TEST_CASE("Conway table entries are primitive and norm compatible") {
  for (u64 p : {2, 3, 5, 7}) {
    PrimeField F(p);
    for (unsigned e = 1; e <= 6; ++e) {
      auto m = conway_polynomial(p, e);
      REQUIRE(up::degree(m) == static_cast<int>(e));
      CHECK(up::is_irreducible(m, F));
      auto K = Fq::make(p, e);
      CHECK(K->modulus() == m);
      const u64 q = K->q();
      // the class of t has order exactly q - 1
      auto g = K->generator();
      CHECK(K->pow(g, q - 1) == 1);
      u64 rest = q - 1;
      for (u64 r = 2; r <= rest; ++r) {
        if (rest % r) continue;
        CHECK(K->pow(g, (q - 1) / r) != 1);
        while (rest % r == 0) rest /= r;
      }
      // norm of t to each subfield is a root of that subfield's entry
      for (unsigned d = 1; d < e; ++d) {
        if (e % d) continue;
        auto sub = conway_polynomial(p, d);
        auto n = K->pow(g, (q - 1) / (checked_pow(p, d) - 1));
        u64 v = 0;
        for (std::size_t i = sub.size(); i-- > 0;) v = K->add(K->mul(v, n), sub[i]);
        CHECK_MESSAGE(v == 0, "p = " << p << " e = " << e << " d = " << d);
      }
    }
  }
  CHECK(conway_polynomial(11, 7).empty());
  auto K = Fq::make(11, 7);
  CHECK(up::is_irreducible(K->modulus(), PrimeField(11)));
}

TEST_CASE("F_q field axioms") {
  std::mt19937_64 rng(67);
  for (auto [p, e] : std::vector<std::pair<u64, unsigned>>{{2, 2}, {3, 2}, {2, 4}, {5, 3}, {13, 1}}) {
    auto K = Fq::make(p, e);
    std::uniform_int_distribution<u64> pick(0, K->q() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      u64 a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(K->mul(a, K->add(b, c)) == K->add(K->mul(a, b), K->mul(a, c)));
      CHECK(K->add(a, K->neg(a)) == 0);
      CHECK(K->sub(a, b) == K->add(a, K->neg(b)));
      if (a) CHECK(K->mul(a, K->inv(a)) == 1);
      // Frobenius is additive, multiplicative and invertible
      CHECK(K->frob(K->add(a, b)) == K->add(K->frob(a), K->frob(b)));
      CHECK(K->frob(K->mul(a, b)) == K->mul(K->frob(a), K->frob(b)));
      for (unsigned k = 1; k <= e; ++k) CHECK(K->pow(K->frob_inverse(a, k), checked_pow(p, k)) == a);
      CHECK(K->from_coeffs(K->coeffs(a)) == a);
    }
  }
  auto F4 = Fq::make(2, 2);
  auto g = F4->generator();
  CHECK(F4->mul(g, g) == F4->add(g, 1));
  CHECK(F4->to_string(F4->mul(g, g)) == "g + 1");
  CHECK(F4->to_string(0) == "0");
  CHECK_THROWS_AS(Fq::with_modulus(2, {1, 0, 1}), InvalidArgument);
  CHECK(Fq::with_modulus(2, {1, 1, 1})->same(*F4));
}

TEST_CASE("prime field elements of F_q are the Frobenius fixed points") {
  auto K = Fq::make(3, 3);
  std::set<u64> fixed;
  for (u64 a = 0; a < K->q(); ++a)
    if (K->frob(a) == a) fixed.insert(a);
  CHECK(fixed == std::set<u64>{0, 1, 2});
  for (u64 a : fixed) CHECK(K->in_prime_field(a));
}
