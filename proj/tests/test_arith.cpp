#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regprop/arith.hpp"

using namespace regprop;

TEST_CASE("r_part") {
  CHECK(r_part(80, 2) == 16);
  CHECK(r_part(81, 3) == 81);
  CHECK(r_part(35, 2) == 1);
}

TEST_CASE("r_part is multiplicative (sampled)") {
  // deterministic LCG sample of x, y <= 10^6
  unsigned long long s = 12345;
  auto next = [&] {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return (unsigned)(s >> 33) % 1000000 + 1;
  };
  for (int t = 0; t < 200; ++t) {
    const Nat x = next(), y = next();
    for (Nat r : {Nat(2), Nat(3), Nat(7)})
      CHECK(r_part(x * y, r) == r_part(x, r) * r_part(y, r));
  }
}

TEST_CASE("is_prime_power") {
  auto pp = is_prime_power(9);
  CHECK(pp.p == 3);
  CHECK(pp.e == 2);
  pp = is_prime_power(2);
  CHECK(pp.p == 2);
  CHECK(pp.e == 1);
  CHECK_THROWS_AS(is_prime_power(12), NotAPrimePower);
  CHECK_THROWS_AS(is_prime_power(1), TooSmall);
  // a large prime power with a big base
  const Nat big = pow_nat(Nat("1000000007"), 3);
  pp = is_prime_power(big);
  CHECK(pp.p == Nat("1000000007"));
  CHECK(pp.e == 3);
}

TEST_CASE("is_prime spot checks") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(is_prime(Nat("1000000007")));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));  // Carmichael
  CHECK(is_prime(Nat("170141183460469231731687303715884105727")));  // 2^127 - 1
}

TEST_CASE("mult_order") {
  CHECK(mult_order(3, 2) == 1);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(3, 5) == 4);
  CHECK_THROWS_AS(mult_order(6, 3), RDividesQ);
  // m | r - 1
  for (unsigned q = 2; q <= 30; ++q)
    for (Nat r : {Nat(3), Nat(5), Nat(7), Nat(11), Nat(13)}) {
      if (q % r == 0) continue;
      CHECK((r - 1) % mult_order(q, r) == 0);
    }
}

TEST_CASE("mult_order_mod_rpow by lifting") {
  CHECK(mult_order_mod_rpow(2, 3, 3) == 18);  // ord of 2 mod 27
  CHECK(mult_order_mod_rpow(3, 2, 4) == 4);   // ord of 3 mod 16
  // certificate: p^j = 1 mod r^a
  for (Nat p : {Nat(2), Nat(3), Nat(5)})
    for (Nat r : {Nat(2), Nat(3), Nat(7)}) {
      if (p == r) continue;
      for (unsigned a = 1; a <= 4; ++a) {
        const Nat j = mult_order_mod_rpow(p, r, a);
        CHECK(powm(p, j, pow_nat(r, a)) == 1);
      }
    }
}

TEST_CASE("gcd_cyclotomic examples") {
  CHECK(gcd_cyclotomic(2, 4, 2, GcdKind::MP) == 5);
  CHECK(gcd_cyclotomic(3, 6, 4, GcdKind::MM) == 8);
  CHECK(gcd_cyclotomic(3, 3, 5, GcdKind::PP) == 4);
}

TEST_CASE("gcd_cyclotomic vs big-integer gcd") {
  for (unsigned q = 2; q <= 20; ++q)
    for (unsigned i = 1; i <= 12; ++i)
      for (unsigned j = 1; j <= 12; ++j) {
        CHECK(gcd_cyclotomic(q, i, j, GcdKind::MM) ==
              gcd(pow_nat(q, i) - 1, pow_nat(q, j) - 1));
        CHECK(gcd_cyclotomic(q, i, j, GcdKind::MP) ==
              gcd(pow_nat(q, i) - 1, pow_nat(q, j) + 1));
        CHECK(gcd_cyclotomic(q, i, j, GcdKind::PP) ==
              gcd(pow_nat(q, i) + 1, pow_nat(q, j) + 1));
      }
}

TEST_CASE("cyclotomic_r_part examples") {
  CHECK(cyclotomic_r_part(3, 4, +1, 2) == 16);  // (3^4 - 1)_2
  CHECK(cyclotomic_r_part(4, 6, +1, 3) == 9);   // (4^6 - 1)_3
  CHECK(cyclotomic_r_part(3, 2, -1, 2) == 2);   // (3^2 + 1)_2
  CHECK_THROWS_AS(cyclotomic_r_part(6, 2, +1, 3), RDividesQ);
}

TEST_CASE("cyclotomic_r_part vs big-integer valuation") {
  for (unsigned q = 2; q <= 50; ++q)
    for (Nat r : {Nat(2), Nat(3), Nat(5), Nat(7), Nat(11), Nat(13)}) {
      if (q % r == 0) continue;
      for (unsigned i = 1; i <= 60; ++i)
        for (int sign : {+1, -1})
          CHECK(cyclotomic_r_part(q, i, sign, r) == r_part(pow_nat(q, i) - sign, r));
    }
}

TEST_CASE("kth_root") {
  CHECK(kth_root(pow_nat(7, 10), 10) == 7);
  CHECK(kth_root(pow_nat(7, 10) - 1, 10) == 6);
  CHECK(kth_root(Nat(1) << 100, 2) == Nat(1) << 50);
}
