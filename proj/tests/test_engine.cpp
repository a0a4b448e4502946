#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regprop/engine.hpp"

using namespace regprop;

TEST_CASE("enumeration path fixtures") {
  CHECK(exact_proportion_enum({Family::SL, 1, 3, false}, 2).value == Ratio(3, 8));
  CHECK(exact_proportion_enum({Family::SL, 1, 2, false}, 3).value == Ratio(2, 3));
  CHECK(exact_proportion_enum({Family::SU, 2, 3, false}, 2).value == Ratio(13, 32));
  CHECK(exact_proportion_enum({Family::Sp, 2, 3, false}, 2).value == Ratio(29, 128));
  CHECK(exact_proportion_enum({Family::SOplus, 2, 3, false}, 2).value == Ratio(9, 64));
}

TEST_CASE("dp path equals enumeration") {
  CHECK(exact_proportion_dp({Family::SL, 1, 3, false}, 2).value == Ratio(3, 8));
  CHECK(exact_proportion_dp({Family::Sp, 2, 3, false}, 2).value == Ratio(29, 128));
  const Nat qset[] = {2, 3, 4, 5, 7, 8, 9};
  const Nat rset[] = {2, 3, 5, 7};
  for (Family f : {Family::SL, Family::SU, Family::Sp, Family::SOodd, Family::SOplus,
                   Family::SOminus}) {
    const unsigned min_n = (f == Family::SL || f == Family::SU) ? 1 : 2;
    for (unsigned n = min_n; n <= 6; ++n)
      for (const Nat& q : qset) {
        if (is_orthogonal(f) && q % 2 == 0) continue;
        for (const Nat& r : rset) {
          if (q % r == 0) continue;
          GroupSpec s{f, n, q, false};
          CHECK(exact_proportion_dp(s, r).value == exact_proportion_enum(s, r).value);
        }
      }
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(exact_proportion_dp({Family::SL, 1, 4, false}, 2), RDividesQ);
  CHECK_THROWS_AS(exact_proportion_dp({Family::SOodd, 2, 4, false}, 3), EvenQOrthogonal);
  CHECK_THROWS_AS(exact_proportion_dp({Family::OmegaOdd, 2, 3, false}, 2), UnsupportedFamily);
  CHECK_THROWS_AS(exact_proportion_enum({Family::SL, 70, 3, false}, 2), CapExceeded);
}

TEST_CASE("center orders") {
  CHECK(center_order({Family::SL, 1, 3, false}) == 2);
  CHECK(center_order({Family::SL, 3, 5, false}) == 4);
  CHECK(center_order({Family::SU, 2, 2, false}) == 3);
  CHECK(center_order({Family::Sp, 2, 3, false}) == 2);
  CHECK(center_order({Family::SOodd, 2, 3, false}) == 1);
  CHECK(center_order({Family::SOplus, 2, 3, false}) == 2);
  CHECK(center_order({Family::OmegaPlus, 2, 3, false}) == 2);   // 3^2 = 1 mod 4
  CHECK(center_order({Family::OmegaMinus, 2, 3, false}) == 1);  // 9 != 3 mod 4
  CHECK(center_order({Family::OmegaMinus, 3, 3, false}) == 2);  // 27 = 3 mod 4
}

TEST_CASE("projective proportions") {
  CHECK(projective_proportion({Family::SL, 1, 3, true}, 2).value == Ratio(3, 4));
  CHECK(projective_proportion({Family::Sp, 2, 3, true}, 2).value == Ratio(29, 64));
  CHECK(projective_proportion({Family::SU, 2, 3, true}, 2).value == Ratio(13, 32));
  CHECK(projective_proportion({Family::SL, 1, 3, true}, 2).method == Method::Relation);
}

TEST_CASE("omega proportions") {
  CHECK(omega_proportion({Family::OmegaOdd, 2, 3, false}, 2).value == Ratio(29, 64));
  CHECK(omega_proportion({Family::OmegaPlus, 2, 3, false}, 2).value == Ratio(9, 32));
  CHECK_THROWS_AS(omega_proportion({Family::OmegaOdd, 2, 3, false}, 3), UnsupportedExact);
}

TEST_CASE("proportion dispatcher and range") {
  for (Family f : {Family::SL, Family::Sp, Family::SOminus}) {
    const unsigned n = f == Family::SL ? 3 : 2;
    for (Nat r : {Nat(2), Nat(5), Nat(101)}) {
      const Ratio v = proportion({f, n, 3, false}, r).value;
      CHECK(v > 0);
      CHECK(v <= 1);
    }
  }
  // large r dividing no torus order: everything is r-regular
  CHECK(proportion({Family::SL, 1, 3, false}, 101).value == 1);
}

TEST_CASE("lower bound with trivially r-regular classes (A = 1 form)") {
  // p_r(G) is at least the total weight of classes whose torus has trivial r-part
  for (Family f : {Family::SL, Family::Sp}) {
    GroupSpec s{f, f == Family::SL ? 4u : 3u, 3, false};
    for (Nat r : {Nat(2), Nat(5), Nat(13)}) {
      Ratio mass = 0;
      for_each_f_class(s.family, s.n, [&](const Ratio& w, const TorusShape& sh) {
        if (torus_r_part(sh, s.q, r) == 1) mass += w;
      });
      CHECK(proportion(s, r).value >= mass);
    }
  }
}

TEST_CASE("huge q via the valuation path") {
  // q = 3^40: only valuations of q^b +- 1 enter the DP
  const Nat q = pow_nat(3, 40);
  const Ratio v = exact_proportion_dp({Family::SL, 3, q, false}, 2).value;
  CHECK(v > 0);
  CHECK(v <= 1);
  // (q-1)_2 = (3^40-1)_2 = 8: i even path with q = 3 mod 4 -> i_2 (q+1)_2
  CHECK(cyclotomic_r_part(3, 40, +1, 2) == 32);
  CHECK(r_part(q - 1, 2) == 32);
}
