#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regprop/oracle.hpp"

using namespace regprop;

TEST_CASE("group_order_formula") {
  CHECK(group_order_formula({Family::SL, 1, 3, false}) == 24);
  CHECK(group_order_formula({Family::Sp, 2, 3, false}) == 51840);
  CHECK(group_order_formula({Family::SU, 2, 3, false}) == 6048);
  CHECK(group_order_formula({Family::SOodd, 2, 3, false}) == 51840);
  CHECK(group_order_formula({Family::OmegaOdd, 2, 3, false}) == 25920);
  CHECK(group_order_formula({Family::SOplus, 2, 3, false}) ==
        2 * group_order_formula({Family::OmegaPlus, 2, 3, false}));
}

TEST_CASE("build_group SL_2(3)") {
  auto g = build_group({Family::SL, 1, 3, false});
  CHECK(g.order == 24);
  CHECK(g.elements.size() == 24);
  // closure sanity: every product stays inside
  const SmallField& F = *g.field;
  std::unordered_set<std::string> keys;
  for (const FMat& m : g.elements) keys.insert(m.key());
  for (size_t i = 0; i < g.elements.size(); ++i)
    for (size_t j = 0; j < g.elements.size(); ++j)
      CHECK(keys.count(mat_mul(F, g.elements[i], g.elements[j]).key()) == 1);
}

TEST_CASE("element_order") {
  SmallField F(3, 1);
  CHECK(element_order(F, FMat::identity(2)) == 1);
  FMat minus_i;
  minus_i.dim = 2;
  minus_i.at(0, 0) = minus_i.at(1, 1) = F.neg(1);
  CHECK(element_order(F, minus_i) == 2);
  FMat u;  // [[1,1],[0,1]] over GF(3)
  u.dim = 2;
  u.at(0, 0) = u.at(1, 1) = u.at(0, 1) = 1;
  CHECK(element_order(F, u) == 3);
}

TEST_CASE("brute fixtures") {
  CHECK(brute_proportion(GroupSpec{Family::SL, 1, 3, false}, 2) == Ratio(3, 8));
  CHECK(brute_proportion(GroupSpec{Family::SL, 1, 3, true}, 2) == Ratio(3, 4));
  CHECK(brute_proportion(GroupSpec{Family::SL, 1, 2, false}, 3) == Ratio(2, 3));
}

TEST_CASE("torus_regular_check") {
  CHECK(torus_regular_check(12, 2) == Ratio(1, 4));
  CHECK(torus_regular_check(12, 3) == Ratio(1, 3));
  CHECK(torus_regular_check(7, 2) == 1);
  CHECK(torus_regular_check(1, 5) == 1);
}

TEST_CASE("budget and form preconditions") {
  CHECK_THROWS_AS(build_group({Family::Sp, 3, 3, false}), BudgetExceeded);  // |G| > 10^6
  CHECK_THROWS_AS(detail::make_form({Family::SOminus, 2, 5, false}), DomainError);  // q = 1 mod 4
}

TEST_CASE("scalar subgroup matches center_order") {
  for (GroupSpec s : {GroupSpec{Family::SL, 1, 3, false}, GroupSpec{Family::SL, 1, 5, false},
                      GroupSpec{Family::Sp, 2, 3, false}}) {
    auto g = build_group(s);
    CHECK(Nat(scalar_subgroup(g).size()) == center_order(s));
  }
}
