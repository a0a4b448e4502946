#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regprop/weyl.hpp"

#include <cmath>

using namespace regprop;

static unsigned count_partitions(unsigned n) {
  unsigned c = 0;
  for_each_partition(n, [&](const CycleType&) { ++c; });
  return c;
}

static unsigned count_signed(unsigned n) {
  unsigned c = 0;
  for_each_signed_type(n, [&](const SignedCycleType&) { ++c; });
  return c;
}

TEST_CASE("partition counts and order") {
  CHECK(count_partitions(1) == 1);
  CHECK(count_partitions(3) == 3);
  CHECK(count_partitions(5) == 7);
  // deterministic order, largest part first
  std::vector<std::vector<unsigned>> seen;
  for_each_partition(3, [&](const CycleType& ct) {
    std::vector<unsigned> flat;
    for (auto [b, m] : ct.parts)
      for (unsigned k = 0; k < m; ++k) flat.push_back(b);
    seen.push_back(flat);
  });
  CHECK(seen == std::vector<std::vector<unsigned>>{{3}, {2, 1}, {1, 1, 1}});
  CHECK_THROWS_AS(count_partitions(kPartitionCap + 1), CapExceeded);
}

TEST_CASE("signed type counts") {
  CHECK(count_signed(1) == 2);
  CHECK(count_signed(2) == 5);
  CHECK(count_signed(3) == 10);
}

TEST_CASE("class weights") {
  for_each_partition(5, [&](const CycleType& ct) {
    if (ct.parts.size() == 1 && ct.parts[0].first == 5) CHECK(class_weight(ct) == Ratio(1, 5));
    if (ct.parts.size() == 1 && ct.parts[0].first == 1) CHECK(class_weight(ct) == Ratio(1, 120));
  });
  for_each_partition(3, [&](const CycleType& ct) {
    if (ct.parts.size() == 2) CHECK(class_weight(ct) == Ratio(1, 2));  // {2,1}
  });
}

TEST_CASE("weights sum to 1") {
  for (unsigned n = 1; n <= 14; ++n) {
    Ratio sum = 0;
    for_each_partition(n, [&](const CycleType& ct) { sum += class_weight(ct); });
    CHECK(sum == 1);
    Ratio ssum = 0;
    for_each_signed_type(n, [&](const SignedCycleType& s) { ssum += signed_class_weight(s); });
    CHECK(ssum == 1);
  }
}

TEST_CASE("signed weights: examples and parity split") {
  for_each_signed_type(1, [&](const SignedCycleType& s) {
    CHECK(signed_class_weight(s) == Ratio(1, 2));
  });
  for_each_signed_type(2, [&](const SignedCycleType& s) {
    if (s.entries.size() == 1 && s.entries[0].len == 2 && s.entries[0].neg == 1)
      CHECK(signed_class_weight(s) == Ratio(1, 4));
  });
  // half the weight of C_2 wr S_n has an even number of negative cycles
  for (unsigned n = 1; n <= 14; ++n) {
    Ratio even = 0;
    for_each_signed_type(n, [&](const SignedCycleType& s) {
      if (s.negative_cycles() % 2 == 0) even += signed_class_weight(s);
    });
    CHECK(even == Ratio(1, 2));
  }
}

TEST_CASE("stirling numbers") {
  CHECK(stirling_first(4, 2) == 11);
  CHECK(stirling_first(4, 1) == 6);
  CHECK(stirling_first(7, 7) == 1);
  for (unsigned n = 1; n <= 12; ++n) {
    Nat sum = 0;
    for (unsigned k = 1; k <= n; ++k) sum += stirling_first(n, k);
    CHECK(sum == factorial(n));
  }
  // c(n,k) = number of partitions-weighted classes with k cycles
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      Ratio prop = 0;
      for_each_partition(n, [&](const CycleType& ct) {
        unsigned cycles = 0;
        for (auto [b, m] : ct.parts) cycles += m;
        if (cycles == k) prop += class_weight(ct);
      });
      CHECK(prop == Ratio(stirling_first(n, k), factorial(n)));
    }
  CHECK_THROWS_AS(stirling_first(5, 6), DomainError);
}

TEST_CASE("s_no_m") {
  CHECK(s_no_m(4, 2) == Ratio(3, 8));
  CHECK(s_no_m(3, 2) == Ratio(1, 2));
  CHECK(s_no_m(1, 5) == 1);
  // matches direct enumeration of S_d
  for (unsigned d = 1; d <= 8; ++d)
    for (unsigned m = 2; m <= 8; ++m) {
      Ratio direct = 0;
      for_each_partition(d, [&](const CycleType& ct) {
        for (auto [b, mult] : ct.parts)
          if (b % m == 0) return;
        direct += class_weight(ct);
      });
      CHECK(direct == s_no_m(d, m));
    }
}

TEST_CASE("c_m constant") {
  CHECK(std::abs(c_m_constant(2) - 0.7978845608) < 1e-9);
  CHECK(std::abs(c_m_constant(3) - 1.0651) < 1e-3);
  for (unsigned m = 2; m <= 30; ++m) CHECK(c_m_constant(m) >= c_m_constant(2) - 1e-12);
}
