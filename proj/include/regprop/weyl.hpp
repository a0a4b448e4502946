// Weyl-group combinatorics: partitions of n (F-classes of S_n), signed cycle
// types (F-classes of the hyperoctahedral group C_2 wr S_n), their class
// weights, unsigned Stirling numbers of the first kind, and the no-cycle-
// divisible-by-m statistic s_{!m}(d) with its asymptotic constant.
#pragma once

#include "arith.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <utility>
#include <vector>

namespace regprop {

inline constexpr unsigned kPartitionCap = 60;

// A partition of n as (length, multiplicity) pairs, lengths strictly
// decreasing.
struct CycleType {
  std::vector<std::pair<unsigned, unsigned>> parts;
  unsigned n = 0;
};

// Signed cycle type of C_2 wr S_n: per length, multiplicities of positive and
// negative cycles.
struct SignedCycleType {
  struct Entry {
    unsigned len;
    unsigned pos;
    unsigned neg;
  };
  std::vector<Entry> entries;
  unsigned n = 0;

  unsigned negative_cycles() const {
    unsigned k = 0;
    for (auto& e : entries) k += e.neg;
    return k;
  }
};

// Enumerate partitions of n in lexicographic order of decreasing parts,
// largest part first ({n}, {n-1,1}, ...).
inline void for_each_partition(unsigned n, const std::function<void(const CycleType&)>& fn) {
  if (n < 1 || n > kPartitionCap) throw CapExceeded("for_each_partition: n out of range");
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned maxpart) {
    if (remaining == 0) {
      CycleType ct;
      ct.n = n;
      for (unsigned p : parts) {
        if (!ct.parts.empty() && ct.parts.back().first == p)
          ++ct.parts.back().second;
        else
          ct.parts.push_back({p, 1});
      }
      fn(ct);
      return;
    }
    for (unsigned p = std::min(remaining, maxpart); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

// Enumerate signed cycle types of n: all splittings n = a + b with a partition
// of a carrying + signs and a partition of b carrying - signs.
inline void for_each_signed_type(unsigned n, const std::function<void(const SignedCycleType&)>& fn) {
  if (n < 1 || n > kPartitionCap) throw CapExceeded("for_each_signed_type: n out of range");
  auto emit = [&](const CycleType& plus, const CycleType& minus) {
    SignedCycleType s;
    s.n = n;
    // merge by length (both inputs have decreasing lengths)
    size_t i = 0, j = 0;
    while (i < plus.parts.size() || j < minus.parts.size()) {
      unsigned lp = i < plus.parts.size() ? plus.parts[i].first : 0;
      unsigned lm = j < minus.parts.size() ? minus.parts[j].first : 0;
      if (lp == lm) {
        s.entries.push_back({lp, plus.parts[i].second, minus.parts[j].second});
        ++i, ++j;
      } else if (lp > lm) {
        s.entries.push_back({lp, plus.parts[i].second, 0});
        ++i;
      } else {
        s.entries.push_back({lm, 0, minus.parts[j].second});
        ++j;
      }
    }
    fn(s);
  };
  for (unsigned a = n + 1; a-- > 0;) {
    const unsigned b = n - a;
    if (a == 0) {
      for_each_partition(b, [&](const CycleType& mi) { emit(CycleType{{}, 0}, mi); });
    } else if (b == 0) {
      for_each_partition(a, [&](const CycleType& pl) { emit(pl, CycleType{{}, 0}); });
    } else {
      for_each_partition(a, [&](const CycleType& pl) {
        for_each_partition(b, [&](const CycleType& mi) { emit(pl, mi); });
      });
    }
  }
}

// |C|/|S_n| for the class with this cycle type: 1 / prod_b b^{m_b} m_b!.
inline Ratio class_weight(const CycleType& ct) {
  Nat denom = 1;
  for (auto [b, m] : ct.parts) {
    denom *= pow_nat(b, m);
    for (unsigned k = 2; k <= m; ++k) denom *= k;
  }
  return Ratio(1, denom);
}

// |C|/|C_2 wr S_n| for a signed class: 1 / prod_b (2b)^{m+} m+! (2b)^{m-} m-!.
inline Ratio signed_class_weight(const SignedCycleType& sct) {
  Nat denom = 1;
  for (auto& e : sct.entries) {
    denom *= pow_nat(2 * e.len, e.pos + e.neg);
    for (unsigned k = 2; k <= e.pos; ++k) denom *= k;
    for (unsigned k = 2; k <= e.neg; ++k) denom *= k;
  }
  return Ratio(1, denom);
}

// ---- Stirling numbers of the first kind ----------------------------------

inline constexpr unsigned kStirlingCap = 500;

namespace detail {

class StirlingTable {
 public:
  // c(n,k): permutations of S_n with exactly k cycles
  const Nat& get(unsigned n, unsigned k) {
    std::lock_guard<std::mutex> lock(mu_);
    while (rows_.size() <= n) {
      const unsigned m = (unsigned)rows_.size();
      std::vector<Nat> row(m + 1);
      if (m == 0) {
        row[0] = 1;
      } else {
        row[0] = 0;
        for (unsigned j = 1; j <= m; ++j)
          row[j] = rows_[m - 1][j - 1] + Nat(m - 1) * (j < m ? rows_[m - 1][j] : Nat(0));
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<Nat>> rows_;
};

inline StirlingTable& stirling_table() {
  static StirlingTable t;
  return t;
}

}  // namespace detail

inline Nat stirling_first(unsigned n, unsigned k) {
  if (k < 1 || k > n || n > kStirlingCap) throw DomainError("stirling_first: out of range");
  return detail::stirling_table().get(n, k);
}

inline Nat factorial(unsigned n) {
  Nat f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

// ---- s_{!m} and its asymptotic constant ----------------------------------

// Proportion of S_d with no cycle length divisible by m:
// prod_{i=1}^{floor(d/m)} (1 - 1/(im)).
inline Ratio s_no_m(unsigned d, unsigned m) {
  if (d < 1 || m < 2) throw DomainError("s_no_m: need d >= 1, m >= 2");
  Ratio acc = 1;
  for (unsigned i = 1; i <= d / m; ++i) acc *= Ratio(Nat(i) * m - 1, Nat(i) * m);
  return acc;
}

// c_m = m^{1/m} / Gamma(1 - 1/m), so that s_{!m}(d) ~ c_m d^{-1/m}.
inline double c_m_constant(unsigned m) {
  if (m < 2) throw DomainError("c_m_constant: m >= 2");
  const double x = 1.0 / m;
  return std::pow((double)m, x) / std::tgamma(1.0 - x);
}

}  // namespace regprop
