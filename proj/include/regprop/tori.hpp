// Maximal-torus data: maps each classical family and Weyl F-class to the
// factored order of the corresponding maximal torus, and computes exact
// orders and r-parts of those orders.
#pragma once

#include "arith.hpp"
#include "weyl.hpp"

#include <functional>
#include <string>

namespace regprop {

enum class Family {
  SL,
  SU,
  Sp,
  SOodd,
  SOplus,
  SOminus,
  OmegaOdd,
  OmegaPlus,
  OmegaMinus,
};

inline bool is_orthogonal(Family f) {
  switch (f) {
    case Family::SOodd:
    case Family::SOplus:
    case Family::SOminus:
    case Family::OmegaOdd:
    case Family::OmegaPlus:
    case Family::OmegaMinus:
      return true;
    default:
      return false;
  }
}

inline bool is_omega(Family f) {
  return f == Family::OmegaOdd || f == Family::OmegaPlus || f == Family::OmegaMinus;
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::SL: return "SL";
    case Family::SU: return "SU";
    case Family::Sp: return "Sp";
    case Family::SOodd: return "SOodd";
    case Family::SOplus: return "SOplus";
    case Family::SOminus: return "SOminus";
    case Family::OmegaOdd: return "OmegaOdd";
    case Family::OmegaPlus: return "OmegaPlus";
    case Family::OmegaMinus: return "OmegaMinus";
  }
  return "?";
}

struct GroupSpec {
  Family family = Family::SL;
  unsigned n = 1;  // (untwisted) Lie rank
  Nat q = 2;
  bool projective = false;

  unsigned dimension() const {
    switch (family) {
      case Family::SL:
      case Family::SU:
        return n + 1;
      case Family::Sp:
      case Family::SOplus:
      case Family::SOminus:
      case Family::OmegaPlus:
      case Family::OmegaMinus:
        return 2 * n;
      case Family::SOodd:
      case Family::OmegaOdd:
        return 2 * n + 1;
    }
    return 0;
  }

  void validate() const {
    const unsigned min_n = (family == Family::SL || family == Family::SU) ? 1 : 2;
    if (n < min_n) throw DomainError("GroupSpec: rank too small for family");
    if (q < 2) throw DomainError("GroupSpec: q < 2");
    if (is_orthogonal(family) && q % 2 == 0)
      throw EvenQOrthogonal("orthogonal families require odd q");
  }
};

enum class IndexDivisor { One, QMinus1, QPlus1 };

// Factored torus order: prod (q^b - sign) / index.
struct TorusShape {
  std::vector<std::pair<unsigned, int>> factors;  // (exponent b, sign in {+1,-1})
  IndexDivisor index = IndexDivisor::One;
};

inline Nat torus_order(const TorusShape& shape, const Nat& q) {
  if (q < 2) throw DomainError("torus_order: q < 2");
  Nat prod = 1;
  for (auto [b, s] : shape.factors) prod *= pow_nat(q, b) - s;
  switch (shape.index) {
    case IndexDivisor::One: return prod;
    case IndexDivisor::QMinus1: return prod / (q - 1);
    case IndexDivisor::QPlus1: return prod / (q + 1);
  }
  return prod;
}

// r-part of the torus order via valuation arithmetic over the closed forms;
// safe for q far too large to exponentiate.
inline Nat torus_r_part(const TorusShape& shape, const Nat& q, const Nat& r) {
  long v = 0;
  for (auto [b, s] : shape.factors) v += (long)cyclotomic_r_val(q, b, s, r);
  switch (shape.index) {
    case IndexDivisor::QMinus1: v -= (long)valuation(q - 1, r); break;
    case IndexDivisor::QPlus1: v -= (long)valuation(q + 1, r); break;
    case IndexDivisor::One: break;
  }
  if (v < 0) throw DomainError("torus_r_part: negative valuation (index does not divide)");
  return pow_nat(r, (unsigned)v);
}

// F-class decomposition of the Weyl group for the given family: yields
// (weight, torus shape) with weights summing to 1.
//
//   SL:        partitions of d = n+1, factors q^b - 1, index q-1
//   SU:        partitions of d = n+1, factors q^b - (-1)^b, index q+1
//   Sp/SOodd:  signed types of n; positive cycle -> q^b - 1, negative -> q^b + 1
//   SOplus:    signed types with an even number of negative cycles, weight x2
//   SOminus:   odd number of negative cycles, weight x2
inline void for_each_f_class(Family family, unsigned n,
                             const std::function<void(const Ratio&, const TorusShape&)>& fn) {
  switch (family) {
    case Family::SL:
    case Family::SU: {
      const bool unitary = family == Family::SU;
      for_each_partition(n + 1, [&](const CycleType& ct) {
        TorusShape sh;
        sh.index = unitary ? IndexDivisor::QPlus1 : IndexDivisor::QMinus1;
        for (auto [b, m] : ct.parts) {
          // factor is q^b - sign; for SU that is q^b - (-1)^b
          const int sign = unitary ? (b % 2 == 0 ? +1 : -1) : +1;
          for (unsigned k = 0; k < m; ++k) sh.factors.push_back({b, sign});
        }
        fn(class_weight(ct), sh);
      });
      return;
    }
    case Family::Sp:
    case Family::SOodd: {
      for_each_signed_type(n, [&](const SignedCycleType& sct) {
        TorusShape sh;
        for (auto& e : sct.entries) {
          for (unsigned k = 0; k < e.pos; ++k) sh.factors.push_back({e.len, +1});
          for (unsigned k = 0; k < e.neg; ++k) sh.factors.push_back({e.len, -1});
        }
        fn(signed_class_weight(sct), sh);
      });
      return;
    }
    case Family::SOplus:
    case Family::SOminus: {
      const unsigned want = family == Family::SOplus ? 0 : 1;
      for_each_signed_type(n, [&](const SignedCycleType& sct) {
        if (sct.negative_cycles() % 2 != want) return;
        TorusShape sh;
        for (auto& e : sct.entries) {
          for (unsigned k = 0; k < e.pos; ++k) sh.factors.push_back({e.len, +1});
          for (unsigned k = 0; k < e.neg; ++k) sh.factors.push_back({e.len, -1});
        }
        fn(signed_class_weight(sct) * 2, sh);
      });
      return;
    }
    default:
      throw UnsupportedFamily("for_each_f_class: Omega families have no direct class stream");
  }
}

}  // namespace regprop
