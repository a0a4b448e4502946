// Exact proportions of r-regular elements via torus averaging: the class sum
// over F-classes of the Weyl group, the O(n^2) convolution recurrence that
// resums it, and the projective / Omega adjustments.
//
// A maximal torus T is abelian, so its r-regular elements form the
// r-complement and |T cap Q| / |T| = 1 / |T|_r.  The class sum is therefore
// sum over F-classes of weight(C) / |T_C|_r.
#pragma once

#include "arith.hpp"
#include "tori.hpp"

#include <vector>

namespace regprop {

inline constexpr unsigned kEnumCap = 60;
inline constexpr unsigned kDpCap = 5000;

enum class Method { Enumeration, Recurrence, Relation };

struct ProportionResult {
  Ratio value;
  Method method = Method::Enumeration;
  GroupSpec group;
  Nat r;
};

// Direct evaluation of the class sum by enumerating all F-classes.
inline ProportionResult exact_proportion_enum(const GroupSpec& spec, const Nat& r) {
  spec.validate();
  if (spec.projective) throw DomainError("exact_proportion_enum: use projective_proportion");
  if (spec.q % r == 0) throw RDividesQ("exact_proportion_enum: r divides q");
  if (is_omega(spec.family))
    throw UnsupportedFamily("exact_proportion_enum: use omega_proportion for Omega families");
  if (spec.n + 1 > kEnumCap) throw CapExceeded("exact_proportion_enum: rank above enumeration cap");
  Ratio sum = 0;
  for_each_f_class(spec.family, spec.n, [&](const Ratio& w, const TorusShape& sh) {
    sum += w / Ratio(torus_r_part(sh, spec.q, r));
  });
  return {sum, Method::Enumeration, spec, r};
}

namespace detail {

// E(t) = (1/t) sum_{b=1}^{t} phi(b) E(t-b), E(0) = 1: the expectation over
// S_t of the multiplicative class function with per-cycle factor phi.
inline Ratio cycle_expectation(unsigned t, const std::vector<Ratio>& phi) {
  std::vector<Ratio> E(t + 1);
  E[0] = 1;
  for (unsigned s = 1; s <= t; ++s) {
    Ratio acc = 0;
    for (unsigned b = 1; b <= s; ++b) acc += phi[b] * E[s - b];
    E[s] = acc / s;
  }
  return E[t];
}

}  // namespace detail

// Same value as exact_proportion_enum, via the convolution recurrence.
inline ProportionResult exact_proportion_dp(const GroupSpec& spec, const Nat& r) {
  spec.validate();
  if (spec.projective) throw DomainError("exact_proportion_dp: use projective_proportion");
  if (spec.q % r == 0) throw RDividesQ("exact_proportion_dp: r divides q");
  if (is_omega(spec.family))
    throw UnsupportedFamily("exact_proportion_dp: use omega_proportion for Omega families");
  if (spec.n > kDpCap) throw CapExceeded("exact_proportion_dp: rank above DP cap");
  const Nat& q = spec.q;
  Ratio value;
  switch (spec.family) {
    case Family::SL: {
      const unsigned d = spec.n + 1;
      std::vector<Ratio> phi(d + 1);
      for (unsigned b = 1; b <= d; ++b) phi[b] = Ratio(1, cyclotomic_r_part(q, b, +1, r));
      value = detail::cycle_expectation(d, phi) * Ratio(r_part(q - 1, r));
      break;
    }
    case Family::SU: {
      const unsigned d = spec.n + 1;
      std::vector<Ratio> phi(d + 1);
      for (unsigned b = 1; b <= d; ++b)
        phi[b] = Ratio(1, cyclotomic_r_part(q, b, b % 2 == 0 ? +1 : -1, r));
      value = detail::cycle_expectation(d, phi) * Ratio(r_part(q + 1, r));
      break;
    }
    case Family::Sp:
    case Family::SOodd: {
      std::vector<Ratio> phi(spec.n + 1);
      for (unsigned b = 1; b <= spec.n; ++b)
        phi[b] = (Ratio(1, cyclotomic_r_part(q, b, +1, r)) +
                  Ratio(1, cyclotomic_r_part(q, b, -1, r))) /
                 2;
      value = detail::cycle_expectation(spec.n, phi);
      break;
    }
    case Family::SOplus:
    case Family::SOminus: {
      // parity-resolved: p = E(n) +- E_diff(n), sign + for the even-parity
      // (plus-type) family
      std::vector<Ratio> phi(spec.n + 1), phi_diff(spec.n + 1);
      for (unsigned b = 1; b <= spec.n; ++b) {
        const Ratio pm = Ratio(1, cyclotomic_r_part(q, b, +1, r));
        const Ratio pp = Ratio(1, cyclotomic_r_part(q, b, -1, r));
        phi[b] = (pm + pp) / 2;
        phi_diff[b] = (pm - pp) / 2;
      }
      const Ratio e = detail::cycle_expectation(spec.n, phi);
      const Ratio ed = detail::cycle_expectation(spec.n, phi_diff);
      value = spec.family == Family::SOplus ? Ratio(e + ed) : Ratio(e - ed);
      break;
    }
    default:
      throw UnsupportedFamily("exact_proportion_dp: unexpected family");
  }
  return {value, Method::Recurrence, spec, r};
}

inline ProportionResult exact_proportion(const GroupSpec& spec, const Nat& r) {
  // enumeration only pays off for tiny ranks; the recurrence is always exact
  return exact_proportion_dp(spec, r);
}

// |Z(G)| for the matrix group.
inline Nat center_order(const GroupSpec& spec) {
  spec.validate();
  const Nat& q = spec.q;
  switch (spec.family) {
    case Family::SL: return gcd(Nat(spec.dimension()), q - 1);
    case Family::SU: return gcd(Nat(spec.dimension()), q + 1);
    case Family::Sp: return gcd(Nat(2), q - 1);
    case Family::SOodd:
    case Family::OmegaOdd:
      return 1;  // -I has determinant -1 in odd dimension
    case Family::SOplus:
    case Family::SOminus:
      return 2;
    case Family::OmegaPlus:
      return powm(q, spec.n, Nat(4)) == 1 ? 2 : 1;
    case Family::OmegaMinus:
      return powm(q, spec.n, Nat(4)) == 3 ? 2 : 1;
  }
  return 1;
}

// p_2(Omega) = 2 p_2(SO) for the corresponding special orthogonal group;
// exact values for odd r are out of reach of this relation (bounds only).
inline ProportionResult omega_proportion(const GroupSpec& spec, const Nat& r) {
  spec.validate();
  if (!is_omega(spec.family)) throw DomainError("omega_proportion: not an Omega family");
  if (r != 2)
    throw UnsupportedExact("omega_proportion: exact values only for r = 2; use bounds for odd r");
  GroupSpec so = spec;
  so.projective = false;
  so.family = spec.family == Family::OmegaOdd    ? Family::SOodd
              : spec.family == Family::OmegaPlus ? Family::SOplus
                                                 : Family::SOminus;
  ProportionResult base = exact_proportion_dp(so, r);
  return {base.value * 2, Method::Relation, spec, r};
}

// p_r(G/Z) = |Z(G)|_r p_r(G).
inline ProportionResult projective_proportion(const GroupSpec& spec, const Nat& r) {
  spec.validate();
  GroupSpec matrix = spec;
  matrix.projective = false;
  ProportionResult base = is_omega(spec.family) ? omega_proportion(matrix, r)
                                                : exact_proportion_dp(matrix, r);
  const Nat zr = r_part(center_order(matrix), r);
  return {base.value * Ratio(zr), Method::Relation, spec, r};
}

// Exact p_r for any supported (spec, r), dispatching on family/projective.
inline ProportionResult proportion(const GroupSpec& spec, const Nat& r) {
  if (spec.projective) return projective_proportion(spec, r);
  if (is_omega(spec.family)) return omega_proportion(spec, r);
  return exact_proportion_dp(spec, r);
}

}  // namespace regprop
