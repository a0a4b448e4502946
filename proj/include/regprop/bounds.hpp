// Closed-form bound functions and their evaluation: the f/g lower-bound
// functions in both exact Stirling-sum and Gamma-ratio form, the per-family
// lower-bound table, the piecewise per-lemma lower bounds, q-uniform upper
// bounds for r = 2, corollary envelopes, the adversarial-q constructions, and
// the Stirling-sum inequality chain.
#pragma once

#include "arith.hpp"
#include "engine.hpp"
#include "weyl.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <optional>
#include <string>

namespace regprop {

// ---- f_r, g_odd, g_even ---------------------------------------------------

// Exact forms, as Stirling sums over c(n,k)/(n! 2^k (2,r)^k):
//   f_r(n)      = sum over all k
//   g_odd,r(n)  = 2 * sum over odd k
//   g_even,r(n) = 2 * sum over even k
// For odd r the full sum collapses to the central-binomial form
// (2n)!/(2^{2n} n!^2).
namespace detail {

enum class KParity { All, Odd, Even };

inline Ratio stirling_weighted_sum(unsigned n, const Ratio& x, KParity parity) {
  Ratio acc = 0;
  Ratio xk = 1;
  const Nat nfact = factorial(n);
  for (unsigned k = 1; k <= n; ++k) {
    xk *= x;
    if (parity == KParity::Odd && k % 2 == 0) continue;
    if (parity == KParity::Even && k % 2 == 1) continue;
    acc += Ratio(stirling_first(n, k)) * xk / Ratio(nfact);
  }
  return acc;
}

inline Ratio half_or_quarter(const Nat& r) { return r == 2 ? Ratio(1, 4) : Ratio(1, 2); }

inline long double lg(long double x) { return lgammal(x); }

}  // namespace detail

inline Ratio f_exact(unsigned n, const Nat& r) {
  return detail::stirling_weighted_sum(n, detail::half_or_quarter(r), detail::KParity::All);
}

inline Ratio g_odd_exact(unsigned n, const Nat& r) {
  return 2 * detail::stirling_weighted_sum(n, detail::half_or_quarter(r), detail::KParity::Odd);
}

inline Ratio g_even_exact(unsigned n, const Nat& r) {
  return 2 * detail::stirling_weighted_sum(n, detail::half_or_quarter(r), detail::KParity::Even);
}

// Gamma-ratio forms, evaluated in extended precision.
inline double f_float(unsigned n, const Nat& r) {
  using detail::lg;
  if (r == 2) return (double)expl(lg(n + 0.25L) - lg(0.25L) - lg(n + 1.0L));
  return (double)expl(lg(2.0L * n + 1) - 2.0L * n * logl(2.0L) - 2 * lg(n + 1.0L));
}

inline double g_odd_float(unsigned n, const Nat& r) {
  using detail::lg;
  if (r == 2)
    return (double)(expl(lg(n + 0.25L) - lg(0.25L) - lg(n + 1.0L)) +
                    expl(lg(n - 0.25L) - logl(4.0L) - lg(0.75L) - lg(n + 1.0L)));
  return f_float(n, r) * (2.0 * n) / (2.0 * n - 1);
}

inline double g_even_float(unsigned n, const Nat& r) {
  using detail::lg;
  if (r == 2)
    return (double)(expl(lg(n + 0.25L) - lg(0.25L) - lg(n + 1.0L)) -
                    expl(lg(n - 0.25L) - logl(4.0L) - lg(0.75L) - lg(n + 1.0L)));
  return f_float(n, r) * (2.0 * n - 2) / (2.0 * n - 1);
}

// ---- bound results --------------------------------------------------------

enum class BoundKind { Lower, Upper };

struct BoundResult {
  std::optional<Ratio> exact;  // set when the bound is an exact rational
  double approx = 0.0;
  BoundKind kind = BoundKind::Lower;
  std::string source;      // which bound family / case produced it
  std::string conditions;  // validity predicate, already checked

  static BoundResult rational(Ratio v, BoundKind k, std::string src, std::string cond) {
    BoundResult b;
    b.approx = (double)boost::multiprecision::cpp_bin_float_100(v).convert_to<double>();
    b.exact = std::move(v);
    b.kind = k;
    b.source = std::move(src);
    b.conditions = std::move(cond);
    return b;
  }
  static BoundResult floating(double v, BoundKind k, std::string src, std::string cond) {
    BoundResult b;
    b.approx = v;
    b.kind = k;
    b.source = std::move(src);
    b.conditions = std::move(cond);
    return b;
  }
};

// Table of q-independent lower bounds h_{X,r}(n); SL/SU rows are the
// projective groups.
inline BoundResult h_table(Family family, const Nat& r, unsigned n) {
  const Ratio two_r = (r == 2) ? 2 : 1;  // (2, r)
  switch (family) {
    case Family::SL:
      return BoundResult::rational(Ratio(1, n + 1), BoundKind::Lower, "table:PSL", "");
    case Family::SU:
      return BoundResult::rational(Ratio(1, n + 1), BoundKind::Lower, "table:PSU", "");
    case Family::Sp:
      return BoundResult::rational(f_exact(n, r), BoundKind::Lower, "table:Sp", "");
    case Family::SOodd:
      return BoundResult::rational(f_exact(n, r), BoundKind::Lower, "table:SOodd", "");
    case Family::OmegaOdd:
      return BoundResult::rational(two_r * f_exact(n, r), BoundKind::Lower, "table:OmegaOdd", "");
    case Family::SOplus:
      return BoundResult::rational(g_even_exact(n, r), BoundKind::Lower, "table:SOplus", "");
    case Family::OmegaPlus:
      return BoundResult::rational(two_r * g_even_exact(n, r), BoundKind::Lower,
                                   "table:OmegaPlus", "");
    case Family::SOminus:
      return BoundResult::rational(n % 2 == 0 ? g_odd_exact(n, r) : g_even_exact(n, r),
                                   BoundKind::Lower, "table:SOminus",
                                   n % 2 == 0 ? "n even" : "n odd");
    case Family::OmegaMinus:
      return BoundResult::rational(
          two_r * (n % 2 == 0 ? g_odd_exact(n, r) : g_even_exact(n, r)), BoundKind::Lower,
          "table:OmegaMinus", n % 2 == 0 ? "n even" : "n odd");
  }
  throw DomainError("h_table: bad family");
}

// ---- per-lemma piecewise lower bounds -------------------------------------

namespace detail {

// SL_2-style two-torus bound, shared by SL_2 and SU_2.
inline Ratio sl2_bound(const Nat& q, const Nat& r) {
  return Ratio(1, 2 * cyclotomic_r_part(q, 1, -1, r)) +
         Ratio(1, 2 * cyclotomic_r_part(q, 1, +1, r));
}

// Unitary cycle-length modulus: least m with r | q^m - (-1)^m, from the
// multiplicative order m' of q mod r.
inline unsigned unitary_m(const Nat& q, const Nat& r) {
  if (r == 2) return 1;
  const unsigned mp = mult_order(q, r);
  if (mp % 2 == 1) return 2 * mp;
  if (mp % 4 == 0) return mp;
  return mp / 2;
}

}  // namespace detail

// The sharpest stated q-dependent lower bound for p_r of the matrix group.
inline BoundResult lower_bound(const GroupSpec& spec, const Nat& r) {
  spec.validate();
  if (spec.q % r == 0) throw RDividesQ("lower_bound: r divides q");
  const Nat& q = spec.q;
  const unsigned n = spec.n;
  const auto lower = BoundKind::Lower;
  switch (spec.family) {
    case Family::SL: {
      const unsigned d = n + 1;
      if (d == 2)
        return BoundResult::rational(detail::sl2_bound(q, r), lower, "linear:rank1-tori", "");
      const unsigned m = mult_order(q, r);
      if (m >= 2)
        return BoundResult::rational(s_no_m(d, m), lower, "linear:cycle-sieve", "m >= 2");
      const Nat dr = r_part(Nat(d), r);
      const Nat d1r = r_part(Nat(d - 1), r);
      if (r != 2)
        return BoundResult::rational(
            Ratio(1, d * dr) + Ratio(1, Nat(d - 1) * d1r * r_part(q - 1, r)), lower,
            "linear:m1", "m = 1, r odd");
      const Nat q2_1 = r_part(q - 1, 2) * r_part(q + 1, 2);  // (q^2-1)_2
      if (d % 2 == 1)
        return BoundResult::rational(Ratio(1, d) + Ratio(2, Nat(d - 1) * d1r * q2_1), lower,
                                     "linear:r2", "r = 2, d odd");
      return BoundResult::rational(
          Ratio(2, Nat(d) * dr * r_part(q + 1, 2)) + Ratio(1, Nat(d - 1) * r_part(q - 1, 2)),
          lower, "linear:r2", "r = 2, d even");
    }
    case Family::SU: {
      const unsigned d = n + 1;
      if (d == 2)  // SU_2 = SL_2
        return BoundResult::rational(detail::sl2_bound(q, r), lower, "unitary:rank1-tori", "");
      const unsigned m = detail::unitary_m(q, r);
      if (m >= 2)
        return BoundResult::rational(s_no_m(d, m), lower, "unitary:cycle-sieve", "m >= 2");
      const Nat dr = r_part(Nat(d), r);
      const Nat d1r = r_part(Nat(d - 1), r);
      if (r != 2)
        return BoundResult::rational(
            Ratio(1, d * dr) + Ratio(1, Nat(d - 1) * d1r * r_part(q + 1, r)), lower,
            "unitary:m1", "m = 1, r odd");
      const Nat q2_1 = r_part(q - 1, 2) * r_part(q + 1, 2);
      if (d % 2 == 1)
        return BoundResult::rational(Ratio(1, d) + Ratio(2, Nat(d - 1) * d1r * q2_1), lower,
                                     "unitary:r2", "r = 2, d odd");
      return BoundResult::rational(
          Ratio(2, Nat(d) * dr * r_part(q - 1, 2)) + Ratio(1, Nat(d - 1) * r_part(q + 1, 2)),
          lower, "unitary:r2", "r = 2, d even");
    }
    case Family::Sp:
    case Family::SOodd:
    case Family::OmegaOdd: {
      const unsigned m = mult_order(q, r);
      Ratio base;
      std::string cond;
      if (m % 2 == 1 && m >= 3) {
        base = s_no_m(n, m);
        cond = "m odd, m >= 3";
      } else if (m % 2 == 0 && m >= 4) {
        base = s_no_m(n, m / 2);
        cond = "m even, m >= 4";
      } else {
        base = f_exact(n, r);
        cond = "m <= 2";
      }
      if (spec.family == Family::OmegaOdd && r == 2) base *= 2;
      return BoundResult::rational(base, lower, "type-BC:lower", cond);
    }
    case Family::SOplus:
    case Family::SOminus:
    case Family::OmegaPlus:
    case Family::OmegaMinus: {
      const bool minus = spec.family == Family::SOminus || spec.family == Family::OmegaMinus;
      const unsigned witt = minus ? 1 : 0;
      Ratio base;
      std::string cond;
      if (r == 2) {
        // q^n mod 4 decides which parity class carries the 2-regular mass
        const bool qn1 = powm(q, n, Nat(4)) == 1;
        const bool geven = minus ? !qn1 : qn1;
        base = geven ? g_even_exact(n, r) : g_odd_exact(n, r);
        cond = qn1 ? "q^n = 1 mod 4" : "q^n = -1 mod 4";
      } else {
        const unsigned m = mult_order(q, r);
        if (m % 2 == 1 && m >= 3) {
          base = s_no_m(n, m);
          cond = "m odd, m >= 3";
        } else if (m % 2 == 0 && m >= 4) {
          base = s_no_m(n, m / 2);
          cond = "m even, m >= 4";
        } else if (m == 2) {
          base = ((n + witt) % 2 == 1) ? g_odd_exact(n, r) : g_even_exact(n, r);
          cond = "m = 2";
        } else {  // m == 1
          base = witt == 1 ? g_odd_exact(n, r) : g_even_exact(n, r);
          cond = "m = 1";
        }
      }
      if (is_omega(spec.family) && r == 2) base *= 2;
      return BoundResult::rational(base, lower, "type-D:lower", cond);
    }
  }
  throw DomainError("lower_bound: bad family");
}

// ---- r = 2 upper bounds ---------------------------------------------------

// q-uniform upper bounds on p_2 for the projective linear/unitary groups and
// the q mod 4 refinements for the symplectic/orthogonal matrix groups.
inline BoundResult upper_bound_p2(const GroupSpec& spec) {
  spec.validate();
  if (spec.q % 2 == 0) throw RDividesQ("upper_bound_p2: q must be odd (r = 2)");
  const Nat& q = spec.q;
  const unsigned n = spec.n;
  const auto upper = BoundKind::Upper;
  switch (spec.family) {
    case Family::SL: {
      const unsigned d = n + 1;
      const Nat g2 = r_part(gcd(Nat(d), q - 1), 2);
      return BoundResult::floating(2.0 * g2.convert_to<double>() / std::sqrt(M_PI * d), upper,
                                   "linear:sqrt-d", "q odd");
    }
    case Family::SU: {
      const unsigned d = n + 1;
      const Nat g2 = r_part(gcd(Nat(d), q + 1), 2);
      return BoundResult::floating(2.0 * g2.convert_to<double>() / std::sqrt(M_PI * d), upper,
                                   "unitary:sqrt-d", "");
    }
    case Family::Sp:
    case Family::SOodd:
    case Family::OmegaOdd: {
      // q = 1 mod 4: every positive cycle contributes 2-part >= 4, giving the
      // (3/8)^k sum; q = 3 mod 4 only guarantees 2-part >= 2 per cycle, giving
      // the (1/2)^k sum (the central-binomial form).
      Ratio base = (q % 4 == 1)
                       ? detail::stirling_weighted_sum(n, Ratio(3, 8), detail::KParity::All)
                       : detail::stirling_weighted_sum(n, Ratio(1, 2), detail::KParity::All);
      if (spec.family == Family::OmegaOdd) base *= 2;
      return BoundResult::rational(base, upper, "type-BC:q-uniform",
                                   q % 4 == 1 ? "q = 1 mod 4" : "q = 3 mod 4");
    }
    case Family::SOplus:
    case Family::SOminus:
    case Family::OmegaPlus:
    case Family::OmegaMinus: {
      // parity restriction dropped: twice the full B_n sum dominates the
      // doubled half-sum
      Ratio base = (q % 4 == 1)
                       ? detail::stirling_weighted_sum(n, Ratio(3, 8), detail::KParity::All)
                       : detail::stirling_weighted_sum(n, Ratio(1, 2), detail::KParity::All);
      base *= 2;
      if (is_omega(spec.family)) base *= 2;
      return BoundResult::rational(base, upper, "type-D:q-uniform",
                                   q % 4 == 1 ? "q = 1 mod 4" : "q = 3 mod 4");
    }
  }
  throw DomainError("upper_bound_p2: bad family");
}

// ---- corollary envelopes --------------------------------------------------

// Explicit numeric rank-only envelopes for the symplectic/orthogonal families.  Lower bounds hold
// for all q coprime to r; the upper envelopes are attained for infinitely
// many q.
inline BoundResult corollary_constants(const GroupSpec& spec, const Nat& r, BoundKind kind) {
  spec.validate();
  const unsigned n = spec.n;
  const double n34 = std::pow(n + 1.0, 0.75);
  const double n54 = std::pow(n + 1.0, 1.25);
  const double spn = std::sqrt(M_PI * n);
  const bool omega = is_omega(spec.family);
  switch (spec.family) {
    case Family::Sp:
    case Family::SOodd:
    case Family::OmegaOdd:
      if (kind == BoundKind::Lower) {
        if (r != 2) return BoundResult::floating(25.0 / (29.0 * spn), kind, "type-BC:envelope", "r odd");
        return BoundResult::floating((omega ? 0.5 : 0.25) / n34, kind, "type-BC:envelope", "r = 2");
      }
      if (r != 2)
        return BoundResult::floating(1.0 / spn, kind, "type-BC:envelope", "r odd; infinitely many q");
      return BoundResult::floating((omega ? 1.2 : 0.6) / n34, kind, "type-BC:envelope",
                                   "r = 2; infinitely many q");
    case Family::SOplus:
    case Family::SOminus:
    case Family::OmegaPlus:
    case Family::OmegaMinus:
      if (kind == BoundKind::Lower) {
        if (r != 2)
          return BoundResult::floating(25.0 / (29.0 * spn) * (2.0 * n - 2) / (2.0 * n - 1), kind,
                                       "type-D:envelope", "r odd");
        if (omega) return BoundResult::floating(0.25 / n34 - 0.72 / n54, kind, "type-D:envelope", "r = 2");
        return BoundResult::floating(0.125 / n34 - 0.36 / n54, kind, "type-D:envelope", "r = 2");
      }
      if (r != 2)
        return BoundResult::floating(1.0 / spn * (2.0 * n) / (2.0 * n - 1), kind, "type-D:envelope",
                                     "r odd; infinitely many q");
      if (omega)
        return BoundResult::floating(0.6 / n34 + 0.72 / n54, kind, "type-D:envelope",
                                     "r = 2; infinitely many q");
      return BoundResult::floating(0.3 / n34 + 0.36 / n54, kind, "type-D:envelope",
                                   "r = 2; infinitely many q");
    default:
      throw DomainError("corollary_constants: symplectic/orthogonal families only");
  }
}

// ---- adversarial q constructions ------------------------------------------

struct AdversarialQ {
  Nat q;
  unsigned a = 0;   // r^a is the forced r-part of q -+ 1
  Nat j;            // q = p^{j r^b}
  unsigned b = 1;
  Ratio eps;
  Nat r_pow_a;
  bool plus_route = false;  // true: r^a | q+1 (unitary / twisted orthogonal rows)
};

// Builds the smallest certificate q = p^{j r^b} from the recipe of the
// adversarial-q constructions, so that p_r(G) < h_{X,r}(n) + eps can be verified
// exactly by the engine.
inline AdversarialQ construct_adversarial_q(Family family, unsigned n, const Nat& r, const Nat& p,
                                            const Ratio& eps, unsigned b = 1,
                                            bool twisted_route = false) {
  if (p == r) throw DomainError("construct_adversarial_q: p must differ from r");
  if (!is_prime(p) || !is_prime(r)) throw DomainError("construct_adversarial_q: p, r prime");
  const bool linear_like = family == Family::SL || family == Family::SU;
  const unsigned d = linear_like ? n + 1 : 2 * n;
  // threshold: 1/r^a < eps/d_r (and r^a >= d_r) for SL/SU, 1/r^a < eps/2 else
  const Nat dr = r_part(Nat(d), r);
  const Ratio threshold = linear_like ? eps / Ratio(dr) : eps / 2;
  AdversarialQ out;
  out.b = b;
  out.eps = eps;
  Nat ra = 1;
  unsigned a = 0;
  while (!(Ratio(1, ra) < threshold && (!linear_like || ra >= dr))) {
    ra *= r;
    ++a;
  }
  out.a = a;
  out.r_pow_a = ra;
  out.plus_route = family == Family::SU || twisted_route;
  if (out.plus_route) {
    // need r^a | p^j + 1: requires the order of p mod r to be even
    if (r == 2 || mult_order(p, r) % 2 != 0)
      throw OrderParityUnsatisfiable(
          "construct_adversarial_q: order of p mod r must be even for the q+1 route");
    const unsigned j0 = mult_order(p, r) / 2;
    const unsigned v = valuation(pow_nat(p, j0) + 1, r);
    Nat j = j0;
    for (unsigned k = v; k < a; ++k) j *= r;
    out.j = j;
  } else {
    out.j = mult_order_mod_rpow(p, r, a);
  }
  Nat exponent = out.j * pow_nat(r, b);
  if (msb(p) * (unsigned long)exponent.convert_to<unsigned long long>() > 2000000)
    throw CapExceeded("construct_adversarial_q: certificate q too large");
  out.q = pow_nat(p, exponent.convert_to<unsigned>());
  return out;
}

// ---- Stirling-sum inequality chain ----------------------------------------

struct SumChain {
  Ratio lhs;      // exact sum_k c(n,k) x^k / n!
  double mid1;    // (n+x)^{n+x-1} e^{1-x} / ((n+1)^n Gamma(x))
  double mid2;    // (1+x/n)^n (n+x)^{x-1} e^{1-x}
};

inline SumChain sumcnk_bound_chain(unsigned n, const Ratio& x) {
  if (!(x > -1 && x < 1)) throw DomainError("sumcnk_bound_chain: x in (-1,1)");
  SumChain c;
  c.lhs = detail::stirling_weighted_sum(n, x, detail::KParity::All);
  const long double xf = (long double)boost::multiprecision::cpp_bin_float_100(x)
                             .convert_to<long double>();
  c.mid1 = (double)expl((n + xf - 1) * logl(n + xf) + (1 - xf) - n * logl(n + 1.0L) -
                        detail::lg(xf));
  c.mid2 = (double)expl(n * logl(1 + xf / n) + (xf - 1) * logl(n + xf) + (1 - xf));
  return c;
}

/// Upper-bound expression of the d^{eps-1} construction:
// 2^a sum_k c(d,k)/(d! 2^{ak}), valid as a bound on p_2(SL_d(q)) under
// 2^a | q-1 (checked); domination at small d is a finding, not a theorem.
inline Ratio lemma_alpha_bound(unsigned d, const Nat& q, unsigned a) {
  if ((q - 1) % pow_nat(2, a) != 0) throw PreconditionFailed("lemma_alpha_bound: 2^a must divide q-1");
  const Ratio x = Ratio(1, pow_nat(2, a));
  return Ratio(pow_nat(2, a)) * detail::stirling_weighted_sum(d, x, detail::KParity::All);
}

}  // namespace regprop
