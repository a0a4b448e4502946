// Verification sweeps shared by the CLI and the acceptance gate: each suite
// runs a grid of checks and reports one record per point.  Sweeps run in
// parallel (REGPROP_THREADS workers) with deterministic, grid-ordered output.
#pragma once

#include "bounds.hpp"
#include "engine.hpp"
#include "oracle.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

namespace regprop {

inline double to_double(const Ratio& v) {
  return boost::multiprecision::cpp_bin_float_100(v).convert_to<double>();
}

struct SweepRecord {
  std::string point;
  bool pass = false;
  std::string detail;
};

struct SweepReport {
  std::string suite;
  std::vector<SweepRecord> records;

  std::size_t violations() const {
    std::size_t v = 0;
    for (auto& r : records)
      if (!r.pass) ++v;
    return v;
  }

  // CSV schema (stable): suite,point,pass,detail
  void write_csv(std::ostream& os) const {
    auto esc = [](const std::string& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') out += '"';
        out += c;
      }
      return out + "\"";
    };
    os << "suite,point,pass,detail\n";
    for (auto& r : records)
      os << suite << ',' << esc(r.point) << ',' << (r.pass ? "1" : "0") << ',' << esc(r.detail)
         << '\n';
  }
};

inline unsigned worker_count() {
  if (const char* env = std::getenv("REGPROP_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return (unsigned)v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(0..count-1) on worker_count() threads; callers index into
// pre-sized result slots so output order is scheduling-independent.
template <typename Fn>
inline void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned w = worker_count();
  if (w <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < std::min<std::size_t>(w, count); ++t)
    threads.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& t : threads) t.join();
}

namespace detail {

using Task = std::function<SweepRecord()>;

inline SweepReport run_tasks(std::string suite, std::vector<Task>& tasks) {
  SweepReport rep;
  rep.suite = std::move(suite);
  rep.records.resize(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    try {
      rep.records[i] = tasks[i]();
    } catch (const std::exception& e) {
      rep.records[i] = {"task " + std::to_string(i), false, std::string("exception: ") + e.what()};
    }
  });
  return rep;
}

inline std::string spec_tag(const GroupSpec& s, const Nat& r) {
  std::ostringstream os;
  os << (s.projective ? "P" : "") << family_name(s.family) << " n=" << s.n << " q=" << s.q
     << " r=" << r;
  return os.str();
}

inline std::vector<Family> matrix_families() {
  return {Family::SL, Family::SU, Family::Sp, Family::SOodd, Family::SOplus, Family::SOminus};
}

inline bool family_ok(Family f, unsigned n, const Nat& q, const Nat& r) {
  const unsigned min_n = (f == Family::SL || f == Family::SU) ? 1 : 2;
  if (n < min_n) return false;
  if (is_orthogonal(f) && q % 2 == 0) return false;
  return q % r != 0;
}

}  // namespace detail

// ---- engines: DP == enumeration ------------------------------------------

inline SweepReport verify_engines(unsigned nmax = 8) {
  std::vector<detail::Task> tasks;
  const Nat qset[] = {2, 3, 4, 5, 7, 8, 9};
  const Nat rset[] = {2, 3, 5, 7};
  for (Family f : detail::matrix_families())
    for (unsigned n = 1; n <= nmax; ++n)
      for (const Nat& q : qset)
        for (const Nat& r : rset) {
          if (!detail::family_ok(f, n, q, r)) continue;
          GroupSpec s{f, n, q, false};
          tasks.push_back([s, r] {
            const Ratio dp = exact_proportion_dp(s, r).value;
            const Ratio en = exact_proportion_enum(s, r).value;
            SweepRecord rec{detail::spec_tag(s, r), dp == en, ""};
            if (!rec.pass) {
              std::ostringstream os;
              os << "dp=" << dp << " enum=" << en;
              rec.detail = os.str();
            }
            return rec;
          });
        }
  return detail::run_tasks("engines", tasks);
}

// ---- table1: p_r(G) >= h_{X,r}(n) ----------------------------------------

// All table rows: SL/SU rows are verified on the projective groups, the
// symplectic/orthogonal rows on the matrix groups, Omega rows via the r = 2
// doubling relation (odd r has no exact Omega value, so those points are
// skipped as out of the engine's reach).
inline SweepReport verify_table1(unsigned nmax = 40, std::vector<Nat> qset = {2, 3, 4, 5, 7, 9},
                                 std::vector<Nat> rset = {2, 3, 5, 7, 11}) {
  std::vector<detail::Task> tasks;
  const Family all[] = {Family::SL,     Family::SU,        Family::Sp,
                        Family::SOodd,  Family::OmegaOdd,  Family::SOplus,
                        Family::OmegaPlus, Family::SOminus, Family::OmegaMinus};
  for (Family f : all)
    for (unsigned n = 2; n <= nmax; ++n)
      for (const Nat& q : qset)
        for (const Nat& r : rset) {
          if (!detail::family_ok(f, n, q, r)) continue;
          if (is_omega(f) && r != 2) continue;  // no exact Omega value for odd r
          const bool projective = (f == Family::SL || f == Family::SU);
          GroupSpec s{f, n, q, projective};
          tasks.push_back([s, r] {
            const Ratio p = proportion(s, r).value;
            const Ratio h = *h_table(s.family, r, s.n).exact;
            SweepRecord rec{detail::spec_tag(s, r), p >= h, ""};
            std::ostringstream os;
            os << "p=" << p << " h=" << h;
            rec.detail = os.str();
            return rec;
          });
        }
  return detail::run_tasks("table1", tasks);
}

// ---- numbertheory: closed forms vs direct big-integer computation ---------

inline SweepReport verify_numbertheory() {
  std::vector<detail::Task> tasks;
  const Nat rset[] = {2, 3, 5, 7, 11, 13};
  // cyclotomic r-parts: one aggregated record per (q, r, sign)
  for (unsigned q = 2; q <= 50; ++q)
    for (const Nat& r : rset) {
      if (q % r == 0) continue;
      for (int sign : {+1, -1}) {
        tasks.push_back([q, r, sign] {
          for (unsigned i = 1; i <= 60; ++i) {
            const Nat direct = r_part(pow_nat(q, i) - sign, r);
            const Nat closed = cyclotomic_r_part(q, i, sign, r);
            if (direct != closed) {
              std::ostringstream os;
              os << "i=" << i << " direct=" << direct << " closed=" << closed;
              return SweepRecord{"cyclo q=" + std::to_string(q) + " r=" + r.str() +
                                     " sign=" + (sign > 0 ? "+" : "-"),
                                 false, os.str()};
            }
          }
          return SweepRecord{"cyclo q=" + std::to_string(q) + " r=" + r.str() +
                                 " sign=" + (sign > 0 ? "+" : "-"),
                             true, "i=1..60"};
        });
      }
    }
  // gcd closed forms: one aggregated record per (q, kind)
  for (unsigned q = 2; q <= 20; ++q)
    for (GcdKind kind : {GcdKind::MM, GcdKind::MP, GcdKind::PP}) {
      tasks.push_back([q, kind] {
        const char* kname = kind == GcdKind::MM ? "MM" : kind == GcdKind::MP ? "MP" : "PP";
        for (unsigned i = 1; i <= 12; ++i)
          for (unsigned j = 1; j <= 12; ++j) {
            const Nat a = pow_nat(q, i) + (kind == GcdKind::PP ? 1 : -1);
            const Nat b = pow_nat(q, j) + (kind == GcdKind::MM ? -1 : 1);
            const Nat direct = gcd(a, b);
            const Nat closed = gcd_cyclotomic(q, i, j, kind);
            if (direct != closed) {
              std::ostringstream os;
              os << "i=" << i << " j=" << j << " direct=" << direct << " closed=" << closed;
              return SweepRecord{std::string("gcd ") + kname + " q=" + std::to_string(q), false,
                                 os.str()};
            }
          }
        return SweepRecord{std::string("gcd ") + kname + " q=" + std::to_string(q), true,
                           "i,j=1..12"};
      });
    }
  return detail::run_tasks("numbertheory", tasks);
}

// ---- bounds-identities: function identities, inequality chains, upper
// bounds, and the d^{eps-1} expression -------------------------------------

namespace detail {

inline bool rel_close(double a, double b, double tol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? true : std::abs(a - b) <= tol * scale;
}

// running double value of the central binomial (2n)!/(2^{2n} n!^2)
struct CentralBinomial {
  double value = 1.0;
  unsigned n = 0;
  void advance_to(unsigned target) {
    while (n < target) {
      ++n;
      value *= (2.0 * n - 1) / (2.0 * n);
    }
  }
};

}  // namespace detail

inline SweepReport verify_bounds_identities() {
  std::vector<detail::Task> tasks;

  // exact Stirling sums vs Gamma forms, r = 2, n <= 200, 1e-12 relative
  tasks.push_back([] {
    for (unsigned n = 1; n <= 200; ++n) {
      const double pairs[3][2] = {{to_double(f_exact(n, 2)), f_float(n, 2)},
                                  {to_double(g_odd_exact(n, 2)), g_odd_float(n, 2)},
                                  {to_double(g_even_exact(n, 2)), g_even_float(n, 2)}};
      for (auto& p : pairs)
        if (!detail::rel_close(p[0], p[1], 1e-12))
          return SweepRecord{"gamma-agreement r=2", false,
                             "n=" + std::to_string(n) + " exact=" + std::to_string(p[0]) +
                                 " gamma=" + std::to_string(p[1])};
    }
    return SweepRecord{"gamma-agreement r=2", true, "n<=200, 1e-12 relative"};
  });

  // odd r: sum form equals the central-binomial factorial form exactly
  tasks.push_back([] {
    for (unsigned n = 1; n <= 200; ++n) {
      const Ratio fact = Ratio(factorial(2 * n), pow_nat(2, 2 * n) * factorial(n) * factorial(n));
      if (f_exact(n, 3) != fact)
        return SweepRecord{"factorial-form r odd", false, "n=" + std::to_string(n)};
    }
    return SweepRecord{"factorial-form r odd", true, "n<=200 exact"};
  });

  // g_odd + g_even = 2 f, exactly, both r parities
  tasks.push_back([] {
    for (unsigned n = 1; n <= 200; ++n)
      for (Nat r : {Nat(2), Nat(3)})
        if (g_odd_exact(n, r) + g_even_exact(n, r) != 2 * f_exact(n, r))
          return SweepRecord{"godd+geven=2f", false, "n=" + std::to_string(n) + " r=" + r.str()};
    return SweepRecord{"godd+geven=2f", true, "n<=200 exact"};
  });

  // rising-factorial identity: sum c(n,k) x^k / n! = prod (x+k) / n!
  tasks.push_back([] {
    const Ratio xs[] = {Ratio(1, 2), Ratio(1, 4), Ratio(1, 3), Ratio(-1, 3), Ratio(3, 8)};
    for (unsigned n = 1; n <= 100; ++n)
      for (const Ratio& x : xs) {
        Ratio rising = 1;
        for (unsigned k = 0; k < n; ++k) rising *= x + k;
        if (detail::stirling_weighted_sum(n, x, detail::KParity::All) !=
            rising / Ratio(factorial(n)))
          return SweepRecord{"rising-factorial identity", false, "n=" + std::to_string(n)};
      }
    return SweepRecord{"rising-factorial identity", true, "n<=100 exact, 5 x values"};
  });

  // central binomial envelope: 1/sqrt(pi n) >= (2n)!/(2^{2n} n!^2) >= 25/(29 sqrt(pi n))
  tasks.push_back([] {
    detail::CentralBinomial cb;
    for (unsigned n = 2; n <= 500; ++n) {
      cb.advance_to(n);
      const double up = 1.0 / std::sqrt(M_PI * n);
      const double lo = 25.0 / (29.0 * std::sqrt(M_PI * n));
      if (!(cb.value <= up + 1e-9 && cb.value >= lo - 1e-9))
        return SweepRecord{"central-binomial envelope", false, "n=" + std::to_string(n)};
    }
    return SweepRecord{"central-binomial envelope", true, "2<=n<=500"};
  });

  // chain s_nom(n) >= g_odd,r(n) > f_r(n) > g_even,r(n), n >= m >= 2, exact
  for (Nat r : {Nat(2), Nat(3)}) {
    tasks.push_back([r] {
      for (unsigned n = 2; n <= 200; ++n) {
        const Ratio go = g_odd_exact(n, r), fe = f_exact(n, r), ge = g_even_exact(n, r);
        if (!(go > fe && fe > ge))
          return SweepRecord{"g-f chain r=" + r.str(), false, "n=" + std::to_string(n)};
        for (unsigned m = 2; m <= n; ++m)
          if (!(s_no_m(n, m) >= go))
            return SweepRecord{"g-f chain r=" + r.str(), false,
                               "n=" + std::to_string(n) + " m=" + std::to_string(m)};
      }
      return SweepRecord{"g-f chain r=" + r.str(), true, "n,m<=200 exact"};
    });
  }

  // s_nom asymptotic envelope: c_m d^{-1/m}(1-1/d) <= s_nom(d) <= c_m d^{-1/m}(1+2/d)
  for (unsigned m = 2; m <= 10; ++m) {
    tasks.push_back([m] {
      const double cm = c_m_constant(m);
      double s = 1.0;  // running float s_nom(d)
      for (unsigned d = 1; d <= 10000; ++d) {
        if (d % m == 0) s *= 1.0 - 1.0 / d;
        if (d < m) continue;
        const double mid = cm * std::pow((double)d, -1.0 / m);
        if (!(s >= mid * (1.0 - 1.0 / d) - 1e-9 && s <= mid * (1.0 + 2.0 / d) + 1e-9))
          return SweepRecord{"s_nom envelope m=" + std::to_string(m), false,
                             "d=" + std::to_string(d)};
      }
      return SweepRecord{"s_nom envelope m=" + std::to_string(m), true, "d<=10000"};
    });
  }

  // Gamma-ratio sandwich: x^{x-1/2}e^{y-x}/y^{y-1/2} < G(x)/G(y) < x^{x-1}e^{y-x}/y^{y-1}
  tasks.push_back([] {
    for (unsigned xi = 2; xi <= 200; ++xi)
      for (unsigned yi = xi + 1; yi <= 200; ++yi) {
        const long double x = xi / 2.0L, y = yi / 2.0L;
        const long double lr = expl(lgammal(x) - lgammal(y));
        const long double lo = expl((x - 0.5L) * logl(x) - (y - 0.5L) * logl(y) + (y - x));
        const long double hi = expl((x - 1.0L) * logl(x) - (y - 1.0L) * logl(y) + (y - x));
        if (!(lo < lr && lr < hi))
          return SweepRecord{"gamma-ratio sandwich", false,
                             "x=" + std::to_string((double)x) + " y=" + std::to_string((double)y)};
      }
    return SweepRecord{"gamma-ratio sandwich", true, "half-integer grid 1<x<y<=100"};
  });

  // Stirling-sum chain: exact sum <= (n+x)^{n+x-1}e^{1-x}/((n+1)^n G(x)) <= (1+x/n)^n (n+x)^{x-1}e^{1-x}
  tasks.push_back([] {
    const Ratio xs[] = {Ratio(1, 2), Ratio(1, 4), Ratio(3, 8), Ratio(1, 8)};
    for (unsigned n = 1; n <= 200; ++n)
      for (const Ratio& x : xs) {
        const SumChain c = sumcnk_bound_chain(n, x);
        if (!(to_double(c.lhs) <= c.mid1 * (1 + 1e-9) && c.mid1 <= c.mid2 * (1 + 1e-9)))
          return SweepRecord{"stirling-sum chain", false, "n=" + std::to_string(n)};
      }
    return SweepRecord{"stirling-sum chain", true, "n<=200, 4 x values"};
  });

  return detail::run_tasks("bounds-identities", tasks);
}

// ---- upper bounds and the d^{eps-1} proxy ---------------------------------

inline SweepReport verify_upper_bounds(unsigned dmax = 40) {
  std::vector<detail::Task> tasks;
  const Nat qset[] = {3, 5, 7, 9};
  // PSL / PSU sqrt(pi d) bounds, float comparison
  for (Family f : {Family::SL, Family::SU})
    for (unsigned d = 2; d <= dmax; ++d)
      for (const Nat& q : qset) {
        GroupSpec s{f, d - 1, q, true};
        tasks.push_back([s] {
          const double p = to_double(proportion(s, 2).value);
          const double ub = upper_bound_p2(s).approx;
          SweepRecord rec{detail::spec_tag(s, 2) + " ub", p <= ub + 1e-9, ""};
          if (!rec.pass) rec.detail = "p=" + std::to_string(p) + " ub=" + std::to_string(ub);
          return rec;
        });
      }
  // symplectic/orthogonal q mod 4 refinements, exact rational comparison
  for (Family f : {Family::Sp, Family::SOodd, Family::SOplus, Family::SOminus})
    for (unsigned n = 2; n <= dmax / 2; ++n)
      for (const Nat& q : qset) {
        GroupSpec s{f, n, q, false};
        tasks.push_back([s] {
          const Ratio p = proportion(s, 2).value;
          const BoundResult ub = upper_bound_p2(s);
          SweepRecord rec{detail::spec_tag(s, 2) + " ub", p <= *ub.exact, ""};
          std::ostringstream os;
          os << "p=" << p << " ub=" << *ub.exact << " (" << ub.conditions << ")";
          rec.detail = os.str();
          return rec;
        });
      }
  return detail::run_tasks("upper", tasks);
}

// ---- adversarial q: p_r(G) < h + eps on constructed q ---------------------

struct AdversarialCase {
  GroupSpec spec;  // projective flag marks the PSL/PSU targets
  Nat r;
  Nat p;
  bool plus_route = false;
  Ratio target_h;  // h_{X,r}(n) of the matching table row
  std::string row;
};

// The desk-scale case list: every (family, dims, r, p) combination with
// d or 2n <= dim_cap, p in pset, p != r, restricted to rows whose
// order-parity condition is satisfiable and whose exact value the engine can
// produce (Omega rows at r = 2 only).
inline std::vector<AdversarialCase> adversarial_cases(unsigned dim_cap = 8,
                                                      std::vector<Nat> pset = {2, 3, 5},
                                                      std::vector<Nat> rset = {2, 3, 5, 7}) {
  std::vector<AdversarialCase> out;
  auto add = [&](Family f, unsigned n, bool projective, const Nat& r, const Nat& p,
                 bool plus_route, Ratio h, std::string row) {
    if (p == r) return;
    if (is_orthogonal(f) && p == 2) return;  // orthogonal engine needs odd q
    if (plus_route && (r == 2 || mult_order(p, r) % 2 != 0)) return;  // parity condition
    out.push_back({{f, n, Nat(2), projective}, r, p, plus_route, std::move(h), std::move(row)});
  };
  for (const Nat& r : rset)
    for (const Nat& p : pset) {
      // PSL_d < 1/d + eps, q-1 route
      for (unsigned d = 2; d <= dim_cap; ++d)
        add(Family::SL, d - 1, true, r, p, false, Ratio(1, d), "PSL");
      // PSU_d < 1/d + eps, q+1 route (even order of p mod r required)
      for (unsigned d = 2; d <= dim_cap; ++d)
        add(Family::SU, d - 1, true, r, p, true, Ratio(1, d), "PSU");
      for (unsigned n = 2; 2 * n <= dim_cap; ++n) {
        // Sp/SOodd < f_r(n) + eps; Omega_odd < (2,r) f_r(n) + eps (r = 2 only)
        add(Family::Sp, n, false, r, p, false, f_exact(n, r), "Sp");
        add(Family::SOodd, n, false, r, p, false, f_exact(n, r), "SOodd");
        if (r == 2) add(Family::OmegaOdd, n, false, r, p, false, 2 * f_exact(n, r), "OmegaOdd");
        // even-dimensional orthogonal rows
        add(Family::SOplus, n, false, r, p, false, g_even_exact(n, r), "SOplus");
        add(Family::SOminus, n, false, r, p, false, g_odd_exact(n, r), "SOminus");
        if (n % 2 == 1)
          add(Family::SOminus, n, false, r, p, true, g_even_exact(n, r), "SOminus n odd");
        if (r == 2) {
          add(Family::OmegaPlus, n, false, r, p, false, 2 * g_even_exact(n, r), "OmegaPlus");
          add(Family::OmegaMinus, n, false, r, p, false, 2 * g_odd_exact(n, r), "OmegaMinus");
        }
      }
    }
  return out;
}

inline SweepReport verify_adversarial(const Ratio& eps = Ratio(1, 100), unsigned dim_cap = 8) {
  std::vector<detail::Task> tasks;
  for (const AdversarialCase& c : adversarial_cases(dim_cap)) {
    tasks.push_back([c, eps] {
      const AdversarialQ aq =
          construct_adversarial_q(c.spec.family, c.spec.n, c.r, c.p, eps, 1, c.plus_route);
      GroupSpec s = c.spec;
      s.q = aq.q;
      const Ratio value = proportion(s, c.r).value;
      const Ratio bound = c.target_h + eps;
      std::ostringstream os;
      os << c.row << " n=" << c.spec.n << " r=" << c.r << " p=" << c.p;
      SweepRecord rec{os.str(), value < bound, ""};
      std::ostringstream det;
      det << "q=" << c.p << "^" << (aq.j * pow_nat(c.r == 2 && c.plus_route ? Nat(3) : c.r, aq.b))
          << " a=" << aq.a << " p_r=" << to_double(value) << " h+eps=" << to_double(bound);
      rec.detail = det.str();
      return rec;
    });
  }
  return detail::run_tasks("adversarial", tasks);
}

// ---- oracle suite ---------------------------------------------------------

struct OracleFixture {
  GroupSpec spec;
  Nat r;
  Ratio expected;
};

inline std::vector<OracleFixture> oracle_fixture_list() {
  return {
      {{Family::SL, 1, 3, false}, 2, Ratio(3, 8)},
      {{Family::SL, 1, 2, false}, 3, Ratio(2, 3)},
      {{Family::SL, 1, 3, true}, 2, Ratio(3, 4)},
      {{Family::SU, 2, 3, false}, 2, Ratio(13, 32)},
      {{Family::Sp, 2, 3, false}, 2, Ratio(29, 128)},
      {{Family::SOodd, 2, 3, false}, 2, Ratio(29, 128)},
      {{Family::OmegaOdd, 2, 3, false}, 2, Ratio(29, 64)},
      {{Family::SOplus, 2, 3, false}, 2, Ratio(9, 64)},
      // projective fixtures for the center relation
      {{Family::SL, 1, 5, true}, 2, Ratio(3, 4)},
      {{Family::Sp, 2, 3, true}, 2, Ratio(29, 64)},
  };
}

inline SweepReport verify_oracle(unsigned long long budget = 4000000) {
  std::vector<detail::Task> tasks;
  for (const OracleFixture& fx : oracle_fixture_list()) {
    tasks.push_back([fx, budget] {
      const Ratio brute = brute_proportion(fx.spec, fx.r, budget);
      const Ratio engine = proportion(fx.spec, fx.r).value;
      const bool pass = brute == engine && brute == fx.expected;
      std::ostringstream os;
      os << "brute=" << brute << " engine=" << engine << " expected=" << fx.expected;
      return SweepRecord{detail::spec_tag(fx.spec, fx.r), pass, os.str()};
    });
  }
  // closure spot checks: sampled products of built elements stay inside
  for (GroupSpec s : {GroupSpec{Family::SL, 1, 3, false}, GroupSpec{Family::Sp, 2, 3, false}}) {
    tasks.push_back([s] {
      MatrixGroupInstance g = build_group(s);
      std::unordered_set<std::string> keys;
      for (const FMat& m : g.elements) keys.insert(m.key());
      std::mt19937_64 rng(7);
      for (unsigned t = 0; t < 10000; ++t) {
        const FMat& a = g.elements[rng() % g.elements.size()];
        const FMat& b = g.elements[rng() % g.elements.size()];
        if (!keys.count(mat_mul(*g.field, a, b).key()))
          return SweepRecord{std::string("closure ") + family_name(s.family), false,
                             "product escaped the element set"};
      }
      return SweepRecord{std::string("closure ") + family_name(s.family), true, "10^4 products"};
    });
  }
  // Sp_{2n} and SO_{2n+1} share Weyl/torus data: identical brute proportions
  tasks.push_back([] {
    for (Nat r : {Nat(2), Nat(5), Nat(7)}) {
      const Ratio a = brute_proportion(GroupSpec{Family::Sp, 2, 3, false}, r);
      const Ratio b = brute_proportion(GroupSpec{Family::SOodd, 2, 3, false}, r);
      if (a != b) return SweepRecord{"Sp=SOodd r=" + r.str(), false, ""};
    }
    return SweepRecord{"Sp=SOodd brute", true, "n=2 q=3, r in {2,5,7}"};
  });
  // cyclic sanity: torus_regular_check(m, r) = 1/(m)_r
  tasks.push_back([] {
    for (unsigned long long m = 1; m <= 10000; ++m)
      for (Nat r : {Nat(2), Nat(3), Nat(5), Nat(7)})
        if (torus_regular_check(m, r) != Ratio(1, r_part(Nat(m), r)))
          return SweepRecord{"cyclic r-part", false, "m=" + std::to_string(m) + " r=" + r.str()};
    return SweepRecord{"cyclic r-part", true, "m<=10^4, r in {2,3,5,7}"};
  });
  return detail::run_tasks("oracle", tasks);
}

}  // namespace regprop
