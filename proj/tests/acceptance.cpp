// Acceptance gate: runs the full verification suites and prints one
// "criterion N: PASS/FAIL" line per criterion.  Exit code 1 if any fails.
#include "regprop/verify.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <string>

using namespace regprop;

namespace {

int failures = 0;

void report(int n, bool pass, const std::string& note) {
  std::printf("criterion %d: %s%s%s\n", n, pass ? "PASS" : "FAIL", note.empty() ? "" : " — ",
              note.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string violation_note(const SweepReport& rep) {
  std::string note = std::to_string(rep.records.size()) + " checks";
  if (rep.violations()) {
    note += ", " + std::to_string(rep.violations()) + " violations:";
    unsigned shown = 0;
    for (const auto& r : rep.records)
      if (!r.pass && shown++ < 3) note += " [" + r.point + " " + r.detail + "]";
  }
  return note;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

int main() {
  // 1. oracle fixtures: brute force == engine == pinned rationals
  {
    SweepReport rep = verify_oracle();
    // fixture records only (the first 10); the extra cross-checks feed
    // criterion 5 and general sanity
    bool pass = true;
    std::size_t checked = 0;
    const auto fixtures = oracle_fixture_list();
    for (std::size_t i = 0; i < fixtures.size() && i < rep.records.size(); ++i) {
      ++checked;
      if (!rep.records[i].pass) pass = false;
    }
    report(1, pass && checked == fixtures.size(),
           std::to_string(checked) + " fixtures, brute == engine == expected");

    // 5. center relation p_r(G/Z) = |Z|_r p_r(G) against oracle coset counting
    bool pass5 = true;
    std::string note5;
    for (const GroupSpec s : {GroupSpec{Family::SL, 1, 3, true}, GroupSpec{Family::SL, 1, 5, true},
                              GroupSpec{Family::Sp, 2, 3, true}}) {
      const Nat r = 2;
      const Ratio coset = brute_proportion(s, r);
      GroupSpec lin = s;
      lin.projective = false;
      const Ratio relation = Ratio(r_part(center_order(lin), r)) * proportion(lin, r).value;
      const Ratio engine = proportion(s, r).value;
      if (!(coset == relation && coset == engine)) {
        pass5 = false;
        note5 += " mismatch at " + std::string(family_name(s.family)) + " n=" +
                 std::to_string(s.n);
      }
    }
    report(5, pass5, "PSL_2(3), PSL_2(5), PSp_4(3): coset count == |Z|_r * p_r" + note5);
  }

  // 2. DP == enumeration across the full grid
  {
    SweepReport rep = verify_engines(8);
    report(2, rep.violations() == 0, violation_note(rep));
  }

  // 3. p_r(G) >= h_{X,r}(n) across all table rows, n <= 40
  {
    SweepReport rep = verify_table1(40);
    report(3, rep.violations() == 0, violation_note(rep));
  }

  // 4. adversarial q: p_r(G) < h + eps at eps = 1/100, dims <= 8, p in {2,3,5}
  {
    SweepReport rep = verify_adversarial(Ratio(1, 100), 8);
    report(4, rep.violations() == 0, violation_note(rep));
  }

  // 6. number theory closed forms vs big-integer ground truth
  {
    SweepReport rep = verify_numbertheory();
    report(6, rep.violations() == 0, violation_note(rep));
  }

  // 7 + 8. bound identities and inequality suites, split by record name
  {
    SweepReport rep = verify_bounds_identities();
    const std::set<std::string> ids = {"gamma-agreement r=2", "factorial-form r odd",
                                       "godd+geven=2f", "rising-factorial identity"};
    bool pass7 = true, pass8 = true;
    std::string note7, note8;
    std::size_t n7 = 0, n8 = 0;
    for (const auto& r : rep.records) {
      const bool identity =
          ids.count(r.point) || starts_with(r.point, "gamma-agreement") ||
          starts_with(r.point, "factorial-form");
      (identity ? n7 : n8)++;
      if (!r.pass) {
        (identity ? pass7 : pass8) = false;
        (identity ? note7 : note8) += " [" + r.point + " " + r.detail + "]";
      }
    }
    report(7, pass7, std::to_string(n7) + " identity suites" + note7);
    // 9 also folds in the upper-bound sweep
    SweepReport up = verify_upper_bounds(40);
    report(8, pass8, std::to_string(n8) + " inequality suites" + note8);
    report(9, up.violations() == 0, violation_note(up));
  }

  // 10. d^{eps-1} proxy: exact 2^a sum for a=2, q=5, d <= 60; ratio to
  // d^{2^-a - 1} = d^{-3/4} must be bounded and settle monotonically.
  {
    bool pass = true;
    std::string note;
    const double limit = 4.0 / std::tgamma(0.25);  // ~1.10326, the d->inf value
    double prev_ratio = 0.0, prev_step = 1e9;
    unsigned dominated = 0, total = 0;
    for (unsigned d = 1; d <= 60; ++d) {
      const Ratio v = lemma_alpha_bound(d, 5, 2);
      const double ratio = to_double(v) / std::pow((double)d, -0.75);
      if (!(ratio <= limit + 1e-9)) {
        pass = false;
        note += " unbounded at d=" + std::to_string(d);
      }
      if (d >= 2) {
        const double step = ratio - prev_ratio;
        if (!(step > 0.0)) {
          pass = false;
          note += " not increasing at d=" + std::to_string(d);
        }
        if (d >= 3 && !(step <= prev_step + 1e-12)) {
          pass = false;
          note += " not settling at d=" + std::to_string(d);
        }
        prev_step = step;
      }
      prev_ratio = ratio;
      // domination over p_2(SL_d(5)): a finding, reported but not asserted
      if (d >= 2) {
        ++total;
        if (v >= proportion({Family::SL, d - 1, 5, false}, 2).value) ++dominated;
      }
    }
    note = "ratio settles toward " + std::to_string(limit) + "; domination holds at " +
           std::to_string(dominated) + "/" + std::to_string(total) + " of 2<=d<=60" + note;
    report(10, pass, note);
  }

  return failures ? 1 : 0;
}
