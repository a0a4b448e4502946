// regprop: exact r-regular proportions in finite classical groups, bounds,
// verification sweeps, table rendering, and oracle fixture regeneration.
//
// Exit codes: 0 success / no violation; 1 verified-inequality violation or
// fixture mismatch; 2 invalid input or budget exhaustion.
#include "regprop/bounds.hpp"
#include "regprop/engine.hpp"
#include "regprop/oracle.hpp"
#include "regprop/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

using json = nlohmann::json;
using namespace regprop;

namespace {

struct GroupArgs {
  std::string family;
  unsigned n = 0;
  unsigned d = 0;
  std::string q = "0";
  bool projective = false;
};

void add_group_flags(CLI::App* cmd, GroupArgs& a, bool need_q) {
  cmd->add_option("--family", a.family,
                  "SL|SU|Sp|SOodd|SOplus|SOminus|OmegaOdd|OmegaPlus|OmegaMinus "
                  "(PSL/PSU/PSp accepted as projective shorthands)")
      ->required();
  cmd->add_option("--n", a.n, "untwisted Lie rank");
  cmd->add_option("--d", a.d, "matrix dimension (alternative to --n)");
  auto* q = cmd->add_option("--q", a.q, "field size (any prime power, arbitrarily large)");
  if (need_q) q->required();
  cmd->add_flag("--projective", a.projective, "central quotient G/Z");
}

GroupSpec parse_spec(GroupArgs a, bool validate_q = true) {
  static const std::map<std::string, std::pair<Family, bool>> names = {
      {"SL", {Family::SL, false}},       {"SU", {Family::SU, false}},
      {"Sp", {Family::Sp, false}},       {"SOodd", {Family::SOodd, false}},
      {"SOplus", {Family::SOplus, false}}, {"SOminus", {Family::SOminus, false}},
      {"OmegaOdd", {Family::OmegaOdd, false}}, {"OmegaPlus", {Family::OmegaPlus, false}},
      {"OmegaMinus", {Family::OmegaMinus, false}},
      {"PSL", {Family::SL, true}},       {"PSU", {Family::SU, true}},
      {"PSp", {Family::Sp, true}},
  };
  auto it = names.find(a.family);
  if (it == names.end()) throw DomainError("unknown family: " + a.family);
  GroupSpec s;
  s.family = it->second.first;
  s.projective = it->second.second || a.projective;
  if (a.d != 0) {
    switch (s.family) {
      case Family::SL:
      case Family::SU:
        if (a.d < 2) throw DomainError("--d must be >= 2");
        s.n = a.d - 1;
        break;
      case Family::Sp:
      case Family::SOplus:
      case Family::SOminus:
      case Family::OmegaPlus:
      case Family::OmegaMinus:
        if (a.d % 2 != 0) throw DomainError("--d must be even for this family");
        s.n = a.d / 2;
        break;
      case Family::SOodd:
      case Family::OmegaOdd:
        if (a.d % 2 != 1) throw DomainError("--d must be odd for this family");
        s.n = a.d / 2;
        break;
    }
  } else if (a.n != 0) {
    s.n = a.n;
  } else {
    throw DomainError("one of --n / --d is required");
  }
  s.q = Nat(a.q);
  if (validate_q) is_prime_power(s.q);  // throws NotAPrimePower
  s.validate();
  return s;
}

json group_json(const GroupSpec& s) {
  return {{"family", family_name(s.family)},
          {"n", s.n},
          {"q", s.q.str()},
          {"dimension", s.dimension()},
          {"projective", s.projective}};
}

json ratio_json(const Ratio& v) {
  return {{"num", numerator(v).str()}, {"den", denominator(v).str()}, {"approx", to_double(v)}};
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Enumeration: return "enum";
    case Method::Recurrence: return "dp";
    case Method::Relation: return "relation";
  }
  return "?";
}

int cmd_exact(const GroupArgs& ga, const std::string& rs, const std::string& method) {
  const GroupSpec s = parse_spec(ga);
  const Nat r(rs);
  if (!is_prime(r)) throw DomainError("--r must be prime");
  ProportionResult res;
  if (method == "enum" && !s.projective && !is_omega(s.family))
    res = exact_proportion_enum(s, r);
  else if (method == "dp" && !s.projective && !is_omega(s.family))
    res = exact_proportion_dp(s, r);
  else
    res = proportion(s, r);
  json out = {{"group", group_json(s)},
              {"r", r.str()},
              {"proportion", ratio_json(res.value)},
              {"method", method_name(res.method)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_bound(const GroupArgs& ga, const std::string& rs, const std::string& kind,
              const std::string& source) {
  const GroupSpec s = parse_spec(ga, ga.q != "0");
  const Nat r(rs);
  if (!is_prime(r)) throw DomainError("--r must be prime");
  BoundResult b;
  if (kind == "lower") {
    if (source == "table" || source == "table1")
      b = h_table(s.family, r, s.n);
    else if (source == "corollary")
      b = corollary_constants(s, r, BoundKind::Lower);
    else
      b = lower_bound(s, r);
  } else if (kind == "upper") {
    if (r != 2 && source != "corollary")
      throw UnsupportedExact("no q-uniform upper bound for odd r; try --source corollary");
    b = source == "corollary" ? corollary_constants(s, r, BoundKind::Upper) : upper_bound_p2(s);
  } else {
    throw DomainError("--kind must be lower|upper");
  }
  json out = {{"group", group_json(s)},
              {"r", r.str()},
              {"kind", kind},
              {"source", b.source},
              {"conditions", b.conditions},
              {"approx", b.approx}};
  if (b.exact) out["exact"] = ratio_json(*b.exact);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, unsigned nmax, const std::string& eps_str,
               const std::string& csv_path, const std::string& json_path) {
  SweepReport rep;
  if (suite == "engines")
    rep = verify_engines(nmax ? nmax : 8);
  else if (suite == "table1")
    rep = verify_table1(nmax ? nmax : 40);
  else if (suite == "numbertheory")
    rep = verify_numbertheory();
  else if (suite == "bounds-identities") {
    rep = verify_bounds_identities();
    SweepReport ub = verify_upper_bounds();
    rep.records.insert(rep.records.end(), ub.records.begin(), ub.records.end());
  } else if (suite == "adversarial")
    rep = verify_adversarial(Ratio(eps_str), nmax ? nmax : 8);
  else if (suite == "oracle")
    rep = verify_oracle();
  else
    throw DomainError("unknown suite: " + suite);

  if (!csv_path.empty()) {
    std::ofstream os(csv_path);
    rep.write_csv(os);
  }
  json summary = {{"suite", suite},
                  {"points", rep.records.size()},
                  {"violations", rep.violations()},
                  {"violating_points", json::array()}};
  for (auto& r : rep.records)
    if (!r.pass) summary["violating_points"].push_back({{"point", r.point}, {"detail", r.detail}});
  if (!json_path.empty()) std::ofstream(json_path) << summary.dump(2) << "\n";
  std::cout << summary.dump(2) << "\n";
  return rep.violations() == 0 ? 0 : 1;
}

int cmd_table(const std::string& which, unsigned nmax, const std::string& csv_path) {
  const Family rows[] = {Family::SL,     Family::SU,        Family::Sp,
                         Family::SOodd,  Family::OmegaOdd,  Family::SOplus,
                         Family::OmegaPlus, Family::SOminus, Family::OmegaMinus};
  const Nat rvals[] = {2, 3};
  std::ostringstream csv;
  csv << "row,r,n,value\n";
  std::cout << std::left << std::setw(12) << "row" << std::setw(4) << "r";
  for (unsigned n = 2; n <= nmax; ++n) std::cout << std::setw(12) << ("n=" + std::to_string(n));
  std::cout << "\n";
  for (Family f : rows)
    for (const Nat& r : rvals) {
      std::string label = (f == Family::SL) ? "PSL" : (f == Family::SU) ? "PSU" : family_name(f);
      std::cout << std::left << std::setw(12) << label << std::setw(4) << r.str();
      for (unsigned n = 2; n <= nmax; ++n) {
        double v;
        if (which == "corollaries") {
          if (!is_orthogonal(f) && f != Family::Sp) {
            std::cout << std::setw(12) << "-";
            continue;
          }
          v = corollary_constants({f, n, 3, false}, r, BoundKind::Lower).approx;
        } else {
          v = h_table(f, r, n).approx;
        }
        std::ostringstream cell;
        cell << std::setprecision(5) << v;
        std::cout << std::setw(12) << cell.str();
        csv << label << ',' << r << ',' << n << ',' << std::setprecision(17) << v << "\n";
      }
      std::cout << "\n";
    }
  if (!csv_path.empty()) std::ofstream(csv_path) << csv.str();
  return 0;
}

int cmd_oracle(bool regen, unsigned long long budget, const std::string& path) {
  if (!regen) throw DomainError("oracle: pass --regen to rebuild fixtures");
  json stored;
  {
    std::ifstream is(path);
    if (is) is >> stored;
  }
  json out = {{"schema", 1}, {"fixtures", json::array()}};
  bool mismatch = false;
  for (const OracleFixture& fx : oracle_fixture_list()) {
    const Ratio brute = brute_proportion(fx.spec, fx.r, budget);
    json rec = {{"family", family_name(fx.spec.family)},
                {"n", fx.spec.n},
                {"q", fx.spec.q.str()},
                {"projective", fx.spec.projective},
                {"r", fx.r.str()},
                {"num", numerator(brute).str()},
                {"den", denominator(brute).str()}};
    out["fixtures"].push_back(rec);
    std::cerr << "regen " << (fx.spec.projective ? "P" : "") << family_name(fx.spec.family)
              << " n=" << fx.spec.n << " q=" << fx.spec.q << " r=" << fx.r << " -> "
              << brute << "\n";
  }
  if (stored.contains("fixtures") && stored["fixtures"] != out["fixtures"]) {
    mismatch = true;
    std::cerr << "mismatch with stored fixtures at " << path << "\n";
  }
  std::ofstream(path) << out.dump(2) << "\n";
  return mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact proportions of r-regular elements in finite classical groups"};
  app.require_subcommand(1);

  GroupArgs ga;
  std::string rs = "2", method = "auto", kind = "lower", source = "lemma";
  std::string suite, eps = "1/100", csv_path, json_path, which = "main", fixture_path;
  unsigned nmax = 0;
  bool regen = false;
  unsigned long long budget = 4000000;

  auto* exact = app.add_subcommand("exact", "exact p_r(G) as a rational");
  add_group_flags(exact, ga, true);
  exact->add_option("--r", rs, "prime r")->required();
  exact->add_option("--method", method, "enum|dp|auto");

  auto* bound = app.add_subcommand("bound", "lower/upper bounds on p_r(G)");
  add_group_flags(bound, ga, false);
  bound->add_option("--r", rs, "prime r")->required();
  bound->add_option("--kind", kind, "lower|upper");
  bound->add_option("--source", source, "table1|lemma|corollary");

  auto* verify = app.add_subcommand("verify", "verification sweeps");
  verify->add_option("--suite", suite,
                     "table1|adversarial|engines|numbertheory|bounds-identities|oracle")
      ->required();
  verify->add_option("--nmax", nmax, "grid size override");
  verify->add_option("--eps", eps, "epsilon for the adversarial suite (rational)");
  verify->add_option("--csv", csv_path, "write per-point CSV here");
  verify->add_option("--json", json_path, "write JSON summary here");

  auto* table = app.add_subcommand("table", "render the lower-bound table");
  table->add_option("--which", which, "main|corollaries");
  table->add_option("--nmax", nmax, "largest rank")->required();
  table->add_option("--csv", csv_path, "write CSV here");

  auto* oracle = app.add_subcommand("oracle", "oracle fixture regeneration");
  oracle->add_flag("--regen", regen, "rebuild all fixtures");
  oracle->add_option("--budget", budget, "sampling budget");
  oracle->add_option("--file", fixture_path, "fixture file path");

  CLI11_PARSE(app, argc, argv);
  try {
    if (exact->parsed()) return cmd_exact(ga, rs, method);
    if (bound->parsed()) return cmd_bound(ga, rs, kind, source);
    if (verify->parsed()) return cmd_verify(suite, nmax, eps, csv_path, json_path);
    if (table->parsed()) return cmd_table(which, nmax ? nmax : 8, csv_path);
    if (oracle->parsed())
      return cmd_oracle(regen, budget,
                        fixture_path.empty() ? "data/fixtures.json" : fixture_path);
  } catch (const UnsupportedExact& e) {
    std::cerr << "error: " << e.what() << " (use the `bound` subcommand for this case)\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
