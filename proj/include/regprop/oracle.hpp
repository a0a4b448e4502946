// Ground-truth brute force: builds small classical matrix groups over finite
// fields by sampling form-preserving matrices and closing under
// multiplication, certified against the classical order formulas, then counts
// r-regular elements (or cosets) directly from the definition.
#pragma once

#include "arith.hpp"
#include "engine.hpp"
#include "gf.hpp"

#include <memory>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

namespace regprop {

struct BudgetExceeded : DomainError {
  using DomainError::DomainError;
};
struct ClosureStalled : DomainError {
  using DomainError::DomainError;
};

// |G| by the classical product formulas; doubles as the closure certificate.
inline Nat group_order_formula(const GroupSpec& spec) {
  spec.validate();
  const Nat& q = spec.q;
  const unsigned n = spec.n;
  Nat order = 1;
  switch (spec.family) {
    case Family::SL:
    case Family::SU: {
      const unsigned d = n + 1;
      order = pow_nat(q, d * (d - 1) / 2);
      for (unsigned i = 2; i <= d; ++i) {
        if (spec.family == Family::SL)
          order *= pow_nat(q, i) - 1;
        else
          order *= pow_nat(q, i) - (i % 2 == 0 ? 1 : -1);
      }
      break;
    }
    case Family::Sp:
    case Family::SOodd:
    case Family::OmegaOdd: {
      order = pow_nat(q, n * n);
      for (unsigned i = 1; i <= n; ++i) order *= pow_nat(q, 2 * i) - 1;
      if (spec.family == Family::OmegaOdd) order /= 2;
      break;
    }
    case Family::SOplus:
    case Family::OmegaPlus:
    case Family::SOminus:
    case Family::OmegaMinus: {
      const bool plus = spec.family == Family::SOplus || spec.family == Family::OmegaPlus;
      order = pow_nat(q, n * (n - 1));
      order *= plus ? pow_nat(q, n) - 1 : pow_nat(q, n) + 1;
      for (unsigned i = 1; i + 1 <= n; ++i) order *= pow_nat(q, 2 * i) - 1;
      if (is_omega(spec.family)) order /= 2;
      break;
    }
  }
  return order;
}

struct MatrixGroupInstance {
  GroupSpec spec;
  std::shared_ptr<SmallField> field;
  std::vector<FMat> elements;
  Nat order;
};

namespace detail {

enum class FormKind { None, Symplectic, Symmetric, Hermitian };

struct FormSetup {
  std::shared_ptr<SmallField> field;
  FormKind kind = FormKind::None;
  FMat gram;          // Gram matrix of the pinned form
  unsigned conj_pow = 0;  // Frobenius iterations for the hermitian conjugation
};

// Pinned standard forms: symplectic = antidiagonal +1/-1; hermitian and odd
// orthogonal = identity; plus type = hyperbolic antidiagonal; minus type =
// hyperbolic + the anisotropic plane x^2 + y^2 (needs q = 3 mod 4).
inline FormSetup make_form(const GroupSpec& spec) {
  const auto pp = is_prime_power(spec.q);
  const unsigned d = spec.dimension();
  FormSetup fs;
  switch (spec.family) {
    case Family::SL:
      fs.field = std::make_shared<SmallField>((unsigned)pp.p, pp.e);
      fs.kind = FormKind::None;
      return fs;
    case Family::SU: {
      fs.field = std::make_shared<SmallField>((unsigned)pp.p, 2 * pp.e);
      fs.kind = FormKind::Hermitian;
      fs.conj_pow = pp.e;  // x -> x^q
      fs.gram = FMat::identity(d);
      return fs;
    }
    case Family::Sp: {
      fs.field = std::make_shared<SmallField>((unsigned)pp.p, pp.e);
      fs.kind = FormKind::Symplectic;
      fs.gram.dim = (uint8_t)d;
      for (unsigned i = 0; i < d / 2; ++i) fs.gram.at(i, d - 1 - i) = 1;
      for (unsigned i = d / 2; i < d; ++i) fs.gram.at(i, d - 1 - i) = fs.field->neg(1);
      return fs;
    }
    case Family::SOodd:
    case Family::OmegaOdd: {
      fs.field = std::make_shared<SmallField>((unsigned)pp.p, pp.e);
      fs.kind = FormKind::Symmetric;
      fs.gram = FMat::identity(d);
      return fs;
    }
    case Family::SOplus:
    case Family::OmegaPlus: {
      fs.field = std::make_shared<SmallField>((unsigned)pp.p, pp.e);
      fs.kind = FormKind::Symmetric;
      fs.gram.dim = (uint8_t)d;
      for (unsigned i = 0; i < d; ++i) fs.gram.at(i, d - 1 - i) = 1;
      return fs;
    }
    case Family::SOminus:
    case Family::OmegaMinus: {
      if (spec.q % 4 != 3)
        throw DomainError("oracle: minus-type form pinned as x^2+y^2 needs q = 3 mod 4");
      fs.field = std::make_shared<SmallField>((unsigned)pp.p, pp.e);
      fs.kind = FormKind::Symmetric;
      fs.gram.dim = (uint8_t)d;
      for (unsigned i = 0; i + 2 < d; ++i) fs.gram.at(i, d - 3 - i) = 1;  // hyperbolic block
      fs.gram.at(d - 2, d - 2) = 1;  // anisotropic plane
      fs.gram.at(d - 1, d - 1) = 1;
      return fs;
    }
  }
  throw DomainError("oracle: unsupported family");
}

inline uint16_t form_eval(const FormSetup& fs, const std::vector<uint16_t>& u,
                          const std::vector<uint16_t>& v) {
  const SmallField& F = *fs.field;
  const unsigned d = fs.gram.dim ? fs.gram.dim : (unsigned)u.size();
  uint16_t acc = 0;
  for (unsigned i = 0; i < d; ++i) {
    if (u[i] == 0) continue;
    const uint16_t ui = fs.kind == FormKind::Hermitian ? F.frobenius(u[i], fs.conj_pow) : u[i];
    for (unsigned j = 0; j < d; ++j) {
      if (fs.gram.at(i, j) == 0 || v[j] == 0) continue;
      acc = F.add(acc, F.mul(F.mul(ui, fs.gram.at(i, j)), v[j]));
    }
  }
  return acc;
}

// Uniform isometry of the pinned form by column-by-column sampling: each
// column is drawn uniformly from the vectors satisfying the Gram constraints
// against all previous columns.  Transitivity of the isometry group on such
// partial frames makes the result uniform.
inline bool sample_isometry(const FormSetup& fs, unsigned d, std::mt19937_64& rng, FMat& out) {
  const SmallField& F = *fs.field;
  const unsigned q = F.q();
  std::vector<std::vector<uint16_t>> cols;
  std::vector<uint16_t> v(d);
  std::vector<std::vector<uint16_t>> candidates;
  for (unsigned c = 0; c < d; ++c) {
    candidates.clear();
    // enumerate all q^d vectors
    unsigned long long total = 1;
    for (unsigned i = 0; i < d; ++i) total *= q;
    for (unsigned long long code = 0; code < total; ++code) {
      unsigned long long x = code;
      for (unsigned i = 0; i < d; ++i) {
        v[i] = (uint16_t)(x % q);
        x /= q;
      }
      bool ok = true;
      for (unsigned j = 0; j < c && ok; ++j)
        ok = form_eval(fs, cols[j], v) == fs.gram.at(j, c);
      if (ok && fs.kind != FormKind::Symplectic)
        ok = form_eval(fs, v, v) == fs.gram.at(c, c);
      if (ok && fs.kind == FormKind::Symplectic)
        ok = form_eval(fs, v, v) == 0;
      if (ok) candidates.push_back(v);
    }
    if (candidates.empty()) return false;
    cols.push_back(candidates[rng() % candidates.size()]);
  }
  out.dim = (uint8_t)d;
  for (unsigned j = 0; j < d; ++j)
    for (unsigned i = 0; i < d; ++i) out.at(i, j) = cols[j][i];
  return true;
}

inline FMat sample_candidate(const GroupSpec& spec, const FormSetup& fs, std::mt19937_64& rng,
                             unsigned long long& budget) {
  const SmallField& F = *fs.field;
  const unsigned d = spec.dimension();
  FMat m;
  for (;;) {
    if (budget-- == 0) throw BudgetExceeded("oracle: sample budget exhausted");
    if (fs.kind == FormKind::None) {
      m.dim = (uint8_t)d;
      for (unsigned i = 0; i < (unsigned)d * d; ++i) m.a[i] = (uint16_t)(rng() % F.q());
    } else {
      if (!sample_isometry(fs, d, rng, m)) continue;
    }
    if (mat_det(F, m) == 1) return m;  // SL/SU/SO/Sp all sit at det = 1
  }
}

inline void close_under_products(const SmallField& F, std::vector<FMat>& elems,
                                 std::unordered_set<std::string>& keys,
                                 const std::vector<FMat>& gens, const Nat& order_cap) {
  size_t head = 0;
  while (head < elems.size()) {
    const FMat u = elems[head++];
    for (const FMat& g : gens) {
      FMat w = mat_mul(F, u, g);
      if (keys.insert(w.key()).second) {
        elems.push_back(w);
        if (Nat(elems.size()) > order_cap)
          throw DomainError("oracle: closure exceeded the order certificate");
      }
    }
  }
}

}  // namespace detail

inline unsigned element_order(const SmallField& F, const FMat& m, unsigned cap = 1000000) {
  const FMat id = FMat::identity(m.dim);
  FMat acc = m;
  for (unsigned k = 1; k <= cap; ++k) {
    if (acc == id) return k;
    acc = mat_mul(F, acc, m);
  }
  throw CapExceeded("element_order: cap exceeded");
}

inline MatrixGroupInstance build_group(const GroupSpec& spec,
                                       unsigned long long sample_budget = 4000000,
                                       unsigned long long seed = 0x5eed) {
  spec.validate();
  const Nat order = group_order_formula(spec);
  if (order > 1000000) throw BudgetExceeded("build_group: group order above oracle cap 10^6");

  GroupSpec base = spec;
  base.projective = false;
  const bool omega = is_omega(spec.family);
  if (omega) {
    // Omega = derived-subgroup closure inside SO, certified by index 2
    GroupSpec so = base;
    so.family = spec.family == Family::OmegaOdd    ? Family::SOodd
                : spec.family == Family::OmegaPlus ? Family::SOplus
                                                   : Family::SOminus;
    MatrixGroupInstance sog = build_group(so, sample_budget, seed);
    const SmallField& F = *sog.field;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<FMat> elems = {FMat::identity(base.dimension())};
    std::unordered_set<std::string> keys = {elems[0].key()};
    std::vector<FMat> gens;
    unsigned long long guard = sample_budget;
    while (Nat(elems.size()) != order) {
      if (guard-- == 0) throw ClosureStalled("build_group: Omega closure stalled");
      const FMat& x = sog.elements[rng() % sog.elements.size()];
      const FMat& y = sog.elements[rng() % sog.elements.size()];
      // commutator x y x^-1 y^-1 via orders (elements have finite order)
      FMat xi = x, yi = y;
      const unsigned ox = element_order(F, x), oy = element_order(F, y);
      for (unsigned k = 1; k + 1 < ox; ++k) xi = mat_mul(F, xi, x);
      for (unsigned k = 1; k + 1 < oy; ++k) yi = mat_mul(F, yi, y);
      if (ox == 1) xi = FMat::identity(base.dimension());
      if (oy == 1) yi = FMat::identity(base.dimension());
      FMat comm = mat_mul(F, mat_mul(F, x, y), mat_mul(F, xi, yi));
      if (!keys.count(comm.key())) {
        gens.push_back(comm);
        detail::close_under_products(F, elems, keys, gens, order);
      }
    }
    return {spec, sog.field, std::move(elems), order};
  }

  detail::FormSetup fs = detail::make_form(base);
  const SmallField& F = *fs.field;
  std::mt19937_64 rng(seed);
  std::vector<FMat> elems = {FMat::identity(base.dimension())};
  std::unordered_set<std::string> keys = {elems[0].key()};
  std::vector<FMat> gens;
  unsigned long long budget = sample_budget;
  while (Nat(elems.size()) != order) {
    FMat g = detail::sample_candidate(base, fs, rng, budget);
    if (keys.count(g.key())) continue;
    gens.push_back(g);
    detail::close_under_products(F, elems, keys, gens, order);
  }
  return {spec, fs.field, std::move(elems), order};
}

// Scalar matrices contained in the built group (the center for these
// families).
inline std::vector<FMat> scalar_subgroup(const MatrixGroupInstance& g) {
  std::vector<FMat> out;
  const unsigned d = g.elements.front().dim;
  for (unsigned lambda = 1; lambda < g.field->q(); ++lambda) {
    FMat s;
    s.dim = (uint8_t)d;
    for (unsigned i = 0; i < d; ++i) s.at(i, i) = (uint16_t)lambda;
    // membership: scalar isometries of det 1 only; test against the element set
    for (const FMat& e : g.elements)
      if (e == s) {
        out.push_back(s);
        break;
      }
  }
  return out;
}

// Definition-level count of r-regular elements (or cosets, for projective
// specs): #{g : r does not divide |g|} / |G|.
inline Ratio brute_proportion(const MatrixGroupInstance& g, const Nat& r) {
  const SmallField& F = *g.field;
  if (!g.spec.projective) {
    Nat count = 0;
    for (const FMat& m : g.elements)
      if (element_order(F, m) % r != 0) ++count;
    return Ratio(count, g.order);
  }
  // coset order: least k with m^k scalar in the group
  const std::vector<FMat> z = scalar_subgroup(g);
  std::unordered_set<std::string> zkeys;
  for (const FMat& s : z) zkeys.insert(s.key());
  auto coset_order = [&](const FMat& m) {
    FMat acc = m;
    for (unsigned k = 1;; ++k) {
      if (zkeys.count(acc.key())) return k;
      acc = mat_mul(F, acc, m);
      if (k > 1000000) throw CapExceeded("coset order cap");
    }
  };
  Nat count = 0;
  for (const FMat& m : g.elements)
    if (coset_order(m) % r != 0) ++count;
  return Ratio(count, g.order);  // each coset counted |Z| times on both sides
}

inline Ratio brute_proportion(const GroupSpec& spec, const Nat& r,
                              unsigned long long sample_budget = 4000000) {
  return brute_proportion(build_group(spec, sample_budget), r);
}

// Proportion of elements of Z/m with additive order coprime to r; must equal
// 1/(m)_r.  Validates the abelian r-complement argument on explicit cyclic
// groups.
inline Ratio torus_regular_check(unsigned long long m, const Nat& r) {
  if (m < 1 || m > 1000000) throw DomainError("torus_regular_check: m out of range");
  const unsigned long long rr = r.convert_to<unsigned long long>();
  unsigned long long count = 0;
  for (unsigned long long k = 0; k < m; ++k) {
    unsigned long long ord = m / std::gcd(m, k);
    if (ord % rr != 0) ++count;
  }
  return Ratio(count, m);
}

}  // namespace regprop
