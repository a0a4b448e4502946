// Small finite fields GF(p^e) as lookup tables.  Elements are indices
// 0..p^e-1 encoding polynomials over GF(p) in base-p digits, reduced modulo a
// pinned irreducible.  Scale target: oracle-sized groups, q <= ~121.
#pragma once

#include "arith.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace regprop {

class SmallField {
 public:
  SmallField(unsigned p, unsigned e) : p_(p), e_(e) {
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) q_ *= p;
    if (q_ > 4096) throw DomainError("SmallField: field too large for table representation");
    build_tables();
  }

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned q() const { return q_; }

  uint16_t add(uint16_t a, uint16_t b) const { return add_[a * q_ + b]; }
  uint16_t sub(uint16_t a, uint16_t b) const { return add_[a * q_ + neg_[b]]; }
  uint16_t mul(uint16_t a, uint16_t b) const { return mul_[a * q_ + b]; }
  uint16_t neg(uint16_t a) const { return neg_[a]; }
  uint16_t inv(uint16_t a) const {
    if (a == 0) throw DomainError("SmallField: inverse of zero");
    return inv_[a];
  }
  // Frobenius x -> x^p iterated k times (x -> x^{p^k})
  uint16_t frobenius(uint16_t a, unsigned k = 1) const {
    uint16_t r = a;
    for (unsigned i = 0; i < k; ++i) r = frob_[r];
    return r;
  }
  uint16_t pow(uint16_t a, unsigned long long n) const {
    uint16_t acc = 1, b = a;
    while (n) {
      if (n & 1) acc = mul(acc, b);
      b = mul(b, b);
      n >>= 1;
    }
    return acc;
  }
  uint16_t from_int(long v) const {
    long m = (long)p_;
    long x = ((v % m) + m) % m;
    return (uint16_t)x;  // prime-subfield embedding
  }

 private:
  // pinned irreducibles, constant coefficient first (monic of degree e)
  static std::vector<unsigned> irreducible(unsigned p, unsigned e) {
    if (e == 1) return {};
    if (p == 2 && e == 2) return {1, 1};           // x^2+x+1
    if (p == 2 && e == 3) return {1, 1, 0};        // x^3+x+1
    if (p == 2 && e == 4) return {1, 1, 0, 0};     // x^4+x+1
    if (p == 3 && e == 2) return {2, 2};           // x^2+2x+2
    if (p == 3 && e == 3) return {1, 2, 0};        // x^3+2x+1
    if (p == 5 && e == 2) return {2, 4};           // x^2+4x+2
    if (p == 7 && e == 2) return {3, 6};           // x^2+6x+3
    throw DomainError("SmallField: no pinned irreducible for this (p,e)");
  }

  std::vector<unsigned> digits(unsigned x) const {
    std::vector<unsigned> d(e_);
    for (unsigned i = 0; i < e_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    return d;
  }
  unsigned undigits(const std::vector<unsigned>& d) const {
    unsigned x = 0;
    for (unsigned i = e_; i-- > 0;) x = x * p_ + d[i];
    return x;
  }

  void build_tables() {
    const auto irr = irreducible(p_, e_);
    add_.resize((size_t)q_ * q_);
    mul_.resize((size_t)q_ * q_);
    neg_.resize(q_);
    inv_.resize(q_);
    frob_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) {
      auto da = digits(a);
      std::vector<unsigned> dn(e_);
      for (unsigned i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[a] = (uint16_t)undigits(dn);
      for (unsigned b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<unsigned> ds(e_);
        for (unsigned i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
        add_[(size_t)a * q_ + b] = (uint16_t)undigits(ds);
        // polynomial product reduced mod irreducible
        std::vector<unsigned> prod(2 * e_ - 1, 0);
        for (unsigned i = 0; i < e_; ++i)
          for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (unsigned deg = 2 * e_ - 2; deg >= e_ && deg < prod.size(); --deg) {
          const unsigned c = prod[deg];
          if (c) {
            prod[deg] = 0;
            for (unsigned i = 0; i < e_; ++i)
              prod[deg - e_ + i] = (prod[deg - e_ + i] + c * (p_ - irr[i])) % p_;
          }
        }
        prod.resize(e_);
        mul_[(size_t)a * q_ + b] = (uint16_t)undigits(prod);
      }
    }
    for (unsigned a = 1; a < q_; ++a) {
      for (unsigned b = 1; b < q_; ++b)
        if (mul_[(size_t)a * q_ + b] == 1) {
          inv_[a] = (uint16_t)b;
          break;
        }
    }
    for (unsigned a = 0; a < q_; ++a) frob_[a] = pow((uint16_t)a, p_);
  }

  unsigned p_, e_, q_;
  std::vector<uint16_t> add_, mul_, neg_, inv_, frob_;
};

// Dense square matrix over a SmallField.  Dimension <= 8.
struct FMat {
  static constexpr unsigned kMaxDim = 8;
  uint8_t dim = 0;
  std::array<uint16_t, kMaxDim * kMaxDim> a{};

  uint16_t& at(unsigned i, unsigned j) { return a[i * dim + j]; }
  uint16_t at(unsigned i, unsigned j) const { return a[i * dim + j]; }

  static FMat identity(unsigned d) {
    FMat m;
    m.dim = (uint8_t)d;
    for (unsigned i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const FMat& o) const { return dim == o.dim && a == o.a; }

  // canonical byte key for dedup
  std::string key() const {
    std::string s;
    s.reserve((size_t)dim * dim * 2);
    for (unsigned i = 0; i < (unsigned)dim * dim; ++i) {
      s.push_back((char)(a[i] & 0xff));
      s.push_back((char)(a[i] >> 8));
    }
    return s;
  }
};

inline FMat mat_mul(const SmallField& F, const FMat& x, const FMat& y) {
  FMat z;
  z.dim = x.dim;
  for (unsigned i = 0; i < x.dim; ++i)
    for (unsigned j = 0; j < x.dim; ++j) {
      uint16_t acc = 0;
      for (unsigned k = 0; k < x.dim; ++k) acc = F.add(acc, F.mul(x.at(i, k), y.at(k, j)));
      z.at(i, j) = acc;
    }
  return z;
}

inline uint16_t mat_det(const SmallField& F, FMat m) {
  uint16_t det = 1;
  const unsigned d = m.dim;
  for (unsigned c = 0; c < d; ++c) {
    unsigned piv = c;
    while (piv < d && m.at(piv, c) == 0) ++piv;
    if (piv == d) return 0;
    if (piv != c) {
      for (unsigned j = 0; j < d; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, m.at(c, c));
    const uint16_t pinv = F.inv(m.at(c, c));
    for (unsigned i = c + 1; i < d; ++i) {
      if (m.at(i, c) == 0) continue;
      const uint16_t f = F.mul(m.at(i, c), pinv);
      for (unsigned j = c; j < d; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(c, j)));
    }
  }
  return det;
}

}  // namespace regprop
