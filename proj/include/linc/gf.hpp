#pragma once
// Exact arithmetic in GF(p^s) backed by exp/log tables.
//
// An element is an integer in [0, q), q = p^s: the value sum c_i p^i encodes
// the polynomial-basis coordinates c_i with respect to the field's defining
// polynomial. This encoding is also the interchange format used by all
// serialization, so 0 and 1 are the additive and multiplicative identities.
#include <cstdint>
#include <memory>
#include <vector>

#include "linc/error.hpp"

namespace linc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Construct GF(p^s), p^s <= 2^20. The defining polynomial (low-degree-first,
// length s+1) must be monic and primitive over GF(p). When omitted, the
// smallest primitive polynomial is chosen deterministically: candidates are
// ordered by the integer sum c_i p^i of their non-leading coefficients.
FieldPtr make_field(uint32_t p, uint32_t s);
FieldPtr make_field(uint32_t p, uint32_t s, const std::vector<uint32_t>& defining_poly);

class Field {
 public:
  static constexpr uint64_t max_order = uint64_t{1} << 20;

  uint32_t p() const { return p_; }
  uint32_t s() const { return s_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& defining_poly() const { return poly_; }

  // The fixed primitive element: the residue class of x for s > 1, the root
  // of the linear defining polynomial for s = 1.
  uint32_t alpha() const { return exp_[1]; }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (!add_.empty()) return add_[size_t(a) * q_ + b];
    return add_slow(a, b);
  }
  uint32_t neg(uint32_t a) const { return neg_[a]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg_[b]); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, int64_t e) const;

  // alpha^i, exponent reduced mod q-1.
  uint32_t exp(uint64_t i) const { return exp_[i % (q_ - 1)]; }
  uint32_t log(uint32_t a) const {
    if (a == 0) fail("ZeroElement: log of zero");
    return log_[a];
  }
  uint64_t element_order(uint32_t a) const;

  bool same(const Field& other) const {
    return p_ == other.p_ && s_ == other.s_ && poly_ == other.poly_;
  }

 private:
  friend FieldPtr make_field(uint32_t, uint32_t, const std::vector<uint32_t>&);
  Field() = default;
  uint32_t add_slow(uint32_t a, uint32_t b) const;
  void build_tables();

  uint32_t p_ = 0, s_ = 0, q_ = 0;
  std::vector<uint32_t> poly_;
  std::vector<uint32_t> exp_, log_, neg_;
  std::vector<uint32_t> add_;  // full addition table, only for small non-binary fields
};

// Subfield embedding GF(q) -> GF(Q), Q = q^m. The image of the small field's
// primitive element is the smallest power big_alpha^{t u}, t = (Q-1)/(q-1),
// u >= 1, that is a root of the small defining polynomial; extending that
// root multiplicatively and additively makes forward() a ring homomorphism.
// (u = 1 whenever big_alpha^t itself is a root.)
class Embedding {
 public:
  const FieldPtr& small() const { return small_; }
  const FieldPtr& big() const { return big_; }
  uint32_t degree() const { return m_; }  // m = [GF(Q) : GF(q)]

  uint32_t forward(uint32_t x) const { return fwd_[x]; }
  bool in_subfield(uint32_t y) const { return back_[y] >= 0; }
  uint32_t down(uint32_t y) const {
    if (back_[y] < 0) fail("NotASubfield: element lies outside the embedded subfield");
    return uint32_t(back_[y]);
  }
  // Tr_{Q/q}(y) = sum of y^{q^j}, j = 0..m-1, returned as a small element.
  uint32_t trace(uint32_t y) const;

 private:
  friend Embedding make_embedding(const FieldPtr&, const FieldPtr&);
  FieldPtr small_, big_;
  uint32_t m_ = 0;
  std::vector<uint32_t> fwd_;
  std::vector<int32_t> back_;
};

Embedding make_embedding(const FieldPtr& small, const FieldPtr& big);

}  // namespace linc
