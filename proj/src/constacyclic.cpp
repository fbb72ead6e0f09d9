#include "linc/constacyclic.hpp"

#include <algorithm>
#include <set>

namespace linc {
namespace {

void check_unit(const FieldPtr& f, uint32_t lambda) {
  if (lambda == 0) fail("ZeroElement: lambda must be a unit");
  if (lambda >= f->q()) fail("InvalidElement: lambda outside the field");
}

ConstacyclicCode build(const FieldPtr& f, uint64_t n, uint32_t lambda,
                       const Poly& g, XnFactorization fact) {
  if (g.is_zero() || g.lead() != 1)
    fail("NotADivisor: generator must be monic");

  std::vector<uint32_t> xnl(size_t(n) + 1, 0);
  xnl[0] = f->neg(lambda);
  xnl[size_t(n)] = 1;
  Poly modulus(f, std::move(xnl));
  auto [h, rem] = divmod(modulus, g);
  if (!rem.is_zero()) fail("NotADivisor: generator does not divide x^n - lambda");

  size_t k = size_t(n) - size_t(g.degree());
  LinearCode linear = [&] {
    if (k == 0) return zero_code(f, size_t(n));
    GFMatrix m(f, k, size_t(n));
    for (size_t i = 0; i < k; ++i)
      for (int j = 0; j <= g.degree(); ++j) m.at(i, i + size_t(j)) = g.coeff(size_t(j));
    return from_generator(std::move(m));
  }();
  return ConstacyclicCode{f,        n, lambda, g, std::move(h),
                          std::move(fact), std::move(linear)};
}

}  // namespace

ConstacyclicCode make_constacyclic(const FieldPtr& f, uint64_t n,
                                   uint32_t lambda, const Poly& g) {
  check_unit(f, lambda);
  return build(f, n, lambda, g, factor_xn_minus_lambda(f, n, lambda));
}

ConstacyclicCode make_constacyclic(const FieldPtr& f, uint64_t n,
                                   uint32_t lambda, const Poly& g,
                                   const std::vector<uint32_t>& splitting_poly) {
  check_unit(f, lambda);
  return build(f, n, lambda, g,
               factor_xn_minus_lambda(f, n, lambda, splitting_poly));
}

ConstacyclicCode dual_constacyclic(const ConstacyclicCode& c) {
  uint32_t inv_lambda = c.field->inv(c.lambda);
  return make_constacyclic(c.field, c.n, inv_lambda, reciprocal(c.h),
                           c.fact.splitting->defining_poly());
}

int bch_lower_bound(const ConstacyclicCode& c) {
  const Field& big = *c.fact.splitting;
  const Embedding& emb = c.fact.emb;
  size_t n = size_t(c.n);
  std::vector<char> zero(n, 0);
  for (size_t b = 0; b < n; ++b) {
    uint32_t x = c.fact.beta_pow(int64_t(1 + c.fact.r * b));
    uint32_t acc = 0;
    for (int i = c.g.degree(); i >= 0; --i)
      acc = big.add(big.mul(acc, x), emb.forward(c.g.coeff(size_t(i))));
    zero[b] = acc == 0;
  }
  // longest cyclic run of designated zeros, capped at n
  size_t best = 0, run = 0;
  for (size_t b = 0; b < 2 * n; ++b) {
    if (zero[b % n]) {
      run = std::min(run + 1, n);
      best = std::max(best, run);
    } else {
      run = 0;
    }
  }
  return int(best) + 1;
}

std::vector<uint32_t> trace_codeword(const XnFactorization& fact,
                                     const std::vector<TraceTerm>& terms) {
  const Field& big = *fact.splitting;
  const Field& small = *fact.field;
  uint32_t q = small.q();

  std::set<uint64_t> seen;
  std::vector<size_t> sizes;
  for (const auto& t : terms) {
    if (t.leader >= fact.rn || fact.cosets.leader_of[size_t(t.leader)] != t.leader)
      fail("InconsistentInput: index is not a coset leader");
    if (!seen.insert(t.leader).second)
      fail("InconsistentInput: repeated coset leader");
    size_t mj = fact.cosets.coset_of(t.leader).size();
    sizes.push_back(mj);
    // membership in GF(q^mj): fixed by the mj-fold Frobenius
    uint32_t y = t.coeff;
    for (size_t j = 0; j < mj; ++j) y = big.pow(y, q);
    if (y != t.coeff)
      fail("FieldMismatch: coefficient outside GF(q^m_j)");
  }

  std::vector<uint32_t> out(size_t(fact.n), 0);
  for (uint64_t t = 0; t < fact.n; ++t) {
    uint32_t acc = 0;
    for (size_t j = 0; j < terms.size(); ++j) {
      if (terms[j].coeff == 0) continue;
      uint32_t x = big.mul(
          terms[j].coeff,
          fact.beta_pow(-int64_t(t) * int64_t(terms[j].leader)));
      uint32_t tr = 0, y = x;
      for (size_t f = 0; f < sizes[j]; ++f) {
        tr = big.add(tr, y);
        y = big.pow(y, q);
      }
      acc = small.add(acc, fact.emb.down(tr));
    }
    out[size_t(t)] = acc;
  }
  return out;
}

}  // namespace linc
