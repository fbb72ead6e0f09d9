#pragma once
// Constacyclic codes: ideals of GF(q)[x]/(x^n - lambda) presented by a monic
// generator polynomial dividing x^n - lambda. Every instance carries its
// splitting-field provenance (defining polynomial, designated root beta),
// because scalar-equivalent codes can have inequivalent nonstandard
// extensions, so the exact root normalization is part of the code identity.
#include <cstdint>
#include <vector>

#include "linc/code.hpp"
#include "linc/poly.hpp"

namespace linc {

struct ConstacyclicCode {
  FieldPtr field;
  uint64_t n = 0;
  uint32_t lambda = 1;
  Poly g, h;           // g * h = x^n - lambda
  XnFactorization fact;
  LinearCode linear;   // rows g, x g, ..., x^{k-1} g; k = n - deg g
};

ConstacyclicCode make_constacyclic(const FieldPtr& f, uint64_t n,
                                   uint32_t lambda, const Poly& g);
// Same, pinning the splitting field's defining polynomial.
ConstacyclicCode make_constacyclic(const FieldPtr& f, uint64_t n,
                                   uint32_t lambda, const Poly& g,
                                   const std::vector<uint32_t>& splitting_poly);

// The dual is lambda^{-1}-constacyclic, generated by the monic reciprocal of
// the check polynomial; its linear realization equals dual(c.linear).
ConstacyclicCode dual_constacyclic(const ConstacyclicCode& c);

// Largest delta certified by a run of delta-1 consecutive zeros
// g(beta^{1+rb}) = ... = g(beta^{1+r(b+delta-2)}) = 0, scanning b cyclically;
// the minimum distance is at least the returned value.
int bch_lower_bound(const ConstacyclicCode& c);

// One summand of a trace representation: the coset leader i_j selecting the
// check-polynomial factor, and a coefficient living in GF(q^{m_j}) inside
// the splitting field, m_j = size of the leader's coset.
struct TraceTerm {
  uint64_t leader = 0;
  uint32_t coeff = 0;
};

// The codeword (sum_j Tr_{q^{m_j}/q}(a_j beta^{-t i_j}))_{t=0..n-1} of the
// code whose check polynomial is the product of the leaders' factors.
std::vector<uint32_t> trace_codeword(const XnFactorization& fact,
                                     const std::vector<TraceTerm>& terms);

}  // namespace linc
