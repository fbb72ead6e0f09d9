#pragma once
// Named code constructions over finite fields: Reed-Solomon-style cyclic
// codes with a designated MDS-producing extension vector, the conic chain in
// PG(2,q), nonbinary Hamming/Simplex codes, projective two-weight
// constacyclic codes, ovoid codes (elliptic quadric, Tits, cyclic), Denniston
// maximal-arc codes, and four cyclic families whose standard extensions gain
// one unit of distance. Constructors return the code together with any
// designated extension vectors, with coordinate orders pinned so that those
// vectors are reproducible.
#include <cstdint>
#include <vector>

#include "linc/code.hpp"
#include "linc/constacyclic.hpp"
#include "linc/gf.hpp"

namespace linc {

// Points of PG(m-1, q) listed by nonzero representatives. The points become
// generator matrix columns, so their order fixes the code's coordinates.
struct PointSet {
  FieldPtr field;
  uint32_t dim = 0;
  std::vector<std::vector<uint32_t>> points;
};

bool projectively_distinct(const PointSet& s);
bool no_three_collinear(const PointSet& s);
// dim = 3 only: every line of PG(2, q) meets the set in 0 or h points.
bool maximal_arc(const PointSet& s, uint32_t h);

// [|points|, dim] code whose generator columns are the points.
LinearCode code_from_points(const PointSet& s);

struct RsCode {
  ConstacyclicCode code;       // [q-1, q-d, d]
  std::vector<uint32_t> u;     // (1, alpha^{d-1}, alpha^{2(d-1)}, ...)
};

// Cyclic code of length q-1 with generator prod_{i=0}^{d-2} (x - alpha^i),
// 2 <= d <= q-2. Extending by the returned u gives a [q, q-d, d+1] MDS code
// whose dual is MDS too; the standard extension is trivial instead.
RsCode cyclic_rs(const FieldPtr& f, uint32_t d);

struct ConicChain {
  LinearCode base;          // [q, 3, q-2]
  std::vector<uint32_t> u1;
  std::vector<uint32_t> u2;
  LinearCode ext1;          // extend(base, u1) = [q+1, 3, q-1]
  LinearCode ext2;          // extend(ext1, u2): [q+2, 3, q-1] odd q, [q+2, 3, q] even q
  LinearCode ext3;          // standard_extend(ext2) = [q+3, 3, q]
};

// Generator rows (0, 1, alpha^2, ..., alpha^{2(q-2)}), (0, 1, alpha, ...,
// alpha^{q-2}), (1, 1, ..., 1); u1 = -(0, 1, alpha^{-2}, ...) appends the
// column (1,0,0), u2 = -(0, 1, alpha^{-1}, ..., 0) then appends (0,1,0), so
// the chain passes through a conic and (for even q) a hyperoval. q > 3.
ConicChain conic_chain(const FieldPtr& f);

// n = (q^m - 1)/(q - 1), the length of the order-m Hamming code.
uint64_t hamming_length(const FieldPtr& f, uint32_t m);

// Kernel of c -> sum_i c_i a_i alpha^i over GF(q^m), alpha primitive, the
// scale vector a nonzero entrywise: an [n, n-m, 3] code. With a = 1 it is
// the lambda-constacyclic code with generator the minimal polynomial of
// alpha, lambda = alpha^n.
LinearCode hamming_code(const FieldPtr& f, uint32_t m, const std::vector<uint32_t>& a);
// The dual [n, m, q^{m-1}] one-weight code, rows the trace functionals
// c_i = Tr(alpha^r a_i alpha^i).
LinearCode simplex_code(const FieldPtr& f, uint32_t m, const std::vector<uint32_t>& a);

// Scale vector a_i = lambda^{i(2^{s-1}-1)}, lambda = alpha^{q+1}, over
// GF(q = 2^s), s >= 2. The standard extension of the order-2 Hamming code
// scaled by this vector is a [q+2, q-1, 4] MDS code; generic scale vectors
// only reach distance 3.
std::vector<uint32_t> hamming_mds_a(const FieldPtr& f);

// Number of distinct values in GF(q)* taken by the ratios
// (a_{i3} alpha^{i3-i1}/a_{i1} - 1) / (a_{i2} alpha^{i2-i1}/a_{i1} - 1)
// over index triples i1 < i2 < i3. The standard extension of the scaled
// order-m Hamming code has distance 3 exactly when the count is positive,
// and 4 when it is zero.
uint64_t s_set_size(const FieldPtr& f, uint32_t m, const std::vector<uint32_t>& a);

struct TwoWeightCode {
  ConstacyclicCode code;  // [n, m] with n = (q^m - 1)/(h(q - 1))
  uint32_t h = 0;
  int64_t w1 = 0, w2 = 0;  // the two nonzero weights, w1 < w2
};

// Projective two-weight lambda-constacyclic code: check polynomial the
// minimal polynomial of beta = alpha^{hv} in GF(q^m), m = 2ls >= 4,
// h | q^s + 1, 2 <= h < q^{ls} + 1, lambda = beta^n. The multiplier v must
// be a unit mod (q^m - 1)/h; it selects among scalar-equivalent root
// normalizations whose nonstandard extensions differ. The splitting field's
// defining polynomial can be pinned for reproducible enumerators.
TwoWeightCode two_weight_constacyclic(const FieldPtr& f, uint32_t l, uint32_t s,
                                      uint32_t h, uint64_t v = 1,
                                      const std::vector<uint32_t>& splitting_poly = {});

// Whether theta - 1 lies in <theta>, for theta the inverse of a root of the
// check polynomial. True means the standard extension's dual has q-1 words
// of weight 2; false means none (so its distance stays 3 when d(dual) = 3).
// Conjugate root choices agree, so any root serves.
bool theta_condition(const ConstacyclicCode& c);

// q^2+1 points of PG(3, q), no three collinear: (0,0,1,0) first, then
// (x, y, x^2 + xy + a y^2, 1) with x outer and y inner ascending, where
// x^2 + x + a is irreducible over GF(q). Without an explicit a the smallest
// valid encoding is chosen.
PointSet elliptic_quadric(const FieldPtr& f);
PointSet elliptic_quadric(const FieldPtr& f, uint32_t a);

// The Tits ovoid over GF(2^{2e+1}), e >= 1: (0,0,1,0) first, then
// (x, y, x^sigma + xy + y^{sigma+2}, 1), sigma = 2^{e+1}.
PointSet tits_ovoid(const FieldPtr& f);

// [q^2+1, 4, q^2-q] code with the ovoid's points as generator columns;
// asserts the no-three-collinear property.
LinearCode ovoid_code(const PointSet& s);

// Extension vector with u1 at the position of (0,0,1,0), u2 at (0,0,0,1)
// and 1 elsewhere; u1 outside {0,-1} and u2 != 1 keep the appended column
// independent, making the extension's dual a [q^2+2, q^2-2, 3] code.
std::vector<uint32_t> ovoid_extension_u(const PointSet& s, uint32_t u1, uint32_t u2);

struct CyclicOvoidCode {
  ConstacyclicCode code;    // cyclic [q^2+1, 4, q^2-q]
  std::vector<uint32_t> u;  // (1, u_elt, u_elt^2, ...)
};

// Cyclic ovoid code over GF(q = 2^s), s >= 2: length q^2+1, check
// polynomial the minimal polynomial of a primitive (q^2+1)-th root of
// unity. Its standard extension is trivial; extending by the returned
// geometric-series vector (u_elt outside {0,1}) adds a fourth weight and
// keeps the dual distance at 3.
CyclicOvoidCode cyclic_ovoid(const FieldPtr& f, uint32_t u_elt);

// All additive subgroups (GF(2)-subspaces) of GF(2^m) of the given order,
// each listed ascending, enumerated deterministically from reduced-echelon
// bases and truncated at `limit` when the full count exceeds it. Subgroups
// of order >= 4 sum to zero, which the enumeration asserts.
std::vector<std::vector<uint32_t>> additive_subgroups(const FieldPtr& f, uint32_t order,
                                                      size_t limit = 4096);

struct DennistonArc {
  PointSet arc;                 // n = hq + h - q points of PG(2, q)
  uint32_t beta = 0;            // X^2 + beta X + 1 irreducible over GF(q)
  std::vector<uint32_t> group;  // the additive subgroup A, ascending
  LinearCode code;              // [n, 3, n-h]
  std::vector<uint32_t> u;      // designated extension vector (see below)
};

// Denniston maximal (n, h)-arc over GF(q = 2^m): the point (1,0,0) followed,
// for each lambda in A \ {0} ascending, by the conic block with point
// (lambda^{-q/2}, 1, 0) first and then (lambda^{-q/2} f(y), y, 1) for y
// ascending, f(y) = y + (beta y)^{q/2} + 1. Requires A a subgroup of
// (GF(q), +) with 2 <= |A| < q. Every line meets the arc in 0 or h points,
// which is asserted. For h = 2 the returned u is the all-one vector (the
// standard extension is the interesting one); for h >= 4 it is assembled
// blockwise as (0 | 0,1,...,1 | lambda_i^{q/2},1,...,1), which appends the
// column (0, lambda_1^{q/2}, 0) and keeps the extension's dual distance 3.
// Without an explicit beta the smallest valid encoding is chosen.
DennistonArc denniston(const FieldPtr& f, const std::vector<uint32_t>& group);
DennistonArc denniston(const FieldPtr& f, const std::vector<uint32_t>& group, uint32_t beta);

// Cyclic code of length n = lambda (q^m - 1)/(q - 1), m = ord_n(q), with
// generator the minimal polynomial of a primitive n-th root of unity.
// Requires lambda | q - 1 and gcd(m lambda, q - 1) > 1, which force the
// distance to 2; the standard extension is then an [n+1, n-m, 3] code.
ConstacyclicCode single_root_code(const FieldPtr& f, uint64_t n);

// Cyclic code with generator M_alpha * M_{alpha^{q^{m/2}+1}} for even
// m = ord_n(q) and n > q^{m/2} + 1: distance at least 3, and the standard
// extension has distance at least 4.
ConstacyclicCode double_root_code(const FieldPtr& f, uint64_t n);

// Narrow-sense BCH code of designed distance delta, 2 <= delta < n:
// generator lcm(M_alpha, ..., M_{alpha^{delta-1}}). The standard extension
// has distance at least delta + 1.
ConstacyclicCode narrow_bch_code(const FieldPtr& f, uint64_t n, uint32_t delta);

// Ternary cyclic code with generator M_alpha * M_{alpha^2}: distance at
// least 4, and the standard extension reaches 5 whenever the distance is
// exactly 4 (which holds for the documented lengths 13, 16, 20, 40, ...).
ConstacyclicCode ternary_pair_code(const FieldPtr& f, uint64_t n);

}  // namespace linc
