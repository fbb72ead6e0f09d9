#include "linc/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "linc/extension.hpp"
#include "linc/poly.hpp"

namespace linc {
namespace {

void check_points(const PointSet& s) {
  if (!s.field) fail("InconsistentInput: point set has no field");
  uint32_t q = s.field->q();
  for (const auto& pt : s.points) {
    if (pt.size() != s.dim) fail("LengthMismatch: point dimension mismatch");
    bool nonzero = false;
    for (uint32_t x : pt) {
      if (x >= q) fail("InvalidElement: point coordinate outside the field");
      nonzero |= x != 0;
    }
    if (!nonzero) fail("ZeroElement: projective points must be nonzero");
  }
}

// Rank of up to three row vectors by elimination; enough for collinearity.
uint32_t rank3(const Field& f, std::vector<std::vector<uint32_t>> rows) {
  uint32_t rank = 0;
  size_t dim = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < dim && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    uint32_t inv = f.inv(rows[rank][col]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      uint32_t scale = f.mul(rows[r][col], inv);
      for (size_t c = col; c < dim; ++c)
        rows[r][c] = f.sub(rows[r][c], f.mul(scale, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

Poly linear_factor(const FieldPtr& f, uint32_t root) {
  return Poly(f, {f->neg(root), 1});
}

Poly x_pow_n_minus(const FieldPtr& f, uint64_t n, uint32_t lambda) {
  std::vector<uint32_t> c(n + 1, 0);
  c[0] = f->neg(lambda);
  c[n] = 1;
  return Poly(f, c);
}

bool quadratic_has_root(const Field& f, uint32_t b, uint32_t c) {
  for (uint32_t t = 0; t < f.q(); ++t)
    if (f.add(f.mul(t, t), f.add(f.mul(b, t), c)) == 0) return true;
  return false;
}

}  // namespace

bool projectively_distinct(const PointSet& s) {
  check_points(s);
  const Field& f = *s.field;
  for (size_t i = 0; i < s.points.size(); ++i) {
    for (size_t j = i + 1; j < s.points.size(); ++j) {
      const auto& a = s.points[i];
      const auto& b = s.points[j];
      size_t lead = 0;
      while (a[lead] == 0) ++lead;
      if (b[lead] == 0) continue;
      uint32_t scale = f.div(b[lead], a[lead]);
      bool proportional = true;
      for (size_t c = 0; c < a.size() && proportional; ++c)
        proportional = b[c] == f.mul(scale, a[c]);
      if (proportional) return false;
    }
  }
  return true;
}

bool no_three_collinear(const PointSet& s) {
  check_points(s);
  for (size_t i = 0; i < s.points.size(); ++i)
    for (size_t j = i + 1; j < s.points.size(); ++j)
      for (size_t k = j + 1; k < s.points.size(); ++k)
        if (rank3(*s.field, {s.points[i], s.points[j], s.points[k]}) < 3) return false;
  return true;
}

bool maximal_arc(const PointSet& s, uint32_t h) {
  check_points(s);
  if (s.dim != 3) fail("RangeError: the line check needs points in PG(2, q)");
  const Field& f = *s.field;
  uint32_t q = f.q();
  auto meets = [&](uint32_t a, uint32_t b, uint32_t c) {
    uint32_t count = 0;
    for (const auto& pt : s.points) {
      uint32_t v = f.add(f.mul(a, pt[0]), f.add(f.mul(b, pt[1]), f.mul(c, pt[2])));
      count += v == 0;
    }
    return count == 0 || count == h;
  };
  for (uint32_t b = 0; b < q; ++b)
    for (uint32_t c = 0; c < q; ++c)
      if (!meets(1, b, c)) return false;
  for (uint32_t c = 0; c < q; ++c)
    if (!meets(0, 1, c)) return false;
  return meets(0, 0, 1);
}

LinearCode code_from_points(const PointSet& s) {
  check_points(s);
  if (s.dim == 0 || s.points.empty()) fail("EmptyLength: nothing to generate from");
  GFMatrix g(s.field, s.dim, s.points.size());
  for (size_t i = 0; i < s.points.size(); ++i)
    for (uint32_t r = 0; r < s.dim; ++r) g.at(r, i) = s.points[i][r];
  return from_generator(std::move(g));
}

RsCode cyclic_rs(const FieldPtr& f, uint32_t d) {
  uint32_t q = f->q();
  if (q < 4 || d < 2 || d > q - 2)
    fail("RangeError: designed distance must be in [2, q-2]");
  Poly g = Poly::constant(f, 1);
  for (uint32_t i = 0; i + 2 <= d; ++i) g = g * linear_factor(f, f->pow(f->alpha(), i));
  RsCode out{make_constacyclic(f, q - 1, 1, g), {}};
  out.u.resize(q - 1);
  for (uint32_t j = 0; j < q - 1; ++j)
    out.u[j] = f->pow(f->alpha(), int64_t(j) * (d - 1));
  return out;
}

ConicChain conic_chain(const FieldPtr& f) {
  uint32_t q = f->q();
  if (q <= 3) fail("FieldTooSmall: the chain needs q > 3");
  uint32_t alpha = f->alpha();
  GFMatrix g(f, 3, q);
  g.at(2, 0) = 1;
  for (uint32_t j = 1; j < q; ++j) {
    g.at(0, j) = f->pow(alpha, 2 * int64_t(j - 1));
    g.at(1, j) = f->pow(alpha, j - 1);
    g.at(2, j) = 1;
  }
  LinearCode base = from_generator(std::move(g));
  std::vector<uint32_t> u1(q, 0), u2(q + 1, 0);
  for (uint32_t j = 1; j < q; ++j) {
    u1[j] = f->neg(f->pow(alpha, -2 * int64_t(j - 1)));
    u2[j] = f->neg(f->pow(alpha, -int64_t(j - 1)));
  }
  LinearCode ext1 = extend(base, u1);
  LinearCode ext2 = extend(ext1, u2);
  LinearCode ext3 = standard_extend(ext2);
  return ConicChain{std::move(base), std::move(u1), std::move(u2),
                    std::move(ext1), std::move(ext2), std::move(ext3)};
}

uint64_t hamming_length(const FieldPtr& f, uint32_t m) {
  if (m < 2) fail("RangeError: the order m must be at least 2");
  uint64_t q = f->q(), big = 1;
  for (uint32_t i = 0; i < m; ++i) {
    big *= q;
    if (big > Field::max_order) fail("RangeError: q^m exceeds the supported field order");
  }
  return (big - 1) / (q - 1);
}

namespace {

struct HammingScaffold {
  FieldPtr big;
  Embedding emb;
  std::vector<uint32_t> alpha_i;  // a_i alpha^i in the big field
};

HammingScaffold hamming_scaffold(const FieldPtr& f, uint32_t m,
                                 const std::vector<uint32_t>& a) {
  uint64_t n = hamming_length(f, m);
  if (a.size() != n) fail("LengthMismatch: the scale vector needs (q^m-1)/(q-1) entries");
  uint32_t q = f->q();
  for (uint32_t ai : a) {
    if (ai >= q) fail("InvalidElement: scale entry outside the field");
    if (ai == 0) fail("ZeroScale: scale entries must be nonzero");
  }
  HammingScaffold h{make_field(f->p(), f->s() * m), Embedding{}, {}};
  h.emb = make_embedding(f, h.big);
  h.alpha_i.resize(n);
  uint32_t alpha = h.big->alpha();
  for (uint64_t i = 0; i < n; ++i)
    h.alpha_i[i] = h.big->mul(h.emb.forward(a[i]), h.big->pow(alpha, int64_t(i)));
  return h;
}

}  // namespace

LinearCode simplex_code(const FieldPtr& f, uint32_t m, const std::vector<uint32_t>& a) {
  HammingScaffold h = hamming_scaffold(f, m, a);
  uint32_t alpha = h.big->alpha();
  GFMatrix g(f, m, h.alpha_i.size());
  for (uint32_t r = 0; r < m; ++r) {
    uint32_t row_scale = h.big->pow(alpha, r);
    for (size_t i = 0; i < h.alpha_i.size(); ++i)
      g.at(r, i) = h.emb.trace(h.big->mul(row_scale, h.alpha_i[i]));
  }
  LinearCode c = from_generator(std::move(g));
  if (c.k() != m) fail("InternalError: trace functionals lost rank");
  return c;
}

LinearCode hamming_code(const FieldPtr& f, uint32_t m, const std::vector<uint32_t>& a) {
  return dual(simplex_code(f, m, a));
}

std::vector<uint32_t> hamming_mds_a(const FieldPtr& f) {
  if (f->p() != 2) fail("NotCharTwo: the MDS scale vector lives over GF(2^s)");
  if (f->s() < 2) fail("RangeError: q = 2 has no nontrivial scale vectors");
  uint32_t q = f->q();
  FieldPtr big = make_field(2, 2 * f->s());
  Embedding emb = make_embedding(f, big);
  uint32_t lambda = emb.down(big->pow(big->alpha(), q + 1));
  int64_t step = (int64_t(1) << (f->s() - 1)) - 1;
  std::vector<uint32_t> a(q + 1);
  for (uint32_t i = 0; i <= q; ++i) a[i] = f->pow(lambda, step * i);
  return a;
}

uint64_t s_set_size(const FieldPtr& f, uint32_t m, const std::vector<uint32_t>& a) {
  HammingScaffold h = hamming_scaffold(f, m, a);
  const Field& big = *h.big;
  size_t n = h.alpha_i.size();
  std::set<uint32_t> hits;
  for (size_t i1 = 0; i1 < n; ++i1) {
    for (size_t i2 = i1 + 1; i2 < n; ++i2) {
      uint32_t den = big.sub(big.div(h.alpha_i[i2], h.alpha_i[i1]), 1);
      uint32_t inv_den = big.inv(den);
      for (size_t i3 = i2 + 1; i3 < n; ++i3) {
        uint32_t num = big.sub(big.div(h.alpha_i[i3], h.alpha_i[i1]), 1);
        uint32_t ratio = big.mul(num, inv_den);
        if (ratio != 0 && h.emb.in_subfield(ratio)) hits.insert(ratio);
      }
    }
  }
  return hits.size();
}

TwoWeightCode two_weight_constacyclic(const FieldPtr& f, uint32_t l, uint32_t s,
                                      uint32_t h, uint64_t v,
                                      const std::vector<uint32_t>& splitting_poly) {
  uint32_t q = f->q();
  if (q <= 2) fail("RangeError: the two-weight family needs q > 2");
  if (l == 0 || s == 0) fail("RangeError: l and s must be positive");
  uint32_t m = 2 * l * s;
  if (m < 4) fail("RangeError: m = 2ls must be at least 4");
  uint64_t qs = 1, qls = 1;
  for (uint32_t i = 0; i < s; ++i) qs *= q;
  for (uint32_t i = 0; i < uint32_t(l) * s; ++i) qls *= q;
  if (h < 2 || uint64_t(h) >= qls + 1) fail("RangeError: h must be in [2, q^{ls}]");
  if ((qs + 1) % h != 0) fail("DivisibilityViolated: h must divide q^s + 1");

  FieldPtr big = splitting_poly.empty() ? make_field(f->p(), f->s() * m)
                                        : make_field(f->p(), f->s() * m, splitting_poly);
  Embedding emb = make_embedding(f, big);
  uint64_t big_q = big->q();
  if ((big_q - 1) % (uint64_t(h) * (q - 1)) != 0)
    fail("DivisibilityViolated: h(q-1) must divide q^m - 1");
  uint64_t rn = (big_q - 1) / h;
  if (std::gcd(v % rn, rn) != 1)
    fail("RangeError: the multiplier must be a unit mod (q^m-1)/h");
  uint64_t n = (big_q - 1) / (uint64_t(h) * (q - 1));

  uint64_t exponent = uint64_t(h) % (big_q - 1) * (v % (big_q - 1)) % (big_q - 1);
  uint32_t beta = big->pow(big->alpha(), int64_t(exponent));
  uint32_t lambda = emb.down(big->pow(beta, int64_t(n)));
  Poly mbeta = minimal_poly(emb, beta);
  if (uint32_t(mbeta.degree()) != m) fail("InternalError: check polynomial degree is not m");
  auto [g, rem] = divmod(x_pow_n_minus(f, n, lambda), mbeta);
  if (!rem.is_zero()) fail("InternalError: the check polynomial misses x^n - lambda");

  TwoWeightCode out{make_constacyclic(f, n, lambda, g, big->defining_poly()), h, 0, 0};
  int64_t root = 1;
  for (uint32_t i = 0; i < m / 2; ++i) root *= q;
  int64_t sign = l % 2 == 0 ? 1 : -1;
  int64_t wa = (int64_t(big_q) + sign * int64_t(h - 1) * root) / (int64_t(q) * h);
  int64_t wb = (int64_t(big_q) - sign * root) / (int64_t(q) * h);
  out.w1 = std::min(wa, wb);
  out.w2 = std::max(wa, wb);
  return out;
}

bool theta_condition(const ConstacyclicCode& c) {
  if (c.h.degree() <= 0) fail("PreconditionViolated: the check polynomial is constant");
  const Field& big = *c.fact.splitting;
  std::vector<uint32_t> lifted(c.h.coeffs().size());
  for (size_t i = 0; i < lifted.size(); ++i) lifted[i] = c.fact.emb.forward(c.h.coeff(i));
  for (uint64_t b = 0; b < c.fact.n; ++b) {
    uint32_t x = c.fact.beta_pow(1 + int64_t(c.fact.r * b));
    uint32_t value = 0;
    for (size_t i = lifted.size(); i-- > 0;) value = big.add(big.mul(value, x), lifted[i]);
    if (value != 0) continue;
    uint32_t theta = big.inv(x);
    uint32_t y = big.sub(theta, 1);
    return y != 0 && big.pow(y, int64_t(big.element_order(theta))) == 1;
  }
  fail("InternalError: the check polynomial has no root among the designated ones");
}

PointSet elliptic_quadric(const FieldPtr& f) {
  for (uint32_t a = 0; a < f->q(); ++a)
    if (!quadratic_has_root(*f, 1, a)) return elliptic_quadric(f, a);
  fail("InternalError: no irreducible x^2 + x + a exists");
}

PointSet elliptic_quadric(const FieldPtr& f, uint32_t a) {
  if (a >= f->q()) fail("InvalidElement: a lies outside the field");
  if (quadratic_has_root(*f, 1, a))
    fail("ReduciblePolynomial: x^2 + x + a has a root, so the form is isotropic");
  uint32_t q = f->q();
  PointSet s{f, 4, {}};
  s.points.reserve(uint64_t(q) * q + 1);
  s.points.push_back({0, 0, 1, 0});
  for (uint32_t x = 0; x < q; ++x)
    for (uint32_t y = 0; y < q; ++y) {
      uint32_t z = f->add(f->mul(x, x), f->add(f->mul(x, y), f->mul(a, f->mul(y, y))));
      s.points.push_back({x, y, z, 1});
    }
  return s;
}

PointSet tits_ovoid(const FieldPtr& f) {
  if (f->p() != 2) fail("BadCharacteristic: the Tits ovoid lives over GF(2^{2e+1})");
  if (f->s() < 3 || f->s() % 2 == 0) fail("RangeError: the extension degree must be odd and >= 3");
  uint32_t q = f->q();
  int64_t sigma = int64_t(1) << ((f->s() + 1) / 2);
  PointSet s{f, 4, {}};
  s.points.reserve(uint64_t(q) * q + 1);
  s.points.push_back({0, 0, 1, 0});
  for (uint32_t x = 0; x < q; ++x)
    for (uint32_t y = 0; y < q; ++y) {
      uint32_t z = f->add(f->pow(x, sigma), f->add(f->mul(x, y), f->pow(y, sigma + 2)));
      s.points.push_back({x, y, z, 1});
    }
  return s;
}

LinearCode ovoid_code(const PointSet& s) {
  uint64_t q = s.field->q();
  if (s.dim != 4 || s.points.size() != q * q + 1)
    fail("PreconditionViolated: an ovoid has q^2 + 1 points of PG(3, q)");
  if (!projectively_distinct(s) || !no_three_collinear(s))
    fail("PreconditionViolated: three of the points are collinear");
  return code_from_points(s);
}

std::vector<uint32_t> ovoid_extension_u(const PointSet& s, uint32_t u1, uint32_t u2) {
  const Field& f = *s.field;
  if (u1 >= f.q() || u2 >= f.q()) fail("InvalidElement: u1, u2 must lie in the field");
  if (u1 == 0 || u1 == f.neg(1)) fail("RangeError: u1 must avoid 0 and -1");
  if (u2 == 1) fail("RangeError: u2 must avoid 1");
  std::vector<uint32_t> u(s.points.size(), 1);
  const std::vector<uint32_t> anchor1{0, 0, 1, 0}, anchor2{0, 0, 0, 1};
  bool seen1 = false, seen2 = false;
  for (size_t i = 0; i < s.points.size(); ++i) {
    if (s.points[i] == anchor1) u[i] = u1, seen1 = true;
    if (s.points[i] == anchor2) u[i] = u2, seen2 = true;
  }
  if (!seen1 || !seen2)
    fail("MissingAnchorPoints: the set must contain (0,0,1,0) and (0,0,0,1)");
  return u;
}

CyclicOvoidCode cyclic_ovoid(const FieldPtr& f, uint32_t u_elt) {
  if (f->p() != 2) fail("BadCharacteristic: the cyclic ovoid code lives over GF(2^s)");
  if (f->s() < 2) fail("RangeError: the extension degree must be at least 2");
  uint32_t q = f->q();
  if (u_elt >= q) fail("InvalidElement: u lies outside the field");
  if (u_elt == 0 || u_elt == 1) fail("RangeError: u must avoid 0 and 1");
  uint64_t n = uint64_t(q) * q + 1;
  XnFactorization fact = factor_xn_minus_lambda(f, n, 1);
  auto [g, rem] = divmod(x_pow_n_minus(f, n, 1), fact.factor_of(1));
  if (!rem.is_zero()) fail("InternalError: minimal polynomial misses x^n - 1");
  CyclicOvoidCode out{
      make_constacyclic(f, n, 1, g, fact.splitting->defining_poly()), {}};
  out.u.resize(n);
  for (uint64_t t = 0; t < n; ++t) out.u[t] = f->pow(u_elt, int64_t(t));
  return out;
}

std::vector<std::vector<uint32_t>> additive_subgroups(const FieldPtr& f, uint32_t order,
                                                      size_t limit) {
  if (f->p() != 2) fail("BadCharacteristic: additive subgroup enumeration assumes GF(2^m)");
  uint32_t m = f->s();
  if (order == 0 || (order & (order - 1)) != 0 || order > f->q())
    fail("RangeError: the order must be a power of 2 at most q");
  uint32_t dim = 0;
  while ((1u << dim) < order) ++dim;
  std::vector<std::vector<uint32_t>> out;
  if (dim == 0) {
    out.push_back({0});
    return out;
  }
  // Reduced-echelon bases: pivot bits descending per row, other pivot bits
  // clear, free bits only below the row's pivot. Each subspace appears once.
  for (uint32_t pivot_mask = 0; pivot_mask < (1u << m) && out.size() < limit; ++pivot_mask) {
    if (uint32_t(__builtin_popcount(pivot_mask)) != dim) continue;
    std::vector<uint32_t> pivots;  // descending
    for (int bit = int(m) - 1; bit >= 0; --bit)
      if (pivot_mask >> bit & 1) pivots.push_back(bit);
    std::vector<std::vector<uint32_t>> free_bits(dim);
    size_t total_free = 0;
    for (uint32_t r = 0; r < dim; ++r) {
      for (uint32_t bit = 0; bit < pivots[r]; ++bit)
        if (!(pivot_mask >> bit & 1)) free_bits[r].push_back(bit);
      total_free += free_bits[r].size();
    }
    for (uint64_t assign = 0; assign < (uint64_t(1) << total_free) && out.size() < limit;
         ++assign) {
      std::vector<uint32_t> basis(dim);
      uint64_t cursor = assign;
      for (uint32_t r = 0; r < dim; ++r) {
        basis[r] = 1u << pivots[r];
        for (uint32_t bit : free_bits[r]) {
          basis[r] |= uint32_t(cursor & 1) << bit;
          cursor >>= 1;
        }
      }
      std::vector<uint32_t> span(1, 0);
      for (uint32_t b : basis) {
        size_t half = span.size();
        for (size_t i = 0; i < half; ++i) span.push_back(span[i] ^ b);
      }
      std::sort(span.begin(), span.end());
      if (dim >= 2) {
        uint32_t sum = 0;
        for (uint32_t x : span) sum ^= x;
        if (sum != 0) fail("InternalError: a subgroup of order >= 4 failed to sum to zero");
      }
      out.push_back(std::move(span));
    }
  }
  return out;
}

DennistonArc denniston(const FieldPtr& f, const std::vector<uint32_t>& group) {
  for (uint32_t b = 0; b < f->q(); ++b)
    if (!quadratic_has_root(*f, b, 1)) return denniston(f, group, b);
  fail("InternalError: no irreducible X^2 + beta X + 1 exists");
}

DennistonArc denniston(const FieldPtr& f, const std::vector<uint32_t>& group, uint32_t beta) {
  if (f->p() != 2) fail("BadCharacteristic: Denniston arcs live over GF(2^m)");
  uint32_t q = f->q();
  if (beta >= q) fail("InvalidElement: beta lies outside the field");
  if (quadratic_has_root(*f, beta, 1))
    fail("ReducibleBeta: X^2 + beta X + 1 has a root in GF(q)");

  std::vector<uint32_t> a(group);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.size() != group.size() || a.size() < 2 || a.size() >= q || a[0] != 0)
    fail("NotAdditiveSubgroup: need 0 and 2 <= |A| < q distinct elements");
  for (uint32_t x : a)
    if (x >= q) fail("InvalidElement: subgroup element outside the field");
  for (uint32_t x : a)
    for (uint32_t y : a)
      if (!std::binary_search(a.begin(), a.end(), x ^ y))
        fail("NotAdditiveSubgroup: the set is not closed under addition");

  uint32_t h = uint32_t(a.size());
  int64_t half = q / 2;  // x -> x^{q/2} is the square root
  auto arc_f = [&](uint32_t y) {
    return f->add(y, f->add(f->pow(f->mul(beta, y), half), 1));
  };
  PointSet arc{f, 3, {}};
  arc.points.reserve(uint64_t(h) * q + h - q);
  arc.points.push_back({1, 0, 0});
  for (uint32_t i = 1; i < h; ++i) {
    uint32_t scale = f->pow(a[i], -half);
    arc.points.push_back({scale, 1, 0});
    for (uint32_t y = 0; y < q; ++y) arc.points.push_back({f->mul(scale, arc_f(y)), y, 1});
  }
  if (!maximal_arc(arc, h)) fail("InternalError: the arc failed the line check");

  LinearCode code = code_from_points(arc);
  DennistonArc out{std::move(arc), beta, std::move(a), std::move(code), {}};
  out.u.assign(out.arc.points.size(), 1);
  if (h > 2) {
    out.u[0] = 0;
    out.u[1] = 0;  // the lambda_1 block starts with 0 instead of lambda_1^{q/2}
    for (uint32_t i = 2; i < h; ++i)
      out.u[1 + uint64_t(i - 1) * (q + 1)] = f->pow(out.group[i], half);
  }
  return out;
}

namespace {

ConstacyclicCode from_leaders(const FieldPtr& f, const XnFactorization& fact,
                              const std::set<uint64_t>& leaders) {
  Poly g = Poly::constant(f, 1);
  for (uint64_t leader : leaders) g = g * fact.factor_of(leader);
  return make_constacyclic(f, fact.n, 1, g, fact.splitting->defining_poly());
}

}  // namespace

ConstacyclicCode single_root_code(const FieldPtr& f, uint64_t n) {
  XnFactorization fact = factor_xn_minus_lambda(f, n, 1);
  uint64_t q = f->q(), big_q = fact.splitting->q();
  if (n * (q - 1) % (big_q - 1) != 0)
    fail("SpecViolated: n must be a multiple of (q^m - 1)/(q - 1)");
  uint64_t lambda = n * (q - 1) / (big_q - 1);
  if ((q - 1) % lambda != 0) fail("SpecViolated: the multiplier must divide q - 1");
  if (std::gcd(fact.m * lambda, q - 1) == 1)
    fail("SpecViolated: gcd(m lambda, q - 1) must exceed 1");
  return from_leaders(f, fact, {1});
}

ConstacyclicCode double_root_code(const FieldPtr& f, uint64_t n) {
  XnFactorization fact = factor_xn_minus_lambda(f, n, 1);
  if (fact.m % 2 != 0) fail("SpecViolated: ord_n(q) must be even");
  uint64_t root = 1;
  for (uint64_t i = 0; i < fact.m / 2; ++i) root *= f->q();
  if (n <= root + 1) fail("SpecViolated: n must exceed q^{m/2} + 1");
  return from_leaders(f, fact, {1, fact.cosets.leader_of[(root + 1) % n]});
}

ConstacyclicCode narrow_bch_code(const FieldPtr& f, uint64_t n, uint32_t delta) {
  if (delta < 2 || uint64_t(delta) >= n)
    fail("SpecViolated: the designed distance must be in [2, n-1]");
  XnFactorization fact = factor_xn_minus_lambda(f, n, 1);
  std::set<uint64_t> leaders;
  for (uint32_t i = 1; i < delta; ++i) leaders.insert(fact.cosets.leader_of[i]);
  return from_leaders(f, fact, leaders);
}

ConstacyclicCode ternary_pair_code(const FieldPtr& f, uint64_t n) {
  if (f->q() != 3) fail("SpecViolated: this family is ternary");
  if (n < 4) fail("SpecViolated: n must be at least 4");
  XnFactorization fact = factor_xn_minus_lambda(f, n, 1);
  return from_leaders(f, fact, {fact.cosets.leader_of[1], fact.cosets.leader_of[2]});
}

}  // namespace linc
