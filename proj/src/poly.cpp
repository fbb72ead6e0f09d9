#include "linc/poly.hpp"

#include <algorithm>
#include <numeric>

namespace linc {

Poly::Poly(FieldPtr f, std::vector<uint32_t> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  for (uint32_t c : c_)
    if (c >= f_->q()) fail("FieldMismatch: coefficient out of range");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const FieldPtr& f, uint32_t coeff, size_t degree) {
  std::vector<uint32_t> c(degree + 1, 0);
  c[degree] = coeff;
  return Poly(f, std::move(c));
}

uint32_t Poly::eval(uint32_t x) const {
  uint32_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  uint32_t s = f_->inv(lead());
  std::vector<uint32_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = f_->mul(c_[i], s);
  return Poly(f_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  const Field& f = *a.f_;
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(a.f_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field& f = *a.f_;
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(a.f_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.f_);
  const Field& f = *a.f_;
  std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(a.f_, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail("DivisionByZero: polynomial division by zero");
  const FieldPtr& fp = a.field();
  const Field& f = *fp;
  if (a.degree() < b.degree()) return {Poly(fp), a};
  std::vector<uint32_t> rem(a.coeffs());
  std::vector<uint32_t> quo(a.degree() - b.degree() + 1, 0);
  uint32_t linv = f.inv(b.lead());
  for (size_t i = rem.size(); i-- > size_t(b.degree());) {
    uint32_t c = f.mul(rem[i], linv);
    if (c == 0) continue;
    size_t shift = i - b.degree();
    quo[shift] = c;
    for (size_t j = 0; j <= size_t(b.degree()); ++j)
      rem[shift + j] = f.sub(rem[shift + j], f.mul(c, b.coeff(j)));
  }
  return {Poly(fp, std::move(quo)), Poly(fp, std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  Poly g = gcd(a, b);
  return (divmod(a * b, g).first).monic();
}

Poly reciprocal(const Poly& f) {
  std::vector<uint32_t> c(f.coeffs());
  std::reverse(c.begin(), c.end());
  return Poly(f.field(), std::move(c)).monic();
}

const std::vector<uint64_t>& CosetTable::coset_of(uint64_t i) const {
  uint64_t l = leader_of.at(i % rn);
  auto it = std::lower_bound(leaders.begin(), leaders.end(), l);
  return cosets[size_t(it - leaders.begin())];
}

CosetTable cyclotomic_cosets(uint64_t q, uint64_t rn, uint64_t r) {
  if (std::gcd(q, rn) != 1) fail("NotCoprime: gcd(q, rn) must be 1");
  CosetTable t;
  t.q = q;
  t.rn = rn;
  t.r = r;
  t.leader_of.assign(rn, rn);
  for (uint64_t i = 0; i < rn; ++i) {
    if (t.leader_of[i] != rn) continue;
    std::vector<uint64_t> coset;
    uint64_t j = i;
    do {
      coset.push_back(j);
      t.leader_of[j] = i;
      j = j * q % rn;
    } while (j != i);
    t.leaders.push_back(i);
    t.cosets.push_back(std::move(coset));
    if (i % r == 1 % r) t.gamma1.push_back(i);
  }
  return t;
}

Poly minimal_poly(const Embedding& emb, uint32_t elt) {
  const FieldPtr& big = emb.big();
  std::vector<uint32_t> orbit;
  uint32_t c = elt;
  do {
    orbit.push_back(c);
    c = big->pow(c, emb.small()->q());
  } while (c != elt);

  Poly prod = Poly::constant(big, 1);
  for (uint32_t root : orbit)
    prod = prod * Poly(big, {big->neg(root), 1});
  std::vector<uint32_t> down(prod.coeffs().size());
  for (size_t i = 0; i < down.size(); ++i) down[i] = emb.down(prod.coeff(i));
  return Poly(emb.small(), std::move(down));
}

const Poly& XnFactorization::factor_of(uint64_t leader) const {
  for (const Factor& f : factors)
    if (f.leader == leader) return f.poly;
  fail("RangeError: no factor with that coset leader");
}

static XnFactorization factor_impl(const FieldPtr& f, uint64_t n, uint32_t lambda,
                                   const std::vector<uint32_t>* splitting_poly) {
  if (n == 0 || std::gcd<uint64_t>(n, f->q()) != 1) fail("NotCoprime: gcd(n, q) must be 1");
  if (lambda == 0) fail("ZeroElement: lambda must be nonzero");

  XnFactorization x;
  x.field = f;
  x.n = n;
  x.lambda = lambda;
  x.r = f->element_order(lambda);
  x.rn = x.r * n;

  uint64_t m = 1, pw = f->q() % x.rn;
  while (pw != 1 % x.rn) {
    pw = pw * (f->q() % x.rn) % x.rn;
    ++m;
  }
  x.m = m;

  x.splitting = splitting_poly ? make_field(f->p(), f->s() * uint32_t(m), *splitting_poly)
                               : make_field(f->p(), f->s() * uint32_t(m));
  x.emb = make_embedding(f, x.splitting);

  // beta = zeta^e, the smallest unit exponent whose n-th power hits lambda
  uint64_t zeta_exp = (uint64_t(x.splitting->q()) - 1) / x.rn;
  uint32_t lam_big = x.emb.forward(lambda);
  uint32_t beta = x.rn == 1 ? 1 : 0;
  for (uint64_t e = 1; e < x.rn && beta == 0; ++e) {
    if (std::gcd(e, x.rn) != 1) continue;
    uint32_t cand = x.splitting->exp(zeta_exp * e);
    if (x.splitting->pow(cand, int64_t(n)) == lam_big) beta = cand;
  }
  if (beta == 0) fail("RangeError: no normalized root of unity");
  x.beta = beta;

  x.cosets = cyclotomic_cosets(f->q(), x.rn, x.r);
  for (uint64_t leader : x.cosets.gamma1)
    x.factors.push_back({minimal_poly(x.emb, x.splitting->pow(beta, int64_t(leader))), leader});

  Poly prod = Poly::constant(f, 1);
  for (const auto& fac : x.factors) prod = prod * fac.poly;
  Poly target = Poly::monomial(f, 1, n) - Poly::constant(f, lambda);
  if (prod != target) fail("InternalError: factor product mismatch");
  return x;
}

XnFactorization factor_xn_minus_lambda(const FieldPtr& f, uint64_t n, uint32_t lambda) {
  return factor_impl(f, n, lambda, nullptr);
}

XnFactorization factor_xn_minus_lambda(const FieldPtr& f, uint64_t n, uint32_t lambda,
                                       const std::vector<uint32_t>& splitting_poly) {
  return factor_impl(f, n, lambda, &splitting_poly);
}

}  // namespace linc
