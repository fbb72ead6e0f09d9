#include "linc/gf.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace linc {
namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Construction-time polynomial arithmetic over GF(p) modulo a monic f,
// low-degree-first coefficient vectors. Only used to test primitivity.
struct PolyMod {
  uint32_t p;
  const std::vector<uint32_t>& f;  // monic, degree s = f.size()-1

  std::vector<uint32_t> mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
    size_t s = f.size() - 1;
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) acc[i + j] += uint64_t(a[i]) * b[j];
    for (size_t i = acc.size(); i-- > s;) {
      uint64_t c = acc[i] % p;
      if (c == 0) continue;
      // x^i = x^{i-s} * (x^s mod f) = -x^{i-s} * (f - x^s)
      for (size_t j = 0; j < s; ++j) acc[i - s + j] += c * (p - f[j]);
      acc[i] = 0;
    }
    std::vector<uint32_t> out(s);
    for (size_t j = 0; j < s; ++j) out[j] = uint32_t(acc[j] % p);
    return out;
  }

  std::vector<uint32_t> pow_x(uint64_t e) const {
    size_t s = f.size() - 1;
    std::vector<uint32_t> r(s, 0), base(s, 0);
    r[0] = 1;
    if (s == 1)
      base[0] = (p - f[0]) % p;  // x = -f_0 mod the linear modulus
    else
      base[1] = 1;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  bool is_one(const std::vector<uint32_t>& a) const {
    if (a.empty() || a[0] != 1) return false;
    return std::all_of(a.begin() + 1, a.end(), [](uint32_t c) { return c == 0; });
  }
};

// Primitive <=> the class of x has multiplicative order exactly q-1, which
// also forces irreducibility (the unit group of a non-field quotient is
// strictly smaller than q-1).
bool is_primitive(uint32_t p, uint32_t s, const std::vector<uint32_t>& f) {
  if (f[0] == 0) return false;
  uint64_t e = 1;
  for (uint32_t i = 0; i < s; ++i) e *= p;
  e -= 1;
  PolyMod ring{p, f};
  if (!ring.is_one(ring.pow_x(e))) return false;
  for (uint64_t l : prime_factors(e))
    if (ring.is_one(ring.pow_x(e / l))) return false;
  return true;
}

void decompose(uint32_t v, uint32_t p, uint32_t s, uint32_t* d) {
  for (uint32_t i = 0; i < s; ++i) {
    d[i] = v % p;
    v /= p;
  }
}

uint32_t compose(const uint32_t* d, uint32_t p, uint32_t s) {
  uint32_t v = 0;
  for (uint32_t i = s; i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

uint32_t Field::add_slow(uint32_t a, uint32_t b) const {
  uint32_t v = 0, base = 1;
  for (uint32_t i = 0; i < s_; ++i) {
    v += (a % p_ + b % p_) % p_ * base;
    a /= p_;
    b /= p_;
    base *= p_;
  }
  return v;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) fail("DivisionByZero: inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t Field::div(uint32_t a, uint32_t b) const {
  if (b == 0) fail("DivisionByZero: division by zero");
  if (a == 0) return 0;
  return exp_[(log_[a] + q_ - 1 - log_[b]) % (q_ - 1)];
}

uint32_t Field::pow(uint32_t a, int64_t e) const {
  if (a == 0) {
    if (e < 0) fail("DivisionByZero: negative power of zero");
    return e == 0 ? 1u : 0u;
  }
  int64_t m = q_ - 1;
  uint64_t r = uint64_t(((e % m) + m) % m);
  return exp_[(uint64_t(log_[a]) * r) % uint64_t(m)];
}

uint64_t Field::element_order(uint32_t a) const {
  if (a == 0) fail("ZeroElement: multiplicative order of zero");
  return (q_ - 1) / std::gcd<uint64_t>(q_ - 1, log_[a]);
}

void Field::build_tables() {
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  std::array<uint32_t, 24> d{}, nd{};
  std::vector<uint32_t> red(s_);
  for (uint32_t j = 0; j < s_; ++j) red[j] = (p_ - poly_[j]) % p_;

  d[0] = 1;
  for (uint32_t i = 0; i < q_ - 1; ++i) {
    uint32_t v = compose(d.data(), p_, s_);
    exp_[i] = v;
    log_[v] = i;
    uint32_t carry = d[s_ - 1];  // multiply by x, reduce the x^s overflow via f
    for (uint32_t j = s_; j-- > 1;) d[j] = (d[j - 1] + carry * red[j]) % p_;
    d[0] = carry * red[0] % p_;
  }

  neg_.assign(q_, 0);
  for (uint32_t v = 0; v < q_; ++v) {
    decompose(v, p_, s_, nd.data());
    for (uint32_t j = 0; j < s_; ++j) nd[j] = (p_ - nd[j]) % p_;
    neg_[v] = compose(nd.data(), p_, s_);
  }

  if (p_ > 2 && q_ <= 1024) {
    add_.assign(size_t(q_) * q_, 0);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = 0; b <= a; ++b) {
        uint32_t v = add_slow(a, b);
        add_[size_t(a) * q_ + b] = v;
        add_[size_t(b) * q_ + a] = v;
      }
  }
}

FieldPtr make_field(uint32_t p, uint32_t s, const std::vector<uint32_t>& defining_poly) {
  if (!is_prime(p)) fail("NotPrime: field characteristic must be prime");
  if (s < 1) fail("BudgetExceeded: extension degree must be at least 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > Field::max_order) fail("BudgetExceeded: field order exceeds 2^20");
  }
  if (defining_poly.size() != size_t(s) + 1 || defining_poly[s] != 1)
    fail("NonPrimitivePoly: defining polynomial must be monic of degree s");
  for (uint32_t c : defining_poly)
    if (c >= p) fail("NonPrimitivePoly: coefficient out of range for GF(p)");
  if (!is_primitive(p, s, defining_poly)) fail("NonPrimitivePoly: polynomial is not primitive");

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->s_ = s;
  f->q_ = uint32_t(q);
  f->poly_ = defining_poly;
  f->build_tables();
  return f;
}

FieldPtr make_field(uint32_t p, uint32_t s) {
  if (!is_prime(p)) fail("NotPrime: field characteristic must be prime");
  if (s < 1) fail("BudgetExceeded: extension degree must be at least 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > Field::max_order) fail("BudgetExceeded: field order exceeds 2^20");
  }
  std::vector<uint32_t> f(s + 1, 0);
  f[s] = 1;
  std::array<uint32_t, 24> d{};
  for (uint32_t v = 1; v < q; ++v) {
    decompose(v, p, s, d.data());
    for (uint32_t j = 0; j < s; ++j) f[j] = d[j];
    if (f[0] != 0 && is_primitive(p, s, f)) return make_field(p, s, f);
  }
  fail("NonPrimitivePoly: no primitive polynomial found");  // unreachable
}

uint32_t Embedding::trace(uint32_t y) const {
  uint32_t acc = 0;
  uint64_t e = 1;
  for (uint32_t j = 0; j < m_; ++j) {
    acc = big_->add(acc, big_->pow(y, int64_t(e)));
    e *= small_->q();
  }
  return down(acc);
}

Embedding make_embedding(const FieldPtr& small, const FieldPtr& big) {
  if (small->p() != big->p() || big->s() % small->s() != 0)
    fail("NotASubfield: no embedding between these fields");
  Embedding e;
  e.small_ = small;
  e.big_ = big;
  e.m_ = big->s() / small->s();

  uint64_t t = uint64_t(big->q() - 1) / (small->q() - 1);
  auto eval_small_poly = [&](uint32_t x) {
    // evaluate the small defining polynomial at a big-field point; the
    // GF(p) coefficients map to c * 1 in the big field
    uint32_t acc = 0;
    for (size_t j = small->defining_poly().size(); j-- > 0;) {
      uint32_t c = small->defining_poly()[j];
      uint32_t cb = 0;
      for (uint32_t i = 0; i < c; ++i) cb = big->add(cb, 1);
      acc = big->add(big->mul(acc, x), cb);
    }
    return acc;
  };
  uint32_t g = 0;
  bool found = false;
  for (uint32_t u = 1; u < small->q() && !found; ++u) {
    if (std::gcd<uint64_t>(u, small->q() - 1) != 1) continue;
    uint32_t cand = big->exp(t * u);
    if (eval_small_poly(cand) == 0) {
      g = cand;
      found = true;
    }
  }
  if (!found) fail("NotASubfield: no root of the small defining polynomial");  // unreachable

  e.fwd_.assign(small->q(), 0);
  std::vector<uint32_t> gpow(small->s());
  for (uint32_t j = 0; j < small->s(); ++j) gpow[j] = big->pow(g, j);
  std::vector<uint32_t> prime_img(small->p(), 0);
  for (uint32_t c = 1; c < small->p(); ++c) prime_img[c] = big->add(prime_img[c - 1], 1);
  for (uint32_t v = 0; v < small->q(); ++v) {
    uint32_t acc = 0, rem = v;
    for (uint32_t j = 0; j < small->s(); ++j) {
      acc = big->add(acc, big->mul(prime_img[rem % small->p()], gpow[j]));
      rem /= small->p();
    }
    e.fwd_[v] = acc;
  }
  e.back_.assign(big->q(), -1);
  for (uint32_t v = 0; v < small->q(); ++v) e.back_[e.fwd_[v]] = int32_t(v);
  return e;
}

}  // namespace linc
