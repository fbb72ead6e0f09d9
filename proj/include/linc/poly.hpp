#pragma once
// Dense polynomials over a finite field, q-cyclotomic cosets, minimal
// polynomials, and the factorization of x^n - lambda that underlies every
// constacyclic construction in the library.
#include <cstdint>
#include <utility>
#include <vector>

#include "linc/gf.hpp"

namespace linc {

// Coefficients are stored low-degree-first with no trailing zeros; the zero
// polynomial has an empty vector and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr f) : f_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<uint32_t> coeffs);

  static Poly monomial(const FieldPtr& f, uint32_t coeff, size_t degree);
  static Poly constant(const FieldPtr& f, uint32_t c) { return monomial(f, c, 0); }

  const FieldPtr& field() const { return f_; }
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  uint32_t lead() const { return c_.back(); }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<uint32_t>& coeffs() const { return c_; }

  uint32_t eval(uint32_t x) const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const { return f_->same(*o.f_) && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  void trim();
  FieldPtr f_;
  std::vector<uint32_t> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic for nonzero inputs
Poly lcm(const Poly& a, const Poly& b);
// x^{deg f} f(1/x), normalized monic; the degree drops when f(0) = 0.
Poly reciprocal(const Poly& f);

// Partition of Z_rn into q-cyclotomic cosets. gamma1 keeps the leaders
// congruent to 1 mod r, the ones indexing the factors of x^n - lambda when
// lambda has order r.
struct CosetTable {
  uint64_t q = 0, rn = 0, r = 1;
  std::vector<std::vector<uint64_t>> cosets;  // ascending by leader
  std::vector<uint64_t> leaders;              // minimum of each coset
  std::vector<uint64_t> gamma1;               // leaders congruent to 1 mod r
  std::vector<uint64_t> leader_of;            // element -> its coset leader

  const std::vector<uint64_t>& coset_of(uint64_t i) const;
};

CosetTable cyclotomic_cosets(uint64_t q, uint64_t rn, uint64_t r);

// Minimal polynomial of a big-field element over the embedded small field:
// the product of (x - conjugate) over the Frobenius orbit.
Poly minimal_poly(const Embedding& emb, uint32_t elt);

// Complete factorization of x^n - lambda over GF(q), gcd(n, q) = 1, together
// with the splitting data every constacyclic computation reuses: the
// splitting field GF(q^m) with m = ord_rn(q), and the designated primitive
// rn-th root of unity beta with beta^n = lambda (beta = zeta^e for
// zeta = alpha^{(q^m-1)/rn} and the smallest e with gcd(e, rn) = 1 that
// satisfies the normalization; e = 1 whenever zeta^n = lambda already).
struct XnFactorization {
  FieldPtr field;      // GF(q)
  FieldPtr splitting;  // GF(q^m)
  Embedding emb;       // GF(q) -> GF(q^m)
  uint64_t n = 0, r = 1, rn = 0, m = 1;
  uint32_t lambda = 1;
  uint32_t beta = 0;  // in the splitting field
  CosetTable cosets;
  struct Factor {
    Poly poly;        // monic irreducible over GF(q)
    uint64_t leader;  // its coset leader in gamma1
  };
  std::vector<Factor> factors;  // ascending by leader; product = x^n - lambda

  uint32_t beta_pow(int64_t e) const { return splitting->pow(beta, e); }
  const Poly& factor_of(uint64_t leader) const;
};

XnFactorization factor_xn_minus_lambda(const FieldPtr& f, uint64_t n, uint32_t lambda);
// Same, but with a pinned defining polynomial for the splitting field (the
// enumerators of some nonstandard extensions depend on this choice).
XnFactorization factor_xn_minus_lambda(const FieldPtr& f, uint64_t n, uint32_t lambda,
                                       const std::vector<uint32_t>& splitting_poly);

}  // namespace linc
