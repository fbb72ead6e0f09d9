#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>
#include <vector>

#include "linc/code.hpp"
#include "linc/constacyclic.hpp"
#include "linc/poly.hpp"

using namespace linc;

namespace {

Poly x_pow_n_minus(const FieldPtr& f, uint64_t n, uint32_t lambda) {
  std::vector<uint32_t> c(size_t(n) + 1, 0);
  c[0] = f->neg(lambda);
  c[size_t(n)] = 1;
  return Poly(f, std::move(c));
}

// (c_0..c_{n-1}) -> (lambda c_{n-1}, c_0, .., c_{n-2})
std::vector<uint32_t> shift(const FieldPtr& f, uint32_t lambda,
                            const std::vector<uint32_t>& c) {
  std::vector<uint32_t> out(c.size());
  out[0] = f->mul(lambda, c.back());
  for (size_t i = 1; i < c.size(); ++i) out[i] = c[i - 1];
  return out;
}

bool shift_closed(const ConstacyclicCode& c) {
  for (size_t i = 0; i < c.linear.k(); ++i) {
    const auto* r = c.linear.gen().row(i);
    std::vector<uint32_t> row(r, r + c.linear.n());
    if (!c.linear.contains(shift(c.field, c.lambda, row))) return false;
  }
  return true;
}

std::set<std::vector<uint32_t>> word_set(const LinearCode& c) {
  auto tab = all_codewords(c);
  std::set<std::vector<uint32_t>> out;
  for (size_t i = 0; i < tab.rows; ++i)
    out.insert(std::vector<uint32_t>(tab.row(i), tab.row(i) + tab.cols));
  return out;
}

int weight(const std::vector<uint32_t>& v) {
  int w = 0;
  for (auto x : v) w += x != 0;
  return w;
}

}  // namespace

TEST_CASE("ideal generated by x - alpha in GF(4)[x]/(x^5 - alpha^2)") {
  auto f4 = make_field(2, 2);
  uint32_t alpha = f4->alpha();
  uint32_t lambda = f4->pow(alpha, 5);  // = alpha^2, the value forced by the root
  auto c = make_constacyclic(f4, 5, lambda, Poly(f4, {alpha, 1}));
  CHECK(c.linear.n() == 5);
  CHECK(c.linear.k() == 4);
  CHECK(c.g * c.h == x_pow_n_minus(f4, 5, lambda));
  CHECK(shift_closed(c));
  CHECK(min_distance(c.linear) == 2);
}

TEST_CASE("zero and full ideals") {
  auto f3 = make_field(3, 1);
  auto whole = x_pow_n_minus(f3, 8, 1);
  auto zero = make_constacyclic(f3, 8, 1, whole);
  CHECK(zero.linear.k() == 0);
  CHECK(zero.h.degree() == 0);
  CHECK(bch_lower_bound(zero) == 9);  // every power of beta is a root

  auto full = make_constacyclic(f3, 8, 1, Poly(f3, {1}));
  CHECK(full.linear.k() == 8);
  CHECK(bch_lower_bound(full) == 1);
  CHECK(min_distance(full.linear) == 1);
}

TEST_CASE("the dual is constacyclic for the inverse unit") {
  auto f4 = make_field(2, 2);
  uint32_t alpha = f4->alpha();
  auto c = make_constacyclic(f4, 7, alpha, Poly(f4, {1, 0, alpha, 1}));
  CHECK(c.linear.k() == 4);
  CHECK(min_distance(c.linear) == 3);

  auto d = dual_constacyclic(c);
  CHECK(d.lambda == f4->inv(alpha));
  CHECK(d.linear == dual(c.linear));
  CHECK(d.g == reciprocal(c.h));
  CHECK(min_distance(d.linear) == 4);
  CHECK(shift_closed(d));

  auto dd = dual_constacyclic(d);
  CHECK(dd.lambda == c.lambda);
  CHECK(dd.g == c.g);
  CHECK(dd.linear == c.linear);
}

TEST_CASE("distance floor certified by consecutive root exponents") {
  // zeros at beta^1 and beta^4 = beta^0: the run wraps around
  auto f5 = make_field(5, 1);
  auto c = make_constacyclic(f5, 4, 1, Poly(f5, {2, 2, 1}));  // (x-1)(x-2)
  CHECK(bch_lower_bound(c) == 3);
  CHECK(min_distance(c.linear) == 3);

  auto f3 = make_field(3, 1);
  auto fact = factor_xn_minus_lambda(f3, 40, 1);
  auto m1 = make_constacyclic(f3, 40, 1, fact.factor_of(1));
  CHECK(m1.linear.k() == 36);
  CHECK(bch_lower_bound(m1) == 2);

  // the floor never exceeds the true distance
  std::mt19937_64 rng(0xC0DEC0DE);
  for (uint64_t n : {8, 10, 13}) {
    auto f = factor_xn_minus_lambda(f3, n, 1);
    for (int t = 0; t < 8; ++t) {
      Poly g(f3, {1});
      for (const auto& fc : f.factors)
        if (rng() & 1) g = g * fc.poly;
      if (g.degree() == int(n)) continue;
      auto cc = make_constacyclic(f3, n, 1, g);
      CHECK(bch_lower_bound(cc) <= min_distance(cc.linear));
      CHECK(shift_closed(cc));
      CHECK(dual_constacyclic(cc).linear == dual(cc.linear));
    }
  }
}

TEST_CASE("trace image equals the code with the designated check factor") {
  auto f3 = make_field(3, 1);
  auto fact = factor_xn_minus_lambda(f3, 13, 1);
  auto g = divmod(x_pow_n_minus(f3, 13, 1), fact.factor_of(1)).first;
  auto c = make_constacyclic(f3, 13, 1, g);
  REQUIRE(c.linear.k() == 3);
  std::set<std::vector<uint32_t>> traced;
  for (uint32_t a = 0; a < 27; ++a) traced.insert(trace_codeword(fact, {{1, a}}));
  CHECK(traced.size() == 27);
  CHECK(traced == word_set(c.linear));

  auto f4 = make_field(2, 2);
  auto fact17 = factor_xn_minus_lambda(f4, 17, 1);
  auto g17 = divmod(x_pow_n_minus(f4, 17, 1), fact17.factor_of(1)).first;
  auto c17 = make_constacyclic(f4, 17, 1, g17);
  REQUIRE(c17.linear.k() == 4);
  std::set<std::vector<uint32_t>> traced17;
  for (uint32_t a = 0; a < 256; ++a)
    traced17.insert(trace_codeword(fact17, {{1, a}}));
  CHECK(traced17 == word_set(c17.linear));

  CHECK(trace_codeword(fact, {{1, 0}}) == std::vector<uint32_t>(13, 0));
}

TEST_CASE("negacyclic trace weights under a pinned splitting polynomial") {
  auto f3 = make_field(3, 1);
  std::vector<uint32_t> pinned{2, 0, 0, 2, 1};
  auto fact = factor_xn_minus_lambda(f3, 20, 2, pinned);
  CHECK(fact.rn == 40);
  CHECK(fact.m == 4);
  CHECK(fact.beta == 9);
  std::map<int, int> hist;
  for (uint32_t a = 1; a < 81; ++a)
    hist[weight(trace_codeword(fact, {{1, a}}))]++;
  CHECK(hist == std::map<int, int>{{12, 40}, {15, 40}});

  auto g = divmod(x_pow_n_minus(f3, 20, 2), fact.factor_of(1)).first;
  auto c = make_constacyclic(f3, 20, 2, g, pinned);
  REQUIRE(c.linear.k() == 4);
  auto wd = weight_distribution(c.linear);
  CHECK(wd.counts[12] == 40);
  CHECK(wd.counts[15] == 40);
  CHECK(wd.min_positive() == 12);
}

TEST_CASE("multi-term trace sums stay inside the joint check ideal") {
  auto f3 = make_field(3, 1);
  auto fact = factor_xn_minus_lambda(f3, 13, 1);
  REQUIRE(fact.cosets.coset_of(0).size() == 1);
  // leaders 0 and 1: check polynomial (x - 1) * M_1, dimension 4
  Poly g(f3, {1});
  for (const auto& fc : fact.factors)
    if (fc.leader != 0 && fc.leader != 1) g = g * fc.poly;
  auto c = make_constacyclic(f3, 13, 1, g);
  REQUIRE(c.linear.k() == 4);
  std::mt19937_64 rng(0xC0DEC0DE);
  for (int t = 0; t < 30; ++t) {
    uint32_t a0 = uint32_t(rng() % 3);          // GF(3) coefficient for leader 0
    uint32_t a1 = uint32_t(rng() % 27);         // GF(27) coefficient for leader 1
    CHECK(c.linear.contains(trace_codeword(fact, {{0, a0}, {1, a1}})));
  }
}

TEST_CASE("constacyclic input validation") {
  auto f3 = make_field(3, 1);
  auto f4 = make_field(2, 2);
  CHECK_THROWS_WITH_AS(make_constacyclic(f3, 8, 0, Poly(f3, {1})),
                       doctest::Contains("ZeroElement"), error);
  CHECK_THROWS_WITH_AS(make_constacyclic(f3, 8, 3, Poly(f3, {1})),
                       doctest::Contains("InvalidElement"), error);
  CHECK_THROWS_WITH_AS(make_constacyclic(f3, 8, 1, Poly(f3, {1, 2})),
                       doctest::Contains("NotADivisor"), error);  // not monic
  CHECK_THROWS_WITH_AS(make_constacyclic(f3, 8, 1, Poly(f3, {0, 1})),
                       doctest::Contains("NotADivisor"), error);  // x never divides
  CHECK_THROWS_WITH_AS(make_constacyclic(f3, 9, 1, Poly(f3, {2, 1})),
                       doctest::Contains("NotCoprime"), error);

  auto fact = factor_xn_minus_lambda(f3, 40, 1);
  CHECK_THROWS_WITH_AS(trace_codeword(fact, {{3, 1}}),
                       doctest::Contains("InconsistentInput"), error);
  CHECK_THROWS_WITH_AS(trace_codeword(fact, {{1, 1}, {1, 2}}),
                       doctest::Contains("InconsistentInput"), error);
  // leader 0 sits in a singleton coset, so its coefficient must come from GF(3)
  CHECK_THROWS_WITH_AS(trace_codeword(fact, {{0, fact.splitting->alpha()}}),
                       doctest::Contains("FieldMismatch"), error);
  CHECK_THROWS_WITH_AS(trace_codeword(fact, {{40, 1}}),
                       doctest::Contains("InconsistentInput"), error);
  CHECK(shift_closed(make_constacyclic(f4, 5, 1, Poly(f4, {f4->neg(1), 1}))));
}
