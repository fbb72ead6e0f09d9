#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <vector>

#include "linc/code.hpp"
#include "linc/constacyclic.hpp"
#include "linc/extension.hpp"
#include "linc/families.hpp"
#include "linc/gf.hpp"
#include "linc/poly.hpp"

using namespace linc;

namespace {

using WdMap = std::map<size_t, long>;

WdMap wd_map(const WeightDistribution& w) {
  WdMap out;
  for (size_t i = 0; i <= w.n; ++i)
    if (w.counts[i] != 0) out[i] = long(w.counts[i].get_si());
  return out;
}

// distance through the dual's generator columns; cheap when the dual is small
int dist(const LinearCode& c, int wmax = 8) {
  auto d = dual_distance_upto(dual(c), wmax);
  return d ? *d : -1;
}

int dual_dist(const LinearCode& c, int wmax = 8) {
  auto d = dual_distance_upto(c, wmax);
  return d ? *d : -1;
}

FieldPtr field_of_order(uint32_t q) {
  for (uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    uint32_t s = 0, t = q;
    while (t % p == 0) t /= p, ++s;
    return make_field(p, s);
  }
  fail("RangeError: not a prime power");
}

}  // namespace

TEST_CASE("point set validators") {
  auto f = make_field(3, 1);
  PointSet ok{f, 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}};
  CHECK(projectively_distinct(ok));
  CHECK(no_three_collinear(ok));

  PointSet scaled{f, 3, {{1, 2, 0}, {2, 1, 0}}};
  CHECK_FALSE(projectively_distinct(scaled));

  PointSet line{f, 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}};
  CHECK_FALSE(no_three_collinear(line));

  CHECK_THROWS_WITH_AS(projectively_distinct(PointSet{f, 3, {{1, 0}}}),
                       doctest::Contains("LengthMismatch"), error);
  CHECK_THROWS_WITH_AS(projectively_distinct(PointSet{f, 2, {{0, 0}}}),
                       doctest::Contains("ZeroElement"), error);
  CHECK_THROWS_WITH_AS(projectively_distinct(PointSet{f, 2, {{5, 1}}}),
                       doctest::Contains("InvalidElement"), error);
}

TEST_CASE("cyclic RS codes extend to MDS codes on both sides") {
  for (uint32_t q : {4, 5, 7, 8, 9, 11, 13}) {
    auto f = field_of_order(q);
    for (uint32_t d = 2; d <= 4 && d <= q - 2; ++d) {
      auto rs = cyclic_rs(f, d);
      REQUIRE(rs.code.linear.n() == q - 1);
      REQUIRE(rs.code.linear.k() == q - d);
      auto ext = extend(rs.code.linear, rs.u);
      CHECK(ext.n() == q);
      CHECK(dist(ext, int(d) + 1) == int(d) + 1);
      auto dx = dual(ext);
      CHECK(dx.k() == d);
      CHECK(weight_distribution(dx).min_positive() == int(q - d + 1));
    }
  }
  auto f5 = make_field(5, 1);
  auto rs = cyclic_rs(f5, 3);
  CHECK(min_distance(rs.code.linear) == 3);
  CHECK(classify(rs.code.linear, std::vector<uint32_t>(4, 4)).trivial);
  CHECK_THROWS_WITH_AS(cyclic_rs(f5, 5), doctest::Contains("RangeError"),
                       error);
  CHECK_THROWS_WITH_AS(cyclic_rs(make_field(3, 1), 2),
                       doctest::Contains("RangeError"), error);
}

TEST_CASE("conic codes and their three extensions") {
  auto f5 = make_field(5, 1);
  auto ch = conic_chain(f5);
  CHECK(ch.base.n() == 5);
  CHECK(ch.base.k() == 3);
  CHECK(min_distance(ch.base) == 3);
  CHECK(min_distance(ch.ext1) == 4);
  CHECK(ch.ext2.n() == 7);
  CHECK(min_distance(ch.ext2) == 4);
  CHECK(wd_map(weight_distribution(ch.ext3)) ==
        WdMap{{0, 1}, {5, 20}, {6, 52}, {7, 28}, {8, 24}});

  auto f4 = make_field(2, 2);
  auto h4 = conic_chain(f4);
  CHECK(wd_map(weight_distribution(h4.ext2)) ==
        WdMap{{0, 1}, {4, 45}, {6, 18}});

  // every q: ext2 is [q+2, 3, q-1] (odd q) or [q+2, 3, q] (even q), and the
  // triple extension [q+3, 3, q] has the parity-matched enumerator
  for (uint32_t q : {4, 5, 7, 8, 9, 16}) {
    auto f = field_of_order(q);
    auto c = conic_chain(f);
    long Q = q;
    CHECK(min_distance(c.ext2) == int(q % 2 ? q - 1 : q));
    WdMap want{{0, 1}};
    if (q % 2) {
      want[q] = Q * (Q - 1);
      want[q + 1] = (Q * Q * Q - 2 * Q * Q + 7 * Q - 6) / 2;
      want[q + 2] = 2 * Q * Q - 5 * Q + 3;
      want[q + 3] = (Q - 2) * (Q - 1) * (Q - 1) / 2;
    } else {
      want[q] = (Q * Q + Q - 2) / 2;
      want[q + 1] = (Q * Q * Q + Q * Q - 2 * Q) / 2;
      want[q + 2] = (Q * Q - Q) / 2;
      want[q + 3] = (Q * Q * Q - 3 * Q * Q + 2 * Q) / 2;
    }
    CHECK(wd_map(weight_distribution(c.ext3)) == want);
    CHECK(dual_dist(c.ext3, 3) == 3);
    CHECK(dual(c.ext3).k() == q);
  }
  CHECK_THROWS_WITH_AS(conic_chain(make_field(3, 1)),
                       doctest::Contains("FieldTooSmall"), error);
}

TEST_CASE("hamming codes agree with their constacyclic form") {
  for (auto [p, s, m] : {std::tuple{3u, 1u, 2u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    auto f = make_field(p, s);
    uint64_t n = hamming_length(f, m);
    auto ham = hamming_code(f, m, std::vector<uint32_t>(n, 1));
    CHECK(ham.k() == n - m);
    CHECK(dist(ham, 3) == 3);

    auto big = make_field(p, s * m);
    auto emb = make_embedding(f, big);
    uint32_t lambda = emb.down(big->pow(big->alpha(), int64_t(n)));
    auto cc = make_constacyclic(f, n, lambda, minimal_poly(emb, big->alpha()));
    CHECK(cc.linear == ham);
  }
  auto f3 = make_field(3, 1);
  CHECK(hamming_length(f3, 4) == 40);
  CHECK_THROWS_WITH_AS(hamming_length(f3, 1), doctest::Contains("RangeError"),
                       error);
  CHECK_THROWS_WITH_AS(hamming_code(f3, 2, {1, 1, 1}),
                       doctest::Contains("LengthMismatch"), error);
  CHECK_THROWS_WITH_AS(hamming_code(f3, 2, {1, 0, 1, 1}),
                       doctest::Contains("ZeroScale"), error);
  CHECK_THROWS_WITH_AS(hamming_code(f3, 2, {1, 3, 1, 1}),
                       doctest::Contains("InvalidElement"), error);
}

TEST_CASE("simplex codes have a single nonzero weight") {
  auto f4 = make_field(2, 2);
  auto sx = simplex_code(f4, 3, std::vector<uint32_t>(21, 1));
  CHECK(wd_map(weight_distribution(sx)) == WdMap{{0, 1}, {16, 63}});
  auto f3 = make_field(3, 1);
  auto s3 = simplex_code(f3, 3, std::vector<uint32_t>(13, 1));
  CHECK(wd_map(weight_distribution(s3)) == WdMap{{0, 1}, {9, 26}});
  CHECK(dual(s3) == hamming_code(f3, 3, std::vector<uint32_t>(13, 1)));
}

TEST_CASE("standard extensions of scaled hamming codes") {
  // unscaled: the extension distance stays 3
  for (auto [p, s, m] : {std::tuple{3u, 1u, 2u}, {3u, 1u, 3u}, {3u, 1u, 4u},
                         {2u, 2u, 2u}, {2u, 2u, 3u}, {5u, 1u, 2u}}) {
    auto f = make_field(p, s);
    uint64_t n = hamming_length(f, m);
    auto ext = standard_extend(hamming_code(f, m, std::vector<uint32_t>(n, 1)));
    CHECK(dist(ext, 4) == 3);
  }

  // the scale vector with empty S-set pushes the distance to 4 and the dual
  // becomes a [q+2, 3, q] MDS code
  CHECK(hamming_mds_a(make_field(2, 2)) == std::vector<uint32_t>{1, 2, 3, 1, 2});
  CHECK(hamming_mds_a(make_field(2, 3)) ==
        std::vector<uint32_t>{1, 2, 4, 3, 6, 7, 5, 1, 2});
  for (auto [p, s] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}}) {
    auto f = make_field(p, s);
    uint32_t q = f->q();
    auto a = hamming_mds_a(f);
    CHECK(s_set_size(f, 2, a) == 0);
    auto ext = standard_extend(hamming_code(f, 2, a));
    CHECK(ext.n() == q + 2);
    CHECK(ext.k() == q - 1);
    CHECK(dist(ext, 5) == 4);
    auto dx = dual(ext);
    CHECK(dx.k() == 3);
    CHECK(weight_distribution(dx).min_positive() == int(q));
  }
  CHECK_THROWS_WITH_AS(hamming_mds_a(make_field(3, 1)),
                       doctest::Contains("NotCharTwo"), error);
  CHECK_THROWS_WITH_AS(hamming_mds_a(make_field(2, 1)),
                       doctest::Contains("RangeError"), error);

  // pinned GF(4) scale vectors with known S-set sizes
  auto f4 = make_field(2, 2);
  std::vector<std::vector<uint32_t>> as = {
      {1, 2, 3, 1, 2}, {3, 1, 2, 3, 1}, {2, 3, 2, 1, 3}};
  uint64_t want_s[3] = {0, 0, 2};
  int want_d[3] = {4, 4, 3};
  for (int i = 0; i < 3; ++i) {
    CHECK(s_set_size(f4, 2, as[i]) == want_s[i]);
    auto ext = standard_extend(hamming_code(f4, 2, as[i]));
    CHECK(dist(ext, 5) == want_d[i]);
  }

  // the S-set criterion matches enumeration on random scale vectors
  std::mt19937_64 rng(0xC0DEC0DE);
  for (auto [p, s, m] : {std::tuple{3u, 1u, 2u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    auto f = make_field(p, s);
    uint64_t n = hamming_length(f, m);
    for (int t = 0; t < 30; ++t) {
      std::vector<uint32_t> a(n);
      for (auto& x : a) x = 1 + uint32_t(rng() % (f->q() - 1));
      auto ext = standard_extend(hamming_code(f, m, a));
      int want = s_set_size(f, m, a) >= 1 ? 3 : 4;
      CHECK(dist(ext, 5) == want);
    }
  }
}

TEST_CASE("extended simplex codes keep two weights") {
  for (auto [p, s, m] : {std::tuple{3u, 1u, 2u}, {3u, 1u, 3u}, {2u, 2u, 2u},
                         {5u, 1u, 2u}}) {
    auto f = make_field(p, s);
    uint32_t q = f->q();
    uint64_t n = hamming_length(f, m);
    auto sx = simplex_code(f, m, std::vector<uint32_t>(n, 1));
    long w = 1;
    for (uint32_t i = 0; i + 1 < m; ++i) w *= q;
    auto ext = standard_extend(sx);
    CHECK(wd_map(weight_distribution(ext)) ==
          WdMap{{0, 1}, {size_t(w), w - 1}, {size_t(w) + 1, w * long(q - 1)}});
    CHECK(dual_dist(ext, 3) == 2);
    CHECK(a2perp(sx, std::vector<uint32_t>(n, 1)) == q - 1);
  }
}

TEST_CASE("irreducible constacyclic two-weight codes over GF(3)") {
  auto f = make_field(3, 1);
  std::vector<uint32_t> pin{2, 0, 0, 2, 1};
  auto tw = two_weight_constacyclic(f, 2, 1, 2, 1, pin);
  CHECK(tw.code.linear.n() == 20);
  CHECK(tw.code.linear.k() == 4);
  CHECK(tw.h == 2);
  CHECK(tw.w1 == 12);
  CHECK(tw.w2 == 15);
  CHECK(wd_map(weight_distribution(tw.code.linear)) ==
        WdMap{{0, 1}, {12, 40}, {15, 40}});
  CHECK(tw.code.h.coeffs() == std::vector<uint32_t>{1, 0, 1, 2, 1});
  CHECK_FALSE(theta_condition(tw.code));
  auto ext = standard_extend(tw.code.linear);
  CHECK(wd_map(weight_distribution(ext)) ==
        WdMap{{0, 1}, {12, 10}, {13, 30}, {15, 16}, {16, 24}});
  CHECK(dual_dist(ext, 4) == 3);

  // the conjugate root choice flips the theta condition
  auto tw7 = two_weight_constacyclic(f, 2, 1, 2, 7, pin);
  CHECK(tw7.code.h.coeffs() == std::vector<uint32_t>{1, 0, 1, 1, 1});
  CHECK(theta_condition(tw7.code));
  auto ext7 = standard_extend(tw7.code.linear);
  CHECK(wd_map(weight_distribution(ext7)) ==
        WdMap{{0, 1}, {12, 16}, {13, 24}, {15, 10}, {16, 30}});
  CHECK(dual_dist(ext7, 4) == 2);
}

TEST_CASE("irreducible constacyclic two-weight codes over GF(5)") {
  auto f = make_field(5, 1);
  std::vector<uint32_t> pin{2, 4, 4, 0, 1};
  auto tw = two_weight_constacyclic(f, 2, 1, 3, 1, pin);
  CHECK(tw.code.linear.n() == 52);
  CHECK(tw.w1 == 40);
  CHECK(tw.w2 == 45);
  CHECK(wd_map(weight_distribution(tw.code.linear)) ==
        WdMap{{0, 1}, {40, 416}, {45, 208}});
  CHECK(tw.code.h.coeffs() == std::vector<uint32_t>{3, 3, 3, 2, 1});
  CHECK_FALSE(theta_condition(tw.code));
  auto ext = standard_extend(tw.code.linear);
  CHECK(wd_map(weight_distribution(ext)) ==
        WdMap{{0, 1}, {40, 76}, {41, 340}, {45, 48}, {46, 160}});
  CHECK(dual_dist(ext, 4) == 3);
  CHECK(dual(ext).k() == 49);

  auto tw21 = two_weight_constacyclic(f, 2, 1, 3, 21, pin);
  CHECK(tw21.code.h.coeffs() == std::vector<uint32_t>{3, 2, 3, 3, 1});
  CHECK(theta_condition(tw21.code));
  auto ext21 = standard_extend(tw21.code.linear);
  CHECK(wd_map(weight_distribution(ext21)) ==
        WdMap{{0, 1}, {40, 96}, {41, 320}, {45, 28}, {46, 180}});
  CHECK(dual_dist(ext21, 4) == 2);

  CHECK_THROWS_WITH_AS(two_weight_constacyclic(f, 2, 1, 5),
                       doctest::Contains("DivisibilityViolated"), error);
  CHECK_THROWS_WITH_AS(two_weight_constacyclic(f, 2, 1, 3, 13),
                       doctest::Contains("RangeError"), error);
  CHECK_THROWS_WITH_AS(two_weight_constacyclic(make_field(2, 1), 2, 1, 3),
                       doctest::Contains("RangeError"), error);
}

TEST_CASE("elliptic quadrics give two-weight ovoid codes") {
  for (auto [p, s] : {std::pair{3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    auto f = make_field(p, s);
    long q = f->q();
    auto pts = elliptic_quadric(f);
    REQUIRE(pts.points.size() == size_t(q * q + 1));
    CHECK(projectively_distinct(pts));
    CHECK(no_three_collinear(pts));
    auto c = ovoid_code(pts);
    CHECK(wd_map(weight_distribution(c)) ==
          WdMap{{0, 1},
                {size_t(q * q - q), (q * q - q) * (q * q + 1)},
                {size_t(q * q), (q - 1) * (q * q + 1)}});
  }
  CHECK_THROWS_WITH_AS(elliptic_quadric(make_field(3, 1), 1),
                       doctest::Contains("ReduciblePolynomial"), error);
  CHECK_THROWS_WITH_AS(elliptic_quadric(make_field(3, 1), 7),
                       doctest::Contains("InvalidElement"), error);
}

TEST_CASE("tits ovoid over GF(8)") {
  auto f = make_field(2, 3);
  auto pts = tits_ovoid(f);
  REQUIRE(pts.points.size() == 65);
  CHECK(no_three_collinear(pts));
  CHECK(wd_map(weight_distribution(ovoid_code(pts))) ==
        WdMap{{0, 1}, {56, 3640}, {64, 455}});
  CHECK_THROWS_WITH_AS(tits_ovoid(make_field(3, 2)),
                       doctest::Contains("BadCharacteristic"), error);
  CHECK_THROWS_WITH_AS(tits_ovoid(make_field(2, 2)),
                       doctest::Contains("RangeError"), error);
}

TEST_CASE("ovoid code extensions split one weight class") {
  auto f3 = make_field(3, 1);
  auto pts = elliptic_quadric(f3);
  auto c = ovoid_code(pts);

  auto u = ovoid_extension_u(pts, 1, 0);
  auto ext = extend(c, u);
  CHECK(a2perp(c, u) == 0);
  CHECK(wd_map(weight_distribution(ext)) ==
        WdMap{{0, 1}, {6, 18}, {7, 42}, {9, 8}, {10, 12}});
  CHECK(dual_dist(ext, 4) == 3);
  CHECK(dual(ext).k() == 7);

  auto sext = standard_extend(c);
  CHECK(a2perp(c, std::vector<uint32_t>(c.n(), 2)) == 2);
  CHECK(wd_map(weight_distribution(sext)) ==
        WdMap{{0, 1}, {6, 24}, {7, 36}, {9, 2}, {10, 18}});
  CHECK(dual_dist(sext, 4) == 2);

  // a second extension by the all-one functional restores dual distance 3
  auto dext = standard_extend(ext);
  CHECK(dext.n() == 12);
  CHECK(min_distance(dext) == 6);
  CHECK(wd_map(weight_distribution(dext)) ==
        WdMap{{0, 1}, {6, 8}, {7, 20}, {8, 32}, {10, 16}, {11, 4}});
  CHECK(dual_dist(dext, 4) == 3);
  CHECK(dual(dext).k() == 8);

  // the same closed form holds for every ovoid in the suite
  for (auto [p, s] : {std::pair{2u, 2u}, {5u, 1u}, {2u, 3u}}) {
    auto f = make_field(p, s);
    long q = f->q();
    auto o = (q == 8) ? tits_ovoid(f) : elliptic_quadric(f);
    auto oc = ovoid_code(o);
    auto ou = ovoid_extension_u(o, q % 2 ? 1 : 2, 0);
    auto oe = extend(oc, ou);
    CHECK(wd_map(weight_distribution(oe)) ==
          WdMap{{0, 1},
                {size_t(q * q - q), q * q * (q - 1)},
                {size_t(q * q - q + 1), q * (q - 1) * (q * q - q + 1)},
                {size_t(q * q), q * q - 1},
                {size_t(q * q + 1), q * (q - 1) * (q - 1)}});
    CHECK(dual_dist(oe, 4) == 3);
  }

  CHECK_THROWS_WITH_AS(ovoid_extension_u(pts, 0, 0),
                       doctest::Contains("RangeError"), error);
  CHECK_THROWS_WITH_AS(ovoid_extension_u(pts, 2, 0),
                       doctest::Contains("RangeError"), error);
  CHECK_THROWS_WITH_AS(ovoid_extension_u(pts, 1, 1),
                       doctest::Contains("RangeError"), error);
  PointSet no_anchor = pts;
  no_anchor.points.erase(no_anchor.points.begin());
  CHECK_THROWS_WITH_AS(ovoid_extension_u(no_anchor, 1, 0),
                       doctest::Contains("MissingAnchorPoints"), error);
}

TEST_CASE("cyclic ovoid codes over GF(4) and GF(8)") {
  auto f4 = make_field(2, 2);
  auto co = cyclic_ovoid(f4, 2);
  CHECK(co.code.linear.n() == 17);
  CHECK(co.code.linear.k() == 4);
  CHECK(wd_map(weight_distribution(co.code.linear)) ==
        WdMap{{0, 1}, {12, 204}, {16, 51}});

  // the all-one functional lies in the dual: its extension is trivial
  std::vector<uint32_t> ones(17, 1);
  CHECK(classify(co.code.linear, ones).trivial);
  auto sext = standard_extend(co.code.linear);
  for (size_t r = 0; r < sext.k(); ++r) CHECK(sext.gen().at(r, 17) == 0);

  auto ext = extend(co.code.linear, co.u);
  CHECK(wd_map(weight_distribution(ext)) ==
        WdMap{{0, 1}, {12, 48}, {13, 156}, {16, 15}, {17, 36}});
  CHECK(dual_dist(ext, 4) == 3);

  auto f8 = make_field(2, 3);
  auto co8 = cyclic_ovoid(f8, 2);
  CHECK(co8.code.linear.n() == 65);
  auto ext8 = extend(co8.code.linear, co8.u);
  CHECK(wd_map(weight_distribution(ext8)) ==
        WdMap{{0, 1}, {56, 448}, {57, 3192}, {64, 63}, {65, 392}});
  CHECK(dual_dist(ext8, 4) == 3);

  CHECK_THROWS_WITH_AS(cyclic_ovoid(make_field(5, 1), 2),
                       doctest::Contains("BadCharacteristic"), error);
  CHECK_THROWS_WITH_AS(cyclic_ovoid(make_field(2, 1), 1),
                       doctest::Contains("RangeError"), error);
  CHECK_THROWS_WITH_AS(cyclic_ovoid(f4, 1), doctest::Contains("RangeError"),
                       error);
  CHECK_THROWS_WITH_AS(cyclic_ovoid(f4, 9), doctest::Contains("InvalidElement"),
                       error);
}

TEST_CASE("constacyclic ovoid codes through the two-weight family") {
  for (auto [p, s] : {std::pair{3u, 1u}, {2u, 2u}}) {
    auto f = make_field(p, s);
    long q = f->q();
    auto tw = two_weight_constacyclic(f, 2, 1, q + 1);
    CHECK(tw.code.linear.n() == q * q + 1);
    CHECK(tw.w1 == q * q - q);
    CHECK(tw.w2 == q * q);
    CHECK_FALSE(theta_condition(tw.code));
    auto ext = standard_extend(tw.code.linear);
    CHECK(wd_map(weight_distribution(ext)) ==
          WdMap{{0, 1},
                {size_t(q * q - q), q * q * (q - 1)},
                {size_t(q * q - q + 1), q * (q - 1) * (q * q - q + 1)},
                {size_t(q * q), q * q - 1},
                {size_t(q * q + 1), q * (q - 1) * (q - 1)}});
    CHECK(dual_dist(ext, 4) == 3);
    CHECK(dual(ext).k() == q * q - 2);
  }
}

TEST_CASE("additive subgroups of binary fields") {
  auto f4 = make_field(2, 2);
  auto small = additive_subgroups(f4, 2);
  REQUIRE(small.size() == 3);
  for (auto& g : small) {
    REQUIRE(g.size() == 2);
    CHECK(g[0] == 0);
  }

  auto f16 = make_field(2, 4);
  auto groups = additive_subgroups(f16, 4);
  CHECK(groups.size() == 35);
  std::vector<uint32_t> subfield{0};
  for (uint32_t x = 1; x < 16; ++x)
    if (f16->pow(x, 3) == 1) subfield.push_back(x);
  CHECK(subfield == std::vector<uint32_t>{0, 1, 6, 7});
  CHECK(std::count(groups.begin(), groups.end(), subfield) == 1);

  // every subgroup of order >= 4 sums to zero
  for (uint32_t m = 2; m <= 6; ++m) {
    auto f = make_field(2, m);
    for (uint32_t i = 2; i <= m; ++i) {
      for (auto& g : additive_subgroups(f, 1u << i, 100)) {
        uint32_t acc = 0;
        for (auto x : g) acc ^= x;
        CHECK(acc == 0);
      }
    }
  }
  CHECK(additive_subgroups(make_field(2, 6), 8, 10).size() == 10);
  CHECK_THROWS_WITH_AS(additive_subgroups(make_field(3, 2), 3),
                       doctest::Contains("BadCharacteristic"), error);
  CHECK_THROWS_WITH_AS(additive_subgroups(f16, 3),
                       doctest::Contains("RangeError"), error);
  CHECK_THROWS_WITH_AS(additive_subgroups(f16, 32),
                       doctest::Contains("RangeError"), error);
}

TEST_CASE("denniston arcs of order two") {
  auto f4 = make_field(2, 2);
  auto dn = denniston(f4, {0, 1});
  CHECK(dn.beta == 2);
  CHECK(dn.code.n() == 6);
  CHECK(maximal_arc(dn.arc, 2));
  CHECK(wd_map(weight_distribution(dn.code)) ==
        WdMap{{0, 1}, {4, 45}, {6, 18}});
  // the standard extension is the [q+3, 3, q] code with dual distance 3
  auto ext = standard_extend(dn.code);
  CHECK(wd_map(weight_distribution(ext)) ==
        WdMap{{0, 1}, {4, 9}, {5, 36}, {6, 6}, {7, 12}});
  CHECK(dual_dist(ext, 4) == 3);

  auto f8 = make_field(2, 3);
  auto dn8 = denniston(f8, {0, 1});
  CHECK(dn8.beta == 1);
  CHECK(wd_map(weight_distribution(dn8.code)) ==
        WdMap{{0, 1}, {8, 315}, {10, 196}});
  auto ext8 = standard_extend(dn8.code);
  CHECK(wd_map(weight_distribution(ext8)) ==
        WdMap{{0, 1}, {8, 35}, {9, 280}, {10, 28}, {11, 168}});
  CHECK(dual_dist(ext8, 4) == 3);
  CHECK(dual(ext8).k() == 8);
}

TEST_CASE("denniston arc over the GF(4) subgroup of GF(16)") {
  auto f = make_field(2, 4);
  std::vector<uint32_t> sub{0, 1, 6, 7};
  auto dn = denniston(f, sub);
  CHECK(dn.beta == 2);
  CHECK(dn.code.n() == 52);
  CHECK(maximal_arc(dn.arc, 4));
  CHECK(wd_map(weight_distribution(dn.code)) ==
        WdMap{{0, 1}, {48, 3315}, {52, 780}});

  auto sext = standard_extend(dn.code);
  CHECK(wd_map(weight_distribution(sext)) ==
        WdMap{{0, 1}, {48, 255}, {49, 3060}, {53, 780}});
  CHECK(dual_dist(sext, 3) == 2);

  // the designated u appends the column (0, lambda_1^{q/2}, 0) against the
  // raw point coordinates
  GFMatrix raw(f, 3, dn.arc.points.size());
  for (size_t j = 0; j < dn.arc.points.size(); ++j)
    for (size_t r = 0; r < 3; ++r) raw.at(r, j) = dn.arc.points[j][r];
  CHECK(mat_vec(raw, dn.u) == std::vector<uint32_t>{0, 1, 0});

  auto ext = extend(dn.code, dn.u);
  CHECK(wd_map(weight_distribution(ext)) ==
        WdMap{{0, 1}, {48, 195}, {49, 3120}, {52, 60}, {53, 720}});
  CHECK(dual_dist(ext, 4) == 3);
  CHECK(dual(ext).k() == 50);

  CHECK(denniston(f, sub, 2).code == dn.code);
  CHECK_THROWS_WITH_AS(denniston(f, sub, 1),
                       doctest::Contains("ReducibleBeta"), error);
  CHECK_THROWS_WITH_AS(denniston(f, {0, 1, 2}),
                       doctest::Contains("NotAdditiveSubgroup"), error);
  CHECK_THROWS_WITH_AS(denniston(f, {0}),
                       doctest::Contains("NotAdditiveSubgroup"), error);
  CHECK_THROWS_WITH_AS(denniston(make_field(3, 2), {0, 1}),
                       doctest::Contains("BadCharacteristic"), error);
}

TEST_CASE("cyclic codes with one root class and distance two") {
  auto f3 = make_field(3, 1);
  auto c = single_root_code(f3, 40);
  CHECK(c.linear.k() == 36);
  CHECK(dist(c.linear, 3) == 2);
  CHECK(dist(standard_extend(c.linear), 4) == 3);

  auto f5 = make_field(5, 1);
  auto c156 = single_root_code(f5, 156);
  CHECK(c156.linear.k() == 152);
  CHECK(dist(c156.linear, 3) == 2);
  CHECK(dist(standard_extend(c156.linear), 4) == 3);

  auto c312 = single_root_code(f5, 312);
  CHECK(c312.linear.k() == 308);
  CHECK(dist(standard_extend(c312.linear), 4) == 3);

  CHECK_THROWS_WITH_AS(single_root_code(make_field(2, 1), 7),
                       doctest::Contains("SpecViolated"), error);
}

TEST_CASE("cyclic codes with two root classes extend to distance four") {
  auto f3 = make_field(3, 1);
  auto c8 = double_root_code(f3, 8);
  CHECK(c8.linear.k() == 5);
  CHECK(min_distance(c8.linear) == 3);
  auto ext8 = standard_extend(c8.linear);
  CHECK(min_distance(ext8) == 4);
  CHECK(wd_map(weight_distribution(ext8)) ==
        WdMap{{0, 1}, {4, 36}, {5, 72}, {6, 24}, {7, 72}, {8, 36}, {9, 2}});

  auto c40 = double_root_code(f3, 40);
  CHECK(c40.linear.k() == 34);
  CHECK(dist(c40.linear, 4) == 4);
  CHECK(dist(standard_extend(c40.linear), 5) == 4);

  auto c15 = double_root_code(make_field(2, 2), 15);
  CHECK(c15.linear.k() == 12);
  CHECK(dist(c15.linear, 4) == 3);
  CHECK(dist(standard_extend(c15.linear), 5) == 4);

  auto c63 = double_root_code(make_field(2, 1), 63);
  CHECK(c63.linear.k() == 54);
  CHECK(dist(c63.linear, 4) == 3);
  CHECK(dist(standard_extend(c63.linear), 5) == 4);

  CHECK_THROWS_WITH_AS(double_root_code(f3, 13),
                       doctest::Contains("SpecViolated"), error);
}

TEST_CASE("narrow-sense BCH codes around designed distance two") {
  auto c17 = narrow_bch_code(make_field(2, 2), 17, 2);
  CHECK(c17.linear.k() == 13);
  CHECK(dist(c17.linear, 5) == 4);
  CHECK(dist(standard_extend(c17.linear), 5) == 4);

  auto c13 = narrow_bch_code(make_field(5, 1), 13, 2);
  CHECK(c13.linear.k() == 9);
  CHECK(dist(c13.linear, 5) == 4);
  CHECK(dist(standard_extend(c13.linear), 5) == 4);

  auto c41 = narrow_bch_code(make_field(3, 1), 41, 2);
  CHECK(c41.linear.k() == 33);
  CHECK(dist(c41.linear, 6) == 5);
  CHECK(dist(standard_extend(c41.linear), 6) == 5);

  CHECK_THROWS_WITH_AS(narrow_bch_code(make_field(2, 2), 17, 1),
                       doctest::Contains("SpecViolated"), error);
  CHECK_THROWS_WITH_AS(narrow_bch_code(make_field(2, 2), 17, 17),
                       doctest::Contains("SpecViolated"), error);
}

TEST_CASE("ternary codes from the first two root classes") {
  auto f3 = make_field(3, 1);
  struct Row {
    uint64_t n;
    size_t k;
  };
  for (auto [n, k] : {Row{13, 7}, Row{16, 10}, Row{20, 12}}) {
    auto c = ternary_pair_code(f3, n);
    CHECK(c.linear.k() == k);
    auto wd = weight_distribution(c.linear);
    CHECK(wd.min_positive() == 4);
    if (n == 13) CHECK(wd.counts[4] == 26);
    CHECK(min_distance(standard_extend(c.linear)) == 5);
  }
  auto c40 = ternary_pair_code(f3, 40);
  CHECK(c40.linear.k() == 32);
  CHECK(dist(c40.linear, 5) == 4);
  CHECK(dist(standard_extend(c40.linear), 6) == 5);

  CHECK_THROWS_WITH_AS(ternary_pair_code(make_field(5, 1), 13),
                       doctest::Contains("SpecViolated"), error);
}
