#include "linc/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <utility>

#include "linc/analysis.hpp"
#include "linc/constacyclic.hpp"
#include "linc/error.hpp"
#include "linc/extension.hpp"
#include "linc/families.hpp"
#include "linc/gf.hpp"
#include "linc/poly.hpp"

namespace linc {

namespace {

constexpr uint64_t suite_seed = 0xC0DEC0DE;

// Expected enumerator from (weight, count) pairs; A_0 = 1, everything else 0.
WeightDistribution expect_wd(size_t n,
                             std::initializer_list<std::pair<size_t, mpz_class>> terms) {
  WeightDistribution wd(n);
  wd.counts[0] = 1;
  for (const auto& [w, c] : terms) wd.counts[w] = c;
  return wd;
}

std::string wd_str(const WeightDistribution& wd) {
  std::string out = "1";
  for (size_t w = 1; w <= wd.n; ++w)
    if (wd.counts[w] != 0) out += "+" + wd.counts[w].get_str() + "z^" + std::to_string(w);
  return out;
}

bool has_tag(const std::vector<std::string>& tags, const char* t) {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

struct Suite {
  std::string name;
  std::vector<SuiteRow>& rows;
  void row(const std::string& key, bool pass, std::string detail) {
    rows.push_back({name + "/" + key, pass, std::move(detail)});
  }
};

size_t uniform(std::mt19937_64& rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

std::vector<uint32_t> random_vector(std::mt19937_64& rng, uint32_t q, size_t n,
                                    uint32_t min_value = 0) {
  std::vector<uint32_t> u(n);
  for (auto& x : u) x = uint32_t(uniform(rng, min_value, q - 1));
  return u;
}

std::vector<uint32_t> random_nontrivial_u(std::mt19937_64& rng, const LinearCode& c) {
  for (int tries = 0; tries < 4096; ++tries) {
    auto u = random_vector(rng, c.field()->q(), c.n());
    if (!c.dual_contains(u)) return u;
  }
  fail("SearchExhausted: could not sample u outside the dual");
}

// Random [n, k] code with exact rank k.
LinearCode random_code(std::mt19937_64& rng, const FieldPtr& f, size_t n, size_t k) {
  for (;;) {
    GFMatrix m(f, k, n);
    for (auto& x : m.data) x = uint32_t(uniform(rng, 0, f->q() - 1));
    auto c = from_generator(std::move(m));
    if (c.k() == k) return c;
  }
}

// ---------------------------------------------------------------------------
// Length-7 constacyclic code over GF(4) and its exceptional extension.

void suite_gf4_length7(Suite& s) {
  auto f = make_field(2, 2);
  uint32_t lam = f->alpha(), lam2 = f->mul(lam, lam);
  auto fact = factor_xn_minus_lambda(f, 7, lam);

  std::vector<int> degs;
  for (const auto& fc : fact.factors) degs.push_back(fc.poly.degree());
  std::sort(degs.begin(), degs.end());
  Poly pinned(f, {1, 0, lam, 1});  // x^3 + lambda x^2 + 1
  bool has_pinned = std::any_of(fact.factors.begin(), fact.factors.end(),
                                [&](const auto& fc) { return fc.poly == pinned; });
  s.row("factorization", degs == std::vector<int>{1, 3, 3} && has_pinned,
        "x^7 - lambda splits into degrees 1+3+3 with x^3 + lambda x^2 + 1 among the cubics");

  const auto std_target = expect_wd(8, {{3, 6}, {4, 18}, {5, 48}, {6, 108}, {7, 42}, {8, 33}});
  const auto rare_target = expect_wd(8, {{4, 42}, {6, 168}, {8, 45}});

  std::optional<LinearCode> base;
  int std_matches = 0;
  for (const auto& fc : fact.factors) {
    if (fc.poly.degree() != 3) continue;
    auto c = make_constacyclic(f, 7, lam, fc.poly);
    bool params_ok = weight_distribution(c.linear).min_positive() == 3 &&
                     weight_distribution(dual(c.linear)).min_positive() == 4;
    if (params_ok && weight_distribution(standard_extend(c.linear)) == std_target) {
      ++std_matches;
      // the designated u below is tied to this particular generator, not to
      // the equivalent code from the reversed cubic
      if (fc.poly == pinned) base = c.linear;
    }
  }
  s.row("standard-extension", std_matches >= 1,
        "a cubic generator yields a [7,4,3] code whose standard extension has enumerator " +
            wd_str(std_target));
  if (!base) {
    s.row("designated-u", false, "skipped: no cubic matched the standard-extension enumerator");
    s.row("exhaustive-search", false, "skipped: no cubic matched the standard-extension enumerator");
    return;
  }

  std::vector<uint32_t> du = {lam, 1, lam, lam, lam2, 1, lam2};
  auto dext = extend(*base, du);
  auto dwd = weight_distribution(dext);
  auto ddual = weight_distribution(dual(dext));
  s.row("designated-u",
        dext.k() == 4 && dwd == rare_target && ddual.min_positive() == 4,
        "(lam,1,lam,lam,lam^2,1,lam^2) extends to an [8,4,4] code with enumerator " +
            wd_str(rare_target) + " and an [8,4,4] dual");

  uint64_t hits = 0;
  std::vector<uint32_t> u(7);
  for (uint64_t enc = 0; enc < 16384; ++enc) {
    uint64_t v = enc;
    for (int i = 0; i < 7; ++i, v >>= 2) u[i] = uint32_t(v & 3);
    if (weight_distribution(extend(*base, u)) == rare_target) ++hits;
  }
  s.row("exhaustive-search", hits > 0,
        std::to_string(hits) + " of 16384 extension vectors reach the three-weight [8,4,4] enumerator");
}

// ---------------------------------------------------------------------------
// Cyclic [q-1, q-d, d] codes whose designated extension is MDS on both sides.

void suite_rs(Suite& s) {
  struct PS { uint32_t p, s; };
  for (PS x : {PS{2, 2}, PS{5, 1}, PS{7, 1}, PS{2, 3}, PS{3, 2}, PS{11, 1}, PS{13, 1}}) {
    auto f = make_field(x.p, x.s);
    uint32_t q = f->q();
    bool ok = true;
    std::vector<uint32_t> ds;
    for (uint32_t d = 2; d <= 4 && d + 2 <= q; ++d) {
      ds.push_back(d);
      auto rs = cyclic_rs(f, d);
      ok &= classify(rs.code.linear, std::vector<uint32_t>(q - 1, 1)).trivial;
      ok &= !classify(rs.code.linear, rs.u).trivial;
      auto ext = extend(rs.code.linear, rs.u);
      ok &= ext.n() == q && ext.k() == q - d;
      auto dual_ext = dual(ext);
      ok &= weight_distribution(dual_ext).min_positive() == int(q - d + 1);
      ok &= dual_distance_upto(dual_ext, int(d) + 1) == int(d) + 1;
    }
    s.row("q" + std::to_string(q), ok,
          "designated extensions are [q, q-d, d+1] MDS with [q, d, q-d+1] MDS duals for d up to " +
              std::to_string(ds.back()) + "; the standard extension is trivial");
  }
}

// ---------------------------------------------------------------------------
// The conic chain: twice then three times extended [q, 3, q-2] MDS codes.

void suite_conic(Suite& s) {
  struct PS { uint32_t p, s; };
  for (PS x : {PS{5, 1}, PS{7, 1}, PS{3, 2}, PS{2, 2}, PS{2, 3}, PS{2, 4}}) {
    auto f = make_field(x.p, x.s);
    uint64_t q = f->q();
    bool even = q % 2 == 0;
    auto ch = conic_chain(f);

    auto wd2 = weight_distribution(ch.ext2);
    bool ok2 = ch.ext2.n() == q + 2 && ch.ext2.k() == 3;
    if (even)
      ok2 = ok2 && wd2.min_positive() == int(q) && dual_distance_upto(ch.ext2, 4) == 4;
    else
      ok2 = ok2 && wd2.min_positive() == int(q - 1) && dual_distance_upto(ch.ext2, 3) == 3;
    s.row("c2-q" + std::to_string(q), ok2,
          even ? "second extension is a [q+2,3,q] MDS code (hyperoval points)"
               : "second extension is a [q+2,3,q-1] NMDS code");

    auto want =
        even ? expect_wd(q + 3, {{q, (q * q + q - 2) / 2},
                                 {q + 1, (q * q * q + q * q - 2 * q) / 2},
                                 {q + 2, (q * q - q) / 2},
                                 {q + 3, (q * q * q - 3 * q * q + 2 * q) / 2}})
             : expect_wd(q + 3, {{q, q * (q - 1)},
                                 {q + 1, (q * q * q - 2 * q * q + 7 * q - 6) / 2},
                                 {q + 2, 2 * q * q - 5 * q + 3},
                                 {q + 3, (q - 2) * (q - 1) * (q - 1) / 2}});
    bool ok3 = ch.ext3.n() == q + 3 && ch.ext3.k() == 3 &&
               weight_distribution(ch.ext3) == want && dual_distance_upto(ch.ext3, 3) == 3;
    s.row("c3-q" + std::to_string(q), ok3,
          "third extension is [q+3,3,q] with the parity-matched enumerator and a [q+3,q,3] dual");
  }
}

// ---------------------------------------------------------------------------
// Closed-form extension counts for every projective two-weight code in the
// corpus, against plain enumeration.

struct TwEntry {
  std::string label;
  LinearCode code;
  size_t w1, w2;
};

std::vector<uint32_t> subfield_order4(const FieldPtr& f16) {
  std::vector<uint32_t> sub;
  for (uint32_t y = 0; y < 16; ++y)
    if (f16->pow(y, 4) == y) sub.push_back(y);
  return sub;
}

std::vector<TwEntry> two_weight_corpus() {
  auto f3 = make_field(3, 1), f4 = make_field(2, 2), f5 = make_field(5, 1),
       f8 = make_field(2, 3), f16 = make_field(2, 4);
  std::vector<TwEntry> out;
  auto add_tw = [&](std::string label, const TwoWeightCode& tw) {
    out.push_back({std::move(label), tw.code.linear, size_t(tw.w1), size_t(tw.w2)});
  };
  add_tw("negacyclic-20-v1", two_weight_constacyclic(f3, 2, 1, 2, 1, {2, 0, 0, 2, 1}));
  add_tw("negacyclic-20-v7", two_weight_constacyclic(f3, 2, 1, 2, 7, {2, 0, 0, 2, 1}));
  add_tw("constacyclic-52-v1", two_weight_constacyclic(f5, 2, 1, 3, 1, {2, 4, 4, 0, 1}));
  add_tw("constacyclic-52-v21", two_weight_constacyclic(f5, 2, 1, 3, 21, {2, 4, 4, 0, 1}));
  add_tw("constacyclic-ovoid-10", two_weight_constacyclic(f3, 2, 1, 4));
  add_tw("constacyclic-ovoid-17", two_weight_constacyclic(f4, 2, 1, 5));
  for (const auto& f : {f3, f4, f5}) {
    size_t q = f->q();
    out.push_back({"quadric-" + std::to_string(q), ovoid_code(elliptic_quadric(f)),
                   q * q - q, q * q});
  }
  out.push_back({"tits-8", ovoid_code(tits_ovoid(f8)), 56, 64});
  out.push_back({"cyclic-ovoid-4", cyclic_ovoid(f4, 2).code.linear, 12, 16});
  out.push_back({"cyclic-ovoid-8", cyclic_ovoid(f8, 2).code.linear, 56, 64});
  auto d42 = denniston(f4, {0, 1});
  out.push_back({"denniston-4-2", d42.code, d42.code.n() - 2, d42.code.n()});
  auto d82 = denniston(f8, {0, 1});
  out.push_back({"denniston-8-2", d82.code, d82.code.n() - 2, d82.code.n()});
  auto d164 = denniston(f16, subfield_order4(f16));
  out.push_back({"denniston-16-4", d164.code, d164.code.n() - 4, d164.code.n()});
  return out;
}

void suite_two_weight_counts(Suite& s) {
  std::mt19937_64 rng(suite_seed);
  for (const auto& e : two_weight_corpus()) {
    uint32_t q = e.code.field()->q();
    auto wd = weight_distribution(e.code);
    bool ok = true;
    for (size_t w = 1; w <= wd.n; ++w)
      ok &= (wd.counts[w] != 0) == (w == e.w1 || w == e.w2);
    int good = 0;
    for (int t = 0; t < 20; ++t) {
      auto u = random_nontrivial_u(rng, e.code);
      auto wde = weight_distribution(extend(e.code, u));
      auto counts = extended_two_weight_distribution(q, e.code.n(), e.code.k(), e.w1,
                                                     e.w2, a2perp(e.code, u));
      bool match = wde.counts[e.w1] == counts[0] && wde.counts[e.w1 + 1] == counts[1] &&
                   wde.counts[e.w2] == counts[2] && wde.counts[e.w2 + 1] == counts[3];
      for (size_t w = 1; w <= wde.n && match; ++w)
        if (w != e.w1 && w != e.w1 + 1 && w != e.w2 && w != e.w2 + 1)
          match = wde.counts[w] == 0;
      good += match;
    }
    ok &= good == 20;
    s.row(e.label, ok,
          "two weights {" + std::to_string(e.w1) + "," + std::to_string(e.w2) +
              "}; closed-form extension counts match enumeration for " +
              std::to_string(good) + "/20 random nontrivial u");
  }
}

// ---------------------------------------------------------------------------
// The documented pairs of scalar-inequivalent two-weight codes whose standard
// extensions differ.

void suite_two_weight_examples(Suite& s) {
  auto f3 = make_field(3, 1), f5 = make_field(5, 1);
  auto check = [&](const std::string& label, const FieldPtr& f, uint32_t h, uint64_t v,
                   const std::vector<uint32_t>& split, const std::vector<uint32_t>& mbeta,
                   const WeightDistribution& base_wd, bool theta,
                   const WeightDistribution& ext_wd, int dual_d) {
    auto tw = two_weight_constacyclic(f, 2, 1, h, v, split);
    bool ok = tw.code.h == Poly(f, mbeta);
    ok &= weight_distribution(tw.code.linear) == base_wd;
    ok &= theta_condition(tw.code) == theta;
    auto ext = standard_extend(tw.code.linear);
    ok &= weight_distribution(ext) == ext_wd;
    ok &= dual_distance_upto(ext, 3) == dual_d;
    s.row(label, ok,
          "base enumerator " + wd_str(base_wd) + "; standard extension " + wd_str(ext_wd) +
              " with dual distance " + std::to_string(dual_d));
  };
  check("negacyclic-20-v1", f3, 2, 1, {2, 0, 0, 2, 1}, {1, 0, 1, 2, 1},
        expect_wd(20, {{12, 40}, {15, 40}}), false,
        expect_wd(21, {{12, 10}, {13, 30}, {15, 16}, {16, 24}}), 3);
  check("negacyclic-20-v7", f3, 2, 7, {2, 0, 0, 2, 1}, {1, 0, 1, 1, 1},
        expect_wd(20, {{12, 40}, {15, 40}}), true,
        expect_wd(21, {{12, 16}, {13, 24}, {15, 10}, {16, 30}}), 2);
  check("constacyclic-52-v1", f5, 3, 1, {2, 4, 4, 0, 1}, {3, 3, 3, 2, 1},
        expect_wd(52, {{40, 416}, {45, 208}}), false,
        expect_wd(53, {{40, 76}, {41, 340}, {45, 48}, {46, 160}}), 3);
  check("constacyclic-52-v21", f5, 3, 21, {2, 4, 4, 0, 1}, {3, 2, 3, 3, 1},
        expect_wd(52, {{40, 416}, {45, 208}}), true,
        expect_wd(53, {{40, 96}, {41, 320}, {45, 28}, {46, 180}}), 2);
}

// ---------------------------------------------------------------------------
// Ovoid codes: base enumerator, the dual-distance-3 extensions with their
// optimal duals, and the standard-extension contrast.

void suite_ovoid(Suite& s) {
  auto ovoid_wd = [](uint64_t q, size_t n) {
    return expect_wd(n, {{size_t(q * q - q), (q * q - q) * (q * q + 1)},
                         {size_t(q * q), (q - 1) * (q * q + 1)}});
  };
  // dual of the extension must be a distance-optimal [q^2+2, q^2-2, 3] code,
  // closed by the too-long-AMDS bound at d = 4 and packing beyond
  auto dual3_rows = [&](const std::string& label, const LinearCode& ext, uint64_t q) {
    auto ca = analyze(ext);
    bool ok = ext.n() == q * q + 2 && ext.k() == 4;
    ok &= ca.wd.min_positive() == int(q * q - q);
    ok &= ca.wd_dual.min_positive() == 3;
    ok &= ca.dual.distance_optimal == Tristate::yes;
    ok &= has_tag(ca.dual.certified_by, "amds_length") &&
          has_tag(ca.dual.certified_by, "sphere_packing");
    s.row(label, ok,
          "extension dual is a distance-optimal [q^2+2,q^2-2,3] code (AMDS length + packing)");
  };

  struct PS { uint32_t p, s; };
  for (PS x : {PS{3, 1}, PS{2, 2}, PS{5, 1}, PS{2, 3}}) {
    auto f = make_field(x.p, x.s);
    uint64_t q = f->q();
    bool tits = q == 8;
    auto ps = tits ? tits_ovoid(f) : elliptic_quadric(f);
    auto c = ovoid_code(ps);
    std::string tag = (tits ? "tits-" : "quadric-") + std::to_string(q);

    s.row(tag, c.n() == q * q + 1 && c.k() == 4 && weight_distribution(c) == ovoid_wd(q, c.n()),
          "[q^2+1,4,q^2-q] with the two-weight ovoid enumerator");

    uint32_t u1 = q % 2 == 0 ? 2 : 1;  // anything outside {0, -1}
    dual3_rows(tag + "-geometric-ext", extend(c, ovoid_extension_u(ps, u1, 0)), q);

    auto sext = standard_extend(c);
    auto want = expect_wd(c.n() + 1, {{size_t(q * q - q), q * (q * q - 1)},
                                      {size_t(q * q - q + 1), q * q * (q - 1) * (q - 1)},
                                      {size_t(q * q), q - 1},
                                      {size_t(q * q + 1), q * q * (q - 1)}});
    s.row(tag + "-standard-ext",
          weight_distribution(sext) == want && dual_distance_upto(sext, 2) == 2,
          "standard extension has the documented four-weight enumerator and dual distance 2");
  }

  for (uint32_t qq : {4u, 8u}) {
    auto f = make_field(2, qq == 4 ? 2 : 3);
    uint64_t q = f->q();
    auto co = cyclic_ovoid(f, 2);
    std::string tag = "cyclic-ovoid-" + std::to_string(q);
    s.row(tag,
          co.code.linear.n() == q * q + 1 && co.code.linear.k() == 4 &&
              weight_distribution(co.code.linear) == ovoid_wd(q, co.code.linear.n()),
          "cyclic [q^2+1,4,q^2-q] ovoid code");
    s.row(tag + "-standard-ext",
          classify(co.code.linear, std::vector<uint32_t>(co.code.linear.n(), 1)).trivial,
          "standard extension is trivial (all-one vector lies in the dual)");
    auto ext = extend(co.code.linear, co.u);
    auto want = expect_wd(co.code.linear.n() + 1,
                          {{size_t(q * q - q), q * q * (q - 1)},
                           {size_t(q * q - q + 1), q * (q - 1) * (q * q - q + 1)},
                           {size_t(q * q), q * q - 1},
                           {size_t(q * q + 1), q * (q - 1) * (q - 1)}});
    bool wd_ok = weight_distribution(ext) == want;
    dual3_rows(tag + "-designated-ext", ext, q);
    s.row(tag + "-designated-wd", wd_ok,
          "geometric-series extension has the documented four-weight enumerator");
  }

  for (uint32_t pq : {3u, 4u}) {
    auto f = pq == 3 ? make_field(3, 1) : make_field(2, 2);
    uint64_t q = f->q();
    auto tw = two_weight_constacyclic(f, 2, 1, uint32_t(q) + 1);
    std::string tag = "constacyclic-ovoid-" + std::to_string(q);
    s.row(tag,
          tw.code.linear.n() == q * q + 1 && tw.code.linear.k() == 4 &&
              weight_distribution(tw.code.linear) == ovoid_wd(q, tw.code.linear.n()),
          "constacyclic [q^2+1,4,q^2-q] ovoid code");
    bool theta = theta_condition(tw.code);
    auto sext = standard_extend(tw.code.linear);
    bool ok = !theta && dual_distance_upto(sext, 3) == 3;
    s.row(tag + "-standard-ext", ok,
          "theta-1 avoids <theta>, so the standard extension keeps dual distance 3");
    dual3_rows(tag + "-standard-ext-dual", sext, q);
  }
}

// ---------------------------------------------------------------------------
// Denniston maximal-arc codes and their extensions.

void suite_denniston(Suite& s) {
  auto f4 = make_field(2, 2), f8 = make_field(2, 3), f16 = make_field(2, 4);
  auto arc_row = [&](const std::string& label, const DennistonArc& da, uint64_t q, uint32_t h) {
    size_t n = size_t(h * q + h - q);
    mpz_class a1 = mpz_class(uint64_t(n)) * (q * q - 1) / h;
    auto want = expect_wd(n, {{n - h, a1}, {n, mpz_class(uint64_t(q * q * q - 1)) - a1}});
    bool ok = maximal_arc(da.arc, h) && da.code.n() == n && da.code.k() == 3 &&
              weight_distribution(da.code) == want;
    s.row(label, ok, "maximal (n,h)-arc; code is [n,3,n-h] with the two-weight arc enumerator");
  };

  auto d42 = denniston(f4, {0, 1});
  auto d82 = denniston(f8, {0, 1});
  auto d164 = denniston(f16, subfield_order4(f16));
  arc_row("arc-4-2", d42, 4, 2);
  arc_row("arc-8-2", d82, 8, 2);
  arc_row("arc-16-4", d164, 16, 4);

  for (const auto* dap : {&d42, &d82}) {
    uint64_t q = dap->code.field()->q();
    auto ext = standard_extend(dap->code);
    auto ca = analyze(ext);
    auto want = expect_wd(q + 3, {{size_t(q), (q * q + q - 2) / 2},
                                  {size_t(q + 1), (q * q * q + q * q - 2 * q) / 2},
                                  {size_t(q + 2), (q * q - q) / 2},
                                  {size_t(q + 3), (q * q * q - 3 * q * q + 2 * q) / 2}});
    bool ok = ext.n() == q + 3 && ext.k() == 3 && ca.wd == want;
    ok &= ca.primal.singleton_class == SingletonClass::NMDS;
    ok &= ca.wd_dual.min_positive() == 3;
    ok &= ca.dual.distance_optimal == Tristate::yes;
    s.row("standard-ext-" + std::to_string(q), ok,
          "[q+3,3,q] NMDS standard extension; its [q+3,q,3] dual is distance-optimal");
  }

  {
    auto ext = standard_extend(d164.code);
    auto want = expect_wd(53, {{48, 255}, {49, 3060}, {53, 780}});
    bool ok = weight_distribution(ext) == want && dual_distance_upto(ext, 2) == 2;
    s.row("standard-ext-16-4", ok,
          "subfield-group standard extension has the documented enumerator and dual distance 2");
  }
  {
    auto ext = extend(d164.code, d164.u);
    auto ca = analyze(ext);
    auto want = expect_wd(53, {{48, 195}, {49, 3120}, {52, 60}, {53, 720}});
    bool ok = ca.wd == want && ca.wd_dual.min_positive() == 3;
    ok &= ca.dual.n == 53 && ca.dual.k == 50 && ca.dual.distance_optimal == Tristate::yes;
    s.row("designated-ext-16-4", ok,
          "blockwise extension keeps dual distance 3; the [53,50,3] dual is distance-optimal");
  }
}

// ---------------------------------------------------------------------------
// Nonbinary Hamming and Simplex codes under standard extension.

void suite_hamming_simplex(Suite& s) {
  struct QM { uint32_t p, s, m; };

  for (QM x : {QM{3, 1, 2}, QM{3, 1, 3}, QM{3, 1, 4}, QM{2, 2, 2}, QM{2, 2, 3}, QM{5, 1, 2}}) {
    auto f = make_field(x.p, x.s);
    size_t n = hamming_length(f, x.m);
    auto ext = standard_extend(hamming_code(f, x.m, std::vector<uint32_t>(n, 1)));
    bool ok = ext.n() == n + 1 && ext.k() == n - x.m &&
              dual_distance_upto(dual(ext), 3) == 3;
    s.row("unit-scale-" + std::to_string(f->q()) + "-" + std::to_string(x.m), ok,
          "standard extension of the unit-scale Hamming code has distance 3");
  }

  for (uint32_t e : {2u, 3u, 4u}) {
    auto f = make_field(2, e);
    uint64_t q = f->q();
    auto ext = standard_extend(hamming_code(f, 2, hamming_mds_a(f)));
    bool ok = ext.n() == q + 2 && ext.k() == q - 1 &&
              dual_distance_upto(dual(ext), 4) == 4;
    s.row("mds-scale-" + std::to_string(q), ok,
          "the documented scale vector lifts the order-2 extension to a [q+2,q-1,4] MDS code");
  }

  std::mt19937_64 rng(suite_seed);
  for (QM x : {QM{3, 1, 2}, QM{3, 1, 3}, QM{2, 2, 2}}) {
    auto f = make_field(x.p, x.s);
    size_t n = hamming_length(f, x.m);
    int agree = 0;
    for (int t = 0; t < 30; ++t) {
      auto a = random_vector(rng, f->q(), n, 1);
      auto ext = standard_extend(hamming_code(f, x.m, a));
      int want = s_set_size(f, x.m, a) > 0 ? 3 : 4;
      agree += dual_distance_upto(dual(ext), 4) == want;
    }
    s.row("ratio-set-" + std::to_string(f->q()) + "-" + std::to_string(x.m), agree == 30,
          "extension distance matches the ratio-set criterion on " + std::to_string(agree) +
              "/30 random scale vectors");
  }

  for (QM x : {QM{3, 1, 2}, QM{3, 1, 3}, QM{2, 2, 2}, QM{5, 1, 2}}) {
    auto f = make_field(x.p, x.s);
    uint64_t q = f->q();
    size_t n = hamming_length(f, x.m);
    auto ext = standard_extend(simplex_code(f, x.m, std::vector<uint32_t>(n, 1)));
    uint64_t w1 = 1;
    for (uint32_t i = 1; i < x.m; ++i) w1 *= q;
    auto want = expect_wd(n + 1, {{size_t(w1), w1 - 1}, {size_t(w1 + 1), w1 * (q - 1)}});
    bool ok = weight_distribution(ext) == want && dual_distance_upto(ext, 2) == 2;
    s.row("simplex-" + std::to_string(q) + "-" + std::to_string(x.m), ok,
          "extended Simplex enumerator " + wd_str(want) + "; dual distance 2");
  }
}

// ---------------------------------------------------------------------------
// Cyclic families whose standard extension gains one unit of distance.

void suite_root_families(Suite& s) {
  auto f3 = make_field(3, 1);
  {
    auto c = single_root_code(f3, 40);
    auto ca0 = analyze(c.linear);
    auto ca = analyze(standard_extend(c.linear));
    bool ok = c.linear.n() == 40 && c.linear.k() == 36 && ca0.wd.min_positive() == 2;
    ok &= ca.primal.n == 41 && ca.wd.min_positive() == 3;
    ok &= ca.primal.dimension_optimal == Tristate::yes;
    s.row("single-root-40", ok,
          "[40,36,2] code extends to [41,36,3], dimension-optimal at that length and distance");
  }
  {
    auto c = double_root_code(f3, 8);
    auto ca0 = analyze(c.linear);
    auto ca = analyze(standard_extend(c.linear));
    bool ok = c.linear.n() == 8 && c.linear.k() == 5 && ca0.wd.min_positive() == 3;
    ok &= ca.wd.min_positive() == 4 && ca.primal.distance_optimal == Tristate::yes;
    s.row("double-root-8", ok, "[8,5,3] code extends to a distance-optimal [9,5,4] code");
  }
  {
    auto c = double_root_code(f3, 40);
    auto ca0 = analyze(c.linear);
    auto ca = analyze(standard_extend(c.linear));
    // the family guarantees only d >= 3 for the base; this instance lands at 4
    bool ok = c.linear.n() == 40 && c.linear.k() == 34 && ca0.wd.min_positive() == 4;
    ok &= ca.wd.min_positive() == 4 && ca.primal.distance_optimal == Tristate::yes;
    s.row("double-root-40", ok, "[40,34,4] code extends to a distance-optimal [41,34,4] code");
  }
  {
    auto c = ternary_pair_code(f3, 13);
    auto ca0 = analyze(c.linear);
    auto ca = analyze(standard_extend(c.linear));
    bool ok = c.linear.n() == 13 && c.linear.k() == 7;
    ok &= ca0.wd.min_positive() == 4 && ca0.wd.counts[4] == 26;
    ok &= ca.wd.min_positive() == 5;
    s.row("ternary-13", ok, "[13,7,4] with 26 minimum-weight words; extension reaches [14,7,5]");
  }
  {
    auto c = ternary_pair_code(f3, 16);
    auto ca0 = analyze(c.linear);
    auto ca = analyze(standard_extend(c.linear));
    bool ok = c.linear.n() == 16 && c.linear.k() == 10 && ca0.wd.min_positive() == 4;
    ok &= ca.wd.min_positive() == 5;
    // packing rules out d >= 7 but nothing here settles d = 6, so the
    // verdict must stay open with ceiling 6 rather than claim optimality
    ok &= !sphere_packing_holds(17, 10, 7, 3) && sphere_packing_holds(17, 10, 6, 3);
    ok &= ca.primal.distance_optimal == Tristate::inconclusive &&
          ca.primal.distance_ceiling == 6;
    s.row("ternary-16", ok,
          "[16,10,4] extends to [17,10,5]; packing closes d >= 7, leaving ceiling 6 open");
  }
  {
    auto c = ternary_pair_code(f3, 20);
    auto ca0 = analyze(c.linear);
    auto ca = analyze(standard_extend(c.linear));
    bool ok = c.linear.n() == 20 && c.linear.k() == 12 && ca0.wd.min_positive() == 4;
    ok &= ca.primal.n == 21 && ca.wd.min_positive() == 5;
    s.row("ternary-20", ok, "[20,12,4] verified by enumeration; extension reaches [21,12,5]");
  }
}

// ---------------------------------------------------------------------------
// Randomized identities over small codes.

void suite_random_properties(Suite& s) {
  std::mt19937_64 rng(suite_seed);
  std::vector<FieldPtr> fields = {make_field(2, 1), make_field(3, 1), make_field(2, 2),
                                  make_field(5, 1)};
  const int want = 100;

  int punct = 0, dual_ext = 0, cases = 0, mac = 0, pless4 = 0;
  for (int t = 0; t < want; ++t) {
    const auto& f = fields[size_t(t) % fields.size()];
    uint32_t q = f->q();
    size_t n = uniform(rng, 6, 14);
    size_t k = uniform(rng, size_t(std::max<int>(1, int(n) - 7)), std::min<size_t>(7, n - 1));
    auto c = random_code(rng, f, n, k);
    auto u = random_nontrivial_u(rng, c);
    auto ext = extend(c, u);

    punct += puncture(ext, c.n()) == c;
    dual_ext += dual_of_extended(c, u) == dual(ext);

    auto dc = dual(c);
    int ddual = weight_distribution(dc).min_positive();
    int daug = weight_distribution(augmented(dc, u)).min_positive();
    int dext_dual = weight_distribution(dual(ext)).min_positive();
    cases += dext_dual == daug + (daug < ddual ? 1 : 0);

    auto wd = weight_distribution(c), wdd = weight_distribution(dc);
    mac += macwilliams(wd, n, k, q) == wdd && macwilliams(wdd, n, n - k, q) == wd;

    auto res = pless_residuals(wd, wdd, n, k, q, 4);
    pless4 += std::all_of(res.begin(), res.end(), [](const mpz_class& r) { return r == 0; });
  }
  s.row("puncture-inverts-extend", punct == want,
        "dropping the appended coordinate recovers the base code (" + std::to_string(punct) +
            "/100)");
  s.row("dual-of-extended", dual_ext == want,
        "direct dual construction equals dual(extend(c,u)) (" + std::to_string(dual_ext) +
            "/100)");
  s.row("dual-distance-cases", cases == want,
        "extension dual distance follows the augmented-dual case split (" +
            std::to_string(cases) + "/100)");
  s.row("macwilliams", mac == want,
        "transform is involutive and matches dual enumeration (" + std::to_string(mac) +
            "/100)");

  // weight-2 words in the extension dual need a projective base code, which
  // random matrices only deliver sometimes, so sample until 100 qualify
  int a2_seen = 0, a2_ok = 0;
  for (int guard = 0; a2_seen < want && guard < 100000; ++guard) {
    const auto& f = fields[2 + a2_seen % 2];
    size_t n = uniform(rng, 8, 14);
    size_t k = uniform(rng, size_t(std::max<int>(4, int(n) - 7)), std::min<size_t>(7, n - 1));
    auto c = random_code(rng, f, n, k);
    if (dual_distance_upto(c, 2)) continue;  // dual distance must exceed 2
    ++a2_seen;
    auto u = random_nontrivial_u(rng, c);
    uint32_t a2 = a2perp(c, u);
    auto wdd = weight_distribution(dual(extend(c, u)));
    a2_ok += (a2 == 0 || a2 == f->q() - 1) && wdd.counts[2] == a2;
  }
  s.row("a2perp", a2_seen == want && a2_ok == want,
        "extension duals of projective codes have 0 or q-1 weight-2 words, predicted exactly (" +
            std::to_string(a2_ok) + "/" + std::to_string(a2_seen) + ")");

  // the fifth power moment additionally needs dual distance at least 4
  int p5_seen = 0, p5_ok = 0;
  for (int guard = 0; p5_seen < want && guard < 100000; ++guard) {
    const auto& f = fields[2 + p5_seen % 2];
    size_t n = uniform(rng, 10, 14);
    size_t k = uniform(rng, size_t(std::max<int>(5, int(n) - 7)), std::min<size_t>(7, n - 1));
    auto c = random_code(rng, f, n, k);
    if (dual_distance_upto(c, 3)) continue;
    ++p5_seen;
    auto wd = weight_distribution(c), wdd = weight_distribution(dual(c));
    auto res = pless_residuals(wd, wdd, n, k, f->q(), 5);
    p5_ok += std::all_of(res.begin(), res.end(), [](const mpz_class& r) { return r == 0; });
  }
  s.row("pless-moments", pless4 == want && p5_seen == want && p5_ok == want,
        "first four moments vanish on 100 random codes (" + std::to_string(pless4) +
            "/100); all five vanish on 100 codes with dual distance >= 4 (" +
            std::to_string(p5_ok) + "/" + std::to_string(p5_seen) + ")");
}

// ---------------------------------------------------------------------------
// Observational probe: standard extensions of scaled Hamming codes outside
// the order-2 characteristic-2 family. Reported, never failed.

void suite_hamming_conjecture(Suite& s) {
  struct QM { uint32_t p, s, m; };
  std::mt19937_64 rng(suite_seed);
  size_t total = 0, at3 = 0;
  for (QM x : {QM{3, 1, 2}, QM{3, 1, 3}, QM{2, 2, 3}, QM{5, 1, 2}}) {
    auto f = make_field(x.p, x.s);
    size_t n = hamming_length(f, x.m);
    for (int t = 0; t < 200; ++t) {
      auto a = random_vector(rng, f->q(), n, 1);
      auto ext = standard_extend(hamming_code(f, x.m, a));
      at3 += dual_distance_upto(dual(ext), 3) == 3;
      ++total;
    }
  }
  s.row("distance-3-samples", true,
        "report only: " + std::to_string(at3) + "/" + std::to_string(total) +
            " random scale vectors gave extension distance 3 across (q,m) in "
            "{(3,2),(3,3),(4,3),(5,2)}");
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"gf4-length7", suite_gf4_length7},
      {"rs", suite_rs},
      {"conic", suite_conic},
      {"two-weight-counts", suite_two_weight_counts},
      {"two-weight-examples", suite_two_weight_examples},
      {"ovoid", suite_ovoid},
      {"denniston", suite_denniston},
      {"hamming-simplex", suite_hamming_simplex},
      {"root-families", suite_root_families},
      {"random-properties", suite_random_properties},
      {"hamming-conjecture", suite_hamming_conjecture},
  };
  return reg;
}

}  // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const std::string& corrupt_key) {
  SuiteReport report;
  bool matched = false;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    matched = true;
    Suite s{suite, report.rows};
    fn(s);
  }
  if (!matched) fail("RangeError: unknown suite '" + name + "'");
  if (!corrupt_key.empty()) {
    auto it = std::find_if(report.rows.begin(), report.rows.end(),
                           [&](const SuiteRow& r) { return r.key == corrupt_key; });
    if (it != report.rows.end()) {
      it->pass = !it->pass;
      it->detail += " [outcome flipped by harness corruption]";
    } else {
      report.rows.push_back({corrupt_key, false, "harness corruption target missing"});
    }
  }
  return report;
}

}  // namespace linc
