#include "linc/extension.hpp"

#include <algorithm>
#include <random>

namespace linc {
namespace {

void check_length(const LinearCode& c, const std::vector<uint32_t>& u) {
  if (u.size() != c.n()) fail("LengthMismatch: u must have one entry per coordinate");
}

uint32_t dot(const Field& f, const uint32_t* a, const std::vector<uint32_t>& b) {
  uint32_t acc = 0;
  for (size_t j = 0; j < b.size(); ++j) acc = f.add(acc, f.mul(a[j], b[j]));
  return acc;
}

}  // namespace

LinearCode extend(const LinearCode& c, const std::vector<uint32_t>& u) {
  check_length(c, u);
  GFMatrix m(c.field(), c.k(), c.n() + 1);
  auto last = mat_vec(c.gen(), u);
  for (size_t i = 0; i < c.k(); ++i) {
    std::copy(c.gen().row(i), c.gen().row(i) + c.n(), m.row(i));
    m.at(i, c.n()) = last[i];
  }
  return from_generator(std::move(m));
}

LinearCode standard_extend(const LinearCode& c) {
  std::vector<uint32_t> u(c.n(), c.field()->neg(1));
  return extend(c, u);
}

ExtensionSpec classify(const LinearCode& c, const std::vector<uint32_t>& u) {
  check_length(c, u);
  ExtensionSpec spec;
  spec.u = u;
  spec.trivial = c.dual_contains(u);
  spec.complete = std::all_of(u.begin(), u.end(),
                              [](uint32_t x) { return x != 0; });
  spec.standard = u[0] != 0 && std::all_of(u.begin(), u.end(),
                                           [&](uint32_t x) { return x == u[0]; });
  // triviality has to coincide with (0,...,0,1) lying in the extension's dual
  std::vector<uint32_t> unit(c.n() + 1, 0);
  unit[c.n()] = 1;
  if (extend(c, u).dual_contains(unit) != spec.trivial)
    fail("InternalError: triviality criteria disagree");
  return spec;
}

LinearCode dual_of_extended(const LinearCode& c,
                            const std::vector<uint32_t>& u) {
  check_length(c, u);
  const Field& f = *c.field();
  LinearCode cd = dual(c);
  GFMatrix m(c.field(), cd.k() + 1, c.n() + 1);
  for (size_t i = 0; i < cd.k(); ++i)
    std::copy(cd.gen().row(i), cd.gen().row(i) + c.n(), m.row(i));
  for (size_t j = 0; j < c.n(); ++j) m.at(cd.k(), j) = f.neg(u[j]);
  m.at(cd.k(), c.n()) = 1;
  return from_generator(std::move(m));
}

LinearCode augmented(const LinearCode& c, const std::vector<uint32_t>& u) {
  check_length(c, u);
  GFMatrix m(c.field(), c.k() + 1, c.n());
  for (size_t i = 0; i < c.k(); ++i)
    std::copy(c.gen().row(i), c.gen().row(i) + c.n(), m.row(i));
  std::copy(u.begin(), u.end(), m.row(c.k()));
  return from_generator(std::move(m));
}

uint32_t a2perp(const LinearCode& c, const std::vector<uint32_t>& u) {
  check_length(c, u);
  if (dual_distance_upto(c, 2).has_value())
    fail("PreconditionViolated: dual minimum distance below 3");
  if (c.dual_contains(u))
    fail("PreconditionViolated: u lies in the dual");
  const Field& f = *c.field();
  uint32_t hits = 0;
  std::vector<uint32_t> v = u;
  for (size_t j = 0; j < c.n(); ++j) {
    for (uint32_t a = 1; a < f.q(); ++a) {
      v[j] = f.add(u[j], a);
      if (c.dual_contains(v)) ++hits;
    }
    v[j] = u[j];
  }
  if (hits > 1) fail("InternalError: weight-2 witness pair is not unique");
  return hits ? f.q() - 1 : 0;
}

LinearCode apply_transposition(const LinearCode& c, size_t a, size_t b) {
  if (a >= c.n() || b >= c.n()) fail("LengthMismatch: coordinate out of range");
  GFMatrix m = c.gen();
  for (size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
  return from_generator(std::move(m));
}

Deextension deextend(const LinearCode& c) {
  const Field& f = *c.field();
  std::vector<uint32_t> unit(c.n(), 0);
  for (size_t j = 0; j < c.n(); ++j) {
    unit[j] = 1;
    if (c.contains(unit)) fail("MinDistanceOne: weight-1 codeword present");
    unit[j] = 0;
  }
  LinearCode cd = dual(c);
  if (cd.k() == 0) fail("MinDistanceOne: the full space cannot be de-extended");

  std::vector<uint32_t> v(cd.gen().row(0), cd.gen().row(0) + c.n());
  size_t i = c.n();
  while (i-- > 0)
    if (v[i] != 0) break;
  uint32_t scale = f.inv(v[i]);
  for (auto& x : v) x = f.mul(scale, x);

  std::swap(v[i], v[c.n() - 1]);
  std::vector<uint32_t> u(c.n() - 1, 0);
  for (size_t j = 0; j + 1 < c.n(); ++j) u[j] = f.neg(v[j]);
  LinearCode shorter = puncture(apply_transposition(c, i, c.n() - 1),
                                c.n() - 1);
  return Deextension{i, c.n() - 1, std::move(u), std::move(shorter)};
}

namespace {

// d of the extension by u: the weight of every nonzero codeword grows by one
// exactly when its inner product with u is nonzero.
int extension_distance(const Field& f, const GFMatrix& words,
                       const std::vector<int>& weights,
                       const std::vector<uint32_t>& u, int prune_floor) {
  int best = INT_MAX;
  for (size_t r = 1; r < words.rows; ++r) {
    int w = weights[r] + (dot(f, words.row(r), u) != 0);
    if (w < best) {
      best = w;
      if (best <= prune_floor) break;
    }
  }
  return best;
}

int extension_dual_distance(const LinearCode& c,
                            const std::vector<uint32_t>& u) {
  LinearCode ext = extend(c, u);
  auto d = dual_distance_upto(ext, int(c.k()) + 1);
  if (!d) fail("InternalError: dual distance exceeded its Singleton bound");
  return *d;
}

}  // namespace

std::optional<SearchResult> search_u(const LinearCode& c, SearchObjective obj,
                                     uint64_t budget, uint64_t seed) {
  if (budget == 0) return std::nullopt;
  const Field& f = *c.field();
  const uint32_t q = f.q();
  const size_t n = c.n();

  GFMatrix words;
  std::vector<int> weights;
  int base_d = 0, cap = INT_MAX;
  if (obj == SearchObjective::max_d) {
    if (c.k() == 0) return std::nullopt;
    words = all_codewords(c);
    weights.resize(words.rows, 0);
    for (size_t r = 0; r < words.rows; ++r)
      for (size_t j = 0; j < n; ++j) weights[r] += words.at(r, j) != 0;
    base_d = *std::min_element(weights.begin() + 1, weights.end());
    cap = base_d + 1;
  } else if (c.k() < n) {
    // the extension's dual distance never exceeds the dual distance of c
    cap = *dual_distance_upto(c, int(c.k()) + 1);
  }

  uint64_t space = 1;
  bool exhaustive = true;
  for (size_t j = 0; j < n && exhaustive; ++j) {
    if (space > budget / q) exhaustive = false;
    space *= q;
  }
  if (exhaustive && space > budget) exhaustive = false;

  std::optional<SearchResult> best;
  auto consider = [&](const std::vector<uint32_t>& u) {
    if (c.dual_contains(u)) return false;
    // pruning against the running best truncates the scan, so the reported
    // score is only a bound; that is fine in lexicographic order where ties
    // never replace, but sampled mode needs exact scores for its tie rule
    int floor = (exhaustive && best) ? std::max(best->score, base_d) : base_d;
    int score = obj == SearchObjective::max_d
                    ? extension_distance(f, words, weights, u, floor)
                    : extension_dual_distance(c, u);
    if (!best || score > best->score ||
        (score == best->score && u < best->u))
      best = SearchResult{u, score};
    return best->score >= cap;
  };

  if (exhaustive) {
    // odometer over the last coordinate fastest = lexicographic u order
    std::vector<uint32_t> u(n, 0);
    for (;;) {
      if (consider(u)) break;
      size_t j = n;
      while (j-- > 0) {
        if (++u[j] < q) break;
        u[j] = 0;
        if (j == 0) return best;
      }
    }
    return best;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> pick(0, q - 1);
  std::vector<uint32_t> u(n);
  for (uint64_t t = 0; t < budget; ++t) {
    for (auto& x : u) x = pick(rng);
    if (consider(u)) break;
  }
  return best;
}

}  // namespace linc
