#include "linc/code.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace linc {
namespace {

// q^k clamped to 2^63; good enough for budget comparisons.
uint64_t checked_pow(uint64_t q, size_t k) {
  constexpr uint64_t cap = uint64_t{1} << 63;
  uint64_t r = 1;
  for (size_t i = 0; i < k; ++i) {
    if (r >= cap / q + 1) return cap;
    r *= q;
    if (r >= cap) return cap;
  }
  return r;
}

std::vector<uint32_t> scaled_row(const Field& f, const uint32_t* row, size_t n,
                                 uint32_t c) {
  std::vector<uint32_t> out(n);
  for (size_t j = 0; j < n; ++j) out[j] = f.mul(c, row[j]);
  return out;
}

// Walks codewords in message-counter order. Each step changes one digit
// (plus carries), so the current word and its weight update in O(n) per
// affected digit; carries amortize to about one extra row per step.
struct Enumerator {
  const Field& f;
  const GFMatrix& gen;
  size_t n, k;
  uint32_t q;
  // delta[i][c]: add this row when digit i moves from value c to c+1.
  std::vector<std::vector<std::vector<uint32_t>>> delta;
  std::vector<std::vector<uint32_t>> wrap;  // digit i moves from q-1 to 0
  std::vector<uint32_t> digits, cur;
  int wt = 0;

  explicit Enumerator(const GFMatrix& g)
      : f(*g.field), gen(g), n(g.cols), k(g.rows), q(f.q()) {
    delta.resize(k);
    wrap.resize(k);
    for (size_t i = 0; i < k; ++i) {
      delta[i].resize(q - 1);
      for (uint32_t c = 0; c + 1 < q; ++c)
        delta[i][c] = scaled_row(f, gen.row(i), n, f.sub(c + 1, c));
      wrap[i] = scaled_row(f, gen.row(i), n, f.neg(q - 1));
    }
  }

  void seed(uint64_t m) {
    digits.assign(k, 0);
    cur.assign(n, 0);
    for (size_t i = 0; i < k; ++i) {
      digits[i] = uint32_t(m % q);
      m /= q;
      if (digits[i] == 0) continue;
      for (size_t j = 0; j < n; ++j)
        cur[j] = f.add(cur[j], f.mul(digits[i], gen.at(i, j)));
    }
    wt = 0;
    for (size_t j = 0; j < n; ++j) wt += cur[j] != 0;
  }

  void apply(const std::vector<uint32_t>& v) {
    for (size_t j = 0; j < n; ++j) {
      uint32_t nw = f.add(cur[j], v[j]);
      wt += int(nw != 0) - int(cur[j] != 0);
      cur[j] = nw;
    }
  }

  void step() {
    size_t i = 0;
    while (digits[i] == q - 1) {
      apply(wrap[i]);
      digits[i] = 0;
      ++i;
    }
    apply(delta[i][digits[i]]);
    ++digits[i];
  }
};

std::vector<uint64_t> count_range(const GFMatrix& gen, uint64_t m0,
                                  uint64_t m1) {
  std::vector<uint64_t> buckets(gen.cols + 1, 0);
  Enumerator e(gen);
  e.seed(m0);
  ++buckets[e.wt];
  for (uint64_t m = m0 + 1; m < m1; ++m) {
    e.step();
    ++buckets[e.wt];
  }
  return buckets;
}

}  // namespace

std::vector<size_t> rref(GFMatrix& m) {
  const Field& f = *m.field;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (size_t j = c; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    uint32_t iv = f.inv(m.at(r, c));
    for (size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(iv, m.at(r, j));
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      uint32_t coef = m.at(i, c);
      for (size_t j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(coef, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  m.rows = r;
  m.data.resize(r * m.cols);
  return pivots;
}

std::vector<uint32_t> mat_vec(const GFMatrix& g, const std::vector<uint32_t>& u) {
  if (u.size() != g.cols) fail("InconsistentInput: vector length != columns");
  const Field& f = *g.field;
  std::vector<uint32_t> out(g.rows, 0);
  for (size_t i = 0; i < g.rows; ++i) {
    uint32_t acc = 0;
    const uint32_t* row = g.row(i);
    for (size_t j = 0; j < g.cols; ++j) acc = f.add(acc, f.mul(row[j], u[j]));
    out[i] = acc;
  }
  return out;
}

bool LinearCode::contains(const std::vector<uint32_t>& v) const {
  if (v.size() != n()) return false;
  const Field& f = *field();
  std::vector<uint32_t> r = v;
  for (size_t i = 0; i < k(); ++i) {
    uint32_t coef = r[pivots_[i]];
    if (coef == 0) continue;
    for (size_t j = 0; j < n(); ++j)
      r[j] = f.sub(r[j], f.mul(coef, gen_.at(i, j)));
  }
  return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

bool LinearCode::dual_contains(const std::vector<uint32_t>& v) const {
  if (v.size() != n()) return false;
  auto s = mat_vec(gen_, v);
  return std::all_of(s.begin(), s.end(), [](uint32_t x) { return x == 0; });
}

LinearCode from_generator(GFMatrix rows) {
  if (rows.cols == 0) fail("EmptyLength: codes need length >= 1");
  LinearCode c;
  c.pivots_ = rref(rows);
  c.gen_ = std::move(rows);
  return c;
}

LinearCode from_generator(const FieldPtr& field,
                          const std::vector<std::vector<uint32_t>>& rows) {
  if (rows.empty()) fail("EmptyLength: no rows given; use zero_code instead");
  GFMatrix m(field, rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols)
      fail("InconsistentInput: ragged generator rows");
    for (size_t j = 0; j < m.cols; ++j) {
      if (rows[i][j] >= field->q())
        fail("InvalidElement: value outside the field");
      m.at(i, j) = rows[i][j];
    }
  }
  return from_generator(std::move(m));
}

LinearCode zero_code(const FieldPtr& field, size_t n) {
  if (n == 0) fail("EmptyLength: codes need length >= 1");
  return from_generator(GFMatrix(field, 0, n));
}

LinearCode dual(const LinearCode& c) {
  const Field& f = *c.field();
  const GFMatrix& g = c.gen();
  std::vector<char> is_pivot(c.n(), 0);
  for (size_t p : c.pivots()) is_pivot[p] = 1;
  GFMatrix h(c.field(), c.n() - c.k(), c.n());
  size_t r = 0;
  for (size_t fcol = 0; fcol < c.n(); ++fcol) {
    if (is_pivot[fcol]) continue;
    h.at(r, fcol) = 1;
    for (size_t i = 0; i < c.k(); ++i)
      h.at(r, c.pivots()[i]) = f.neg(g.at(i, fcol));
    ++r;
  }
  return from_generator(std::move(h));
}

LinearCode puncture(const LinearCode& c, size_t position) {
  if (position >= c.n()) fail("InconsistentInput: puncture position out of range");
  if (c.n() == 1) fail("EmptyLength: cannot puncture a length-1 code");
  GFMatrix m(c.field(), c.k(), c.n() - 1);
  for (size_t i = 0; i < c.k(); ++i)
    for (size_t j = 0; j < c.n(); ++j) {
      if (j == position) continue;
      m.at(i, j < position ? j : j - 1) = c.gen().at(i, j);
    }
  return from_generator(std::move(m));
}

int WeightDistribution::min_positive() const {
  for (size_t w = 1; w < counts.size(); ++w)
    if (counts[w] != 0) return int(w);
  return -1;
}

mpz_class WeightDistribution::total() const {
  mpz_class t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

WeightDistribution weight_distribution(const LinearCode& c, uint64_t budget) {
  uint64_t total = checked_pow(c.field()->q(), c.k());
  if (total > budget) fail("BudgetExceeded: q^k above enumeration budget");
  WeightDistribution wd(c.n());
  if (c.k() == 0) {
    wd.counts[0] = 1;
    return wd;
  }
  unsigned hw = std::thread::hardware_concurrency();
  size_t parts = (hw > 1 && total >= (uint64_t{1} << 16))
                     ? std::min<size_t>(hw, 8)
                     : 1;
  std::vector<std::vector<uint64_t>> partial(parts);
  if (parts == 1) {
    partial[0] = count_range(c.gen(), 0, total);
  } else {
    std::vector<std::future<std::vector<uint64_t>>> jobs;
    for (size_t t = 0; t < parts; ++t) {
      uint64_t m0 = total / parts * t;
      uint64_t m1 = t + 1 == parts ? total : total / parts * (t + 1);
      jobs.push_back(std::async(std::launch::async, count_range,
                                std::cref(c.gen()), m0, m1));
    }
    for (size_t t = 0; t < parts; ++t) partial[t] = jobs[t].get();
  }
  for (const auto& buckets : partial)
    for (size_t w = 0; w <= c.n(); ++w)
      wd.counts[w] += mpz_class(static_cast<unsigned long>(buckets[w]));
  return wd;
}

int min_distance(const LinearCode& c, uint64_t budget) {
  if (c.k() == 0) fail("ZeroCode: minimum distance needs k >= 1");
  return weight_distribution(c, budget).min_positive();
}

GFMatrix all_codewords(const LinearCode& c, uint64_t budget) {
  uint64_t total = checked_pow(c.field()->q(), c.k());
  if (total > budget) fail("BudgetExceeded: q^k above table budget");
  GFMatrix out(c.field(), size_t(total), c.n());
  if (c.k() == 0) return out;
  Enumerator e(c.gen());
  e.seed(0);
  std::copy(e.cur.begin(), e.cur.end(), out.row(0));
  for (uint64_t m = 1; m < total; ++m) {
    e.step();
    std::copy(e.cur.begin(), e.cur.end(), out.row(m));
  }
  return out;
}

namespace {

// Columns of gen as vectors in GF(q)^k; searches index-increasing subsets of
// size exactly `want` whose last member closes a dependency. Subsets with an
// earlier dependency are skipped: a smaller w pass already covered them.
struct DependentColumnSearch {
  const Field& f;
  const GFMatrix& gen;
  size_t n, k;
  std::vector<std::vector<uint32_t>> basis;  // reduced chosen columns
  std::vector<size_t> basis_pivot;

  explicit DependentColumnSearch(const GFMatrix& g)
      : f(*g.field), gen(g), n(g.cols), k(g.rows) {}

  std::vector<uint32_t> reduced_column(size_t j) const {
    std::vector<uint32_t> v(k);
    for (size_t i = 0; i < k; ++i) v[i] = gen.at(i, j);
    for (size_t b = 0; b < basis.size(); ++b) {
      uint32_t coef = v[basis_pivot[b]];
      if (coef == 0) continue;
      for (size_t i = 0; i < k; ++i)
        v[i] = f.sub(v[i], f.mul(coef, basis[b][i]));
    }
    return v;
  }

  bool dfs(size_t start, size_t want) {
    for (size_t j = start; j + want <= n; ++j) {
      auto v = reduced_column(j);
      size_t piv = 0;
      while (piv < k && v[piv] == 0) ++piv;
      if (want == 1) {
        if (piv == k) return true;
        continue;
      }
      if (piv == k) continue;
      uint32_t iv = f.inv(v[piv]);
      for (size_t i = 0; i < k; ++i) v[i] = f.mul(iv, v[i]);
      basis.push_back(std::move(v));
      basis_pivot.push_back(piv);
      bool hit = dfs(j + 1, want - 1);
      basis.pop_back();
      basis_pivot.pop_back();
      if (hit) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<int> dual_distance_upto(const LinearCode& c, int w_max) {
  DependentColumnSearch search(c.gen());
  for (int w = 1; w <= w_max && size_t(w) <= c.n(); ++w)
    if (search.dfs(0, size_t(w))) return w;
  return std::nullopt;
}

WeightDistribution macwilliams(const WeightDistribution& a, size_t n, size_t k,
                               uint32_t q) {
  if (a.n != n || a.counts.size() != n + 1)
    fail("InconsistentInput: distribution length mismatch");
  mpz_class qk;
  mpz_ui_pow_ui(qk.get_mpz_t(), q, static_cast<unsigned long>(k));
  if (a.total() != qk)
    fail("InconsistentInput: counts do not sum to q^k");

  std::vector<std::vector<mpz_class>> binom(n + 1,
                                            std::vector<mpz_class>(n + 1, 0));
  for (size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (size_t j = 1; j <= i; ++j) {
      binom[i][j] = binom[i - 1][j - 1];
      if (j <= i - 1) binom[i][j] += binom[i - 1][j];
    }
  }
  std::vector<mpz_class> qm1pow(n + 1);
  qm1pow[0] = 1;
  for (size_t t = 1; t <= n; ++t) qm1pow[t] = qm1pow[t - 1] * (q - 1);

  WeightDistribution b(n);
  for (size_t j = 0; j <= n; ++j) {
    mpz_class acc = 0;
    for (size_t i = 0; i <= n; ++i) {
      if (a.counts[i] == 0) continue;
      // Krawtchouk K_j(i) = sum_t (-1)^t (q-1)^(j-t) C(i,t) C(n-i,j-t)
      mpz_class kraw = 0;
      for (size_t t = 0; t <= j && t <= i; ++t) {
        if (j - t > n - i) continue;
        mpz_class term = binom[i][t] * binom[n - i][j - t] * qm1pow[j - t];
        if (t & 1)
          kraw -= term;
        else
          kraw += term;
      }
      acc += a.counts[i] * kraw;
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), qk.get_mpz_t()) || acc < 0)
      fail("InconsistentInput: not a weight distribution");
    mpz_divexact(b.counts[j].get_mpz_t(), acc.get_mpz_t(), qk.get_mpz_t());
  }
  return b;
}

std::vector<mpz_class> pless_residuals(const WeightDistribution& a,
                                       const WeightDistribution& a_dual,
                                       size_t n, size_t k, uint32_t q,
                                       int orders) {
  if (orders < 1 || orders > 5) fail("InconsistentInput: orders must be 1..5");
  if (a.n != n || a_dual.n != n) fail("InconsistentInput: length mismatch");
  // weights above n cannot occur; treat them as zero for short codes
  auto adual = [&](size_t i) -> mpz_class {
    return i <= n ? a_dual.counts[i] : mpz_class(0);
  };
  if (orders == 5 && (adual(1) != 0 || adual(2) != 0 || adual(3) != 0))
    fail("MomentPreconditionViolated: fifth moment needs dual weights 1..3 absent");

  mpz_class N = static_cast<unsigned long>(n);
  mpz_class Q = q;
  mpz_class qn = (Q - 1) * N;  // (q-1)n, the recurring quantity
  std::vector<mpz_class> bracket(5);
  bracket[0] = 1;
  bracket[1] = qn - adual(1);
  bracket[2] = qn * qn + qn - (2 * qn - Q + 2) * adual(1) + 2 * adual(2);
  bracket[3] = qn * (qn * qn + 3 * qn - Q + 2) -
               (3 * qn * qn - 3 * (Q - 3) * qn + Q * Q - 6 * Q + 6) * adual(1) +
               6 * (qn - Q + 2) * adual(2) - 6 * adual(3);
  bracket[4] =
      qn * (Q * Q * Q * N * N * N - 3 * Q * Q * N * N * N +
            6 * Q * Q * N * N - 4 * Q * Q * N + Q * Q + 3 * Q * N * N * N -
            12 * Q * N * N + 15 * Q * N - 6 * Q - N * N * N + 6 * N * N -
            11 * N + 6) +
      24 * adual(4);

  std::vector<mpz_class> out;
  for (int r = 0; r < orders; ++r) {
    mpz_class lhs = 0;
    mpz_class ipow;
    for (size_t i = 0; i <= n; ++i) {
      if (a.counts[i] == 0) continue;
      mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(i),
                    static_cast<unsigned long>(r));
      lhs += ipow * a.counts[i];
    }
    // scale by q^delta so q^(k-r) stays integral when k < r
    size_t delta = size_t(r) > k ? size_t(r) - k : 0;
    mpz_class scale_l, scale_r;
    mpz_ui_pow_ui(scale_l.get_mpz_t(), q, static_cast<unsigned long>(delta));
    mpz_ui_pow_ui(scale_r.get_mpz_t(), q,
                  static_cast<unsigned long>(k + delta - size_t(r)));
    out.push_back(scale_l * lhs - scale_r * bracket[r]);
  }
  return out;
}

}  // namespace linc
