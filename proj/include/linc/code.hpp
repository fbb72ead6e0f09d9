#pragma once
// Linear codes over GF(q) held as canonical generator matrices (reduced row
// echelon form, pivot columns leftmost), so code equality is matrix equality.
// Weight distributions, minimum distances and the MacWilliams / power-moment
// identities are computed exactly; counts are arbitrary-precision because
// dual distributions of high-rate codes overflow 64 bits.
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "linc/gf.hpp"

namespace linc {

struct GFMatrix {
  FieldPtr field;
  size_t rows = 0, cols = 0;
  std::vector<uint32_t> data;  // row-major

  GFMatrix() = default;
  GFMatrix(FieldPtr f, size_t r, size_t c)
      : field(std::move(f)), rows(r), cols(c), data(r * c, 0) {}

  uint32_t& at(size_t r, size_t c) { return data[r * cols + c]; }
  uint32_t at(size_t r, size_t c) const { return data[r * cols + c]; }
  uint32_t* row(size_t r) { return data.data() + r * cols; }
  const uint32_t* row(size_t r) const { return data.data() + r * cols; }

  bool operator==(const GFMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data &&
           field->same(*o.field);
  }
};

// In-place reduced row echelon form. Zero rows are dropped; the returned
// pivot columns are strictly increasing, one per remaining row.
std::vector<size_t> rref(GFMatrix& m);

// g * u^T, one inner product per row; u must have g.cols entries.
std::vector<uint32_t> mat_vec(const GFMatrix& g, const std::vector<uint32_t>& u);

class LinearCode {
 public:
  const FieldPtr& field() const { return gen_.field; }
  size_t n() const { return gen_.cols; }
  size_t k() const { return gen_.rows; }
  const GFMatrix& gen() const { return gen_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<uint32_t>& v) const;
  // v lies in the dual iff gen * v^T = 0.
  bool dual_contains(const std::vector<uint32_t>& v) const;

  bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }
  bool operator!=(const LinearCode& o) const { return !(*this == o); }

 private:
  friend LinearCode from_generator(GFMatrix);
  LinearCode() = default;
  GFMatrix gen_;
  std::vector<size_t> pivots_;
};

// Echelonizes the given rows and drops dependent ones; k becomes the rank.
LinearCode from_generator(GFMatrix rows);
LinearCode from_generator(const FieldPtr& field,
                          const std::vector<std::vector<uint32_t>>& rows);
LinearCode zero_code(const FieldPtr& field, size_t n);

LinearCode dual(const LinearCode& c);
LinearCode puncture(const LinearCode& c, size_t position);

struct WeightDistribution {
  size_t n = 0;
  std::vector<mpz_class> counts;  // counts[w] = codewords of weight w, w = 0..n

  WeightDistribution() = default;
  explicit WeightDistribution(size_t len) : n(len), counts(len + 1, 0) {}

  int min_positive() const;  // least w > 0 with counts[w] != 0, or -1
  mpz_class total() const;

  bool operator==(const WeightDistribution&) const = default;
};

inline constexpr uint64_t default_budget = uint64_t{1} << 26;

// Exact distribution by enumerating all q^k codewords (gray-walk over
// message digits, partitioned into ranges that merge deterministically).
WeightDistribution weight_distribution(const LinearCode& c,
                                       uint64_t budget = default_budget);
int min_distance(const LinearCode& c, uint64_t budget = default_budget);

// All q^k codewords as rows, in message-counter order (zero word first).
// Memory grows as q^k * n, hence the tighter default budget.
GFMatrix all_codewords(const LinearCode& c, uint64_t budget = uint64_t{1} << 22);

// Least w <= w_max such that some w columns of gen are linearly dependent,
// which is the minimum distance of the dual code; empty when it exceeds
// w_max. Scans w upward, so only minimal dependent sets are searched.
std::optional<int> dual_distance_upto(const LinearCode& c, int w_max = 6);

// Dual distribution via the Krawtchouk transform; exact in every step.
WeightDistribution macwilliams(const WeightDistribution& a, size_t n, size_t k,
                               uint32_t q);

// LHS - RHS of the first `orders` power-moment identities (orders 1..5,
// moments sum i^r A_i for r = orders-1). For k < r both sides are scaled by
// q^(r-k) to stay integral; zero residuals are unaffected. The fifth
// identity is only valid when the dual has no words of weight 1, 2 or 3.
std::vector<mpz_class> pless_residuals(const WeightDistribution& a,
                                       const WeightDistribution& a_dual,
                                       size_t n, size_t k, uint32_t q,
                                       int orders = 4);

}  // namespace linc
