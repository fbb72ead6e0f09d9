#pragma once
// Extending a length-n code by a vector u appends the coordinate
// c_{n+1} = sum u_i c_i to every codeword. The extension is trivial exactly
// when u lies in the dual; those u are excluded from searches. The dual of
// the extension is {(c - a u, a) : c in the dual, a scalar}, which this
// module also builds directly, together with the inverse operation: every
// code of minimum distance above 1 is a transposition away from an extension
// of a shorter code.
#include <cstdint>
#include <optional>
#include <vector>

#include "linc/code.hpp"

namespace linc {

struct ExtensionSpec {
  std::vector<uint32_t> u;
  bool trivial = false;   // u in the dual: the new coordinate is always zero
  bool standard = false;  // u = a * (1,...,1) with a != 0
  bool complete = false;  // every u_i nonzero
};

LinearCode extend(const LinearCode& c, const std::vector<uint32_t>& u);
// extend by -1 * (1,...,1)
LinearCode standard_extend(const LinearCode& c);

ExtensionSpec classify(const LinearCode& c, const std::vector<uint32_t>& u);

// Built from a dual basis plus the row (-u, 1); canonically equal to
// dual(extend(c, u)).
LinearCode dual_of_extended(const LinearCode& c, const std::vector<uint32_t>& u);

// Span of the code and u; dimension grows by one exactly when u is outside.
LinearCode augmented(const LinearCode& c, const std::vector<uint32_t>& u);

// For d(dual) >= 3 and u outside the dual, the extension's dual has minimum
// distance 2 or 3, and its number of weight-2 words is q-1 or 0. Returns
// q-1 when some u + a e_j falls into the dual (the pair (a, j) is then
// unique), else 0.
uint32_t a2perp(const LinearCode& c, const std::vector<uint32_t>& u);

struct Deextension {
  size_t swap_a = 0, swap_b = 0;  // transposed coordinates; equal = identity
  std::vector<uint32_t> u;
  LinearCode code;  // shorter code with extend(code, u) = transposed input
};

// Inverts extension: picks the first dual basis row v, scales its last
// nonzero coordinate i to 1, swaps i with the final position and reads u off
// the swapped word. Requires no codeword of weight 1.
Deextension deextend(const LinearCode& c);

LinearCode apply_transposition(const LinearCode& c, size_t a, size_t b);

enum class SearchObjective { max_d, max_dual_d };

struct SearchResult {
  std::vector<uint32_t> u;
  int score = 0;
};

// Best extension vector outside the dual, maximizing the extension's
// minimum distance or its dual's. Exhaustive in lexicographic order when
// q^n <= budget (ties keep the smallest u), else `budget` seeded samples.
std::optional<SearchResult> search_u(const LinearCode& c, SearchObjective obj,
                                     uint64_t budget,
                                     uint64_t seed = 0xC0DEC0DE);

}  // namespace linc
