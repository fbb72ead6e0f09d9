#pragma once
// Classification of codes against the Singleton bound and optimality
// verdicts certified by explicit bounds: sphere packing, Griesmer, the
// maximal length q+1 of MDS codes with small dimension over odd q, and the
// maximal length q^2+1 of [n, n-4] AMDS codes. A verdict is "yes" only when
// the bounds rule out every stronger parameter set; the module never
// consults best-known-code tables, so an unprovable claim stays
// "inconclusive" rather than becoming "no".
#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "linc/code.hpp"

namespace linc {

enum class SingletonClass { MDS, AMDS, NMDS, other };
enum class Tristate { yes, no, inconclusive };

const char* to_string(SingletonClass c);
const char* to_string(Tristate t);

struct CodeVerdict {
  size_t n = 0;
  size_t k = 0;
  size_t d = 0;
  size_t d_dual = 0;
  SingletonClass singleton_class = SingletonClass::other;
  Tristate distance_optimal = Tristate::inconclusive;
  bool griesmer_met = false;
  Tristate dimension_optimal = Tristate::inconclusive;
  // bounds behind the yes verdicts, deduplicated, in the order first used:
  // "singleton", "sphere_packing", "griesmer", "mds_length", "amds_length"
  std::vector<std::string> certified_by;
  // largest distance (resp. dimension) the bounds fail to rule out at this
  // length; equals d (resp. k) exactly when the matching verdict is yes
  size_t distance_ceiling = 0;
  size_t dimension_ceiling = 0;
};

// Exact test of sum_{i<=floor((d-1)/2)} C(n,i)(q-1)^i <= q^(n-k).
bool sphere_packing_holds(size_t n, size_t k, size_t d, uint32_t q);

// sum_{i<k} ceil(d / q^i), the least length admitting an [*, k, d] code.
size_t griesmer_length(size_t k, size_t d, uint32_t q);

// Both distances must be known exactly (computed upstream by enumeration or
// the column-dependency search).
CodeVerdict verdict(size_t n, size_t k, size_t d, size_t d_dual, uint32_t q);
CodeVerdict verdict(const LinearCode& c, size_t d, size_t d_dual);

// Counts at weights w1, w1+1, w2, w2+1 (in that order) for the extension of
// an [n, m] projective two-weight code with weights w1 < w2, where a2perp is
// the number of weight-2 words in the extension's dual (0 or q-1). The
// counts come from the first three power moments of the extension and are
// exact; inputs that do not belong to a genuine projective two-weight code
// surface as a NonIntegralCount error.
std::array<mpz_class, 4> extended_two_weight_distribution(uint32_t q, size_t n,
                                                          size_t m, size_t w1,
                                                          size_t w2,
                                                          uint32_t a2perp);

// Distances of c and its dual obtained by enumerating whichever side has the
// smaller dimension and transforming across; exact, budget-bounded.
struct CodeAnalysis {
  CodeVerdict primal;
  CodeVerdict dual;
  WeightDistribution wd;
  WeightDistribution wd_dual;
};

CodeAnalysis analyze(const LinearCode& c, uint64_t budget = uint64_t(1) << 26);

nlohmann::json verdict_json(const CodeVerdict& v);

// Verdicts for a base code, any number of labeled extension vectors, and all
// duals, as one JSON document with sorted keys.
nlohmann::json optimality_report(
    const LinearCode& base,
    const std::vector<std::pair<std::string, std::vector<uint32_t>>>&
        extensions,
    uint64_t budget = uint64_t(1) << 26);

}  // namespace linc
