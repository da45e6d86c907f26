#ifndef FSING_LIMITS_HPP
#define FSING_LIMITS_HPP

#include <cstdint>

namespace fsing {

// Size bounds that turn combinatorial blow-up into a typed error
// (ResourceLimitError) instead of memory exhaustion.
struct Limits {
  // Largest ambient vector-space dimension handled by degree-wise
  // linear algebra; box bases grow like (p^e)^(n+1).
  std::int64_t maxDim = std::int64_t(1) << 24;
  // Largest number of stored terms in a product or power.
  std::int64_t maxTerms = 10'000'000;
  // Largest number of term-by-term multiplications in one product.
  std::int64_t maxProducts = std::int64_t(1) << 26;
  // Largest number of matrix entries materialized at once.
  std::int64_t maxMatrixEntries = std::int64_t(1) << 26;
};

}  // namespace fsing

#endif
