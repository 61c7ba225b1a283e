#include "wreath/random.hpp"

#include <limits>

namespace wreath {

uint64_t uniform_below(Rng& rng, uint64_t n) {
  if (n == 0) return 0;
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

TreeAutomorphism random_element(const WreathSignature& sig, Rng& rng) {
  PortraitBuilder b(sig);
  for (uint32_t l = 0; l < sig.depth(); ++l)
    for (uint64_t v = 0; v < sig.vertex_count(l); ++v)
      b.set(l, v, static_cast<uint32_t>(uniform_below(rng, sig.arity(l))));
  return std::move(b).build();
}

TreeAutomorphism random_element(const WreathSignature& sig, uint64_t seed) {
  Rng rng(seed);
  return random_element(sig, rng);
}

}  // namespace wreath
