#include "wreath/perm.hpp"

#include <numeric>

#include "wreath/errors.hpp"

namespace wreath {

LeafPermutation::LeafPermutation(std::vector<uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw PreconditionError("leaf permutation images are not a bijection");
    seen[v] = true;
  }
}

LeafPermutation LeafPermutation::identity(uint64_t degree) {
  std::vector<uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return LeafPermutation(std::move(images));
}

bool LeafPermutation::is_identity() const {
  for (uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

LeafPermutation LeafPermutation::then(const LeafPermutation& other) const {
  if (other.degree() != degree())
    throw PreconditionError("leaf permutation degree mismatch");
  std::vector<uint32_t> out(images_.size());
  for (uint32_t i = 0; i < images_.size(); ++i) out[i] = other.images_[images_[i]];
  return LeafPermutation(std::move(out));
}

LeafPermutation LeafPermutation::inverse() const {
  std::vector<uint32_t> out(images_.size());
  for (uint32_t i = 0; i < images_.size(); ++i) out[images_[i]] = i;
  return LeafPermutation(std::move(out));
}

int LeafPermutation::sign() const {
  // (-1)^(n - #cycles)
  std::vector<bool> seen(images_.size(), false);
  uint64_t cycles = 0;
  for (uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (uint32_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return ((images_.size() - cycles) % 2 == 0) ? 1 : -1;
}

}  // namespace wreath
