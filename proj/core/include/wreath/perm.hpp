#pragma once

#include <cstdint>
#include <vector>

namespace wreath {

/// A permutation of the tree's leaves, stored as 0-based images:
/// position i maps to images()[i]. Ground-truth representation for the
/// brute-force checks; composition here is independent of the portrait
/// product rule.
class LeafPermutation {
public:
  explicit LeafPermutation(std::vector<uint32_t> images);
  static LeafPermutation identity(uint64_t degree);

  uint64_t degree() const { return images_.size(); }
  uint32_t operator()(uint32_t i) const { return images_[i]; }
  const std::vector<uint32_t>& images() const { return images_; }

  bool is_identity() const;

  /// Composition "apply this, then other".
  LeafPermutation then(const LeafPermutation& other) const;
  LeafPermutation inverse() const;

  /// +1 for even permutations, -1 for odd.
  int sign() const;

  friend bool operator==(const LeafPermutation& a, const LeafPermutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const LeafPermutation& a, const LeafPermutation& b) {
    return !(a == b);
  }

private:
  std::vector<uint32_t> images_;
};

}  // namespace wreath
