#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wreath {

/// Shape of the finite rooted tree X^[k]: one child arity per level.
///
/// arity(l) is the number of children of every level-l vertex, so a
/// signature (p1,...,pk) fixes the iterated wreath product
/// C_{pk} wr ... wr C_{p1} acting on the tree, with p1 at the root.
/// Levels are 0-indexed; level 0 is the root, level depth() holds the
/// leaves. Immutable and cheap to copy.
class WreathSignature {
public:
  explicit WreathSignature(std::vector<uint32_t> arities);

  static WreathSignature uniform(uint32_t arity, uint32_t depth);

  /// Parses "2,2,2" style text.
  static WreathSignature parse(const std::string& text);

  uint32_t depth() const { return static_cast<uint32_t>(data_->arities.size()); }
  std::span<const uint32_t> arities() const { return data_->arities; }

  /// Child arity of level-l vertices, 0 <= l < depth().
  uint32_t arity(uint32_t level) const { return data_->arities[level]; }

  /// Number of vertices on a level, 0 <= l <= depth().
  uint64_t vertex_count(uint32_t level) const { return data_->vertex_counts[level]; }
  uint64_t leaf_count() const { return data_->vertex_counts[depth()]; }

  /// Offset of a level's labels in flat label storage, 0 <= l <= depth();
  /// label_offset(depth()) == label_count().
  uint64_t label_offset(uint32_t level) const { return data_->label_offsets[level]; }
  uint64_t label_count() const { return data_->label_offsets[depth()]; }

  bool is_binary() const { return data_->binary; }
  std::optional<uint32_t> uniform_arity() const;

  /// Order of the full wreath product, when it fits in 64 bits.
  std::optional<uint64_t> full_order_u64() const;

  /// Mixed-radix weight of a flat label slot; defined only when
  /// full_order_u64() is. canonical_code of an element is the sum of
  /// label*slot_weight over all slots, ordering elements label-lexicographically.
  uint64_t slot_weight(uint64_t slot) const { return data_->slot_weights[slot]; }

  std::string render() const;

  friend bool operator==(const WreathSignature& a, const WreathSignature& b) {
    return a.data_ == b.data_ || a.data_->arities == b.data_->arities;
  }
  friend bool operator!=(const WreathSignature& a, const WreathSignature& b) {
    return !(a == b);
  }

private:
  struct Data {
    std::vector<uint32_t> arities;
    std::vector<uint64_t> vertex_counts;  // size depth+1
    std::vector<uint64_t> label_offsets;  // size depth+1
    std::vector<uint64_t> slot_weights;   // empty when order exceeds u64
    std::optional<uint64_t> full_order;
    bool binary = false;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace wreath
