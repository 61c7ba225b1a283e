#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/perm.hpp"
#include "wreath/signature.hpp"

namespace wreath {

/// Per-level counts of active vertices (vertices with a nontrivial
/// vertex permutation). counts[l] is the number of nonzero labels on
/// level l, 0 <= l < depth.
struct LevelIndexVector {
  std::vector<uint64_t> counts;

  friend bool operator==(const LevelIndexVector& a, const LevelIndexVector& b) {
    return a.counts == b.counts;
  }
};

/// An automorphism of the rooted tree X^[k], stored as its portrait:
/// one rotation amount per internal vertex, level by level, left to
/// right. A label t at a level-l vertex rotates its children by the
/// cycle sigma^t, sigma = (1,2,...,p), i.e. 0-based child c goes to
/// child (c+t) mod p.
///
/// Conventions, fixed once and relied on everywhere:
///  - leaf action: g(x w) = sigma_g(x) . (g|_x)(w), recursively;
///  - product: (g*h) applies g first, then h. On sections this is the
///    wreath recursion (g*h)|_i = g|_i * h|_{sigma_g(i)} with root part
///    sigma_g sigma_h, and leaf_permutation(g*h) == leaf_permutation(g)
///    .then(leaf_permutation(h));
///  - commutator(a,b) = a b a^-1 b^-1, conjugate(a,b) = b a b^-1.
///
/// Values are immutable; every operation returns a new element.
class TreeAutomorphism {
public:
  static TreeAutomorphism identity(WreathSignature sig);

  /// Parses the portrait text format: levels joined by '|', level 0
  /// first. Within a level, labels appear in vertex order either as
  /// bare digits ("1|01") or comma-separated decimals ("2|1,2,0");
  /// any arity >= 10 requires the comma form.
  static TreeAutomorphism parse(const WreathSignature& sig, std::string_view text);

  /// Rebuilds an element from its root label and the p sections below
  /// the root (the wreath recursion (s_1,...,s_p) sigma^root_label).
  static TreeAutomorphism assemble(uint32_t root_label,
                                   std::span<const TreeAutomorphism> sections);

  const WreathSignature& signature() const { return sig_; }
  uint32_t depth() const { return sig_.depth(); }

  uint32_t label(uint32_t level, uint64_t pos) const {
    return labels_[sig_.label_offset(level) + pos];
  }
  std::span<const uint32_t> level_labels(uint32_t level) const {
    return {labels_.data() + sig_.label_offset(level),
            static_cast<size_t>(sig_.vertex_count(level))};
  }
  std::span<const uint32_t> labels() const { return labels_; }

  bool is_identity() const;

  /// Canonical text form; parse(signature(), render()) reproduces the
  /// element exactly. Bare digits when all arities are <= 9, commas
  /// otherwise.
  std::string render() const;

  TreeAutomorphism inverse() const;

  /// Section (state) at the level-l vertex with 0-based position pos:
  /// the depth-(k-l) automorphism acting on the subtree below it.
  TreeAutomorphism section(uint32_t level, uint64_t pos) const;

  LevelIndexVector index_vector() const;

  /// The permutation of the leaves induced by the recursive action.
  LeafPermutation leaf_permutation() const;

  /// Mixed-radix encoding of the label vector; orders elements
  /// label-lexicographically. Requires the full group order to fit u64.
  uint64_t canonical_code() const;
  static TreeAutomorphism from_canonical_code(const WreathSignature& sig, uint64_t code);

  /// Product "apply left, then right".
  friend TreeAutomorphism operator*(const TreeAutomorphism& g, const TreeAutomorphism& h);

  friend bool operator==(const TreeAutomorphism& a, const TreeAutomorphism& b) {
    return a.sig_ == b.sig_ && a.labels_ == b.labels_;
  }
  friend bool operator!=(const TreeAutomorphism& a, const TreeAutomorphism& b) {
    return !(a == b);
  }

private:
  TreeAutomorphism(WreathSignature sig, std::vector<uint32_t> labels)
      : sig_(std::move(sig)), labels_(std::move(labels)) {}

  /// g's action on the vertices of a level, as 0-based position images.
  std::vector<uint64_t> vertex_images(uint32_t level) const;

  WreathSignature sig_;
  std::vector<uint32_t> labels_;

  friend class PortraitBuilder;
};

TreeAutomorphism multiply(const TreeAutomorphism& g, const TreeAutomorphism& h);

/// a b a^-1 b^-1
TreeAutomorphism commutator(const TreeAutomorphism& a, const TreeAutomorphism& b);

/// b a b^-1
TreeAutomorphism conjugate(const TreeAutomorphism& a, const TreeAutomorphism& b);

/// Escape hatch for code that needs to build portraits label by label
/// (samplers, enumeration). Validates on build.
class PortraitBuilder {
public:
  explicit PortraitBuilder(WreathSignature sig);
  void set(uint32_t level, uint64_t pos, uint32_t label);
  uint32_t get(uint32_t level, uint64_t pos) const;
  TreeAutomorphism build() &&;

private:
  WreathSignature sig_;
  std::vector<uint32_t> labels_;
};

}  // namespace wreath
