#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wreath/automorphism.hpp"
#include "wreath/caps.hpp"
#include "wreath/membership.hpp"
#include "wreath/perm.hpp"

namespace wreath {

/// A deduplicated set of elements over one signature, kept in canonical
/// render order. Ground truth for the membership criteria and the
/// decomposition engine: everything here is computed from definitions
/// (leaf-permutation composition, commutator closure, sign filters),
/// never from the criteria under test.
class ElementSet {
public:
  /// Sorts and deduplicates. `closed` records that the set is known to
  /// be closed under the group product (by construction or because a
  /// closure fixpoint verified it).
  ElementSet(WreathSignature sig, std::vector<TreeAutomorphism> members, bool closed);

  const WreathSignature& signature() const { return sig_; }
  size_t size() const { return members_.size(); }
  const std::vector<TreeAutomorphism>& members() const { return members_; }
  bool contains(const TreeAutomorphism& g) const;
  bool closed_under_product() const { return closed_; }

  /// Sorted canonical codes; the set identity for comparisons.
  const std::vector<uint64_t>& codes() const { return codes_; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.sig_ == b.sig_ && a.codes_ == b.codes_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

private:
  WreathSignature sig_;
  std::vector<TreeAutomorphism> members_;
  std::vector<uint64_t> codes_;
  bool closed_;
};

/// All elements of the subgroup, by direct label iteration filtered
/// through the definitional criterion: everything for full, even leaf
/// permutation for sylow-a, commutator closure for the derived kinds.
ElementSet enumerate(const SubgroupSpec& spec, const OracleCaps& caps = {});

/// The subgroup generated by all pairwise commutators of the input
/// group (closure under product until fixpoint).
ElementSet derived_closure(const ElementSet& group, const OracleCaps& caps = {});

/// The raw set {[a,b] : a,b in group}, without closure. Comparing it to
/// derived_closure decides commutator width one exactly.
ElementSet commutator_set(const ElementSet& group, const OracleCaps& caps = {});

/// Exact commutator width: least m with every derived-subgroup element
/// a product of m commutators; 0 for abelian groups.
uint32_t commutator_width(const ElementSet& group, const OracleCaps& caps = {});

ElementSet center(const ElementSet& group, const OracleCaps& caps = {});

/// {g in group : gs = sg for all s in sub}; sub must be contained in group.
ElementSet centralizer(const ElementSet& group, const ElementSet& sub,
                       const OracleCaps& caps = {});

/// Parity of the induced leaf permutation, +1 or -1.
int leaf_sign(const TreeAutomorphism& g);

/// Small generating set, found greedily; the returned set provably
/// generates (its closure is size-checked against the input).
std::vector<TreeAutomorphism> find_generators(const ElementSet& group);

/// Test aid: the pair ((e,...,e,f), (e,...,e,g)) with trivial roots,
/// whose commutator is (e,...,e,[f,g]) one level up.
std::pair<TreeAutomorphism, TreeAutomorphism> last_coordinate_pair(
    uint32_t root_arity, const TreeAutomorphism& f, const TreeAutomorphism& g);

namespace detail {
/// Both routes to the commutator set; commutator_set() picks by size.
/// Kept separately callable so tests can pin their agreement.
ElementSet commutator_set_all_pairs(const ElementSet& group, const OracleCaps& caps);
ElementSet commutator_set_via_classes(const ElementSet& group, const OracleCaps& caps);
}  // namespace detail

}  // namespace wreath
