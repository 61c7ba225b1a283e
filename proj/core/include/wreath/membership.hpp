#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "wreath/automorphism.hpp"
#include "wreath/caps.hpp"
#include "wreath/random.hpp"
#include "wreath/signature.hpp"

namespace wreath {

/// The subgroup lattice under study, for a fixed signature:
///   full             the whole iterated wreath product W
///                    (for binary signatures, Syl_2 S_{2^k})
///   derived          W' = [W, W]
///   sylow_a          Syl_2 A_{2^k}: the index-2 subgroup acting evenly
///                    on the leaves (binary signatures only)
///   sylow_a_derived  its derived subgroup (binary, depth >= 2)
enum class SubgroupKind { full, derived, sylow_a, sylow_a_derived };

const char* to_string(SubgroupKind kind);
std::optional<SubgroupKind> subgroup_kind_from_string(const std::string& name);

struct SubgroupSpec {
  SubgroupKind kind;
  WreathSignature signature;

  /// Validates that sylow kinds come with a binary signature.
  SubgroupSpec(SubgroupKind kind, WreathSignature signature);
};

/// Membership in the derived subgroup of the full wreath product, any
/// signature. Recursive criterion: trivial root label, and the
/// left-to-right product of the level-1 sections lies in the derived
/// subgroup one level down; at depth 1 only the identity qualifies.
bool in_derived_wreath(const TreeAutomorphism& g);

/// Membership in (Syl_2 S_{2^k})' for binary signatures: every level
/// carries an even number of active vertices.
bool in_symmetric_sylow_derived(const TreeAutomorphism& g);

/// Membership in Syl_2 A_{2^k} (binary): the product of the two level-1
/// sections lies in the subgroup one level down; the depth-1 group is
/// trivial. Equivalent to the leaf permutation being even.
bool in_alternating_sylow(const TreeAutomorphism& g);

/// Membership in (Syl_2 A_{2^k})', binary, depth >= 2: trivial root,
/// both level-1 sections in Syl_2 A_{2^{k-1}}, and their product in
/// (Syl_2 S_{2^{k-1}})'.
bool in_alternating_sylow_derived(const TreeAutomorphism& g);

/// Same subgroup through the index characterization: even counts on
/// every level l <= k-2, and even counts on each half of level k-1
/// (the two subtrees hanging off the root).
bool in_alternating_sylow_derived_by_index(const TreeAutomorphism& g);

/// Dispatch on kind; full membership only checks the signature.
bool member(const SubgroupSpec& spec, const TreeAutomorphism& g);

/// Exact subgroup order. Closed forms: |W| is the product over levels
/// of arity^(vertex count); sylow_a is half of that; the binary derived
/// orders are 2^(2^k-1-k) and 2^(2^k-k-2). Non-binary derived falls
/// back to enumeration under the given caps.
mpz_class subgroup_order(const SubgroupSpec& spec, const OracleCaps& caps = {});

/// Uniform draw from the subgroup, reproducible per seed.
TreeAutomorphism random_member(const SubgroupSpec& spec, Rng& rng);
TreeAutomorphism random_member(const SubgroupSpec& spec, uint64_t seed);

}  // namespace wreath
