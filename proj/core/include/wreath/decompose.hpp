#pragma once

#include <span>

#include "wreath/automorphism.hpp"
#include "wreath/membership.hpp"

namespace wreath {

/// A certified single-commutator presentation: commutator(left, right)
/// equals target, and each witness lies in the subgroup named by its
/// tag. The decomposition routines re-verify all of this before
/// returning, so a witness in hand is always valid.
struct CommutatorWitness {
  TreeAutomorphism target;
  TreeAutomorphism left;
  TreeAutomorphism right;
  SubgroupKind left_set = SubgroupKind::full;
  SubgroupKind right_set = SubgroupKind::full;

  bool verify() const;
};

/// For w = (r_1,...,r_p) with trivial root: the section product
/// r_{p-1} r_{p-2} ... r_1 r_p. w lies in the derived subgroup of the
/// wreath product exactly when this lies in the derived subgroup one
/// level down.
TreeAutomorphism residual_product(const TreeAutomorphism& w);

/// Realizes w = (r_1,...,r_{p-1}, r_1^-1...r_{p-1}^-1 [f,g]) as a single
/// commutator [(e,...,e,a_1p) sigma, (a_21,...,a_2p)] with
///   a_21 = (f^-1)^(r_1^-1...r_{p-1}^-1),  a_2i = r_{i-1} a_2{i-1},
///   a_1p = g^(a_2p^-1),
/// conjugation written x^y = y x y^-1. r holds the p-1 leading sections;
/// r, f, g share one signature, one level below the result.
CommutatorWitness lift_commutator(std::span<const TreeAutomorphism> r,
                                  const TreeAutomorphism& f, const TreeAutomorphism& g);

/// Any element of the derived subgroup of the full wreath product as
/// one commutator of full-group witnesses. Recursion: the residual
/// product is decomposed one level down, then lifted.
CommutatorWitness decompose_derived_wreath(const TreeAutomorphism& w);

/// Binary signatures: an element of (Syl_2 S_{2^k})' as one commutator
/// whose left witness lies in Syl_2 A_{2^k} and right witness in the
/// full group.
CommutatorWitness decompose_symmetric_sylow_derived(const TreeAutomorphism& w);

/// Binary signatures, depth >= 2: an element of (Syl_2 A_{2^k})' as one
/// commutator with both witnesses in Syl_2 A_{2^k}.
CommutatorWitness decompose_alternating_sylow_derived(const TreeAutomorphism& w);

}  // namespace wreath
