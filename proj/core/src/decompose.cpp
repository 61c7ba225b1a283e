#include "wreath/decompose.hpp"

#include <vector>

#include "wreath/errors.hpp"

namespace wreath {

namespace {

std::vector<TreeAutomorphism> level_one_sections(const TreeAutomorphism& w) {
  const uint32_t p = w.signature().arity(0);
  std::vector<TreeAutomorphism> r;
  r.reserve(p);
  for (uint32_t c = 0; c < p; ++c) r.push_back(w.section(1, c));
  return r;
}

CommutatorWitness identity_witness(const TreeAutomorphism& w, SubgroupKind left_set,
                                   SubgroupKind right_set) {
  TreeAutomorphism e = TreeAutomorphism::identity(w.signature());
  return CommutatorWitness{w, e, e, left_set, right_set};
}

void verify_or_throw(const CommutatorWitness& wit, const char* op) {
  if (!wit.verify())
    throw VerificationError(std::string(op) + ": constructed witness failed verification");
}

}  // namespace

bool CommutatorWitness::verify() const {
  if (commutator(left, right) != target) return false;
  const WreathSignature& sig = target.signature();
  return member(SubgroupSpec(left_set, sig), left) &&
         member(SubgroupSpec(right_set, sig), right);
}

TreeAutomorphism residual_product(const TreeAutomorphism& w) {
  if (w.label(0, 0) != 0)
    throw PreconditionError("residual_product requires a trivial root label");
  if (w.depth() == 1) return w;  // trivial root at depth 1: the identity of C_p1
  const auto r = level_one_sections(w);
  const uint32_t p = static_cast<uint32_t>(r.size());
  TreeAutomorphism x = r[p - 2];
  for (uint32_t i = p - 2; i-- > 0;) x = x * r[i];
  return x * r[p - 1];
}

CommutatorWitness lift_commutator(std::span<const TreeAutomorphism> r,
                                  const TreeAutomorphism& f, const TreeAutomorphism& g) {
  if (r.empty()) throw PreconditionError("lift_commutator needs at least one section");
  const WreathSignature& base = f.signature();
  if (g.signature() != base)
    throw PreconditionError("lift_commutator: f and g signatures differ");
  for (const auto& ri : r)
    if (ri.signature() != base)
      throw PreconditionError("lift_commutator: sections and commutator parts must share "
                              "one signature");
  const uint32_t p = static_cast<uint32_t>(r.size()) + 1;
  const TreeAutomorphism e = TreeAutomorphism::identity(base);

  // c = r_1^-1 ... r_{p-1}^-1
  TreeAutomorphism c = r[0].inverse();
  for (uint32_t i = 1; i + 1 < p; ++i) c = c * r[i].inverse();

  std::vector<TreeAutomorphism> a2;
  a2.reserve(p);
  a2.push_back(conjugate(f.inverse(), c));
  for (uint32_t i = 1; i < p; ++i) a2.push_back(r[i - 1] * a2[i - 1]);
  const TreeAutomorphism a1p = conjugate(g, a2[p - 1].inverse());

  std::vector<TreeAutomorphism> left_sections(p, e);
  left_sections[p - 1] = a1p;
  const TreeAutomorphism left = TreeAutomorphism::assemble(1, left_sections);
  const TreeAutomorphism right = TreeAutomorphism::assemble(0, a2);

  std::vector<TreeAutomorphism> target_sections(r.begin(), r.end());
  target_sections.push_back(c * commutator(f, g));
  const TreeAutomorphism target = TreeAutomorphism::assemble(0, target_sections);

  CommutatorWitness wit{target, left, right, SubgroupKind::full, SubgroupKind::full};
  verify_or_throw(wit, "lift_commutator");
  return wit;
}

CommutatorWitness decompose_derived_wreath(const TreeAutomorphism& w) {
  if (!in_derived_wreath(w))
    throw PreconditionError("decompose_derived_wreath: element is not in the derived "
                            "subgroup of the wreath product");
  if (w.is_identity())
    return identity_witness(w, SubgroupKind::full, SubgroupKind::full);

  // depth 1 derived subgroups are trivial, so depth >= 2 here
  auto r = level_one_sections(w);
  const TreeAutomorphism x = residual_product(w);
  const CommutatorWitness inner = decompose_derived_wreath(x);
  r.pop_back();
  CommutatorWitness wit = lift_commutator(r, inner.left, inner.right);
  if (wit.target != w)
    throw VerificationError("decompose_derived_wreath: lift produced a different element");
  verify_or_throw(wit, "decompose_derived_wreath");
  return wit;
}

CommutatorWitness decompose_symmetric_sylow_derived(const TreeAutomorphism& w) {
  if (!w.signature().is_binary())
    throw PreconditionError("decompose_symmetric_sylow_derived requires a binary signature");
  if (!in_symmetric_sylow_derived(w))
    throw PreconditionError("decompose_symmetric_sylow_derived: element is not in the "
                            "derived subgroup");
  if (w.is_identity())
    return identity_witness(w, SubgroupKind::sylow_a, SubgroupKind::full);

  const TreeAutomorphism r1 = w.section(1, 0);
  const TreeAutomorphism r2 = w.section(1, 1);
  const TreeAutomorphism x = r1 * r2;
  // x = [f, g] with g in the alternating sylow subgroup one level down:
  // decompose x^-1 the same way and swap, using [u,v]^-1 = [v,u].
  const CommutatorWitness inner = decompose_symmetric_sylow_derived(x.inverse());
  const TreeAutomorphism& f = inner.right;
  const TreeAutomorphism& g = inner.left;

  const TreeAutomorphism rs[] = {r1};
  CommutatorWitness wit = lift_commutator(rs, f, g);
  if (wit.target != w)
    throw VerificationError("decompose_symmetric_sylow_derived: lift produced a "
                            "different element");
  wit.left_set = SubgroupKind::sylow_a;
  wit.right_set = SubgroupKind::full;
  verify_or_throw(wit, "decompose_symmetric_sylow_derived");
  return wit;
}

CommutatorWitness decompose_alternating_sylow_derived(const TreeAutomorphism& w) {
  if (!w.signature().is_binary() || w.depth() < 2)
    throw PreconditionError("decompose_alternating_sylow_derived requires a binary "
                            "signature of depth >= 2");
  if (!in_alternating_sylow_derived(w))
    throw PreconditionError("decompose_alternating_sylow_derived: element is not in the "
                            "derived subgroup");
  if (w.is_identity())
    return identity_witness(w, SubgroupKind::sylow_a, SubgroupKind::sylow_a);

  const TreeAutomorphism r1 = w.section(1, 0);
  const TreeAutomorphism r2 = w.section(1, 1);
  const TreeAutomorphism x = r1 * r2;  // in (Syl_2 S)' one level down
  const CommutatorWitness inner = decompose_symmetric_sylow_derived(x.inverse());
  const TreeAutomorphism& f = inner.right;
  const TreeAutomorphism& g = inner.left;

  const TreeAutomorphism rs[] = {r1};
  CommutatorWitness wit = lift_commutator(rs, f, g);
  if (wit.target != w)
    throw VerificationError("decompose_alternating_sylow_derived: lift produced a "
                            "different element");
  wit.left_set = SubgroupKind::sylow_a;
  wit.right_set = SubgroupKind::sylow_a;
  verify_or_throw(wit, "decompose_alternating_sylow_derived");
  return wit;
}

}  // namespace wreath
