#include "wreath/membership.hpp"

#include "wreath/errors.hpp"
#include "wreath/oracle.hpp"

namespace wreath {

namespace {

void require_binary(const TreeAutomorphism& g, const char* op) {
  if (!g.signature().is_binary())
    throw PreconditionError(std::string(op) + " requires a binary signature");
}

void require_depth2(const TreeAutomorphism& g, const char* op) {
  if (g.depth() < 2)
    throw PreconditionError(std::string(op) + " requires depth >= 2");
}

bool even(uint64_t n) { return (n & 1) == 0; }

}  // namespace

const char* to_string(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::full: return "full";
    case SubgroupKind::derived: return "derived";
    case SubgroupKind::sylow_a: return "sylow-a";
    case SubgroupKind::sylow_a_derived: return "sylow-a-derived";
  }
  return "?";
}

std::optional<SubgroupKind> subgroup_kind_from_string(const std::string& name) {
  if (name == "full") return SubgroupKind::full;
  if (name == "derived") return SubgroupKind::derived;
  if (name == "sylow-a") return SubgroupKind::sylow_a;
  if (name == "sylow-a-derived") return SubgroupKind::sylow_a_derived;
  return std::nullopt;
}

SubgroupSpec::SubgroupSpec(SubgroupKind kind_, WreathSignature signature_)
    : kind(kind_), signature(std::move(signature_)) {
  if ((kind == SubgroupKind::sylow_a || kind == SubgroupKind::sylow_a_derived) &&
      !signature.is_binary())
    throw PreconditionError("sylow-a subgroups are defined for binary signatures only");
}

bool in_derived_wreath(const TreeAutomorphism& g) {
  if (g.label(0, 0) != 0) return false;
  if (g.depth() == 1) return true;  // trivial root at depth 1 is the identity
  const uint32_t p = g.signature().arity(0);
  TreeAutomorphism prod = g.section(1, 0);
  for (uint32_t c = 1; c < p; ++c) prod = prod * g.section(1, c);
  return in_derived_wreath(prod);
}

bool in_symmetric_sylow_derived(const TreeAutomorphism& g) {
  require_binary(g, "in_symmetric_sylow_derived");
  for (uint64_t c : g.index_vector().counts)
    if (!even(c)) return false;
  return true;
}

bool in_alternating_sylow(const TreeAutomorphism& g) {
  require_binary(g, "in_alternating_sylow");
  if (g.depth() == 1) return g.label(0, 0) == 0;
  return in_alternating_sylow(g.section(1, 0) * g.section(1, 1));
}

bool in_alternating_sylow_derived(const TreeAutomorphism& g) {
  require_binary(g, "in_alternating_sylow_derived");
  require_depth2(g, "in_alternating_sylow_derived");
  if (g.label(0, 0) != 0) return false;
  const TreeAutomorphism g1 = g.section(1, 0);
  const TreeAutomorphism g2 = g.section(1, 1);
  return in_alternating_sylow(g1) && in_alternating_sylow(g2) &&
         in_symmetric_sylow_derived(g1 * g2);
}

bool in_alternating_sylow_derived_by_index(const TreeAutomorphism& g) {
  require_binary(g, "in_alternating_sylow_derived_by_index");
  require_depth2(g, "in_alternating_sylow_derived_by_index");
  const uint32_t k = g.depth();
  const auto iv = g.index_vector();
  for (uint32_t l = 0; l + 1 < k; ++l)
    if (!even(iv.counts[l])) return false;
  auto bottom = g.level_labels(k - 1);
  const uint64_t half = bottom.size() / 2;
  uint64_t left = 0, right = 0;
  for (uint64_t v = 0; v < half; ++v)
    if (bottom[v] != 0) ++left;
  for (uint64_t v = half; v < bottom.size(); ++v)
    if (bottom[v] != 0) ++right;
  return even(left) && even(right);
}

bool member(const SubgroupSpec& spec, const TreeAutomorphism& g) {
  if (g.signature() != spec.signature)
    throw PreconditionError("element signature does not match subgroup spec");
  switch (spec.kind) {
    case SubgroupKind::full:
      return true;
    case SubgroupKind::derived:
      return spec.signature.is_binary() ? in_symmetric_sylow_derived(g)
                                        : in_derived_wreath(g);
    case SubgroupKind::sylow_a:
      return in_alternating_sylow(g);
    case SubgroupKind::sylow_a_derived:
      return in_alternating_sylow_derived(g);
  }
  return false;
}

mpz_class subgroup_order(const SubgroupSpec& spec, const OracleCaps& caps) {
  const WreathSignature& sig = spec.signature;
  const uint32_t k = sig.depth();
  auto full_order = [&] {
    mpz_class n = 1, pw;
    for (uint32_t l = 0; l < k; ++l) {
      mpz_ui_pow_ui(pw.get_mpz_t(), sig.arity(l), static_cast<unsigned long>(sig.vertex_count(l)));
      n *= pw;
    }
    return n;
  };
  switch (spec.kind) {
    case SubgroupKind::full:
      return full_order();
    case SubgroupKind::sylow_a:
      return full_order() / 2;
    case SubgroupKind::derived: {
      if (sig.is_binary()) {
        const unsigned long e = (1ul << k) - 1 - k;
        return mpz_class(1) << e;
      }
      return mpz_class(static_cast<unsigned long>(enumerate(spec, caps).size()));
    }
    case SubgroupKind::sylow_a_derived: {
      if (k < 2)
        throw PreconditionError("sylow-a-derived order requires depth >= 2");
      const unsigned long e = (1ul << k) - k - 2;
      return mpz_class(1) << e;
    }
  }
  throw PreconditionError("unsupported subgroup kind");
}

namespace {

// Even-parity label vector of given length: a uniform draw with the
// last slot fixing the parity.
void fill_even_parity(PortraitBuilder& b, uint32_t level, uint64_t begin, uint64_t count,
                      Rng& rng) {
  uint32_t parity = 0;
  for (uint64_t v = 0; v + 1 < count; ++v) {
    const uint32_t bit = static_cast<uint32_t>(uniform_below(rng, 2));
    b.set(level, begin + v, bit);
    parity ^= bit;
  }
  if (count > 0) b.set(level, begin + count - 1, parity);
}

TreeAutomorphism random_alternating(const WreathSignature& sig, Rng& rng) {
  if (sig.depth() == 1) return TreeAutomorphism::identity(sig);
  std::vector<uint32_t> sub_arities(sig.arities().begin() + 1, sig.arities().end());
  WreathSignature sub{std::move(sub_arities)};
  const uint32_t root = static_cast<uint32_t>(uniform_below(rng, 2));
  const TreeAutomorphism g1 = random_element(sub, rng);
  const TreeAutomorphism h = random_alternating(sub, rng);
  const TreeAutomorphism g2 = g1.inverse() * h;
  const TreeAutomorphism sections[] = {g1, g2};
  return TreeAutomorphism::assemble(root, sections);
}

}  // namespace

TreeAutomorphism random_member(const SubgroupSpec& spec, Rng& rng) {
  const WreathSignature& sig = spec.signature;
  switch (spec.kind) {
    case SubgroupKind::full:
      return random_element(sig, rng);
    case SubgroupKind::derived: {
      if (!sig.is_binary())
        throw PreconditionError("derived sampling requires a binary signature");
      PortraitBuilder b(sig);
      for (uint32_t l = 1; l < sig.depth(); ++l)
        fill_even_parity(b, l, 0, sig.vertex_count(l), rng);
      return std::move(b).build();
    }
    case SubgroupKind::sylow_a:
      return random_alternating(sig, rng);
    case SubgroupKind::sylow_a_derived: {
      if (sig.depth() < 2)
        throw PreconditionError("sylow-a-derived sampling requires depth >= 2");
      PortraitBuilder b(sig);
      const uint32_t k = sig.depth();
      for (uint32_t l = 1; l + 1 < k; ++l)
        fill_even_parity(b, l, 0, sig.vertex_count(l), rng);
      const uint64_t half = sig.vertex_count(k - 1) / 2;
      fill_even_parity(b, k - 1, 0, half, rng);
      fill_even_parity(b, k - 1, half, half, rng);
      return std::move(b).build();
    }
  }
  throw PreconditionError("unsupported subgroup kind");
}

TreeAutomorphism random_member(const SubgroupSpec& spec, uint64_t seed) {
  Rng rng(seed);
  return random_member(spec, rng);
}

}  // namespace wreath
