#include "wreath/oracle.hpp"

#include <algorithm>

#include "wreath/errors.hpp"

namespace wreath {

namespace {

// ---------------------------------------------------------------------------
// Scan engine. All quadratic work runs on flat leaf-permutation images;
// results are identified by canonical code, so deduplication is a bitset
// over the full group's code space and products never touch the portrait
// product rule.

uint64_t code_space(const WreathSignature& sig, const OracleCaps& caps) {
  auto order = sig.full_order_u64();
  if (!order || *order > caps.enumeration)
    throw CapExceeded("full group order exceeds the enumeration cap");
  return *order;
}

void require_group(const ElementSet& s, const char* op) {
  if (s.size() == 0 || !s.closed_under_product())
    throw PreconditionError(std::string(op) + " requires a nonempty product-closed input set");
}

void require_quadratic(const ElementSet& s, const OracleCaps& caps, const char* op) {
  if (s.size() > caps.quadratic)
    throw CapExceeded(std::string(op) + ": set size " + std::to_string(s.size()) +
                      " exceeds the quadratic scan cap " + std::to_string(caps.quadratic));
}

class Scan {
public:
  explicit Scan(const ElementSet& s)
      : sig_(s.signature()), n_(sig_.leaf_count()), count_(s.size()) {
    perms_.resize(n_ * count_);
    invs_.resize(n_ * count_);
    for (size_t i = 0; i < count_; ++i) {
      const auto perm = s.members()[i].leaf_permutation();
      uint32_t* p = perms_.data() + i * n_;
      uint32_t* q = invs_.data() + i * n_;
      for (uint64_t x = 0; x < n_; ++x) {
        p[x] = perm.images()[x];
        q[perm.images()[x]] = static_cast<uint32_t>(x);
      }
    }
    // Per-level leaf spans, for turning an image array back into a code.
    leaves_under_.resize(sig_.depth() + 1);
    for (uint32_t l = 0; l <= sig_.depth(); ++l)
      leaves_under_[l] = n_ / sig_.vertex_count(l);
  }

  const WreathSignature& signature() const { return sig_; }
  uint64_t degree() const { return n_; }
  size_t count() const { return count_; }
  const uint32_t* perm(size_t i) const { return perms_.data() + i * n_; }
  const uint32_t* inv(size_t i) const { return invs_.data() + i * n_; }

  // r = apply p, then q
  void compose(const uint32_t* p, const uint32_t* q, uint32_t* r) const {
    for (uint64_t x = 0; x < n_; ++x) r[x] = q[p[x]];
  }

  void invert(const uint32_t* p, uint32_t* r) const {
    for (uint64_t x = 0; x < n_; ++x) r[p[x]] = static_cast<uint32_t>(x);
  }

  // Canonical code of the automorphism inducing `images`. Valid only for
  // images that really are tree automorphisms (products of group
  // elements always are).
  uint64_t code_of(const uint32_t* images) const {
    uint64_t code = 0;
    extract(images, 0, 0, 0, code);
    return code;
  }

  LeafPermutation to_perm(const uint32_t* images) const {
    return LeafPermutation(std::vector<uint32_t>(images, images + n_));
  }

private:
  void extract(const uint32_t* images, uint32_t level, uint64_t pos, uint64_t img_pos,
               uint64_t& code) const {
    if (level == sig_.depth()) return;
    const uint64_t span = leaves_under_[level];
    const uint64_t child_span = leaves_under_[level + 1];
    const uint32_t p = sig_.arity(level);
    const uint64_t t = (images[pos * span] - img_pos * span) / child_span;
    code += t * sig_.slot_weight(sig_.label_offset(level) + pos);
    for (uint32_t c = 0; c < p; ++c)
      extract(images, level + 1, pos * p + c, img_pos * p + (c + t) % p, code);
  }

  WreathSignature sig_;
  uint64_t n_;
  size_t count_;
  std::vector<uint32_t> perms_;
  std::vector<uint32_t> invs_;
  std::vector<uint64_t> leaves_under_;
};

std::vector<TreeAutomorphism> decode_marked(const WreathSignature& sig,
                                            const std::vector<bool>& marks) {
  std::vector<TreeAutomorphism> out;
  for (uint64_t code = 0; code < marks.size(); ++code)
    if (marks[code]) out.push_back(TreeAutomorphism::from_canonical_code(sig, code));
  return out;
}

// Greedy generator search in permutation space. Returns member indices;
// the closure size is checked against the group, so a wrong generating
// set cannot go unnoticed.
std::vector<size_t> generator_indices(const ElementSet& s, const Scan& scan,
                                      const OracleCaps& caps) {
  const uint64_t space = code_space(s.signature(), caps);
  std::vector<bool> in_closure(space, false);
  std::vector<std::vector<uint32_t>> closure;  // perms, discovery order
  const uint64_t n = scan.degree();

  std::vector<uint32_t> id(n);
  for (uint64_t x = 0; x < n; ++x) id[x] = static_cast<uint32_t>(x);
  in_closure[scan.code_of(id.data())] = true;
  closure.push_back(std::move(id));

  std::vector<size_t> gens;
  std::vector<uint32_t> buf(n);
  for (size_t i = 0; i < s.size() && closure.size() < s.size(); ++i) {
    if (in_closure[s.members()[i].canonical_code()]) continue;
    gens.push_back(i);
    // grow the closure with the enlarged generating set
    size_t scan_from = 0;
    closure.push_back(std::vector<uint32_t>(scan.perm(i), scan.perm(i) + n));
    in_closure[s.members()[i].canonical_code()] = true;
    while (scan_from < closure.size()) {
      const std::vector<uint32_t> cur = closure[scan_from++];
      for (size_t gi : gens) {
        scan.compose(cur.data(), scan.perm(gi), buf.data());
        const uint64_t code = scan.code_of(buf.data());
        if (!in_closure[code]) {
          in_closure[code] = true;
          closure.push_back(buf);
        }
      }
    }
  }
  if (closure.size() != s.size())
    throw VerificationError("generator closure does not reproduce the input group");
  return gens;
}

}  // namespace

// ---------------------------------------------------------------------------

ElementSet::ElementSet(WreathSignature sig, std::vector<TreeAutomorphism> members,
                       bool closed)
    : sig_(std::move(sig)), members_(std::move(members)), closed_(closed) {
  for (const auto& m : members_)
    if (m.signature() != sig_)
      throw PreconditionError("element set member has a foreign signature");
  codes_.reserve(members_.size());
  for (const auto& m : members_) codes_.push_back(m.canonical_code());
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  if (codes_.size() != members_.size()) {
    // rebuild members from the deduplicated codes
    members_.clear();
    for (uint64_t code : codes_) members_.push_back(TreeAutomorphism::from_canonical_code(sig_, code));
  }
  std::sort(members_.begin(), members_.end(),
            [](const TreeAutomorphism& a, const TreeAutomorphism& b) {
              return a.render() < b.render();
            });
}

bool ElementSet::contains(const TreeAutomorphism& g) const {
  if (g.signature() != sig_) return false;
  return std::binary_search(codes_.begin(), codes_.end(), g.canonical_code());
}

ElementSet enumerate(const SubgroupSpec& spec, const OracleCaps& caps) {
  const WreathSignature& sig = spec.signature;
  const uint64_t space = code_space(sig, caps);
  switch (spec.kind) {
    case SubgroupKind::full: {
      std::vector<TreeAutomorphism> members;
      members.reserve(space);
      for (uint64_t code = 0; code < space; ++code)
        members.push_back(TreeAutomorphism::from_canonical_code(sig, code));
      return ElementSet(sig, std::move(members), /*closed=*/true);
    }
    case SubgroupKind::sylow_a: {
      std::vector<TreeAutomorphism> members;
      for (uint64_t code = 0; code < space; ++code) {
        TreeAutomorphism g = TreeAutomorphism::from_canonical_code(sig, code);
        if (g.leaf_permutation().sign() == 1) members.push_back(std::move(g));
      }
      return ElementSet(sig, std::move(members), /*closed=*/true);
    }
    case SubgroupKind::derived:
      return derived_closure(enumerate(SubgroupSpec(SubgroupKind::full, sig), caps), caps);
    case SubgroupKind::sylow_a_derived:
      return derived_closure(enumerate(SubgroupSpec(SubgroupKind::sylow_a, sig), caps),
                             caps);
  }
  throw PreconditionError("unsupported subgroup kind");
}

namespace detail {

ElementSet commutator_set_all_pairs(const ElementSet& group, const OracleCaps& caps) {
  require_group(group, "commutator_set");
  require_quadratic(group, caps, "commutator_set");
  const uint64_t space = code_space(group.signature(), caps);
  Scan scan(group);
  const uint64_t n = scan.degree();
  std::vector<bool> marks(space, false);
  std::vector<uint32_t> ab(n), aba(n), c(n);
  for (size_t i = 0; i < scan.count(); ++i) {
    for (size_t j = 0; j < scan.count(); ++j) {
      scan.compose(scan.perm(i), scan.perm(j), ab.data());
      scan.compose(ab.data(), scan.inv(i), aba.data());
      scan.compose(aba.data(), scan.inv(j), c.data());
      marks[scan.code_of(c.data())] = true;
    }
  }
  return ElementSet(group.signature(), decode_marked(group.signature(), marks),
                    /*closed=*/false);
}

// {[a,b] : a,b in G} = union over class representatives c of the
// conjugation closure of {[a,c] : a in G}, since [x,y]^g = [x^g, y^g]
// and every b is some c^g. Exact, and avoids the full pair scan.
ElementSet commutator_set_via_classes(const ElementSet& group, const OracleCaps& caps) {
  require_group(group, "commutator_set");
  require_quadratic(group, caps, "commutator_set");
  const WreathSignature& sig = group.signature();
  const uint64_t space = code_space(sig, caps);
  Scan scan(group);
  const uint64_t n = scan.degree();
  const auto gens = generator_indices(group, scan, caps);

  // conjugacy class representatives: orbit partition under generator
  // conjugation
  std::vector<bool> visited(space, false);
  std::vector<size_t> reps;
  std::vector<uint32_t> buf(n), buf2(n);
  for (size_t i = 0; i < scan.count(); ++i) {
    const uint64_t code0 = group.members()[i].canonical_code();
    if (visited[code0]) continue;
    reps.push_back(i);
    std::vector<std::vector<uint32_t>> orbit;
    orbit.emplace_back(scan.perm(i), scan.perm(i) + n);
    visited[code0] = true;
    for (size_t at = 0; at < orbit.size(); ++at) {
      const std::vector<uint32_t> cur = orbit[at];
      for (size_t gi : gens) {
        // g x g^-1
        scan.compose(scan.perm(gi), cur.data(), buf.data());
        scan.compose(buf.data(), scan.inv(gi), buf2.data());
        const uint64_t code = scan.code_of(buf2.data());
        if (!visited[code]) {
          visited[code] = true;
          orbit.push_back(buf2);
        }
      }
    }
  }

  std::vector<bool> marks(space, false);
  std::vector<uint32_t> ab(n), aba(n), c(n);
  std::vector<std::vector<uint32_t>> frontier;
  for (size_t rep : reps) {
    const uint32_t* pb = scan.perm(rep);
    const uint32_t* pbinv = scan.inv(rep);
    for (size_t i = 0; i < scan.count(); ++i) {
      scan.compose(scan.perm(i), pb, ab.data());
      scan.compose(ab.data(), scan.inv(i), aba.data());
      scan.compose(aba.data(), pbinv, c.data());
      const uint64_t code = scan.code_of(c.data());
      if (!marks[code]) {
        marks[code] = true;
        frontier.emplace_back(c.begin(), c.end());
      }
    }
  }
  // close the marked set under conjugation
  for (size_t at = 0; at < frontier.size(); ++at) {
    const std::vector<uint32_t> cur = frontier[at];
    for (size_t gi : gens) {
      scan.compose(scan.perm(gi), cur.data(), buf.data());
      scan.compose(buf.data(), scan.inv(gi), buf2.data());
      const uint64_t code = scan.code_of(buf2.data());
      if (!marks[code]) {
        marks[code] = true;
        frontier.push_back(buf2);
      }
    }
  }
  return ElementSet(sig, decode_marked(sig, marks), /*closed=*/false);
}

}  // namespace detail

ElementSet commutator_set(const ElementSet& group, const OracleCaps& caps) {
  constexpr size_t kAllPairsLimit = 2048;
  return group.size() <= kAllPairsLimit ? detail::commutator_set_all_pairs(group, caps)
                                        : detail::commutator_set_via_classes(group, caps);
}

ElementSet derived_closure(const ElementSet& group, const OracleCaps& caps) {
  require_group(group, "derived_closure");
  require_quadratic(group, caps, "derived_closure");
  const WreathSignature& sig = group.signature();
  const uint64_t space = code_space(sig, caps);
  ElementSet raw = commutator_set(group, caps);

  Scan scan(raw);
  const uint64_t n = scan.degree();
  std::vector<bool> marks(space, false);
  std::vector<std::vector<uint32_t>> frontier;
  for (size_t i = 0; i < scan.count(); ++i) {
    marks[raw.members()[i].canonical_code()] = true;
    frontier.emplace_back(scan.perm(i), scan.perm(i) + n);
  }
  std::vector<uint32_t> buf(n);
  for (size_t at = 0; at < frontier.size(); ++at) {
    const std::vector<uint32_t> cur = frontier[at];
    for (size_t i = 0; i < scan.count(); ++i) {
      scan.compose(cur.data(), scan.perm(i), buf.data());
      const uint64_t code = scan.code_of(buf.data());
      if (!marks[code]) {
        marks[code] = true;
        frontier.push_back(buf);
      }
    }
  }
  return ElementSet(sig, decode_marked(sig, marks), /*closed=*/true);
}

uint32_t commutator_width(const ElementSet& group, const OracleCaps& caps) {
  const ElementSet derived = derived_closure(group, caps);
  if (derived.size() == 1) return 0;
  const ElementSet raw = commutator_set(group, caps);
  const uint64_t space = code_space(group.signature(), caps);

  Scan kscan(raw);
  const uint64_t n = kscan.degree();
  std::vector<bool> covered(space, false);
  std::vector<std::vector<uint32_t>> layer;
  for (size_t i = 0; i < kscan.count(); ++i) {
    covered[raw.members()[i].canonical_code()] = true;
    layer.emplace_back(kscan.perm(i), kscan.perm(i) + n);
  }
  auto all_covered = [&] {
    for (uint64_t code : derived.codes())
      if (!covered[code]) return false;
    return true;
  };
  uint32_t width = 1;
  std::vector<uint32_t> buf(n);
  while (!all_covered()) {
    std::vector<std::vector<uint32_t>> next;
    for (const auto& cur : layer) {
      for (size_t i = 0; i < kscan.count(); ++i) {
        kscan.compose(cur.data(), kscan.perm(i), buf.data());
        const uint64_t code = kscan.code_of(buf.data());
        if (!covered[code]) {
          covered[code] = true;
          next.push_back(buf);
        }
      }
    }
    ++width;
    if (next.empty())
      throw VerificationError("commutator width search stalled before covering the "
                              "derived subgroup");
    layer = std::move(next);
  }
  return width;
}

ElementSet center(const ElementSet& group, const OracleCaps& caps) {
  require_group(group, "center");
  require_quadratic(group, caps, "center");
  Scan scan(group);
  const uint64_t n = scan.degree();
  std::vector<uint32_t> zg(n), gz(n);
  std::vector<TreeAutomorphism> members;
  for (size_t i = 0; i < scan.count(); ++i) {
    bool central = true;
    for (size_t j = 0; j < scan.count() && central; ++j) {
      scan.compose(scan.perm(i), scan.perm(j), zg.data());
      scan.compose(scan.perm(j), scan.perm(i), gz.data());
      central = std::equal(zg.begin(), zg.end(), gz.begin());
    }
    if (central) members.push_back(group.members()[i]);
  }
  return ElementSet(group.signature(), std::move(members), /*closed=*/true);
}

ElementSet centralizer(const ElementSet& group, const ElementSet& sub,
                       const OracleCaps& caps) {
  require_group(group, "centralizer");
  require_quadratic(group, caps, "centralizer");
  if (sub.signature() != group.signature())
    throw PreconditionError("centralizer: signature mismatch");
  if (!std::includes(group.codes().begin(), group.codes().end(), sub.codes().begin(),
                     sub.codes().end()))
    throw PreconditionError("centralizer: sub is not contained in the group");
  Scan gs(group), ss(sub);
  const uint64_t n = gs.degree();
  std::vector<uint32_t> a(n), b(n);
  std::vector<TreeAutomorphism> members;
  for (size_t i = 0; i < gs.count(); ++i) {
    bool commutes = true;
    for (size_t j = 0; j < ss.count() && commutes; ++j) {
      gs.compose(gs.perm(i), ss.perm(j), a.data());
      gs.compose(ss.perm(j), gs.perm(i), b.data());
      commutes = std::equal(a.begin(), a.end(), b.begin());
    }
    if (commutes) members.push_back(group.members()[i]);
  }
  return ElementSet(group.signature(), std::move(members), /*closed=*/true);
}

int leaf_sign(const TreeAutomorphism& g) { return g.leaf_permutation().sign(); }

std::vector<TreeAutomorphism> find_generators(const ElementSet& group) {
  require_group(group, "find_generators");
  OracleCaps caps;
  caps.enumeration = std::max<uint64_t>(caps.enumeration,
                                        group.signature().full_order_u64().value_or(0));
  Scan scan(group);
  std::vector<TreeAutomorphism> out;
  for (size_t i : generator_indices(group, scan, caps)) out.push_back(group.members()[i]);
  return out;
}

std::pair<TreeAutomorphism, TreeAutomorphism> last_coordinate_pair(
    uint32_t root_arity, const TreeAutomorphism& f, const TreeAutomorphism& g) {
  if (f.signature() != g.signature())
    throw PreconditionError("last_coordinate_pair: signature mismatch");
  std::vector<TreeAutomorphism> fs(root_arity, TreeAutomorphism::identity(f.signature()));
  std::vector<TreeAutomorphism> gs = fs;
  fs.back() = f;
  gs.back() = g;
  return {TreeAutomorphism::assemble(0, fs), TreeAutomorphism::assemble(0, gs)};
}

}  // namespace wreath
