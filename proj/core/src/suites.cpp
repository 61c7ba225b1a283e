#include "wreath/suites.hpp"

#include <chrono>

#include "wreath/decompose.hpp"
#include "wreath/errors.hpp"
#include "wreath/membership.hpp"
#include "wreath/oracle.hpp"
#include "wreath/random.hpp"

namespace wreath {

namespace {

using Clock = std::chrono::steady_clock;

void add_check(SuiteReport& rep, std::string name, std::string expected,
               std::string actual) {
  const bool pass = expected == actual;
  rep.checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

void add_count(SuiteReport& rep, std::string name, uint64_t expected, uint64_t actual) {
  add_check(rep, std::move(name), std::to_string(expected), std::to_string(actual));
}

void add_scope(SuiteReport& rep, const WreathSignature& sig, const SuiteOptions& opts,
               const std::string& note) {
  std::string s = "signature=" + sig.render() + "; caps=" +
                  std::to_string(opts.caps.enumeration) + "/" +
                  std::to_string(opts.caps.quadratic) + "; seed=" +
                  std::to_string(opts.seed) + "; samples=" + std::to_string(opts.samples) +
                  "; " + note;
  rep.checks.push_back({"scope", s, s, true});
}

mpz_class mpz_count(uint64_t n) { return mpz_class(static_cast<unsigned long>(n)); }

// ---------------------------------------------------------------------------

void suite_orders(SuiteReport& rep, const WreathSignature& sig, const SuiteOptions& opts) {
  add_scope(rep, sig, opts, "exhaustive enumeration per subgroup kind");
  const SubgroupSpec full_spec(SubgroupKind::full, sig);
  const ElementSet full = enumerate(full_spec, opts.caps);
  add_check(rep, "orders.full.count", subgroup_order(full_spec).get_str(),
            mpz_count(full.size()).get_str());

  const ElementSet derived = derived_closure(full, opts.caps);
  // |W'| = |W| / (p_1 ... p_k): the abelianization is the product of the
  // level groups.
  mpz_class ab = 1;
  for (uint32_t p : sig.arities()) ab *= p;
  add_check(rep, "orders.derived.count", mpz_class(subgroup_order(full_spec) / ab).get_str(),
            mpz_count(derived.size()).get_str());
  if (sig.is_binary()) {
    const SubgroupSpec dspec(SubgroupKind::derived, sig);
    add_check(rep, "orders.derived.formula", subgroup_order(dspec).get_str(),
              mpz_count(derived.size()).get_str());

    const SubgroupSpec aspec(SubgroupKind::sylow_a, sig);
    const ElementSet alt = enumerate(aspec, opts.caps);
    add_check(rep, "orders.sylow-a.count", subgroup_order(aspec).get_str(),
              mpz_count(alt.size()).get_str());
    add_count(rep, "orders.index.full-over-sylow-a", 2, full.size() / alt.size());

    if (sig.depth() >= 2) {
      const SubgroupSpec adspec(SubgroupKind::sylow_a_derived, sig);
      const ElementSet altd = derived_closure(alt, opts.caps);
      add_check(rep, "orders.sylow-a-derived.count", subgroup_order(adspec).get_str(),
                mpz_count(altd.size()).get_str());
    }
  }
}

void suite_membership(SuiteReport& rep, const WreathSignature& sig,
                      const SuiteOptions& opts) {
  const ElementSet full = enumerate(SubgroupSpec(SubgroupKind::full, sig), opts.caps);
  add_scope(rep, sig, opts,
            "pointwise predicate vs oracle over " + std::to_string(full.size()) +
                " elements");
  const ElementSet derived = derived_closure(full, opts.caps);

  uint64_t bad = 0;
  for (const auto& g : full.members())
    if (in_derived_wreath(g) != derived.contains(g)) ++bad;
  add_count(rep, "membership.derived-wreath.mismatches", 0, bad);

  if (!sig.is_binary()) return;

  bad = 0;
  for (const auto& g : full.members())
    if (in_symmetric_sylow_derived(g) != derived.contains(g)) ++bad;
  add_count(rep, "membership.symmetric-sylow-derived.mismatches", 0, bad);

  const ElementSet alt = enumerate(SubgroupSpec(SubgroupKind::sylow_a, sig), opts.caps);
  bad = 0;
  for (const auto& g : full.members())
    if (in_alternating_sylow(g) != alt.contains(g)) ++bad;
  add_count(rep, "membership.alternating-sylow.mismatches", 0, bad);

  bad = 0;
  for (const auto& g : full.members())
    if (in_alternating_sylow(g) != (leaf_sign(g) == 1)) ++bad;
  add_count(rep, "membership.alternating-sylow-vs-leaf-sign.mismatches", 0, bad);

  if (sig.depth() >= 2) {
    const ElementSet altd = derived_closure(alt, opts.caps);
    uint64_t bad_rec = 0, bad_idx = 0, bad_agree = 0;
    for (const auto& g : full.members()) {
      const bool rec = in_alternating_sylow_derived(g);
      const bool idx = in_alternating_sylow_derived_by_index(g);
      if (rec != altd.contains(g)) ++bad_rec;
      if (idx != altd.contains(g)) ++bad_idx;
      if (rec != idx) ++bad_agree;
    }
    add_count(rep, "membership.alternating-sylow-derived.mismatches", 0, bad_rec);
    add_count(rep, "membership.alternating-sylow-derived-by-index.mismatches", 0, bad_idx);
    add_count(rep, "membership.characterization-agreement.mismatches", 0, bad_agree);

    uint64_t chain = 0;
    for (const auto& g : full.members()) {
      if (in_alternating_sylow_derived(g) &&
          !(in_symmetric_sylow_derived(g) && in_alternating_sylow(g)))
        ++chain;
      if (in_symmetric_sylow_derived(g) && !in_alternating_sylow(g)) ++chain;
    }
    add_count(rep, "membership.chain-inclusions.violations", 0, chain);
  }
}

void suite_cw(SuiteReport& rep, const WreathSignature& sig, const SuiteOptions& opts) {
  const ElementSet full = enumerate(SubgroupSpec(SubgroupKind::full, sig), opts.caps);
  add_scope(rep, sig, opts,
            "commutator set vs derived closure over " + std::to_string(full.size()) +
                " elements");
  const ElementSet derived = derived_closure(full, opts.caps);
  const ElementSet raw = commutator_set(full, opts.caps);
  add_check(rep, "cw.full.commutator-set-equals-derived", "true",
            raw == derived ? "true" : "false");
  add_count(rep, "cw.full.width", sig.depth() == 1 ? 0 : 1,
            commutator_width(full, opts.caps));

  if (!sig.is_binary()) return;

  const ElementSet alt = enumerate(SubgroupSpec(SubgroupKind::sylow_a, sig), opts.caps);
  const ElementSet altd = derived_closure(alt, opts.caps);
  const ElementSet altraw = commutator_set(alt, opts.caps);
  add_check(rep, "cw.sylow-a.commutator-set-equals-derived", "true",
            altraw == altd ? "true" : "false");
  const uint32_t expected_alt_width = sig.depth() >= 3 ? 1 : 0;
  add_count(rep, "cw.sylow-a.width", expected_alt_width, commutator_width(alt, opts.caps));

  // B' = {[f,l] : f in the full group, l in the alternating sylow subgroup}
  if (full.size() <= 2048) {
    std::vector<TreeAutomorphism> mixed;
    mixed.reserve(full.size() * alt.size());
    for (const auto& f : full.members())
      for (const auto& l : alt.members()) mixed.push_back(commutator(f, l));
    const ElementSet mixed_set(sig, std::move(mixed), /*closed=*/false);
    add_check(rep, "cw.mixed-witness-commutators-equal-derived", "true",
              mixed_set == derived ? "true" : "false");
  }
}

void suite_squares(SuiteReport& rep, const WreathSignature& sig, const SuiteOptions& opts) {
  if (!sig.is_binary())
    throw PreconditionError("squares suite requires a binary signature");
  add_scope(rep, sig, opts, "exhaustive squares plus sampled draws");
  const ElementSet full = enumerate(SubgroupSpec(SubgroupKind::full, sig), opts.caps);

  uint64_t bad = 0;
  for (const auto& g : full.members())
    if (!in_symmetric_sylow_derived(g * g)) ++bad;
  add_count(rep, "squares.full.exhaustive.violations", 0, bad);

  if (sig.depth() >= 2) {
    bad = 0;
    for (const auto& g : full.members())
      if (in_alternating_sylow(g) && !in_alternating_sylow_derived(g * g)) ++bad;
    add_count(rep, "squares.sylow-a.exhaustive.violations", 0, bad);
  }

  Rng rng(opts.seed);
  const uint32_t top = std::max(opts.max_depth, sig.depth());
  for (uint32_t d = sig.depth(); d <= top; ++d) {
    const WreathSignature s = WreathSignature::uniform(2, d);
    uint64_t bad_full = 0, bad_alt = 0;
    for (uint64_t i = 0; i < opts.samples; ++i) {
      const TreeAutomorphism g = random_element(s, rng);
      if (!in_symmetric_sylow_derived(g * g)) ++bad_full;
      if (d >= 2) {
        const TreeAutomorphism h = random_member(SubgroupSpec(SubgroupKind::sylow_a, s), rng);
        if (!in_alternating_sylow_derived(h * h)) ++bad_alt;
      }
    }
    add_count(rep, "squares.sampled.depth=" + std::to_string(d) + ".violations", 0,
              bad_full + bad_alt);
  }
}

void suite_center(SuiteReport& rep, const WreathSignature& sig, const SuiteOptions& opts) {
  if (!sig.is_binary())
    throw PreconditionError("center suite requires a binary signature");
  add_scope(rep, sig, opts, "exhaustive centralizer scans");
  const uint32_t k = sig.depth();
  const ElementSet full = enumerate(SubgroupSpec(SubgroupKind::full, sig), opts.caps);
  const ElementSet zb = center(full, opts.caps);
  add_count(rep, "center.full.order", 2, zb.size());

  // the nontrivial central element activates exactly the bottom level
  PortraitBuilder b(sig);
  for (uint64_t v = 0; v < sig.vertex_count(k - 1); ++v) b.set(k - 1, v, 1);
  const TreeAutomorphism z = std::move(b).build();
  add_check(rep, "center.full.nontrivial-element", "present",
            zb.contains(z) ? "present" : "absent");

  const ElementSet alt = enumerate(SubgroupSpec(SubgroupKind::sylow_a, sig), opts.caps);
  const ElementSet zg = center(alt, opts.caps);
  const uint64_t expected_zg = k == 1 ? 1 : (k == 2 ? 4 : 2);
  add_count(rep, "center.sylow-a.order", expected_zg, zg.size());

  add_check(rep, "center.full.equals-centralizer-of-self", "true",
            centralizer(full, full, opts.caps) == zb ? "true" : "false");
}

void suite_decompose(SuiteReport& rep, const WreathSignature& sig,
                     const SuiteOptions& opts) {
  add_scope(rep, sig, opts, "exhaustive over oracle derived sets, then sampled draws");
  const ElementSet full = enumerate(SubgroupSpec(SubgroupKind::full, sig), opts.caps);
  const ElementSet derived = derived_closure(full, opts.caps);

  uint64_t ok = 0, spurious = 0;
  for (const auto& g : full.members()) {
    bool decomposed = false;
    try {
      decompose_derived_wreath(g);
      decomposed = true;
      ++ok;
    } catch (const PreconditionError&) {
    }
    if (decomposed != derived.contains(g)) ++spurious;
  }
  add_count(rep, "decompose.wreath.successes", derived.size(), ok);
  add_count(rep, "decompose.wreath.domain-mismatches", 0, spurious);

  if (sig.is_binary()) {
    uint64_t okb = 0;
    for (const auto& w : derived.members()) {
      try {
        decompose_symmetric_sylow_derived(w);
        ++okb;
      } catch (const PreconditionError&) {
      }
    }
    add_count(rep, "decompose.symmetric-sylow.successes", derived.size(), okb);

    if (sig.depth() >= 2) {
      const ElementSet alt = enumerate(SubgroupSpec(SubgroupKind::sylow_a, sig), opts.caps);
      const ElementSet altd = derived_closure(alt, opts.caps);
      uint64_t oka = 0;
      for (const auto& w : altd.members()) {
        try {
          decompose_alternating_sylow_derived(w);
          ++oka;
        } catch (const PreconditionError&) {
        }
      }
      add_count(rep, "decompose.alternating-sylow.successes", altd.size(), oka);
    }

    Rng rng(opts.seed);
    const uint32_t top = std::max(opts.max_depth, sig.depth());
    for (uint32_t d = std::max(2u, sig.depth()); d <= top; ++d) {
      const WreathSignature s = WreathSignature::uniform(2, d);
      uint64_t failures = 0;
      const auto started = Clock::now();
      for (uint64_t i = 0; i < opts.samples; ++i) {
        try {
          decompose_symmetric_sylow_derived(
              random_member(SubgroupSpec(SubgroupKind::derived, s), rng));
          decompose_alternating_sylow_derived(
              random_member(SubgroupSpec(SubgroupKind::sylow_a_derived, s), rng));
        } catch (const Error&) {
          ++failures;
        }
      }
      const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                          Clock::now() - started)
                          .count();
      add_count(rep, "decompose.sampled.depth=" + std::to_string(d) + ".failures", 0,
                failures);
      const int64_t mean_us =
          opts.samples ? us / static_cast<int64_t>(2 * opts.samples) : 0;
      add_check(rep, "decompose.sampled.depth=" + std::to_string(d) + ".mean-below-100ms",
                "true", mean_us < 100000 ? "true" : "false");
    }
  }
}

void suite_homomorphism(SuiteReport& rep, const WreathSignature& sig,
                        const SuiteOptions& opts) {
  uint64_t bad = 0;
  const auto check_pair = [&](const TreeAutomorphism& g, const TreeAutomorphism& h) {
    if ((g * h).leaf_permutation() !=
        g.leaf_permutation().then(h.leaf_permutation()))
      ++bad;
  };
  const auto order = sig.full_order_u64();
  if (order && *order <= opts.caps.quadratic) {
    const ElementSet full = enumerate(SubgroupSpec(SubgroupKind::full, sig), opts.caps);
    add_scope(rep, sig, opts,
              "exhaustive over " + std::to_string(full.size() * full.size()) + " pairs");
    for (const auto& g : full.members())
      for (const auto& h : full.members()) check_pair(g, h);
    add_count(rep, "homomorphism.exhaustive.mismatches", 0, bad);
  } else {
    add_scope(rep, sig, opts, "sampled pairs");
    Rng rng(opts.seed);
    for (uint64_t i = 0; i < opts.samples; ++i)
      check_pair(random_element(sig, rng), random_element(sig, rng));
    add_count(rep, "homomorphism.sampled.mismatches", 0, bad);
  }
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"name", c.name},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"pass", c.pass}});
  return nlohmann::json{{"suite", suite},
                        {"signature", std::vector<uint32_t>(signature.arities().begin(),
                                                            signature.arities().end())},
                        {"checks", checks_json},
                        {"elapsed_ms", elapsed_ms}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "orders", "membership", "cw", "squares", "center", "decompose", "homomorphism"};
  return names;
}

SuiteReport run_suite(const std::string& name, const WreathSignature& sig,
                      const SuiteOptions& opts) {
  SuiteReport rep{name, sig, {}, 0};
  const auto started = Clock::now();
  if (name == "orders") suite_orders(rep, sig, opts);
  else if (name == "membership") suite_membership(rep, sig, opts);
  else if (name == "cw") suite_cw(rep, sig, opts);
  else if (name == "squares") suite_squares(rep, sig, opts);
  else if (name == "center") suite_center(rep, sig, opts);
  else if (name == "decompose") suite_decompose(rep, sig, opts);
  else if (name == "homomorphism") suite_homomorphism(rep, sig, opts);
  else throw ParseError("unknown verification suite '" + name + "'");
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
  return rep;
}

}  // namespace wreath
