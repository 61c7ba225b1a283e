#include "wreath/automorphism.hpp"

#include <algorithm>

#include "wreath/errors.hpp"

namespace wreath {

namespace {

bool all_single_digit(const WreathSignature& sig) {
  for (uint32_t p : sig.arities())
    if (p > 9) return false;
  return true;
}

void require_same_signature(const TreeAutomorphism& g, const TreeAutomorphism& h) {
  if (g.signature() != h.signature())
    throw PreconditionError("signature mismatch between operands");
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

uint32_t parse_label(std::string_view part, uint32_t arity, std::string_view level_text) {
  if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError("bad label '" + std::string(part) + "' in level '" +
                     std::string(level_text) + "'");
  uint64_t v = 0;
  for (char c : part) {
    v = v * 10 + static_cast<uint64_t>(c - '0');
    if (v >= arity)
      throw ParseError("label '" + std::string(part) + "' is not below arity " +
                       std::to_string(arity));
  }
  return static_cast<uint32_t>(v);
}

}  // namespace

TreeAutomorphism TreeAutomorphism::identity(WreathSignature sig) {
  std::vector<uint32_t> labels(sig.label_count(), 0);
  return TreeAutomorphism(std::move(sig), std::move(labels));
}

TreeAutomorphism TreeAutomorphism::parse(const WreathSignature& sig, std::string_view text) {
  auto levels = split(text, '|');
  if (levels.size() != sig.depth())
    throw ParseError("expected " + std::to_string(sig.depth()) + " levels, got " +
                     std::to_string(levels.size()));
  std::vector<uint32_t> labels(sig.label_count());
  for (uint32_t l = 0; l < sig.depth(); ++l) {
    const uint64_t count = sig.vertex_count(l);
    const uint32_t arity = sig.arity(l);
    uint32_t* out = labels.data() + sig.label_offset(l);
    auto parts = split(levels[l], ',');
    if (parts.size() == count) {
      for (uint64_t v = 0; v < count; ++v) out[v] = parse_label(parts[v], arity, levels[l]);
    } else if (parts.size() == 1 && levels[l].size() == count) {
      // bare digit form
      for (uint64_t v = 0; v < count; ++v)
        out[v] = parse_label(levels[l].substr(v, 1), arity, levels[l]);
    } else {
      throw ParseError("level '" + std::string(levels[l]) + "' does not hold " +
                       std::to_string(count) + " labels");
    }
  }
  return TreeAutomorphism(sig, std::move(labels));
}

TreeAutomorphism TreeAutomorphism::assemble(uint32_t root_label,
                                            std::span<const TreeAutomorphism> sections) {
  if (sections.empty()) throw PreconditionError("assemble needs at least one section");
  const WreathSignature& base = sections.front().signature();
  for (const auto& s : sections)
    if (s.signature() != base) throw PreconditionError("assemble: mixed section signatures");
  const uint32_t p = static_cast<uint32_t>(sections.size());
  if (p < 2) throw PreconditionError("assemble: root arity must be >= 2");
  if (root_label >= p) throw PreconditionError("assemble: root label out of range");

  std::vector<uint32_t> arities;
  arities.reserve(base.depth() + 1);
  arities.push_back(p);
  for (uint32_t a : base.arities()) arities.push_back(a);
  WreathSignature sig{std::move(arities)};

  std::vector<uint32_t> labels(sig.label_count());
  labels[0] = root_label;
  for (uint32_t l = 0; l < base.depth(); ++l) {
    uint32_t* out = labels.data() + sig.label_offset(l + 1);
    const uint64_t chunk = base.vertex_count(l);
    for (uint32_t c = 0; c < p; ++c) {
      auto src = sections[c].level_labels(l);
      std::copy(src.begin(), src.end(), out + c * chunk);
    }
  }
  return TreeAutomorphism(std::move(sig), std::move(labels));
}

bool TreeAutomorphism::is_identity() const {
  return std::all_of(labels_.begin(), labels_.end(), [](uint32_t v) { return v == 0; });
}

std::string TreeAutomorphism::render() const {
  const bool digits = all_single_digit(sig_);
  std::string out;
  for (uint32_t l = 0; l < sig_.depth(); ++l) {
    if (l) out += '|';
    auto level = level_labels(l);
    for (uint64_t v = 0; v < level.size(); ++v) {
      if (digits) {
        out += static_cast<char>('0' + level[v]);
      } else {
        if (v) out += ',';
        out += std::to_string(level[v]);
      }
    }
  }
  return out;
}

std::vector<uint64_t> TreeAutomorphism::vertex_images(uint32_t level) const {
  std::vector<uint64_t> img{0};
  for (uint32_t l = 0; l < level; ++l) {
    const uint32_t p = sig_.arity(l);
    const uint32_t* lab = labels_.data() + sig_.label_offset(l);
    std::vector<uint64_t> next(sig_.vertex_count(l + 1));
    for (uint64_t v = 0; v < img.size(); ++v) {
      const uint32_t t = lab[v];
      for (uint32_t c = 0; c < p; ++c)
        next[v * p + c] = img[v] * p + (c + t) % p;
    }
    img = std::move(next);
  }
  return img;
}

TreeAutomorphism operator*(const TreeAutomorphism& g, const TreeAutomorphism& h) {
  require_same_signature(g, h);
  const WreathSignature& sig = g.sig_;
  std::vector<uint32_t> labels(sig.label_count());
  // (g*h) has label_g(v) + label_h(g(v)) at vertex v; walk g's vertex
  // images level by level.
  std::vector<uint64_t> img{0};
  for (uint32_t l = 0; l < sig.depth(); ++l) {
    const uint32_t p = sig.arity(l);
    const uint64_t off = sig.label_offset(l);
    const uint32_t* glab = g.labels_.data() + off;
    const uint32_t* hlab = h.labels_.data() + off;
    uint32_t* out = labels.data() + off;
    for (uint64_t v = 0; v < img.size(); ++v) out[v] = (glab[v] + hlab[img[v]]) % p;
    if (l + 1 < sig.depth()) {
      std::vector<uint64_t> next(sig.vertex_count(l + 1));
      for (uint64_t v = 0; v < img.size(); ++v) {
        const uint32_t t = glab[v];
        for (uint32_t c = 0; c < p; ++c)
          next[v * p + c] = img[v] * p + (c + t) % p;
      }
      img = std::move(next);
    }
  }
  return TreeAutomorphism(sig, std::move(labels));
}

TreeAutomorphism multiply(const TreeAutomorphism& g, const TreeAutomorphism& h) {
  return g * h;
}

TreeAutomorphism TreeAutomorphism::inverse() const {
  // (g^-1) carries -label_g(v) at vertex g(v).
  std::vector<uint32_t> labels(sig_.label_count());
  std::vector<uint64_t> img{0};
  for (uint32_t l = 0; l < sig_.depth(); ++l) {
    const uint32_t p = sig_.arity(l);
    const uint64_t off = sig_.label_offset(l);
    const uint32_t* lab = labels_.data() + off;
    uint32_t* out = labels.data() + off;
    for (uint64_t v = 0; v < img.size(); ++v) out[img[v]] = (p - lab[v]) % p;
    if (l + 1 < sig_.depth()) {
      std::vector<uint64_t> next(sig_.vertex_count(l + 1));
      for (uint64_t v = 0; v < img.size(); ++v) {
        const uint32_t t = lab[v];
        for (uint32_t c = 0; c < p; ++c)
          next[v * p + c] = img[v] * p + (c + t) % p;
      }
      img = std::move(next);
    }
  }
  return TreeAutomorphism(sig_, std::move(labels));
}

TreeAutomorphism commutator(const TreeAutomorphism& a, const TreeAutomorphism& b) {
  return a * b * a.inverse() * b.inverse();
}

TreeAutomorphism conjugate(const TreeAutomorphism& a, const TreeAutomorphism& b) {
  return b * a * b.inverse();
}

TreeAutomorphism TreeAutomorphism::section(uint32_t level, uint64_t pos) const {
  if (level >= sig_.depth() || pos >= sig_.vertex_count(level))
    throw PreconditionError("section vertex out of range");
  if (level == 0) return *this;

  std::vector<uint32_t> arities(sig_.arities().begin() + level, sig_.arities().end());
  WreathSignature sub{std::move(arities)};
  std::vector<uint32_t> labels(sub.label_count());
  uint64_t first = pos;   // leftmost descendant position on each level
  uint64_t width = 1;
  for (uint32_t l = level; l < sig_.depth(); ++l) {
    const uint32_t* src = labels_.data() + sig_.label_offset(l);
    uint32_t* out = labels.data() + sub.label_offset(l - level);
    std::copy(src + first, src + first + width, out);
    first *= sig_.arity(l);
    width *= sig_.arity(l);
  }
  return TreeAutomorphism(std::move(sub), std::move(labels));
}

LevelIndexVector TreeAutomorphism::index_vector() const {
  LevelIndexVector out;
  out.counts.resize(sig_.depth());
  for (uint32_t l = 0; l < sig_.depth(); ++l) {
    uint64_t n = 0;
    for (uint32_t v : level_labels(l))
      if (v != 0) ++n;
    out.counts[l] = n;
  }
  return out;
}

LeafPermutation TreeAutomorphism::leaf_permutation() const {
  auto img = vertex_images(sig_.depth());
  std::vector<uint32_t> images(img.size());
  for (uint64_t i = 0; i < img.size(); ++i) images[i] = static_cast<uint32_t>(img[i]);
  return LeafPermutation(std::move(images));
}

uint64_t TreeAutomorphism::canonical_code() const {
  if (!sig_.full_order_u64())
    throw CapExceeded("canonical_code: group order exceeds 64 bits");
  uint64_t code = 0;
  for (uint64_t slot = 0; slot < labels_.size(); ++slot)
    code += labels_[slot] * sig_.slot_weight(slot);
  return code;
}

TreeAutomorphism TreeAutomorphism::from_canonical_code(const WreathSignature& sig,
                                                       uint64_t code) {
  auto order = sig.full_order_u64();
  if (!order) throw CapExceeded("from_canonical_code: group order exceeds 64 bits");
  if (code >= *order) throw PreconditionError("canonical code out of range");
  std::vector<uint32_t> labels(sig.label_count());
  for (uint64_t slot = 0; slot < labels.size(); ++slot) {
    const uint64_t w = sig.slot_weight(slot);
    labels[slot] = static_cast<uint32_t>(code / w);
    code %= w;
  }
  return TreeAutomorphism(sig, std::move(labels));
}

PortraitBuilder::PortraitBuilder(WreathSignature sig)
    : sig_(std::move(sig)), labels_(sig_.label_count(), 0) {}

void PortraitBuilder::set(uint32_t level, uint64_t pos, uint32_t label) {
  if (level >= sig_.depth() || pos >= sig_.vertex_count(level))
    throw PreconditionError("builder vertex out of range");
  if (label >= sig_.arity(level)) throw PreconditionError("builder label out of range");
  labels_[sig_.label_offset(level) + pos] = label;
}

uint32_t PortraitBuilder::get(uint32_t level, uint64_t pos) const {
  return labels_[sig_.label_offset(level) + pos];
}

TreeAutomorphism PortraitBuilder::build() && {
  return TreeAutomorphism(std::move(sig_), std::move(labels_));
}

}  // namespace wreath
