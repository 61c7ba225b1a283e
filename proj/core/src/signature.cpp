#include "wreath/signature.hpp"

#include <limits>
#include <sstream>

#include "wreath/errors.hpp"

namespace wreath {

namespace {
// Portraits are dense; keep trees at a size where a single element is
// comfortably allocatable.
constexpr uint64_t kMaxLabelSlots = uint64_t{1} << 26;
}  // namespace

WreathSignature::WreathSignature(std::vector<uint32_t> arities) {
  if (arities.empty()) throw PreconditionError("signature depth must be >= 1");
  auto data = std::make_shared<Data>();
  data->binary = true;
  for (uint32_t p : arities) {
    if (p < 2) throw PreconditionError("signature arities must be >= 2");
    if (p != 2) data->binary = false;
  }
  data->arities = std::move(arities);

  const size_t k = data->arities.size();
  data->vertex_counts.resize(k + 1);
  data->label_offsets.resize(k + 1);
  data->vertex_counts[0] = 1;
  data->label_offsets[0] = 0;
  for (size_t l = 0; l < k; ++l) {
    data->label_offsets[l + 1] = data->label_offsets[l] + data->vertex_counts[l];
    const uint64_t next = data->vertex_counts[l] * data->arities[l];
    if (next > kMaxLabelSlots || data->label_offsets[l + 1] > kMaxLabelSlots)
      throw PreconditionError("signature tree is too large");
    data->vertex_counts[l + 1] = next;
  }

  // Full group order and per-slot mixed-radix weights, while they fit u64.
  const uint64_t slots = data->label_offsets[k];
  uint64_t order = 1;
  bool fits = true;
  std::vector<uint32_t> radix(slots);
  for (size_t l = 0; l < k; ++l)
    for (uint64_t v = 0; v < data->vertex_counts[l]; ++v)
      radix[data->label_offsets[l] + v] = data->arities[l];
  for (uint64_t slot = 0; slot < slots && fits; ++slot) {
    if (order > std::numeric_limits<uint64_t>::max() / radix[slot]) fits = false;
    else order *= radix[slot];
  }
  if (fits) {
    data->full_order = order;
    data->slot_weights.resize(slots);
    uint64_t w = 1;
    for (uint64_t i = slots; i-- > 0;) {
      data->slot_weights[i] = w;
      w *= radix[i];  // cannot overflow: product of all radices fits
    }
  }
  data_ = std::move(data);
}

WreathSignature WreathSignature::uniform(uint32_t arity, uint32_t depth) {
  return WreathSignature(std::vector<uint32_t>(depth, arity));
}

WreathSignature WreathSignature::parse(const std::string& text) {
  std::vector<uint32_t> arities;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad signature component '" + part + "' in '" + text + "'");
    unsigned long v = std::stoul(part);
    if (v < 2 || v > std::numeric_limits<uint32_t>::max())
      throw ParseError("signature arity out of range in '" + text + "'");
    arities.push_back(static_cast<uint32_t>(v));
  }
  if (arities.empty()) throw ParseError("empty signature '" + text + "'");
  return WreathSignature(std::move(arities));
}

std::optional<uint32_t> WreathSignature::uniform_arity() const {
  uint32_t p = data_->arities[0];
  for (uint32_t q : data_->arities)
    if (q != p) return std::nullopt;
  return p;
}

std::optional<uint64_t> WreathSignature::full_order_u64() const {
  return data_->full_order;
}

std::string WreathSignature::render() const {
  std::string out;
  for (size_t i = 0; i < data_->arities.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(data_->arities[i]);
  }
  return out;
}

}  // namespace wreath
