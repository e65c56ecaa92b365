#include "bca/index.hpp"

#include <algorithm>

namespace bca {

BigCount score(std::size_t x, const Preorder &p) {
  return BigCount::pow2(static_cast<std::size_t>(std::popcount(p.weak_down(x))));
}

BigCount index_total(const TotalPreorder &p) {
  Wide total = 0;
  std::size_t below = p.size();
  // Every member of a block has the block and everything under it below it.
  for (const auto &b : p.blocks()) {
    total += static_cast<Wide>(b.size()) << below;
    below -= b.size();
  }
  return BigCount::from_wide(total);
}

Wide index_of_class_ranks(const Quotient &q, std::span<const std::uint8_t> ranks) {
  std::vector<std::size_t> block_size(q.size() + 1, 0);
  for (std::size_t c = 0; c < q.size(); ++c)
    block_size[ranks[c]] += q.classes[c].size();
  // at_or_below[r] = elements in blocks r, r+1, ...
  std::vector<std::size_t> at_or_below(q.size() + 1, 0);
  for (std::size_t r = q.size(); r-- > 0;)
    at_or_below[r] = at_or_below[r + 1] + block_size[r];
  Wide total = 0;
  for (std::size_t r = 0; r < q.size() && block_size[r] != 0; ++r)
    total += static_cast<Wide>(block_size[r]) << at_or_below[r];
  return total;
}

BigCount index_general(const Preorder &p, const Limits &limits) {
  if (is_total(p))
    return index_total(to_total(p));
  const Quotient q(p);
  Wide best = 0;
  for_each_completion(q, limits, [&](std::span<const std::uint8_t> r) {
    best = std::max(best, index_of_class_ranks(q, r));
  });
  return BigCount::from_wide(best);
}

DyadicRational psi(const TotalPreorder &p) {
  const auto n = p.size();
  Wide num = 0;
  std::size_t above = 0;
  for (const auto &b : p.blocks()) {
    num += static_cast<Wide>(b.size()) << (n - above);
    above += b.size();
  }
  return DyadicRational(BigCount::from_wide(num), n);
}

DyadicRational f_layers(std::span<const std::size_t> sizes) {
  if (sizes.empty())
    throw EmptySequence();
  DyadicRational out;
  std::size_t prefix = 0;
  for (auto s : sizes) {
    if (s == 0)
      throw BadParameter("layer sizes must be positive");
    out += DyadicRational(BigCount(s), prefix);
    prefix += s;
  }
  return out;
}

} // namespace bca
