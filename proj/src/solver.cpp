#include "bca/solver.hpp"

#include <algorithm>
#include <map>

#include "bca/completions.hpp"
#include "bca/index.hpp"
#include "bca/metrics.hpp"

namespace bca {

std::string_view to_string(Method m) {
  switch (m) {
  case Method::bruteforce:
    return "bruteforce";
  case Method::duality:
    return "duality";
  case Method::theorem5:
    return "theorem5";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::strict:
    return "strict";
  case Verdict::weak:
    return "weak";
  case Verdict::fails:
    return "fails";
  }
  return "?";
}

namespace {

void fill_indices(ApproximationReport &r) {
  r.indices.clear();
  for (const auto &t : r.bca_set)
    r.indices.push_back(index_total(t));
}

} // namespace

ApproximationReport bca_bruteforce(const Preorder &base, const Limits &limits) {
  const auto n = base.size();
  if (n > limits.total_preorders_max_n)
    throw TooLarge("bca_bruteforce", n, limits.total_preorders_max_n);
  const TopDifferenceKernel kernel(base);
  OrderedPartitionCursor cursor(n);
  std::vector<Mask> block(n);
  std::vector<Mask> above(n);
  std::vector<Mask> up(n);
  Wide best = ~Wide{0};
  std::vector<std::vector<std::uint8_t>> argmin;
  do {
    const auto ranks = cursor.ranks();
    const auto blocks = cursor.block_count();
    std::fill(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(blocks), 0);
    for (std::size_t x = 0; x < n; ++x)
      block[ranks[x]] |= bit(x);
    Mask acc = 0;
    for (std::size_t r = 0; r < blocks; ++r) {
      above[r] = acc;
      acc |= block[r];
    }
    for (std::size_t x = 0; x < n; ++x)
      up[x] = above[ranks[x]];
    const Wide d = kernel.evaluate(up);
    if (d < best) {
      best = d;
      argmin.clear();
    }
    if (d == best)
      argmin.emplace_back(ranks.begin(), ranks.end());
  } while (cursor.next());

  ApproximationReport r;
  r.method = Method::bruteforce;
  r.distance = BigCount::from_wide(best);
  // The cursor walks rank vectors in lexicographic order already.
  for (const auto &ranks : argmin)
    r.bca_set.push_back(TotalPreorder::from_ranks(base.ground(), ranks));
  fill_indices(r);
  return r;
}

ApproximationReport bca_duality(const Preorder &base, const Limits &limits) {
  const Quotient q(base);
  Wide best = 0;
  std::vector<std::vector<std::uint8_t>> argmax;
  for_each_completion(q, limits, [&](std::span<const std::uint8_t> ranks) {
    const Wide v = index_of_class_ranks(q, ranks);
    if (v > best) {
      best = v;
      argmax.clear();
    }
    if (v == best)
      argmax.emplace_back(ranks.begin(), ranks.end());
  });

  ApproximationReport r;
  r.method = Method::duality;
  for (const auto &ranks : argmax)
    r.bca_set.push_back(q.expand(ranks));
  std::sort(r.bca_set.begin(), r.bca_set.end());
  r.distance = top_difference_fast(base, r.bca_set.front().to_preorder());
  fill_indices(r);
  return r;
}

ConditionStarReport condition_star(const Preorder &base, const Limits &limits) {
  const auto n = base.size();
  std::vector<Mask> strict_down(n);
  for (std::size_t x = 0; x < n; ++x)
    strict_down[x] = base.strict_down(x);
  std::map<Mask, BigCount> memo;
  auto restricted_index = [&](Mask y) -> const BigCount & {
    auto it = memo.find(y);
    if (it == memo.end())
      it = memo.emplace(y, index_general(restrict(base, SubsetMask(y)), limits)).first;
    return it->second;
  };

  ConditionStarReport report;
  const auto ls = layers(base);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const Mask layer = ls[i].bits();
    const auto width = ls[i].size();
    if (width > limits.condition_star_max_layer)
      throw TooLarge("condition_star layer", width, limits.condition_star_max_layer);
    // Proper nonempty submasks of the layer, in increasing order.
    std::vector<Mask> subsets;
    for (Mask s = (layer - 1) & layer; s != 0; s = (s - 1) & layer)
      subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end());
    for (Mask s : subsets) {
      Mask beaten_by_s = 0;
      Mask beaten_by_rest = 0;
      SubsetMask(s).for_each([&](std::size_t x) { beaten_by_s |= strict_down[x]; });
      SubsetMask(layer & ~s).for_each([&](std::size_t x) { beaten_by_rest |= strict_down[x]; });
      const Mask y = beaten_by_s & ~beaten_by_rest;
      ++report.checks;
      const auto sy = static_cast<std::size_t>(std::popcount(s) + std::popcount(y));
      BigCount bound = BigCount::pow2(sy);
      BigCount index = y == 0 ? BigCount(0) : restricted_index(y);
      if (index < bound)
        continue;
      if (index > bound)
        report.verdict = Verdict::fails;
      else if (report.verdict == Verdict::strict)
        report.verdict = Verdict::weak;
      report.witnesses.push_back({i + 1, SubsetMask(s), SubsetMask(y), std::move(index),
                                  std::move(bound)});
    }
  }
  return report;
}

std::optional<ApproximationReport> bca_theorem5(const Preorder &base, const Limits &limits) {
  const auto cs = condition_star(base, limits);
  if (cs.verdict == Verdict::fails)
    return std::nullopt;
  ApproximationReport r;
  r.method = Method::theorem5;
  r.complete = cs.verdict == Verdict::strict;
  r.bca_set.push_back(canonical_completion(base));
  r.distance = top_difference_fast(base, r.bca_set.front().to_preorder());
  fill_indices(r);
  return r;
}

CoveringRadius covering_radius(const GroundSet &ground, const Limits &limits) {
  const auto all = enumerate_preorders(ground, limits);
  std::optional<CoveringRadius> out;
  for (const auto &p : all) {
    auto d = bca_bruteforce(p, limits).distance;
    if (!out || d > out->radius)
      out = CoveringRadius{std::move(d), p};
  }
  return std::move(*out);
}

} // namespace bca
