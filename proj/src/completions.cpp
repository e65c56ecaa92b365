#include "bca/completions.hpp"

#include <algorithm>

namespace bca {

// ---------------------------------------------------------------------------
// OrderedPartitionCursor
//
// The cursor keeps, for the current vector, how often each rank is used, how
// many distinct ranks occur and the largest rank. A prefix can be extended to
// a valid rank vector iff the number of unused ranks below its maximum does
// not exceed the number of positions still to fill.

OrderedPartitionCursor::OrderedPartitionCursor(std::size_t items)
    : ranks_(items, 0), counts_(items, 0) {
  if (items == 0)
    throw BadParameter("ordered partitions need at least one item");
  if (items > 255)
    throw TooLarge("ordered partition cursor", items, 255);
  counts_[0] = static_cast<std::uint8_t>(items);
  distinct_ = 1;
  top_ = 0;
}

bool OrderedPartitionCursor::next() {
  const std::size_t m = ranks_.size();
  for (std::size_t i = m; i-- > 0;) {
    const std::size_t old = ranks_[i];
    if (--counts_[old] == 0)
      --distinct_;
    // Largest rank used by positions 0..i-1, or -1 when there are none.
    long prefix_top = -1;
    for (long v = static_cast<long>(top_); v >= 0; --v)
      if (counts_[static_cast<std::size_t>(v)] != 0) {
        prefix_top = v;
        break;
      }
    const std::size_t remaining = m - 1 - i;
    for (std::size_t v = old + 1; v < m; ++v) {
      const std::size_t distinct = distinct_ + (counts_[v] == 0 ? 1 : 0);
      const long top = std::max(prefix_top, static_cast<long>(v));
      const std::size_t gaps = static_cast<std::size_t>(top + 1) - distinct;
      if (gaps <= remaining) {
        ranks_[i] = static_cast<std::uint8_t>(v);
        if (counts_[v]++ == 0)
          ++distinct_;
        top_ = static_cast<std::size_t>(top);
        fill_from(i + 1);
        return true;
      }
      if (static_cast<long>(v) > prefix_top)
        break;
    }
    top_ = prefix_top < 0 ? 0 : static_cast<std::size_t>(prefix_top);
  }
  return false;
}

void OrderedPartitionCursor::fill_from(std::size_t pos) {
  const std::size_t m = ranks_.size();
  for (std::size_t j = pos; j < m; ++j) {
    const std::size_t remaining = m - j;
    const std::size_t gaps = top_ + 1 - distinct_;
    std::size_t v = 0;
    if (gaps >= remaining)
      while (counts_[v] != 0)
        ++v;
    ranks_[j] = static_cast<std::uint8_t>(v);
    if (counts_[v]++ == 0)
      ++distinct_;
    top_ = std::max(top_, v);
  }
}

// ---------------------------------------------------------------------------
// Total preorders

TotalPreorderStream::TotalPreorderStream(GroundSet ground)
    : ground_(std::move(ground)), cursor_(ground_.size()) {}

std::optional<TotalPreorder> TotalPreorderStream::next() {
  if (done_)
    return std::nullopt;
  if (started_ && !cursor_.next()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return TotalPreorder::from_ranks(ground_, cursor_.ranks());
}

TotalPreorderStream enumerate_total_preorders(const GroundSet &ground, const Limits &limits) {
  if (ground.size() > limits.total_preorders_max_n)
    throw TooLarge("enumerate_total_preorders", ground.size(), limits.total_preorders_max_n);
  return TotalPreorderStream(ground);
}

// ---------------------------------------------------------------------------
// Completions

Quotient::Quotient(const Preorder &p) : ground(p.ground()), classes(indifference_classes(p)) {
  const auto c = classes.size();
  above.assign(c, 0);
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      const auto ra = static_cast<std::size_t>(std::countr_zero(classes[a].bits()));
      const auto rb = static_cast<std::size_t>(std::countr_zero(classes[b].bits()));
      if (p.strictly(ra, rb))
        above[b] |= bit(a);
    }
}

TotalPreorder Quotient::expand(std::span<const std::uint8_t> class_ranks) const {
  std::size_t top = 0;
  for (auto r : class_ranks)
    top = std::max<std::size_t>(top, r);
  std::vector<SubsetMask> blocks(top + 1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    blocks[class_ranks[c]] = blocks[class_ranks[c]] | classes[c];
  return TotalPreorder(ground, std::move(blocks));
}

namespace {

class CompletionWalker {
public:
  CompletionWalker(const Quotient &q, const Limits &limits,
                   const std::function<void(std::span<const std::uint8_t>)> &visit)
      : q_(q), limits_(limits), visit_(visit), ranks_(q.size(), 0), counts_(q.size(), 0),
        below_(q.size(), 0) {
    for (std::size_t c = 0; c < q.size(); ++c)
      SubsetMask(q.above[c]).for_each([&](std::size_t a) { below_[a] |= bit(c); });
  }

  void run() { assign(0); }

private:
  void assign(std::size_t c) {
    const std::size_t m = q_.size();
    if (c == m) {
      if (++produced_ > limits_.completions_max_count)
        throw TooLarge("completion enumeration", produced_, limits_.completions_max_count);
      visit_(ranks_);
      return;
    }
    // Ranks already fixed for earlier classes bound this one from both sides.
    const Mask earlier = low_bits(c);
    std::size_t lo = 0;
    std::size_t hi = m - 1;
    SubsetMask(q_.above[c] & earlier).for_each([&](std::size_t a) {
      lo = std::max<std::size_t>(lo, ranks_[a] + 1U);
    });
    bool empty_range = false;
    SubsetMask(below_[c] & earlier).for_each([&](std::size_t b) {
      if (ranks_[b] == 0)
        empty_range = true;
      else
        hi = std::min<std::size_t>(hi, ranks_[b] - 1U);
    });
    if (empty_range)
      return;
    const std::size_t remaining = m - 1 - c;
    for (std::size_t v = lo; v <= hi; ++v) {
      const std::size_t distinct = distinct_ + (counts_[v] == 0 ? 1 : 0);
      const long top = std::max(top_, static_cast<long>(v));
      if (static_cast<std::size_t>(top + 1) - distinct > remaining) {
        if (static_cast<long>(v) > top_)
          break;
        continue;
      }
      const long saved_top = top_;
      ranks_[c] = static_cast<std::uint8_t>(v);
      if (counts_[v]++ == 0)
        ++distinct_;
      top_ = top;
      assign(c + 1);
      if (--counts_[v] == 0)
        --distinct_;
      top_ = saved_top;
    }
  }

  const Quotient &q_;
  const Limits &limits_;
  const std::function<void(std::span<const std::uint8_t>)> &visit_;
  std::vector<std::uint8_t> ranks_;
  std::vector<std::size_t> counts_;
  std::vector<Mask> below_;
  std::size_t distinct_ = 0;
  long top_ = -1;
  std::size_t produced_ = 0;
};

// down[a] = classes weakly below class a under the given class ranks.
std::vector<Mask> class_down_sets(std::span<const std::uint8_t> ranks) {
  std::vector<Mask> down(ranks.size(), 0);
  for (std::size_t a = 0; a < ranks.size(); ++a)
    for (std::size_t b = 0; b < ranks.size(); ++b)
      if (ranks[a] <= ranks[b])
        down[a] |= bit(b);
  return down;
}

bool contained_in(const std::vector<Mask> &small, const std::vector<Mask> &large) {
  for (std::size_t a = 0; a < small.size(); ++a)
    if ((small[a] & ~large[a]) != 0)
      return false;
  return true;
}

} // namespace

void for_each_completion(const Quotient &q, const Limits &limits,
                         const std::function<void(std::span<const std::uint8_t>)> &visit) {
  if (q.size() > 255)
    throw TooLarge("completion enumeration classes", q.size(), 255);
  CompletionWalker(q, limits, visit).run();
}

CompletionStream enumerate_completions(const Preorder &base, CompletionFilter filter,
                                       const Limits &limits) {
  const Quotient q(base);
  std::vector<std::vector<std::uint8_t>> all;
  for_each_completion(q, limits, [&](std::span<const std::uint8_t> r) {
    if (filter == CompletionFilter::strict) {
      // One class per block: no incomparable pair shares a block.
      std::vector<std::uint8_t> sorted(r.begin(), r.end());
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return;
    }
    all.emplace_back(r.begin(), r.end());
  });

  std::vector<TotalPreorder> items;
  if (filter == CompletionFilter::maximal) {
    std::vector<std::vector<Mask>> downs;
    downs.reserve(all.size());
    std::vector<std::size_t> blocks;
    for (const auto &r : all) {
      downs.push_back(class_down_sets(r));
      blocks.push_back(static_cast<std::size_t>(*std::max_element(r.begin(), r.end())) + 1);
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < all.size() && maximal; ++j)
        // A proper superset of a total preorder merges blocks, so has fewer.
        if (blocks[j] < blocks[i] && contained_in(downs[i], downs[j]))
          maximal = false;
      if (maximal)
        items.push_back(q.expand(all[i]));
    }
  } else {
    items.reserve(all.size());
    for (const auto &r : all)
      items.push_back(q.expand(r));
  }
  return CompletionStream(base, filter, std::move(items));
}

bool is_maximal_completion(const TotalPreorder &candidate, const Preorder &base) {
  if (!is_completion(candidate, base))
    throw NotACompletion();
  const Quotient q(base);
  std::vector<std::uint8_t> cand_ranks(q.size());
  for (std::size_t c = 0; c < q.size(); ++c)
    cand_ranks[c] = static_cast<std::uint8_t>(
        candidate.rank_of(static_cast<std::size_t>(std::countr_zero(q.classes[c].bits()))));
  const auto cand_down = class_down_sets(cand_ranks);
  bool maximal = true;
  for_each_completion(q, Limits{}, [&](std::span<const std::uint8_t> r) {
    if (!maximal || std::equal(r.begin(), r.end(), cand_ranks.begin()))
      return;
    if (contained_in(cand_down, class_down_sets(r)))
      maximal = false;
  });
  return maximal;
}

TotalPreorder canonical_completion(const Preorder &base) {
  return TotalPreorder(base.ground(), layers(base));
}

std::vector<Preorder> enumerate_preorders(const GroundSet &ground, const Limits &limits) {
  const auto n = ground.size();
  if (n > limits.preorders_max_n)
    throw TooLarge("enumerate_preorders", n, limits.preorders_max_n);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        cells.emplace_back(i, j);
  std::vector<Preorder> out;
  const std::uint64_t patterns = std::uint64_t{1} << cells.size();
  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    std::vector<Mask> rows(n);
    for (std::size_t i = 0; i < n; ++i)
      rows[i] = bit(i);
    for (std::size_t c = 0; c < cells.size(); ++c)
      if ((pattern >> c) & 1U)
        rows[cells[c].first] |= bit(cells[c].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      SubsetMask(rows[i]).for_each([&](std::size_t j) {
        if ((rows[j] & ~rows[i]) != 0)
          transitive = false;
      });
    if (transitive)
      out.push_back(Preorder::from_relation(Relation(ground, std::move(rows))));
  }
  return out;
}

} // namespace bca
