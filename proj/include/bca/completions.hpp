#ifndef BCA_COMPLETIONS_HPP
#define BCA_COMPLETIONS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bca/limits.hpp"
#include "bca/order.hpp"

namespace bca {

/// Walks the rank vectors of every ordered set partition of `items` objects
/// in lexicographic order, starting from the all-zero vector (one block).
/// A rank vector assigns each object a block index; the used indices always
/// form a prefix 0..k-1.
class OrderedPartitionCursor {
public:
  explicit OrderedPartitionCursor(std::size_t items);

  std::span<const std::uint8_t> ranks() const { return ranks_; }
  std::size_t block_count() const { return top_ + 1; }

  /// Advances to the next rank vector; false once the sequence is exhausted.
  bool next();

private:
  void fill_from(std::size_t pos);

  std::vector<std::uint8_t> ranks_;
  std::vector<std::uint8_t> counts_;
  std::size_t distinct_ = 0;
  std::size_t top_ = 0;
};

/// Single-pass stream over all total preorders of a ground set.
class TotalPreorderStream {
public:
  explicit TotalPreorderStream(GroundSet ground);

  std::optional<TotalPreorder> next();

private:
  GroundSet ground_;
  OrderedPartitionCursor cursor_;
  bool started_ = false;
  bool done_ = false;
};

/// Throws TooLarge beyond Limits::total_preorders_max_n.
TotalPreorderStream enumerate_total_preorders(const GroundSet &ground,
                                              const Limits &limits = {});

/// Indifference classes of a preorder with the strict order between them.
struct Quotient {
  GroundSet ground;
  std::vector<SubsetMask> classes;
  /// above[c]: bitmask over class indices strictly above class c.
  std::vector<Mask> above;

  explicit Quotient(const Preorder &p);

  std::size_t size() const { return classes.size(); }

  /// Total preorder placing class c in block class_ranks[c].
  TotalPreorder expand(std::span<const std::uint8_t> class_ranks) const;
};

/// Calls `visit` with the class-rank vector of every completion, in
/// lexicographic order. Throws TooLarge once more than
/// Limits::completions_max_count completions have been produced.
void for_each_completion(const Quotient &q, const Limits &limits,
                         const std::function<void(std::span<const std::uint8_t>)> &visit);

enum class CompletionFilter { all, maximal, strict };

/// Materialized, immutable list of completions of a base preorder.
class CompletionStream {
public:
  CompletionStream(Preorder base, CompletionFilter filter, std::vector<TotalPreorder> items)
      : base_(std::move(base)), filter_(filter), items_(std::move(items)) {}

  const Preorder &base() const { return base_; }
  CompletionFilter filter() const { return filter_; }
  const std::vector<TotalPreorder> &items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const TotalPreorder &operator[](std::size_t i) const { return items_[i]; }

private:
  Preorder base_;
  CompletionFilter filter_;
  std::vector<TotalPreorder> items_;
};

/// Completions of `base` in lexicographic order of their class-rank vectors.
/// `maximal` post-filters by pairwise containment; `strict` keeps those that
/// put no two incomparable elements in one block.
CompletionStream enumerate_completions(const Preorder &base, CompletionFilter filter,
                                       const Limits &limits = {});

/// Blocks are the iterated maximal layers of `base`.
TotalPreorder canonical_completion(const Preorder &base);

/// Every preorder on the ground set, in increasing order of the off-diagonal
/// bit pattern (row-major, diagonal skipped). Guarded by
/// Limits::preorders_max_n.
std::vector<Preorder> enumerate_preorders(const GroundSet &ground, const Limits &limits = {});

} // namespace bca

#endif
