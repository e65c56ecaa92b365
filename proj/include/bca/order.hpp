#ifndef BCA_ORDER_HPP
#define BCA_ORDER_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bca/errors.hpp"

namespace bca {

using Mask = std::uint64_t;

/// Ground sets are capped at 64 elements so every row of a relation fits in a
/// single machine word.
inline constexpr std::size_t kMaxElements = 64;

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

inline constexpr Mask low_bits(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// A subset of ground-set indices.
class SubsetMask {
public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(Mask bits) : bits_(bits) {}
  SubsetMask(std::initializer_list<std::size_t> members);

  static SubsetMask of(std::span<const std::size_t> members);

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  /// Member indices in increasing order.
  std::vector<std::size_t> members() const;

  template <typename F> void for_each(F &&f) const {
    for (Mask m = bits_; m != 0; m &= m - 1)
      f(static_cast<std::size_t>(std::countr_zero(m)));
  }

  constexpr SubsetMask operator|(SubsetMask o) const {
    return SubsetMask(bits_ | o.bits_);
  }
  constexpr SubsetMask operator&(SubsetMask o) const {
    return SubsetMask(bits_ & o.bits_);
  }
  constexpr SubsetMask operator^(SubsetMask o) const {
    return SubsetMask(bits_ ^ o.bits_);
  }
  constexpr SubsetMask without(SubsetMask o) const {
    return SubsetMask(bits_ & ~o.bits_);
  }

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) {
    return a.bits_ <=> b.bits_;
  }

private:
  Mask bits_ = 0;
};

/// Labelled finite set of alternatives. Copies share the label storage.
class GroundSet {
public:
  explicit GroundSet(std::vector<std::string> labels);

  /// Labels `prefix1` ... `prefixN`.
  static GroundSet numbered(std::size_t n, std::string_view prefix = "x");

  std::size_t size() const { return labels_->size(); }
  const std::string &label(std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string> &labels() const { return *labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  SubsetMask full() const { return SubsetMask(low_bits(size())); }

  /// Labels of the members of `s`, in index order.
  std::vector<std::string> labels_of(SubsetMask s) const;

  friend bool operator==(const GroundSet &a, const GroundSet &b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Binary relation on a ground set stored as one bitmask row per element:
/// bit j of row i is set iff x_i ≿ x_j. No properties are assumed; use
/// validate_preorder to obtain a Preorder.
class Relation {
public:
  Relation(GroundSet ground, std::vector<Mask> rows);

  static Relation empty(GroundSet ground);
  static Relation identity(GroundSet ground);
  static Relation from_pairs(GroundSet ground,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs);

  const GroundSet &ground() const { return ground_; }
  std::size_t size() const { return rows_.size(); }
  bool holds(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1U; }
  Mask row(std::size_t i) const { return rows_[i]; }
  std::span<const Mask> rows() const { return rows_; }

  /// Number of ordered pairs in the relation.
  std::size_t pair_count() const;

  Relation with_reflexive_closure() const;
  Relation with_transitive_closure() const;

  friend bool operator==(const Relation &a, const Relation &b) {
    return a.rows_ == b.rows_ && a.ground_ == b.ground_;
  }

private:
  GroundSet ground_;
  std::vector<Mask> rows_;
};

struct PreorderCheck;

/// Reflexive and transitive relation. Only obtainable through validation or
/// through constructions that preserve both properties.
class Preorder {
public:
  /// Throws InvalidRelation with the full witness list.
  static Preorder from_relation(const Relation &rel);
  /// Reflexive-transitive closure of `rel`.
  static Preorder closure_of(const Relation &rel);
  static Preorder equality(GroundSet ground);
  static Preorder indifference(GroundSet ground);

  const Relation &relation() const { return rel_; }
  const GroundSet &ground() const { return rel_.ground(); }
  std::size_t size() const { return rel_.size(); }

  bool weakly(std::size_t i, std::size_t j) const { return rel_.holds(i, j); }
  bool strictly(std::size_t i, std::size_t j) const {
    return rel_.holds(i, j) && !rel_.holds(j, i);
  }
  bool indifferent(std::size_t i, std::size_t j) const {
    return rel_.holds(i, j) && rel_.holds(j, i);
  }
  bool comparable(std::size_t i, std::size_t j) const {
    return rel_.holds(i, j) || rel_.holds(j, i);
  }

  /// {y : x ≿ y}
  Mask weak_down(std::size_t x) const { return rel_.row(x); }
  /// {y : y ≿ x}
  Mask weak_up(std::size_t x) const;
  /// {y : x ≻ y}
  Mask strict_down(std::size_t x) const { return rel_.row(x) & ~weak_up(x); }
  /// {y : y ≻ x}
  Mask strict_up(std::size_t x) const { return weak_up(x) & ~rel_.row(x); }

  /// Strict up-set of every element, indexed by element.
  std::vector<Mask> strict_up_sets() const;

  friend bool operator==(const Preorder &a, const Preorder &b) {
    return a.rel_ == b.rel_;
  }

private:
  friend PreorderCheck validate_preorder(const Relation &rel);
  friend class TotalPreorder;
  friend Preorder restrict(const Preorder &p, SubsetMask y);
  friend Preorder dual(const Preorder &p);
  explicit Preorder(Relation rel) : rel_(std::move(rel)) {}

  Relation rel_;
};

struct PreorderCheck {
  std::optional<Preorder> preorder;
  ViolationList violations;

  bool ok() const { return preorder.has_value(); }
};

/// Returns the validated preorder, or every reflexivity witness (i,i,i) and
/// every transitivity witness (i,j,k) with i≿j, j≿k, not i≿k.
PreorderCheck validate_preorder(const Relation &rel);

/// Complete preorder held as an ordered partition; blocks()[0] is the top
/// indifference class.
class TotalPreorder {
public:
  /// Throws BadParameter unless the blocks are nonempty, disjoint and cover
  /// the ground set.
  TotalPreorder(GroundSet ground, std::vector<SubsetMask> blocks);

  /// ranks[i] is the block index of element i; ranks must use every value
  /// in 0..max exactly as a surjection.
  static TotalPreorder from_ranks(GroundSet ground, std::span<const std::uint8_t> ranks);

  const GroundSet &ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  const std::vector<SubsetMask> &blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t rank_of(std::size_t x) const;
  std::vector<std::uint8_t> ranks() const;
  std::vector<std::size_t> block_sizes() const;

  Preorder to_preorder() const;

  /// Strict up-set of every element.
  std::vector<Mask> strict_up_sets() const;
  /// Size of the weak down-set of x.
  std::size_t down_size(std::size_t x) const;

  friend bool operator==(const TotalPreorder &a, const TotalPreorder &b) {
    return a.blocks_ == b.blocks_ && a.ground_ == b.ground_;
  }
  /// Lexicographic on the rank vector; used for deterministic tie ordering.
  friend bool operator<(const TotalPreorder &a, const TotalPreorder &b);

private:
  GroundSet ground_;
  std::vector<SubsetMask> blocks_;
};

// ---------------------------------------------------------------------------
// Primitive operations

/// x ≻ y as a plain incidence matrix (irreflexive, so not a Preorder).
Relation asymmetric_part(const Preorder &p);
Relation symmetric_part(const Preorder &p);

/// The relation read upside down: x ≿' y iff y ≿ x.
Preorder dual(const Preorder &p);

/// ≿ ∩ (Y×Y) on a ground set consisting of Y's members (labels kept, index
/// order preserved). Throws EmptySubset.
Preorder restrict(const Preorder &p, SubsetMask y);

/// M(S,≿): members of S not strictly dominated inside S. Throws EmptySubset.
SubsetMask maximal_elements(const Preorder &p, SubsetMask s);
/// m(S,≿): members of S weakly above all of S. May be empty. Throws EmptySubset.
SubsetMask maximum_elements(const Preorder &p, SubsetMask s);

enum class Strictness { weak, strict };

SubsetMask down_set(const Preorder &p, std::size_t x, Strictness s);
SubsetMask up_set(const Preorder &p, std::size_t x, Strictness s);

/// Iterated maximal layers M1, M2, ... partitioning the ground set.
std::vector<SubsetMask> layers(const Preorder &p);

bool is_total(const Preorder &p);
/// Throws NotTotal naming the first incomparable pair.
TotalPreorder to_total(const Preorder &p);

/// ≿ ⊆ ≿* and ≻ ⊆ ≻*. Throws GroundMismatch.
bool is_completion(const TotalPreorder &candidate, const Preorder &base);

/// True iff no completion of `base` properly contains `candidate`; decided by
/// exhaustive comparison against every completion. Throws NotACompletion.
/// Defined alongside the completion enumerator.
bool is_maximal_completion(const TotalPreorder &candidate, const Preorder &base);

/// Indifference classes of p, ordered by smallest member.
std::vector<SubsetMask> indifference_classes(const Preorder &p);

struct HasseDiagram {
  std::vector<SubsetMask> classes;
  /// Member labels of each class in index order, joined by ",".
  std::vector<std::string> node_labels;
  /// (upper, lower) covering pairs between class indices, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Transitive reduction of the strict order induced on indifference classes.
HasseDiagram hasse_edges(const Preorder &p);

} // namespace bca

#endif
