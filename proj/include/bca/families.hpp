#ifndef BCA_FAMILIES_HPP
#define BCA_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bca/order.hpp"

namespace bca {

// Label conventions, kept stable for fixtures and DOT output:
//   subsets      "{}", "{x}", "{x,y}"   over Z = {x,y,z,u,v,w} in that order
//   partitions   "x|yz"                cells by smallest member, members sorted
//   words        "ab"                  over the letters a, b, c, ...
//   grid points  "(i,j)"               1-based, row-major
//   everything else x1 ... xn

/// A ⊇ B on all 2^z subsets, indexed by their bitmask. z ≤ 6.
Preorder containment_order(std::size_t z);
/// Blocks by decreasing subset size.
TotalPreorder cardinality_ordering(std::size_t z);

/// Refinement order on the partitions of a z-set (coarser is higher),
/// partitions listed by restricted growth string. z ≤ 5.
Preorder refinement_order(std::size_t z);
/// Blocks by increasing number of cells.
TotalPreorder cell_count_ordering(std::size_t z);

/// x ≿ y iff y is an initial substring of x, over all words of length 1..k
/// on `alphabet` letters, listed by length and then lexicographically.
Preorder word_prefix_order(std::size_t alphabet, std::size_t k);
/// Blocks by decreasing word length.
TotalPreorder word_length_ordering(std::size_t alphabet, std::size_t k);

/// Product order on {1..m}². m ≤ 8.
Preorder coordinatewise_order(std::size_t m);
/// Blocks by decreasing coordinate sum.
TotalPreorder sum_ordering(std::size_t m);

/// Zigzag x2 > x1, x2 > x3, x4 > x3, ... on x1..xk. k even, k ≥ 4.
Preorder fence(std::size_t k);
/// Tops x2, x4, ..., bottoms x1, x3, ...; the i-th bottom (0-based) lies
/// below every top except top (i+1) mod k/2. For k = 6 these are the fence
/// covers plus x6 > x1. k even, k ≥ 4.
Preorder crown(std::size_t k);
/// The two-block ordering tops | bottoms shared by fence(k) and crown(k).
TotalPreorder tops_over_bottoms(std::size_t k);

/// x1 > x2 > ... > xn.
Preorder chain(std::size_t n);
Preorder equality(std::size_t n);
Preorder indifferent(std::size_t n);

/// Closure of a relation containing each off-diagonal pair independently
/// with probability `density`. Deterministic in `seed`.
Preorder random_preorder(std::size_t n, std::uint64_t seed, double density = 0.3);

enum class FamilyKind {
  containment,
  refinement,
  word_prefix,
  coordinatewise,
  fence,
  crown,
  chain,
  equality,
  indifferent
};

std::string_view to_string(FamilyKind k);
std::optional<FamilyKind> family_kind_from_string(std::string_view s);

/// `size` is z, k, m or n depending on the kind; `alphabet` is used by
/// word_prefix only.
struct FamilySpec {
  FamilyKind kind = FamilyKind::chain;
  std::size_t size = 1;
  std::size_t alphabet = 0;
};

/// Throws BadParameter or TooLarge on out-of-range parameters.
Preorder generate(const FamilySpec &spec);

/// Closed-form best complete approximation of the family member.
TotalPreorder expected_bca(const FamilySpec &spec);

/// As above, additionally requiring the ordering to live on the ground set
/// of `relation`; throws ParameterMismatch otherwise.
TotalPreorder expected_bca(const FamilySpec &spec, const Preorder &relation);

} // namespace bca

#endif
