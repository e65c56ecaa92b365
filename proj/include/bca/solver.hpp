#ifndef BCA_SOLVER_HPP
#define BCA_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "bca/bigcount.hpp"
#include "bca/limits.hpp"
#include "bca/order.hpp"

namespace bca {

enum class Method { bruteforce, duality, theorem5 };

std::string_view to_string(Method m);

/// Best complete approximations of a base preorder.
struct ApproximationReport {
  /// Sorted by rank vector; never reduced to a single representative.
  std::vector<TotalPreorder> bca_set;
  /// Common top-difference distance from the base to every member.
  BigCount distance;
  /// index_total of each member, parallel to bca_set.
  std::vector<BigCount> indices;
  Method method = Method::bruteforce;
  /// False when the method only certifies membership (weak Condition (*)).
  bool complete = true;
};

/// Sweeps every total preorder on the ground set and keeps the minimizers
/// of the closed-form distance. Guarded by Limits::total_preorders_max_n.
ApproximationReport bca_bruteforce(const Preorder &base, const Limits &limits = {});

/// Completions of largest index. Guarded by Limits::completions_max_count.
ApproximationReport bca_duality(const Preorder &base, const Limits &limits = {});

enum class Verdict { strict, weak, fails };

std::string_view to_string(Verdict v);

struct ConditionWitness {
  /// 1-based layer number.
  std::size_t layer = 0;
  SubsetMask s;
  SubsetMask y;
  BigCount index;
  BigCount bound;

  bool violates() const { return index > bound; }
};

struct ConditionStarReport {
  Verdict verdict = Verdict::strict;
  /// Every check that was not a strict inequality, in layer order and then
  /// by increasing subset mask.
  std::vector<ConditionWitness> witnesses;
  std::size_t checks = 0;
};

/// For each layer M and nonempty proper S ⊂ M, compares the index of the
/// restriction to Y = {y : some x∈S beats y, no x∈M∖S beats y} with
/// 2^(|S|+|Y|); an empty Y counts as index 0. Guarded by
/// Limits::condition_star_max_layer.
ConditionStarReport condition_star(const Preorder &base, const Limits &limits = {});

/// The canonical completion when Condition (*) holds, otherwise nullopt.
/// Under a weak verdict the report is marked incomplete: the canonical
/// completion is a best approximation but possibly not the only one.
std::optional<ApproximationReport> bca_theorem5(const Preorder &base, const Limits &limits = {});

struct CoveringRadius {
  BigCount radius;
  /// First preorder, in enumeration order, attaining the radius.
  Preorder witness;
};

/// Largest best-approximation distance over every preorder on the ground
/// set. Guarded by Limits::preorders_max_n.
CoveringRadius covering_radius(const GroundSet &ground, const Limits &limits = {});

} // namespace bca

#endif
