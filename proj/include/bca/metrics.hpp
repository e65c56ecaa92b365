#ifndef BCA_METRICS_HPP
#define BCA_METRICS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "bca/bigcount.hpp"
#include "bca/limits.hpp"
#include "bca/order.hpp"

namespace bca {

/// Δ_S(≿,⊵) = |M(S,≿) △ M(S,⊵)| for one menu.
struct MenuDelta {
  SubsetMask menu;
  std::size_t delta = 0;
};

/// Throws GroundMismatch or EmptySubset.
MenuDelta delta_menu(const Preorder &p, const Preorder &q, SubsetMask menu);

/// Top-difference semimetric by its definition: the sum of Δ_S over every
/// nonempty menu S. Exponential; guarded by Limits::direct_max_n.
BigCount top_difference_direct(const Preorder &p, const Preorder &q,
                               const Limits &limits = {});

/// α_x(≿,⊵) = number of a ≠ x with neither a ≻ x nor a ▷ x.
struct AlphaProfile {
  std::vector<std::size_t> alpha;

  /// |B_x|: a ≻ x but not a ▷ x.
  std::vector<std::size_t> only_first;
  /// |C_x|: a ▷ x but not a ≻ x.
  std::vector<std::size_t> only_second;
};

AlphaProfile alpha_profile(const Preorder &p, const Preorder &q);

/// Closed-form top-difference distance, polynomial in n:
///   Σ_x [ 2^(n-|x↑▷|-1) + 2^(n-|x↑≻|-1) - 2^(α_x+1) ].
BigCount top_difference_fast(const Preorder &p, const Preorder &q);

/// Kemeny-Snell-Bogart distance |≿ △ ⊵|.
std::size_t ksb_distance(const Preorder &p, const Preorder &q);

/// Evaluates the closed-form distance from a fixed base to many candidates
/// described by their strict up-sets. Used by the exhaustive solvers.
class TopDifferenceKernel {
public:
  explicit TopDifferenceKernel(const Preorder &base);

  std::size_t size() const { return base_up_.size(); }

  /// candidate_up[x] = {a : a ▷ x} in the candidate.
  Wide evaluate(std::span<const Mask> candidate_up) const;

private:
  std::vector<Mask> base_up_;
  Wide base_part_ = 0;
};

struct Proposition1Report {
  /// min over all total preorders of d_KSB(base, ·)
  std::size_t min_distance = 0;
  std::vector<TotalPreorder> minimizers;
  std::vector<TotalPreorder> strict_completions;
  /// every strict completion attains the minimum
  bool holds = false;
};

/// Sweeps every total preorder on the ground set. Guarded by
/// Limits::proposition1_max_n.
Proposition1Report verify_proposition1(const Preorder &base, const Limits &limits = {});

} // namespace bca

#endif
