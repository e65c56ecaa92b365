#ifndef BCA_LIMITS_HPP
#define BCA_LIMITS_HPP

#include <cstddef>

namespace bca {

/// Size guards for the exponential operations. Exceeding one raises TooLarge;
/// nothing is ever truncated silently.
struct Limits {
  /// top_difference_direct sweeps 2^n menus.
  std::size_t direct_max_n = 20;
  /// bca_bruteforce and the total-preorder stream sweep Fubini(n) candidates.
  std::size_t total_preorders_max_n = 9;
  /// enumerate_preorders sweeps 2^(n(n-1)) relations.
  std::size_t preorders_max_n = 4;
  /// verify_proposition1 materializes every total preorder.
  std::size_t proposition1_max_n = 5;
  /// Completions are enumerated over indifference classes; this caps the
  /// number of yielded completions.
  std::size_t completions_max_count = 2'000'000;
  /// condition_star sweeps 2^|M_i| subsets of each layer.
  std::size_t condition_star_max_layer = 20;
};

} // namespace bca

#endif
