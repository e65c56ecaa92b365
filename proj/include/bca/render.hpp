#ifndef BCA_RENDER_HPP
#define BCA_RENDER_HPP

#include <string>

#include "bca/order.hpp"

namespace bca {

/// "x ~ a > a1 > a2"; with `unicode`, "x ∼ a ≻ a1 ≻ a2".
std::string format_total(const TotalPreorder &t, bool unicode = false);

/// "{a1,a2}" style listing of subset members by label.
std::string format_subset(const GroundSet &ground, SubsetMask s);

/// Graphviz digraph of the Hasse diagram: one node per indifference class,
/// edges from upper to lower class.
std::string to_dot(const Preorder &p, const std::string &name = "preorder");

} // namespace bca

#endif
