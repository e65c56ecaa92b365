#ifndef BCA_INDEX_HPP
#define BCA_INDEX_HPP

#include <cstddef>
#include <span>

#include "bca/bigcount.hpp"
#include "bca/completions.hpp"
#include "bca/limits.hpp"
#include "bca/order.hpp"

namespace bca {

/// 2^|x↓|, the number of subsets of the weak down-set of x.
BigCount score(std::size_t x, const Preorder &p);

/// Sum of the scores of all elements.
BigCount index_total(const TotalPreorder &p);

/// Index of the completion that puts quotient class c in block ranks[c].
Wide index_of_class_ranks(const Quotient &q, std::span<const std::uint8_t> ranks);

/// Largest index over all completions of p. Since properly enlarging a total
/// preorder strictly raises its index, this is also the largest index over
/// the maximal completions.
BigCount index_general(const Preorder &p, const Limits &limits = {});

/// Σ_x 2^-|x↑| over strict up-sets, so that index_total(p) = 2^n · psi(p).
DyadicRational psi(const TotalPreorder &p);

/// f(n1,...,nk) = n1 + Σ_{i≥2} ni · 2^-(n1+...+n(i-1)). Throws EmptySequence,
/// and BadParameter on a zero entry.
DyadicRational f_layers(std::span<const std::size_t> sizes);

} // namespace bca

#endif
