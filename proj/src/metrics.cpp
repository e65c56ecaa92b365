#include "bca/metrics.hpp"

#include <algorithm>

#include "bca/completions.hpp"

namespace bca {

namespace {

void require_same_ground(const Preorder &p, const Preorder &q) {
  if (!(p.ground() == q.ground()))
    throw GroundMismatch();
}

Wide pow2_wide(std::size_t e) { return Wide{1} << e; }

// Members of `menu` with no strict dominator inside `menu`.
Mask maximal_mask(std::span<const Mask> strict_up, Mask menu) {
  Mask out = 0;
  for (Mask m = menu; m != 0; m &= m - 1) {
    const auto x = static_cast<std::size_t>(std::countr_zero(m));
    if ((strict_up[x] & menu) == 0)
      out |= bit(x);
  }
  return out;
}

} // namespace

MenuDelta delta_menu(const Preorder &p, const Preorder &q, SubsetMask menu) {
  require_same_ground(p, q);
  const auto mp = maximal_elements(p, menu);
  const auto mq = maximal_elements(q, menu);
  return {menu, (mp ^ mq).size()};
}

BigCount top_difference_direct(const Preorder &p, const Preorder &q, const Limits &limits) {
  require_same_ground(p, q);
  const auto n = p.size();
  if (n > limits.direct_max_n)
    throw TooLarge("top_difference_direct", n, limits.direct_max_n);
  const auto up_p = p.strict_up_sets();
  const auto up_q = q.strict_up_sets();
  Wide total = 0;
  // The empty menu contributes nothing.
  const Mask last = low_bits(n);
  for (Mask menu = 1;; ++menu) {
    total += static_cast<unsigned>(
        std::popcount(maximal_mask(up_p, menu) ^ maximal_mask(up_q, menu)));
    if (menu == last)
      break;
  }
  return BigCount::from_wide(total);
}

AlphaProfile alpha_profile(const Preorder &p, const Preorder &q) {
  require_same_ground(p, q);
  const auto n = p.size();
  const auto up_p = p.strict_up_sets();
  const auto up_q = q.strict_up_sets();
  AlphaProfile out;
  out.alpha.resize(n);
  out.only_first.resize(n);
  out.only_second.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    // Strict up-sets never contain x itself.
    out.alpha[x] = n - 1 - static_cast<std::size_t>(std::popcount(up_p[x] | up_q[x]));
    out.only_first[x] = static_cast<std::size_t>(std::popcount(up_p[x] & ~up_q[x]));
    out.only_second[x] = static_cast<std::size_t>(std::popcount(up_q[x] & ~up_p[x]));
  }
  return out;
}

BigCount top_difference_fast(const Preorder &p, const Preorder &q) {
  require_same_ground(p, q);
  const auto up_q = q.strict_up_sets();
  return BigCount::from_wide(TopDifferenceKernel(p).evaluate(up_q));
}

std::size_t ksb_distance(const Preorder &p, const Preorder &q) {
  require_same_ground(p, q);
  std::size_t d = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    d += static_cast<std::size_t>(std::popcount(p.weak_down(i) ^ q.weak_down(i)));
  return d;
}

TopDifferenceKernel::TopDifferenceKernel(const Preorder &base)
    : base_up_(base.strict_up_sets()) {
  const auto n = base_up_.size();
  for (auto up : base_up_)
    base_part_ += pow2_wide(n - static_cast<std::size_t>(std::popcount(up)) - 1);
}

Wide TopDifferenceKernel::evaluate(std::span<const Mask> candidate_up) const {
  const auto n = base_up_.size();
  Wide plus = base_part_;
  Wide minus = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const auto up = candidate_up[x];
    plus += pow2_wide(n - static_cast<std::size_t>(std::popcount(up)) - 1);
    const auto alpha = n - 1 - static_cast<std::size_t>(std::popcount(up | base_up_[x]));
    minus += pow2_wide(alpha + 1);
  }
  return plus - minus;
}

Proposition1Report verify_proposition1(const Preorder &base, const Limits &limits) {
  const auto n = base.size();
  if (n > limits.proposition1_max_n)
    throw TooLarge("verify_proposition1", n, limits.proposition1_max_n);
  Proposition1Report report;
  std::vector<std::pair<std::size_t, TotalPreorder>> scored;
  auto stream = enumerate_total_preorders(base.ground(), limits);
  while (auto t = stream.next())
    scored.emplace_back(ksb_distance(base, t->to_preorder()), std::move(*t));
  report.min_distance = std::min_element(scored.begin(), scored.end(), [](auto &a, auto &b) {
                          return a.first < b.first;
                        })->first;
  for (auto &[d, t] : scored)
    if (d == report.min_distance)
      report.minimizers.push_back(t);
  const auto strict = enumerate_completions(base, CompletionFilter::strict, limits);
  report.strict_completions.assign(strict.begin(), strict.end());
  std::sort(report.strict_completions.begin(), report.strict_completions.end());
  report.holds = std::all_of(
      report.strict_completions.begin(), report.strict_completions.end(), [&](const auto &c) {
        return ksb_distance(base, c.to_preorder()) == report.min_distance;
      });
  return report;
}

} // namespace bca
