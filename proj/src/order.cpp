#include "bca/order.hpp"

#include <algorithm>
#include <set>

namespace bca {

namespace {

// Gathers the bits of `value` selected by `select` into the low bits of the
// result, preserving order.
Mask compress_bits(Mask value, Mask select) {
  Mask out = 0;
  std::size_t pos = 0;
  for (Mask m = select; m != 0; m &= m - 1, ++pos) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    if ((value >> i) & 1U)
      out |= bit(pos);
  }
  return out;
}

void require_nonempty(SubsetMask s) {
  if (s.empty())
    throw EmptySubset();
}

} // namespace

// ---------------------------------------------------------------------------
// SubsetMask

SubsetMask::SubsetMask(std::initializer_list<std::size_t> members) {
  for (auto i : members)
    bits_ |= bit(i);
}

SubsetMask SubsetMask::of(std::span<const std::size_t> members) {
  Mask m = 0;
  for (auto i : members)
    m |= bit(i);
  return SubsetMask(m);
}

std::vector<std::size_t> SubsetMask::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) {
  if (labels.empty())
    throw BadParameter("ground set must have at least one element");
  if (labels.size() > kMaxElements)
    throw TooLarge("ground set", labels.size(), kMaxElements);
  std::set<std::string_view> seen;
  for (const auto &l : labels) {
    if (!seen.insert(l).second)
      throw BadParameter("duplicate label '" + l + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

GroundSet GroundSet::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    labels.push_back(std::string(prefix) + std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  const auto &ls = *labels_;
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] == label)
      return i;
  return std::nullopt;
}

std::vector<std::string> GroundSet::labels_of(SubsetMask s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(label(i)); });
  return out;
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(GroundSet ground, std::vector<Mask> rows)
    : ground_(std::move(ground)), rows_(std::move(rows)) {
  if (rows_.size() != ground_.size())
    throw BadParameter("relation has " + std::to_string(rows_.size()) +
                       " rows for a ground set of " +
                       std::to_string(ground_.size()));
  const Mask valid = low_bits(ground_.size());
  for (auto r : rows_)
    if ((r & ~valid) != 0)
      throw BadParameter("relation row refers to an element outside the ground set");
}

Relation Relation::empty(GroundSet ground) {
  const auto n = ground.size();
  return Relation(std::move(ground), std::vector<Mask>(n, 0));
}

Relation Relation::identity(GroundSet ground) {
  std::vector<Mask> rows(ground.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i] = bit(i);
  return Relation(std::move(ground), std::move(rows));
}

Relation Relation::from_pairs(
    GroundSet ground, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<Mask> rows(ground.size(), 0);
  for (auto [i, j] : pairs) {
    if (i >= rows.size() || j >= rows.size())
      throw BadParameter("pair (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is out of range");
    rows[i] |= bit(j);
  }
  return Relation(std::move(ground), std::move(rows));
}

std::size_t Relation::pair_count() const {
  std::size_t c = 0;
  for (auto r : rows_)
    c += static_cast<std::size_t>(std::popcount(r));
  return c;
}

Relation Relation::with_reflexive_closure() const {
  auto rows = rows_;
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i] |= bit(i);
  return Relation(ground_, std::move(rows));
}

Relation Relation::with_transitive_closure() const {
  auto rows = rows_;
  const auto n = rows.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if ((rows[i] >> k) & 1U)
        rows[i] |= rows[k];
  return Relation(ground_, std::move(rows));
}

// ---------------------------------------------------------------------------
// Preorder

PreorderCheck validate_preorder(const Relation &rel) {
  PreorderCheck out;
  const auto n = rel.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!rel.holds(i, i))
      out.violations.push_back({Violation::Kind::reflexivity, i, i, i});
  for (std::size_t i = 0; i < n; ++i) {
    const Mask row = rel.row(i);
    SubsetMask(row).for_each([&](std::size_t j) {
      SubsetMask(rel.row(j) & ~row).for_each([&](std::size_t k) {
        out.violations.push_back({Violation::Kind::transitivity, i, j, k});
      });
    });
  }
  if (out.violations.empty())
    out.preorder = Preorder(rel);
  return out;
}

Preorder Preorder::from_relation(const Relation &rel) {
  auto check = validate_preorder(rel);
  if (!check.ok())
    throw InvalidRelation(std::move(check.violations));
  return std::move(*check.preorder);
}

Preorder Preorder::closure_of(const Relation &rel) {
  return Preorder(rel.with_reflexive_closure().with_transitive_closure());
}

Preorder Preorder::equality(GroundSet ground) {
  return Preorder(Relation::identity(std::move(ground)));
}

Preorder Preorder::indifference(GroundSet ground) {
  const auto n = ground.size();
  return Preorder(Relation(std::move(ground), std::vector<Mask>(n, low_bits(n))));
}

Mask Preorder::weak_up(std::size_t x) const {
  Mask up = 0;
  for (std::size_t y = 0; y < size(); ++y)
    if (rel_.holds(y, x))
      up |= bit(y);
  return up;
}

std::vector<Mask> Preorder::strict_up_sets() const {
  const auto n = size();
  std::vector<Mask> up(n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    const Mask row = rel_.row(y);
    SubsetMask(row).for_each([&](std::size_t x) {
      if (!rel_.holds(x, y))
        up[x] |= bit(y);
    });
  }
  return up;
}

// ---------------------------------------------------------------------------
// TotalPreorder

TotalPreorder::TotalPreorder(GroundSet ground, std::vector<SubsetMask> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
  Mask seen = 0;
  for (auto b : blocks_) {
    if (b.empty())
      throw BadParameter("total preorder blocks must be nonempty");
    if ((seen & b.bits()) != 0)
      throw BadParameter("total preorder blocks must be disjoint");
    seen |= b.bits();
  }
  if (seen != ground_.full().bits())
    throw BadParameter("total preorder blocks must cover the ground set");
}

TotalPreorder TotalPreorder::from_ranks(GroundSet ground,
                                        std::span<const std::uint8_t> ranks) {
  if (ranks.size() != ground.size())
    throw BadParameter("rank vector length does not match the ground set");
  std::size_t top = 0;
  for (auto r : ranks)
    top = std::max<std::size_t>(top, r);
  std::vector<SubsetMask> blocks(top + 1);
  for (std::size_t i = 0; i < ranks.size(); ++i)
    blocks[ranks[i]] = blocks[ranks[i]] | SubsetMask(bit(i));
  return TotalPreorder(std::move(ground), std::move(blocks));
}

std::size_t TotalPreorder::rank_of(std::size_t x) const {
  for (std::size_t r = 0; r < blocks_.size(); ++r)
    if (blocks_[r].contains(x))
      return r;
  throw BadParameter("element " + std::to_string(x) + " is outside the ground set");
}

std::vector<std::uint8_t> TotalPreorder::ranks() const {
  std::vector<std::uint8_t> out(size());
  for (std::size_t r = 0; r < blocks_.size(); ++r)
    blocks_[r].for_each([&](std::size_t i) { out[i] = static_cast<std::uint8_t>(r); });
  return out;
}

std::vector<std::size_t> TotalPreorder::block_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks_.size());
  for (auto b : blocks_)
    out.push_back(b.size());
  return out;
}

Preorder TotalPreorder::to_preorder() const {
  std::vector<Mask> rows(size(), 0);
  Mask below = ground_.full().bits();
  for (auto b : blocks_) {
    b.for_each([&](std::size_t i) { rows[i] = below; });
    below &= ~b.bits();
  }
  return Preorder(Relation(ground_, std::move(rows)));
}

std::vector<Mask> TotalPreorder::strict_up_sets() const {
  std::vector<Mask> up(size(), 0);
  Mask above = 0;
  for (auto b : blocks_) {
    b.for_each([&](std::size_t i) { up[i] = above; });
    above |= b.bits();
  }
  return up;
}

std::size_t TotalPreorder::down_size(std::size_t x) const {
  std::size_t below = size();
  for (auto b : blocks_) {
    if (b.contains(x))
      return below;
    below -= b.size();
  }
  throw BadParameter("element " + std::to_string(x) + " is outside the ground set");
}

bool operator<(const TotalPreorder &a, const TotalPreorder &b) {
  return a.ranks() < b.ranks();
}

// ---------------------------------------------------------------------------
// Operations

Relation asymmetric_part(const Preorder &p) {
  std::vector<Mask> rows(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    rows[i] = p.strict_down(i);
  return Relation(p.ground(), std::move(rows));
}

Relation symmetric_part(const Preorder &p) {
  std::vector<Mask> rows(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    rows[i] = p.weak_down(i) & p.weak_up(i);
  return Relation(p.ground(), std::move(rows));
}

Preorder dual(const Preorder &p) {
  std::vector<Mask> rows(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    rows[i] = p.weak_up(i);
  return Preorder(Relation(p.ground(), std::move(rows)));
}

Preorder restrict(const Preorder &p, SubsetMask y) {
  require_nonempty(y);
  if (!y.subset_of(p.ground().full()))
    throw BadParameter("restriction subset lies outside the ground set");
  GroundSet sub(p.ground().labels_of(y));
  std::vector<Mask> rows;
  rows.reserve(y.size());
  y.for_each([&](std::size_t i) { rows.push_back(compress_bits(p.weak_down(i), y.bits())); });
  return Preorder(Relation(std::move(sub), std::move(rows)));
}

SubsetMask maximal_elements(const Preorder &p, SubsetMask s) {
  require_nonempty(s);
  Mask out = 0;
  s.for_each([&](std::size_t x) {
    if ((p.strict_up(x) & s.bits()) == 0)
      out |= bit(x);
  });
  return SubsetMask(out);
}

SubsetMask maximum_elements(const Preorder &p, SubsetMask s) {
  require_nonempty(s);
  Mask out = 0;
  s.for_each([&](std::size_t x) {
    if (s.subset_of(SubsetMask(p.weak_down(x))))
      out |= bit(x);
  });
  return SubsetMask(out);
}

SubsetMask down_set(const Preorder &p, std::size_t x, Strictness s) {
  return SubsetMask(s == Strictness::weak ? p.weak_down(x) : p.strict_down(x));
}

SubsetMask up_set(const Preorder &p, std::size_t x, Strictness s) {
  return SubsetMask(s == Strictness::weak ? p.weak_up(x) : p.strict_up(x));
}

std::vector<SubsetMask> layers(const Preorder &p) {
  const auto up = p.strict_up_sets();
  std::vector<SubsetMask> out;
  Mask remaining = p.ground().full().bits();
  while (remaining != 0) {
    Mask layer = 0;
    SubsetMask(remaining).for_each([&](std::size_t x) {
      if ((up[x] & remaining) == 0)
        layer |= bit(x);
    });
    out.emplace_back(layer);
    remaining &= ~layer;
  }
  return out;
}

bool is_total(const Preorder &p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if ((p.weak_down(i) | p.weak_up(i)) != p.ground().full().bits())
      return false;
  return true;
}

TotalPreorder to_total(const Preorder &p) {
  const Mask full = p.ground().full().bits();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Mask missing = full & ~(p.weak_down(i) | p.weak_up(i));
    if (missing != 0)
      throw NotTotal(i, static_cast<std::size_t>(std::countr_zero(missing)));
  }
  return TotalPreorder(p.ground(), layers(p));
}

bool is_completion(const TotalPreorder &candidate, const Preorder &base) {
  if (!(candidate.ground() == base.ground()))
    throw GroundMismatch();
  const auto rank = candidate.ranks();
  for (std::size_t i = 0; i < base.size(); ++i) {
    bool ok = true;
    SubsetMask(base.weak_down(i)).for_each([&](std::size_t j) {
      if (base.strictly(i, j) ? !(rank[i] < rank[j]) : !(rank[i] <= rank[j]))
        ok = false;
    });
    if (!ok)
      return false;
  }
  return true;
}

std::vector<SubsetMask> indifference_classes(const Preorder &p) {
  std::vector<SubsetMask> out;
  Mask assigned = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((assigned >> i) & 1U)
      continue;
    const Mask cls = p.weak_down(i) & p.weak_up(i);
    out.emplace_back(cls);
    assigned |= cls;
  }
  return out;
}

HasseDiagram hasse_edges(const Preorder &p) {
  HasseDiagram h;
  h.classes = indifference_classes(p);
  const auto c = h.classes.size();
  std::vector<std::size_t> rep(c);
  for (std::size_t a = 0; a < c; ++a) {
    rep[a] = static_cast<std::size_t>(std::countr_zero(h.classes[a].bits()));
    std::string label;
    for (const auto &l : p.ground().labels_of(h.classes[a])) {
      if (!label.empty())
        label += ',';
      label += l;
    }
    h.node_labels.push_back(std::move(label));
  }
  auto above = [&](std::size_t a, std::size_t b) { return p.strictly(rep[a], rep[b]); };
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      if (!above(a, b))
        continue;
      bool covers = true;
      for (std::size_t m = 0; m < c && covers; ++m)
        if (above(a, m) && above(m, b))
          covers = false;
      if (covers)
        h.edges.emplace_back(a, b);
    }
  return h;
}

} // namespace bca
