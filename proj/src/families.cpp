#include "bca/families.hpp"

#include <array>
#include <random>

namespace bca {

namespace {

constexpr std::array<char, 6> kZ = {'x', 'y', 'z', 'u', 'v', 'w'};

void require(bool ok, const std::string &message) {
  if (!ok)
    throw BadParameter(message);
}

// Preorder from a predicate on index pairs; the predicate must already be
// reflexive and transitive.
template <typename F> Preorder by_predicate(const GroundSet &ground, F &&weakly) {
  const auto n = ground.size();
  std::vector<Mask> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (weakly(i, j))
        rows[i] |= bit(j);
  return Preorder::from_relation(Relation(ground, std::move(rows)));
}

template <typename F> TotalPreorder by_rank(const GroundSet &ground, F &&rank) {
  std::vector<std::uint8_t> ranks(ground.size());
  for (std::size_t i = 0; i < ranks.size(); ++i)
    ranks[i] = static_cast<std::uint8_t>(rank(i));
  return TotalPreorder::from_ranks(ground, ranks);
}

GroundSet subset_ground(std::size_t z) {
  if (z > 6)
    throw TooLarge("containment order", z, 6);
  std::vector<std::string> labels;
  for (Mask m = 0; m < bit(z); ++m) {
    std::string s = "{";
    for (std::size_t i = 0; i < z; ++i)
      if ((m >> i) & 1U) {
        if (s.size() > 1)
          s += ',';
        s += kZ[i];
      }
    labels.push_back(s + "}");
  }
  return GroundSet(std::move(labels));
}

// Restricted growth strings of length z in lexicographic order.
std::vector<std::vector<std::uint8_t>> set_partitions(std::size_t z) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> a(z, 0);
  auto rec = [&](auto &self, std::size_t pos, std::uint8_t top) -> void {
    if (pos == z) {
      out.push_back(a);
      return;
    }
    for (std::uint8_t v = 0; v <= top + 1; ++v) {
      a[pos] = v;
      self(self, pos + 1, std::max<std::uint8_t>(top, v));
    }
  };
  a[0] = 0;
  rec(rec, 1, 0);
  return out;
}

struct Partitions {
  GroundSet ground;
  // cells[p][c] = member bitmask of cell c of partition p
  std::vector<std::vector<Mask>> cells;
};

Partitions partitions_of(std::size_t z) {
  require(z >= 1, "refinement order needs z >= 1");
  if (z > 5)
    throw TooLarge("refinement order", z, 5);
  std::vector<std::string> labels;
  std::vector<std::vector<Mask>> cells;
  for (const auto &rgs : set_partitions(z)) {
    const auto k = static_cast<std::size_t>(*std::max_element(rgs.begin(), rgs.end())) + 1;
    std::vector<Mask> c(k, 0);
    for (std::size_t i = 0; i < z; ++i)
      c[rgs[i]] |= bit(i);
    std::string label;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != 0)
        label += '|';
      for (std::size_t i = 0; i < z; ++i)
        if ((c[j] >> i) & 1U)
          label += kZ[i];
    }
    labels.push_back(std::move(label));
    cells.push_back(std::move(c));
  }
  return {GroundSet(std::move(labels)), std::move(cells)};
}

struct Words {
  GroundSet ground;
  std::vector<std::string> words;
};

Words words_of(std::size_t alphabet, std::size_t k) {
  require(alphabet >= 1 && alphabet <= 26 && k >= 1,
          "word order needs 1 <= alphabet <= 26 and k >= 1");
  std::size_t total = 0;
  std::size_t level = 1;
  for (std::size_t len = 1; len <= k; ++len) {
    if (level > kMaxElements / alphabet + 1)
      throw TooLarge("word order", kMaxElements + 1, kMaxElements);
    level *= alphabet;
    total += level;
    if (total > kMaxElements)
      throw TooLarge("word order", total, kMaxElements);
  }
  std::vector<std::string> words;
  std::vector<std::string> prev = {""};
  for (std::size_t len = 1; len <= k; ++len) {
    std::vector<std::string> cur;
    for (const auto &w : prev)
      for (std::size_t a = 0; a < alphabet; ++a)
        cur.push_back(w + static_cast<char>('a' + a));
    words.insert(words.end(), cur.begin(), cur.end());
    prev = std::move(cur);
  }
  return {GroundSet(words), words};
}

GroundSet grid_ground(std::size_t m) {
  require(m >= 1, "coordinatewise order needs m >= 1");
  if (m * m > kMaxElements)
    throw TooLarge("coordinatewise order", m * m, kMaxElements);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return GroundSet(std::move(labels));
}

void require_zigzag(std::size_t k) {
  require(k >= 4 && k % 2 == 0, "fence and crown need an even k >= 4");
  if (k > kMaxElements)
    throw TooLarge("fence/crown", k, kMaxElements);
}

void require_positive(std::size_t n) {
  require(n >= 1, "size must be positive");
  if (n > kMaxElements)
    throw TooLarge("ground set", n, kMaxElements);
}

} // namespace

Preorder containment_order(std::size_t z) {
  return by_predicate(subset_ground(z), [](std::size_t a, std::size_t b) { return (b & ~a) == 0; });
}

TotalPreorder cardinality_ordering(std::size_t z) {
  return by_rank(subset_ground(z),
                 [z](std::size_t a) { return z - static_cast<std::size_t>(std::popcount(a)); });
}

Preorder refinement_order(std::size_t z) {
  const auto parts = partitions_of(z);
  return by_predicate(parts.ground, [&](std::size_t s, std::size_t t) {
    for (Mask cell : parts.cells[t])
      if (std::none_of(parts.cells[s].begin(), parts.cells[s].end(),
                       [cell](Mask big) { return (cell & ~big) == 0; }))
        return false;
    return true;
  });
}

TotalPreorder cell_count_ordering(std::size_t z) {
  const auto parts = partitions_of(z);
  return by_rank(parts.ground, [&](std::size_t p) { return parts.cells[p].size() - 1; });
}

Preorder word_prefix_order(std::size_t alphabet, std::size_t k) {
  const auto w = words_of(alphabet, k);
  return by_predicate(w.ground, [&](std::size_t x, std::size_t y) {
    return w.words[x].compare(0, w.words[y].size(), w.words[y]) == 0;
  });
}

TotalPreorder word_length_ordering(std::size_t alphabet, std::size_t k) {
  const auto w = words_of(alphabet, k);
  return by_rank(w.ground, [&](std::size_t x) { return k - w.words[x].size(); });
}

Preorder coordinatewise_order(std::size_t m) {
  return by_predicate(grid_ground(m), [m](std::size_t a, std::size_t b) {
    return a / m >= b / m && a % m >= b % m;
  });
}

TotalPreorder sum_ordering(std::size_t m) {
  return by_rank(grid_ground(m), [m](std::size_t a) { return 2 * (m - 1) - a / m - a % m; });
}

Preorder fence(std::size_t k) {
  require_zigzag(k);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  // 0-based: tops are the odd indices.
  for (std::size_t t = 1; t < k; t += 2) {
    covers.emplace_back(t, t - 1);
    if (t + 1 < k)
      covers.emplace_back(t, t + 1);
  }
  return Preorder::closure_of(Relation::from_pairs(GroundSet::numbered(k), covers));
}

Preorder crown(std::size_t k) {
  require_zigzag(k);
  const auto half = k / 2;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < half; ++i)
    for (std::size_t t = 0; t < half; ++t)
      if (t != (i + 1) % half)
        covers.emplace_back(2 * t + 1, 2 * i);
  return Preorder::closure_of(Relation::from_pairs(GroundSet::numbered(k), covers));
}

TotalPreorder tops_over_bottoms(std::size_t k) {
  require_zigzag(k);
  return by_rank(GroundSet::numbered(k), [](std::size_t i) { return i % 2 == 1 ? 0 : 1; });
}

Preorder chain(std::size_t n) {
  require_positive(n);
  return by_predicate(GroundSet::numbered(n), [](std::size_t i, std::size_t j) { return i <= j; });
}

Preorder equality(std::size_t n) {
  require_positive(n);
  return Preorder::equality(GroundSet::numbered(n));
}

Preorder indifferent(std::size_t n) {
  require_positive(n);
  return Preorder::indifference(GroundSet::numbered(n));
}

Preorder random_preorder(std::size_t n, std::uint64_t seed, double density) {
  require_positive(n);
  require(density >= 0.0 && density <= 1.0, "density must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && edge(rng))
        pairs.emplace_back(i, j);
  return Preorder::closure_of(Relation::from_pairs(GroundSet::numbered(n), pairs));
}

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 9> kKindNames = {{
    {FamilyKind::containment, "containment"},
    {FamilyKind::refinement, "refinement"},
    {FamilyKind::word_prefix, "word-prefix"},
    {FamilyKind::coordinatewise, "coordinatewise"},
    {FamilyKind::fence, "fence"},
    {FamilyKind::crown, "crown"},
    {FamilyKind::chain, "chain"},
    {FamilyKind::equality, "equality"},
    {FamilyKind::indifferent, "indifferent"},
}};

} // namespace

std::string_view to_string(FamilyKind k) {
  for (const auto &[kind, name] : kKindNames)
    if (kind == k)
      return name;
  return "?";
}

std::optional<FamilyKind> family_kind_from_string(std::string_view s) {
  for (const auto &[kind, name] : kKindNames)
    if (name == s)
      return kind;
  return std::nullopt;
}

Preorder generate(const FamilySpec &spec) {
  switch (spec.kind) {
  case FamilyKind::containment:
    return containment_order(spec.size);
  case FamilyKind::refinement:
    return refinement_order(spec.size);
  case FamilyKind::word_prefix:
    return word_prefix_order(spec.alphabet, spec.size);
  case FamilyKind::coordinatewise:
    return coordinatewise_order(spec.size);
  case FamilyKind::fence:
    return fence(spec.size);
  case FamilyKind::crown:
    return crown(spec.size);
  case FamilyKind::chain:
    return chain(spec.size);
  case FamilyKind::equality:
    return equality(spec.size);
  case FamilyKind::indifferent:
    return indifferent(spec.size);
  }
  throw BadParameter("unknown family");
}

TotalPreorder expected_bca(const FamilySpec &spec) {
  switch (spec.kind) {
  case FamilyKind::containment:
    return cardinality_ordering(spec.size);
  case FamilyKind::refinement:
    return cell_count_ordering(spec.size);
  case FamilyKind::word_prefix:
    return word_length_ordering(spec.alphabet, spec.size);
  case FamilyKind::coordinatewise:
    return sum_ordering(spec.size);
  case FamilyKind::fence:
  case FamilyKind::crown:
    return tops_over_bottoms(spec.size);
  case FamilyKind::chain:
    return to_total(chain(spec.size));
  case FamilyKind::equality:
  case FamilyKind::indifferent:
    return to_total(indifferent(spec.size));
  }
  throw BadParameter("unknown family");
}

TotalPreorder expected_bca(const FamilySpec &spec, const Preorder &relation) {
  auto out = expected_bca(spec);
  if (!(out.ground() == relation.ground()))
    throw ParameterMismatch("expected ordering and relation live on different ground sets");
  return out;
}

} // namespace bca
