#include <doctest.h>

#include <random>

#include "bca/completions.hpp"
#include "bca/families.hpp"
#include "bca/metrics.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bca;

namespace {

std::uint64_t fast(const Preorder &p, const Preorder &q) {
  return *top_difference_fast(p, q).to_u64();
}

std::uint64_t direct(const Preorder &p, const Preorder &q) {
  return *top_difference_direct(p, q).to_u64();
}

} // namespace

TEST_CASE("first example: swapping at the top costs more than at the bottom") {
  const auto base = fixtures::load("ex1_base");
  const auto first = fixtures::load("ex1_first");
  const auto second = fixtures::load("ex1_second");
  CHECK(fast(base, first) == 16);
  CHECK(fast(base, second) == 2);
  CHECK(direct(base, first) == 16);
  CHECK(direct(base, second) == 2);
  CHECK(ksb_distance(base, first) == 2);
  CHECK(ksb_distance(base, second) == 2);
}

TEST_CASE("second example distances to all seven completions") {
  const auto base = fixtures::load("ex2");
  const auto &g = base.ground();
  const std::vector<TotalPreorder> c = {
      fixtures::ordering(g, {{"x", "a"}, {"a1"}, {"a2"}}),
      fixtures::ordering(g, {{"a"}, {"a1", "x"}, {"a2"}}),
      fixtures::ordering(g, {{"a"}, {"a1"}, {"a2", "x"}}),
      fixtures::ordering(g, {{"x"}, {"a"}, {"a1"}, {"a2"}}),
      fixtures::ordering(g, {{"a"}, {"x"}, {"a1"}, {"a2"}}),
      fixtures::ordering(g, {{"a"}, {"a1"}, {"x"}, {"a2"}}),
      fixtures::ordering(g, {{"a"}, {"a1"}, {"a2"}, {"x"}}),
  };
  const std::vector<std::uint64_t> expected = {3, 5, 6, 7, 7, 7, 7};
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(is_completion(c[i], base));
    CHECK(fast(base, c[i].to_preorder()) == expected[i]);
    CHECK(direct(base, c[i].to_preorder()) == expected[i]);
  }
}

TEST_CASE("third, fourth and fifth examples") {
  const auto ex3 = fixtures::load("ex3");
  CHECK(fast(ex3, fixtures::ordering(ex3.ground(), {{"a"}, {"x", "a1"}, {"a2"}}).to_preorder()) ==
        1);
  CHECK(fast(ex3, fixtures::ordering(ex3.ground(), {{"a"}, {"a1"}, {"x", "a2"}}).to_preorder()) ==
        2);
  const auto ex4 = fixtures::load("ex4");
  CHECK(fast(ex4, fixtures::ordering(ex4.ground(), {{"x"}, {"a1", "a2", "a3"}, {"y"}})
                      .to_preorder()) == 0);
  const auto ex5 = fixtures::load("ex5");
  CHECK(fast(ex5, fixtures::ordering(ex5.ground(), {{"x", "a"}, {"a1", "a2"}}).to_preorder()) ==
        4);
  CHECK(fast(ex5, fixtures::ordering(ex5.ground(), {{"a"}, {"x", "a1", "a2"}}).to_preorder()) ==
        4);
}

TEST_CASE("closed form equals the definition on all pairs of three-element preorders") {
  const auto all = enumerate_preorders(GroundSet::numbered(3));
  for (const auto &p : all)
    for (const auto &q : all) {
      const auto expected = oracle::top_difference(oracle::matrix_of(p), oracle::matrix_of(q));
      REQUIRE(fast(p, q) == expected);
      REQUIRE(direct(p, q) == expected);
      REQUIRE(ksb_distance(p, q) == oracle::ksb(oracle::matrix_of(p), oracle::matrix_of(q)));
    }
}

TEST_CASE("closed form equals the definition on random pairs") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 4; n <= 8; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      const auto p = random_preorder(n, rng(), 0.3);
      const auto q = random_preorder(n, rng(), 0.3);
      const auto expected = oracle::top_difference(oracle::matrix_of(p), oracle::matrix_of(q));
      REQUIRE(fast(p, q) == expected);
      REQUIRE(direct(p, q) == expected);
    }
}

TEST_CASE("semimetric properties") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_preorder(6, rng(), 0.3);
    const auto q = random_preorder(6, rng(), 0.3);
    CHECK(fast(p, p) == 0);
    CHECK(fast(p, q) == fast(q, p));
  }
  // Equality and universal indifference share an empty strict part.
  CHECK(fast(equality(5), indifferent(5)) == 0);
  CHECK(ksb_distance(equality(5), indifferent(5)) == 20);
}

TEST_CASE("converse of the zero-distance property, explored") {
  // Distance zero between preorders with different strict parts never
  // shows up at n = 3; recorded as an observation, not as a theorem.
  const auto all = enumerate_preorders(GroundSet::numbered(3));
  std::size_t zero_with_different_strict_part = 0;
  for (const auto &p : all)
    for (const auto &q : all)
      if (fast(p, q) == 0 && !(asymmetric_part(p) == asymmetric_part(q)))
        ++zero_with_different_strict_part;
  CHECK(zero_with_different_strict_part == 0);
}

TEST_CASE("alpha profile") {
  const auto base = fixtures::load("ex2");
  const auto c = fixtures::ordering(base.ground(), {{"x", "a"}, {"a1"}, {"a2"}}).to_preorder();
  const auto prof = alpha_profile(base, c);
  // x: nothing above it in either relation.
  CHECK(prof.alpha[0] == 3);
  // a2: a and a1 above it in both, x only in the completion.
  CHECK(prof.alpha[3] == 0);
  CHECK(prof.only_second[3] == 1);
  CHECK(prof.only_first[3] == 0);
}

TEST_CASE("single-menu deltas") {
  const auto base = fixtures::load("ex1_base");
  const auto first = fixtures::load("ex1_first");
  CHECK(delta_menu(base, first, SubsetMask{0, 1}).delta == 2);
  CHECK(delta_menu(base, first, SubsetMask{2, 3}).delta == 0);
  CHECK_THROWS_AS(delta_menu(base, first, SubsetMask{}), EmptySubset);
}

TEST_CASE("metric errors") {
  CHECK_THROWS_AS(top_difference_fast(chain(3), chain(4)), GroundMismatch);
  CHECK_THROWS_AS(ksb_distance(chain(3), chain(4)), GroundMismatch);
  Limits l;
  l.direct_max_n = 5;
  CHECK_THROWS_AS(top_difference_direct(chain(6), chain(6), l), TooLarge);
}

TEST_CASE("strict completions minimize the KSB distance") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto &p : enumerate_preorders(GroundSet::numbered(n))) {
      const auto report = verify_proposition1(p);
      CHECK(report.holds);
      CHECK_FALSE(report.strict_completions.empty());
    }
  const auto report = verify_proposition1(containment_order(2));
  REQUIRE(report.minimizers.size() == 2);
  CHECK(report.minimizers == report.strict_completions);
  for (const auto &t : report.minimizers)
    CHECK(t.block_count() == 4);
}
