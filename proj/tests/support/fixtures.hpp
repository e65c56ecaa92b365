#ifndef BCA_TESTS_FIXTURES_HPP
#define BCA_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "bca/order.hpp"

namespace fixtures {

std::string path(const std::string &name);
std::string golden_path(const std::string &name);
std::string read_file(const std::string &path);

/// Fixtures transcribing the worked examples; each has golden
/// DOT and text outputs.
const std::vector<std::string> &example_fixtures();

struct GoldenCase {
  std::string file;
  /// Command-line arguments, without the program name.
  std::vector<std::string> args;
};

/// DOT, canonical, bca and condition-star output for every example fixture.
std::vector<GoldenCase> golden_cases();

/// Loads tests/fixtures/<name>.json as a preorder.
bca::Preorder load(const std::string &name);

/// Total preorder on the ground set of `base` from blocks of labels, top first.
bca::TotalPreorder ordering(const bca::GroundSet &ground,
                            const std::vector<std::vector<std::string>> &blocks);

/// x, a, a1..ak with a above every ai and x incomparable to all.
bca::Preorder example7(std::size_t k);
/// x ~ a over a1..ak.
bca::TotalPreorder example7_first(std::size_t k);
/// a over x ~ a1 ~ ... ~ ak.
bca::TotalPreorder example7_second(std::size_t k);

} // namespace fixtures

#endif
