#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bca/document.hpp"

namespace fixtures {

std::string path(const std::string &name) {
  return std::string(BCA_FIXTURE_DIR) + "/" + name + ".json";
}

std::string golden_path(const std::string &name) {
  return std::string(BCA_GOLDEN_DIR) + "/" + name;
}

std::string read_file(const std::string &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::string> &example_fixtures() {
  static const std::vector<std::string> names = {
      "ex1_base", "ex1_first", "ex1_second", "ex2",    "ex3",       "ex4",
      "ex5",      "ex6_fence", "ex6_crown",  "ex7_k2", "ex7_k3",    "ex8",
      "ex8_second", "remark",  "chain3",     "equality3", "indifferent3"};
  return names;
}

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> out;
  for (const auto &name : example_fixtures()) {
    const auto file = path(name);
    out.push_back({name + ".dot", {"dot", file}});
    out.push_back({name + ".canonical.txt", {"canonical", file}});
    out.push_back({name + ".bca.txt", {"bca", file}});
    out.push_back({name + ".star.txt", {"condition-star", file}});
  }
  return out;
}

bca::Preorder load(const std::string &name) {
  return bca::Preorder::from_relation(bca::to_relation(bca::read_document(path(name))));
}

bca::TotalPreorder ordering(const bca::GroundSet &ground,
                            const std::vector<std::vector<std::string>> &blocks) {
  std::vector<bca::SubsetMask> masks;
  for (const auto &b : blocks) {
    bca::Mask m = 0;
    for (const auto &label : b) {
      const auto i = ground.index_of(label);
      if (!i)
        throw std::invalid_argument("unknown label " + label);
      m |= bca::bit(*i);
    }
    masks.emplace_back(m);
  }
  return bca::TotalPreorder(ground, std::move(masks));
}

namespace {

std::vector<std::string> a_labels(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i)
    out.push_back("a" + std::to_string(i));
  return out;
}

bca::GroundSet example7_ground(std::size_t k) {
  std::vector<std::string> labels = {"x", "a"};
  for (auto &l : a_labels(k))
    labels.push_back(l);
  return bca::GroundSet(labels);
}

} // namespace

bca::Preorder example7(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    pairs.emplace_back(1, 2 + i);
  return bca::Preorder::closure_of(bca::Relation::from_pairs(example7_ground(k), pairs));
}

bca::TotalPreorder example7_first(std::size_t k) {
  return ordering(example7_ground(k), {{"x", "a"}, a_labels(k)});
}

bca::TotalPreorder example7_second(std::size_t k) {
  auto low = a_labels(k);
  low.insert(low.begin(), "x");
  return ordering(example7_ground(k), {{"a"}, low});
}

} // namespace fixtures
