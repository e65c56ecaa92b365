#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "bca/cli.hpp"
#include "bca/document.hpp"
#include "bca/families.hpp"
#include "fixtures.hpp"

using namespace bca;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bca");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string &name) { return fixtures::path(name); }

// Compares against tests/golden/<name>; BCA_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string &name, const std::string &actual) {
  const auto p = fixtures::golden_path(name);
  if (std::getenv("BCA_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(p, std::ios::binary) << actual;
    return;
  }
  INFO("golden file " << name);
  CHECK(fixtures::read_file(p) == actual);
}

int shell_exit(const std::string &cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("check") {
  CHECK(run({"check", fx("chain3")}).code == kExitOk);
  CHECK(run({"check", fx("chain3"), "--total"}).code == kExitOk);
  const auto eq = run({"check", fx("equality3"), "--total"});
  CHECK(eq.code == kExitSemantic);
  CHECK(eq.out == "not total: x1 and x2 are incomparable\n");
  const auto bad = run({"check", fx("missing_transitivity")});
  CHECK(bad.code == kExitSemantic);
  CHECK(bad.out.find("transitivity (0,1,2)") != std::string::npos);
  CHECK(run({"check", fx("malformed")}).code == kExitInput);
  CHECK(run({"check", fx("out_of_range")}).code == kExitInput);
  CHECK(run({"check", "/nonexistent/file.json"}).code == kExitInput);
}

TEST_CASE("metric") {
  CHECK(run({"metric", fx("ex1_base"), fx("ex1_first")}).out == "16\n");
  CHECK(run({"metric", fx("ex1_base"), fx("ex1_second")}).out == "2\n");
  CHECK(run({"metric", fx("ex1_base"), fx("ex1_first"), "--metric", "top-diff-direct"}).out ==
        "16\n");
  CHECK(run({"metric", fx("ex1_base"), fx("ex1_first"), "--metric", "ksb"}).out == "2\n");
  CHECK(run({"metric", fx("ex1_base"), fx("ex1_second"), "--metric", "ksb"}).out == "2\n");
  CHECK(run({"metric", fx("ex2"), fx("ex2")}).out == "0\n");
  CHECK(run({"metric", fx("ex2"), fx("chain3")}).code == kExitSemantic);
  CHECK(run({"metric", fx("ex2"), fx("ex2"), "--metric", "blin"}).code == kExitSemantic);
}

TEST_CASE("bca") {
  const auto ex2 = run({"bca", fx("ex2")});
  CHECK(ex2.code == kExitOk);
  CHECK(ex2.out.find("distance: 3\nmembers: 1\n  x ~ a > a1 > a2") != std::string::npos);
  const auto ex5 = run({"bca", fx("ex5"), "--method", "bruteforce"});
  CHECK(ex5.out.find("distance: 4\nmembers: 2\n") != std::string::npos);
  const auto eq = run({"bca", fx("equality3")});
  CHECK(eq.out.find("distance: 0\nmembers: 1\n  x1 ~ x2 ~ x3 ") != std::string::npos);
  CHECK(run({"bca", fx("ex8"), "--method", "theorem5"}).code == kExitSemantic);
  CHECK(run({"bca", fx("remark"), "--method", "bruteforce"}).code == kExitGuard);
  CHECK(run({"bca", fx("remark"), "--method", "bruteforce", "--max-n", "10"}).code == kExitOk);
  CHECK(run({"bca", fx("ex8"), "--unicode"}).out.find(" ≻ ") != std::string::npos);

  // Every member of the JSON report is itself a relation document.
  const auto j = nlohmann::ordered_json::parse(run({"bca", fx("ex5"), "--emit", "json"}).out);
  CHECK(j["distance"] == "4");
  REQUIRE(j["members"].size() == 2);
  for (const auto &m : j["members"]) {
    const auto doc = document_from_json(m["document"]);
    CHECK(is_total(Preorder::from_relation(to_relation(doc))));
  }
}

TEST_CASE("index, canonical, condition-star") {
  CHECK(run({"index", fx("ex8_second")}).out == "322\n");
  CHECK(run({"index", fx("ex7_k3")}).out == "96\n");
  const auto gen = run({"generate", "equality", "--n", "4"});
  const auto tmp = (std::filesystem::temp_directory_path() / "bca_equality4.json").string();
  {
    std::ofstream(tmp) << gen.out;
  }
  CHECK(run({"canonical", tmp}).out == "x1 ~ x2 ~ x3 ~ x4\n");
  std::remove(tmp.c_str());
  const auto star = run({"condition-star", fx("ex7_k3")});
  CHECK(star.out.find("verdict: fails\n") == 0);
  CHECK(star.out.find("S={a}, Y={a1,a2,a3}, index 24 > bound 16") != std::string::npos);
  const auto weak = run({"condition-star", fx("ex5")});
  CHECK(weak.out.find("verdict: weak\n") == 0);
  CHECK(weak.out.find("index 8 = bound 8") != std::string::npos);
}

TEST_CASE("generate") {
  const auto c2 = parse_document(run({"generate", "containment", "--z", "2"}).out);
  CHECK(c2.labels.size() == 4);
  const auto crown_doc = parse_document(run({"generate", "crown", "--k", "6"}).out);
  CHECK(Preorder::from_relation(to_relation(crown_doc)) == fixtures::load("ex6_crown"));
  const auto grid = nlohmann::ordered_json::parse(
      run({"generate", "coordinatewise", "--m", "2", "--expected-bca"}).out);
  const auto expected = Preorder::from_relation(to_relation(document_from_json(grid["expected_bca"])));
  CHECK(expected == sum_ordering(2).to_preorder());
  CHECK(run({"generate", "fence", "--k", "5"}).code == kExitSemantic);
  CHECK(run({"generate", "fence"}).code == kExitSemantic);
  CHECK(run({"generate", "lattice", "--n", "3"}).code == kExitSemantic);
  CHECK(run({"generate", "containment", "--z", "7"}).code == kExitGuard);
  CHECK(run({"generate", "random", "--n", "6", "--seed", "5"}).out ==
        run({"generate", "random", "--n", "6", "--seed", "5"}).out);
  const auto rev = parse_document(run({"generate", "word-prefix", "--k", "2", "--reverse"}).out);
  CHECK(Preorder::from_relation(to_relation(rev)) == dual(word_prefix_order(2, 2)));
}

TEST_CASE("dot") {
  const auto chain = run({"dot", fx("chain3")}).out;
  CHECK(chain.find("n2 [label=\"x3\"]") != std::string::npos);
  CHECK(chain.find("n0 -> n1;\n  n1 -> n2;\n}") != std::string::npos);
  CHECK(run({"dot", fx("indifferent3")}).out.find("n1") == std::string::npos);
  CHECK(run({"dot", fx("malformed")}).code == kExitInput);
}

TEST_CASE("covering radius") {
  CHECK(run({"covering-radius", "--n", "2"}).out.find("radius: 0\n") == 0);
  CHECK(run({"covering-radius", "--n", "4"}).out.find("radius: 4\n") == 0);
  CHECK(run({"covering-radius", "--n", "5"}).code == kExitGuard);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitSemantic);
  CHECK(run({"frobnicate"}).code == kExitSemantic);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("golden outputs for the example fixtures") {
  for (const auto &g : fixtures::golden_cases())
    check_golden(g.file, run(g.args).out);
}

TEST_CASE("outputs are deterministic") {
  for (const auto &name : fixtures::example_fixtures())
    CHECK(run({"bca", fx(name), "--emit", "json"}).out ==
          run({"bca", fx(name), "--emit", "json"}).out);
}

TEST_CASE("documents round-trip through JSON") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    RelationDocument doc;
    const auto n = 1 + rng() % 12;
    for (std::size_t i = 0; i < n; ++i)
      doc.labels.push_back("v" + std::to_string(i) + (rng() % 3 == 0 ? "\"q\\" : ""));
    const auto pairs = rng() % 30;
    for (std::size_t p = 0; p < pairs; ++p)
      doc.pairs.emplace_back(rng() % n, rng() % n);
    doc.reflexive_closure = rng() % 2;
    doc.transitive_closure = rng() % 2;
    REQUIRE(parse_document(emit_document(doc)) == doc);
  }
}

TEST_CASE("process exit codes") {
  const std::string tool = BCA_TOOL_PATH;
  CHECK(shell_exit(tool + " check " + fx("chain3")) == 0);
  CHECK(shell_exit(tool + " check " + fx("missing_transitivity")) == 2);
  CHECK(shell_exit(tool + " check " + fx("malformed")) == 3);
  CHECK(shell_exit(tool + " covering-radius --n 5") == 4);
}
