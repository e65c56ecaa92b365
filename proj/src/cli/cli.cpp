#include "bca/cli.hpp"

#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bca/document.hpp"
#include "bca/families.hpp"
#include "bca/index.hpp"
#include "bca/metrics.hpp"
#include "bca/render.hpp"
#include "bca/solver.hpp"

namespace bca {

namespace {

using nlohmann::ordered_json;

enum class Emit { text, json, dot };

struct Globals {
  Emit emit = Emit::text;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> max_completions;
  bool unicode = false;

  Limits limits() const {
    Limits l;
    if (max_n) {
      l.direct_max_n = *max_n;
      l.total_preorders_max_n = *max_n;
      l.preorders_max_n = *max_n;
      l.proposition1_max_n = *max_n;
    }
    if (max_completions)
      l.completions_max_count = *max_completions;
    return l;
  }
};

/// Raised for command-line usage problems found after parsing.
class UsageError : public Error {
public:
  using Error::Error;
};

Preorder load_preorder(const std::string &path) {
  return Preorder::from_relation(to_relation(read_document(path)));
}

std::string big(const BigCount &b) { return b.to_string(); }

std::string describe(const GroundSet &g, const Violation &v) {
  const auto &l = [&](std::size_t i) -> const std::string & { return g.label(i); };
  if (v.kind == Violation::Kind::reflexivity)
    return "reflexivity (" + std::to_string(v.i) + "," + std::to_string(v.i) + "," +
           std::to_string(v.i) + "): missing " + l(v.i) + " >= " + l(v.i);
  return "transitivity (" + std::to_string(v.i) + "," + std::to_string(v.j) + "," +
         std::to_string(v.k) + "): " + l(v.i) + " >= " + l(v.j) + " and " + l(v.j) + " >= " +
         l(v.k) + " but not " + l(v.i) + " >= " + l(v.k);
}

std::string describe(const GroundSet &g, const ConditionWitness &w) {
  return "layer " + std::to_string(w.layer) + ", S=" + format_subset(g, w.s) +
         ", Y=" + format_subset(g, w.y) + ", index " + big(w.index) +
         (w.violates() ? " > " : " = ") + "bound " + big(w.bound);
}

ordered_json witness_json(const GroundSet &g, const ConditionWitness &w) {
  ordered_json j;
  j["layer"] = w.layer;
  j["S"] = g.labels_of(w.s);
  j["Y"] = g.labels_of(w.y);
  j["index"] = big(w.index);
  j["bound"] = big(w.bound);
  return j;
}

// ---------------------------------------------------------------------------

int cmd_check(const Globals &, const std::string &path, bool require_total, std::ostream &out) {
  const Relation rel = to_relation(read_document(path));
  const auto check = validate_preorder(rel);
  if (!check.ok()) {
    out << "invalid: " << check.violations.size() << " violation(s)\n";
    for (const auto &v : check.violations)
      out << "  " << describe(rel.ground(), v) << "\n";
    return kExitSemantic;
  }
  const auto &p = *check.preorder;
  const bool total = is_total(p);
  if (require_total && !total) {
    try {
      to_total(p);
    } catch (const NotTotal &e) {
      out << "not total: " << p.ground().label(e.first) << " and "
          << p.ground().label(e.second) << " are incomparable\n";
    }
    return kExitSemantic;
  }
  out << "ok: preorder on " << p.size() << " elements" << (total ? ", total" : "") << "\n";
  return kExitOk;
}

int cmd_metric(const Globals &g, const std::string &a, const std::string &b,
               const std::string &metric, std::ostream &out) {
  const auto p = load_preorder(a);
  const auto q = load_preorder(b);
  std::string value;
  if (metric == "top-diff")
    value = big(top_difference_fast(p, q));
  else if (metric == "top-diff-direct")
    value = big(top_difference_direct(p, q, g.limits()));
  else
    value = std::to_string(ksb_distance(p, q));
  if (g.emit == Emit::json) {
    ordered_json j;
    j["metric"] = metric;
    j["value"] = value;
    out << j.dump(2) << "\n";
  } else {
    out << value << "\n";
  }
  return kExitOk;
}

void emit_report(const Globals &g, const ApproximationReport &r,
                 const std::optional<Verdict> &verdict, std::ostream &out) {
  if (g.emit == Emit::dot) {
    for (std::size_t i = 0; i < r.bca_set.size(); ++i)
      out << to_dot(r.bca_set[i].to_preorder(), "bca_" + std::to_string(i));
    return;
  }
  if (g.emit == Emit::json) {
    ordered_json j;
    j["method"] = std::string(to_string(r.method));
    if (verdict)
      j["condition_star"] = std::string(to_string(*verdict));
    j["distance"] = big(r.distance);
    j["complete"] = r.complete;
    j["members"] = ordered_json::array();
    for (std::size_t i = 0; i < r.bca_set.size(); ++i) {
      ordered_json m;
      m["ordering"] = format_total(r.bca_set[i], g.unicode);
      m["index"] = big(r.indices[i]);
      m["document"] = document_to_json(document_of(r.bca_set[i]));
      j["members"].push_back(std::move(m));
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << "method: " << to_string(r.method) << "\n";
  if (verdict)
    out << "condition-star: " << to_string(*verdict) << "\n";
  out << "distance: " << r.distance << "\n";
  out << "members: " << r.bca_set.size() << (r.complete ? "" : " (possibly incomplete)") << "\n";
  for (std::size_t i = 0; i < r.bca_set.size(); ++i)
    out << "  " << format_total(r.bca_set[i], g.unicode) << "  [index " << r.indices[i] << "]\n";
}

int cmd_bca(const Globals &g, const std::string &path, const std::string &method,
            std::ostream &out) {
  const auto p = load_preorder(path);
  const auto limits = g.limits();
  if (method == "bruteforce") {
    emit_report(g, bca_bruteforce(p, limits), std::nullopt, out);
  } else if (method == "duality") {
    emit_report(g, bca_duality(p, limits), std::nullopt, out);
  } else if (method == "theorem5") {
    auto r = bca_theorem5(p, limits);
    if (!r)
      throw Error("theorem5: Condition (*) does not hold strictly, the canonical completion is not certified");
    emit_report(g, *r, std::nullopt, out);
  } else {
    // auto: certified canonical completion, then the index maximization,
    // then the exhaustive sweep.
    std::optional<Verdict> verdict;
    try {
      verdict = condition_star(p, limits).verdict;
    } catch (const TooLarge &) {
    }
    if (verdict == Verdict::strict) {
      emit_report(g, *bca_theorem5(p, limits), verdict, out);
      return kExitOk;
    }
    std::optional<ApproximationReport> r;
    try {
      r = bca_duality(p, limits);
    } catch (const TooLarge &) {
      r = bca_bruteforce(p, limits);
    }
    emit_report(g, *r, verdict, out);
  }
  return kExitOk;
}

int cmd_index(const Globals &g, const std::string &path, std::ostream &out) {
  const auto value = big(index_general(load_preorder(path), g.limits()));
  if (g.emit == Emit::json) {
    ordered_json j;
    j["index"] = value;
    out << j.dump(2) << "\n";
  } else {
    out << value << "\n";
  }
  return kExitOk;
}

int cmd_canonical(const Globals &g, const std::string &path, std::ostream &out) {
  const auto c = canonical_completion(load_preorder(path));
  if (g.emit == Emit::json)
    out << emit_document(document_of(c));
  else if (g.emit == Emit::dot)
    out << to_dot(c.to_preorder(), "canonical");
  else
    out << format_total(c, g.unicode) << "\n";
  return kExitOk;
}

int cmd_condition_star(const Globals &g, const std::string &path, std::ostream &out) {
  const auto p = load_preorder(path);
  const auto r = condition_star(p, g.limits());
  if (g.emit == Emit::json) {
    ordered_json j;
    j["verdict"] = std::string(to_string(r.verdict));
    j["checks"] = r.checks;
    j["witnesses"] = ordered_json::array();
    for (const auto &w : r.witnesses)
      j["witnesses"].push_back(witness_json(p.ground(), w));
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "checks: " << r.checks << "\n";
  const ConditionWitness *first = nullptr;
  for (const auto &w : r.witnesses)
    if (!first || (w.violates() && !first->violates()))
      first = &w;
  if (first)
    out << "witness: " << describe(p.ground(), *first) << "\n";
  return kExitOk;
}

struct GenerateArgs {
  std::string family;
  std::optional<std::size_t> z, k, m, n;
  std::size_t alphabet = 2;
  double density = 0.3;
  bool expected = false;
  bool reverse = false;
};

int cmd_generate(const Globals &g, const GenerateArgs &a, std::ostream &out) {
  auto need = [&](const std::optional<std::size_t> &v, const char *flag) {
    if (!v)
      throw UsageError("family " + a.family + " requires " + flag);
    return *v;
  };
  std::optional<Preorder> rel;
  std::optional<TotalPreorder> expected;
  if (a.family == "random") {
    if (a.expected)
      throw UsageError("random relations have no closed-form best approximation");
    rel = random_preorder(need(a.n, "--n"), g.seed, a.density);
  } else {
    const auto kind = family_kind_from_string(a.family);
    if (!kind)
      throw UsageError("unknown family " + a.family);
    FamilySpec spec{*kind, 0, a.alphabet};
    switch (*kind) {
    case FamilyKind::containment:
    case FamilyKind::refinement:
      spec.size = need(a.z, "--z");
      break;
    case FamilyKind::word_prefix:
    case FamilyKind::fence:
    case FamilyKind::crown:
      spec.size = need(a.k, "--k");
      break;
    case FamilyKind::coordinatewise:
      spec.size = need(a.m, "--m");
      break;
    default:
      spec.size = need(a.n, "--n");
    }
    rel = generate(spec);
    if (a.expected) {
      if (a.reverse)
        throw UsageError("--expected-bca is not available with --reverse");
      expected = expected_bca(spec, *rel);
    }
  }
  if (a.reverse)
    rel = dual(*rel);
  if (g.emit == Emit::dot) {
    out << to_dot(*rel, a.family);
    if (expected)
      out << to_dot(expected->to_preorder(), "expected_bca");
    return kExitOk;
  }
  if (!expected) {
    out << emit_document(document_of(*rel));
    return kExitOk;
  }
  ordered_json j;
  j["relation"] = document_to_json(document_of(*rel));
  j["expected_bca"] = document_to_json(document_of(*expected));
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_dot(const Globals &, const std::string &path, std::ostream &out) {
  out << to_dot(load_preorder(path));
  return kExitOk;
}

int cmd_covering_radius(const Globals &g, std::size_t n, std::ostream &out) {
  if (n == 0)
    throw UsageError("--n must be positive");
  const auto limits = g.limits();
  if (n > limits.preorders_max_n)
    throw TooLarge("covering-radius", n, limits.preorders_max_n);
  const auto r = covering_radius(GroundSet::numbered(n), limits);
  if (g.emit == Emit::json) {
    ordered_json j;
    j["n"] = n;
    j["radius"] = big(r.radius);
    j["witness"] = document_to_json(document_of(r.witness));
    out << j.dump(2) << "\n";
  } else if (g.emit == Emit::dot) {
    out << to_dot(r.witness, "witness");
  } else {
    out << "radius: " << r.radius << "\n";
    std::string pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && r.witness.weakly(i, j))
          pairs += (pairs.empty() ? "" : ", ") + r.witness.ground().label(i) + " >= " +
                   r.witness.ground().label(j);
    out << "witness: " << (pairs.empty() ? "equality" : pairs) << "\n";
  }
  return kExitOk;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Best complete approximations of finite preorders"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Globals g;
  const std::map<std::string, Emit> emit_names = {
      {"text", Emit::text}, {"json", Emit::json}, {"dot", Emit::dot}};
  app.add_option("--emit", g.emit, "Output format")
      ->transform(CLI::CheckedTransformer(emit_names))
      ->default_str("text");
  app.add_option("--seed", g.seed, "Seed for randomized generation");
  app.add_option("--max-n", g.max_n, "Override the element-count guards");
  app.add_option("--max-completions", g.max_completions,
                 "Override the completion-count guard");
  app.add_flag("--unicode", g.unicode, "Use order glyphs in text output");

  std::string file_a, file_b, metric = "top-diff", method = "auto";
  bool require_total = false;
  std::size_t radius_n = 0;
  GenerateArgs gen;

  auto *check = app.add_subcommand("check", "Validate a relation document");
  check->add_option("file", file_a)->required();
  check->add_flag("--total", require_total, "Also require totality");

  auto *metric_cmd = app.add_subcommand("metric", "Distance between two preorders");
  metric_cmd->add_option("first", file_a)->required();
  metric_cmd->add_option("second", file_b)->required();
  metric_cmd->add_option("--metric", metric, "top-diff, top-diff-direct or ksb")
      ->check(CLI::IsMember({"top-diff", "top-diff-direct", "ksb"}));

  auto *bca_cmd = app.add_subcommand("bca", "Best complete approximations");
  bca_cmd->add_option("file", file_a)->required();
  bca_cmd->add_option("--method", method, "auto, bruteforce, duality or theorem5")
      ->check(CLI::IsMember({"auto", "bruteforce", "duality", "theorem5"}));

  auto *index_cmd = app.add_subcommand("index", "Index of a preorder");
  index_cmd->add_option("file", file_a)->required();

  auto *canonical_cmd = app.add_subcommand("canonical", "Canonical completion");
  canonical_cmd->add_option("file", file_a)->required();

  auto *star_cmd = app.add_subcommand("condition-star", "Check Condition (*)");
  star_cmd->add_option("file", file_a)->required();

  auto *gen_cmd = app.add_subcommand("generate", "Emit a family member as a document");
  gen_cmd->add_option("family", gen.family,
                      "containment, refinement, word-prefix, coordinatewise, fence, crown, "
                      "chain, equality, indifferent or random")
      ->required();
  gen_cmd->add_option("--z", gen.z, "Size of Z (containment, refinement)");
  gen_cmd->add_option("--k", gen.k, "Word length bound, or fence/crown size");
  gen_cmd->add_option("--m", gen.m, "Grid side (coordinatewise)");
  gen_cmd->add_option("--n", gen.n, "Number of elements (chain, equality, indifferent, random)");
  gen_cmd->add_option("--alphabet", gen.alphabet, "Alphabet size (word-prefix)");
  gen_cmd->add_option("--density", gen.density, "Pair probability (random)");
  gen_cmd->add_flag("--expected-bca", gen.expected, "Also emit the closed-form bca");
  gen_cmd->add_flag("--reverse", gen.reverse, "Emit the dual relation");

  auto *dot_cmd = app.add_subcommand("dot", "Hasse diagram in Graphviz syntax");
  dot_cmd->add_option("file", file_a)->required();

  auto *radius_cmd = app.add_subcommand("covering-radius",
                                        "Largest best-approximation distance on n elements");
  radius_cmd->add_option("--n", radius_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSemantic;
  }

  try {
    if (*check)
      return cmd_check(g, file_a, require_total, out);
    if (*metric_cmd)
      return cmd_metric(g, file_a, file_b, metric, out);
    if (*bca_cmd)
      return cmd_bca(g, file_a, method, out);
    if (*index_cmd)
      return cmd_index(g, file_a, out);
    if (*canonical_cmd)
      return cmd_canonical(g, file_a, out);
    if (*star_cmd)
      return cmd_condition_star(g, file_a, out);
    if (*gen_cmd)
      return cmd_generate(g, gen, out);
    if (*dot_cmd)
      return cmd_dot(g, file_a, out);
    if (*radius_cmd)
      return cmd_covering_radius(g, radius_n, out);
  } catch (const DocumentError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const TooLarge &e) {
    err << "error: " << e.what() << " (raise the guard with --max-n or --max-completions)\n";
    return kExitGuard;
  } catch (const InvalidRelation &e) {
    err << "error: " << e.what() << "; run `check` for the witnesses\n";
    return kExitSemantic;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitSemantic;
}

} // namespace bca
