#include "bca/document.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace bca {

namespace {

using nlohmann::ordered_json;

template <typename T> T field(const ordered_json &j, const char *key) {
  if (!j.contains(key))
    throw DocumentError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception &) {
    throw DocumentError(std::string("field \"") + key + "\" has the wrong type");
  }
}

} // namespace

RelationDocument parse_document(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

RelationDocument document_from_json(const ordered_json &j) {
  if (!j.is_object())
    throw DocumentError("document must be a JSON object");
  RelationDocument doc;
  doc.schema = field<std::string>(j, "schema");
  if (doc.schema != kDocumentSchema)
    throw DocumentError("unsupported schema \"" + doc.schema + "\"");
  doc.labels = field<std::vector<std::string>>(j, "labels");
  if (!j.contains("pairs") || !j.at("pairs").is_array())
    throw DocumentError("field \"pairs\" must be an array");
  for (const auto &p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2)
      throw DocumentError("each pair must have exactly two indices");
    std::size_t ij[2];
    for (std::size_t k = 0; k < 2; ++k) {
      if (!p[k].is_number_unsigned() && !p[k].is_number_integer())
        throw DocumentError("pair indices must be integers");
      const auto v = p[k].get<long long>();
      if (v < 0 || static_cast<std::size_t>(v) >= doc.labels.size())
        throw DocumentError("pair index " + std::to_string(v) + " out of range");
      ij[k] = static_cast<std::size_t>(v);
    }
    doc.pairs.emplace_back(ij[0], ij[1]);
  }
  if (j.contains("reflexive_closure"))
    doc.reflexive_closure = field<bool>(j, "reflexive_closure");
  if (j.contains("transitive_closure"))
    doc.transitive_closure = field<bool>(j, "transitive_closure");
  return doc;
}

RelationDocument read_document(const std::string &path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw DocumentError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_document(text);
}

std::string emit_document(const RelationDocument &doc) {
  return document_to_json(doc).dump(2) + "\n";
}

ordered_json document_to_json(const RelationDocument &doc) {
  ordered_json j;
  j["schema"] = doc.schema;
  j["labels"] = doc.labels;
  j["pairs"] = ordered_json::array();
  for (const auto &[a, b] : doc.pairs)
    j["pairs"].push_back({a, b});
  j["reflexive_closure"] = doc.reflexive_closure;
  j["transitive_closure"] = doc.transitive_closure;
  return j;
}

Relation to_relation(const RelationDocument &doc) {
  std::optional<GroundSet> ground;
  try {
    ground.emplace(doc.labels);
  } catch (const Error &e) {
    throw DocumentError(std::string("bad labels: ") + e.what());
  }
  Relation rel = Relation::from_pairs(*ground, doc.pairs);
  if (doc.reflexive_closure)
    rel = rel.with_reflexive_closure();
  if (doc.transitive_closure)
    rel = rel.with_transitive_closure();
  return rel;
}

RelationDocument document_of(const Relation &rel) {
  RelationDocument doc;
  doc.labels = rel.ground().labels();
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = 0; j < rel.size(); ++j)
      if (rel.holds(i, j))
        doc.pairs.emplace_back(i, j);
  return doc;
}

RelationDocument document_of(const Preorder &p) { return document_of(p.relation()); }

RelationDocument document_of(const TotalPreorder &t) { return document_of(t.to_preorder()); }

} // namespace bca
