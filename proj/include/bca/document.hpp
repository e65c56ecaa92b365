#ifndef BCA_DOCUMENT_HPP
#define BCA_DOCUMENT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bca/errors.hpp"
#include "bca/order.hpp"

namespace bca {

inline constexpr std::string_view kDocumentSchema = "preorder-doc/1";

/// Unreadable file, malformed JSON or a document violating the schema.
class DocumentError : public Error {
public:
  using Error::Error;
};

/// JSON transport for relations. `pairs` holds (i, j) meaning x_i ≿ x_j; the
/// closure flags ask the reader to close the relation before validating it,
/// so Hasse diagrams can be written down directly.
struct RelationDocument {
  std::string schema{kDocumentSchema};
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  bool reflexive_closure = false;
  bool transitive_closure = false;

  friend bool operator==(const RelationDocument &, const RelationDocument &) = default;
};

/// Throws DocumentError.
RelationDocument parse_document(std::string_view text);
RelationDocument read_document(const std::string &path);

/// Pretty-printed JSON with a fixed key order.
std::string emit_document(const RelationDocument &doc);

nlohmann::ordered_json document_to_json(const RelationDocument &doc);
/// Throws DocumentError.
RelationDocument document_from_json(const nlohmann::ordered_json &j);

/// The relation after the requested closures. Throws DocumentError when the
/// labels do not form a valid ground set.
Relation to_relation(const RelationDocument &doc);

/// Every pair of the relation, row-major, closures off.
RelationDocument document_of(const Relation &rel);
RelationDocument document_of(const Preorder &p);
RelationDocument document_of(const TotalPreorder &t);

} // namespace bca

#endif
