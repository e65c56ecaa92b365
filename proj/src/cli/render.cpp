#include "bca/render.hpp"

#include <sstream>

namespace bca {

std::string format_total(const TotalPreorder &t, bool unicode) {
  const std::string tie = unicode ? " ∼ " : " ~ ";
  const std::string gt = unicode ? " ≻ " : " > ";
  std::string out;
  for (std::size_t b = 0; b < t.block_count(); ++b) {
    if (b != 0)
      out += gt;
    bool first = true;
    for (const auto &label : t.ground().labels_of(t.blocks()[b])) {
      if (!first)
        out += tie;
      out += label;
      first = false;
    }
  }
  return out;
}

std::string format_subset(const GroundSet &ground, SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (const auto &label : ground.labels_of(s)) {
    if (!first)
      out += ',';
    out += label;
    first = false;
  }
  return out + "}";
}

namespace {

std::string quoted(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string to_dot(const Preorder &p, const std::string &name) {
  const auto h = hasse_edges(p);
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box];\n";
  for (std::size_t c = 0; c < h.classes.size(); ++c)
    os << "  n" << c << " [label=" << quoted(h.node_labels[c]) << "];\n";
  for (const auto &[upper, lower] : h.edges)
    os << "  n" << upper << " -> n" << lower << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace bca
