#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "valkit/cli/dispatch.hpp"
#include "valkit/error.hpp"
#include "valkit/padic.hpp"

namespace valkit::cli {

namespace {

struct Node {
  std::map<std::int64_t, Node> children;
  std::vector<std::size_t> elements;  // passing through
};

}  // namespace

Tree render_tree(Prime p, int depth, const std::vector<Rational>& elements, const std::vector<std::string>& labels) {
  require_prime(p);
  if (p > 5) fail(ErrorKind::TooWide, "tree rendering supports p <= 5");
  if (depth < 1 || depth > 6) fail(ErrorKind::TooWide, "tree depth must lie in 1..6");
  if (elements.empty() || elements.size() > 8) fail(ErrorKind::TooWide, "tree rendering takes 1 to 8 elements");

  auto label = [&](std::size_t i) { return i < labels.size() ? labels[i] : valkit::to_string(elements[i]); };

  Node root;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto x = PadicNumber::from_rational(elements[i], p, depth);
    if (!x.is_integral()) fail(ErrorKind::InvalidArgument, label(i) + " is not a p-adic integer");
    const auto digits = base_p_digits(x.representative(), p, static_cast<std::size_t>(depth));
    Node* node = &root;
    node->elements.push_back(i);
    for (auto d : digits) {
      node = &node->children[d];
      node->elements.push_back(i);
    }
  }

  Tree tree;
  // Meets keyed by the level where the two branches part.
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> levels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const auto diff = PadicNumber::from_rational(elements[i] - elements[j], p, depth);
      const Valuation v = diff.valuation();
      const std::int64_t level = v.is_infinite() ? depth : std::min<std::int64_t>(v.value(), depth);
      tree.meets.push_back({i, j, level});
      levels[{i, j}] = level;
    }
  }

  std::ostringstream os;
  os << "Z_" << p << " to depth " << depth << '\n';
  auto annotate = [&](const Node& node, std::int64_t level) {
    std::string note;
    if (node.children.size() > 1 || level == depth) {
      std::vector<std::string> pairs;
      for (const auto& [key, at] : levels) {
        const bool here = at == level && std::find(node.elements.begin(), node.elements.end(), key.first) != node.elements.end() &&
                          std::find(node.elements.begin(), node.elements.end(), key.second) != node.elements.end();
        if (here) pairs.push_back(label(key.first) + "," + label(key.second));
      }
      if (!pairs.empty()) {
        note = "  <- meet v=" + std::to_string(level) + ":";
        for (const auto& s : pairs) note += " {" + s + "}";
      }
    }
    if (level == depth) {
      note += "  =";
      for (auto i : node.elements) note += " " + label(i);
    }
    return note;
  };

  os << "*" << annotate(root, 0) << '\n';
  std::function<void(const Node&, std::int64_t, const std::string&)> walk = [&](const Node& node, std::int64_t level,
                                                                             const std::string& indent) {
    std::size_t k = 0;
    for (const auto& [digit, child] : node.children) {
      const bool last = ++k == node.children.size();
      os << indent << (last ? "`-- " : "+-- ") << digit << annotate(child, level + 1) << '\n';
      walk(child, level + 1, indent + (last ? "    " : "|   "));
    }
  };
  walk(root, 0, "");
  tree.diagram = os.str();
  return tree;
}

}  // namespace valkit::cli
