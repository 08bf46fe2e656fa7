#include "ncdtree/tree_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "ncdtree/errors.hpp"

namespace ncdtree {

TreeFormat tree_format_from_string(std::string_view name) {
  if (name == "dot") return TreeFormat::Dot;
  if (name == "newick") return TreeFormat::Newick;
  throw InvalidInput("unknown tree format '" + std::string(name) + "' (expected dot or newick)");
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string newick_label(std::string_view s) {
  bool plain = std::none_of(s.begin(), s.end(), [](char ch) {
    return std::string_view("()[]':;,").find(ch) != std::string_view::npos;
  });
  if (plain) return std::string(s);
  std::string out = "'";
  for (char ch : s) {
    if (ch == '\'') out += '\'';
    out += ch;
  }
  return out + "'";
}

std::string dot_id(const ClusterTree& t, NodeId v) {
  return t.is_leaf(v) ? "leaf_" + std::to_string(v) : t.node_name(v);
}

}  // namespace

std::string to_dot(const ClusterTree& tree) {
  std::ostringstream os;
  os << "graph ncdtree {\n";
  for (std::size_t li = 0; li < tree.leaf_count(); ++li) {
    NodeId v = tree.leaf_of(li);
    os << "  " << dot_id(tree, v) << " [label=" << dot_quote(tree.label(v)) << "];\n";
  }
  for (auto v = static_cast<NodeId>(tree.leaf_count()); static_cast<std::size_t>(v) < tree.node_count(); ++v)
    os << "  " << dot_id(tree, v) << " [label=" << dot_quote(tree.node_name(v)) << ", shape=point];\n";
  for (auto [a, b] : tree.edges()) os << "  " << dot_id(tree, a) << " -- " << dot_id(tree, b) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_newick(const ClusterTree& tree) {
  const auto root = static_cast<NodeId>(tree.leaf_count());
  std::string out = "[rooted at n0 for display only; the tree is unrooted]\n";
  // Iterative pre/post-order walk emitting "(child,child,...)name".
  struct Frame {
    NodeId node, parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{root, -1, 0}};
  out += '(';
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nbrs = tree.neighbors(f.node);
    while (f.next < nbrs.size() && nbrs[f.next] == f.parent) ++f.next;
    if (f.next < nbrs.size()) {
      NodeId child = nbrs[f.next++];
      std::size_t emitted = 0;
      for (std::size_t k = 0; k + 1 < f.next; ++k)
        if (nbrs[k] != f.parent) ++emitted;
      if (emitted > 0) out += ',';
      if (tree.is_leaf(child)) {
        out += newick_label(tree.label(child));
      } else {
        out += '(';
        stack.push_back({child, f.node, 0});
      }
      continue;
    }
    out += ')';
    out += tree.node_name(f.node);
    stack.pop_back();
  }
  out += ";\n";
  return out;
}

std::string export_tree(const ClusterTree& tree, TreeFormat format) {
  return format == TreeFormat::Dot ? to_dot(tree) : to_newick(tree);
}

namespace {

struct Token {
  enum Kind { Ident, String, Punct, End } kind;
  std::string text;
  std::size_t line;
};

class DotLexer {
 public:
  explicit DotLexer(std::string_view s) : s_(s) {}

  Token next() {
    skip();
    if (pos_ >= s_.size()) return {Token::End, "", line_};
    char ch = s_[pos_];
    if (ch == '"') {
      std::string text;
      ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
        if (s_[pos_] == '\n') ++line_;
        text += s_[pos_++];
      }
      if (pos_ >= s_.size()) throw ParseError(line_, "unterminated string");
      ++pos_;
      return {Token::String, std::move(text), line_};
    }
    if (s_.substr(pos_, 2) == "--") {
      pos_ += 2;
      return {Token::Punct, "--", line_};
    }
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '.'))
        ++pos_;
      return {Token::Ident, std::string(s_.substr(start, pos_ - start)), line_};
    }
    ++pos_;
    return {Token::Punct, std::string(1, ch), line_};
  }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_.substr(pos_, 2) == "//" || s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

ClusterTree parse_dot(std::string_view text) {
  DotLexer lex(text);
  Token t = lex.next();
  if (t.kind != Token::Ident || t.text != "graph") throw ParseError(t.line, "expected 'graph'");
  t = lex.next();
  if (t.kind == Token::Ident || t.kind == Token::String) t = lex.next();
  if (t.text != "{") throw ParseError(t.line, "expected '{'");

  std::vector<std::string> node_ids;            // declaration order
  std::map<std::string, std::string> label_of;  // id -> label attribute
  std::vector<std::pair<std::string, std::string>> edge_ids;
  std::size_t last_line = t.line;

  for (t = lex.next(); !(t.kind == Token::Punct && t.text == "}"); t = lex.next()) {
    if (t.kind == Token::End) throw ParseError(t.line, "missing '}'");
    if (t.kind == Token::Punct && t.text == ";") continue;
    if (t.kind != Token::Ident && t.kind != Token::String) throw ParseError(t.line, "unexpected '" + t.text + "'");
    std::string id = t.text;
    t = lex.next();
    if (t.kind == Token::Punct && t.text == "--") {
      Token other = lex.next();
      if (other.kind != Token::Ident && other.kind != Token::String) throw ParseError(other.line, "expected node after '--'");
      edge_ids.emplace_back(id, other.text);
      t = lex.next();
    } else if (t.kind == Token::Punct && t.text == "[") {
      for (t = lex.next(); !(t.kind == Token::Punct && t.text == "]"); t = lex.next()) {
        if (t.kind == Token::End) throw ParseError(t.line, "unterminated attribute list");
        if (t.kind == Token::Punct && t.text == ",") continue;
        std::string key = t.text;
        Token eq = lex.next();
        Token value = lex.next();
        if (eq.text != "=") throw ParseError(eq.line, "expected '=' in attribute list");
        if (key == "label") label_of[id] = value.text;
      }
      if (id != "node" && id != "edge" && id != "graph") node_ids.push_back(id);
      t = lex.next();
    } else if (id != "node" && id != "edge") {
      node_ids.push_back(id);
    }
    last_line = t.line;
    if (t.kind == Token::Punct && t.text == "}") break;
    if (!(t.kind == Token::Punct && t.text == ";")) throw ParseError(t.line, "expected ';'");
  }

  // Leaves are declared "leaf_<k>", internal nodes "n<k>".
  std::vector<std::string> labels;
  std::vector<std::size_t> leaf_node_of_label;
  std::map<std::string, NodeId> node_of;
  std::vector<std::string> internal;
  for (const auto& id : node_ids) {
    if (id.rfind("leaf_", 0) == 0) {
      auto it = label_of.find(id);
      if (it == label_of.end()) throw ParseError(last_line, "leaf '" + id + "' has no label");
      std::size_t k = 0;
      auto digits = std::string_view(id).substr(5);
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec != std::errc{} || p != digits.data() + digits.size()) throw ParseError(last_line, "bad leaf id '" + id + "'");
      labels.push_back(it->second);
      leaf_node_of_label.push_back(k);
      node_of[id] = static_cast<NodeId>(k);
    } else {
      internal.push_back(id);
    }
  }
  const std::size_t n = labels.size();
  for (const auto& id : internal) {
    std::size_t k = 0;
    auto digits = std::string_view(id).substr(1);
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (id.empty() || id[0] != 'n' || ec != std::errc{} || p != digits.data() + digits.size())
      throw ParseError(last_line, "bad internal node id '" + id + "'");
    node_of[id] = static_cast<NodeId>(n + k);
  }
  std::vector<std::size_t> leaf_labels(n, SIZE_MAX);
  for (std::size_t li = 0; li < n; ++li) {
    if (leaf_node_of_label[li] >= n) throw ParseError(last_line, "leaf id out of range");
    leaf_labels[leaf_node_of_label[li]] = li;
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : edge_ids) {
    auto ia = node_of.find(a), ib = node_of.find(b);
    if (ia == node_of.end() || ib == node_of.end())
      throw ParseError(last_line, "edge references undeclared node '" + (ia == node_of.end() ? a : b) + "'");
    edges.emplace_back(ia->second, ib->second);
  }
  try {
    return ClusterTree::from_edges(std::move(labels), edges, std::move(leaf_labels));
  } catch (const InvalidInput& e) {
    throw ParseError(last_line, e.what());
  }
}

}  // namespace ncdtree
