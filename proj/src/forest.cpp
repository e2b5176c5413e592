#include "segal/forest.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace segal {

Flavour flavour_from_string(std::string_view s) {
  if (s == "labelled" || s == "labeled") return Flavour::labelled;
  if (s == "planar") return Flavour::planar;
  if (s == "plain") return Flavour::plain;
  throw std::invalid_argument("unknown flavour: " + std::string(s));
}

std::string_view flavour_name(Flavour f) {
  switch (f) {
    case Flavour::labelled: return "labelled";
    case Flavour::planar: return "planar";
    case Flavour::plain: return "plain";
  }
  return "?";
}

std::vector<int> RootedForest::dfs_order() const {
  std::vector<int> order;
  order.reserve(parent.size());
  std::vector<int> stack;
  for (auto r = roots.rbegin(); r != roots.rend(); ++r) stack.push_back(*r);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto c = children[v].rbegin(); c != children[v].rend(); ++c)
      stack.push_back(*c);
  }
  return order;
}

bool RootedForest::is_path_with_leaf_root() const {
  if (size() == 0) return true;
  if (!is_tree()) return false;
  if (degree(roots[0]) > 1) return false;
  for (int v = 0; v < size(); ++v)
    if (degree(v) > 2) return false;
  return true;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  Flavour flavour;
  RootedForest out;
  std::map<std::string, int> seen_labels;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  int parse_node(int parent_id) {
    skip_ws();
    std::size_t start = pos;
    std::string label;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      if (flavour == Flavour::labelled)
        throw ParseError("labelled flavour requires a label, found '*'", start);
    } else {
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        label.push_back(text[pos++]);
      if (label.empty()) throw ParseError("expected a node", start);
      if (flavour != Flavour::labelled)
        throw ParseError("label '" + label + "' in unlabelled flavour", start);
      if (!seen_labels.emplace(label, 0).second)
        throw ParseError("duplicate label '" + label + "'", start);
    }
    int id = out.size();
    out.parent.push_back(parent_id);
    out.children.emplace_back();
    out.labels.push_back(label);
    if (parent_id >= 0)
      out.children[parent_id].push_back(id);
    else
      out.roots.push_back(id);
    return id;
  }

  void parse_tree(int parent_id) {
    int id = parse_node(parent_id);
    if (peek() == '(') {
      ++pos;
      parse_tree(id);
      while (peek() == ',') {
        ++pos;
        parse_tree(id);
      }
      if (peek() != ')') throw ParseError("expected ',' or ')'", pos);
      ++pos;
    }
  }

  RootedForest run() {
    out.flavour = flavour;
    if (at_end()) return out;  // the empty forest
    parse_tree(-1);
    while (peek() == ';') {
      ++pos;
      parse_tree(-1);
    }
    if (!at_end()) throw ParseError("trailing input", pos);
    if (out.size() > 30) throw ParseError("forests are limited to 30 vertices", 0);
    return out;
  }
};

}  // namespace

RootedForest parse_forest(std::string_view text, Flavour flavour) {
  Parser p{text, 0, flavour, {}, {}};
  return p.run();
}

namespace {

void format_tree(const RootedForest& f, int v, std::string& s) {
  if (f.flavour == Flavour::labelled)
    s += f.labels[v];
  else
    s += '*';
  if (!f.children[v].empty()) {
    s += '(';
    for (std::size_t i = 0; i < f.children[v].size(); ++i) {
      if (i) s += ',';
      format_tree(f, f.children[v][i], s);
    }
    s += ')';
  }
}

}  // namespace

std::string format_forest(const RootedForest& f) {
  std::string s;
  for (std::size_t i = 0; i < f.roots.size(); ++i) {
    if (i) s += ';';
    format_tree(f, f.roots[i], s);
  }
  return s;
}

bool is_lower_set(const RootedForest& f, Vset host, Vset s) {
  if ((s & ~host) != 0) return false;
  for (int v = 0; v < f.size(); ++v) {
    if (!has_vertex(s, v)) continue;
    int p = f.parent[v];
    if (p >= 0 && has_vertex(host, p) && !has_vertex(s, p)) return false;
  }
  return true;
}

std::vector<Vset> lower_sets_within(const RootedForest& f, Vset host) {
  // Enumerate by extending along the host's traversal: a subset is lower iff
  // every member's host-parent is a member.
  std::vector<Vset> result;
  int n = set_size(host);
  if (n > 22) throw std::length_error("host too large for lower-set enumeration");
  std::vector<int> verts;
  for (int v = 0; v < f.size(); ++v)
    if (has_vertex(host, v)) verts.push_back(v);
  for (Vset pick = 0;; ++pick) {
    Vset s = 0;
    for (int i = 0; i < n; ++i)
      if (has_vertex(pick, i)) s |= single(verts[i]);
    if (is_lower_set(f, host, s)) result.push_back(s);
    if (pick + 1 == (Vset{1} << n)) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Vset> lower_sets(const RootedForest& f) {
  return lower_sets_within(f, f.all_vertices());
}

std::vector<Vset> admissible_subforests(const RootedForest& f) {
  std::vector<Vset> lows = lower_sets(f);
  std::set<Vset> out;
  for (Vset li : lows)
    for (Vset lj : lows)
      if ((lj & ~li) == 0) out.insert(li & ~lj);
  return std::vector<Vset>(out.begin(), out.end());
}

RootedForest restrict_to(const RootedForest& f, Vset s) {
  RootedForest out;
  out.flavour = f.flavour;
  std::vector<int> newid(f.size(), -1);
  for (int v : f.dfs_order()) {
    if (!has_vertex(s, v)) continue;
    int id = out.size();
    newid[v] = id;
    int p = f.parent[v];
    bool keeps_parent = p >= 0 && has_vertex(s, p);
    out.parent.push_back(keeps_parent ? newid[p] : -1);
    out.children.emplace_back();
    out.labels.push_back(f.labels.empty() ? std::string{} : f.labels[v]);
    if (keeps_parent)
      out.children[newid[p]].push_back(id);
    else
      out.roots.push_back(id);
  }
  return out;
}

int span_components(const RootedForest& f, Vset s) {
  int c = 0;
  for (int v = 0; v < f.size(); ++v) {
    if (!has_vertex(s, v)) continue;
    int p = f.parent[v];
    if (p < 0 || !has_vertex(s, p)) ++c;
  }
  return c;
}

bool span_connected(const RootedForest& f, Vset s) {
  return span_components(f, s) == 1;
}

std::vector<Layering> enumerate_layerings(const RootedForest& t, int n) {
  if (n < 0) throw std::invalid_argument("dimension must be nonnegative");
  std::vector<Layering> out;
  if (n == 0) {
    out.push_back(Layering{0, {0}});
    return out;
  }
  for (Vset host : admissible_subforests(t)) {
    std::vector<Vset> lows = lower_sets_within(t, host);
    Layering lay;
    lay.host = host;
    lay.chain.assign(static_cast<std::size_t>(n) + 1, 0);
    lay.chain[0] = host;
    // positions 1..n-1 range over nested lower sets, position n stays empty
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        out.push_back(lay);
        return;
      }
      for (Vset l : lows) {
        if ((l & ~lay.chain[i - 1]) != 0) continue;
        lay.chain[i] = l;
        self(self, i + 1);
      }
    };
    rec(rec, 1);
  }
  return out;
}

namespace {

int layer_of(const Layering& lay, int v) {
  int deepest = 0;
  for (std::size_t i = 0; i < lay.chain.size(); ++i)
    if (has_vertex(lay.chain[i], v)) deepest = static_cast<int>(i);
  return deepest + 1;  // top layer L0\L1 gets index 1
}

char layer_char(int layer) {
  return layer < 10 ? static_cast<char>('0' + layer)
                    : static_cast<char>('a' + (layer - 10));
}

std::string vertex_code(const RootedForest& t, const Layering& lay, Flavour flavour, int v) {
  std::string s = "(";
  s += layer_char(layer_of(lay, v));
  if (flavour == Flavour::labelled) {
    s += ':';
    s += t.labels[v];
  }
  std::vector<std::string> kids;
  for (int c : t.children[v])
    if (has_vertex(lay.host, c)) kids.push_back(vertex_code(t, lay, flavour, c));
  if (flavour == Flavour::plain || flavour == Flavour::labelled)
    std::sort(kids.begin(), kids.end());
  for (auto& k : kids) s += k;
  s += ')';
  return s;
}

}  // namespace

std::string canonical_code(const RootedForest& t, const Layering& lay, Flavour flavour) {
  std::vector<std::string> comps;
  for (int v : t.dfs_order()) {
    if (!has_vertex(lay.host, v)) continue;
    int p = t.parent[v];
    if (p >= 0 && has_vertex(lay.host, p)) continue;  // not a span root
    comps.push_back(vertex_code(t, lay, flavour, v));
  }
  if (flavour == Flavour::plain || flavour == Flavour::labelled)
    std::sort(comps.begin(), comps.end());
  std::string code;
  code += flavour == Flavour::labelled ? 'L' : (flavour == Flavour::planar ? 'P' : 'N');
  code += ':';
  for (auto& c : comps) code += c;
  return code;
}

std::string canonical_code(const RootedForest& t, Vset subforest, Flavour flavour) {
  return canonical_code(t, Layering{subforest, {subforest, 0}}, flavour);
}

std::string canonical_code(const RootedForest& t, Flavour flavour) {
  return canonical_code(t, t.all_vertices(), flavour);
}

bool is_single_cut_step(const RootedForest& t, Vset prev, Vset next) {
  if ((next & ~prev) != 0) return false;
  Vset other = prev & ~next;
  return is_lower_set(t, prev, next) || is_lower_set(t, prev, other);
}

CutWitness subtree_reachable(const RootedForest& t, Vset s) {
  CutWitness w;
  if (!t.is_tree()) return w;
  if (s != 0 && !span_connected(t, s)) return w;
  w.ok = true;
  Vset cur = t.all_vertices();
  w.stages.push_back(cur);
  if (s == cur) return w;
  if (s == 0) {
    w.stages.push_back(0);  // keep the empty upper part of the trivial cut
    return w;
  }

  // Descendant closure within the current forest.
  auto subtree_at = [&](Vset within, int v) {
    Vset res = single(v);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int u = 0; u < t.size(); ++u) {
        if (!has_vertex(within, u) || has_vertex(res, u)) continue;
        int p = t.parent[u];
        if (p >= 0 && has_vertex(within, p) && has_vertex(res, p)) {
          res |= single(u);
          grew = true;
        }
      }
    }
    return res;
  };

  // Cut below the vertex of S closest to the root, keeping the upper side.
  int w0 = -1;
  for (int v = 0; v < t.size(); ++v) {
    if (!has_vertex(s, v)) continue;
    int p = t.parent[v];
    if (p < 0 || !has_vertex(s, p)) w0 = v;
  }
  if (!has_vertex(s, t.roots[0])) {
    cur = subtree_at(cur, w0);
    w.stages.push_back(cur);
    if (cur == s) return w;
  }

  // Now w0 is the root of cur. Repeatedly cut away the subtrees hanging off
  // S at a single vertex, keeping the lower side.
  while (cur != s) {
    int attach = -1;
    for (int v = 0; v < t.size(); ++v) {
      if (!has_vertex(cur, v) || has_vertex(s, v)) continue;
      int p = t.parent[v];
      if (p >= 0 && has_vertex(s, p)) {
        attach = p;
        break;
      }
    }
    Vset removed = 0;
    for (int c : t.children[attach])
      if (has_vertex(cur, c) && !has_vertex(s, c)) removed |= subtree_at(cur, c);
    cur &= ~removed;
    w.stages.push_back(cur);
  }
  return w;
}

}  // namespace segal
