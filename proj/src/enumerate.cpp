#include "segal/enumerate.hpp"

#include <algorithm>
#include <map>

namespace segal {

namespace {

RootedForest from_parents(const std::vector<int>& parent) {
  RootedForest f;
  int n = static_cast<int>(parent.size());
  f.parent = parent;
  f.children.assign(n, {});
  f.labels.assign(n, "");
  for (int v = 0; v < n; ++v) {
    f.labels[v] = "v" + std::to_string(v);
    if (parent[v] < 0)
      f.roots.push_back(v);
    else
      f.children[parent[v]].push_back(v);
  }
  f.flavour = Flavour::labelled;
  return f;
}

}  // namespace

std::vector<RootedForest> all_rooted_trees(int n) {
  std::vector<RootedForest> out;
  if (n == 0) return out;
  std::map<std::string, RootedForest> classes;
  std::vector<int> parent(n, -1);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      RootedForest f = from_parents(parent);
      classes.emplace(canonical_code(f, Flavour::plain), f);
      return;
    }
    for (int p = 0; p < v; ++p) {
      parent[v] = p;
      self(self, v + 1);
    }
  };
  rec(rec, 1);
  for (auto& [code, f] : classes) out.push_back(f);
  return out;
}

std::vector<RootedForest> all_ordered_trees(int n) {
  std::vector<RootedForest> out;
  if (n == 0) return out;
  std::map<std::string, RootedForest> classes;
  std::vector<int> parent(n, -1);
  // Ordered trees in preorder: each new vertex attaches to a vertex on the
  // rightmost path, becoming its last child.
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      RootedForest f = from_parents(parent);
      classes.emplace(canonical_code(f, Flavour::planar), f);
      return;
    }
    int p = v - 1;
    while (p >= 0) {
      parent[v] = p;
      self(self, v + 1);
      p = parent[p];
    }
  };
  rec(rec, 1);
  for (auto& [code, f] : classes) out.push_back(f);
  return out;
}

namespace {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.nv = n;
  g.edges = edges;
  std::sort(g.edges.begin(), g.edges.end());
  for (int v = 0; v < n; ++v) g.labels.push_back("v" + std::to_string(v));
  return g;
}

std::string graph_class_code(const Graph& g) {
  Graph u = g;
  u.labelled = false;
  PartSub whole{u.all_vertices(), u.edges_within(u.all_vertices()), 0, 1};
  for (int v = 0; v < u.nv; ++v) whole.set_part(v, 1);
  return psub_code(u, whole);
}

}  // namespace

std::vector<Graph> all_simple_graphs(int n) {
  std::vector<Graph> out;
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::map<std::string, Graph> classes;
  for (Emask pick = 0; pick < (Emask{1} << slots.size()); ++pick) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (pick & (Emask{1} << i)) edges.push_back(slots[i]);
    Graph g = graph_from_edges(n, edges);
    classes.emplace(graph_class_code(g), g);
  }
  for (auto& [code, g] : classes) out.push_back(g);
  return out;
}

std::vector<Graph> all_multigraphs(int n, int max_edges) {
  std::vector<Graph> out;
  std::map<std::string, Graph> classes;
  for (int nv = 0; nv <= n; ++nv) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < nv; ++a)
      for (int b = a + 1; b < nv; ++b) slots.emplace_back(a, b);
    std::vector<int> mult(slots.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int used) -> void {
      if (i == slots.size()) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < slots.size(); ++k)
          for (int c = 0; c < mult[k]; ++c) edges.push_back(slots[k]);
        Graph g = graph_from_edges(nv, edges);
        classes.emplace(graph_class_code(g), g);
        return;
      }
      for (int m = 0; m + used <= max_edges; ++m) {
        mult[i] = m;
        self(self, i + 1, used + m);
      }
      mult[i] = 0;
    };
    rec(rec, 0, 0);
  }
  for (auto& [code, g] : classes) out.push_back(g);
  return out;
}

}  // namespace segal
