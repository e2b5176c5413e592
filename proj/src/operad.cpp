#include "segal/operad.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace segal {

ColouredOperadData build_operad(const LevelwiseSimplicialSet& x, int max_arity) {
  if (max_arity < 1 || max_arity > x.truncation)
    throw std::invalid_argument("max_arity must be within the truncation");
  ColouredOperadData o;
  o.x = &x;
  o.max_arity = max_arity;
  o.inputs.assign(max_arity + 1, {});
  o.output.assign(max_arity + 1, {});
  for (int n = 1; n <= max_arity; ++n) {
    int sz = x.level_size(n);
    o.inputs[n].assign(sz, std::vector<int>(n));
    o.output[n].assign(sz, 0);
    for (int i = 0; i < n; ++i) {
      auto edge = face_composite(x, n, {i, i + 1});
      for (int e = 0; e < sz; ++e) o.inputs[n][e][i] = edge[e];
    }
    auto long_edge = face_composite(x, n, {0, n});
    for (int e = 0; e < sz; ++e) {
      o.output[n][e] = long_edge[e];
      std::vector<int> key;
      key.push_back(n);
      for (int c : o.inputs[n][e]) key.push_back(c);
      key.push_back(long_edge[e]);
      o.ops[key].push_back(e);
    }
  }
  return o;
}

std::vector<int> operations(const ColouredOperadData& o, const std::vector<int>& in,
                            int out) {
  std::vector<int> key;
  key.push_back(static_cast<int>(in.size()));
  for (int c : in) key.push_back(c);
  key.push_back(out);
  auto it = o.ops.find(key);
  return it == o.ops.end() ? std::vector<int>{} : it->second;
}

CompositionInstance cocompose(const ColouredOperadData& o, int element,
                              const std::vector<int>& shape) {
  const auto& x = *o.x;
  int n = static_cast<int>(shape.size());
  int total = std::accumulate(shape.begin(), shape.end(), 0);
  if (total > o.max_arity) throw std::invalid_argument("cocompose: arity out of range");
  for (int k : shape)
    if (k < 1) throw std::invalid_argument("cocompose: arities must be positive");

  CompositionInstance inst;
  inst.result = {total, element};
  std::vector<int> cuts{0};  // prefix sums: vertices of the outer face
  for (int k : shape) cuts.push_back(cuts.back() + k);
  inst.outer = {n, face_composite(x, total, cuts)[element]};
  for (int i = 0; i < n; ++i) {
    std::vector<int> range;
    for (int v = cuts[i]; v <= cuts[i + 1]; ++v) range.push_back(v);
    inst.inner.emplace_back(shape[i], face_composite(x, total, range)[element]);
  }
  return inst;
}

int compose(const ColouredOperadData& o, std::pair<int, int> outer,
            const std::vector<std::pair<int, int>>& inner) {
  auto [n, oe] = outer;
  if (static_cast<int>(inner.size()) != n)
    throw std::invalid_argument("compose: slot count mismatch");
  std::vector<int> shape;
  std::vector<int> target_inputs;
  int total = 0;
  for (int i = 0; i < n; ++i) {
    auto [k, ie] = inner[i];
    if (o.output[k][ie] != o.inputs[n][oe][i])
      throw std::invalid_argument("compose: colour mismatch in slot " + std::to_string(i));
    shape.push_back(k);
    total += k;
    for (int c : o.inputs[k][ie]) target_inputs.push_back(c);
  }
  if (total > o.max_arity) throw std::invalid_argument("compose: arity out of range");

  int found = -1;
  for (int cand : operations(o, target_inputs, o.output[n][oe])) {
    auto inst = cocompose(o, cand, shape);
    if (inst.outer.second != oe) continue;
    bool all = true;
    for (int i = 0; i < n; ++i)
      if (inst.inner[i].second != inner[i].second) all = false;
    if (!all) continue;
    if (found >= 0) throw std::runtime_error("compose: multiple solutions (not 2-Segal)");
    found = cand;
  }
  if (found < 0) throw std::runtime_error("compose: no solution (not 2-Segal)");
  return found;
}

InvertibilityReport check_invertible(const ColouredOperadData& o) {
  InvertibilityReport r;
  const auto& x = *o.x;

  // Unary operation sets are the unit singletons by construction; verify.
  for (int e = 0; e < x.level_size(1); ++e)
    if (o.inputs[1][e] != std::vector<int>{e} || o.output[1][e] != e) {
      r.invertible = false;
      r.witness = InvertibilityWitness{{1}, "unary profile is not the unit singleton"};
      return r;
    }

  // Count, per (arity, output colour), the available operations.
  std::vector<std::vector<long>> by_output(o.max_arity + 1);
  for (int k = 1; k <= o.max_arity; ++k) {
    by_output[k].assign(x.level_size(1), 0);
    for (int e = 0; e < x.level_size(k); ++e) ++by_output[k][o.output[k][e]];
  }

  std::vector<int> shape;
  auto shapes = [&](auto&& self, int remaining, int total) -> bool {
    if (remaining == 0) {
      int n = static_cast<int>(shape.size());
      // Injectivity of cocomposition along this shape.
      std::vector<std::vector<int>> seen;
      for (int e = 0; e < x.level_size(total); ++e) {
        auto inst = cocompose(o, e, shape);
        std::vector<int> key{inst.outer.second};
        for (auto& [k, ie] : inst.inner) key.push_back(ie);
        seen.push_back(std::move(key));
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        r.invertible = false;
        r.witness = InvertibilityWitness{shape, "cocomposition is not injective"};
        return false;
      }
      long expected = 0;
      for (int oe = 0; oe < x.level_size(n); ++oe) {
        long ways = 1;
        for (int i = 0; i < n; ++i) ways *= by_output[shape[i]][o.inputs[n][oe][i]];
        expected += ways;
      }
      if (expected != static_cast<long>(x.level_size(total))) {
        r.invertible = false;
        r.witness = InvertibilityWitness{
            shape, "composable tuples=" + std::to_string(expected) +
                       " vs operations=" + std::to_string(x.level_size(total))};
        return false;
      }
      return true;
    }
    for (int k = 1; k <= remaining; ++k) {
      shape.push_back(k);
      bool cont = self(self, remaining - k, total);
      shape.pop_back();
      if (!cont) return false;
    }
    return true;
  };
  for (int total = 1; total <= o.max_arity && r.invertible; ++total)
    shapes(shapes, total, total);
  return r;
}

namespace {

// A flavour-respecting isomorphism between two spanned subforests of t, found
// by matching components and children with equal codes. Returns the vertex
// map or nothing.
std::optional<std::vector<int>> find_span_iso(const RootedForest& t, Flavour flavour,
                                              Vset from, Vset to) {
  if (set_size(from) != set_size(to)) return std::nullopt;
  if (flavour == Flavour::labelled) {
    if (from != to) return std::nullopt;
    std::vector<int> id(t.size(), -1);
    for (int v = 0; v < t.size(); ++v)
      if (has_vertex(from, v)) id[v] = v;
    return id;
  }
  auto span_roots = [&](Vset s) {
    std::vector<int> rs;
    for (int v : t.dfs_order()) {
      if (!has_vertex(s, v)) continue;
      int p = t.parent[v];
      if (p < 0 || !has_vertex(s, p)) rs.push_back(v);
    }
    return rs;
  };
  auto subtree_code = [&](Vset s, int v) {
    // per-vertex code within the span, ignoring layers
    auto rec = [&](auto&& self, int u) -> std::string {
      std::string c = "(";
      std::vector<std::string> kids;
      for (int w : t.children[u])
        if (has_vertex(s, w)) kids.push_back(self(self, w));
      if (flavour == Flavour::plain) std::sort(kids.begin(), kids.end());
      for (auto& k : kids) c += k;
      c += ')';
      return c;
    };
    return rec(rec, v);
  };
  std::vector<int> map(t.size(), -1);
  auto match = [&](auto&& self, int a, int b) -> bool {
    map[a] = b;
    std::vector<int> ka, kb;
    for (int w : t.children[a])
      if (has_vertex(from, w)) ka.push_back(w);
    for (int w : t.children[b])
      if (has_vertex(to, w)) kb.push_back(w);
    if (ka.size() != kb.size()) return false;
    if (flavour == Flavour::planar) {
      for (std::size_t i = 0; i < ka.size(); ++i) {
        if (subtree_code(from, ka[i]) != subtree_code(to, kb[i])) return false;
        if (!self(self, ka[i], kb[i])) return false;
      }
      return true;
    }
    // plain: sort both sides by code and pair within equal-code runs
    auto by_code = [&](Vset s, std::vector<int>& ks) {
      std::stable_sort(ks.begin(), ks.end(), [&](int u, int v) {
        return subtree_code(s, u) < subtree_code(s, v);
      });
    };
    by_code(from, ka);
    by_code(to, kb);
    for (std::size_t i = 0; i < ka.size(); ++i) {
      if (subtree_code(from, ka[i]) != subtree_code(to, kb[i])) return false;
      if (!self(self, ka[i], kb[i])) return false;
    }
    return true;
  };
  auto ra = span_roots(from);
  auto rb = span_roots(to);
  if (ra.size() != rb.size()) return std::nullopt;
  if (flavour == Flavour::plain) {
    std::stable_sort(ra.begin(), ra.end(), [&](int u, int v) {
      return subtree_code(from, u) < subtree_code(from, v);
    });
    std::stable_sort(rb.begin(), rb.end(), [&](int u, int v) {
      return subtree_code(to, u) < subtree_code(to, v);
    });
  }
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (subtree_code(from, ra[i]) != subtree_code(to, rb[i])) return std::nullopt;
    if (!match(match, ra[i], rb[i])) return std::nullopt;
  }
  return map;
}

Vset apply_map(const std::vector<int>& map, Vset s) {
  Vset out = 0;
  for (std::size_t v = 0; v < map.size(); ++v)
    if (has_vertex(s, static_cast<int>(v)) && map[v] >= 0) out |= single(map[v]);
  return out;
}

}  // namespace

int compose_tree_explicit(const TreeSegalSet& s, const ColouredOperadData& o,
                          std::pair<int, int> outer,
                          const std::vector<std::pair<int, int>>& inner) {
  (void)o;
  auto [n, oe] = outer;
  const Layering& out_lay = s.reps[n][oe];
  Layering result;
  result.host = out_lay.host;
  result.chain.push_back(out_lay.host);
  for (int i = 1; i <= n; ++i) {
    Vset layer = out_lay.chain[i - 1] & ~out_lay.chain[i];
    auto [k, ie] = inner[static_cast<std::size_t>(i - 1)];
    const Layering& in_lay = s.reps[k][ie];
    auto iso = find_span_iso(s.tree, s.flavour, in_lay.host, layer);
    if (!iso) throw std::invalid_argument("compose: slot colour mismatch");
    for (int j = 1; j <= k; ++j)
      result.chain.push_back(out_lay.chain[i] | apply_map(*iso, in_lay.chain[j]));
  }
  int idx = s.x.find(result.dim(), canonical_code(s.tree, result, s.flavour));
  if (idx < 0) throw std::logic_error("explicit tree composition left the level");
  return idx;
}

namespace {

std::optional<std::vector<int>> find_graph_iso(const Graph& g, Vset fv, Emask fe, Vset tv,
                                               Emask te) {
  if (set_size(fv) != set_size(tv)) return std::nullopt;
  if (g.labelled) {
    if (fv != tv || fe != te) return std::nullopt;
    std::vector<int> id(g.nv, -1);
    for (int v = 0; v < g.nv; ++v)
      if (has_vertex(fv, v)) id[v] = v;
    return id;
  }
  std::vector<int> from, to;
  std::vector<int> local(g.nv, -1);
  for (int v = 0; v < g.nv; ++v) {
    if (has_vertex(fv, v)) {
      local[v] = static_cast<int>(from.size());
      from.push_back(v);
    }
    if (has_vertex(tv, v)) to.push_back(v);
  }
  auto adjacency = [&](Emask em) {
    std::map<std::pair<int, int>, int> adj;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (em & (Emask{1} << e)) adj[g.edges[e]] += 1;
    return adj;
  };
  auto fadj = adjacency(fe);
  auto tadj = adjacency(te);
  int m = static_cast<int>(from.size());
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<std::pair<int, int>, int> image;
    for (auto& [pq, mult] : fadj) {
      int a = to[perm[local[pq.first]]];
      int b = to[perm[local[pq.second]]];
      image[{std::min(a, b), std::max(a, b)}] += mult;
    }
    if (image == tadj) {
      std::vector<int> map(g.nv, -1);
      for (int i = 0; i < m; ++i) map[from[i]] = to[perm[i]];
      return map;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

int compose_graph_explicit(const GraphSegalSet& s, const ColouredOperadData& o,
                           std::pair<int, int> outer,
                           const std::vector<std::pair<int, int>>& inner) {
  (void)o;
  auto [n, oe] = outer;
  const PartSub& out_ps = s.reps[n][oe];
  PartSub result;
  result.verts = out_ps.verts;
  result.emask = out_ps.emask;
  int offset = 0;
  for (int i = 1; i <= n; ++i) {
    Vset slot = out_ps.part_set(i);
    auto [k, ie] = inner[static_cast<std::size_t>(i - 1)];
    const PartSub& in_ps = s.reps[k][ie];
    auto iso = find_graph_iso(s.g, in_ps.verts, in_ps.emask, slot,
                              out_ps.emask & s.g.edges_within(slot));
    if (!iso) throw std::invalid_argument("compose: slot colour mismatch");
    for (int v = 0; v < s.g.nv; ++v)
      if (has_vertex(in_ps.verts, v)) result.set_part((*iso)[v], offset + in_ps.part_of(v));
    offset += k;
  }
  result.n = offset;
  int idx = s.x.find(result.n, psub_code(s.g, result));
  if (idx < 0) throw std::logic_error("explicit graph composition left the level");
  return idx;
}

}  // namespace segal
