#include "segal/graph_segal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace segal {

Emask Graph::edges_within(Vset verts) const {
  Emask m = 0;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (has_vertex(verts, edges[e].first) && has_vertex(verts, edges[e].second))
      m |= Emask{1} << e;
  return m;
}

Graph parse_graph(std::string_view text, bool labelled, bool allow_loops) {
  Graph g;
  g.labelled = labelled;
  g.allow_loops = allow_loops;
  std::map<std::string, int> ids;
  auto vertex = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, g.nv);
    if (fresh) {
      ++g.nv;
      g.labels.push_back(name);
    }
    return it->second;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) continue;
    if (trimmed.rfind("vertices:", 0) == 0) {
      std::istringstream raw{line.substr(line.find(':') + 1)};
      std::string name;
      while (raw >> name) vertex(name);
      continue;
    }
    auto dash = trimmed.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == trimmed.size())
      throw ParseError("expected 'u-v' edge line", lineno);
    int u = vertex(trimmed.substr(0, dash));
    int v = vertex(trimmed.substr(dash + 1));
    if (u == v && !allow_loops) throw ParseError("loop edge without loop support", lineno);
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (g.nv > 16) throw ParseError("graphs are limited to 16 vertices", 0);
  if (g.edges.size() > 48) throw ParseError("graphs are limited to 48 edges", 0);
  return g;
}

Graph underlying_graph(const RootedForest& t) {
  Graph g;
  g.nv = t.size();
  g.labels = t.labels;
  g.labelled = t.flavour == Flavour::labelled;
  for (int v = 0; v < t.size(); ++v)
    if (t.parent[v] >= 0)
      g.edges.emplace_back(std::min(v, t.parent[v]), std::max(v, t.parent[v]));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

PartSub psub_face(const Graph& g, const PartSub& p, int i) {
  if (p.n < 1 || i < 0 || i > p.n) throw std::out_of_range("psub_face");
  PartSub out;
  out.n = p.n - 1;
  if (i == 0 || i == p.n) {
    Vset removed = p.part_set(i == 0 ? 1 : p.n);
    out.verts = p.verts & ~removed;
    out.emask = p.emask & g.edges_within(out.verts);
    for (int v = 0; v < g.nv; ++v)
      if (has_vertex(out.verts, v))
        out.set_part(v, i == 0 ? p.part_of(v) - 1 : p.part_of(v));
  } else {
    out.verts = p.verts;
    out.emask = p.emask;
    for (int v = 0; v < g.nv; ++v)
      if (has_vertex(out.verts, v)) {
        int q = p.part_of(v);
        out.set_part(v, q > i ? q - 1 : q);
      }
  }
  return out;
}

PartSub psub_degeneracy(const Graph& g, const PartSub& p, int i) {
  if (i < 0 || i > p.n) throw std::out_of_range("psub_degeneracy");
  PartSub out;
  out.n = p.n + 1;
  out.verts = p.verts;
  out.emask = p.emask;
  for (int v = 0; v < g.nv; ++v)
    if (has_vertex(out.verts, v)) {
      int q = p.part_of(v);
      out.set_part(v, q > i ? q + 1 : q);
    }
  return out;
}

namespace {

char b36(int v) {
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

std::string labelled_code(const Graph& g, const PartSub& p) {
  std::string s = "G";
  s += b36(p.n);
  s += 'v';
  for (int v = 0; v < g.nv; ++v)
    if (has_vertex(p.verts, v)) {
      s += b36(v);
      s += b36(p.part_of(v));
    }
  s += 'e';
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (p.emask & (Emask{1} << e)) s += b36(static_cast<int>(e));
  return s;
}

std::string unlabelled_code(const Graph& g, const PartSub& p) {
  std::vector<int> verts;
  for (int v = 0; v < g.nv; ++v)
    if (has_vertex(p.verts, v)) verts.push_back(v);
  int m = static_cast<int>(verts.size());
  std::vector<int> local(g.nv, -1);
  for (int i = 0; i < m; ++i) local[verts[i]] = i;

  std::vector<std::pair<int, int>> ledges;  // local endpoints, multiplicity via repeats
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (p.emask & (Emask{1} << e))
      ledges.emplace_back(local[g.edges[e].first], local[g.edges[e].second]);

  std::vector<int> deg(m, 0);
  for (auto& [a, b] : ledges) {
    ++deg[a];
    ++deg[b];
  }
  // Orderings compatible with the (part, degree) invariant; the minimum code
  // over them is isomorphism-invariant and complete.
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  auto key = [&](int i) {
    return std::pair<int, int>(p.part_of(verts[i]), deg[i]);
  };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return key(a) < key(b) || (key(a) == key(b) && a < b);
  });
  std::vector<std::pair<int, int>> groups;  // [begin, end) runs of equal keys
  for (int i = 0; i < m;) {
    int j = i;
    while (j < m && key(idx[j]) == key(idx[i])) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::string best;
  std::vector<int> pos(m, 0);
  auto emit = [&]() {
    for (int i = 0; i < m; ++i) pos[idx[i]] = i;
    std::string s = "U";
    s += b36(p.n);
    s += b36(m);
    s += 'p';
    for (int i = 0; i < m; ++i) s += b36(p.part_of(verts[idx[i]]));
    std::vector<std::pair<int, int>> es;
    es.reserve(ledges.size());
    for (auto& [a, b] : ledges)
      es.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
    std::sort(es.begin(), es.end());
    s += 'e';
    for (auto& [a, b] : es) {
      s += b36(a);
      s += b36(b);
    }
    if (best.empty() || s < best) best = s;
  };
  auto rec = [&](auto&& self, std::size_t gi) -> void {
    if (gi == groups.size()) {
      emit();
      return;
    }
    auto [b, e] = groups[gi];
    std::sort(idx.begin() + b, idx.begin() + e);
    do {
      self(self, gi + 1);
    } while (std::next_permutation(idx.begin() + b, idx.begin() + e));
  };
  rec(rec, 0);
  return best;
}

}  // namespace

std::string psub_code(const Graph& g, const PartSub& p) {
  return g.labelled ? labelled_code(g, p) : unlabelled_code(g, p);
}

int graph_default_truncation(const Graph& g) { return g.nv + 2; }

GraphSegalSet build_xg(const Graph& g, int truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
  if (truncation > 14) throw std::invalid_argument("truncation is limited to 14");
  GraphSegalSet s;
  s.g = g;
  s.x.truncation = truncation;
  s.x.levels.assign(truncation + 1, {});
  s.x.face.assign(truncation + 1, {});
  s.x.degen.assign(truncation + 1, {});
  s.reps.assign(truncation + 1, {});

  // All subgraphs, as (vertex set, edge subset) pairs.
  std::vector<std::pair<Vset, Emask>> subgraphs;
  Vset allv = g.all_vertices();
  for (Vset verts = 0;; ++verts) {
    if ((verts & ~allv) == 0) {
      Emask cand = g.edges_within(verts);
      Emask sub = 0;
      while (true) {
        subgraphs.emplace_back(verts, sub);
        if (sub == cand) break;
        sub = (sub - cand) & cand;  // next submask
      }
    }
    if (verts == allv) break;
  }
  std::sort(subgraphs.begin(), subgraphs.end());

  // In the unlabelled variant it is enough to partition one embedded
  // representative per subgraph class: any partitioned class has a
  // representative supported on it.
  std::vector<std::pair<Vset, Emask>> hosts;
  if (g.labelled) {
    hosts = subgraphs;
  } else {
    std::map<std::string, std::pair<Vset, Emask>> classes;
    for (auto& [verts, emask] : subgraphs) {
      PartSub p{verts, emask, 0, 1};
      for (int v = 0; v < g.nv; ++v)
        if (has_vertex(verts, v)) p.set_part(v, 1);
      classes.emplace(psub_code(g, p), std::make_pair(verts, emask));
    }
    for (auto& [code, h] : classes) hosts.push_back(h);
  }

  for (int n = 0; n <= truncation; ++n) {
    std::vector<std::pair<std::string, PartSub>> elems;
    if (n == 0) {
      PartSub base{0, 0, 0, 0};
      elems.emplace_back(psub_code(g, base), base);
    } else {
      for (auto& [verts, emask] : hosts) {
        PartSub p{verts, emask, 0, n};
        std::vector<int> vs;
        for (int v = 0; v < g.nv; ++v)
          if (has_vertex(verts, v)) vs.push_back(v);
        auto rec = [&](auto&& self, std::size_t i) -> void {
          if (i == vs.size()) {
            elems.emplace_back(psub_code(g, p), p);
            return;
          }
          for (int q = 1; q <= n; ++q) {
            p.set_part(vs[i], q);
            self(self, i + 1);
          }
        };
        rec(rec, 0);
      }
    }
    std::stable_sort(elems.begin(), elems.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    elems.erase(std::unique(elems.begin(), elems.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                elems.end());
    s.x.levels[n].reserve(elems.size());
    s.reps[n].reserve(elems.size());
    for (auto& [code, rep] : elems) {
      s.x.levels[n].push_back(code);
      s.reps[n].push_back(rep);
    }
  }

  for (int n = 1; n <= truncation; ++n) {
    s.x.face[n].assign(n + 1, std::vector<int>(s.reps[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t e = 0; e < s.reps[n].size(); ++e)
        s.x.face[n][i][e] = s.x.find(n - 1, psub_code(g, psub_face(g, s.reps[n][e], i)));
  }
  for (int n = 0; n < truncation; ++n) {
    s.x.degen[n].assign(n + 1, std::vector<int>(s.reps[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t e = 0; e < s.reps[n].size(); ++e)
        s.x.degen[n][i][e] =
            s.x.find(n + 1, psub_code(g, psub_degeneracy(g, s.reps[n][e], i)));
  }
  return s;
}

GraphCensus graph_census(const GraphSegalSet& s) {
  GraphCensus c;
  int N = s.x.truncation;
  c.total.assign(N + 1, 0);
  c.nondeg.assign(N + 1, 0);
  c.all_parts_nonempty.assign(N + 1, 0);
  for (int n = 0; n <= N; ++n) {
    c.total[n] = s.x.level_size(n);
    c.nondeg[n] = nondegenerate_count(s.x, n);
    for (const auto& rep : s.reps[n]) {
      bool ok = true;
      for (int q = 1; q <= rep.n; ++q)
        if (rep.part_set(q) == 0) ok = false;
      if (ok && n >= 1) ++c.all_parts_nonempty[n];
    }
  }
  c.level1 = c.total[1];
  return c;
}

}  // namespace segal
