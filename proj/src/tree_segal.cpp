#include "segal/tree_segal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace segal {

int default_truncation(const RootedForest& t) { return t.size() + 2; }

Layering layering_face(const Layering& lay, int i) {
  int n = lay.dim();
  if (n < 1 || i < 0 || i > n) throw std::out_of_range("layering_face");
  Layering out;
  if (i == 0) {
    out.chain.assign(lay.chain.begin() + 1, lay.chain.end());
  } else if (i == n) {
    Vset bottom = lay.chain[n - 1];
    out.chain.assign(lay.chain.begin(), lay.chain.end() - 1);
    for (auto& l : out.chain) l &= ~bottom;
  } else {
    out.chain = lay.chain;
    out.chain.erase(out.chain.begin() + i);
  }
  out.host = out.chain.front();
  return out;
}

Layering layering_degeneracy(const Layering& lay, int i) {
  int n = lay.dim();
  if (i < 0 || i > n) throw std::out_of_range("layering_degeneracy");
  Layering out = lay;
  out.chain.insert(out.chain.begin() + i + 1, out.chain[i]);
  return out;
}

TreeSegalSet build_xt(const RootedForest& t, Flavour flavour, int truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
  TreeSegalSet s;
  s.tree = t;
  s.flavour = flavour;
  s.x.truncation = truncation;
  s.x.levels.assign(truncation + 1, {});
  s.x.face.assign(truncation + 1, {});
  s.x.degen.assign(truncation + 1, {});
  s.reps.assign(truncation + 1, {});

  for (int n = 0; n <= truncation; ++n) {
    std::map<std::string, Layering> classes;
    for (const Layering& lay : enumerate_layerings(t, n))
      classes.emplace(canonical_code(t, lay, flavour), lay);
    for (auto& [code, rep] : classes) {
      s.x.levels[n].push_back(code);
      s.reps[n].push_back(rep);
    }
  }
  for (int n = 1; n <= truncation; ++n) {
    s.x.face[n].assign(n + 1, std::vector<int>(s.reps[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t e = 0; e < s.reps[n].size(); ++e) {
        auto img = canonical_code(t, layering_face(s.reps[n][e], i), flavour);
        s.x.face[n][i][e] = s.x.find(n - 1, img);
      }
  }
  for (int n = 0; n < truncation; ++n) {
    s.x.degen[n].assign(n + 1, std::vector<int>(s.reps[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t e = 0; e < s.reps[n].size(); ++e) {
        auto img = canonical_code(t, layering_degeneracy(s.reps[n][e], i), flavour);
        s.x.degen[n][i][e] = s.x.find(n + 1, img);
      }
  }
  return s;
}

TreeCensus census(const TreeSegalSet& s) {
  TreeCensus c;
  int N = s.x.truncation;
  c.total.assign(N + 1, 0);
  c.nondeg.assign(N + 1, 0);
  c.strict_chain.assign(N + 1, 0);
  c.strict_connected.assign(N + 1, 0);
  c.strict_full_host.assign(N + 1, 0);
  c.nondeg_connected.assign(N + 1, 0);
  Vset full = s.tree.all_vertices();
  for (int n = 0; n <= N; ++n) {
    c.total[n] = s.x.level_size(n);
    auto nd = nondegenerate(s.x, n);
    c.nondeg[n] = static_cast<long>(nd.size());
    for (int e : nd)
      if (span_connected(s.tree, s.reps[n][e].host)) ++c.nondeg_connected[n];
    for (const auto& rep : s.reps[n]) {
      if (!rep.strict()) continue;
      ++c.strict_chain[n];
      if (span_connected(s.tree, rep.host)) ++c.strict_connected[n];
      if (rep.host == full) ++c.strict_full_host[n];
    }
  }
  for (std::size_t e = 0; e < s.reps[1].size(); ++e)
    if (s.reps[1][e].host != 0) ++c.level1_nonempty;
  return c;
}

}  // namespace segal
