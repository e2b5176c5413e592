#include "segal/umap.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace segal {

UMap build_u(const TreeSegalSet& xt, const GraphSegalSet& xg) {
  if (xt.x.truncation != xg.x.truncation)
    throw std::invalid_argument("U: mismatched truncations");
  bool tree_labelled = xt.flavour == Flavour::labelled;
  if (tree_labelled != xg.g.labelled)
    throw std::invalid_argument("U: variant mismatch (labelled tree needs labelled graph)");
  UMap u;
  u.xt = &xt;
  u.xg = &xg;
  u.map.source = &xt.x;
  u.map.target = &xg.x;
  u.map.comp.assign(xt.x.truncation + 1, {});
  for (int n = 0; n <= xt.x.truncation; ++n) {
    u.map.comp[n].resize(xt.reps[n].size());
    for (std::size_t e = 0; e < xt.reps[n].size(); ++e) {
      const Layering& lay = xt.reps[n][e];
      PartSub p;
      p.n = n;
      p.verts = lay.host;
      p.emask = xg.g.edges_within(lay.host);
      for (int i = 1; i <= n; ++i) {
        Vset layer = lay.chain[i - 1] & ~lay.chain[i];
        for (int v = 0; v < xg.g.nv; ++v)
          if (has_vertex(layer, v)) p.set_part(v, i);
      }
      int idx = xg.x.find(n, psub_code(xg.g, p));
      if (idx < 0) throw std::logic_error("U image not found in X^G");
      u.map.comp[n][e] = idx;
    }
  }
  return u;
}

namespace {

// Fibres of `proj` grouped by value, compared through `f`.
std::optional<FibreWitness> fibre_bijection_failure(
    int n, const std::vector<int>& proj_s, const std::vector<int>& proj_t,
    const std::vector<int>& f, const std::vector<int>& base_map,
    const std::vector<std::string>& base_codes) {
  std::map<int, std::vector<int>> fib_s, fib_t;
  for (std::size_t e = 0; e < proj_s.size(); ++e) fib_s[proj_s[e]].push_back(static_cast<int>(e));
  for (std::size_t e = 0; e < proj_t.size(); ++e) fib_t[proj_t[e]].push_back(static_cast<int>(e));
  for (std::size_t b = 0; b < base_codes.size(); ++b) {
    const auto s_it = fib_s.find(static_cast<int>(b));
    const auto t_it = fib_t.find(base_map[b]);
    long ns = s_it == fib_s.end() ? 0 : static_cast<long>(s_it->second.size());
    long nt = t_it == fib_t.end() ? 0 : static_cast<long>(t_it->second.size());
    std::set<int> image;
    if (s_it != fib_s.end())
      for (int e : s_it->second) image.insert(f[e]);
    bool injective = s_it == fib_s.end() || static_cast<long>(image.size()) == ns;
    if (ns != nt || !injective)
      return FibreWitness{n, base_codes[b], ns, nt,
                          injective ? "fibre sizes differ" : "not injective on fibre"};
  }
  return std::nullopt;
}

}  // namespace

CulfReport check_culf(const UMap& u, int nmax) {
  CulfReport r;
  const auto& XT = u.xt->x;
  const auto& XG = u.xg->x;
  nmax = std::min({nmax, XT.truncation, XG.truncation});

  // n = 0: conservativity. The fibre of s_0 over an element of X^T_1 must
  // biject with the fibre over its image; both are empty unless the element
  // is degenerate.
  {
    std::vector<int> proj_s = XT.degen[0][0];
    std::vector<int> proj_t = XG.degen[0][0];
    std::map<int, long> cnt_t;
    for (int e = 0; e < XG.level_size(0); ++e) ++cnt_t[proj_t[e]];
    for (int b = 0; b < XT.level_size(1); ++b) {
      long ns = 0;
      for (int e = 0; e < XT.level_size(0); ++e)
        if (proj_s[e] == b) ++ns;
      auto it = cnt_t.find(u.map.comp[1][b]);
      long nt = it == cnt_t.end() ? 0 : it->second;
      if (ns != nt) {
        r.holds = false;
        r.witness = FibreWitness{0, XT.levels[1][b], ns, nt, "conservativity"};
        return r;
      }
    }
  }

  for (int n = 2; n <= nmax; ++n) {
    std::vector<int> keep{0, n};
    auto lam_s = face_composite(XT, n, keep);
    auto lam_t = face_composite(XG, n, keep);
    auto fail = fibre_bijection_failure(n, lam_s, lam_t, u.map.comp[n],
                                        u.map.comp[1], XT.levels[1]);
    if (fail) {
      r.holds = false;
      r.witness = fail;
      return r;
    }
  }
  return r;
}

RelSegalReport check_relatively_segal(const UMap& u, int nmax) {
  RelSegalReport r;
  const auto& XT = u.xt->x;
  const auto& XG = u.xg->x;
  nmax = std::min({nmax, XT.truncation, XG.truncation});
  for (int n = 2; n <= nmax; ++n) {
    // Segal tuples on both sides.
    std::vector<std::vector<int>> seg_s(XT.level_size(n)), seg_t(XG.level_size(n));
    for (int i = 0; i < n; ++i) {
      auto es = face_composite(XT, n, {i, i + 1});
      auto et = face_composite(XG, n, {i, i + 1});
      for (int e = 0; e < XT.level_size(n); ++e) seg_s[e].push_back(es[e]);
      for (int e = 0; e < XG.level_size(n); ++e) seg_t[e].push_back(et[e]);
    }
    // X^T_n must biject with the pairs (edge tuple, y) where y in X^G_n has
    // Segal tuple equal to the U_1-image of the tuple. Both sides are
    // reduced, so every edge tuple is Segal-compatible.
    std::vector<long> u1_fibre(XG.level_size(1), 0);
    for (int e = 0; e < XT.level_size(1); ++e) ++u1_fibre[u.map.comp[1][e]];

    long expected = 0;
    for (int y = 0; y < XG.level_size(n); ++y) {
      long ways = 1;
      for (int i = 0; i < n; ++i) ways *= u1_fibre[seg_t[y][i]];
      expected += ways;
    }
    std::set<std::pair<std::vector<int>, int>> seen;
    bool injective = true;
    for (int e = 0; e < XT.level_size(n); ++e)
      if (!seen.emplace(seg_s[e], u.map.comp[n][e]).second) injective = false;
    if (!injective || static_cast<long>(seen.size()) != expected) {
      r.holds = false;
      // Locate a witness element of X^G_n whose compatible tuples are not
      // exactly covered.
      std::map<int, long> hit;
      for (int e = 0; e < XT.level_size(n); ++e) ++hit[u.map.comp[n][e]];
      for (int y = 0; y < XG.level_size(n); ++y) {
        long ways = 1;
        for (int i = 0; i < n; ++i) ways *= u1_fibre[seg_t[y][i]];
        long got = hit.count(y) ? hit[y] : 0;
        if (ways != got) {
          r.witness = FibreWitness{n, XG.levels[n][y], got, ways,
                                   "compatible tuples vs preimages"};
          break;
        }
      }
      if (!r.witness)
        r.witness = FibreWitness{n, "", XT.level_size(n), expected, "not injective"};
      return r;
    }
  }
  return r;
}

}  // namespace segal
