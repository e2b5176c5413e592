#include "segal/simplicial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace segal {

int LevelwiseSimplicialSet::find(int n, const std::string& code) const {
  if (n < 0 || n > truncation) return -1;
  const auto& lv = levels[n];
  auto it = std::lower_bound(lv.begin(), lv.end(), code);
  if (it == lv.end() || *it != code) return -1;
  return static_cast<int>(it - lv.begin());
}

std::vector<IdentityViolation> check_identities(const LevelwiseSimplicialSet& x) {
  std::vector<IdentityViolation> out;
  const int N = x.truncation;
  auto d = [&](int n, int i, int e) { return x.face[n][i][e]; };
  auto s = [&](int n, int i, int e) { return x.degen[n][i][e]; };

  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int e = 0; e < x.level_size(n); ++e)
          if (d(n - 1, i, d(n, j, e)) != d(n - 1, j - 1, d(n, i, e)))
            out.push_back({"d_i d_j = d_{j-1} d_i", n, i, j, e});

  for (int n = 1; n < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int e = 0; e < x.level_size(n); ++e) {
        for (int i = 0; i <= n + 1; ++i) {
          int lhs = d(n + 1, i, s(n, j, e));
          int rhs;
          if (i < j)
            rhs = s(n - 1, j - 1, d(n, i, e));
          else if (i == j || i == j + 1)
            rhs = e;
          else
            rhs = s(n - 1, j, d(n, i - 1, e));
          if (lhs != rhs) out.push_back({"d_i s_j relations", n, i, j, e});
        }
      }

  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int e = 0; e < x.level_size(n); ++e)
          if (s(n + 1, i, s(n, j, e)) != s(n + 1, j + 1, s(n, i, e)))
            out.push_back({"s_i s_j = s_{j+1} s_i", n, i, j, e});

  return out;
}

std::vector<int> face_composite(const LevelwiseSimplicialSet& x, int n,
                                const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("face_composite: empty vertex set");
  std::vector<bool> kept(n + 1, false);
  for (int v : keep) kept.at(v) = true;
  std::vector<int> map(x.level_size(n));
  std::iota(map.begin(), map.end(), 0);
  int cur = n;
  for (int v = n; v >= 0; --v) {
    if (kept[v]) continue;
    for (auto& e : map) e = x.face[cur][v][e];
    --cur;
  }
  return map;
}

bool SegalReport::image_contains(const std::vector<int>& edges) const {
  return std::binary_search(image_tuples.begin(), image_tuples.end(), edges);
}

SegalReport segal_map_report(const LevelwiseSimplicialSet& x, int n) {
  if (n < 2 || n > x.truncation) throw std::invalid_argument("segal_map: bad level");
  SegalReport r;
  r.domain = x.level_size(n);
  std::vector<std::vector<int>> edge_maps;
  for (int i = 0; i < n; ++i) edge_maps.push_back(face_composite(x, n, {i, i + 1}));

  std::vector<std::vector<int>> tuples(r.domain);
  for (int e = 0; e < r.domain; ++e) {
    tuples[e].reserve(n);
    for (int i = 0; i < n; ++i) tuples[e].push_back(edge_maps[i][e]);
  }
  std::sort(tuples.begin(), tuples.end());
  r.image = static_cast<long>(std::unique(tuples.begin(), tuples.end()) - tuples.begin());
  tuples.resize(r.image);
  r.image_tuples = std::move(tuples);
  r.injective = r.image == r.domain;

  // Count all tuples of edges compatible at endpoints.
  int n0 = x.level_size(0), n1 = x.level_size(1);
  std::vector<int> src(n1), dst(n1);
  for (int e = 0; e < n1; ++e) {
    src[e] = x.face[1][1][e];  // vertex 0
    dst[e] = x.face[1][0][e];  // vertex 1
  }
  std::vector<long> ways(n0, 0);
  std::vector<long> start_count(n0, 0);
  long total = 0;
  for (int e = 0; e < n1; ++e) ++start_count[src[e]];
  // ways[v] = number of compatible (n-1)-tails starting at vertex v
  std::vector<long> tails(n0, 1);
  for (int step = 0; step < n; ++step) {
    std::vector<long> next(n0, 0);
    for (int e = 0; e < n1; ++e) next[src[e]] += tails[dst[e]];
    tails = std::move(next);
  }
  for (int v = 0; v < n0; ++v) total += tails[v];
  r.fibre_product = total;
  r.surjective = r.image == r.fibre_product;
  return r;
}

namespace {

// Checks that e -> (p[e], q[e]) is a bijection onto the pairs compatible over
// the given base maps.
bool pullback_bijective(const std::vector<int>& p, const std::vector<int>& q,
                        const std::vector<int>& base_p, const std::vector<int>& base_q,
                        std::string& detail) {
  std::vector<std::uint64_t> pairs(p.size());
  for (std::size_t e = 0; e < p.size(); ++e)
    pairs[e] = (static_cast<std::uint64_t>(p[e]) << 32) | static_cast<std::uint32_t>(q[e]);
  std::sort(pairs.begin(), pairs.end());
  bool injective = std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();

  std::map<int, long> bucket;  // base value -> number of q-side elements
  for (int b : base_q) ++bucket[b];
  long compatible = 0;
  for (int a : base_p) {
    auto it = bucket.find(a);
    if (it != bucket.end()) compatible += it->second;
  }
  if (injective && compatible == static_cast<long>(p.size())) return true;
  detail = "elements=" + std::to_string(p.size()) +
           " distinct-pairs=" + std::to_string(injective ? pairs.size()
                                                         : std::unique(pairs.begin(), pairs.end()) - pairs.begin()) +
           " compatible-pairs=" + std::to_string(compatible);
  return false;
}

}  // namespace

TwoSegalReport check_2segal_pullbacks(const LevelwiseSimplicialSet& x, int nmax) {
  TwoSegalReport r;
  nmax = std::min(nmax, x.truncation);
  for (int n = 3; n <= nmax; ++n) {
    for (int i = 1; i <= n - 2; ++i) {
      // Family keeping {0..i+1} and {0, i+1..n}, glued over the edge {0,i+1}.
      std::vector<int> keep_p, keep_q;
      for (int v = 0; v <= i + 1; ++v) keep_p.push_back(v);
      keep_q.push_back(0);
      for (int v = i + 1; v <= n; ++v) keep_q.push_back(v);
      auto p = face_composite(x, n, keep_p);
      auto q = face_composite(x, n, keep_q);
      auto base_p = face_composite(x, i + 1, {0, i + 1});
      auto base_q = face_composite(x, n - i, {0, 1});
      std::string detail;
      if (!pullback_bijective(p, q, base_p, base_q, detail)) {
        r.ok = false;
        r.witnesses.push_back({n, i, "lower-faces", detail});
      }
      // Family keeping {0..i, n} and {i..n}, glued over the edge {i,n}.
      keep_p.clear();
      for (int v = 0; v <= i; ++v) keep_p.push_back(v);
      keep_p.push_back(n);
      keep_q.clear();
      for (int v = i; v <= n; ++v) keep_q.push_back(v);
      p = face_composite(x, n, keep_p);
      q = face_composite(x, n, keep_q);
      base_p = face_composite(x, i + 1, {i, i + 1});
      base_q = face_composite(x, n - i, {0, n - i});
      if (!pullback_bijective(p, q, base_p, base_q, detail)) {
        r.ok = false;
        r.witnesses.push_back({n, i, "upper-faces", detail});
      }
    }
  }
  return r;
}

std::vector<std::vector<std::array<int, 3>>> polygon_triangulations(int m) {
  // Vertices 0..m of an (m+1)-gon. For each sub-polygon [a..b] choose the
  // apex k of the triangle sitting on the long edge (a,b), then recurse on
  // both halves.
  std::vector<std::vector<std::array<int, 3>>> out;
  std::vector<std::array<int, 3>> cur;
  auto go = [&](auto&& self, std::vector<std::pair<int, int>> pending) -> void {
    if (pending.empty()) {
      auto t = cur;
      std::sort(t.begin(), t.end());
      out.push_back(std::move(t));
      return;
    }
    auto [a, b] = pending.back();
    pending.pop_back();
    if (b - a < 2) {
      self(self, std::move(pending));
      return;
    }
    for (int k = a + 1; k < b; ++k) {
      cur.push_back({a, k, b});
      auto next = pending;
      next.push_back({a, k});
      next.push_back({k, b});
      self(self, std::move(next));
      cur.pop_back();
    }
  };
  go(go, {{0, m}});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TwoSegalReport check_2segal_triangulations(const LevelwiseSimplicialSet& x, int nmax) {
  TwoSegalReport r;
  nmax = std::min({nmax, x.truncation, 6});
  for (int n = 3; n <= nmax; ++n) {
    auto tris = polygon_triangulations(n);
    for (std::size_t ti = 0; ti < tris.size(); ++ti) {
      const auto& tri = tris[ti];
      // Restriction of X_n to the triangulation: one 2-simplex per triangle.
      std::vector<std::vector<int>> maps;
      for (const auto& t : tri) maps.push_back(face_composite(x, n, {t[0], t[1], t[2]}));
      std::vector<std::vector<int>> restricted(x.level_size(n));
      for (int e = 0; e < x.level_size(n); ++e) {
        restricted[e].reserve(tri.size());
        for (auto& m : maps) restricted[e].push_back(m[e]);
      }
      std::sort(restricted.begin(), restricted.end());
      bool injective =
          std::adjacent_find(restricted.begin(), restricted.end()) == restricted.end();

      // All homs: assign a 2-simplex per triangle, consistent along shared
      // edges. Edge (b,c)=d0, (a,c)=d1, (a,b)=d2 of the triangle (a,b,c).
      std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edge_users;
      for (std::size_t t = 0; t < tri.size(); ++t) {
        auto [a, b, c] = tri[t];
        edge_users[{b, c}].push_back({static_cast<int>(t), 0});
        edge_users[{a, c}].push_back({static_cast<int>(t), 1});
        edge_users[{a, b}].push_back({static_cast<int>(t), 2});
      }
      // Order triangles so each one after the first shares an edge with an
      // earlier one (always possible for polygon triangulations).
      std::vector<int> order{0};
      std::vector<bool> placed(tri.size(), false);
      placed[0] = true;
      while (order.size() < tri.size()) {
        for (std::size_t t = 0; t < tri.size(); ++t) {
          if (placed[t]) continue;
          bool touches = false;
          for (auto& [e, users] : edge_users) {
            (void)e;
            bool has_t = false, has_placed = false;
            for (auto& [u, f] : users) {
              (void)f;
              if (u == static_cast<int>(t)) has_t = true;
              else if (placed[u]) has_placed = true;
            }
            if (has_t && has_placed) touches = true;
          }
          if (touches) {
            placed[t] = true;
            order.push_back(static_cast<int>(t));
            break;
          }
        }
      }
      // Constraints for each placed triangle against earlier ones.
      struct Constraint {
        int my_face;      // face index on the new triangle
        int other_pos;    // position in `order` of the earlier triangle
        int other_face;
      };
      std::vector<std::vector<Constraint>> cons(tri.size());
      std::vector<int> pos_of(tri.size());
      for (std::size_t p = 0; p < order.size(); ++p) pos_of[order[p]] = static_cast<int>(p);
      for (auto& [e, users] : edge_users) {
        (void)e;
        for (std::size_t ui = 0; ui < users.size(); ++ui)
          for (std::size_t uj = 0; uj < users.size(); ++uj) {
            if (ui == uj) continue;
            auto [tu, fu] = users[ui];
            auto [tv, fv] = users[uj];
            if (pos_of[tu] > pos_of[tv])
              cons[pos_of[tu]].push_back({fu, pos_of[tv], fv});
          }
      }
      // Index level-2 elements by each face value.
      int n2 = x.level_size(2);
      std::vector<std::vector<std::vector<int>>> by_face(3);
      for (int f = 0; f < 3; ++f) {
        by_face[f].assign(x.level_size(1), {});
        for (int e = 0; e < n2; ++e) by_face[f][x.face[2][f][e]].push_back(e);
      }
      std::vector<std::vector<int>> homs;
      std::vector<int> assign(tri.size(), -1);
      auto bt = [&](auto&& self, std::size_t p) -> void {
        if (p == tri.size()) {
          std::vector<int> h(tri.size());
          for (std::size_t t = 0; t < tri.size(); ++t) h[t] = assign[pos_of[t]];
          homs.push_back(std::move(h));
          return;
        }
        const std::vector<int>* cands = nullptr;
        std::vector<int> all;
        if (cons[p].empty()) {
          all.resize(n2);
          std::iota(all.begin(), all.end(), 0);
          cands = &all;
        } else {
          auto& c0 = cons[p][0];
          int want = x.face[2][c0.other_face][assign[c0.other_pos]];
          cands = &by_face[c0.my_face][want];
        }
        for (int e : *cands) {
          bool ok = true;
          for (auto& c : cons[p])
            if (x.face[2][c.my_face][e] != x.face[2][c.other_face][assign[c.other_pos]]) {
              ok = false;
              break;
            }
          if (!ok) continue;
          assign[p] = e;
          self(self, p + 1);
        }
        assign[p] = -1;
      };
      bt(bt, 0);
      std::sort(homs.begin(), homs.end());
      bool bijective = injective && homs == restricted;
      if (!bijective) {
        r.ok = false;
        r.witnesses.push_back({n, static_cast<int>(ti), "triangulation",
                               "homs=" + std::to_string(homs.size()) +
                                   " level=" + std::to_string(x.level_size(n)) +
                                   (injective ? "" : " (restriction not injective)")});
      }
    }
  }
  return r;
}

std::vector<int> nondegenerate(const LevelwiseSimplicialSet& x, int n) {
  std::vector<int> out;
  if (n == 0) {
    out.resize(x.level_size(0));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  std::vector<bool> degenerate(x.level_size(n), false);
  for (int j = 0; j <= n - 1; ++j)
    for (int e = 0; e < x.level_size(n - 1); ++e) degenerate[x.degen[n - 1][j][e]] = true;
  for (int e = 0; e < x.level_size(n); ++e)
    if (!degenerate[e]) out.push_back(e);
  return out;
}

long nondegenerate_count(const LevelwiseSimplicialSet& x, int n) {
  return static_cast<long>(nondegenerate(x, n).size());
}

std::optional<SimplicialMap::Failure> SimplicialMap::validate() const {
  const auto& X = *source;
  const auto& Y = *target;
  int N = std::min(X.truncation, Y.truncation);
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int e = 0; e < X.level_size(n); ++e)
        if (Y.face[n][i][comp[n][e]] != comp[n - 1][X.face[n][i][e]])
          return Failure{"face", n, i, e};
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int e = 0; e < X.level_size(n); ++e)
        if (Y.degen[n][i][comp[n][e]] != comp[n + 1][X.degen[n][i][e]])
          return Failure{"degeneracy", n, i, e};
  return std::nullopt;
}

nlohmann::ordered_json to_json(const LevelwiseSimplicialSet& x) {
  nlohmann::ordered_json j;
  j["truncation"] = x.truncation;
  j["levels"] = x.levels;
  nlohmann::ordered_json faces = nlohmann::ordered_json::array();
  for (int n = 1; n <= x.truncation; ++n) faces.push_back(x.face[n]);
  j["faces"] = faces;
  nlohmann::ordered_json degens = nlohmann::ordered_json::array();
  for (int n = 0; n < x.truncation; ++n) degens.push_back(x.degen[n]);
  j["degeneracies"] = degens;
  return j;
}

LevelwiseSimplicialSet lss_from_json(const nlohmann::json& j) {
  LevelwiseSimplicialSet x;
  x.truncation = j.at("truncation").get<int>();
  x.levels = j.at("levels").get<std::vector<std::vector<std::string>>>();
  x.face.assign(x.truncation + 1, {});
  x.degen.assign(x.truncation + 1, {});
  const auto& faces = j.at("faces");
  for (int n = 1; n <= x.truncation; ++n)
    x.face[n] = faces.at(n - 1).get<std::vector<std::vector<int>>>();
  const auto& degens = j.at("degeneracies");
  for (int n = 0; n < x.truncation; ++n)
    x.degen[n] = degens.at(n).get<std::vector<std::vector<int>>>();
  return x;
}

LevelwiseSimplicialSet build_point(int truncation) {
  LevelwiseSimplicialSet x;
  x.truncation = truncation;
  x.levels.assign(truncation + 1, {"pt"});
  x.face.assign(truncation + 1, {});
  x.degen.assign(truncation + 1, {});
  for (int n = 1; n <= truncation; ++n) x.face[n].assign(n + 1, {0});
  for (int n = 0; n < truncation; ++n) x.degen[n].assign(n + 1, {0});
  return x;
}

LevelwiseSimplicialSet build_poset_nerve(int npoints,
                                         const std::vector<std::pair<int, int>>& le,
                                         int truncation) {
  std::vector<std::vector<bool>> leq(npoints, std::vector<bool>(npoints, false));
  for (int i = 0; i < npoints; ++i) leq[i][i] = true;
  for (auto& [a, b] : le) leq[a][b] = true;
  for (int k = 0; k < npoints; ++k)  // transitive closure
    for (int i = 0; i < npoints; ++i)
      for (int j = 0; j < npoints; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;

  LevelwiseSimplicialSet x;
  x.truncation = truncation;
  x.levels.assign(truncation + 1, {});
  x.face.assign(truncation + 1, {});
  x.degen.assign(truncation + 1, {});
  std::vector<std::vector<std::vector<int>>> elems(truncation + 1);
  auto code_of = [](const std::vector<int>& chain) {
    std::string s;
    for (int v : chain) {
      s += std::to_string(v);
      s += '.';
    }
    return s;
  };
  for (int n = 0; n <= truncation; ++n) {
    std::vector<int> chain(n + 1, 0);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n + 1) {
        elems[n].push_back(chain);
        return;
      }
      for (int v = 0; v < npoints; ++v) {
        if (i > 0 && !leq[chain[i - 1]][v]) continue;
        chain[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    for (auto& c : elems[n]) x.levels[n].push_back(code_of(c));
    std::sort(x.levels[n].begin(), x.levels[n].end());
    std::sort(elems[n].begin(), elems[n].end());
  }
  auto index_of = [&](int n, const std::vector<int>& chain) {
    return x.find(n, code_of(chain));
  };
  for (int n = 1; n <= truncation; ++n) {
    x.face[n].assign(n + 1, std::vector<int>(elems[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t e = 0; e < elems[n].size(); ++e) {
        auto c = elems[n][e];
        c.erase(c.begin() + i);
        x.face[n][i][e] = index_of(n - 1, c);
      }
  }
  for (int n = 0; n < truncation; ++n) {
    x.degen[n].assign(n + 1, std::vector<int>(elems[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t e = 0; e < elems[n].size(); ++e) {
        auto c = elems[n][e];
        c.insert(c.begin() + i, c[i]);
        x.degen[n][i][e] = index_of(n + 1, c);
      }
  }
  return x;
}

}  // namespace segal
