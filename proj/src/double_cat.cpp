#include "segal/double_cat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace segal {

DoubleCategoryData extract_double_category(const LevelwiseSimplicialSet& x) {
  if (!x.reduced()) throw std::invalid_argument("P(X) needs a reduced simplicial set");
  if (x.truncation < 3) throw std::invalid_argument("P(X) needs truncation >= 3");
  DoubleCategoryData d;
  d.x = &x;
  d.basepoint = x.degen[0][0][0];
  int n2 = x.level_size(2);
  d.hor_src.resize(n2);
  d.hor_tgt.resize(n2);
  d.ver_src.resize(n2);
  d.ver_tgt.resize(n2);
  for (int e = 0; e < n2; ++e) {
    d.hor_src[e] = x.face[2][2][e];
    d.hor_tgt[e] = x.face[2][1][e];
    d.ver_src[e] = x.face[2][1][e];
    d.ver_tgt[e] = x.face[2][0][e];
  }
  int n1 = x.level_size(1);
  d.hor_id.resize(n1);
  d.ver_id.resize(n1);
  for (int a = 0; a < n1; ++a) {
    d.hor_id[a] = x.degen[1][1][a];
    d.ver_id[a] = x.degen[1][0][a];
  }
  int n3 = x.level_size(3);
  d.sides.resize(n3);
  for (int w = 0; w < n3; ++w)
    d.sides[w] = {x.face[3][3][w], x.face[3][1][w], x.face[3][2][w], x.face[3][0][w]};
  return d;
}

namespace {

int unique_filler(const LevelwiseSimplicialSet& x, int level, int face_a, int a,
                  int face_b, int b, const char* what) {
  int found = -1;
  for (int w = 0; w < x.level_size(level); ++w) {
    if (x.face[level][face_a][w] != a || x.face[level][face_b][w] != b) continue;
    if (found >= 0) throw CompositionError(std::string(what) + ": multiple fillers");
    found = w;
  }
  if (found < 0) throw CompositionError(std::string(what) + ": no filler");
  return found;
}

}  // namespace

int hor_compose(const DoubleCategoryData& d, int f, int g) {
  if (d.hor_tgt[f] != d.hor_src[g])
    throw CompositionError("hor_compose: morphisms are not composable");
  int w = unique_filler(*d.x, 3, 3, f, 1, g, "hor_compose");
  return d.x->face[3][2][w];
}

int ver_compose(const DoubleCategoryData& d, int u, int v) {
  if (d.ver_tgt[u] != d.ver_src[v])
    throw CompositionError("ver_compose: morphisms are not composable");
  int w = unique_filler(*d.x, 3, 2, u, 0, v, "ver_compose");
  return d.x->face[3][1][w];
}

int hor_paste(const DoubleCategoryData& d, int left, int right) {
  if (d.x->truncation < 4) throw CompositionError("hor_paste needs truncation >= 4");
  if (d.sides[left][2] != d.sides[right][0])  // t_h(left) == s_h(right)
    throw CompositionError("hor_paste: squares are not composable");
  int z = unique_filler(*d.x, 4, 4, left, 2, right, "hor_paste");
  return d.x->face[4][3][z];
}

int ver_paste(const DoubleCategoryData& d, int top, int bottom) {
  if (d.x->truncation < 4) throw CompositionError("ver_paste needs truncation >= 4");
  if (d.sides[top][3] != d.sides[bottom][1])  // t_v(top) == s_v(bottom)
    throw CompositionError("ver_paste: squares are not composable");
  int z = unique_filler(*d.x, 4, 2, top, 0, bottom, "ver_paste");
  return d.x->face[4][1][z];
}

DoubleCatReport check_corner_conditions(const DoubleCategoryData& d) {
  const auto& x = *d.x;
  for (int w = 0; w < d.squares(); ++w) {
    auto [sh, sv, th, tv] = d.sides[w];
    bool ok = x.face[2][1][sh] == x.face[2][2][sv] &&  // top-left corner
              x.face[2][0][th] == x.face[2][1][tv] &&  // bottom-right corner
              x.face[2][1][sv] == x.face[2][1][th] &&  // top-right corner
              x.face[2][0][sh] == x.face[2][2][tv];    // bottom-left corner
    if (!ok)
      return {false, "square " + std::to_string(w) + " has mismatched corners"};
  }
  return {true, ""};
}

namespace {

DoubleCatReport bijection_onto_corner_pairs(const DoubleCategoryData& d, bool sources) {
  // (s_h, s_v) against pairs with d1(ver) == d2(hor); (t_h, t_v) against
  // pairs with d0(ver) == d1(hor).
  const auto& x = *d.x;
  std::set<std::pair<int, int>> seen;
  for (int w = 0; w < d.squares(); ++w) {
    auto [sh, sv, th, tv] = d.sides[w];
    auto key = sources ? std::pair<int, int>(sh, sv) : std::pair<int, int>(th, tv);
    if (!seen.insert(key).second)
      return {false, std::string(sources ? "(s_h,s_v)" : "(t_h,t_v)") +
                         " hits a pair twice (square " + std::to_string(w) + ")"};
  }
  long compatible = 0;
  int n2 = x.level_size(2);
  std::map<int, long> hor_by_src, hor_by_tgt;
  for (int h = 0; h < n2; ++h) {
    ++hor_by_src[d.hor_src[h]];
    ++hor_by_tgt[d.hor_tgt[h]];
  }
  for (int v = 0; v < n2; ++v) {
    if (sources) {
      auto it = hor_by_src.find(d.ver_src[v]);
      if (it != hor_by_src.end()) compatible += it->second;
    } else {
      auto it = hor_by_tgt.find(d.ver_tgt[v]);
      if (it != hor_by_tgt.end()) compatible += it->second;
    }
  }
  if (compatible != static_cast<long>(seen.size()))
    return {false, std::string(sources ? "(s_h,s_v)" : "(t_h,t_v)") + " misses pairs: " +
                       std::to_string(seen.size()) + " of " + std::to_string(compatible)};
  return {true, ""};
}

}  // namespace

DoubleCatReport check_stable(const DoubleCategoryData& d) {
  auto corners = check_corner_conditions(d);
  if (!corners.ok) return corners;
  auto src = bijection_onto_corner_pairs(d, true);
  if (!src.ok) return src;
  return bijection_onto_corner_pairs(d, false);
}

DoubleCatReport check_pointed(const DoubleCategoryData& d) {
  int n2 = d.morphisms();
  for (int a = 0; a < d.objects(); ++a) {
    long from_base = 0, to_base = 0;
    for (int e = 0; e < n2; ++e) {
      if (d.hor_src[e] == d.basepoint && d.hor_tgt[e] == a) ++from_base;
      if (d.ver_src[e] == a && d.ver_tgt[e] == d.basepoint) ++to_base;
    }
    if (from_base != 1)
      return {false, "basepoint is not initial in Hor at object " + std::to_string(a)};
    if (to_base != 1)
      return {false, "basepoint is not terminal in Ver at object " + std::to_string(a)};
  }
  return {true, ""};
}

DoubleCatReport check_augmented(const DoubleCategoryData& d, const std::vector<int>& aug) {
  std::set<int> a_set(aug.begin(), aug.end());
  int n2 = d.morphisms();
  for (int obj = 0; obj < d.objects(); ++obj) {
    long in = 0, out = 0;
    for (int e = 0; e < n2; ++e) {
      if (a_set.count(d.hor_src[e]) && d.hor_tgt[e] == obj) ++in;
      if (d.ver_src[e] == obj && a_set.count(d.ver_tgt[e])) ++out;
    }
    if (in != 1 || out != 1)
      return {false, "augmentation fails at object " + std::to_string(obj)};
  }
  return {true, ""};
}

DoubleCatReport check_category_laws(const DoubleCategoryData& d) {
  const auto& x = *d.x;
  int n2 = d.morphisms();
  // Composition tables from the filler squares; -1 marks "no composite",
  // -2 "multiple composites" (either breaks the category laws).
  std::map<std::pair<int, int>, int> hor_tab, ver_tab;
  for (int w = 0; w < d.squares(); ++w) {
    auto key_h = std::pair(x.face[3][3][w], x.face[3][1][w]);
    auto key_v = std::pair(x.face[3][2][w], x.face[3][0][w]);
    auto [ih, fresh_h] = hor_tab.emplace(key_h, x.face[3][2][w]);
    if (!fresh_h && ih->second != x.face[3][2][w]) ih->second = -2;
    auto [iv, fresh_v] = ver_tab.emplace(key_v, x.face[3][1][w]);
    if (!fresh_v && iv->second != x.face[3][1][w]) iv->second = -2;
  }
  auto hc = [&](int f, int g) {
    auto it = hor_tab.find({f, g});
    return it == hor_tab.end() ? -1 : it->second;
  };
  auto vc = [&](int u, int v) {
    auto it = ver_tab.find({u, v});
    return it == ver_tab.end() ? -1 : it->second;
  };
  for (int f = 0; f < n2; ++f) {
    if (hc(f, d.hor_id[d.hor_tgt[f]]) != f || hc(d.hor_id[d.hor_src[f]], f) != f)
      return {false, "hor identity laws fail at " + std::to_string(f)};
    if (vc(f, d.ver_id[d.ver_tgt[f]]) != f || vc(d.ver_id[d.ver_src[f]], f) != f)
      return {false, "ver identity laws fail at " + std::to_string(f)};
  }
  std::vector<std::vector<int>> hor_from(d.objects()), ver_from(d.objects());
  for (int e = 0; e < n2; ++e) {
    hor_from[d.hor_src[e]].push_back(e);
    ver_from[d.ver_src[e]].push_back(e);
  }
  for (int f = 0; f < n2; ++f) {
    for (int g : hor_from[d.hor_tgt[f]]) {
      int fg = hc(f, g);
      if (fg < 0) return {false, "hor composite missing or ambiguous"};
      for (int h : hor_from[d.hor_tgt[g]]) {
        int gh = hc(g, h);
        if (gh < 0 || hc(fg, h) != hc(f, gh)) return {false, "hor associativity fails"};
      }
    }
    for (int g : ver_from[d.ver_tgt[f]]) {
      int fg = vc(f, g);
      if (fg < 0) return {false, "ver composite missing or ambiguous"};
      for (int h : ver_from[d.ver_tgt[g]]) {
        int gh = vc(g, h);
        if (gh < 0 || vc(fg, h) != vc(f, gh)) return {false, "ver associativity fails"};
      }
    }
  }
  return {true, ""};
}

DoubleCensus census_double(const DoubleCategoryData& d) {
  DoubleCensus c;
  c.objects = d.objects();
  c.objects_nonidentity_basepoint = d.objects() - 1;
  c.hor = c.ver = d.morphisms();
  std::set<int> ids(d.hor_id.begin(), d.hor_id.end());
  c.hor_nonidentity = d.morphisms() - static_cast<long>(ids.size());
  c.squares = d.squares();
  c.squares_strict = nondegenerate_count(*d.x, 3);
  return c;
}

std::string to_dot(const DoubleCategoryData& d) {
  std::string s = "digraph double_category {\n";
  for (int a = 0; a < d.objects(); ++a)
    s += "  n" + std::to_string(a) + " [label=\"" + d.x->levels[1][a] + "\"];\n";
  for (int e = 0; e < d.morphisms(); ++e) {
    s += "  n" + std::to_string(d.hor_src[e]) + " -> n" + std::to_string(d.hor_tgt[e]) +
         " [id=\"h" + std::to_string(e) + "\", kind=hor, arrowhead=vee];\n";
    s += "  n" + std::to_string(d.ver_src[e]) + " -> n" + std::to_string(d.ver_tgt[e]) +
         " [id=\"v" + std::to_string(e) + "\", kind=ver];\n";
  }
  s += "}\n";
  return s;
}

nlohmann::ordered_json squares_json(const DoubleCategoryData& d) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (int w = 0; w < d.squares(); ++w) {
    auto [sh, sv, th, tv] = d.sides[w];
    j.push_back({{"s_h", "v" + std::to_string(sh)},
                 {"s_v", "h" + std::to_string(sv)},
                 {"t_h", "v" + std::to_string(th)},
                 {"t_v", "h" + std::to_string(tv)}});
  }
  return j;
}

}  // namespace segal
