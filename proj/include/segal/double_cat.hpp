#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "segal/simplicial.hpp"

namespace segal {

/// The double category P(X) of a reduced 2-Segal set: objects are level-1
/// elements, horizontal and vertical morphisms are level-2 elements (sources
/// and targets d2 -> d1 and d1 -> d0 respectively), squares are level-3
/// elements with sides (s_h, s_v, t_h, t_v) = (d3, d1, d2, d0).
struct DoubleCategoryData {
  const LevelwiseSimplicialSet* x = nullptr;
  int basepoint = -1;                      // s0 of the point
  std::vector<int> hor_src, hor_tgt;       // per level-2 element
  std::vector<int> ver_src, ver_tgt;
  std::vector<int> hor_id, ver_id;         // per object: s1, s0
  std::vector<std::array<int, 4>> sides;   // per level-3 element

  int objects() const { return static_cast<int>(hor_id.size()); }
  int morphisms() const { return static_cast<int>(hor_src.size()); }
  int squares() const { return static_cast<int>(sides.size()); }
};

DoubleCategoryData extract_double_category(const LevelwiseSimplicialSet& x);

struct CompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Composition via the unique filling 3-simplex; throws CompositionError on a
/// composability mismatch and on missing or multiple fillers (the latter two
/// signal a non-2-Segal input).
int hor_compose(const DoubleCategoryData& d, int f, int g);
int ver_compose(const DoubleCategoryData& d, int u, int v);

/// Square pasting via the unique filling 4-simplex (requires truncation >= 4).
int hor_paste(const DoubleCategoryData& d, int left, int right);
int ver_paste(const DoubleCategoryData& d, int top, int bottom);

struct DoubleCatReport {
  bool ok = true;
  std::string detail;
};

DoubleCatReport check_corner_conditions(const DoubleCategoryData& d);
DoubleCatReport check_stable(const DoubleCategoryData& d);
DoubleCatReport check_pointed(const DoubleCategoryData& d);
DoubleCatReport check_augmented(const DoubleCategoryData& d, const std::vector<int>& aug);
DoubleCatReport check_category_laws(const DoubleCategoryData& d);

struct DoubleCensus {
  long objects = 0;
  long objects_nonidentity_basepoint = 0;  // objects other than the basepoint
  long hor = 0, ver = 0;                   // all level-2 elements, each once
  long hor_nonidentity = 0;                // excludes s1 images
  long squares = 0;
  long squares_strict = 0;                 // nondegenerate level-3 elements
};
DoubleCensus census_double(const DoubleCategoryData& d);

/// DOT export: objects as nodes, horizontal edges with kind=hor and
/// arrowhead=vee, vertical edges with kind=ver. The square sidecar lists the
/// (s_h, s_v, t_h, t_v) edge ids of every square.
std::string to_dot(const DoubleCategoryData& d);
nlohmann::ordered_json squares_json(const DoubleCategoryData& d);

}  // namespace segal
