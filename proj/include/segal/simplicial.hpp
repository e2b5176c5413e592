#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace segal {

/// A truncated simplicial set with finitely many elements per level. Elements
/// are identified by canonical code strings; each level keeps its codes
/// sorted, and all face/degeneracy tables are index arrays.
struct LevelwiseSimplicialSet {
  int truncation = 0;
  std::vector<std::vector<std::string>> levels;          // levels[n], sorted
  std::vector<std::vector<std::vector<int>>> face;       // face[n][i], n >= 1
  std::vector<std::vector<std::vector<int>>> degen;      // degen[n][i], n < N

  int level_size(int n) const {
    return n >= 0 && n <= truncation ? static_cast<int>(levels[n].size()) : 0;
  }
  int find(int n, const std::string& code) const;  // -1 if absent
  bool reduced() const { return level_size(0) == 1; }
};

struct IdentityViolation {
  std::string rule;  // e.g. "d_i d_j = d_{j-1} d_i"
  int n = 0, i = 0, j = 0, elem = 0;
};
std::vector<IdentityViolation> check_identities(const LevelwiseSimplicialSet& x);

/// Composite of face maps from level n onto the face spanned by the kept
/// vertices (deleting the complement in decreasing index order). `keep` must
/// be a nonempty increasing subset of {0..n}; the result maps level n to
/// level keep.size()-1 by index.
std::vector<int> face_composite(const LevelwiseSimplicialSet& x, int n,
                                const std::vector<int>& keep);

struct SegalReport {
  bool injective = true;
  bool surjective = true;
  long domain = 0;            // |X_n|
  long image = 0;             // distinct edge tuples hit
  long fibre_product = 0;     // all compatible edge tuples
  std::vector<std::vector<int>> image_tuples;  // sorted
  bool image_contains(const std::vector<int>& edges) const;
};
/// The Segal map x -> (edge 01, edge 12, ..., edge n-1,n) for n >= 2.
SegalReport segal_map_report(const LevelwiseSimplicialSet& x, int n);

struct TwoSegalWitness {
  int n = 0, i = 0;
  std::string family;  // "lower-faces" or "upper-faces" or a triangulation tag
  std::string detail;
};
struct TwoSegalReport {
  bool ok = true;
  std::vector<TwoSegalWitness> witnesses;
};

/// The pullback-square criterion: for each 3 <= n <= nmax and 0 < i < n-1 the
/// canonical maps
///   X_n -> X_{i+1}{0..i+1}   x_{X_1{0,i+1}}  X_{n-i}{0,i+1..n}
///   X_n -> X_{i+1}{0..i,n}   x_{X_1{i,n}}    X_{n-i}{i..n}
/// must be bijections.
TwoSegalReport check_2segal_pullbacks(const LevelwiseSimplicialSet& x, int nmax);

/// Triangulations of the (m+1)-gon with vertices 0..m, as sorted triangle
/// triples; their number is the Catalan number C(m-1).
std::vector<std::vector<std::array<int, 3>>> polygon_triangulations(int m);

/// The membrane-space criterion: for each triangulation T of the (n+1)-gon,
/// Hom(Delta[T], X) is computed by gluing 2-simplices along shared edges and
/// the restriction map from X_n must be a bijection. Capped at n <= 6.
TwoSegalReport check_2segal_triangulations(const LevelwiseSimplicialSet& x, int nmax);

std::vector<int> nondegenerate(const LevelwiseSimplicialSet& x, int n);
long nondegenerate_count(const LevelwiseSimplicialSet& x, int n);

/// A levelwise map of truncated simplicial sets.
struct SimplicialMap {
  const LevelwiseSimplicialSet* source = nullptr;
  const LevelwiseSimplicialSet* target = nullptr;
  std::vector<std::vector<int>> comp;  // comp[n][e]

  struct Failure {
    std::string kind;  // "face" or "degeneracy"
    int n = 0, i = 0, elem = 0;
  };
  std::optional<Failure> validate() const;
};

nlohmann::ordered_json to_json(const LevelwiseSimplicialSet& x);
LevelwiseSimplicialSet lss_from_json(const nlohmann::json& j);

/// The terminal simplicial set: every level a single point.
LevelwiseSimplicialSet build_point(int truncation);

/// Nerve of a finite poset given by its reflexive-transitive order relation;
/// level n holds the weakly increasing (n+1)-chains.
LevelwiseSimplicialSet build_poset_nerve(int npoints,
                                         const std::vector<std::pair<int, int>>& le,
                                         int truncation);

}  // namespace segal
