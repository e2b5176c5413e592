#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace segal {

// Vertex sets are bitmasks over dense vertex ids.
using Vset = std::uint32_t;

inline int set_size(Vset s) { return std::popcount(s); }
inline bool has_vertex(Vset s, int v) { return (s >> v) & 1u; }
inline Vset single(int v) { return Vset{1} << v; }

enum class Flavour { labelled, planar, plain };

Flavour flavour_from_string(std::string_view s);
std::string_view flavour_name(Flavour f);

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

/// A finite rooted forest with dense integer vertex ids assigned at parse
/// time. `children` and `roots` keep the written order; that order is the
/// planar structure in the planar flavour and is ignored in the plain one.
struct RootedForest {
  std::vector<int> parent;                 // -1 exactly on roots
  std::vector<std::vector<int>> children;  // written (planar) order
  std::vector<int> roots;                  // ordered list
  std::vector<std::string> labels;         // nonempty iff flavour == labelled
  Flavour flavour = Flavour::plain;

  int size() const { return static_cast<int>(parent.size()); }
  Vset all_vertices() const {
    return size() == 0 ? 0 : (size() == 32 ? ~Vset{0} : (Vset{1} << size()) - 1);
  }
  bool is_tree() const { return roots.size() == 1; }
  int degree(int v) const {
    return static_cast<int>(children[v].size()) + (parent[v] >= 0 ? 1 : 0);
  }
  int root_degree() const { return degree(roots.at(0)); }
  std::vector<int> dfs_order() const;  // roots in order, children in order
  bool is_path_with_leaf_root() const; // every degree <= 2 and root degree <= 1
};

/// Parses the forest grammar
///   FOREST := TREE (";" TREE)* | ""
///   TREE   := NODE [ "(" TREE ("," TREE)* ")" ]
///   NODE   := LABEL | "*"
/// with insignificant whitespace. Labelled flavour requires a label on every
/// node, the unlabelled flavours require "*".
RootedForest parse_forest(std::string_view text, Flavour flavour);
std::string format_forest(const RootedForest& f);

bool is_lower_set(const RootedForest& f, Vset host, Vset s);
std::vector<Vset> lower_sets(const RootedForest& f);
std::vector<Vset> lower_sets_within(const RootedForest& f, Vset host);

/// All differences L_i \ L_j over nested pairs of lower sets, including the
/// empty set and the full vertex set.
std::vector<Vset> admissible_subforests(const RootedForest& f);

/// The subforest spanned by `s`: an edge survives iff both endpoints do.
/// New ids are dense in the host's depth-first order, so components come out
/// ordered by the first occurrence of their root in that traversal.
RootedForest restrict_to(const RootedForest& f, Vset s);

int span_components(const RootedForest& f, Vset s);
bool span_connected(const RootedForest& f, Vset s);

/// An element of X^T_n: an admissible subforest (chain.front()) together with
/// a nested chain of lower sets of it, ending at the empty set.
struct Layering {
  Vset host = 0;
  std::vector<Vset> chain;  // [L0, ..., Ln], chain[0] == host, chain[n] == 0

  int dim() const { return static_cast<int>(chain.size()) - 1; }
  bool strict() const {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (chain[i] == chain[i + 1]) return false;
    return true;
  }
};

/// All dimension-n layerings: for n = 0 the single empty one, for n >= 1 all
/// chains H >= L1 >= ... >= Ln = {} with H admissible and each L_i a lower
/// set of the forest spanned by H.
std::vector<Layering> enumerate_layerings(const RootedForest& t, int n);

/// AHU-style code identifying the isomorphism class of a layered forest in a
/// given flavour: per vertex (layer index, child codes, label if labelled),
/// children and components multiset-sorted in plain flavour and kept in
/// traversal order otherwise. Layer indices start at 1 for the top layer.
std::string canonical_code(const RootedForest& t, const Layering& lay, Flavour flavour);
std::string canonical_code(const RootedForest& t, Vset subforest, Flavour flavour);
std::string canonical_code(const RootedForest& t, Flavour flavour);

/// Witness that a connected subgraph can be reached from the full tree by a
/// sequence of admissible cuts: each consecutive pair of stages keeps one
/// side of a single cut.
struct CutWitness {
  bool ok = false;
  std::vector<Vset> stages;  // stages.front() == V(T), stages.back() == S
};
CutWitness subtree_reachable(const RootedForest& t, Vset s);
bool is_single_cut_step(const RootedForest& t, Vset prev, Vset next);

}  // namespace segal
