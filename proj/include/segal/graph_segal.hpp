#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "segal/forest.hpp"
#include "segal/simplicial.hpp"

namespace segal {

using Emask = std::uint64_t;

/// A finite graph with dense vertex ids; parallel edges are separate entries
/// of `edges`, loops are only admitted when `allow_loops` is set.
struct Graph {
  int nv = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u <= v
  std::vector<std::string> labels;
  bool labelled = true;
  bool allow_loops = false;

  Vset all_vertices() const { return nv == 0 ? 0 : (Vset{1} << nv) - 1; }
  Emask edges_within(Vset verts) const;
};

/// Input format: one `u-v` line per edge, isolated vertices on a
/// `vertices: a b c` line; names match [A-Za-z0-9_]+.
Graph parse_graph(std::string_view text, bool labelled, bool allow_loops = false);
Graph underlying_graph(const RootedForest& t);

/// A subgraph of the ambient graph together with an ordered partition of its
/// vertices into n possibly-empty parts (4 bits per vertex in `parts`).
struct PartSub {
  Vset verts = 0;
  Emask emask = 0;
  std::uint64_t parts = 0;
  int n = 0;

  int part_of(int v) const { return static_cast<int>((parts >> (4 * v)) & 0xf); }
  void set_part(int v, int p) {
    parts = (parts & ~(std::uint64_t{0xf} << (4 * v))) |
            (static_cast<std::uint64_t>(p) << (4 * v));
  }
  Vset part_set(int p) const {
    Vset s = 0;
    for (int v = 0; v < 16; ++v)
      if (has_vertex(verts, v) && part_of(v) == p) s |= single(v);
    return s;
  }
};

PartSub psub_face(const Graph& g, const PartSub& p, int i);
PartSub psub_degeneracy(const Graph& g, const PartSub& p, int i);

/// Labelled variant: identity on vertices. Unlabelled: minimal byte string
/// over vertex orderings compatible with the (part, degree) invariant.
std::string psub_code(const Graph& g, const PartSub& p);

struct GraphSegalSet {
  Graph g;
  LevelwiseSimplicialSet x;
  std::vector<std::vector<PartSub>> reps;
};

int graph_default_truncation(const Graph& g);

/// X^G: level 0 a point, level 1 the subgraphs (or their iso classes), level
/// n the partitioned subgraphs; d_0/d_n drop an outer part and restrict to
/// the spanned subgraph, inner faces merge parts, degeneracies insert empty
/// parts.
GraphSegalSet build_xg(const Graph& g, int truncation);

struct GraphCensus {
  std::vector<long> total;
  std::vector<long> nondeg;
  std::vector<long> all_parts_nonempty;  // computed from representatives
  long level1 = 0;
};
GraphCensus graph_census(const GraphSegalSet& s);

}  // namespace segal
