#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segal/graph_segal.hpp"
#include "segal/simplicial.hpp"
#include "segal/tree_segal.hpp"

namespace segal {

/// The X_1-coloured (co)operad of a simplicial set: an n-ary operation of
/// profile (c_1,...,c_n | c_0) is a level-n element whose short edges are the
/// inputs c_i and whose long edge is the output c_0. Only inhabited profiles
/// are materialized.
struct ColouredOperadData {
  const LevelwiseSimplicialSet* x = nullptr;
  int max_arity = 0;
  // profile of every element: inputs then output, per level
  std::vector<std::vector<std::vector<int>>> inputs;  // inputs[n][e][i]
  std::vector<std::vector<int>> output;               // output[n][e]
  std::map<std::vector<int>, std::vector<int>> ops;   // key: n, c_1..c_n, c_0
};

ColouredOperadData build_operad(const LevelwiseSimplicialSet& x, int max_arity);

std::vector<int> operations(const ColouredOperadData& o, const std::vector<int>& in,
                            int out);

/// Cocomposition along the shape (n; k_1..k_n): the outer face on the
/// vertices {0, k_1, k_1+k_2, ..., K} and the i-th inner face on the i-th
/// consecutive block.
struct CompositionInstance {
  std::pair<int, int> outer;               // (arity, element)
  std::vector<std::pair<int, int>> inner;  // (arity, element) per slot
  std::pair<int, int> result;              // (total arity, element)
};

CompositionInstance cocompose(const ColouredOperadData& o, int element,
                              const std::vector<int>& shape);

/// The inverse of cocompose: the unique level element whose cocomposition
/// along the shape of the arguments returns them. Throws on colour
/// mismatches; missing or multiple solutions signal a non-2-Segal input.
int compose(const ColouredOperadData& o, std::pair<int, int> outer,
            const std::vector<std::pair<int, int>>& inner);

struct InvertibilityWitness {
  std::vector<int> shape;
  std::string detail;
};
struct InvertibilityReport {
  bool invertible = true;
  std::optional<InvertibilityWitness> witness;
};
/// Every composition map into every profile of arity <= max_arity must be a
/// bijection, and every unary set Q(c|c0) must be the unit singleton.
InvertibilityReport check_invertible(const ColouredOperadData& o);

/// Closed composition formulas, cross-checked against the generic one:
/// interleaved layerings for trees, concatenated partitions for graphs.
int compose_tree_explicit(const TreeSegalSet& s, const ColouredOperadData& o,
                          std::pair<int, int> outer,
                          const std::vector<std::pair<int, int>>& inner);
int compose_graph_explicit(const GraphSegalSet& s, const ColouredOperadData& o,
                           std::pair<int, int> outer,
                           const std::vector<std::pair<int, int>>& inner);

}  // namespace segal
