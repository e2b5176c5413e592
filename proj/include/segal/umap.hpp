#pragma once

#include <optional>
#include <string>

#include "segal/graph_segal.hpp"
#include "segal/tree_segal.hpp"

namespace segal {

/// The simplicial map U: X^T -> X^G sending a layered subforest to its
/// underlying subgraph with the partition given by the layers
/// S_i = L_{i-1} \ L_i. The graph side must be built from underlying_graph
/// of the same tree, at the same truncation, with matching variant.
struct UMap {
  const TreeSegalSet* xt = nullptr;
  const GraphSegalSet* xg = nullptr;
  SimplicialMap map;
};

UMap build_u(const TreeSegalSet& xt, const GraphSegalSet& xg);

struct FibreWitness {
  int n = 0;
  std::string base_code;  // element of X^T_1 whose fibres disagree
  long tree_fibre = 0;
  long graph_fibre = 0;
  std::string detail;
};

struct CulfReport {
  bool holds = true;
  std::optional<FibreWitness> witness;
};

/// Reduced CULF criterion: U restricts to bijections between the fibres of
/// s_0 (n = 0) and of d_1^{n-1} (n >= 2) over each element of X^T_1 and its
/// image.
CulfReport check_culf(const UMap& u, int nmax);

struct RelSegalReport {
  bool holds = true;
  std::optional<FibreWitness> witness;  // base_code holds the X^G_n element
};

/// For each 2 <= n <= nmax the square whose verticals are the Segal maps
/// must be a pullback.
RelSegalReport check_relatively_segal(const UMap& u, int nmax);

}  // namespace segal
